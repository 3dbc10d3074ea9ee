import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dyckshift.measures import (
    EntropyReport,
    LogPair,
    MeasureValue,
    balanced_cylinder_value,
    block_entropy,
    catalan_convolution,
    cylinder_value_from_codes,
    entropy_report,
    entropy_table,
    extension_additivity,
    mass_length_for_residual,
    minimal_extension_mass,
    tilde_cylinder_value,
)
from dyckshift.words import (
    BudgetExceeded,
    NotBalanced,
    NotInLanguage,
    Word,
    enumerate_balanced,
    iter_language_stats,
)

from conftest import language_words


# ----------------------------------------------------------- cylinder values


@pytest.mark.parametrize(
    "text,m,expected",
    [
        ("", 2, Fraction(1)),
        ("a1", 2, Fraction(1, 4)),
        ("b2", 2, Fraction(1, 4)),
        ("a1 b1", 2, Fraction(1, 8)),
        ("a1 b2", 2, Fraction(0)),
        ("b2 a1 a1", 2, Fraction(1, 64)),
        ("b1 a1", 2, Fraction(1, 16)),
        ("a1 b1", 3, Fraction(1, 12)),
        ("a3 b3 a1", 3, Fraction(1, 8 * 9)),
    ],
)
def test_cylinder_value_examples(text, m, expected):
    assert tilde_cylinder_value(Word.parse(text, m)) == expected


def test_cylinder_value_ignores_position():
    w = Word.parse("b1 a2", 2)
    assert tilde_cylinder_value(w, 0) == tilde_cylinder_value(w, -7)


def test_monomial_exponents_exposed():
    v = tilde_cylinder_value(Word.parse("a1 a2 b2", 2))
    assert (v.two_exp, v.m_exp) == (3, 2)  # one matched pair, one loose opener
    assert v.value == Fraction(1, 32)


def test_measure_value_semantics():
    third = MeasureValue(Fraction(1, 3))
    assert third == Fraction(1, 3)
    assert MeasureValue.one() == 1
    assert (third + third).value == Fraction(2, 3)
    assert MeasureValue.zero().text() == "0"
    assert MeasureValue(Fraction(3, 8)).text() == "3/8"
    assert float(MeasureValue.monomial(3, 1, 2)) == 1 / 16
    with pytest.raises(ValueError):
        MeasureValue(Fraction(-1, 2))


@given(language_words(m=2, max_len=12))
def test_one_letter_additivity(w):
    """Extending by one letter splits a cylinder's mass exactly."""
    lhs, rhs = extension_additivity(w)
    assert lhs == rhs


@given(language_words(m=3, max_len=9))
def test_one_letter_additivity_three_types(w):
    lhs, rhs = extension_additivity(w)
    assert lhs == rhs


def test_additivity_exhaustive_short_words():
    for n in range(6):
        for codes, _, _ in iter_language_stats(n, 2):
            lhs, rhs = extension_additivity(Word(2, codes))
            assert lhs == rhs


def test_additivity_rejects_zero_words():
    with pytest.raises(NotInLanguage):
        extension_additivity(Word.parse("a1 b2", 2))


@pytest.mark.parametrize("m,n_max", [(2, 8), (3, 6)])
def test_language_masses_sum_to_one(m, n_max):
    for n in range(n_max + 1):
        total = sum(
            (cylinder_value_from_codes(codes, m) for codes, _, _ in iter_language_stats(n, m)),
            Fraction(0),
        )
        assert total == 1, f"level n={n} sums to {total}"


def test_bit_pattern_marginal_is_fair_coin():
    """Summing word masses within one opener/closer skeleton gives 2^-n.

    This is the marginal that makes the whole construction tick: the type
    choices integrate out exactly, for any number of types.
    """
    for m in (2, 3):
        for n in range(7):
            per_pattern: dict[tuple[bool, ...], Fraction] = {}
            for codes, _, _ in iter_language_stats(n, m):
                pattern = tuple(c > 0 for c in codes)
                per_pattern[pattern] = (
                    per_pattern.get(pattern, Fraction(0)) + cylinder_value_from_codes(codes, m)
                )
            assert len(per_pattern) == 2**n
            assert all(mass == Fraction(1, 2**n) for mass in per_pattern.values())


# ----------------------------------------------------------- balanced law


@pytest.mark.parametrize("m", [2, 3])
def test_balanced_law_agrees_with_general_formula(m):
    for pairs in range(5):
        for w in enumerate_balanced(pairs, m):
            assert balanced_cylinder_value(w) == tilde_cylinder_value(w)


def test_balanced_law_rejects_unbalanced():
    with pytest.raises(NotBalanced):
        balanced_cylinder_value(Word.parse("a1", 2))
    with pytest.raises(NotBalanced):
        balanced_cylinder_value(Word.parse("a1 b2", 2))


def test_balanced_law_closed_form():
    # (1/(2*sqrt(2)))^4 = 1/64
    assert balanced_cylinder_value(Word.parse("a1 a2 b2 b1", 2)) == Fraction(1, 64)


# ------------------------------------------------------ completion masses


def _catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def conv_oracle(parts: int, pairs: int) -> int:
    """Explicit Catalan convolution, the slow way."""
    if parts == 0:
        return 1 if pairs == 0 else 0
    ways = [_catalan(k) for k in range(pairs + 1)]
    for _ in range(parts - 1):
        ways = [
            sum(ways[j] * _catalan(k - j) for j in range(k + 1)) for k in range(pairs + 1)
        ]
    return ways[pairs]


@pytest.mark.parametrize("parts", range(7))
@pytest.mark.parametrize("pairs", range(9))
def test_catalan_convolution_closed_form(parts, pairs):
    assert catalan_convolution(parts, pairs) == conv_oracle(parts, pairs)


def test_catalan_convolution_validates():
    with pytest.raises(ValueError):
        catalan_convolution(-1, 0)


A1_MASS_ROWS = [
    # (total_len, count, added, partial, residual) for the word a1
    (2, 1, "1/8", "1/8", "1/8"),
    (4, 2, "1/32", "5/32", "3/32"),
    (6, 8, "1/64", "11/64", "5/64"),
    (8, 40, "5/512", "93/512", "35/512"),
    (10, 224, "7/1024", "193/1024", "63/1024"),
]

A1A2_MASS_ROWS = [
    (4, 1, "1/64", "1/64", "3/64"),
    (6, 4, "1/128", "3/128", "5/128"),
    (8, 20, "5/1024", "29/1024", "35/1024"),
    (10, 112, "7/2048", "65/2048", "63/2048"),
    (12, 672, "21/8192", "281/8192", "231/8192"),
]


@pytest.mark.parametrize(
    "text,cap,expected",
    [("a1", 10, A1_MASS_ROWS), ("a1 a2", 12, A1A2_MASS_ROWS)],
)
def test_completion_mass_tables(text, cap, expected):
    rows = minimal_extension_mass(Word.parse(text, 2), cap)
    got = [
        (r.total_len, r.count, str(r.added), str(r.partial), str(r.residual)) for r in rows
    ]
    assert got == expected


def test_completion_mass_of_balanced_word_closes_immediately():
    rows = minimal_extension_mass(Word.parse("a1 b1", 2), 8)
    assert len(rows) == 1
    assert rows[0].partial == Fraction(1, 8)
    assert rows[0].residual == 0


def test_mirrored_words_share_mass_tables():
    a = minimal_extension_mass(Word.parse("a1", 2), 12)
    b = minimal_extension_mass(Word.parse("b1", 2), 12)
    assert [(r.total_len, r.count, r.added) for r in a] == [
        (r.total_len, r.count, r.added) for r in b
    ]


@pytest.mark.parametrize("text", ["a1", "b1", "a1 a2", "a1 b1", "b1 a2", "b2 a1 a1"])
def test_mass_accounting_routes_agree(text):
    """Priced length classes equal a literal walk over the completions."""
    w = Word.parse(text, 2)
    cap = len(w) + 10
    counted = minimal_extension_mass(w, cap, method="count")
    walked = minimal_extension_mass(w, cap, method="enumerate")
    assert counted == walked


def test_mass_rows_conserve_and_increase():
    w = Word.parse("a1 a2", 2)
    target = tilde_cylinder_value(w).value
    rows = minimal_extension_mass(w, 16)
    previous = Fraction(-1)
    for row in rows:
        assert row.partial + row.residual == target
        assert row.partial > previous
        previous = row.partial


@pytest.mark.parametrize(
    "text,ratio,expected",
    [
        ("a1", Fraction(1, 2), 2),
        ("a1", Fraction(1, 4), 10),
        ("a1", Fraction(1, 20), 256),
        ("b1", Fraction(1, 20), 256),
        ("a1 a2", Fraction(1, 20), 1020),
    ],
)
def test_residual_horizons(text, ratio, expected):
    assert mass_length_for_residual(Word.parse(text, 2), ratio) == expected


def test_residual_horizon_rejects_zero_words():
    with pytest.raises(NotInLanguage):
        mass_length_for_residual(Word.parse("a1 b2", 2), Fraction(1, 20))


# ----------------------------------------------------------------- entropy


def test_block_entropy_small_values():
    assert block_entropy(0, 2) == LogPair(Fraction(0), Fraction(0))
    assert block_entropy(1, 2) == LogPair(Fraction(1), Fraction(1))  # log 2m
    assert block_entropy(2, 2) == LogPair(Fraction(2), Fraction(7, 4))


def test_block_entropy_is_m_independent():
    for n in range(11):
        assert block_entropy(n, 2) == block_entropy(n, 3)


def test_block_entropy_budget():
    with pytest.raises(BudgetExceeded):
        block_entropy(21, 2)
    with pytest.raises(ValueError):
        block_entropy(-1, 2)


P_NONNEG = [
    Fraction(1),
    Fraction(1, 2), Fraction(1, 2),
    Fraction(3, 8), Fraction(3, 8),
    Fraction(5, 16), Fraction(5, 16),
    Fraction(35, 128), Fraction(35, 128),
    Fraction(63, 256), Fraction(63, 256),
    Fraction(231, 1024),
]


@pytest.mark.parametrize("n", range(12))
def test_branch_weight_equals_central_binomial(n):
    """p_nonneg(n) = C(n, floor(n/2)) / 2^n — the closed-form oracle."""
    rep = entropy_report(n, 2)
    assert rep.p_nonneg == P_NONNEG[n]
    assert rep.p_nonneg == Fraction(math.comb(n, n // 2), 2**n)


def test_branch_weight_ties_in_pairs_not_strictly_decreasing():
    # p(2k-1) == p(2k): the sequence is nonincreasing but never injective
    assert P_NONNEG[1] == P_NONNEG[2]
    assert P_NONNEG[9] == P_NONNEG[10]
    assert all(P_NONNEG[i] >= P_NONNEG[i + 1] for i in range(11))


@pytest.mark.parametrize("n", range(14))
def test_step_entropy_equals_branch_mixture_exactly(n):
    rep = entropy_report(n, 2)
    assert rep.step == rep.decomposition_step()


def test_step_entropy_value_at_eleven():
    rep = entropy_report(11, 2)
    assert rep.step == LogPair(Fraction(1), Fraction(1255, 2048))
    # with m = 2 both logs coincide: h_11 = (3303/2048) log 2
    assert rep.step.log2_coeff + rep.step.logm_coeff == Fraction(3303, 2048)
    assert rep.step.nats(2) == pytest.approx(1.117903, abs=1e-6)


def test_step_entropy_nonincreasing():
    values = [entropy_report(n, 2).step.nats(2) for n in range(13)]
    assert all(a >= b - 1e-12 for a, b in zip(values, values[1:]))


def test_entropy_table_shape():
    rows = list(entropy_table(5, 2))
    assert [r.n for r in rows] == [1, 2, 3, 4, 5]
    assert all(isinstance(r, EntropyReport) for r in rows)


def test_entropy_json_fields():
    payload = entropy_report(3, 2).json_dict()
    assert payload["n"] == 3
    assert payload["H_n"] == {"log2": "3", "logm": "5/2"}
    assert payload["h_n"] == {"log2": "1", "logm": "11/16"}
    assert payload["p_nonneg"] == "3/8"
    assert payload["h_n_nats"] == pytest.approx((1 + Fraction(11, 16)) * math.log(2))


def test_log_pair_arithmetic():
    a = LogPair(Fraction(1), Fraction(1, 2))
    b = LogPair(Fraction(2), Fraction(1, 4))
    assert a + b == LogPair(Fraction(3), Fraction(3, 4))
    assert b - a == LogPair(Fraction(1), Fraction(-1, 4))
    assert (a + b).nats(2) == pytest.approx(3.75 * math.log(2))
