import random

import pytest
from hypothesis import given, strategies as st

from dyckshift.words import (
    IDENTITY,
    ZERO,
    AlphabetParams,
    NormalForm,
    NotInLanguage,
    ParseError,
    Symbol,
    Word,
    are_equivalent,
    count_balanced,
    count_language,
    enumerate_balanced,
    enumerate_language,
    height_profile,
    is_balanced,
    is_in_language,
    iter_language_stats,
    lex_key,
    match_annotate,
    min_prefix_height,
    minimal_balanced_extensions,
    parse_codes,
    reduce_codes,
    reduce_word,
)

from conftest import balanced_words, equivalent_word_pairs, language_words, raw_words, rewrite_oracle


# ---------------------------------------------------------------- parsing


def test_parse_round_trip():
    w = Word.parse("a1 b2  a3", 3)
    assert w.codes == (1, -2, 3)
    assert w.text() == "a1 b2 a3"


def test_parse_empty_is_empty_word():
    assert len(Word.parse("", 2)) == 0
    assert len(Word.parse("   ", 2)) == 0


@pytest.mark.parametrize("bad", ["a0", "c1", "a", "1", "a-1", "a01", "b12x"])
def test_parse_rejects_malformed_tokens(bad):
    with pytest.raises(ParseError):
        parse_codes(bad, 3)


def test_parse_rejects_type_out_of_range():
    with pytest.raises(ParseError):
        Word.parse("a3", 2)


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as exc:
        Word.parse("a1 b0", 2)
    assert exc.value.position == 3


def test_symbol_codes():
    s = Symbol.from_code(-2)
    assert (s.kind, s.index, s.code, s.text()) == ("b", 2, -2, "b2")
    assert Symbol.from_code(1).text() == "a1"


def test_alphabet_params_gate_single_type():
    with pytest.raises(ValueError):
        AlphabetParams(1)
    assert AlphabetParams(1, allow_single_type=True).m == 1
    with pytest.raises(ValueError):
        AlphabetParams(0, allow_single_type=True)


# ---------------------------------------------------------------- reduction


REDUCE_CASES = [
    ("", 2, "Λ"),
    ("a1 b1", 2, "Λ"),
    ("a1 b2", 2, "0"),
    ("b2 a1 a1", 2, "b2 a1 a1"),
    ("a1 a2 b2 b1 b1", 2, "b1"),
    ("b1 b1 a2 b2 a1", 2, "b1 b1 a1"),
    ("a3 b3 a2 a1 b1", 3, "a2"),
    ("a1 a1 b1 b1 a2 b2", 2, "Λ"),
]


@pytest.mark.parametrize("text,m,expected", REDUCE_CASES)
def test_reduce_examples(text, m, expected):
    assert reduce_word(Word.parse(text, m)).text() == expected


def test_zero_is_absorbing_in_concatenation():
    dead = Word.parse("a1 b2", 2)
    assert reduce_word(dead + Word.parse("a1", 2)).is_zero
    assert reduce_word(Word.parse("b1", 2) + dead).is_zero


@given(raw_words(m=2), st.integers(0, 2**32))
def test_reduce_agrees_with_random_order_rewriting(w, seed):
    """The one-pass stack reducer matches a rewrite-to-fixpoint oracle.

    The oracle cancels adjacent matched pairs in random order (annihilating
    on the first mismatched adjacency), so agreement across random orders is
    exactly confluence.
    """
    assert reduce_codes(w.codes) == rewrite_oracle(w.codes, random.Random(seed))


@given(raw_words(m=3, max_len=8), st.integers(0, 2**32))
def test_reduce_oracle_agreement_three_types(w, seed):
    assert reduce_codes(w.codes) == rewrite_oracle(w.codes, random.Random(seed))


@given(raw_words(m=2, max_len=8), raw_words(m=2, max_len=8))
def test_reduction_is_a_monoid_homomorphism(u, v):
    """reduce(uv) factors through the residues of u and v."""
    assert reduce_codes(u.codes + v.codes) == reduce_codes(u.codes).combine(
        reduce_codes(v.codes)
    )


@given(raw_words(m=2, max_len=6), raw_words(m=2, max_len=6), raw_words(m=2, max_len=6))
def test_combine_is_associative(u, v, w):
    a, b, c = (reduce_codes(x.codes) for x in (u, v, w))
    assert a.combine(b).combine(c) == a.combine(b.combine(c))


def test_combine_identity_and_zero():
    nf = reduce_codes((1, -1, 2))
    assert IDENTITY.combine(nf) == nf == nf.combine(IDENTITY)
    assert ZERO.combine(nf).is_zero and nf.combine(ZERO).is_zero


@given(raw_words(m=2))
def test_mirror_conjugates_the_residue(w):
    mirrored = reduce_codes(w.mirror().codes)
    nf = reduce_codes(w.codes)
    if nf.is_zero:
        assert mirrored.is_zero
    else:
        assert mirrored.closers == tuple(reversed(nf.openers))
        assert mirrored.openers == tuple(reversed(nf.closers))


def test_normal_form_word_round_trip():
    nf = NormalForm(False, (2, 1), (1,))
    assert nf.to_word(2).text() == "b2 b1 a1"
    assert reduce_word(nf.to_word(2)) == nf
    with pytest.raises(NotInLanguage):
        ZERO.to_word(2)


def test_are_equivalent_rejects_zero_words():
    with pytest.raises(NotInLanguage):
        are_equivalent(Word.parse("a1 b2", 2), Word.parse("a1", 2))


@given(equivalent_word_pairs(m=2))
def test_generated_equivalent_pairs_are_equivalent(pair):
    w, w2 = pair
    assert len(w) == len(w2)
    assert are_equivalent(w, w2)


# ---------------------------------------------------------------- heights


def test_height_profile_runs_from_zero():
    w = Word.parse("a1 a2 b2 b1 b2", 2)
    assert height_profile(w) == (0, 1, 2, 1, 0, -1)
    assert min_prefix_height(w) == -1


@given(language_words(m=2))
def test_loose_closer_count_is_minus_min_height(w):
    nf = reduce_codes(w.codes)
    assert len(nf.closers) == -min_prefix_height(w)


# ---------------------------------------------------------------- matching


def test_match_annotate_example():
    ann = match_annotate(Word.parse("b1 a1 a2 b2 a1", 2))
    assert ann.matched_pairs == ((2, 3),)  # b2 closes the innermost opener
    assert ann.unmatched_closers == (0,)
    assert ann.unmatched_openers == (1, 4)


def test_match_annotate_rejects_zero():
    with pytest.raises(NotInLanguage):
        match_annotate(Word.parse("a1 b2", 2))


@given(language_words(m=3, max_len=14))
def test_matched_pairs_nest_and_agree_in_type(w):
    ann = match_annotate(w)
    nf = reduce_codes(w.codes)
    assert 2 * ann.n_matched_pairs + nf.size() == len(w)
    for i, j in ann.matched_pairs:
        assert w[i] == -w[j] and i < j
    # properly nested: matched intervals never cross
    for (i, j) in ann.matched_pairs:
        for (k, l) in ann.matched_pairs:
            if i < k < j:
                assert l < j


# ---------------------------------------------------------------- counting


LANGUAGE_COUNTS_M2 = [1, 4, 14, 48, 160, 528, 1720, 5568, 17888, 57216, 182080,
                      577536, 1825152, 5753088, 18083712]
LANGUAGE_COUNTS_M3 = [1, 6, 30, 144, 666, 3024, 13500, 59616, 260658]


def pattern_sum(n: int, m: int) -> int:
    """Independent oracle: types integrate out to m^(pairs+loose) per skeleton."""
    total = 0
    for bits in range(1 << n):
        depth = pairs = 0
        for pos in range(n):
            if (bits >> pos) & 1:
                depth += 1
            elif depth:
                depth -= 1
                pairs += 1
        total += m ** (pairs + (n - 2 * pairs))
    return total


@pytest.mark.parametrize("n", range(15))
def test_language_counts_two_types(n):
    assert count_language(n, 2) == LANGUAGE_COUNTS_M2[n] == pattern_sum(n, 2)


@pytest.mark.parametrize("n", range(9))
def test_language_counts_three_types(n):
    assert count_language(n, 3) == LANGUAGE_COUNTS_M3[n] == pattern_sum(n, 3)


@pytest.mark.parametrize("n,m", [(n, 2) for n in range(9)] + [(n, 3) for n in range(6)])
def test_enumeration_matches_count(n, m):
    assert sum(1 for _ in enumerate_language(n, m)) == count_language(n, m)


def test_enumeration_is_lexicographic_and_clean():
    words = list(enumerate_language(3, 2))
    keys = [lex_key(w) for w in words]
    assert keys == sorted(keys)
    assert len(set(w.codes for w in words)) == len(words)
    assert words[0].text() == "a1 a1 a1"
    assert words[-1].text() == "b2 b2 b2"
    assert all(is_in_language(w) for w in words)


def test_iter_language_stats_matches_reducer():
    for codes, pairs, loose in iter_language_stats(7, 2):
        nf = reduce_codes(codes)
        assert not nf.is_zero
        assert nf.size() == loose
        assert 2 * pairs + loose == 7


BALANCED_COUNTS_M2 = [1, 2, 8, 40, 224, 1344, 8448]


@pytest.mark.parametrize("pairs", range(7))
def test_balanced_counts(pairs):
    assert count_balanced(pairs, 2) == BALANCED_COUNTS_M2[pairs]


@pytest.mark.parametrize("pairs,m", [(p, 2) for p in range(6)] + [(p, 3) for p in range(5)])
def test_balanced_enumeration_matches_formula(pairs, m):
    listed = list(enumerate_balanced(pairs, m))
    assert len(listed) == count_balanced(pairs, m)
    assert all(is_balanced(w) for w in listed)
    assert len(set(w.codes for w in listed)) == len(listed)


@given(balanced_words(m=3))
def test_generated_balanced_words_balance(w):
    assert is_balanced(w)
    assert len(w) % 2 == 0


# ------------------------------------------------- minimal completions


def completions(text: str, m: int, max_len: int):
    return list(minimal_balanced_extensions(Word.parse(text, m), max_len))


def test_completions_of_single_opener():
    got = [(l.text(), r.text()) for l, r in completions("a1", 2, 4)]
    assert got == [("", "b1"), ("", "a1 b1 b1"), ("", "a2 b2 b1")]


def test_completions_of_mixed_residue():
    got = [(l.text(), r.text()) for l, r in completions("b1 a2", 2, 6)]
    assert got == [
        ("a1", "b2"),
        ("a1", "a1 b1 b2"),
        ("a1", "a2 b2 b2"),
        ("a1 a1 b1", "b2"),
        ("a1 a2 b2", "b2"),
    ]


def test_completions_of_balanced_word_are_just_the_empty_pair():
    # any non-empty completion of an already balanced word embeds the empty
    # one, so minimality leaves exactly one pair
    got = completions("a1 b1", 2, 8)
    assert [(l.text(), r.text()) for l, r in got] == [("", "")]


def test_completion_length_cap_validated():
    with pytest.raises(ValueError):
        completions("a1 a2", 2, 1)


@given(language_words(m=2, max_len=6), st.integers(0, 3))
def test_completions_balance_and_are_minimal(w, extra):
    """Every emitted pair balances the word, and no pair embeds another.

    Minimality: a smaller completion sitting inside a bigger one (left part a
    suffix, right part a prefix) would mean the bigger pair wraps an already
    balanced word — exactly what the construction must never emit.
    """
    pairs = list(minimal_balanced_extensions(w, len(w) + 2 * extra))
    seen = set()
    for left, right in pairs:
        assert is_balanced(left + w + right)
        assert (left.codes, right.codes) not in seen
        seen.add((left.codes, right.codes))
    for l1, r1 in pairs:
        for l2, r2 in pairs:
            if (l1.codes, r1.codes) == (l2.codes, r2.codes):
                continue
            embeds = (
                len(l1) <= len(l2)
                and (len(l1) == 0 or l2.codes[-len(l1) :] == l1.codes)
                and r2.codes[: len(r1)] == r1.codes
            )
            assert not embeds


def test_completions_group_sorted_by_length_then_lex():
    pairs = completions("a1", 2, 8)
    lengths = [len(l) + len(r) for l, r in pairs]
    assert lengths == sorted(lengths)


# ---------------------------------------------------------------- word API


def test_word_concat_requires_same_alphabet():
    with pytest.raises(ValueError):
        Word.parse("a1", 2) + Word.parse("a1", 3)


def test_word_slicing_and_indexing():
    w = Word.parse("a1 b1 a2", 2)
    assert w[0] == 1 and w[-1] == 2
    assert w[1:].text() == "b1 a2"


def test_mirror_is_an_involution():
    w = Word.parse("b2 a1 a1", 2)
    assert w.mirror().text() == "b1 b1 a2"
    assert w.mirror().mirror() == w
