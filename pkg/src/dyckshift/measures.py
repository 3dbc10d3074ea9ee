"""Exact cylinder values and entropy for the coin-flip coding measure.

Every quantity here is exact: cylinder values are rationals (usually of the
monomial shape ``2^-a * m^-c``), block entropies are kept as rational
combinations ``p*log(2) + q*log(m)`` and only turned into floats at the
reporting boundary.  Nothing in this module samples anything.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Literal

from .words import (
    BudgetExceeded,
    NotBalanced,
    NotInLanguage,
    Word,
    match_annotate,
    minimal_balanced_extensions,
    reduce_codes,
)


@dataclass(frozen=True)
class MeasureValue:
    """Exact nonnegative rational, with an optional monomial fast path.

    When ``two_exp``/``m_exp`` are present the value is ``2^-two_exp * m^-m_exp``
    exactly; aggregates (sums over many cylinders) drop the monomial form and
    keep only the rational.  Equality and hashing go by value alone.
    """

    value: Fraction
    two_exp: int | None = None
    m_exp: int | None = None

    def __post_init__(self) -> None:
        if self.value < 0:
            raise ValueError("measure values are nonnegative")

    @classmethod
    def monomial(cls, two_exp: int, m_exp: int, m: int) -> "MeasureValue":
        return cls(Fraction(1, 2**two_exp * m**m_exp), two_exp, m_exp)

    @classmethod
    def zero(cls) -> "MeasureValue":
        return cls(Fraction(0))

    @classmethod
    def one(cls) -> "MeasureValue":
        return cls(Fraction(1), 0, 0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MeasureValue):
            return self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __float__(self) -> float:
        return float(self.value)

    def __add__(self, other: "MeasureValue") -> "MeasureValue":
        return MeasureValue(self.value + other.value)

    def text(self) -> str:
        return f"{self.value.numerator}/{self.value.denominator}" if self.value else "0"


def cylinder_value_from_codes(codes: tuple[int, ...], m: int) -> Fraction:
    """Bare-rational cylinder mass straight from letter codes.

    The workhorse behind :func:`tilde_cylinder_value`, exposed separately so
    exhaustive verification loops can skip Word construction.
    """
    nf = reduce_codes(codes)
    if nf.is_zero:
        return Fraction(0)
    loose = nf.size()
    pairs = (len(codes) - loose) // 2
    return Fraction(1, 2 ** len(codes) * m ** (pairs + loose))


def tilde_cylinder_value(w: Word, position: int = 0) -> MeasureValue:
    """Exact mass of the cylinder fixing ``w`` starting at ``position``.

    The value is ``2^-|w| * m^-(pairs + loose)`` for language words and 0
    otherwise (those cylinders are empty, not errors).  ``position`` does not
    enter the formula — the measure is shift invariant — but is accepted so
    call sites can speak in coordinates.
    """
    del position
    nf = reduce_codes(w.codes)
    if nf.is_zero:
        return MeasureValue.zero()
    loose = nf.size()
    pairs = (len(w) - loose) // 2
    return MeasureValue.monomial(len(w), pairs + loose, w.m)


def balanced_cylinder_value(w: Word) -> MeasureValue:
    """The balanced-word law ``(1/(2*sqrt(m)))^|w|``, exact.

    Only balanced words are accepted; their length is even, so the square
    root never materializes and the value is the rational
    ``2^-|w| * m^-(|w|/2)``.
    """
    if not reduce_codes(w.codes).is_identity:
        raise NotBalanced(f"{w.text()!r} does not reduce to the empty word")
    return MeasureValue.monomial(len(w), len(w) // 2, w.m)


def extension_additivity(w: Word) -> tuple[MeasureValue, MeasureValue]:
    """Cylinder mass of ``w`` versus the sum over its one-letter extensions.

    Returns ``(lhs, rhs)`` for the caller to assert equal; both are exact.
    Extensions that fall out of the language contribute zero to the sum.
    """
    nf = reduce_codes(w.codes)
    if nf.is_zero:
        raise NotInLanguage(f"{w.text()!r} reduces to zero")
    lhs = tilde_cylinder_value(w)
    total = Fraction(0)
    for code in range(1, w.m + 1):
        total += tilde_cylinder_value(Word(w.m, w.codes + (code,))).value
        total += tilde_cylinder_value(Word(w.m, w.codes + (-code,))).value
    return lhs, MeasureValue(total)


def catalan_convolution(parts: int, pairs: int) -> int:
    """Number of ``parts``-tuples of balanced nesting shapes totaling ``pairs`` pairs.

    Closed form ``parts/(2*pairs+parts) * C(2*pairs+parts, pairs)`` (a ballot
    number); the tests cross-check it against an explicit convolution of
    Catalan numbers.
    """
    if parts < 0 or pairs < 0:
        raise ValueError("arguments must be nonnegative")
    if parts == 0:
        return 1 if pairs == 0 else 0
    top = 2 * pairs + parts
    return parts * math.comb(top, pairs) // top


@dataclass(frozen=True)
class ExtensionMassRow:
    """One length class of minimal balanced completions of a word.

    ``count`` completions of total length ``total_len`` each carry the same
    balanced-law mass; ``partial`` accumulates and ``residual`` is the exact
    distance still missing from the target cylinder value.
    """

    total_len: int
    count: int
    added: Fraction
    partial: Fraction
    residual: Fraction


def minimal_extension_mass(
    a: Word,
    max_len: int,
    method: Literal["count", "enumerate"] = "count",
) -> list[ExtensionMassRow]:
    """Partial sums of balanced-law mass over minimal completions of ``a``.

    The ``count`` method prices each length class with the ballot-number
    count of filler shapes (fast, scales to lengths in the thousands); the
    ``enumerate`` method walks the actual completions and evaluates each
    completed word (slow, used to validate the count method).  Rows appear
    only for lengths that contribute, so partial sums strictly increase.
    """
    ann = match_annotate(a)  # raises NotInLanguage for zero words
    loose = ann.n_unmatched
    target = tilde_cylinder_value(a).value
    base = len(a) + loose
    rows: list[ExtensionMassRow] = []
    partial = Fraction(0)

    def push(total_len: int, count: int) -> None:
        nonlocal partial
        if count == 0:
            return
        added = count * Fraction(1, 2**total_len * a.m ** (total_len // 2))
        partial += added
        rows.append(ExtensionMassRow(total_len, count, added, partial, target - partial))

    if method == "count":
        for total in range(base, max_len + 1, 2):
            fill = (total - base) // 2
            push(total, catalan_convolution(loose, fill) * a.m**fill)
    elif method == "enumerate":
        by_len: dict[int, int] = {}
        for left, right in minimal_balanced_extensions(a, max_len):
            whole = left + a + right
            # Each completion carries the balanced law for its length; the
            # call also hard-verifies that the completion really balances.
            value = balanced_cylinder_value(whole).value
            assert value == Fraction(1, 2 ** len(whole) * a.m ** (len(whole) // 2))
            by_len[len(whole)] = by_len.get(len(whole), 0) + 1
        for total in sorted(by_len):
            push(total, by_len[total])
    else:
        raise ValueError(f"unknown method {method!r}")
    return rows


def mass_length_for_residual(a: Word, ratio: Fraction) -> int:
    """Smallest completion length whose residual drops below ``ratio`` of the target.

    Uses the count method, doubling the horizon until the exact residual
    divided by the cylinder value is at most ``ratio``.
    """
    if ratio <= 0:
        raise ValueError("ratio must be positive")
    target = tilde_cylinder_value(a).value
    if target == 0:
        raise NotInLanguage(f"{a.text()!r} reduces to zero")
    horizon = max(len(a) + 2, 8)
    while True:
        rows = minimal_extension_mass(a, horizon, method="count")
        if rows and rows[-1].residual <= ratio * target:
            for row in rows:
                if row.residual <= ratio * target:
                    return row.total_len
        if horizon > 1 << 20:  # pragma: no cover - safety valve
            raise BudgetExceeded(f"no convergence below {ratio} by length {horizon}")
        horizon *= 2


@dataclass(frozen=True)
class LogPair:
    """Exact value ``log2_coeff * log(2) + logm_coeff * log(m)``."""

    log2_coeff: Fraction
    logm_coeff: Fraction

    def __add__(self, other: "LogPair") -> "LogPair":
        return LogPair(self.log2_coeff + other.log2_coeff, self.logm_coeff + other.logm_coeff)

    def __sub__(self, other: "LogPair") -> "LogPair":
        return LogPair(self.log2_coeff - other.log2_coeff, self.logm_coeff - other.logm_coeff)

    def nats(self, m: int) -> float:
        return float(self.log2_coeff) * math.log(2) + float(self.logm_coeff) * math.log(m)

    def json_dict(self) -> dict[str, str]:
        return {"log2": str(self.log2_coeff), "logm": str(self.logm_coeff)}


_MAX_ENTROPY_LEN = 20


@lru_cache(maxsize=None)
def _pattern_stats(length: int) -> tuple[int, int]:
    """Aggregate over all opener/closer patterns of the given length.

    Returns ``(total matched pairs, number of patterns every one of whose
    suffixes has at least as many openers as closers)``.  Patterns are the
    type-forgetting skeletons of words; both aggregates are what the exact
    entropy formulas consume.
    """
    total_pairs = 0
    suffix_nonneg = 0
    for bits in range(1 << length):
        depth = 0
        pairs = 0
        for pos in range(length):
            if (bits >> pos) & 1:
                depth += 1
            elif depth:
                depth -= 1
                pairs += 1
        total_pairs += pairs
        running = 0
        for pos in range(length):
            running += 1 if (bits >> pos) & 1 else -1
            if running < 0:
                break
        else:
            suffix_nonneg += 1
        # NB: scanning bit positions 0..length-1 walks the *reversed* word,
        # which is exactly the suffix direction the nonnegativity condition
        # wants; the pair total is reversal-blind because reversal permutes
        # the pattern set.
    return total_pairs, suffix_nonneg


def _q_coefficient(length: int) -> Fraction:
    """Exact ``log(m)`` coefficient of the block entropy at this length."""
    total_pairs, _ = _pattern_stats(length)
    return length - Fraction(total_pairs, 2**length)


def block_entropy(n: int, m: int) -> LogPair:
    """Exact entropy of the length-``n`` block distribution, in the two-log form.

    A length-``n`` pattern is hit with probability ``2^-n`` regardless of
    ``m`` (the type choices integrate out), so the ``log(m)`` coefficient is
    a pure pattern statistic and the ``log(2)`` coefficient is ``n``.
    """
    if n < 0:
        raise ValueError("block length must be >= 0")
    if n > _MAX_ENTROPY_LEN:
        raise BudgetExceeded(
            f"block entropy enumerates 2^{n} patterns; limit is n={_MAX_ENTROPY_LEN}"
        )
    del m  # the exact coefficients do not depend on it
    return LogPair(Fraction(n), _q_coefficient(n))


@dataclass(frozen=True)
class EntropyReport:
    """Exact block and step entropy at one length, plus the branch weight.

    ``step`` is the conditional entropy of the next letter given an
    ``n``-letter past; ``p_nonneg`` is the exact probability that this past,
    read outward from the origin, never runs a closer surplus — the event
    that makes the next letter uniform over all ``2m`` letters.
    """

    n: int
    m: int
    block: LogPair
    step: LogPair
    p_nonneg: Fraction

    def decomposition_step(self) -> LogPair:
        """The step entropy predicted by the two-branch mixture, exactly."""
        return LogPair(Fraction(1), (1 + self.p_nonneg) / 2)

    def json_dict(self) -> dict:
        return {
            "n": self.n,
            "H_n": self.block.json_dict(),
            "h_n": self.step.json_dict(),
            "p_nonneg": str(self.p_nonneg),
            "h_n_nats": self.step.nats(self.m),
        }


def entropy_report(n: int, m: int = 2) -> EntropyReport:
    """Exact entropy data at block length ``n`` (needs patterns of length n+1)."""
    here = block_entropy(n, m)
    there = block_entropy(n + 1, m)
    _, nonneg = _pattern_stats(n)
    return EntropyReport(
        n=n,
        m=m,
        block=here,
        step=there - here,
        p_nonneg=Fraction(nonneg, 2**n),
    )


def entropy_table(n_max: int, m: int = 2) -> Iterator[EntropyReport]:
    for n in range(1, n_max + 1):
        yield entropy_report(n, m)
