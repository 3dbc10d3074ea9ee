"""Bracket words over ``m`` matched pair types and their monoid reduction.

The alphabet has ``m`` opener letters ``a1 .. am`` and ``m`` closer letters
``b1 .. bm``.  Two rewrite rules generate everything in this module: an
adjacent pair ``ai bi`` of equal type cancels, and an adjacent pair ``ai bj``
of unequal types annihilates the whole word (the absorbing zero).  A word is
*in the language* when it does not annihilate; it is *balanced* when it
cancels away completely.

Words are immutable; letters are stored as signed integer codes (``+i`` for
``a<i>``, ``-i`` for ``b<i>``), which keeps the hot loops — reduction,
enumeration, matching — on plain ints.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterator, Sequence


class DyckError(Exception):
    """Base class for every error this package raises on purpose."""


class ParseError(DyckError, ValueError):
    """Malformed word text.  ``position`` is the character offset, if known."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at character {position})"
        super().__init__(message)
        self.position = position


class NotInLanguage(DyckError):
    """The word reduces to zero, so the requested operation is undefined."""


class NotBalanced(DyckError):
    """The word does not reduce to the empty word."""


class BudgetExceeded(DyckError):
    """An enumeration was asked to exceed its configured size budget."""


@dataclass(frozen=True)
class AlphabetParams:
    """Run-time alphabet configuration.

    ``m`` counts the bracket types.  ``m = 1`` degenerates to the full shift
    on two letters (every word is in the language, nothing ever annihilates),
    which defeats the point of most computations here, so it is refused
    unless ``allow_single_type`` is set explicitly.
    """

    m: int
    allow_single_type: bool = False

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"need at least one bracket type, got m={self.m}")
        if self.m == 1 and not self.allow_single_type:
            raise ValueError(
                "m=1 is the degenerate full-shift case; "
                "pass allow_single_type=True if you really want it"
            )


_TOKEN_RE = re.compile(r"([ab])([1-9][0-9]*)\Z")


@dataclass(frozen=True, order=True)
class Symbol:
    """A single letter: ``kind`` is ``"a"`` (opener) or ``"b"`` (closer)."""

    kind: str
    index: int

    def __post_init__(self) -> None:
        if self.kind not in ("a", "b"):
            raise ValueError(f"symbol kind must be 'a' or 'b', got {self.kind!r}")
        if self.index < 1:
            raise ValueError(f"symbol index must be >= 1, got {self.index}")

    @classmethod
    def from_code(cls, code: int) -> "Symbol":
        if code == 0:
            raise ValueError("code 0 does not denote a letter")
        return cls("a", code) if code > 0 else cls("b", -code)

    @property
    def code(self) -> int:
        """Signed type code: ``+index`` for openers, ``-index`` for closers."""
        return self.index if self.kind == "a" else -self.index

    def text(self) -> str:
        return f"{self.kind}{self.index}"

    def __str__(self) -> str:  # pragma: no cover - convenience
        return self.text()


def parse_codes(text: str, m: int) -> tuple[int, ...]:
    """Parse word text (``"a1 b2"`` style) into a tuple of signed codes."""
    codes: list[int] = []
    for match in re.finditer(r"\S+", text):
        token = match.group(0)
        parsed = _TOKEN_RE.match(token)
        if parsed is None:
            raise ParseError(f"bad token {token!r}", match.start())
        index = int(parsed.group(2))
        if index > m:
            raise ParseError(f"type index {index} exceeds m={m}", match.start())
        codes.append(index if parsed.group(1) == "a" else -index)
    return tuple(codes)


@dataclass(frozen=True)
class Word:
    """An immutable finite word over the 2m-letter bracket alphabet."""

    m: int
    codes: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"need m >= 1, got {self.m}")
        for c in self.codes:
            if c == 0 or abs(c) > self.m:
                raise ValueError(f"letter code {c} out of range for m={self.m}")

    @classmethod
    def parse(cls, text: str, m: int) -> "Word":
        return cls(m, parse_codes(text, m))

    @classmethod
    def from_symbols(cls, symbols: Sequence[Symbol], m: int) -> "Word":
        return cls(m, tuple(s.code for s in symbols))

    @property
    def symbols(self) -> tuple[Symbol, ...]:
        return tuple(Symbol.from_code(c) for c in self.codes)

    def text(self) -> str:
        return " ".join(code_text(c) for c in self.codes)

    def mirror(self) -> "Word":
        """Reverse the word and swap opener/closer roles (types kept).

        This is the order-reversing symmetry of the bracket monoid: it maps
        the language onto itself and balanced words onto balanced words.
        """
        return Word(self.m, tuple(-c for c in reversed(self.codes)))

    def __len__(self) -> int:
        return len(self.codes)

    def __add__(self, other: "Word") -> "Word":
        if self.m != other.m:
            raise ValueError(f"cannot concatenate words with m={self.m} and m={other.m}")
        return Word(self.m, self.codes + other.codes)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.m, self.codes[item])
        return self.codes[item]

    def __str__(self) -> str:  # pragma: no cover - convenience
        return self.text() or "(empty)"


def code_text(code: int) -> str:
    return f"a{code}" if code > 0 else f"b{-code}"


def lex_key(w: Word) -> tuple[tuple[int, int], ...]:
    """Sort key realizing the declared letter order a1 < .. < am < b1 < .. < bm."""
    return tuple((0, c) if c > 0 else (1, -c) for c in w.codes)


@dataclass(frozen=True)
class NormalForm:
    """The irreducible residue of a word: zero, or closers then openers.

    ``closers``/``openers`` hold type indices.  A nonzero normal form never
    contains an adjacent opener-closer pair, so it reads as ``b.. b.. a.. a..``.
    The empty nonzero form is the monoid identity and prints as ``Λ``.
    """

    is_zero: bool
    closers: tuple[int, ...] = ()
    openers: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.is_zero and (self.closers or self.openers):
            raise ValueError("the zero element carries no letters")

    @property
    def is_identity(self) -> bool:
        return not self.is_zero and not self.closers and not self.openers

    def size(self) -> int:
        """Letter count of the residue (0 for zero and for the identity)."""
        return len(self.closers) + len(self.openers)

    def to_word(self, m: int) -> Word:
        if self.is_zero:
            raise NotInLanguage("zero has no representing word")
        codes = tuple(-i for i in self.closers) + self.openers
        return Word(m, codes)

    def combine(self, other: "NormalForm") -> "NormalForm":
        """Monoid product of two normal forms, renormalized.

        Cancellation only ever happens where ``self``'s opener run meets
        ``other``'s closer run; a type mismatch there annihilates everything.
        """
        if self.is_zero or other.is_zero:
            return ZERO
        a, b = self.openers, other.closers
        k = 0
        limit = min(len(a), len(b))
        while k < limit and a[len(a) - 1 - k] == b[k]:
            k += 1
        if k < limit:
            return ZERO
        return NormalForm(
            False,
            self.closers + b[k:],
            a[: len(a) - k] + other.openers,
        )

    def text(self) -> str:
        if self.is_zero:
            return "0"
        if self.is_identity:
            return "Λ"
        parts = [f"b{i}" for i in self.closers] + [f"a{i}" for i in self.openers]
        return " ".join(parts)

    def __str__(self) -> str:  # pragma: no cover - convenience
        return self.text()


ZERO = NormalForm(True)
IDENTITY = NormalForm(False)


def reduce_codes(codes: Sequence[int]) -> NormalForm:
    """Stack reduction of raw signed codes; the workhorse behind reduce_word."""
    closers: list[int] = []
    stack: list[int] = []
    for c in codes:
        if c > 0:
            stack.append(c)
        elif stack:
            if stack[-1] != -c:
                return ZERO
            stack.pop()
        else:
            closers.append(-c)
    return NormalForm(False, tuple(closers), tuple(stack))


def reduce_word(w: Word) -> NormalForm:
    """Reduce ``w`` to its unique irreducible monoid residue.

    One left-to-right pass suffices: the rewrite system is confluent, so the
    scan order cannot change the outcome (the tests check this against an
    order-free rewriting oracle).
    """
    return reduce_codes(w.codes)


def is_in_language(w: Word) -> bool:
    return not reduce_codes(w.codes).is_zero


def is_balanced(w: Word) -> bool:
    return reduce_codes(w.codes).is_identity


def are_equivalent(w: Word, other: Word) -> bool:
    """Whether two language words are equal as monoid elements."""
    nf = reduce_word(w)
    if nf.is_zero:
        raise NotInLanguage(f"{w.text()!r} reduces to zero")
    nf_other = reduce_word(other)
    if nf_other.is_zero:
        raise NotInLanguage(f"{other.text()!r} reduces to zero")
    return nf == nf_other


def height_profile(w: Word) -> tuple[int, ...]:
    """Running opener-minus-closer count over prefixes; starts at 0."""
    out = [0]
    h = 0
    for c in w.codes:
        h += 1 if c > 0 else -1
        out.append(h)
    return tuple(out)


def height(w: Word) -> int:
    return sum(1 if c > 0 else -1 for c in w.codes)


def min_prefix_height(w: Word) -> int:
    """Minimum of the height profile.  Never positive: the empty prefix is 0."""
    return min(height_profile(w))


@dataclass(frozen=True)
class MatchAnnotation:
    """Stack-matching structure of a language word.

    ``matched_pairs`` are (opener position, closer position) pairs, sorted by
    opener position.  Unmatched closer positions always precede unmatched
    opener positions — the residue reads closers-then-openers.
    """

    matched_pairs: tuple[tuple[int, int], ...]
    unmatched_openers: tuple[int, ...]
    unmatched_closers: tuple[int, ...]

    @property
    def n_matched_pairs(self) -> int:
        return len(self.matched_pairs)

    @property
    def n_unmatched(self) -> int:
        return len(self.unmatched_openers) + len(self.unmatched_closers)


def match_annotate(w: Word) -> MatchAnnotation:
    """Pair every closer with the most recent open opener of the same type.

    Raises NotInLanguage when a closer meets an open opener of a different
    type — exactly the annihilation case, so no separate membership check is
    needed.
    """
    stack: list[int] = []
    pairs: list[tuple[int, int]] = []
    loose_closers: list[int] = []
    for pos, c in enumerate(w.codes):
        if c > 0:
            stack.append(pos)
        elif stack:
            opener_pos = stack[-1]
            if w.codes[opener_pos] != -c:
                raise NotInLanguage(
                    f"{w.text()!r}: closer at {pos} annihilates opener at {opener_pos}"
                )
            stack.pop()
            pairs.append((opener_pos, pos))
        else:
            loose_closers.append(pos)
    pairs.sort()
    return MatchAnnotation(tuple(pairs), tuple(stack), tuple(loose_closers))


def iter_language_stats(n: int, m: int) -> Iterator[tuple[tuple[int, ...], int, int]]:
    """Depth-first walk of the length-``n`` language in lexicographic order.

    Yields ``(codes, pairs, loose)`` where ``pairs`` counts matched opener
    positions and ``loose`` counts unmatched letters.  Dead prefixes are
    pruned exactly: a prefix only dies by annihilation, which the open-type
    stack detects locally, and zero is absorbing.
    """
    if n < 0:
        raise ValueError("word length must be >= 0")
    word: list[int] = []
    stack: list[int] = []

    def walk(depth: int, pairs: int) -> Iterator[tuple[tuple[int, ...], int, int]]:
        if depth == n:
            yield tuple(word), pairs, n - 2 * pairs
            return
        for i in range(1, m + 1):
            word.append(i)
            stack.append(i)
            yield from walk(depth + 1, pairs)
            stack.pop()
            word.pop()
        if stack:
            top = stack.pop()
            word.append(-top)
            yield from walk(depth + 1, pairs + 1)
            word.pop()
            stack.append(top)
        else:
            for j in range(1, m + 1):
                word.append(-j)
                yield from walk(depth + 1, pairs)
                word.pop()

    return walk(0, 0)


def enumerate_language(n: int, m: int) -> Iterator[Word]:
    """All language words of length ``n``, lexicographic (a1 < .. < am < b1 < .. < bm)."""
    for codes, _, _ in iter_language_stats(n, m):
        yield Word(m, codes)


def count_language(n: int, m: int) -> int:
    """|L(n)| by dynamic programming over the open-opener stack depth.

    From depth ``d`` a word can open any of ``m`` types (depth ``d+1``), close
    the unique matching type when ``d > 0`` (depth ``d-1``), or emit any of
    ``m`` unmatched closers when ``d = 0`` (the closer joins the left residue
    and never constrains the future).
    """
    if n < 0:
        raise ValueError("word length must be >= 0")
    counts = [1] + [0] * n
    for _ in range(n):
        nxt = [0] * (n + 1)
        for d, v in enumerate(counts):
            if not v:
                continue
            if d + 1 <= n:
                nxt[d + 1] += v * m
            if d > 0:
                nxt[d - 1] += v
            else:
                nxt[0] += v * m
        counts = nxt
    return sum(counts)


def count_balanced(pair_count: int, m: int) -> int:
    """Number of balanced words with ``pair_count`` matched pairs.

    Catalan(pair_count) nesting shapes, one free type per pair.
    """
    if pair_count < 0:
        raise ValueError("pair count must be >= 0")
    catalan = math.comb(2 * pair_count, pair_count) // (pair_count + 1)
    return catalan * m**pair_count


def enumerate_balanced(pair_count: int, m: int) -> Iterator[Word]:
    """All balanced words of length ``2 * pair_count``, lexicographic."""
    if pair_count < 0:
        raise ValueError("pair count must be >= 0")
    n = 2 * pair_count
    word: list[int] = []
    stack: list[int] = []

    def walk(depth: int) -> Iterator[Word]:
        if depth == n:
            yield Word(m, tuple(word))
            return
        remaining = n - depth
        if remaining >= len(stack) + 2:
            for i in range(1, m + 1):
                word.append(i)
                stack.append(i)
                yield from walk(depth + 1)
                stack.pop()
                word.pop()
        if stack:
            top = stack.pop()
            word.append(-top)
            yield from walk(depth + 1)
            word.pop()
            stack.append(top)

    return walk(0)


def minimal_balanced_extensions(
    a: Word, max_len: int
) -> Iterator[tuple[Word, Word]]:
    """All minimal two-sided completions of ``a`` to a balanced word.

    A completion is a pair ``(l, r)`` with ``l·a·r`` balanced such that no
    proper suffix of ``l`` together with a prefix of ``r`` already balances
    ``a``.  Structurally: ``l`` supplies one opener per unmatched closer of
    ``a`` (in reverse order of appearance, so they nest), ``r`` supplies one
    closer per unmatched opener likewise, and arbitrary balanced filler may
    sit after each supplied opener and before each supplied closer.

    Yields groups of increasing total length ``|l·a·r| <= max_len``; within a
    length group the order is lexicographic in ``(l, r)``.
    """
    if max_len < len(a):
        raise ValueError(f"max_len={max_len} is shorter than the word ({len(a)})")
    ann = match_annotate(a)
    left_needs = [-a.codes[p] for p in ann.unmatched_closers]
    right_needs = [a.codes[p] for p in ann.unmatched_openers]
    slots = len(left_needs) + len(right_needs)
    base = len(a) + slots

    def assemble(fillers: tuple[Word, ...]) -> tuple[Word, Word]:
        left: list[int] = []
        for pos, t in enumerate(reversed(left_needs)):
            left.append(t)
            left.extend(fillers[pos].codes)
        right: list[int] = []
        for pos, t in enumerate(reversed(right_needs)):
            right.extend(fillers[len(left_needs) + pos].codes)
            right.append(-t)
        return Word(a.m, tuple(left)), Word(a.m, tuple(right))

    for total in range(base, max_len + 1, 2):
        budget = (total - base) // 2
        if slots == 0:
            if budget == 0:
                yield Word(a.m, ()), Word(a.m, ())
            continue
        group: list[tuple[Word, Word]] = []
        for split in _compositions(budget, slots):
            parts = [list(enumerate_balanced(q, a.m)) for q in split]
            for fillers in itertools.product(*parts):
                group.append(assemble(fillers))
        group.sort(key=lambda pair: (lex_key(pair[0]), lex_key(pair[1])))
        yield from group


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered splits of ``total`` into ``parts`` nonnegative integers."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)
