"""Windowed points of the bracket subshift, the bit/type coding map, and samplers.

Bi-infinite points are handled through finite coordinate windows ``[lo, hi]``
containing the origin, plus on-demand leftward extension where matching needs
it.  Three seeded samplers emit such windows:

* ``sample_tilde`` — fair coin bits choose opener/closer, a shared i.i.d.
  uniform type sequence (addressed through the signed running bit count)
  types every bracket, closers copying the type of the opener they match.
* ``sample_plus`` — i.i.d. uniform letters over the m+1-letter collapsed
  alphabet (typed openers, one anonymous closer), closers re-typed from the
  opener they match.
* ``sample_minus`` — the order-reversing mirror of ``sample_plus``.

Matching may reach left of any finite window.  Samplers extend the hidden
sequence leftward up to ``max_extension`` extra letters; windows that still
have unresolved closers are emitted with their provenance flagged truncated
(estimators exclude them and report the rate).  Unresolved letters keep
their opener/closer kind but an unknown type, rendered ``a?``/``b?``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .words import DyckError, NotInLanguage, Word, code_text, reduce_codes


class NeedMoreLeft(DyckError):
    """Matching ran off the left edge of the available window."""


class NeedMoreRight(DyckError):
    """Matching ran off the right edge of the available window."""


class IndexCoverageGap(DyckError):
    """The type sequence does not cover a slot the coding map touched."""


@dataclass(frozen=True)
class Provenance:
    """Which sampler produced a window, from which seed stream, and whether
    the leftward extension cap was hit before every letter resolved."""

    sampler: str
    seed: int
    index: int
    truncated: bool = False


@dataclass(frozen=True)
class PointWindow:
    """Letters of one point on the coordinate window ``[lo, hi]`` (0 inside).

    Codes are signed types as in :class:`~dyckshift.words.Word`; additionally
    ``±(m+1)`` marks a letter of known kind but unresolved type, which only
    truncated samples may contain.  A fully resolved window is checked to be
    a language word on construction — and a window word is in the language
    exactly when all its sub-blocks are, since annihilation is absorbing.
    """

    m: int
    lo: int
    hi: int
    codes: tuple[int, ...]
    provenance: Provenance | None = None

    def __post_init__(self) -> None:
        if not self.lo <= 0 <= self.hi:
            raise ValueError(f"window [{self.lo}, {self.hi}] must contain the origin")
        if len(self.codes) != self.hi - self.lo + 1:
            raise ValueError("window length does not match its bounds")
        unknown = False
        for c in self.codes:
            if 1 <= abs(c) <= self.m:
                continue
            if abs(c) == self.m + 1:
                unknown = True
                continue
            raise ValueError(f"letter code {c} out of range for m={self.m}")
        if unknown and not self.truncated:
            raise ValueError("only truncated samples may carry unresolved letters")
        if not unknown and reduce_codes(self.codes).is_zero:
            raise NotInLanguage("window letters annihilate; not a point of the subshift")

    @property
    def truncated(self) -> bool:
        return self.provenance is not None and self.provenance.truncated

    def code_at(self, i: int) -> int:
        if not self.lo <= i <= self.hi:
            raise ValueError(f"coordinate {i} outside window [{self.lo}, {self.hi}]")
        return self.codes[i - self.lo]

    def word(self) -> Word:
        """The whole window as a Word; refuses windows with unresolved letters."""
        if any(abs(c) > self.m for c in self.codes):
            raise DyckError("truncated window has unresolved letters")
        return Word(self.m, self.codes)

    def block(self, lo: int, hi: int) -> Word:
        """Sub-block ``[lo, hi]`` as a Word (bounds and resolution checked)."""
        if not (self.lo <= lo and hi <= self.hi and lo <= hi):
            raise ValueError(f"block [{lo}, {hi}] outside window [{self.lo}, {self.hi}]")
        codes = self.codes[lo - self.lo : hi - self.lo + 1]
        if any(abs(c) > self.m for c in codes):
            raise DyckError("block contains unresolved letters")
        return Word(self.m, codes)

    def carries(self, w: Word, k: int) -> bool:
        """Whether the window shows word ``w`` starting at coordinate ``k``."""
        if k < self.lo or k + len(w) - 1 > self.hi:
            raise ValueError(
                f"cylinder [{k}, {k + len(w) - 1}] outside window [{self.lo}, {self.hi}]"
            )
        return self.codes[k - self.lo : k - self.lo + len(w)] == w.codes

    def mirror(self) -> "PointWindow":
        """Reverse coordinates about the origin and swap opener/closer kinds."""
        return PointWindow(self.m, -self.hi, -self.lo, tuple(-c for c in reversed(self.codes)))

    def text(self) -> str:
        return " ".join(
            ("a?" if c > 0 else "b?") if abs(c) == self.m + 1 else code_text(c)
            for c in self.codes
        )


@dataclass(frozen=True)
class BinaryWindow:
    """A window of opener/closer indicator bits (1 = opener)."""

    lo: int
    hi: int
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError("empty bit window")
        if len(self.bits) != self.hi - self.lo + 1:
            raise ValueError("bit window length does not match its bounds")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("bits must be 0 or 1")

    def bit(self, i: int) -> int:
        if not self.lo <= i <= self.hi:
            raise ValueError(f"coordinate {i} outside window [{self.lo}, {self.hi}]")
        return self.bits[i - self.lo]


@dataclass(frozen=True)
class IndexWindow:
    """A window of the shared type sequence: values in ``[1, m]`` per slot."""

    m: int
    lo: int
    hi: int
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.indices) != self.hi - self.lo + 1:
            raise ValueError("index window length does not match its bounds")
        if any(not 1 <= v <= self.m for v in self.indices):
            raise ValueError(f"type indices must lie in [1, {self.m}]")

    def get(self, slot: int) -> int:
        if not self.lo <= slot <= self.hi:
            raise IndexCoverageGap(
                f"type sequence covers [{self.lo}, {self.hi}] but slot {slot} was needed"
            )
        return self.indices[slot - self.lo]


_COLLAPSED_VARIANTS = ("plus", "minus")


@dataclass(frozen=True)
class CollapsedWindow:
    """A window over a collapsed alphabet.

    Variant ``plus`` keeps opener types and merges all closers into ``b``;
    variant ``minus`` keeps closer types and merges all openers into ``a``.
    """

    m: int
    lo: int
    hi: int
    letters: tuple[str, ...]
    variant: str

    def __post_init__(self) -> None:
        if self.variant not in _COLLAPSED_VARIANTS:
            raise ValueError(f"variant must be one of {_COLLAPSED_VARIANTS}")
        if not self.lo <= 0 <= self.hi:
            raise ValueError(f"window [{self.lo}, {self.hi}] must contain the origin")
        if len(self.letters) != self.hi - self.lo + 1:
            raise ValueError("window length does not match its bounds")
        allowed = self.alphabet(self.m, self.variant)
        for letter in self.letters:
            if letter not in allowed:
                raise ValueError(f"letter {letter!r} not in the {self.variant} alphabet")

    @staticmethod
    def alphabet(m: int, variant: str) -> frozenset[str]:
        if variant == "plus":
            return frozenset({f"a{i}" for i in range(1, m + 1)} | {"b"})
        return frozenset({f"b{i}" for i in range(1, m + 1)} | {"a"})

    def text(self) -> str:
        return " ".join(self.letters)


def _anchored_walk(steps: Sequence[int], lo: int) -> tuple[int, ...]:
    """Cumulative walk over ``[lo, lo + len(steps)]`` pinned to 0 at the origin."""
    profile = [0]
    acc = 0
    for s in steps:
        acc += s
        profile.append(acc)
    anchor = -lo
    if not 0 <= anchor < len(profile):
        raise ValueError("the anchored walk needs the origin inside its range")
    origin = profile[anchor]
    return tuple(v - origin for v in profile)


def height_cocycle(x: PointWindow) -> tuple[int, ...]:
    """Bracket-depth walk ``H_i`` for ``i`` in ``[lo, hi+1]``, with ``H_0 = 0``.

    Forward of the origin each opener adds one and each closer removes one;
    behind the origin the signs flip, which is the same single anchored walk
    read from the other side.  Unresolved letters still carry their kind, so
    truncated windows have well-defined heights.
    """
    return _anchored_walk([1 if c > 0 else -1 for c in x.codes], x.lo)


def bit_height_cocycle(z: BinaryWindow) -> tuple[int, ...]:
    """The same anchored walk for a bit window (1 steps up, 0 steps down)."""
    return _anchored_walk([1 if b else -1 for b in z.bits], z.lo)


def slot_index(z: BinaryWindow, k: int) -> int:
    """Signed running bit count addressing the type sequence at step ``k``.

    Counts set bits over ``[0, k]`` for ``k >= 0`` and minus the count over
    ``[k, -1]`` for ``k < 0``.  Openers therefore consume pairwise distinct
    slots (never slot 0), and a closer looks up its opener's slot.
    """
    if k >= 0:
        if z.lo > 0 or z.hi < k:
            raise ValueError(f"slot {k} needs bits on [0, {k}], window is [{z.lo}, {z.hi}]")
        return sum(z.bits[-z.lo : k - z.lo + 1])
    if z.lo > k or z.hi < -1:
        raise ValueError(f"slot {k} needs bits on [{k}, -1], window is [{z.lo}, {z.hi}]")
    return -sum(z.bits[k - z.lo : -1 - z.lo + 1])


def match_left(z: BinaryWindow, n: int) -> int:
    """Coordinate of the opener bit that a closer bit at ``n`` matches.

    Literally the largest ``l < n`` whose walk height does not exceed the
    height just after ``n``; raises NeedMoreLeft when no in-window ``l``
    qualifies.  (The condition is a height difference, so no origin anchor
    is needed.)
    """
    if not z.lo <= n <= z.hi:
        raise ValueError(f"coordinate {n} outside window [{z.lo}, {z.hi}]")
    profile = [0]
    acc = 0
    for b in z.bits:
        acc += 1 if b else -1
        profile.append(acc)
    target = profile[n - z.lo + 1]
    for l in range(n - 1, z.lo - 1, -1):
        if profile[l - z.lo] <= target:
            return l
    raise NeedMoreLeft(f"no match for coordinate {n} inside [{z.lo}, {z.hi}]")


def apply_coding(
    z: BinaryWindow, types: IndexWindow, out_lo: int, out_hi: int
) -> PointWindow:
    """Realize the bit window as bracket letters using the shared type sequence.

    An opener at ``n`` takes the type stored at its slot; a closer copies the
    type at its matching opener's slot.  NeedMoreLeft propagates when a match
    lies left of ``z``; IndexCoverageGap propagates when ``types`` misses a
    touched slot.  The output window is a valid point window by construction
    (matched pairs share their type).
    """
    if out_lo < z.lo or out_hi > z.hi:
        raise ValueError("output range must lie inside the bit window")
    codes = []
    for n in range(out_lo, out_hi + 1):
        if z.bit(n):
            codes.append(types.get(slot_index(z, n)))
        else:
            opener = match_left(z, n)
            codes.append(-types.get(slot_index(z, opener)))
    return PointWindow(types.m, out_lo, out_hi, tuple(codes))


def project_bits(x: PointWindow) -> BinaryWindow:
    """Forget types: 1 per opener, 0 per closer (unresolved letters keep kind)."""
    return BinaryWindow(x.lo, x.hi, tuple(1 if c > 0 else 0 for c in x.codes))


def collapse_plus(x: PointWindow) -> CollapsedWindow:
    """Merge all closers into the anonymous ``b``; openers keep their type."""
    letters = []
    for c in x.codes:
        if c < 0:
            letters.append("b")
        elif c <= x.m:
            letters.append(f"a{c}")
        else:
            raise ValueError("cannot collapse a window with unresolved openers")
    return CollapsedWindow(x.m, x.lo, x.hi, tuple(letters), "plus")


def collapse_minus(x: PointWindow) -> CollapsedWindow:
    """Merge all openers into the anonymous ``a``; closers keep their type."""
    letters = []
    for c in x.codes:
        if c > 0:
            letters.append("a")
        elif -c <= x.m:
            letters.append(f"b{-c}")
        else:
            raise ValueError("cannot collapse a window with unresolved closers")
    return CollapsedWindow(x.m, x.lo, x.hi, tuple(letters), "minus")


def invert_collapse_plus(window: CollapsedWindow) -> PointWindow:
    """Re-type the anonymous closers of a ``plus`` window.

    Each ``b`` matches the nearest opener to its left that is still open at
    its own depth — the latest coordinate where the collapsed walk revisits
    the closer's height — and copies that opener's type.  A ``b`` whose match
    lies left of the window raises NeedMoreLeft.
    """
    if window.variant != "plus":
        raise ValueError("expected a plus-collapsed window")
    codes: list[int] = []
    stack: list[int] = []
    for letter in window.letters:
        if letter == "b":
            if not stack:
                raise NeedMoreLeft("a closer's opener lies left of the window")
            codes.append(-stack.pop())
        else:
            t = int(letter[1:])
            stack.append(t)
            codes.append(t)
    return PointWindow(window.m, window.lo, window.hi, tuple(codes))


def invert_collapse_minus(window: CollapsedWindow) -> PointWindow:
    """Mirror image of :func:`invert_collapse_plus` (matches run rightward)."""
    if window.variant != "minus":
        raise ValueError("expected a minus-collapsed window")
    codes: list[int] = []
    stack: list[int] = []
    for letter in reversed(window.letters):
        if letter == "a":
            if not stack:
                raise NeedMoreRight("an opener's closer lies right of the window")
            codes.append(stack.pop())
        else:
            t = int(letter[1:])
            stack.append(t)
            codes.append(-t)
    codes.reverse()
    return PointWindow(window.m, window.lo, window.hi, tuple(codes))


class _BitStream:
    """Buffered fair bits from one RNG; keeps the hot sampling loops cheap."""

    __slots__ = ("_rng", "_buf", "_left")

    def __init__(self, rng: random.Random):
        self._rng = rng
        self._buf = 0
        self._left = 0

    def take(self) -> int:
        if not self._left:
            self._buf = self._rng.getrandbits(32)
            self._left = 32
        bit = self._buf & 1
        self._buf >>= 1
        self._left -= 1
        return bit


def _sample_rng(seed: int, index: int) -> random.Random:
    # One independent, platform-stable stream per sample: string seeding
    # hashes via sha512, so sample i of seed s never depends on how many
    # samples ran before it or on which worker drew it.
    return random.Random(f"{seed}:{index}")


def _check_window(lo: int, hi: int) -> None:
    if not lo <= 0 <= hi:
        raise ValueError(f"sampling window [{lo}, {hi}] must contain the origin")


def _tilde_window(
    m: int, lo: int, hi: int, rng: random.Random, max_extension: int, seed: int, index: int
) -> PointWindow:
    width = hi - lo + 1
    stream = _BitStream(rng)
    bits = [stream.take() for _ in range(width)]
    ones = [0] * (width + 1)
    for i, b in enumerate(bits):
        ones[i + 1] = ones[i] + b
    zero_off = -lo

    slots: dict[int, int] = {}

    def slot_type(slot: int) -> int:
        v = slots.get(slot)
        if v is None:
            v = rng.randrange(m) + 1
            slots[slot] = v
        return v

    codes = [0] * width
    stack: list[int] = []  # slots of openers still open, innermost last
    pending: list[int] = []  # offsets of closers whose opener is left of the window
    for off, b in enumerate(bits):
        if b:
            p = off + lo
            slot = ones[off + 1] - ones[zero_off] if p >= 0 else -(ones[zero_off] - ones[off])
            codes[off] = slot_type(slot)
            stack.append(slot)
        elif stack:
            codes[off] = -slot_type(stack.pop())
        else:
            pending.append(off)

    truncated = False
    if pending:
        # Walk leftward bit by bit.  The needs stack starts with the earliest
        # pending closer on top: a fresh opener always matches the closest
        # unmatched closer to its right, and every fresh closer becomes the
        # new closest need.  Out-of-window needs are anonymous (-1): they
        # consume an opener but emit nothing.
        needs = list(reversed(pending))
        ones_seen = ones[zero_off]
        walked = 0
        while needs and walked < max_extension:
            walked += 1
            if stream.take():
                ones_seen += 1
                off = needs.pop()
                if off >= 0:
                    codes[off] = -slot_type(-ones_seen)
            else:
                needs.append(-1)
        if needs:
            truncated = True
            unknown = -(m + 1)
            for off in pending:
                if codes[off] == 0:
                    codes[off] = unknown
    return PointWindow(m, lo, hi, tuple(codes), Provenance("tilde", seed, index, truncated))


def _plus_window(
    m: int, lo: int, hi: int, rng: random.Random, max_extension: int, seed: int, index: int
) -> PointWindow:
    width = hi - lo + 1
    letters = [rng.randrange(m + 1) for _ in range(width)]  # 0 = anonymous closer
    codes = [0] * width
    stack: list[int] = []
    pending: list[int] = []
    for off, v in enumerate(letters):
        if v:
            codes[off] = v
            stack.append(v)
        elif stack:
            codes[off] = -stack.pop()
        else:
            pending.append(off)
    truncated = False
    if pending:
        needs = list(reversed(pending))
        walked = 0
        while needs and walked < max_extension:
            walked += 1
            v = rng.randrange(m + 1)
            if v:
                off = needs.pop()
                if off >= 0:
                    codes[off] = -v
            else:
                needs.append(-1)
        if needs:
            truncated = True
            unknown = -(m + 1)
            for off in pending:
                if codes[off] == 0:
                    codes[off] = unknown
    return PointWindow(m, lo, hi, tuple(codes), Provenance("plus", seed, index, truncated))


def sample_tilde(
    m: int, lo: int, hi: int, *, seed: int, count: int, max_extension: int = 10_000
) -> Iterator[PointWindow]:
    """Seeded stream of windows distributed as the coding measure.

    Fair bits pick kinds; types come from one shared i.i.d. uniform sequence
    addressed by the signed running bit count, so matched pairs agree by
    construction.  Closer lookback has a heavy tail — samples whose matching
    is still open after ``max_extension`` leftward letters come out flagged.
    """
    _check_window(lo, hi)
    for index in range(count):
        yield _tilde_window(m, lo, hi, _sample_rng(seed, index), max_extension, seed, index)


def sample_plus(
    m: int, lo: int, hi: int, *, seed: int, count: int, max_extension: int = 10_000
) -> Iterator[PointWindow]:
    """Seeded stream of windows from the typed-opener product construction.

    Letters are i.i.d. uniform over the m+1 collapsed letters, so openers
    outnumber closers and the leftward matching walk has positive drift —
    truncation is essentially a non-event at the default cap.
    """
    _check_window(lo, hi)
    for index in range(count):
        yield _plus_window(m, lo, hi, _sample_rng(seed, index), max_extension, seed, index)


def sample_minus(
    m: int, lo: int, hi: int, *, seed: int, count: int, max_extension: int = 10_000
) -> Iterator[PointWindow]:
    """Mirror twin of :func:`sample_plus`: typed closers, anonymous openers.

    Implemented by sampling the plus construction on the mirrored window and
    reflecting each result, which swaps kinds and reverses coordinates; a
    letterwise swap alone would not stay inside the language.
    """
    _check_window(lo, hi)
    for index in range(count):
        source = _plus_window(m, -hi, -lo, _sample_rng(seed, index), max_extension, seed, index)
        mirrored = tuple(-c for c in reversed(source.codes))
        prov = Provenance("minus", seed, index, source.provenance.truncated)
        yield PointWindow(m, lo, hi, mirrored, prov)


SAMPLERS: dict[str, Callable[..., Iterator[PointWindow]]] = {
    "tilde": sample_tilde,
    "plus": sample_plus,
    "minus": sample_minus,
}
