"""Window diagnostics: block swaps, matching times, and empirical estimators.

Everything here consumes :class:`~dyckshift.coding.PointWindow` streams from
the samplers (or hand-built windows) and stays deliberately finite: matching
times that fall outside a window are reported as ``None`` rather than
extended, truncated samples are excluded from estimates but counted, and the
tail classifier is labeled as the finite-window heuristic it is.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Sequence

from .coding import PointWindow, height_cocycle
from .words import DyckError, Word, are_equivalent


class DomainMismatch(DyckError):
    """A block swap was applied to a window outside its domain cylinder."""


class InsufficientData(DyckError):
    """No usable samples survived exclusion; estimate undefined."""


@dataclass(frozen=True)
class Holonomy:
    """Swap one word for an equivalent one at a fixed coordinate.

    Equivalent means: same length, same normal form, both in the language.
    Such a swap is measure-preserving and invertible, which is exactly what
    the verification suite checks empirically and exactly.
    """

    w: Word
    w_prime: Word
    k: int

    def __post_init__(self) -> None:
        if self.w.m != self.w_prime.m:
            raise ValueError("block swap needs both words over the same alphabet")
        if len(self.w) != len(self.w_prime):
            raise ValueError("block swap needs words of equal length")
        if not are_equivalent(self.w, self.w_prime):
            raise ValueError(
                f"{self.w.text()!r} and {self.w_prime.text()!r} are not equivalent"
            )

    @property
    def span(self) -> tuple[int, int]:
        return self.k, self.k + len(self.w) - 1

    def inverse(self) -> "Holonomy":
        return Holonomy(self.w_prime, self.w, self.k)

    def apply(self, x: PointWindow) -> PointWindow:
        return holonomy_apply(self, x)


def holonomy_apply(h: Holonomy, x: PointWindow) -> PointWindow:
    """Rewrite the block ``h.w`` at coordinate ``h.k`` into ``h.w_prime``.

    The window must cover the block, the block must be fully resolved, and it
    must literally spell ``h.w``; otherwise DomainMismatch.  The result keeps
    the window bounds and provenance and is re-validated on construction.
    """
    lo, hi = h.span
    if x.m != h.w.m:
        raise DomainMismatch("window and block swap use different alphabets")
    if lo < x.lo or hi > x.hi:
        raise DomainMismatch(f"window [{x.lo}, {x.hi}] does not cover the block [{lo}, {hi}]")
    segment = x.codes[lo - x.lo : hi - x.lo + 1]
    if any(abs(c) > x.m for c in segment):
        raise DomainMismatch("block overlaps unresolved letters of a truncated sample")
    if segment != h.w.codes:
        raise DomainMismatch(
            f"window shows {' '.join(map(str, segment))} at {lo}, not {h.w.text()!r}"
        )
    patched = x.codes[: lo - x.lo] + h.w_prime.codes + x.codes[hi - x.lo + 1 :]
    return replace(x, codes=patched)


@dataclass(frozen=True)
class MatchingTimes:
    """First forward and last backward visits of each depth ``-j``.

    ``forward[j-1]`` is the least ``k >= 0`` with ``H_{k+1} = -j`` (the time
    the walk first dips to depth ``j`` looking rightward from the origin) and
    ``backward[j-1]`` the greatest ``k < 0`` with ``H_k = -j``.  ``None``
    means the window ended before that depth was seen — unresolved, not an
    error.
    """

    forward: tuple[int | None, ...]
    backward: tuple[int | None, ...]

    def forward_time(self, j: int) -> int | None:
        return self.forward[j - 1]

    def backward_time(self, j: int) -> int | None:
        return self.backward[j - 1]


def matching_times(x: PointWindow, j_max: int) -> MatchingTimes:
    if j_max < 1:
        raise ValueError("j_max must be at least 1")
    heights = height_cocycle(x)
    forward: list[int | None] = [None] * j_max
    for k in range(0, x.hi + 1):
        h = heights[k + 1 - x.lo]
        if -j_max <= h <= -1 and forward[-h - 1] is None:
            forward[-h - 1] = k
    backward: list[int | None] = [None] * j_max
    for k in range(-1, x.lo - 1, -1):
        h = heights[k - x.lo]
        if -j_max <= h <= -1 and backward[-h - 1] is None:
            backward[-h - 1] = k
    return MatchingTimes(tuple(forward), tuple(backward))


@dataclass(frozen=True)
class EmpiricalEstimate:
    """A counted event over a sample stream, with its exclusions on record.

    ``sigma_distance`` measures the gap to a hypothesised probability in
    binomial standard deviations computed *under that hypothesis* — the
    natural scale for the agreement checks, and well-defined even when the
    empirical rate is 0 or 1.
    """

    event: str
    hits: int
    trials: int
    excluded_truncated: int = 0
    excluded_unresolved: int = 0

    @property
    def scanned(self) -> int:
        return self.trials + self.excluded_truncated + self.excluded_unresolved

    @property
    def estimate(self) -> Fraction:
        if self.trials == 0:
            raise InsufficientData(f"no usable samples for {self.event}")
        return Fraction(self.hits, self.trials)

    @property
    def stderr(self) -> float:
        p = float(self.estimate)
        return math.sqrt(p * (1.0 - p) / self.trials)

    @property
    def resolution_rate(self) -> float:
        if self.scanned == 0:
            raise InsufficientData(f"no samples scanned for {self.event}")
        return self.trials / self.scanned

    def sigma_distance(self, target: Fraction | float) -> float:
        p0 = float(target)
        if not 0.0 < p0 < 1.0:
            raise ValueError("target probability must be strictly between 0 and 1")
        sigma = math.sqrt(p0 * (1.0 - p0) / self.trials) if self.trials else math.inf
        return abs(float(self.estimate) - p0) / sigma


def empirical_cylinder(samples: Iterable[PointWindow], w: Word, k: int) -> EmpiricalEstimate:
    """Fraction of non-truncated windows showing ``w`` at coordinate ``k``.

    Truncated samples are excluded wholesale (and counted); a window that
    does not cover ``[k, k+|w|)`` is a caller error and raises.
    """
    hits = trials = truncated = 0
    for x in samples:
        if x.truncated:
            truncated += 1
            continue
        trials += 1
        if x.carries(w, k):
            hits += 1
    return EmpiricalEstimate(f"[{w.text()}]_{k}", hits, trials, excluded_truncated=truncated)


def match_index_coincidence(
    samples: Iterable[PointWindow], offset: int, js: Sequence[int]
) -> EmpiricalEstimate:
    """Empirical probability that backward matching letters repeat their type.

    For each usable window this resolves the backward times ``b_j`` and
    ``b_{j+offset}`` for every ``j`` in ``js`` and counts the event that all
    those letter pairs carry equal types.  Windows that are truncated, or too
    short to resolve every needed time, are excluded and counted separately.
    """
    if offset < 1:
        raise ValueError("offset must be at least 1")
    js = tuple(js)
    if not js or any(j < 1 for j in js):
        raise ValueError("js must be non-empty positive depths")
    j_need = max(js) + offset
    hits = trials = truncated = unresolved = 0
    for x in samples:
        if x.truncated:
            truncated += 1
            continue
        times = matching_times(x, j_need)
        needed = [(times.backward[j - 1], times.backward[j + offset - 1]) for j in js]
        if any(t is None or u is None for t, u in needed):
            unresolved += 1
            continue
        trials += 1
        if all(x.code_at(t) == x.code_at(u) for t, u in needed):
            hits += 1
    event = "type match at b_{j},b_{j+%d} for j in {%s}" % (offset, ",".join(map(str, js)))
    return EmpiricalEstimate(event, hits, trials, truncated, unresolved)


@dataclass(frozen=True)
class WindowDiagnostics:
    """Finite-window tail read-out.  Heuristic by construction.

    Each half-window gets a drift score ``H_end / sqrt(half length)``.  A
    strongly positive score reads as an upward-transient direction; anything
    at or below the lower threshold reads as recurrent-or-descending, which
    in this family means the walk's liminf in that direction is ``-inf``;
    between the thresholds the half-window is left undecided.
    """

    forward_label: str
    backward_label: str
    forward_score: float | None
    backward_score: float | None
    forward_end: int
    backward_end: int
    forward_min: int
    backward_min: int
    heuristic: bool = True
    note: str = "finite-window drift score; not a tail determination"


def _drift_label(score: float | None, up: float, down: float) -> str:
    if score is None:
        return "undecided"
    if score >= up:
        return "plus-infinity-like"
    if score <= down:
        return "minus-infinity-like"
    return "undecided"


def classify_window(
    x: PointWindow, *, up_threshold: float = 2.0, down_threshold: float = 1.0
) -> WindowDiagnostics:
    """Label each half of a window by where its depth walk seems headed."""
    if up_threshold <= down_threshold:
        raise ValueError("thresholds must satisfy down < up")
    heights = height_cocycle(x)
    fwd = heights[-x.lo :]  # H_0 .. H_{hi+1}
    bwd = heights[: -x.lo + 1]  # H_lo .. H_0
    f_end, f_min = fwd[-1], min(fwd)
    b_end, b_min = bwd[0], min(bwd)
    f_score = f_end / math.sqrt(x.hi) if x.hi >= 1 else None
    b_score = b_end / math.sqrt(-x.lo) if x.lo <= -1 else None
    return WindowDiagnostics(
        forward_label=_drift_label(f_score, up_threshold, down_threshold),
        backward_label=_drift_label(b_score, up_threshold, down_threshold),
        forward_score=f_score,
        backward_score=b_score,
        forward_end=f_end,
        backward_end=b_end,
        forward_min=f_min,
        backward_min=b_min,
    )
