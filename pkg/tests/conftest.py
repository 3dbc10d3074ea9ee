"""Shared strategies and oracles for the test suite."""

from __future__ import annotations

import random

from hypothesis import HealthCheck, settings, strategies as st

from dyckshift.words import IDENTITY, ZERO, NormalForm, Word

settings.register_profile(
    "suite",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
    max_examples=60,
)
settings.load_profile("suite")


def balanced_codes_exact(draw, m: int, pairs: int) -> tuple[int, ...]:
    """Draw a random balanced word with exactly ``pairs`` matched pairs."""
    n = 2 * pairs
    codes: list[int] = []
    stack: list[int] = []
    while len(codes) < n:
        remaining = n - len(codes)
        can_open = remaining >= len(stack) + 2
        if stack and (not can_open or draw(st.booleans())):
            codes.append(-stack.pop())
        else:
            t = draw(st.integers(1, m))
            stack.append(t)
            codes.append(t)
    return tuple(codes)


def balanced_codes(draw, m: int, max_pairs: int) -> tuple[int, ...]:
    """Draw a uniform-ish random balanced word as raw codes."""
    return balanced_codes_exact(draw, m, draw(st.integers(0, max_pairs)))


@st.composite
def balanced_words(draw, m: int = 2, max_pairs: int = 5) -> Word:
    return Word(m, balanced_codes(draw, m, max_pairs))


@st.composite
def language_words(draw, m: int = 2, max_len: int = 12) -> Word:
    """Random language word: a legal walk that never annihilates."""
    n = draw(st.integers(0, max_len))
    codes: list[int] = []
    stack: list[int] = []
    for _ in range(n):
        close = draw(st.booleans())
        if close and stack:
            codes.append(-stack.pop())
        elif close:
            codes.append(-draw(st.integers(1, m)))  # joins the loose-closer run
        else:
            t = draw(st.integers(1, m))
            stack.append(t)
            codes.append(t)
    return Word(m, tuple(codes))


@st.composite
def raw_words(draw, m: int = 2, max_len: int = 10) -> Word:
    """Arbitrary words, most of which annihilate — parser/reducer fodder."""
    codes = draw(
        st.lists(
            st.integers(1, m).flatmap(lambda t: st.sampled_from([t, -t])),
            max_size=max_len,
        )
    )
    return Word(m, tuple(codes))


@st.composite
def equivalent_word_pairs(draw, m: int = 2, max_total: int = 12) -> tuple[Word, Word]:
    """Two same-length words with the same irreducible residue.

    Built generatively from the residue outward: every word with residue
    ``b.. b.. a.. a..`` is that letter skeleton with balanced fillers slotted
    between (and around) the loose letters, so drawing two filler tuples with
    equal total size yields an equivalent pair without ever invoking the
    reducer under test.
    """
    closers = draw(st.lists(st.integers(1, m), max_size=2))
    openers = draw(st.lists(st.integers(1, m), max_size=2))
    slots = len(closers) + len(openers) + 1
    budget = max(0, (max_total - len(closers) - len(openers)) // 2)
    total = draw(st.integers(0, budget))

    def build() -> tuple[int, ...]:
        fillers = []
        left = total
        for slot in range(slots):
            pairs = left if slot == slots - 1 else draw(st.integers(0, left))
            fillers.append(balanced_codes_exact(draw, m, pairs))
            left -= pairs
        codes: list[int] = list(fillers[0])
        for i, c in enumerate(closers):
            codes.append(-c)
            codes.extend(fillers[1 + i])
        for i, o in enumerate(openers):
            codes.append(o)
            codes.extend(fillers[1 + len(closers) + i])
        return tuple(codes)

    return Word(m, build()), Word(m, build())


def rewrite_oracle(codes: tuple[int, ...], rng: random.Random) -> NormalForm:
    """Reduce by randomly ordered adjacent rewrites; confluence oracle.

    Picks any adjacent opener-closer pair, cancels it if the types match and
    annihilates everything otherwise, until no such pair remains.  The final
    letters are then loose closers followed by loose openers.
    """
    work = list(codes)
    while True:
        redexes = [
            i for i in range(len(work) - 1) if work[i] > 0 and work[i + 1] < 0
        ]
        if not redexes:
            break
        i = rng.choice(redexes)
        if work[i] != -work[i + 1]:
            return ZERO
        del work[i : i + 2]
    if not work:
        return IDENTITY
    split = next((i for i, c in enumerate(work) if c > 0), len(work))
    return NormalForm(False, tuple(-c for c in work[:split]), tuple(work[split:]))
