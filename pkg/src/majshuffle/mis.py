"""Insertion increments of the major index.

For a word of n distinct letters and a new letter r, slot k (1-based, n+1
slots in all) receives the amount by which the major index grows when r is
inserted there. The resulting increment sequence is a permutation of
{0, ..., n} in which every prefix is a contiguous block of integers.

`increment_sequence` computes it directly, one insertion per slot. The scan
variants rebuild the same sequence right to left in linear time from two
counters that close in on each other: one regime serves slots inside runs of
letters smaller than r, the other serves runs of larger letters, and two
extra branches handle the crossings between runs.
"""

from __future__ import annotations

import itertools
from typing import NamedTuple, Sequence

from .words import descents_from, insert_at, maj


class CounterPair(NamedTuple):
    a: int
    b: int


class Segment(NamedTuple):
    kind: str  # "lesser" or "greater"
    start: int  # 1-based, inclusive
    stop: int  # 1-based, inclusive


class ScanStep(NamedTuple):
    index: int  # iteration index i, running len(word) down to 1
    branch: str  # "a", "b", "c" or "d"
    value: int  # increment written for slot i
    counters: CounterPair  # state after the iteration


class ScanTrace(NamedTuple):
    regime: str  # "lesser" or "greater": which side the last letter is on
    initial: CounterPair  # counters right after initialisation
    steps: tuple[ScanStep, ...]
    sequence: tuple[int, ...]


def major_increment(word: Sequence[int], k: int, letter: int) -> int:
    """Major-index gain from inserting `letter` at slot k."""
    w = tuple(word)
    return maj(insert_at(w, k, letter)) - maj(w)


def increment_sequence(word: Sequence[int], letter: int) -> tuple[int, ...]:
    """All n+1 insertion increments, by direct re-insertion.

    This is the quadratic reference implementation the scans are checked
    against. The empty word gives (0,).
    """
    w = tuple(word)
    if letter in w:
        raise ValueError(f"letter {letter} already present in {w}")
    base = maj(w)
    return tuple(maj(w[:k] + (letter,) + w[k:]) - base for k in range(len(w) + 1))


def increment_formula_larger(word: Sequence[int], k: int) -> int:
    """Closed form for the slot-k increment when the new letter beats all.

    Slot n+1 gives 0; a slot preceded by a descent gives one more than the
    number of later descents; any other slot gives the later-descent count
    plus k.
    """
    w = tuple(word)
    n = len(w) + 1
    if not 1 <= k <= n:
        raise ValueError(f"slot {k} out of range for a word of length {len(w)}")
    if k == n:
        return 0
    if k == 1 or w[k - 2] < w[k - 1]:
        return descents_from(w, k) + k
    return descents_from(w, k) + 1


def increment_formula_smaller(word: Sequence[int], k: int) -> int:
    """Closed form for the slot-k increment when the new letter is below all.

    Slot n+1 gives n; a slot preceded by an ascent gives the later-descent
    count plus k-1; any other slot gives the later-descent count alone.
    """
    w = tuple(word)
    n = len(w) + 1
    if not 1 <= k <= n:
        raise ValueError(f"slot {k} out of range for a word of length {len(w)}")
    if k == n:
        return n - 1
    if k == 1 or w[k - 2] > w[k - 1]:
        return descents_from(w, k)
    return descents_from(w, k) + (k - 1)


def scan_for_larger(word: Sequence[int]) -> tuple[int, ...]:
    """Linear right-to-left scan for a letter larger than every letter.

    Counter A hands out the values taken at slots preceded by a descent,
    counter B the rest; they start at 1 and n-1 and meet at the last
    iteration.
    """
    w = tuple(word)
    if not w:
        raise ValueError("scan needs a nonempty word")
    n = len(w) + 1
    out = [0] * n
    a, b = 1, n - 1
    for i in range(n - 1, 0, -1):
        if i > 1 and w[i - 2] > w[i - 1]:
            out[i - 1] = a
            a += 1
        else:
            out[i - 1] = b
            if i != 1:
                b -= 1
    return tuple(out)


def scan_for_smaller(word: Sequence[int]) -> tuple[int, ...]:
    """Linear right-to-left scan for a letter smaller than every letter.

    Same sweep as scan_for_larger with the roles of ascents and descents
    exchanged and the counters started at 0 and n-2.
    """
    w = tuple(word)
    if not w:
        raise ValueError("scan needs a nonempty word")
    n = len(w) + 1
    out = [0] * n
    out[n - 1] = n - 1
    a, b = 0, n - 2
    for i in range(n - 1, 0, -1):
        if i == 1 or w[i - 2] > w[i - 1]:
            out[i - 1] = a
            if i != 1:
                a += 1
        else:
            out[i - 1] = b
            b -= 1
    return tuple(out)


def segments(word: Sequence[int], letter: int) -> list[Segment]:
    """Maximal runs of letters lying on one side of `letter`.

    The runs alternate between "lesser" and "greater" and tile 1..len(word).
    """
    w = tuple(word)
    if letter in w:
        raise ValueError(f"letter {letter} already present in {w}")
    out: list[Segment] = []
    pos = 1
    for below, group in itertools.groupby(w, key=lambda x: x < letter):
        size = sum(1 for _ in group)
        out.append(Segment("lesser" if below else "greater", pos, pos + size - 1))
        pos += size
    return out


def increment_sequence_scan(word: Sequence[int], letter: int) -> tuple[int, ...]:
    """Linear-time rebuild of increment_sequence for any new letter.

    Right-to-left sweep; inside a run of smaller letters it behaves like
    scan_for_larger, inside a run of larger letters like scan_for_smaller,
    and at a crossing it hands out counter A (entering smaller territory
    leftwards) or counter B (entering larger territory).
    """
    w = tuple(word)
    if letter in w:
        raise ValueError(f"letter {letter} already present in {w}")
    if not w:
        raise ValueError("scan needs a nonempty word")
    n = len(w) + 1
    below = [x < letter for x in w]
    out = [0] * n
    if below[-1]:
        a, b = 1, n - 1
    else:
        a, b = 0, n - 2
        out[n - 1] = n - 1
    for i in range(n - 1, 0, -1):
        cur = below[i - 1]
        prev = below[i - 2] if i > 1 else None
        if cur and (prev is None or prev):
            # slot inside a run of smaller letters
            if i > 1 and w[i - 2] > w[i - 1]:
                out[i - 1] = a
                a += 1
            else:
                out[i - 1] = b
                if i != 1:
                    b -= 1
        elif not cur and (prev is None or not prev):
            # slot inside a run of larger letters
            if i == 1 or w[i - 2] > w[i - 1]:
                out[i - 1] = a
                if i != 1:
                    a += 1
            else:
                out[i - 1] = b
                b -= 1
        elif not cur:
            # crossing: smaller letters on the left, larger on the right
            out[i - 1] = a
            a += 1
        else:
            # crossing: larger letters on the left, smaller on the right
            out[i - 1] = b
            b -= 1
    return tuple(out)


def increment_sequence_scan_trace(word: Sequence[int], letter: int) -> ScanTrace:
    """Instrumented variant of increment_sequence_scan.

    Records, for every iteration, which branch fired and the counter pair
    left behind; kept separate so the plain scan stays allocation-light.
    """
    w = tuple(word)
    if letter in w:
        raise ValueError(f"letter {letter} already present in {w}")
    if not w:
        raise ValueError("scan needs a nonempty word")
    n = len(w) + 1
    below = [x < letter for x in w]
    out = [0] * n
    if below[-1]:
        regime = "lesser"
        a, b = 1, n - 1
    else:
        regime = "greater"
        a, b = 0, n - 2
        out[n - 1] = n - 1
    initial = CounterPair(a, b)
    steps = []
    for i in range(n - 1, 0, -1):
        cur = below[i - 1]
        prev = below[i - 2] if i > 1 else None
        if cur and (prev is None or prev):
            branch = "a"
            if i > 1 and w[i - 2] > w[i - 1]:
                out[i - 1] = a
                a += 1
            else:
                out[i - 1] = b
                if i != 1:
                    b -= 1
        elif not cur and (prev is None or not prev):
            branch = "b"
            if i == 1 or w[i - 2] > w[i - 1]:
                out[i - 1] = a
                if i != 1:
                    a += 1
            else:
                out[i - 1] = b
                b -= 1
        elif not cur:
            branch = "c"
            out[i - 1] = a
            a += 1
        else:
            branch = "d"
            out[i - 1] = b
            b -= 1
        steps.append(ScanStep(i, branch, out[i - 1], CounterPair(a, b)))
    return ScanTrace(regime, initial, tuple(steps), tuple(out))


def lesser_pair(word: Sequence[int], k: int) -> CounterPair:
    """Counter state that the larger-letter regime holds before slot k."""
    w = tuple(word)
    if not 1 <= k <= len(w):
        raise ValueError(f"slot {k} out of range for a word of length {len(w)}")
    d = descents_from(w, k)
    return CounterPair(d + 1, d + k)


def greater_pair(word: Sequence[int], k: int) -> CounterPair:
    """Counter state that the smaller-letter regime holds before slot k."""
    w = tuple(word)
    if not 1 <= k <= len(w):
        raise ValueError(f"slot {k} out of range for a word of length {len(w)}")
    d = descents_from(w, k)
    return CounterPair(d, d + k - 1)


def is_interval_permutation(entries: Sequence[int]) -> bool:
    """True for a permutation of {0..n-1} whose prefixes are all contiguous.

    >>> is_interval_permutation((5, 4, 6, 3, 2, 7, 1, 0))
    True
    >>> is_interval_permutation((0, 2, 1))
    False
    """
    s = tuple(entries)
    if not s:
        return True
    seen = set()
    lo = hi = s[0]
    for x in s:
        if x in seen:
            return False
        seen.add(x)
        lo = min(lo, x)
        hi = max(hi, x)
        if hi - lo + 1 != len(seen):
            return False
    return lo == 0 and hi == len(s) - 1
