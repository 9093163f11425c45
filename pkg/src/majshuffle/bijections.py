"""Increment-driven bijections on words.

Realising a prescribed sequence of major-index gains by successive letter
insertions turns inversion counts into major indices. Removing the letters
of one fixed subword from a shuffle, recording how much each removal drops
the major index, compresses the shuffle into a bounded partition; the reverse
reconstruction re-inserts those letters, choosing at every stage the
rightmost admissible slot. Composing the two directions yields an
inversion-to-major bijection on any union of inverse-descent classes.
"""

from __future__ import annotations

import itertools
from typing import Iterator, NamedTuple, Sequence

from .mis import increment_sequence_scan
from .words import (
    Word,
    _check_distinct,
    _check_range_permutation,
    delete_at,
    descents_from,
    from_inversion_sequence,
    insert_at,
    inverse_descent_set,
    inversion_sequence,
    maj,
)

Partition = tuple[int, ...]


class TraceStep(NamedTuple):
    index: int  # which letter of pi this step concerns (1-based)
    position: int  # slot the letter occupies when present
    gain: int  # major-index change contributed by the letter
    residual: int  # gain minus the later descents of pi: one partition part
    word: Word  # the shuffle with letters index..len(pi) of pi present


class InsertionTrace(NamedTuple):
    steps: tuple[TraceStep, ...]  # ordered from the last letter of pi down to the first
    base: Word  # the word left once every letter of pi is removed

    def records(self) -> list[dict]:
        """Plain-dict form used for JSON output."""
        return [
            {
                "i": s.index,
                "k": s.position,
                "m": s.gain,
                "t": s.residual,
                "sigma": list(s.word),
            }
            for s in self.steps
        ]


def bounded_partitions(bound: int, count: int) -> Iterator[Partition]:
    """All weakly increasing tuples of `count` parts drawn from [0, bound]."""
    if bound < 0 or count < 0:
        raise ValueError("bound and count must be nonnegative")
    return itertools.combinations_with_replacement(range(bound + 1), count)


def _check_partition(parts: Sequence[int], bound: int, count: int) -> Partition:
    lam = tuple(sorted(parts))
    if len(lam) != count or any(not 0 <= t <= bound for t in lam):
        raise ValueError(
            f"{tuple(parts)} is not a partition with {count} parts in [0, {bound}]"
        )
    return lam


def build_by_increments(order: Sequence[int], targets: Sequence[int]) -> Word:
    """Insert the letters of `order` so step i gains targets(i) on the major index.

    targets(i) must lie in [0, i-1]; each step has exactly one slot achieving
    it, so the result is unique.
    """
    order = tuple(order)
    targets = tuple(targets)
    _check_distinct(order, "order")
    if len(order) != len(targets):
        raise ValueError("order and targets must have equal length")
    word: Word = ()
    for i, (letter, target) in enumerate(zip(order, targets), start=1):
        if not 0 <= target <= i - 1:
            raise ValueError(f"target {target} at step {i} outside [0, {i - 1}]")
        seq = increment_sequence_scan(word, letter) if word else (0,)
        word = insert_at(word, seq.index(target) + 1, letter)
    return word


def inv_to_maj(perm: Sequence[int], order: Sequence[int]) -> Word:
    """Send a permutation with inversion sequence a to the word built by
    realising a as major-index gains along `order`.

    For each fixed insertion order this is a bijection on permutations of
    1..n carrying the inversion number to the major index.
    """
    perm = tuple(perm)
    order = tuple(order)
    _check_range_permutation(perm)
    _check_range_permutation(order)
    if len(order) != len(perm):
        raise ValueError("order and perm must have equal length")
    return build_by_increments(order, inversion_sequence(perm))


def maj_to_inv(perm: Sequence[int], order: Sequence[int]) -> Word:
    """Inverse of inv_to_maj: peel letters off in reverse order, read the
    major-index drops, and realise them as an inversion sequence."""
    w = tuple(perm)
    order = tuple(order)
    _check_range_permutation(w)
    _check_range_permutation(order)
    if len(order) != len(w):
        raise ValueError("order and perm must have equal length")
    n = len(w)
    targets = [0] * n
    for i in range(n, 0, -1):
        k = w.index(order[i - 1]) + 1
        rest = delete_at(w, k)
        targets[i - 1] = maj(w) - maj(rest)
        w = rest
    return from_inversion_sequence(targets)


def _subword(word: Word, keep: frozenset[int] | set[int]) -> Word:
    return tuple(x for x in word if x in keep)


def _check_disjoint(theta: Word, pi: Word) -> None:
    _check_distinct(theta, "theta")
    _check_distinct(pi, "pi")
    if set(theta) & set(pi):
        raise ValueError("theta and pi share letters")


def _check_shuffle(theta: Word, pi: Word, sigma: Word) -> None:
    _check_disjoint(theta, pi)
    ts, ps = set(theta), set(pi)
    ok = (
        len(sigma) == len(theta) + len(pi)
        and len(set(sigma)) == len(sigma)
        and set(sigma) == ts | ps
        and _subword(sigma, ts) == theta
        and _subword(sigma, ps) == pi
    )
    if not ok:
        raise ValueError(f"{sigma} is not a shuffle of {theta} and {pi}")


def shuffle_to_partition(
    theta: Sequence[int], pi: Sequence[int], sigma: Sequence[int]
) -> tuple[Partition, InsertionTrace]:
    """Compress a shuffle of theta and pi into a partition with len(pi) parts
    bounded by len(theta).

    Letters of pi are removed from sigma left to right; step i records the
    major-index drop m and keeps the part t = m minus the number of descents
    of pi at index i or later. The partition is the sorted multiset of parts,
    and maj(sigma) = maj(theta) + maj(pi) + sum(parts).
    """
    theta = tuple(theta)
    pi = tuple(pi)
    sigma = tuple(sigma)
    _check_shuffle(theta, pi, sigma)
    steps = []
    w = sigma
    maj_w = maj(w)
    for i in range(1, len(pi) + 1):
        k = w.index(pi[i - 1]) + 1
        rest = delete_at(w, k)
        maj_rest = maj(rest)
        gain = maj_w - maj_rest
        steps.append(TraceStep(i, k, gain, gain - descents_from(pi, i), w))
        w, maj_w = rest, maj_rest
    parts = tuple(sorted(s.residual for s in steps))
    return parts, InsertionTrace(tuple(reversed(steps)), w)


def partition_to_shuffle(
    theta: Sequence[int], pi: Sequence[int], parts: Sequence[int]
) -> Word:
    """Rebuild the unique shuffle of theta and pi that compresses to `parts`.

    Letters of pi are inserted right to left. At each stage the admissible
    increments are the unused parts raised by the later descents of pi, the
    search window is cut off at the previous insertion slot, and the
    rightmost admissible slot wins; equal parts are consumed lowest index
    first.
    """
    theta = tuple(theta)
    pi = tuple(pi)
    _check_disjoint(theta, pi)
    a, b = len(pi), len(theta)
    lam = _check_partition(parts, b, a)
    used = [False] * a
    w = theta
    window = a + b + 1  # no cutoff for the first insertion
    for i in range(a, 0, -1):
        d = descents_from(pi, i)
        seq = increment_sequence_scan(w, pi[i - 1]) if w else (0,)
        wanted = {lam[j] + d for j in range(a) if not used[j]}
        slot = None
        for p in range(min(window, len(seq)) - 1, -1, -1):
            if seq[p] in wanted:
                slot = p + 1
                break
        if slot is None:
            raise RuntimeError(
                "no admissible slot for any remaining part; "
                "reconstruction invariant violated"
            )
        gain = seq[slot - 1]
        for j in range(a):
            if not used[j] and lam[j] + d == gain:
                used[j] = True
                break
        w = insert_at(w, slot, pi[i - 1])
        window = slot
    return w


def _check_block_shuffle(b: int, a: int, word: Word) -> None:
    if set(word) != set(range(1, b + a + 1)) or len(word) != b + a:
        raise ValueError(f"{word} is not a permutation of 1..{b + a}")
    pos = {x: p for p, x in enumerate(word)}
    for x in range(1, b):
        if pos[x] > pos[x + 1]:
            raise ValueError(f"letters 1..{b} out of order in {word}")
    for x in range(b + 1, b + a):
        if pos[x] > pos[x + 1]:
            raise ValueError(f"letters {b + 1}..{b + a} out of order in {word}")


def inversion_partition(b: int, a: int, word: Sequence[int]) -> Partition:
    """For a shuffle of 1..b with b+1..b+a, count the low letters to the
    right of each high letter; sorted, these form a partition whose size is
    the inversion number of the word."""
    w = tuple(word)
    _check_block_shuffle(b, a, w)
    counts = []
    lows_seen = 0
    for x in reversed(w):
        if x <= b:
            lows_seen += 1
        else:
            counts.append(lows_seen)
    return tuple(sorted(counts))


def shuffle_with_inversion_partition(b: int, a: int, parts: Sequence[int]) -> Word:
    """The unique shuffle of 1..b with b+1..b+a realising the given
    right-count partition."""
    lam = _check_partition(parts, b, a)
    t = tuple(reversed(lam))  # weakly decreasing, t[i-1] belongs to letter b+i
    out = []
    nxt = 1
    for lows_before in range(b + 1):
        while nxt <= a and b - t[nxt - 1] == lows_before:
            out.append(b + nxt)
            nxt += 1
        if lows_before < b:
            out.append(lows_before + 1)
    return tuple(out)


def class_inv_to_maj(q_set: Sequence[int], perm: Sequence[int]) -> Word:
    """Carry the inversion number to the major index on the class of words
    whose inverse descents lie in `q_set`.

    `q_set` must contain the inverse descent set of `perm`; the letters then
    split into blocks of consecutive values appearing in increasing order.
    Block by block, the right-counts against all smaller letters are read off
    and re-realised as major-index gains via partition_to_shuffle. The map
    permutes the class and matches maj on the image against inv on the
    source; with two or more admissible descent values the exact inverse
    descent set of the image may differ from the source's.
    """
    w = tuple(perm)
    n = len(w)
    ides = inverse_descent_set(w)  # also validates the permutation
    q = tuple(sorted(set(q_set)))
    if any(not 1 <= x <= n - 1 for x in q):
        raise ValueError(f"{q} is not a subset of 1..{n - 1}")
    if not set(ides) <= set(q):
        raise ValueError(
            f"inverse descent set {ides} not contained in {q}"
        )
    bounds = (0,) + q + (n,)
    pos = {x: p for p, x in enumerate(w)}
    out: Word = tuple(range(1, bounds[1] + 1))
    for lo, hi in zip(bounds[1:], bounds[2:]):
        block = tuple(range(lo + 1, hi + 1))
        counts = []
        for letter in block:
            p = pos[letter]
            counts.append(sum(1 for x in w[p + 1 :] if x <= lo))
        out = partition_to_shuffle(out, block, tuple(sorted(counts)))
    return out
