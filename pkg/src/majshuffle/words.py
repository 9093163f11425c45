"""Words of distinct letters, multiset words, and their order statistics.

A word is a finite sequence of positive integers, handled throughout as a
tuple; positions are 1-based in every public signature. Permutation words
carry pairwise distinct letters, while multiset words may repeat letters.
Every statistic in this module depends only on the relative order of the
letters, never on their actual values.
"""

from __future__ import annotations

from typing import Iterator, Sequence

Word = tuple[int, ...]


def descent_set(word: Sequence[int]) -> tuple[int, ...]:
    """Positions i with word(i) > word(i+1), strict comparison.

    >>> descent_set((4, 2, 6, 3, 5, 1))
    (1, 3, 5)
    >>> descent_set((1, 1, 2, 2))
    ()
    """
    return tuple(i for i in range(1, len(word)) if word[i - 1] > word[i])


def maj(word: Sequence[int]) -> int:
    """Major index: the sum of all descent positions.

    >>> maj((4, 2, 6, 3, 5, 1))
    9
    >>> maj(())
    0
    """
    return sum(i for i in range(1, len(word)) if word[i - 1] > word[i])


def inv(word: Sequence[int]) -> int:
    """Inversion number: pairs of positions whose letters decrease.

    >>> inv((6, 2, 5, 7, 4, 3, 1))
    15
    """
    total = 0
    n = len(word)
    for i in range(n):
        wi = word[i]
        for j in range(i + 1, n):
            if wi > word[j]:
                total += 1
    return total


def descents_from(word: Sequence[int], k: int) -> int:
    """Number of descents at position k or later.

    k may be len(word) + 1, in which case the count is 0.
    """
    if not 1 <= k <= len(word) + 1:
        raise ValueError(f"position {k} out of range for a word of length {len(word)}")
    return sum(1 for i in range(k, len(word)) if word[i - 1] > word[i])


def _check_distinct(word: Sequence[int], label: str = "word") -> None:
    if len(set(word)) != len(word):
        raise ValueError(f"{label} has repeated letters: {tuple(word)}")


def _check_range_permutation(word: Sequence[int]) -> None:
    n = len(word)
    if set(word) != set(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {tuple(word)}")


def inversion_sequence(perm: Sequence[int]) -> tuple[int, ...]:
    """Term i counts the smaller letters standing to the right of letter i.

    Defined for permutations of 1..n; the terms sum to the inversion number
    and term i lies in [0, i-1].

    >>> inversion_sequence((6, 2, 5, 7, 4, 3, 1))
    (0, 1, 1, 2, 3, 5, 3)
    """
    _check_range_permutation(perm)
    n = len(perm)
    pos = [0] * (n + 1)
    for p, letter in enumerate(perm):
        pos[letter] = p
    out = []
    for letter in range(1, n + 1):
        p = pos[letter]
        out.append(sum(1 for q in range(p + 1, n) if perm[q] < letter))
    return tuple(out)


def from_inversion_sequence(seq: Sequence[int]) -> Word:
    """The unique permutation of 1..n whose inversion sequence is `seq`.

    Built by inserting letter i so that exactly seq(i) smaller letters end up
    to its right.
    """
    word: list[int] = []
    for i, a in enumerate(seq, start=1):
        if not 0 <= a <= i - 1:
            raise ValueError(f"term {a} at index {i} outside [0, {i - 1}]")
        word.insert(i - a - 1, i)
    return tuple(word)


def insert_at(word: Sequence[int], k: int, letter: int) -> Word:
    """Insert `letter` so that it lands at position k (1-based).

    >>> insert_at((4, 2, 6, 3, 5, 1), 3, 7)
    (4, 2, 7, 6, 3, 5, 1)
    """
    w = tuple(word)
    if letter in w:
        raise ValueError(f"letter {letter} already present in {w}")
    if not 1 <= k <= len(w) + 1:
        raise ValueError(f"position {k} out of range for a word of length {len(w)}")
    return w[: k - 1] + (letter,) + w[k - 1 :]


def delete_at(word: Sequence[int], k: int) -> Word:
    """Remove the letter at position k (1-based)."""
    w = tuple(word)
    if not 1 <= k <= len(w):
        raise ValueError(f"position {k} out of range for a word of length {len(w)}")
    return w[: k - 1] + w[k:]


def _colex_subsets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    # k-subsets of range(n), colexicographic: ordered by largest element,
    # then recursively by the rest.
    if k == 0:
        yield ()
        return
    for top in range(k - 1, n):
        for rest in _colex_subsets(top, k - 1):
            yield rest + (top,)


def enumerate_shuffles(theta: Sequence[int], pi: Sequence[int]) -> Iterator[Word]:
    """Yield every interleaving of two disjoint words exactly once.

    The positions taken by pi's letters run through all binomial(b+a, a)
    subsets in colexicographic order, so the first shuffle is pi followed by
    theta and the last is theta followed by pi.

    >>> list(enumerate_shuffles((1, 2), (3,)))
    [(3, 1, 2), (1, 3, 2), (1, 2, 3)]
    """
    theta = tuple(theta)
    pi = tuple(pi)
    _check_distinct(theta, "theta")
    _check_distinct(pi, "pi")
    if set(theta) & set(pi):
        raise ValueError("theta and pi share letters")
    n = len(theta) + len(pi)
    for positions in _colex_subsets(n, len(pi)):
        taken = set(positions)
        word = []
        ti = pi_i = 0
        for p in range(n):
            if p in taken:
                word.append(pi[pi_i])
                pi_i += 1
            else:
                word.append(theta[ti])
                ti += 1
        yield tuple(word)


def inverse_descent_set(perm: Sequence[int]) -> tuple[int, ...]:
    """Values k such that k+1 stands to the left of k.

    Equals the descent set of the inverse permutation.

    >>> inverse_descent_set((5, 1, 2, 3, 6, 7, 4))
    (4,)
    """
    _check_range_permutation(perm)
    n = len(perm)
    pos = [0] * (n + 2)
    for p, letter in enumerate(perm):
        pos[letter] = p
    return tuple(k for k in range(1, n) if pos[k + 1] < pos[k])


def flatten_to_multiset(perm: Sequence[int], blocks: Sequence[int]) -> Word:
    """Replace each letter by the index of the block of 1..n it falls in.

    `blocks` lists the block sizes in value order; letters 1..blocks(1) map
    to 1, the next blocks(2) letters map to 2, and so on.

    >>> flatten_to_multiset((3, 1, 2), (2, 1))
    (2, 1, 1)
    """
    _check_range_permutation(perm)
    if any(b < 0 for b in blocks) or sum(blocks) != len(perm):
        raise ValueError(f"block sizes {tuple(blocks)} do not sum to {len(perm)}")
    label = [0] * (len(perm) + 1)
    letter = 1
    for idx, size in enumerate(blocks, start=1):
        for _ in range(size):
            label[letter] = idx
            letter += 1
    return tuple(label[x] for x in perm)


def parse_word(text: str) -> Word:
    """Parse a word from space- or comma-separated positive integers.

    A single token of several digits is read digit by digit, so "426351"
    means (4, 2, 6, 3, 5, 1); that shorthand only expresses single-digit
    letters. Append a comma ("12,") to force one multi-digit letter.
    """
    stripped = text.strip()
    if stripped == "":
        return ()
    if any(ch in stripped for ch in ", \t\n"):
        letters = tuple(int(t) for t in stripped.replace(",", " ").split())
    elif stripped.isdigit():
        letters = tuple(int(c) for c in stripped) if len(stripped) > 1 else (int(stripped),)
    else:
        raise ValueError(f"cannot parse word from {text!r}")
    if any(x <= 0 for x in letters):
        raise ValueError(f"letters must be positive integers: {letters}")
    return letters


def format_word(word: Sequence[int]) -> str:
    """Space-separated rendering used by the command line."""
    return " ".join(str(x) for x in word)
