import itertools
import random

import pytest

from majshuffle.mis import (
    CounterPair,
    greater_pair,
    increment_formula_larger,
    increment_formula_smaller,
    increment_sequence,
    increment_sequence_scan,
    increment_sequence_scan_trace,
    is_interval_permutation,
    lesser_pair,
    major_increment,
    scan_for_larger,
    scan_for_smaller,
    segments,
)
from majshuffle.words import insert_at, maj


def test_major_increment_table():
    # inserting 7 into 426351 (maj 9) at each of the seven slots
    word = (4, 2, 6, 3, 5, 1)
    assert maj(word) == 9
    expected = {
        1: ((7, 4, 2, 6, 3, 5, 1), 13, 4),
        2: ((4, 7, 2, 6, 3, 5, 1), 12, 3),
        3: ((4, 2, 7, 6, 3, 5, 1), 14, 5),
        4: ((4, 2, 6, 7, 3, 5, 1), 11, 2),
        5: ((4, 2, 6, 3, 7, 5, 1), 15, 6),
        6: ((4, 2, 6, 3, 5, 7, 1), 10, 1),
        7: ((4, 2, 6, 3, 5, 1, 7), 9, 0),
    }
    for k, (inserted, new_maj, gain) in expected.items():
        assert insert_at(word, k, 7) == inserted
        assert maj(inserted) == new_maj
        assert major_increment(word, k, 7) == gain
    assert increment_sequence(word, 7) == (4, 3, 5, 2, 6, 1, 0)


def test_increment_sequence_edge_cases():
    assert increment_sequence((), 5) == (0,)
    assert increment_sequence((3,), 5) == (1, 0)
    assert increment_sequence((3,), 1) == (0, 1)
    with pytest.raises(ValueError):
        increment_sequence((3, 5), 5)  # letter already present


def test_scan_matches_direct_computation():
    for n in range(2, 7):
        for t in range(1, n + 1):
            letters = [x for x in range(1, n + 1) if x != t]
            for sigma in itertools.permutations(letters):
                assert increment_sequence_scan(sigma, t) == increment_sequence(sigma, t)


def test_scan_on_words_with_gaps():
    rng = random.Random(4821)
    for _ in range(300):
        n = rng.randint(1, 9)
        letters = rng.sample(range(1, 100), n + 1)
        sigma = tuple(letters[:-1])
        r = letters[-1]
        assert increment_sequence_scan(sigma, r) == increment_sequence(sigma, r)


def test_scan_requires_nonempty_word():
    with pytest.raises(ValueError):
        increment_sequence_scan((), 3)
    with pytest.raises(ValueError):
        scan_for_larger(())
    with pytest.raises(ValueError):
        scan_for_smaller(())


def test_extreme_letter_scans():
    assert scan_for_larger((4, 2, 6, 3, 5, 1)) == (4, 3, 5, 2, 6, 1, 0)
    assert scan_for_smaller((5, 2, 7, 4)) == (2, 1, 3, 0, 4)
    for n in range(1, 7):
        for sigma in itertools.permutations(range(2, n + 2)):
            assert scan_for_larger(sigma) == increment_sequence(sigma, n + 2)
            assert scan_for_smaller(sigma) == increment_sequence(sigma, 1)


def test_extreme_scans_on_monotone_words():
    for n in range(2, 9):
        increasing = tuple(range(1, n))
        decreasing = tuple(range(n - 1, 0, -1))
        assert scan_for_larger(increasing) == tuple(range(1, n)) + (0,)
        assert scan_for_larger(decreasing) == tuple(range(n - 1, -1, -1))
        # a minimal letter only raises maj when it lands before a descent
        assert scan_for_smaller(increasing) == tuple(range(n))
        assert scan_for_smaller(decreasing) == tuple(range(n - 2, -1, -1)) + (n - 1,)


def test_larger_and_smaller_differ_by_one_shift():
    for n in range(1, 7):
        for sigma in itertools.permutations(range(2, n + 2)):
            low = scan_for_smaller(sigma)
            high = scan_for_larger(sigma)
            assert high[-1] == 0 and low[-1] == n
            assert all(high[k] == low[k] + 1 for k in range(n))


def test_closed_formulas_match_scans():
    for n in range(1, 7):
        for sigma in itertools.permutations(range(2, n + 2)):
            high = scan_for_larger(sigma)
            low = scan_for_smaller(sigma)
            for k in range(1, n + 2):
                assert increment_formula_larger(sigma, k) == high[k - 1]
                assert increment_formula_smaller(sigma, k) == low[k - 1]


def test_formula_slot_validation():
    with pytest.raises(ValueError):
        increment_formula_larger((2, 1), 0)
    with pytest.raises(ValueError):
        increment_formula_smaller((2, 1), 4)


def test_interval_permutation_property():
    assert is_interval_permutation((5, 4, 6, 3, 2, 7, 1, 0))
    assert is_interval_permutation((0,))
    assert not is_interval_permutation((0, 2, 1))
    assert not is_interval_permutation((1, 1))
    for n in range(2, 7):
        for t in range(1, n + 1):
            letters = [x for x in range(1, n + 1) if x != t]
            for sigma in itertools.permutations(letters):
                seq = increment_sequence(sigma, t)
                assert sorted(seq) == list(range(n))
                assert is_interval_permutation(seq)


def test_counter_pairs():
    sigma = (4, 2, 6, 3, 5, 1)
    for k in range(1, len(sigma) + 1):
        lp = lesser_pair(sigma, k)
        gp = greater_pair(sigma, k)
        assert lp == CounterPair(gp.a + 1, gp.b + 1)
    with pytest.raises(ValueError):
        lesser_pair(sigma, 0)
    with pytest.raises(ValueError):
        greater_pair(sigma, 7)


def test_scan_trace_counter_invariant():
    # after the iteration for position i (i >= 2) the counters equal the
    # lesser pair at slot i-1 when the step emitted a lesser-side value and
    # the greater pair otherwise; the initial pair plays the role of slot n
    rng = random.Random(77)
    for _ in range(300):
        n = rng.randint(1, 8)
        letters = rng.sample(range(1, 40), n + 1)
        sigma, r = tuple(letters[:-1]), letters[-1]
        trace = increment_sequence_scan_trace(sigma, r)
        assert trace.sequence == increment_sequence(sigma, r)
        expected_initial = (
            lesser_pair(sigma, n) if sigma[-1] < r else greater_pair(sigma, n)
        )
        assert trace.initial == expected_initial
        for step in trace.steps:
            if step.index == 1:
                continue
            pair = step.counters
            if step.branch in ("a", "c"):
                assert pair == lesser_pair(sigma, step.index - 1)
            else:
                assert step.branch in ("b", "d")
                assert pair == greater_pair(sigma, step.index - 1)
        # the two counters never cross by more than one
        pairs = [trace.initial] + [s.counters for s in trace.steps]
        assert all(p.a <= p.b + 1 for p in pairs)


def test_segments():
    found = segments((1, 7, 6, 2, 8, 3, 4), 5)
    kinds = [(s.kind, s.start, s.stop) for s in found]
    assert kinds == [
        ("lesser", 1, 1),
        ("greater", 2, 3),
        ("lesser", 4, 4),
        ("greater", 5, 5),
        ("lesser", 6, 7),
    ]
    found = segments((5, 7, 6, 8, 3, 1, 2), 4)
    assert [(s.kind, s.start, s.stop) for s in found] == [
        ("greater", 1, 4),
        ("lesser", 5, 7),
    ]
    assert segments((), 5) == []
    with pytest.raises(ValueError):
        segments((1, 5, 2), 5)  # reference letter occurs in the word


def test_prefix_shift_under_one_insertion():
    # inserting p at slot j then asking about q keeps the first j increments
    # as a set, shifted by one exactly when q is larger than p
    tau = (4, 3, 6, 1, 5, 2)
    assert increment_sequence(tau, 8) == (4, 3, 5, 2, 6, 1, 0)
    assert increment_sequence(insert_at(tau, 5, 8), 7) == (5, 4, 6, 3, 2, 7, 1, 0)
    assert increment_sequence(tau, 7) == (4, 3, 5, 2, 6, 1, 0)
    assert increment_sequence(insert_at(tau, 5, 7), 8) == (5, 4, 6, 3, 7, 2, 1, 0)
    rng = random.Random(5150)
    for _ in range(200):
        n = rng.randint(0, 8)
        letters = rng.sample(range(1, 50), n + 2)
        body, p, q = tuple(letters[:n]), letters[n], letters[n + 1]
        j = rng.randint(1, n + 1)
        shift = 1 if q > p else 0
        before = increment_sequence(body, p)[:j]
        after = increment_sequence(insert_at(body, j, p), q)[:j]
        assert {x + shift for x in before} == set(after)
