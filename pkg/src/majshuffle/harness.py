"""Desk-scale exhaustive verification suites and the command-line front end.

Each verify_* function sweeps a family of identities at a scale set by
RunConfig and returns a VerificationReport whose content (cases, failures,
verdict) is a pure function of (n_max, seed, sample_count); wall-clock time
is the only nondeterministic field. Sweeps are split into independent units
so they can optionally fan out over processes; results are merged in unit
order either way.
"""

from __future__ import annotations

import argparse
import dataclasses
import functools
import itertools
import json
import math
import random
import sys
import time
import warnings
from typing import Callable, Iterator, Sequence

from .bijections import (
    bounded_partitions,
    build_by_increments,
    class_inv_to_maj,
    inv_to_maj,
    inversion_partition,
    maj_to_inv,
    partition_to_shuffle,
    shuffle_to_partition,
    shuffle_with_inversion_partition,
)
from .mis import (
    CounterPair,
    greater_pair,
    increment_formula_larger,
    increment_formula_smaller,
    increment_sequence,
    increment_sequence_scan,
    is_interval_permutation,
    lesser_pair,
    scan_for_larger,
    scan_for_smaller,
    segments,
)
from .qpoly import (
    QPolynomial,
    inv_generating_function,
    maj_generating_function,
    partition_gf,
    q_binomial,
    q_factorial,
    q_multinomial,
)
from .words import (
    descent_set,
    enumerate_shuffles,
    flatten_to_multiset,
    format_word,
    insert_at,
    inv,
    inverse_descent_set,
    maj,
    parse_word,
)

N_MAX_CAP = 9
_FAILURE_CAP = 25  # per unit; keeps reports bounded when something breaks


@dataclasses.dataclass
class RunConfig:
    n_max: int = 7
    seed: int = 12345
    sample_count: int = 1000
    output: str = "text"
    parallelism: int = 1

    def __post_init__(self):
        if self.n_max < 1:
            raise ValueError("n_max must be at least 1")
        if self.sample_count < 0:
            raise ValueError("sample_count must be nonnegative")
        if self.parallelism < 1:
            raise ValueError("parallelism must be at least 1")
        if self.output not in ("text", "json"):
            raise ValueError("output must be 'text' or 'json'")


@dataclasses.dataclass
class VerificationReport:
    suite: str
    parameters: dict
    cases_checked: int
    failures: list
    elapsed: float
    verdict: str


def report_to_json(report: VerificationReport) -> str:
    return json.dumps(dataclasses.asdict(report), sort_keys=True, separators=(",", ":"))


def report_from_json(text: str) -> VerificationReport:
    data = json.loads(text)
    return VerificationReport(**data)


def render_report(report: VerificationReport) -> str:
    lines = [
        f"suite={report.suite} cases={report.cases_checked} "
        f"failures={len(report.failures)} verdict={report.verdict} "
        f"elapsed={report.elapsed:.3f}s params={json.dumps(report.parameters, sort_keys=True)}"
    ]
    for f in report.failures[:10]:
        lines.append("counterexample: " + json.dumps(f, sort_keys=True))
    if len(report.failures) > 10:
        lines.append(f"... {len(report.failures) - 10} further counterexamples omitted")
    return "\n".join(lines)


def _effective_n_max(n: int) -> int:
    if n > N_MAX_CAP:
        warnings.warn(
            f"n_max={n} exceeds the factorial-growth cap; clamped to {N_MAX_CAP}",
            RuntimeWarning,
            stacklevel=3,
        )
        return N_MAX_CAP
    return n


def _map_units(fn: Callable, units: list, workers: int) -> list:
    if workers <= 1 or len(units) <= 1:
        return [fn(u) for u in units]
    import concurrent.futures

    chunk = max(1, len(units) // (workers * 4))
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, units, chunksize=chunk))


def _finish(suite: str, params: dict, results: list, start: float) -> VerificationReport:
    cases = sum(r[0] for r in results)
    failures = [f for r in results for f in r[1]]
    elapsed = round(time.perf_counter() - start, 6)
    return VerificationReport(
        suite, params, cases, failures, elapsed, "pass" if not failures else "fail"
    )


def _fail(failures: list, check: str, case: dict, expected=None, actual=None) -> None:
    if len(failures) >= _FAILURE_CAP:
        return
    rec = {"check": check, "case": case}
    if expected is not None:
        rec["expected"] = expected
    if actual is not None:
        rec["actual"] = actual
    failures.append(rec)


# ---------------------------------------------------------------------------
# shared enumeration helpers


def _distinct_permutations(start: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    # multiset permutations in lexicographic order; start must be sorted
    w = list(start)
    n = len(w)
    if n == 0:
        yield ()
        return
    while True:
        yield tuple(w)
        i = n - 2
        while i >= 0 and w[i] >= w[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while w[j] <= w[i]:
            j -= 1
        w[i], w[j] = w[j], w[i]
        w[i + 1 :] = w[:i:-1]


def _multi_shuffles(blocks: Sequence[tuple[int, ...]]) -> Iterator[tuple[int, ...]]:
    # all interleavings of several disjoint words, via repeated two-word shuffles
    def extend(stream, blk):
        for w in stream:
            yield from enumerate_shuffles(w, blk)

    out: Iterator[tuple[int, ...]] = iter(((),))
    for blk in blocks:
        out = extend(out, blk)
    return out


def _compositions(n: int, max_parts: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first, max_parts - 1):
            yield (first,) + rest


def _ordered_assignments(
    letters: tuple[int, ...], sizes: tuple[int, ...]
) -> Iterator[tuple[tuple[int, ...], ...]]:
    if not sizes:
        yield ()
        return
    for head in itertools.combinations(letters, sizes[0]):
        chosen = set(head)
        rest = tuple(x for x in letters if x not in chosen)
        for tail in _ordered_assignments(rest, sizes[1:]):
            yield (head,) + tail


@functools.lru_cache(maxsize=None)
def _partitions_sorted(bound: int, count: int) -> tuple[tuple[int, ...], ...]:
    return tuple(bounded_partitions(bound, count))


@functools.lru_cache(maxsize=None)
def _qmulti(n: int, parts: tuple[int, ...]) -> QPolynomial:
    return q_multinomial(n, parts)


def _consecutive_blocks(bounds: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple(range(lo + 1, hi + 1)) for lo, hi in zip(bounds, bounds[1:])
    )


# ---------------------------------------------------------------------------
# suite: increment sequences


def _mis_unit(args: tuple) -> tuple[int, list]:
    (n,) = args
    cases = 0
    failures: list = []
    if n == 1:
        seq = increment_sequence((), 1)
        if seq != (0,) or not is_interval_permutation(seq):
            _fail(failures, "empty_word", {"n": 1}, [0], list(seq))
        return 1, failures
    m = n - 1
    full = range(1, n + 1)
    for t in full:
        letters = [x for x in full if x != t]
        for sigma in itertools.permutations(letters):
            cases += 1
            direct = increment_sequence(sigma, t)
            case = {"sigma": list(sigma), "letter": t}
            if sorted(direct) != list(range(n)):
                _fail(failures, "not_a_permutation_of_range", case, actual=list(direct))
            if not is_interval_permutation(direct):
                _fail(failures, "prefix_not_interval", case, actual=list(direct))
            scan = increment_sequence_scan(sigma, t)
            if scan != direct:
                _fail(failures, "scan_vs_direct", case, list(direct), list(scan))
    # extreme letters: same word, both ends of the letter range
    for sigma in itertools.permutations(range(2, n + 1)):
        cases += 1
        low = increment_sequence(sigma, 1)
        high = increment_sequence(sigma, n + 1)
        case = {"sigma": list(sigma)}
        if any(high[k] != low[k] + 1 for k in range(m)):
            _fail(failures, "extreme_shift_by_one", case, list(low), list(high))
        if scan_for_larger(sigma) != high:
            _fail(failures, "scan_for_larger", case, list(high), list(scan_for_larger(sigma)))
        if scan_for_smaller(sigma) != low:
            _fail(failures, "scan_for_smaller", case, list(low), list(scan_for_smaller(sigma)))
        for k in range(1, n + 1):
            if increment_formula_larger(sigma, k) != high[k - 1]:
                _fail(failures, "formula_larger", {**case, "k": k}, high[k - 1])
            if increment_formula_smaller(sigma, k) != low[k - 1]:
                _fail(failures, "formula_smaller", {**case, "k": k}, low[k - 1])
        for k in range(1, m + 1):
            lp, gp = lesser_pair(sigma, k), greater_pair(sigma, k)
            if lp != CounterPair(gp.a + 1, gp.b + 1):
                _fail(failures, "pair_offset", {**case, "k": k}, list(gp), list(lp))
    return cases, failures


def verify_mis(cfg: RunConfig) -> VerificationReport:
    """Scan vs direct increments, permutation and prefix-interval structure,
    extreme-letter closed forms, and the counter-pair offset."""
    start = time.perf_counter()
    n_max = _effective_n_max(cfg.n_max)
    units = [(n,) for n in range(1, n_max + 1)]
    results = _map_units(_mis_unit, units, cfg.parallelism)
    return _finish("mis", {"n_max": n_max}, results, start)


# ---------------------------------------------------------------------------
# suite: two-word shuffles vs bounded partitions


def _t11_check_pair(theta: tuple, pi: tuple, failures: list) -> None:
    n = len(theta) + len(pi)
    b, a = len(theta), len(pi)
    base = maj(theta) + maj(pi)
    case = {"theta": list(theta), "pi": list(pi)}
    shuffles = list(enumerate_shuffles(theta, pi))
    gf = maj_generating_function(shuffles)
    expected = q_binomial(n, a).shift(base)
    if gf != expected:
        _fail(failures, "shuffle_maj_gf", case, list(expected.coeffs), list(gf.coeffs))
    parts_seen = []
    for s in shuffles:
        parts, _trace = shuffle_to_partition(theta, pi, s)
        if maj(s) != base + sum(parts):
            _fail(
                failures,
                "maj_decomposition",
                {**case, "sigma": list(s)},
                maj(s),
                base + sum(parts),
            )
        if partition_to_shuffle(theta, pi, parts) != s:
            _fail(failures, "round_trip", {**case, "sigma": list(s)}, list(s))
        parts_seen.append(parts)
    if tuple(sorted(parts_seen)) != _partitions_sorted(b, a):
        _fail(failures, "image_not_all_partitions", case)


def _t11_unit(args: tuple) -> tuple[int, list]:
    kind = args[0]
    cases = 0
    failures: list = []
    if kind == "exh":
        _, n, a = args
        universe = tuple(range(1, n + 1))
        for chosen in itertools.combinations(universe, a):
            rest = tuple(x for x in universe if x not in chosen)
            for pi in itertools.permutations(chosen):
                for theta in itertools.permutations(rest):
                    cases += 1
                    _t11_check_pair(theta, pi, failures)
    else:
        _, n, count, seed_tag = args
        rng = random.Random(seed_tag)
        universe = range(1, n + 1)
        for _ in range(count):
            cases += 1
            a = rng.randint(0, n)
            pi = tuple(rng.sample(universe, a))
            rest = [x for x in universe if x not in set(pi)]
            theta = tuple(rng.sample(rest, n - a))
            _t11_check_pair(theta, pi, failures)
    return cases, failures


def verify_theorem11(cfg: RunConfig) -> VerificationReport:
    """Two-word shuffle classes: maj generating function against the shifted
    Gaussian binomial, and the partition compression as a checked bijection."""
    start = time.perf_counter()
    n_max = _effective_n_max(cfg.n_max)
    exhaustive_max = min(n_max, 6)
    units: list = [
        ("exh", n, a) for n in range(1, exhaustive_max + 1) for a in range(n + 1)
    ]
    chunk = 500
    for n in range(exhaustive_max + 1, n_max + 1):
        remaining = cfg.sample_count
        idx = 0
        while remaining > 0:
            take = min(chunk, remaining)
            units.append(("smp", n, take, f"{cfg.seed}/theorem11/{n}/{idx}"))
            remaining -= take
            idx += 1
    results = _map_units(_t11_unit, units, cfg.parallelism)
    params = {
        "n_max": n_max,
        "exhaustive_max": exhaustive_max,
        "seed": cfg.seed,
        "sample_count": cfg.sample_count,
    }
    return _finish("theorem11", params, results, start)


# ---------------------------------------------------------------------------
# suite: multi-block shuffles


def _gg_check_case(blocks: tuple[tuple[int, ...], ...], failures: list) -> None:
    n = sum(len(b) for b in blocks)
    sizes = tuple(len(b) for b in blocks)
    base = sum(maj(b) for b in blocks)
    gf = maj_generating_function(_multi_shuffles(blocks))
    expected = _qmulti(n, sizes).shift(base)
    if gf != expected:
        _fail(
            failures,
            "multi_shuffle_maj_gf",
            {"blocks": [list(b) for b in blocks]},
            list(expected.coeffs),
            list(gf.coeffs),
        )


def _gg_unit(args: tuple) -> tuple[int, list]:
    kind = args[0]
    cases = 0
    failures: list = []
    if kind == "exh":
        _, n, comp = args
        letters = tuple(range(1, n + 1))
        for assignment in _ordered_assignments(letters, comp):
            for orders in itertools.product(
                *[itertools.permutations(block) for block in assignment]
            ):
                cases += 1
                _gg_check_case(orders, failures)
    else:
        _, n, count, seed_tag = args
        rng = random.Random(seed_tag)
        for _ in range(count):
            cases += 1
            k = rng.randint(1, min(4, n))
            cuts = sorted(rng.sample(range(1, n), k - 1))
            sizes = tuple(b - a for a, b in zip((0, *cuts), (*cuts, n)))
            scrambled = rng.sample(range(1, n + 1), n)
            blocks = []
            at = 0
            for s in sizes:
                blocks.append(tuple(scrambled[at : at + s]))
                at += s
            _gg_check_case(tuple(blocks), failures)
    return cases, failures


def verify_garsia_gessel(cfg: RunConfig) -> VerificationReport:
    """Ordered multi-block shuffles (up to four blocks): maj generating
    function against the shifted Gaussian multinomial."""
    start = time.perf_counter()
    n_max = _effective_n_max(cfg.n_max)
    exhaustive_max = min(n_max, 6)
    units: list = [
        ("exh", n, comp)
        for n in range(1, exhaustive_max + 1)
        for comp in _compositions(n, 4)
    ]
    chunk = 200
    for n in range(exhaustive_max + 1, n_max + 1):
        remaining = cfg.sample_count
        idx = 0
        while remaining > 0:
            take = min(chunk, remaining)
            units.append(("smp", n, take, f"{cfg.seed}/gg/{n}/{idx}"))
            remaining -= take
            idx += 1
    results = _map_units(_gg_unit, units, cfg.parallelism)
    params = {
        "n_max": n_max,
        "exhaustive_max": exhaustive_max,
        "max_blocks": 4,
        "seed": cfg.seed,
        "sample_count": cfg.sample_count,
    }
    return _finish("garsia-gessel", params, results, start)


# ---------------------------------------------------------------------------
# suite: multiset equidistribution


def _mac_unit(args: tuple) -> tuple[int, list]:
    n, comp, check_flatten = args
    cases = 0
    failures: list = []
    start_word = tuple(
        letter for letter, size in enumerate(comp, start=1) for _ in range(size)
    )
    case = {"n": n, "composition": list(comp)}
    words = _distinct_permutations(start_word)
    collected: list | None = [] if check_flatten else None
    maj_coeffs: list[int] = []
    inv_coeffs: list[int] = []
    for w in words:
        cases += 1
        for coeffs, s in ((maj_coeffs, maj(w)), (inv_coeffs, inv(w))):
            if s >= len(coeffs):
                coeffs.extend([0] * (s + 1 - len(coeffs)))
            coeffs[s] += 1
        if collected is not None:
            collected.append(w)
    gf_maj, gf_inv = QPolynomial(maj_coeffs), QPolynomial(inv_coeffs)
    expected = _qmulti(n, comp)
    if gf_maj != expected:
        _fail(failures, "multiset_maj_gf", case, list(expected.coeffs), list(gf_maj.coeffs))
    if gf_inv != expected:
        _fail(failures, "multiset_inv_gf", case, list(expected.coeffs), list(gf_inv.coeffs))
    if comp == (1,) * n and gf_maj != q_factorial(n):
        _fail(failures, "symmetric_group_gf", case, list(q_factorial(n).coeffs))
    if check_flatten:
        bounds = tuple(itertools.accumulate((0,) + comp))
        blocks = _consecutive_blocks(bounds)
        flattened = []
        for s in _multi_shuffles(blocks):
            f = flatten_to_multiset(s, comp)
            if maj(f) != maj(s) or inv(f) != inv(s):
                _fail(
                    failures,
                    "flatten_preserves_stats",
                    {**case, "shuffle": list(s)},
                    [maj(s), inv(s)],
                    [maj(f), inv(f)],
                )
            flattened.append(f)
        if sorted(flattened) != collected:
            _fail(failures, "flatten_not_bijective", case)
    return cases, failures


def verify_macmahon(cfg: RunConfig) -> VerificationReport:
    """maj and inv equidistribution over multiset permutations against the
    Gaussian multinomial, plus the flattening correspondence with shuffles of
    increasing blocks."""
    start = time.perf_counter()
    n_max = _effective_n_max(cfg.n_max)
    flatten_max = min(n_max, 6)
    units = [
        (n, comp, n <= flatten_max)
        for n in range(1, n_max + 1)
        for comp in _compositions(n, n)
    ]
    results = _map_units(_mac_unit, units, cfg.parallelism)
    params = {"n_max": n_max, "flatten_max": flatten_max}
    return _finish("macmahon", params, results, start)


# ---------------------------------------------------------------------------
# suite: insertion bijection inv -> maj


def _insertion_sweep(n: int, order: tuple[int, ...], failures: list) -> int:
    images = set()
    case = {"n": n, "order": list(order)}
    for sigma in itertools.permutations(range(1, n + 1)):
        tau = inv_to_maj(sigma, order)
        if maj(tau) != inv(sigma):
            _fail(
                failures,
                "maj_image_vs_inv",
                {**case, "sigma": list(sigma)},
                inv(sigma),
                maj(tau),
            )
        if maj_to_inv(tau, order) != sigma:
            _fail(failures, "insertion_round_trip", {**case, "sigma": list(sigma)})
        images.add(tau)
    if len(images) != math.factorial(n):
        _fail(failures, "not_a_bijection", case, math.factorial(n), len(images))
    return math.factorial(n)


def _insertion_unit(args: tuple) -> tuple[int, list]:
    kind = args[0]
    cases = 0
    failures: list = []
    if kind == "base":
        _, n = args
        cases += _insertion_sweep(n, tuple(range(1, n + 1)), failures)
    elif kind == "golden":
        golden = [
            ((6, 2, 5, 7, 4, 3, 1), tuple(range(1, 8)), (5, 4, 7, 2, 6, 3, 1)),
            ((6, 2, 5, 7, 4, 3, 1), (4, 2, 7, 3, 6, 1, 5), (6, 4, 5, 3, 7, 2, 1)),
        ]
        for sigma, order, expected in golden:
            cases += 1
            got = inv_to_maj(sigma, order)
            if got != expected:
                _fail(
                    failures,
                    "golden_build",
                    {"sigma": list(sigma), "order": list(order)},
                    list(expected),
                    list(got),
                )
            if maj_to_inv(expected, order) != sigma:
                _fail(failures, "golden_round_trip", {"order": list(order)})
    else:
        _, n_cap, count, seed_tag = args
        rng = random.Random(seed_tag)
        for _ in range(count):
            n = rng.randint(1, n_cap)
            order = tuple(rng.sample(range(1, n + 1), n))
            cases += _insertion_sweep(n, order, failures)
    return cases, failures


def verify_insertion_bijection(cfg: RunConfig) -> VerificationReport:
    """inv_to_maj as a checked bijection on the symmetric group for the
    increasing order, fixed golden orders, and sampled random orders."""
    start = time.perf_counter()
    n_cap = min(_effective_n_max(cfg.n_max), 6)
    units: list = [("base", n) for n in range(1, n_cap + 1)]
    units.append(("golden",))
    chunk = 100
    remaining = cfg.sample_count
    idx = 0
    while remaining > 0:
        take = min(chunk, remaining)
        units.append(("smp", n_cap, take, f"{cfg.seed}/insertion/{idx}"))
        remaining -= take
        idx += 1
    results = _map_units(_insertion_unit, units, cfg.parallelism)
    params = {"n_max": n_cap, "seed": cfg.seed, "sample_count": cfg.sample_count}
    return _finish("insertion", params, results, start)


# ---------------------------------------------------------------------------
# suite: prefix-set stability under one extra insertion


def _lemma41_check(
    tau: tuple[int, ...], p: int, q: int, j: int, seq_p: tuple[int, ...], failures: list
) -> None:
    bigger = insert_at(tau, j, p)
    seq_q = increment_sequence(bigger, q)
    shift = 1 if q > p else 0
    expected = {x + shift for x in seq_p[:j]}
    got = set(seq_q[:j])
    if expected != got:
        _fail(
            failures,
            "prefix_set_shift",
            {"tau": list(tau), "p": p, "q": q, "j": j},
            sorted(expected),
            sorted(got),
        )


def _lemma41_unit(args: tuple) -> tuple[int, list]:
    kind = args[0]
    cases = 0
    failures: list = []
    if kind == "exh":
        _, m = args
        universe = tuple(range(1, m + 3))
        for p in universe:
            for q in universe:
                if q == p:
                    continue
                rest = tuple(x for x in universe if x != p and x != q)
                for tau in itertools.permutations(rest):
                    seq_p = increment_sequence(tau, p)
                    for j in range(1, m + 2):
                        cases += 1
                        _lemma41_check(tau, p, q, j, seq_p, failures)
    else:
        _, count, len_max, seed_tag = args
        rng = random.Random(seed_tag)
        for _ in range(count):
            cases += 1
            m = rng.randint(7, len_max)
            letters = rng.sample(range(1, 1000), m + 2)
            p, q = letters[0], letters[1]
            tau = tuple(rng.sample(letters[2:], m))
            j = rng.randint(1, m + 1)
            _lemma41_check(tau, p, q, j, increment_sequence(tau, p), failures)
    return cases, failures


def verify_lemma41(cfg: RunConfig) -> VerificationReport:
    """Prefix-set behaviour of increment sequences under one extra insertion:
    the first j increments shift by one exactly when the later letter is
    larger, as sets."""
    start = time.perf_counter()
    n_max = _effective_n_max(cfg.n_max)
    exhaustive_max = min(6, n_max - 1)
    random_len_max = 12
    units: list = [("exh", m) for m in range(0, exhaustive_max + 1)]
    chunk = 250
    remaining = cfg.sample_count
    idx = 0
    while remaining > 0:
        take = min(chunk, remaining)
        units.append(("smp", take, random_len_max, f"{cfg.seed}/lemma41/{idx}"))
        remaining -= take
        idx += 1
    results = _map_units(_lemma41_unit, units, cfg.parallelism)
    params = {
        "exhaustive_max": exhaustive_max,
        "random_len_max": random_len_max,
        "seed": cfg.seed,
        "sample_count": cfg.sample_count,
    }
    return _finish("lemma41", params, results, start)


# ---------------------------------------------------------------------------
# suite: inverse-descent classes


def _idc_unit(args: tuple) -> tuple[int, list]:
    n, q = args
    cases = 0
    failures: list = []
    bounds = (0,) + q + (n,)
    sizes = tuple(hi - lo for lo, hi in zip(bounds, bounds[1:]))
    blocks = _consecutive_blocks(bounds)
    case = {"n": n, "q": list(q)}
    members = list(_multi_shuffles(blocks))
    gf_maj = maj_generating_function(members)
    gf_inv = inv_generating_function(members)
    expected = _qmulti(n, sizes)
    if gf_maj != expected:
        _fail(failures, "class_maj_gf", case, list(expected.coeffs), list(gf_maj.coeffs))
    if gf_inv != expected:
        _fail(failures, "class_inv_gf", case, list(expected.coeffs), list(gf_inv.coeffs))
    images = []
    by_class: dict[tuple, list] = {}
    for tau in members:
        cases += 1
        omega = class_inv_to_maj(q, tau)
        if maj(omega) != inv(tau):
            _fail(
                failures,
                "omega_maj_vs_inv",
                {**case, "tau": list(tau)},
                inv(tau),
                maj(omega),
            )
        ides_tau = inverse_descent_set(tau)
        if inverse_descent_set(omega) != ides_tau:
            _fail(
                failures,
                "omega_class_preserved",
                {**case, "tau": list(tau)},
                list(ides_tau),
                list(inverse_descent_set(omega)),
            )
        images.append(omega)
        by_class.setdefault(ides_tau, []).append(tau)
    if sorted(images) != sorted(members):
        _fail(failures, "omega_not_bijective", case)
    for ides, group in sorted(by_class.items()):
        if maj_generating_function(group) != inv_generating_function(group):
            _fail(
                failures,
                "exact_class_equidistribution",
                {**case, "ides": list(ides)},
            )
    return cases, failures


def verify_idc(cfg: RunConfig) -> VerificationReport:
    """Inverse-descent classes: maj/inv equidistribution of each class union,
    bijectivity of the composed map, and a pointwise check of each word's
    exact inverse descent set, which fails when the admissible set has two
    or more values; those counterexamples are reported, not suppressed."""
    start = time.perf_counter()
    n_max = _effective_n_max(cfg.n_max)
    units = [
        (n, q)
        for n in range(1, n_max + 1)
        for size in range(0, 4)
        for q in itertools.combinations(range(1, n), size)
    ]
    results = _map_units(_idc_unit, units, cfg.parallelism)
    params = {"n_max": n_max, "max_set_size": 3}
    return _finish("idc", params, results, start)


SUITES: dict[str, Callable[[RunConfig], VerificationReport]] = {
    "mis": verify_mis,
    "theorem11": verify_theorem11,
    "garsia-gessel": verify_garsia_gessel,
    "macmahon": verify_macmahon,
    "insertion": verify_insertion_bijection,
    "lemma41": verify_lemma41,
    "idc": verify_idc,
}


# ---------------------------------------------------------------------------
# command line


def _parse_int_list(text: str) -> tuple[int, ...]:
    stripped = text.strip()
    if not stripped:
        return ()
    return tuple(int(t) for t in stripped.replace(",", " ").split())


def _emit(args, text_value: str, json_value) -> None:
    if args.json:
        print(json.dumps(json_value))
    else:
        print(text_value)


def _cmd_stat(args) -> int:
    w = parse_word(args.word)
    if args.statistic == "maj":
        value: object = maj(w)
    elif args.statistic == "inv":
        value = inv(w)
    elif args.statistic == "des":
        value = descent_set(w)
    else:
        value = inverse_descent_set(w)
    if isinstance(value, tuple):
        _emit(args, " ".join(map(str, value)), list(value))
    else:
        _emit(args, str(value), value)
    return 0


def _cmd_mis(args) -> int:
    w = parse_word(args.word)
    r = args.r
    if r <= 0:
        raise ValueError("the inserted letter must be a positive integer")
    if args.algorithm == "oracle":
        seq = increment_sequence(w, r)
    elif args.algorithm == "lg":
        seq = increment_sequence_scan(w, r)
    elif args.algorithm == "l":
        if w and r <= max(w):
            raise ValueError("algorithm l needs a letter larger than the whole word")
        seq = scan_for_larger(w)
    else:
        if w and r >= min(w):
            raise ValueError("algorithm g needs a letter smaller than the whole word")
        seq = scan_for_smaller(w)
    _emit(args, " ".join(map(str, seq)), list(seq))
    return 0


def _cmd_segments(args) -> int:
    w = parse_word(args.word)
    if args.r <= 0:
        raise ValueError("the reference letter must be a positive integer")
    segs = segments(w, args.r)
    text = " | ".join(format_word(w[s.start - 1 : s.stop]) for s in segs)
    _emit(
        args,
        text,
        [
            {
                "kind": s.kind,
                "start": s.start,
                "stop": s.stop,
                "letters": list(w[s.start - 1 : s.stop]),
            }
            for s in segs
        ],
    )
    return 0


def _format_partition(parts: Sequence[int]) -> str:
    return ",".join(map(str, parts))


def _cmd_phi(args) -> int:
    theta = parse_word(args.theta)
    pi = parse_word(args.pi)
    sigma = parse_word(args.sigma)
    parts, trace = shuffle_to_partition(theta, pi, sigma)
    if args.json:
        print(
            json.dumps(
                {
                    "partition": list(parts),
                    "trace": trace.records(),
                    "base": list(trace.base),
                }
            )
        )
    else:
        print(f"partition: {_format_partition(parts)}")
        for rec in trace.records():
            print(
                f"i={rec['i']} k={rec['k']} m={rec['m']} t={rec['t']} "
                f"sigma={format_word(rec['sigma'])}"
            )
        print(f"base: {format_word(trace.base)}")
    return 0


def _cmd_phi_inv(args) -> int:
    theta = parse_word(args.theta)
    pi = parse_word(args.pi)
    parts = _parse_int_list(args.lam)
    sigma = partition_to_shuffle(theta, pi, parts)
    _emit(args, format_word(sigma), list(sigma))
    return 0


def _cmd_psi(args) -> int:
    w = parse_word(args.word)
    parts = inversion_partition(args.b, args.a, w)
    _emit(args, _format_partition(parts), list(parts))
    return 0


def _cmd_psi_inv(args) -> int:
    parts = _parse_int_list(args.lam)
    w = shuffle_with_inversion_partition(args.b, args.a, parts)
    _emit(args, format_word(w), list(w))
    return 0


def _cmd_omega(args) -> int:
    w = parse_word(args.word)
    q = _parse_int_list(args.q)
    out = class_inv_to_maj(q, w)
    _emit(args, format_word(out), list(out))
    return 0


def _cmd_build(args) -> int:
    order = parse_word(args.order)
    targets = _parse_int_list(args.targets)
    w = build_by_increments(order, targets)
    _emit(args, format_word(w), list(w))
    return 0


def _cmd_inv2maj(args) -> int:
    w = parse_word(args.word)
    order = parse_word(args.order)
    out = inv_to_maj(w, order)
    _emit(args, format_word(out), list(out))
    return 0


def _cmd_maj2inv(args) -> int:
    w = parse_word(args.word)
    order = parse_word(args.order)
    out = maj_to_inv(w, order)
    _emit(args, format_word(out), list(out))
    return 0


def _cmd_qpoly(args) -> int:
    if args.which == "qfact":
        poly = q_factorial(args.n)
    elif args.which == "qbinom":
        poly = q_binomial(args.n, args.k)
    elif args.which == "qmultinom":
        poly = q_multinomial(args.n, _parse_int_list(args.parts))
    else:
        poly = partition_gf(args.b, args.a)
    _emit(args, str(poly), {"coeffs": list(poly.coeffs)})
    return 0


def _cmd_verify(args) -> int:
    cfg = RunConfig(
        n_max=args.n,
        seed=args.seed,
        sample_count=args.samples,
        output="json" if args.json else "text",
        parallelism=args.workers,
    )
    report = SUITES[args.suite](cfg)
    if args.json:
        print(report_to_json(report))
    else:
        print(render_report(report))
    return 0 if report.verdict == "pass" else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="majshuffle",
        description="Permutation statistics, insertion-increment scans, "
        "shuffle/partition bijections, and exact q-identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=fn)
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        return p

    p = add("stat", _cmd_stat, help="maj, inv, descent set or inverse descent set")
    p.add_argument("statistic", choices=["maj", "inv", "des", "ides"])
    p.add_argument("word")

    p = add("mis", _cmd_mis, help="insertion increments of the major index")
    p.add_argument("word")
    p.add_argument("r", type=int)
    p.add_argument("--algorithm", choices=["lg", "oracle", "l", "g"], default="lg")

    p = add("segments", _cmd_segments, help="maximal runs on one side of a letter")
    p.add_argument("word")
    p.add_argument("r", type=int)

    p = add("phi", _cmd_phi, help="compress a shuffle into a bounded partition")
    p.add_argument("--theta", required=True)
    p.add_argument("--pi", required=True)
    p.add_argument("--sigma", required=True)

    p = add("phi-inv", _cmd_phi_inv, help="rebuild the shuffle of a partition")
    p.add_argument("--theta", required=True)
    p.add_argument("--pi", required=True)
    p.add_argument("--lambda", dest="lam", required=True)

    p = add("psi", _cmd_psi, help="right-count partition of a two-block shuffle")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("word")

    p = add("psi-inv", _cmd_psi_inv, help="two-block shuffle with given right counts")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)

    p = add("omega", _cmd_omega, help="inv-to-maj map on an inverse-descent class union")
    p.add_argument("--q", required=True)
    p.add_argument("word")

    p = add("build", _cmd_build, help="insert letters realising given maj gains")
    p.add_argument("--order", required=True)
    p.add_argument("--targets", required=True)

    p = add("inv2maj", _cmd_inv2maj, help="bijection sending inv to maj")
    p.add_argument("--order", required=True)
    p.add_argument("word")

    p = add("maj2inv", _cmd_maj2inv, help="inverse of inv2maj")
    p.add_argument("--order", required=True)
    p.add_argument("word")

    p = sub.add_parser(
        "qpoly", help="q-factorial, q-binomial, q-multinomial, partition gf"
    )
    p.set_defaults(func=_cmd_qpoly)
    q = p.add_subparsers(dest="which", required=True)
    qp = q.add_parser("qfact")
    qp.add_argument("n", type=int)
    qp.add_argument("--json", action="store_true")
    qp = q.add_parser("qbinom")
    qp.add_argument("n", type=int)
    qp.add_argument("k", type=int)
    qp.add_argument("--json", action="store_true")
    qp = q.add_parser("qmultinom")
    qp.add_argument("n", type=int)
    qp.add_argument("parts")
    qp.add_argument("--json", action="store_true")
    qp = q.add_parser("partgf")
    qp.add_argument("b", type=int)
    qp.add_argument("a", type=int)
    qp.add_argument("--json", action="store_true")

    p = add("verify", _cmd_verify, help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--n", type=int, default=7, help="size ceiling (clamped at 9)")
    p.add_argument("--seed", type=int, default=12345)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--workers", type=int, default=1)

    return parser


def cli_main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors, 0 for --help
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
