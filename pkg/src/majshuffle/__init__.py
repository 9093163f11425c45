"""Permutation statistics, insertion-increment scans, shuffle bijections,
and exact q-polynomial identities."""

from .bijections import (
    InsertionTrace,
    TraceStep,
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
from .harness import (
    RunConfig,
    VerificationReport,
    render_report,
    report_from_json,
    report_to_json,
    verify_garsia_gessel,
    verify_idc,
    verify_insertion_bijection,
    verify_lemma41,
    verify_macmahon,
    verify_mis,
    verify_theorem11,
)
from .mis import (
    CounterPair,
    ScanStep,
    ScanTrace,
    Segment,
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
from .qpoly import (
    ONE,
    ZERO,
    QPolynomial,
    divide_exact,
    inv_generating_function,
    maj_generating_function,
    partition_gf,
    q_binomial,
    q_binomial_by_division,
    q_factorial,
    q_integer,
    q_multinomial,
)
from .words import (
    Word,
    delete_at,
    descent_set,
    descents_from,
    enumerate_shuffles,
    flatten_to_multiset,
    format_word,
    from_inversion_sequence,
    insert_at,
    inv,
    inverse_descent_set,
    inversion_sequence,
    maj,
    parse_word,
)

__version__ = "0.1.0"

__all__ = [
    "CounterPair",
    "InsertionTrace",
    "ONE",
    "QPolynomial",
    "RunConfig",
    "ScanStep",
    "ScanTrace",
    "Segment",
    "TraceStep",
    "VerificationReport",
    "Word",
    "ZERO",
    "bounded_partitions",
    "build_by_increments",
    "class_inv_to_maj",
    "delete_at",
    "descent_set",
    "descents_from",
    "divide_exact",
    "enumerate_shuffles",
    "flatten_to_multiset",
    "format_word",
    "from_inversion_sequence",
    "greater_pair",
    "increment_formula_larger",
    "increment_formula_smaller",
    "increment_sequence",
    "increment_sequence_scan",
    "increment_sequence_scan_trace",
    "insert_at",
    "inv",
    "inv_generating_function",
    "inv_to_maj",
    "inverse_descent_set",
    "inversion_partition",
    "inversion_sequence",
    "is_interval_permutation",
    "lesser_pair",
    "maj",
    "maj_generating_function",
    "maj_to_inv",
    "major_increment",
    "parse_word",
    "partition_gf",
    "partition_to_shuffle",
    "q_binomial",
    "q_binomial_by_division",
    "q_factorial",
    "q_integer",
    "q_multinomial",
    "render_report",
    "report_from_json",
    "report_to_json",
    "scan_for_larger",
    "scan_for_smaller",
    "segments",
    "shuffle_to_partition",
    "shuffle_with_inversion_partition",
    "verify_garsia_gessel",
    "verify_idc",
    "verify_insertion_bijection",
    "verify_lemma41",
    "verify_macmahon",
    "verify_mis",
    "verify_theorem11",
]
