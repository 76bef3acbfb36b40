"""Polynomial expansion of symmetric Boolean functions.

Converts between carrier vectors and reduced Zhegalkin spectra with the
bit-submask parity rule, and ships two independent references (transeunt
triangle, brute-force ANF) plus an operation-counting benchmark harness.
"""
from .core import (
    POLYNOMIAL,
    VALUED,
    Assignment,
    FunctionSpec,
    ReducedVector,
    TermLimitExceeded,
    anf_term_count,
    anf_terms,
    eval_carrier,
    eval_spectrum,
    format_anf,
    spec_from_vector,
    vector_from_spec,
)
from .lucas import (
    ParityCheckCounter,
    binom_parity,
    binom_parity_counted,
    bit_length,
    cost_bit_length,
    pascal_parity_oracle,
)
from .transform import (
    TransformResult,
    carrier_from_set,
    carrier_from_single,
    spectrum_from_set,
    spectrum_from_single,
    transform_vector,
)
from .baseline import (
    TriangleRun,
    anf_oracle,
    triangle_transform,
    truth_table_eval_oracle,
    verify_equivalence,
)

__version__ = "0.1.0"
