"""Combinatorial conversion between carrier vectors and reduced spectra.

Both directions use one formula.  For an index set ``S = {s_1 < ... < s_k}``
the output entry ``i`` is ``XOR_j C(i, s_j) mod 2``, with terms for
``s_j > i`` dropped.  Entries below ``s_1`` are 0 and entry ``s_1`` is 1, so
only indices ``s_1 + 1 .. n`` are charged to the operation counter.

Polynomial numbers in, carrier vector out::

    >>> carrier_from_single(6, 2).vector.to_string()
    '0011001'

Valued numbers in, reduced spectrum out::

    >>> spectrum_from_set(7, [2, 3]).vector.to_string()
    '00100010'
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .core import ReducedVector, check_index_set
from .lucas import ParityCheckCounter, binom_parity, cost_bit_length

__all__ = [
    "TransformResult",
    "carrier_from_single",
    "carrier_from_set",
    "spectrum_from_single",
    "spectrum_from_set",
    "transform_vector",
]


@dataclass(frozen=True)
class TransformResult:
    vector: ReducedVector
    ops: ParityCheckCounter = field(default_factory=ParityCheckCounter)


def _odd_terms(i: int, active: Sequence[int], support: int) -> int:
    """Parity of the number of ``s`` in ``active`` with ``C(i, s)`` odd.

    ``support`` is ``active`` packed as a bitset.  Whichever side is
    smaller gets walked: the active terms, or the submasks of ``i``.
    """
    if len(active) <= (1 << bin(i).count("1")):
        acc = 0
        for s in active:
            if i & s == s:
                acc ^= 1
        return acc
    acc = 0
    sub = i
    while True:
        acc ^= (support >> sub) & 1
        if sub == 0:
            return acc
        sub = (sub - 1) & i


def _combinatorial(n: int, indices: Sequence[int]) -> TransformResult:
    indices = list(indices)
    check_index_set(n, indices)
    if not indices:
        raise ValueError("index set must be non-empty")
    first = indices[0]

    # Entry `first` has the single surviving term C(first, first); evaluated,
    # not charged, and checked against the expected leading 1.
    lead = 0
    for s in indices:
        if s > first:
            break
        lead ^= binom_parity(first, s)
    assert lead == 1, "leading entry of a combinatorial transform must be 1"
    bits = 1 << first

    # Each live term C(i, s) is charged cost_bit_length(s) comparisons, and
    # k live terms need k - 1 XORs to combine; terms with s > i are free.
    costs = [cost_bit_length(s) for s in indices]
    checks = xors = 0
    live = 0
    charge = 0
    support = 0
    for i in range(first + 1, n + 1):
        while live < len(indices) and indices[live] <= i:
            charge += costs[live]
            support |= 1 << indices[live]
            live += 1
        checks += charge
        xors += live - 1
        if _odd_terms(i, indices[:live], support):
            bits |= 1 << i
    return TransformResult(ReducedVector(n, bits), ParityCheckCounter(checks, xors))


def carrier_from_single(n: int, b: int) -> TransformResult:
    """Carrier vector of the homogeneous function ``E_n^b``."""
    if not 0 <= b <= n:
        raise ValueError(f"degree {b} outside [0, {n}]")
    return _combinatorial(n, [b])


def carrier_from_set(n: int, degrees: Sequence[int]) -> TransformResult:
    """Carrier vector of the function whose ANF holds every monomial of each
    degree in ``degrees`` (sorted ascending, non-empty)."""
    return _combinatorial(n, degrees)


def spectrum_from_single(n: int, a: int) -> TransformResult:
    """Reduced spectrum of the elementary function true only on weight ``a``."""
    if not 0 <= a <= n:
        raise ValueError(f"weight {a} outside [0, {n}]")
    return _combinatorial(n, [a])


def spectrum_from_set(n: int, weights: Sequence[int]) -> TransformResult:
    return _combinatorial(n, weights)


def transform_vector(v: ReducedVector) -> TransformResult:
    """Map a carrier vector to its spectrum or a spectrum to its carrier.

    The mod-2 binomial matrix is its own inverse, so one call serves both
    directions.  The all-zero vector maps to itself with no operations.
    """
    ones = v.indices()
    if not ones:
        return TransformResult(ReducedVector.zeros(v.n))
    return _combinatorial(v.n, ones)
