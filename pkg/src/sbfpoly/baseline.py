"""Reference implementations used to check the combinatorial transform.

``triangle_transform`` is the transeunt triangle: repeated adjacent XORs,
reading the leading entry of every level.  ``anf_oracle`` ignores symmetry
altogether, builds the full ``2**n`` truth table, and runs the subset
Moebius transform over GF(2).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .core import VALUED, Assignment, FunctionSpec, ReducedVector
from .transform import transform_vector

__all__ = [
    "TriangleRun",
    "SymmetryViolation",
    "ORACLE_BOUND",
    "triangle_transform",
    "truth_table",
    "anf_oracle",
    "truth_table_eval_oracle",
    "Mismatch",
    "VerifyReport",
    "three_way_check",
    "verify_equivalence",
]

ORACLE_BOUND = 16


@dataclass(frozen=True)
class TriangleRun:
    output: ReducedVector
    xor_ops: int


def triangle_transform(v: ReducedVector) -> TriangleRun:
    """Transeunt triangle over ``v``.

    Level 0 is ``v``; level ``k + 1`` has entry ``j`` equal to
    ``level_k[j] ^ level_k[j + 1]``.  Output bit ``k`` is entry 0 of level
    ``k``.  A level is held as one packed int, so each level costs a single
    shift-and-xor, while ``xor_ops`` counts the bit XORs it stands for.
    """
    level = v.bits
    length = v.n + 1
    out = 0
    xor_ops = 0
    for k in range(v.n + 1):
        out |= (level & 1) << k
        if length > 1:
            length -= 1
            level = (level ^ (level >> 1)) & ((1 << length) - 1)
            xor_ops += length
    return TriangleRun(ReducedVector(v.n, out), xor_ops)


class SymmetryViolation(AssertionError):
    """ANF coefficients differ within one degree: the input was not symmetric."""


def _check_oracle_bound(n: int, bound: int) -> None:
    if n > bound:
        raise ValueError(f"n={n} exceeds the exhaustive oracle bound {bound}")


def _popcounts(n: int) -> np.ndarray:
    idx = np.arange(1 << n, dtype=np.uint32)
    counts = np.zeros(1 << n, dtype=np.int64)
    for k in range(n):
        counts += (idx >> k) & 1
    return counts


def truth_table(spec: FunctionSpec, bound: int = ORACLE_BOUND) -> np.ndarray:
    """Full truth table indexed by the assignment's bit pattern."""
    _check_oracle_bound(spec.n, bound)
    return np.isin(_popcounts(spec.n), spec.indices).astype(np.uint8)


def anf_oracle(spec: FunctionSpec, bound: int = ORACLE_BOUND) -> ReducedVector:
    """Reduced spectrum of a symmetric function by brute force.

    Raises :class:`SymmetryViolation` if any two same-degree monomials get
    different coefficients.
    """
    if spec.kind != VALUED:
        raise ValueError("anf_oracle expects a valued-numbers spec")
    n = spec.n
    coeffs = truth_table(spec, bound)
    for k in range(n):
        step = 1 << k
        view = coeffs.reshape(-1, 2, step)
        view[:, 1, :] ^= view[:, 0, :]
    degrees = _popcounts(n)
    bits = 0
    for d in range(n + 1):
        values = np.unique(coeffs[degrees == d])
        if values.size != 1:
            raise SymmetryViolation(f"degree {d} monomials have mixed coefficients")
        if values[0]:
            bits |= 1 << d
    return ReducedVector(n, bits)


def truth_table_eval_oracle(
    spec: FunctionSpec, assignment: Sequence[int] | str, bound: int = ORACLE_BOUND
) -> int:
    _check_oracle_bound(spec.n, bound)
    x = Assignment.from_bits(assignment)
    if x.n != spec.n:
        raise ValueError(f"assignment has {x.n} variables, spec has {spec.n}")
    return 1 if x.weight in spec.indices else 0


@dataclass(frozen=True)
class Mismatch:
    n: int
    indices: tuple[int, ...]
    combinatorial: str
    triangle: str
    oracle: str


@dataclass
class VerifyReport:
    checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def three_way_check(n: int, indices: Sequence[int]) -> Mismatch | None:
    """Compare combinatorial, triangle and brute-force results on one set."""
    spec = FunctionSpec(n, tuple(indices), VALUED)
    v = ReducedVector.from_indices(n, spec.indices)
    comb = transform_vector(v).vector
    tri = triangle_transform(v).output
    oracle = anf_oracle(spec)
    if comb == tri == oracle:
        return None
    return Mismatch(n, spec.indices, str(comb), str(tri), str(oracle))


def _index_sets(
    max_n: int, exhaustive_max_n: int, random_sets: int, rng: random.Random
) -> Iterator[tuple[int, tuple[int, ...]]]:
    for n in range(max_n + 1):
        if n <= exhaustive_max_n:
            for mask in range(1, 1 << (n + 1)):
                yield n, tuple(i for i in range(n + 1) if mask >> i & 1)
        else:
            for _ in range(random_sets):
                mask = 0
                while not mask:
                    mask = rng.getrandbits(n + 1)
                yield n, tuple(i for i in range(n + 1) if mask >> i & 1)


def verify_equivalence(
    max_n: int = 12,
    exhaustive_max_n: int = 8,
    random_sets: int = 500,
    seed: int = 0,
) -> VerifyReport:
    """Three-way equivalence over every non-empty index set for small ``n``
    and seeded random sets above ``exhaustive_max_n``."""
    _check_oracle_bound(max_n, ORACLE_BOUND)
    rng = random.Random(seed)
    report = VerifyReport()
    for n, indices in _index_sets(max_n, exhaustive_max_n, random_sets, rng):
        report.checked += 1
        bad = three_way_check(n, indices)
        if bad is not None:
            report.mismatches.append(bad)
    return report
