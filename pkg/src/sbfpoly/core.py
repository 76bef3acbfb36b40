"""Symmetric Boolean functions and their two reduced representations.

A symmetric function of ``n`` variables depends only on the weight of its
input, so it is fully described by ``n + 1`` bits.  The same container,
:class:`ReducedVector`, holds either

* the carrier vector ``pi``: ``pi[w]`` is the function value on inputs of
  weight ``w``, or
* the reduced Zhegalkin spectrum ``gamma``: ``gamma[d] = 1`` iff every
  degree-``d`` monomial appears in the algebraic normal form.

Bits are packed into a single Python ``int`` (bit ``i`` holds index ``i``),
so vectors with ``n`` in the millions are cheap.  The textual form lists
index 0 first: ``"0011001"`` is ``pi_0 = 0, ..., pi_6 = 1``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .lucas import binom_parity

__all__ = [
    "VALUED",
    "POLYNOMIAL",
    "ReducedVector",
    "FunctionSpec",
    "Assignment",
    "TermLimitExceeded",
    "vector_from_spec",
    "spec_from_vector",
    "eval_carrier",
    "eval_spectrum",
    "anf_terms",
    "anf_term_count",
    "format_anf",
]

VALUED = "valued-numbers"
POLYNOMIAL = "polynomial-numbers"
KINDS = (VALUED, POLYNOMIAL)


@dataclass(frozen=True)
class ReducedVector:
    """``n + 1`` bits indexed ``0..n``, packed little-endian into ``bits``."""

    n: int
    bits: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"variable count must be nonnegative, got {self.n}")
        if self.bits < 0 or self.bits >> (self.n + 1):
            raise ValueError(f"bits do not fit in {self.n + 1} positions")

    @classmethod
    def zeros(cls, n: int) -> ReducedVector:
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> ReducedVector:
        return cls(n, (1 << (n + 1)) - 1)

    @classmethod
    def from_bits(cls, seq: Iterable[int]) -> ReducedVector:
        """Build from a sequence of 0/1 values, index 0 first."""
        value = 0
        length = 0
        for i, b in enumerate(seq):
            if b not in (0, 1, True, False):
                raise ValueError(f"entry {i} is not a bit: {b!r}")
            if b:
                value |= 1 << i
            length = i + 1
        if length == 0:
            raise ValueError("a reduced vector needs at least one entry")
        return cls(length - 1, value)

    @classmethod
    def from_string(cls, text: str) -> ReducedVector:
        """Parse ``"0011001"`` style text (index 0 leftmost).

        Separators ``,``, spaces, and surrounding parentheses are tolerated so
        that ``"(0, 0, 1, 1, 0, 0, 1)"`` also parses.
        """
        cleaned = text.strip().strip("()[]")
        cleaned = cleaned.replace(",", "").replace(" ", "")
        if not cleaned or set(cleaned) - {"0", "1"}:
            raise ValueError(f"not a bit string: {text!r}")
        # int(..., 2) reads the leftmost char as most significant; reverse it.
        return cls(len(cleaned) - 1, int(cleaned[::-1], 2))

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> ReducedVector:
        value = 0
        for i in indices:
            if not 0 <= i <= n:
                raise ValueError(f"index {i} outside [0, {n}]")
            value |= 1 << i
        return cls(n, value)

    def __len__(self) -> int:
        return self.n + 1

    def __getitem__(self, i: int) -> int:
        if i < 0:
            i += self.n + 1
        if not 0 <= i <= self.n:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        for _ in range(self.n + 1):
            yield bits & 1
            bits >>= 1

    def __str__(self) -> str:
        return self.to_string()

    def to_string(self) -> str:
        return format(self.bits, f"0{self.n + 1}b")[::-1]

    def to_list(self) -> list[int]:
        return list(self)

    def indices(self) -> list[int]:
        """Positions holding a 1, ascending."""
        out = []
        bits = self.bits
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return out

    def weight(self) -> int:
        return bin(self.bits).count("1")


@dataclass(frozen=True)
class FunctionSpec:
    """A symmetric function given by ``n`` and a strictly increasing index set.

    With ``kind == VALUED`` the indices are the weights on which the function
    is 1; with ``kind == POLYNOMIAL`` they are the degrees present in its
    algebraic normal form.  The empty set is the constant-0 function.
    """

    n: int
    indices: tuple[int, ...] = ()
    kind: str = VALUED

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))
        if self.n < 0:
            raise ValueError(f"variable count must be nonnegative, got {self.n}")
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        check_index_set(self.n, self.indices)

    def to_record(self) -> dict:
        return {"n": self.n, "indices": list(self.indices), "kind": self.kind}

    @classmethod
    def from_record(cls, record: dict) -> FunctionSpec:
        missing = {"n", "indices", "kind"} - set(record)
        if missing:
            raise ValueError(f"record lacks fields {sorted(missing)}")
        return cls(int(record["n"]), tuple(record["indices"]), record["kind"])

    def to_json(self) -> str:
        return json.dumps(self.to_record())

    @classmethod
    def from_json(cls, text: str) -> FunctionSpec:
        return cls.from_record(json.loads(text))


def check_index_set(n: int, indices: Sequence[int]) -> None:
    """Raise ``ValueError`` unless ``indices`` is strictly increasing in ``[0, n]``."""
    prev = -1
    for i in indices:
        if not 0 <= i <= n:
            raise ValueError(f"index {i} outside [0, {n}]")
        if i <= prev:
            raise ValueError(f"indices must be strictly increasing: {list(indices)}")
        prev = i


@dataclass(frozen=True)
class Assignment:
    """An input to a symmetric function, reduced to its weight."""

    n: int
    weight: int

    def __post_init__(self):
        if not 0 <= self.weight <= self.n:
            raise ValueError(f"weight {self.weight} outside [0, {self.n}]")

    @classmethod
    def from_bits(cls, bits: Sequence[int] | str) -> Assignment:
        """Collapse a full assignment ``(x_1, ..., x_n)`` to its weight."""
        if isinstance(bits, str):
            if set(bits) - {"0", "1"}:
                raise ValueError(f"not a bit string: {bits!r}")
            return cls(len(bits), bits.count("1"))
        values = [int(b) for b in bits]
        if any(b not in (0, 1) for b in values):
            raise ValueError("assignment entries must be 0 or 1")
        return cls(len(values), sum(values))


def vector_from_spec(spec: FunctionSpec) -> ReducedVector:
    return ReducedVector.from_indices(spec.n, spec.indices)


def spec_from_vector(v: ReducedVector, kind: str = VALUED) -> FunctionSpec:
    return FunctionSpec(v.n, tuple(v.indices()), kind)


def _check_dims(v: ReducedVector, x: Assignment) -> None:
    if v.n != x.n:
        raise ValueError(f"vector is for n={v.n} but assignment has n={x.n}")


def eval_carrier(pi: ReducedVector, x: Assignment) -> int:
    _check_dims(pi, x)
    return pi[x.weight]


def eval_spectrum(gamma: ReducedVector, x: Assignment) -> int:
    # On a weight-w input, E_n^d has C(w, d) monomials equal to 1.
    _check_dims(gamma, x)
    out = 0
    for d in gamma.indices():
        if d > x.weight:
            break
        out ^= binom_parity(x.weight, d)
    return out


class TermLimitExceeded(ValueError):
    """Raised instead of materializing an oversized monomial list."""

    def __init__(self, count: int, limit: int):
        super().__init__(f"expansion has {count} monomials, limit is {limit}")
        self.count = count
        self.limit = limit


def anf_term_count(gamma: ReducedVector) -> int:
    return sum(comb(gamma.n, d) for d in gamma.indices())


def anf_terms(gamma: ReducedVector, term_limit: int = 100_000) -> list[tuple[int, ...]]:
    """Expand a reduced spectrum into explicit monomials.

    Each monomial is a sorted tuple of 1-based variable numbers; ``()`` is the
    constant 1.  Monomials are ordered by degree, then lexicographically.
    """
    if term_limit <= 0:
        raise ValueError("term_limit must be positive")
    count = anf_term_count(gamma)
    if count > term_limit:
        raise TermLimitExceeded(count, term_limit)
    variables = range(1, gamma.n + 1)
    terms: list[tuple[int, ...]] = []
    for d in gamma.indices():
        terms.extend(combinations(variables, d))
    return terms


def format_anf(terms: Sequence[tuple[int, ...]]) -> str:
    if not terms:
        return "0"
    return " ^ ".join("*".join(f"x{j}" for j in t) if t else "1" for t in terms)
