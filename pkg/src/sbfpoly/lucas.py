"""Parity of binomial coefficients via the bit-submask test.

``C(i, b)`` is odd exactly when every 1-bit of ``b`` is also set in ``i``
(Lucas' theorem for the prime 2).  The test runs word-parallel as
``i & b == b`` but the counted variant charges it per bit, one primitive
comparison ``x_k OR NOT y_k`` for each binary digit of ``b``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "ParityCheckCounter",
    "bit_length",
    "cost_bit_length",
    "binom_parity",
    "binom_parity_counted",
    "pascal_parity_oracle",
    "PASCAL_BOUND",
]

PASCAL_BOUND = 512


@dataclass
class ParityCheckCounter:
    """Operation tally for one transform run.

    ``primitive_checks`` counts per-bit comparisons; ``accumulation_xors``
    counts the mod-2 additions that combine several parity terms into one
    output entry.
    """

    primitive_checks: int = 0
    accumulation_xors: int = 0

    @property
    def total(self) -> int:
        return self.primitive_checks + self.accumulation_xors

    def reset(self) -> None:
        self.primitive_checks = 0
        self.accumulation_xors = 0

    def snapshot(self) -> ParityCheckCounter:
        return ParityCheckCounter(self.primitive_checks, self.accumulation_xors)


def _check_nonneg(*values: int) -> None:
    for v in values:
        if v < 0:
            raise ValueError(f"expected a nonnegative integer, got {v}")


def bit_length(x: int) -> int:
    """Number of binary digits of ``x``; ``bit_length(0) == 1``."""
    _check_nonneg(x)
    return max(x.bit_length(), 1)


def cost_bit_length(x: int) -> int:
    """Cost-model digit count ``ceil(log2 x) + 1``, with 1 for ``x == 0``.

    Exceeds :func:`bit_length` by one whenever ``x`` is not a power of two
    (``cost_bit_length(3) == 3``).  Used only for operation accounting so
    that measured counts line up with ``(ceil(log2 b) + 1) * (n - b)``.
    """
    _check_nonneg(x)
    if x == 0:
        return 1
    # ceil(log2 x) == (x - 1).bit_length() for x >= 1, exact for huge x
    return (x - 1).bit_length() + 1


def binom_parity(i: int, b: int) -> int:
    """``C(i, b) mod 2``; zero when ``b > i``."""
    _check_nonneg(i, b)
    return 1 if i & b == b else 0


def binom_parity_counted(i: int, b: int, counter: ParityCheckCounter) -> int:
    _check_nonneg(i, b)
    counter.primitive_checks += cost_bit_length(b)
    return 1 if i & b == b else 0


@lru_cache(maxsize=4)
def _pascal_rows(bound: int) -> tuple[tuple[int, ...], ...]:
    rows = [(1,)]
    for _ in range(bound):
        prev = rows[-1]
        row = [1]
        for k in range(1, len(prev)):
            row.append((prev[k - 1] + prev[k]) % 2)
        row.append(1)
        rows.append(tuple(row))
    return tuple(rows)


def pascal_parity_oracle(i: int, b: int, bound: int = PASCAL_BOUND) -> int:
    """``C(i, b) mod 2`` from the additive Pascal recurrence.

    Independent of the submask shortcut; meant for cross-checking.
    """
    _check_nonneg(i, b)
    if i > bound or b > bound:
        raise ValueError(f"arguments ({i}, {b}) exceed oracle bound {bound}")
    if b > i:
        return 0
    return _pascal_rows(bound)[i][b]
