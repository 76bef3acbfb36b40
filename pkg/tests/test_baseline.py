import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from sbfpoly import POLYNOMIAL, FunctionSpec, ReducedVector
from sbfpoly.baseline import (
    SymmetryViolation,
    anf_oracle,
    three_way_check,
    triangle_transform,
    truth_table,
    truth_table_eval_oracle,
    verify_equivalence,
)
import sbfpoly.baseline as baseline

from oracles import binomial_transform, spectrum_by_definition, subset_anf


def naive_triangle(bits):
    """List-of-levels triangle, written out the long way."""
    level = list(bits)
    out, ops = [], 0
    while level:
        out.append(level[0])
        level = [a ^ b for a, b in zip(level, level[1:])]
        ops += len(level)
    return out, ops


class TestTriangle:
    def test_example(self):
        run = triangle_transform(ReducedVector.from_string("0011001"))
        assert run.output.to_string() == "0010000"
        assert run.xor_ops == 21

    def test_zero_and_impulse(self):
        assert triangle_transform(ReducedVector.zeros(9)).output == ReducedVector.zeros(9)
        assert triangle_transform(ReducedVector.from_indices(9, [0])).output == ReducedVector.ones(9)

    @given(st.lists(st.integers(0, 1), min_size=1, max_size=80))
    def test_matches_naive_levels(self, bits):
        run = triangle_transform(ReducedVector.from_bits(bits))
        out, ops = naive_triangle(bits)
        assert run.output.to_list() == out
        assert run.xor_ops == ops == (len(bits) - 1) * len(bits) // 2

    @given(st.lists(st.integers(0, 1), min_size=1, max_size=80))
    def test_is_binomial_transform(self, bits):
        assert triangle_transform(ReducedVector.from_bits(bits)).output.to_list() == \
            binomial_transform(bits)

    @pytest.mark.parametrize("n", range(0, 11))
    def test_involution_exhaustive(self, n):
        for mask in range(1 << (n + 1)):
            v = ReducedVector(n, mask)
            assert triangle_transform(triangle_transform(v).output).output == v

    @given(st.integers(0, (1 << 65) - 1))
    def test_involution_n64(self, mask):
        v = ReducedVector(64, mask)
        assert triangle_transform(triangle_transform(v).output).output == v


class TestAnfOracle:
    @pytest.mark.parametrize("n, weights, expected", [
        (7, (2, 3), "00100010"),
        (3, (3,), "0001"),
        (2, (1,), "010"),
        (0, (0,), "1"),
        (4, (), "00000"),
    ])
    def test_examples(self, n, weights, expected):
        assert anf_oracle(FunctionSpec(n, weights)).to_string() == expected

    @pytest.mark.parametrize("n", range(0, 7))
    def test_matches_subset_sums(self, n):
        for mask in range(1 << (n + 1)):
            weights = tuple(i for i in range(n + 1) if mask >> i & 1)
            assert anf_oracle(FunctionSpec(n, weights)).to_list() == \
                spectrum_by_definition(n, weights)

    def test_full_coefficients_agree_with_subset_sums(self):
        spec = FunctionSpec(6, (1, 4, 5))
        coeffs = truth_table(spec).copy()
        for k in range(6):
            v = coeffs.reshape(-1, 2, 1 << k)
            v[:, 1, :] ^= v[:, 0, :]
        assert coeffs.tolist() == subset_anf(6, (1, 4, 5))

    def test_bound(self):
        with pytest.raises(ValueError):
            anf_oracle(FunctionSpec(17, (3,)))
        assert anf_oracle(FunctionSpec(3, (1,)), bound=3).to_string() == "0101"

    def test_needs_valued_numbers(self):
        with pytest.raises(ValueError):
            anf_oracle(FunctionSpec(3, (1,), POLYNOMIAL))

    def test_symmetry_violation_is_loud(self, monkeypatch):
        real = baseline.truth_table

        def lopsided(spec, bound=baseline.ORACLE_BOUND):
            t = real(spec, bound).copy()
            t[1] ^= 1  # flip x_1 alone: no longer symmetric
            return t

        monkeypatch.setattr(baseline, "truth_table", lopsided)
        with pytest.raises(SymmetryViolation):
            anf_oracle(FunctionSpec(3, (2,)))


class TestEvalOracle:
    @pytest.mark.parametrize("n, weights, x, expected", [
        (6, (2,), "110000", 1),
        (6, (2,), "111000", 0),
        (7, (2, 3), "1110000", 1),
    ])
    def test_examples(self, n, weights, x, expected):
        assert truth_table_eval_oracle(FunctionSpec(n, weights), x) == expected

    def test_consistent_with_table(self):
        spec = FunctionSpec(5, (0, 3))
        table = truth_table(spec)
        for m, x in enumerate(itertools.product([0, 1], repeat=5)):
            bits = list(reversed(x))  # table index bit k is x_{k+1}
            assert truth_table_eval_oracle(spec, bits) == table[m]

    def test_length_and_bound(self):
        with pytest.raises(ValueError):
            truth_table_eval_oracle(FunctionSpec(4, (1,)), "101")
        with pytest.raises(ValueError):
            truth_table_eval_oracle(FunctionSpec(20, (1,)), "1" * 20)


def test_three_way_check_flags_disagreement(monkeypatch):
    assert three_way_check(7, (2, 3)) is None
    monkeypatch.setattr(baseline, "anf_oracle", lambda spec: ReducedVector.zeros(spec.n))
    bad = three_way_check(7, (2, 3))
    assert bad is not None and bad.oracle == "00000000"


def test_verify_small():
    report = verify_equivalence(max_n=6, exhaustive_max_n=4, random_sets=20, seed=3)
    assert report.ok
    assert report.checked == sum(2 ** (n + 1) - 1 for n in range(5)) + 2 * 20


def test_truth_table_dtype():
    t = truth_table(FunctionSpec(4, (2,)))
    assert t.dtype == np.uint8 and t.sum() == 6
