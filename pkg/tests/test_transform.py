import doctest
import random

import pytest
from hypothesis import given, settings, strategies as st

from sbfpoly import FunctionSpec, ReducedVector
from sbfpoly.baseline import anf_oracle, triangle_transform
from sbfpoly.complexity import s1_formula
import sbfpoly.transform
from sbfpoly.transform import (
    carrier_from_set,
    carrier_from_single,
    spectrum_from_set,
    spectrum_from_single,
    transform_vector,
)

from oracles import binomial_transform, spectrum_by_definition


def test_carrier_single_degree_two():
    res = carrier_from_single(6, 2)
    assert res.vector.to_list() == [0, 0, 1, 1, 0, 0, 1]
    assert [res.vector[i] for i in (3, 4, 5, 6)] == [1, 0, 0, 1]


@pytest.mark.parametrize("n", [0, 1, 5, 17])
def test_carrier_single_extremes(n):
    assert carrier_from_single(n, 0).vector == ReducedVector.ones(n)
    top = carrier_from_single(n, n).vector
    assert top.indices() == [n]
    assert carrier_from_single(n, n).ops.total == 0


def test_carrier_single_out_of_range():
    with pytest.raises(ValueError):
        carrier_from_single(4, 5)
    with pytest.raises(ValueError):
        spectrum_from_single(4, -1)


def test_carrier_from_set_example():
    v = carrier_from_set(10, [5, 7, 8]).vector
    assert v.to_list() == [0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1]
    # entry 7 collects C(7,5) and C(7,7), both odd, so it cancels
    assert v[7] == 0


def test_carrier_of_degrees_two_and_three():
    # oracle value: exact binomial sums, not the 8-bit indicator 00110000
    expected = binomial_transform([0, 0, 1, 1, 0, 0, 0, 0])
    assert expected == [0, 0, 1, 0, 0, 0, 1, 0]
    assert carrier_from_set(7, [2, 3]).vector.to_list() == expected


@pytest.mark.parametrize("n, b", [(6, 2), (10, 0), (33, 16), (64, 63)])
def test_singleton_set_equals_single(n, b):
    a = carrier_from_set(n, [b])
    s = carrier_from_single(n, b)
    assert a == s
    assert spectrum_from_single(n, b) == s


def test_spectrum_examples():
    assert spectrum_from_single(6, 2).vector.to_string() == "0011001"
    assert spectrum_by_definition(6, [2]) == [0, 0, 1, 1, 0, 0, 1]
    assert spectrum_from_single(9, 0).vector == ReducedVector.ones(9)
    assert spectrum_from_single(9, 9).vector.indices() == [9]


def test_spectrum_of_weights_two_and_three():
    oracle = spectrum_by_definition(7, [2, 3])
    assert oracle == [0, 0, 1, 0, 0, 0, 1, 0]
    v = spectrum_from_set(7, [2, 3]).vector
    assert v.to_list() == oracle
    assert v[6] == 1


@pytest.mark.parametrize("bad", [[], [3, 2], [1, 1], [0, 8]])
def test_invalid_sets(bad):
    with pytest.raises(ValueError):
        carrier_from_set(7, bad)
    with pytest.raises(ValueError):
        spectrum_from_set(7, bad)


def test_transform_vector_examples():
    assert transform_vector(ReducedVector.from_string("0010000")).vector.to_string() == "0011001"
    z = transform_vector(ReducedVector.zeros(12))
    assert z.vector == ReducedVector.zeros(12)
    assert z.ops.total == 0


index_sets = st.integers(0, 40).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.integers(0, n), min_size=1).map(sorted)))


@given(index_sets)
def test_shape(case):
    n, idx = case
    v = carrier_from_set(n, idx).vector
    m = idx[0]
    assert all(v[i] == 0 for i in range(m))
    assert v[m] == 1


@given(index_sets)
def test_self_duality(case):
    n, idx = case
    assert carrier_from_set(n, idx) == spectrum_from_set(n, idx)


@given(index_sets)
def test_matches_exact_binomial_transform(case):
    n, idx = case
    bits = [1 if i in idx else 0 for i in range(n + 1)]
    assert carrier_from_set(n, idx).vector.to_list() == binomial_transform(bits)


@pytest.mark.parametrize("n", range(0, 13))
def test_involution_exhaustive(n):
    for mask in range(1 << (n + 1)):
        v = ReducedVector(n, mask)
        assert transform_vector(transform_vector(v).vector).vector == v


@settings(max_examples=300)
@given(st.integers(0, 64).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, (1 << (n + 1)) - 1))))
def test_involution_random(case):
    v = ReducedVector(*case)
    once = transform_vector(v).vector
    assert transform_vector(once).vector == v
    assert triangle_transform(v).output == once


@pytest.mark.parametrize("n", range(0, 9))
def test_oracle_equivalence_exhaustive(n):
    for mask in range(1, 1 << (n + 1)):
        idx = [i for i in range(n + 1) if mask >> i & 1]
        got = spectrum_from_set(n, idx).vector
        assert got == triangle_transform(ReducedVector(n, mask)).output
        assert got == anf_oracle(FunctionSpec(n, tuple(idx)))


def test_oracle_equivalence_random_larger():
    rng = random.Random(7)
    for n in range(9, 13):
        for _ in range(100):
            idx = sorted(rng.sample(range(n + 1), rng.randint(1, n + 1)))
            got = spectrum_from_set(n, idx).vector
            assert got == anf_oracle(FunctionSpec(n, tuple(idx)))


class TestOpCounts:
    @pytest.mark.parametrize("n, b", [(6, 2), (80, 16), (100, 3), (1024, 1), (50, 50)])
    def test_singleton_checks_match_closed_form(self, n, b):
        ops = carrier_from_single(n, b).ops
        assert ops.primitive_checks == s1_formula(n, b)
        assert ops.accumulation_xors == 0

    def test_set_counts_by_hand(self):
        # n=10, {5,7,8}: i=6 -> C(.,5); i=7 -> 5,7; i=8..10 -> 5,7,8
        # checks per term: 5 -> 4, 7 -> 4, 8 -> 4
        ops = carrier_from_set(10, [5, 7, 8]).ops
        assert ops.primitive_checks == 4 + 8 + 3 * 12
        assert ops.accumulation_xors == 0 + 1 + 3 * 2

    def test_deterministic(self):
        assert carrier_from_set(200, [3, 50, 77]) == carrier_from_set(200, [3, 50, 77])


def test_module_doctests():
    failures, tried = doctest.testmod(sbfpoly.transform)
    assert tried >= 2 and failures == 0
