import pytest
from hypothesis import given, settings

from monostab.core import Monomial, MonomialIdeal, MonomialPrime, colon_monomial, power, zero_ideal
from monostab.constructions import make_H, make_triangle
from monostab.decomposition import (
    IrreducibleComponent,
    associated_primes,
    find_witness,
    irreducible_decomposition,
    minimal_primes,
)
from monostab.errors import ArityError, CapacityError, ImproperIdealError

import oracle
from conftest import XY, ctx_for, small_ideals


def comp_set(ideal):
    return {c.entries for c in irreducible_decomposition(ideal)}


def as_tuple(comp, n):
    out = [0] * n
    for i, e in comp.entries:
        out[i] = e
    return tuple(out)


def P(*idx):
    return MonomialPrime(idx)


def test_decomposition_squarefree_principal():
    assert comp_set(MonomialIdeal(XY, [(1, 1)])) == {((0, 1),), ((1, 1),)}


def test_decomposition_mixed():
    assert comp_set(MonomialIdeal(XY, [(2, 0), (1, 1)])) == {((0, 1),), ((0, 2), (1, 1))}


def test_decomposition_H1():
    assert comp_set(make_H(1)) == {((0, 2), (1, 3)), ((0, 3), (1, 1))}


def test_decomposition_rejects_improper():
    with pytest.raises(ImproperIdealError):
        irreducible_decomposition(zero_ideal(XY))
    with pytest.raises(ImproperIdealError):
        irreducible_decomposition(MonomialIdeal(XY, [(0, 0)]))


def test_component_helpers():
    c = IrreducibleComponent(((0, 2), (1, 3)))
    assert c.support == (0, 1)
    assert c.radical == P(0, 1)
    assert c.as_ideal(XY) == MonomialIdeal(XY, [(2, 0), (0, 3)])
    assert c.format(XY) == "(x^2, y^3)"


def test_decomposition_is_deterministic():
    ideal = power(make_triangle(1), 3)
    assert irreducible_decomposition(ideal) == irreducible_decomposition(
        MonomialIdeal(ideal.ctx, reversed(ideal.exponent_tuples))
    )


@settings(max_examples=120, deadline=None)
@given(small_ideals())
def test_decomposition_matches_splitting_oracle(ideal):
    got = {as_tuple(c, ideal.n) for c in irreducible_decomposition(ideal)}
    assert got == oracle.split_decomposition(ideal.exponent_tuples)


@settings(max_examples=80, deadline=None)
@given(small_ideals())
def test_decomposition_intersection_grid(ideal):
    comps = [as_tuple(c, ideal.n) for c in irreducible_decomposition(ideal)]
    gens = ideal.exponent_tuples
    for u in oracle.GridSpec.default(gens).points():
        in_all = all(oracle.component_member(q, u) for q in comps)
        assert oracle.member(gens, u) == in_all


def test_ass_triangle():
    assert associated_primes(make_triangle(1)) == {P(0, 1), P(0, 2), P(1, 2)}


def test_ass_triangle_square():
    got = associated_primes(power(make_triangle(1), 2), method="both")
    assert got == {P(0, 1), P(0, 2), P(1, 2), P(0, 1, 2)}


def test_ass_embedded():
    assert associated_primes(MonomialIdeal(XY, [(2, 0), (1, 1)])) == {P(0), P(0, 1)}


def test_min_primes():
    ideal = MonomialIdeal(XY, [(2, 0), (1, 1)])
    assert minimal_primes(ideal) == {P(0)}
    tri = make_triangle(1)
    assert minimal_primes(tri) == associated_primes(tri)
    assert minimal_primes(MonomialIdeal(XY, [(1, 0), (0, 1)])) == {P(0, 1)}


def test_ass_unknown_method():
    with pytest.raises(ValueError):
        associated_primes(make_H(1), method="guess")


def test_witness_examples():
    assert find_witness(make_H(1), P(0, 1)) == Monomial((2, 0))
    assert find_witness(power(make_triangle(1), 2), P(0, 1, 2)) == Monomial((1, 1, 1))
    assert find_witness(MonomialIdeal(XY, [(1, 0)]), P(0, 1)) is None


def test_witness_checks_arity():
    with pytest.raises(ArityError):
        find_witness(make_H(1), P(0, 5))


def test_box_limit():
    big = power(make_H(3), 6)
    with pytest.raises(CapacityError):
        associated_primes(big, method="box", box_limit=100)


@settings(max_examples=150, deadline=None)
@given(small_ideals())
def test_ass_algorithms_agree_with_oracle(ideal):
    a = associated_primes(ideal)
    assert associated_primes(ideal, method="box") == a
    assert oracle.naive_ass(ideal) == a


@settings(max_examples=60, deadline=None)
@given(small_ideals(max_vars=3))
def test_witness_box_widening(ideal):
    for p in associated_primes(ideal):
        u = find_witness(ideal, p)
        assert u.exponents == oracle.naive_witness(ideal, p)
        assert u.exponents == oracle.naive_witness(ideal, p, extra=2)
        assert find_witness(ideal, p, method="box") == u


@settings(max_examples=60, deadline=None)
@given(small_ideals())
def test_witness_validity(ideal):
    for p in associated_primes(ideal):
        u = find_witness(ideal, p)
        assert u not in ideal
        assert colon_monomial(ideal, u) == p.as_ideal(ideal.ctx)


@settings(max_examples=60, deadline=None)
@given(small_ideals())
def test_min_subset_of_ass(ideal):
    assert minimal_primes(ideal) <= associated_primes(ideal)


def test_edge_ideals_min_equals_ass():
    # squarefree quadratic: paths, cycles and a star
    n = 5
    ctx = ctx_for(n)
    graphs = [
        [(0, 1), (1, 2), (2, 3), (3, 4)],
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)],
        [(0, 1), (0, 2), (0, 3), (0, 4)],
    ]
    for edges in graphs:
        gens = []
        for i, j in edges:
            e = [0] * n
            e[i] = e[j] = 1
            gens.append(tuple(e))
        ideal = MonomialIdeal(ctx, gens)
        assert minimal_primes(ideal) == associated_primes(ideal)
