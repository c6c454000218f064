import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monostab.core import (
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    VariableContext,
    alpha,
    colon_monomial,
    contains,
    format_ideal,
    ideal_sum,
    intersection,
    minimalize,
    parse_ideal,
    power,
    product,
    scale,
    unit_ideal,
    zero_ideal,
)
from monostab.constructions import make_H, make_triangle, make_paper_parts
from monostab.errors import ArityError, CapacityError, ImproperIdealError, ParseError

import oracle
from conftest import XY, ctx_for, small_ideals


def I(*gens, ctx=XY):
    return MonomialIdeal(ctx, gens)


def m(*exps):
    return Monomial(exps)


# --- VariableContext / Monomial -------------------------------------------

def test_context_rejects_duplicates_and_empty():
    with pytest.raises(ValueError):
        VariableContext(("x", "x"))
    with pytest.raises(ValueError):
        VariableContext(())
    with pytest.raises(ValueError):
        VariableContext(("x", "2y"))


def test_monomial_degree_and_unit():
    assert m(2, 1, 0).degree == 3
    assert m(0, 0).is_unit()
    assert Monomial.unit(3) == m(0, 0, 0)
    with pytest.raises(ValueError):
        m(-1, 0)


def test_monomial_arithmetic():
    u, v = m(2, 1), m(1, 3)
    assert u * v == m(3, 4)
    assert u.gcd(v) == m(1, 1)
    assert u.lcm(v) == m(2, 3)
    assert (u * v) / v == u
    assert u ** 3 == m(6, 3)
    with pytest.raises(ValueError):
        u / v
    with pytest.raises(ArityError):
        u * m(1, 1, 1)


def test_monomial_format():
    assert m(2, 1).format(XY) == "x^2*y"
    assert m(0, 0).format(XY) == "1"


# --- minimalize ------------------------------------------------------------

def test_minimalize_drops_multiples():
    assert minimalize([(1, 0), (2, 0)], XY) == I((1, 0))


def test_minimalize_empty_is_zero():
    z = minimalize([], XY)
    assert z.is_zero() and z == zero_ideal(XY)


def test_minimalize_staircase():
    got = minimalize([(3, 0), (2, 1), (2, 2), (0, 3)], XY)
    assert set(got.exponent_tuples) == {(3, 0), (2, 1), (0, 3)}


def test_minimalize_arity_error():
    with pytest.raises(ArityError):
        minimalize([(1, 0, 0)], XY)


def test_unit_ideal_is_single_one():
    u = minimalize([(0, 0), (3, 1)], XY)
    assert u == unit_ideal(XY) and u.is_unit()


def test_canonical_order_is_graded_lex():
    ideal = I((0, 3), (3, 0), (1, 1))
    assert ideal.exponent_tuples == ((1, 1), (0, 3), (3, 0))


@settings(max_examples=60, deadline=None)
@given(small_ideals(), st.randoms(use_true_random=False))
def test_minimalize_order_independent_and_idempotent(ideal, rnd):
    gens = list(ideal.exponent_tuples) * 2
    rnd.shuffle(gens)
    again = minimalize(gens, ideal.ctx)
    assert again == ideal
    assert again.exponent_tuples == ideal.exponent_tuples
    assert minimalize(again.exponent_tuples, ideal.ctx) == again


@settings(max_examples=60, deadline=None)
@given(small_ideals(max_gens=8))
def test_minimal_generators_match_oracle(ideal):
    raw = list(ideal.exponent_tuples)
    assert set(ideal.exponent_tuples) == oracle.minimal(raw)


# --- power -------------------------------------------------------------------

def test_power_maximal_ideal_square():
    assert power(I((1, 0), (0, 1)), 2) == I((2, 0), (1, 1), (0, 2))


def test_power_H1_squared():
    want = I((6, 0), (5, 1), (4, 2), (3, 3), (2, 4), (0, 6))
    assert power(make_H(1), 2) == want


def test_power_zero_is_unit():
    assert power(make_H(2), 0) == unit_ideal(XY)


def test_power_cap_names_exponent():
    tri = make_triangle(1)
    with pytest.raises(CapacityError) as exc:
        power(tri, 5, cap=9)
    assert exc.value.k == 3


@settings(max_examples=40, deadline=None)
@given(small_ideals(max_vars=3, max_exp=2, max_gens=4), st.integers(0, 4))
def test_power_matches_naive_expansion(ideal, k):
    got = set(power(ideal, k).exponent_tuples)
    assert got == oracle.naive_power(ideal.exponent_tuples, k, ideal.n)


@settings(max_examples=30, deadline=None)
@given(small_ideals(max_vars=3, max_exp=2, max_gens=4), st.integers(1, 3), st.integers(1, 3))
def test_power_product_additivity(ideal, k, j):
    assert product(power(ideal, k), power(ideal, j)) == power(ideal, k + j)


@settings(max_examples=40, deadline=None)
@given(small_ideals(), st.integers(1, 4))
def test_power_degree_lower_bound(ideal, k):
    a = alpha(ideal)
    degs = [sum(g) for g in power(ideal, k).exponent_tuples]
    assert min(degs) >= k * a
    degrees = {sum(g) for g in ideal.exponent_tuples}
    if len(degrees) == 1:
        assert min(degs) == k * a


# --- colon / contains --------------------------------------------------------

def test_colon_by_one():
    h = make_H(1)
    assert colon_monomial(h, m(0, 0)) == h


def test_colon_H1_by_x2():
    assert colon_monomial(make_H(1), m(2, 0)) == I((1, 0), (0, 1))


def test_colon_example():
    assert colon_monomial(I((2, 0), (1, 1)), m(0, 1)) == I((1, 0))


def test_contains_examples():
    ideal = I((2, 0), (1, 1))
    assert contains(ideal, m(3, 0))
    assert not contains(ideal, m(0, 5))
    assert contains(power(make_H(2), 2), m(4, 6))
    assert m(3, 0) in ideal


def test_contains_arity_error():
    with pytest.raises(ArityError):
        contains(I((1, 0)), m(1, 0, 0))


@settings(max_examples=100, deadline=None)
@given(
    small_ideals(max_exp=4),
    st.lists(st.integers(0, 4), min_size=4, max_size=4),
    st.lists(st.integers(0, 4), min_size=4, max_size=4),
)
def test_colon_adjunction(ideal, uu, vv):
    n = ideal.n
    u, v = Monomial(tuple(uu[:n])), Monomial(tuple(vv[:n]))
    assert contains(colon_monomial(ideal, u), v) == contains(ideal, u * v)


@settings(max_examples=60, deadline=None)
@given(small_ideals(), st.lists(st.integers(0, 3), min_size=4, max_size=4))
def test_colon_matches_oracle(ideal, uu):
    u = tuple(uu[:ideal.n])
    got = set(colon_monomial(ideal, Monomial(u)).exponent_tuples)
    assert got == oracle.naive_colon(ideal.exponent_tuples, u)


# --- alpha / sum / scale / intersection -------------------------------------

def test_alpha_examples():
    for b in (1, 2, 3):
        assert alpha(make_H(b)) == 2 * b + 1
    assert alpha(I((1, 0), (0, 1))) == 1
    assert alpha(make_triangle(1)) == 2
    with pytest.raises(ImproperIdealError):
        alpha(zero_ideal(XY))


def test_sum_and_scale():
    assert ideal_sum(I((1, 0)), I((0, 1))) == I((1, 0), (0, 1))
    ctx = ctx_for(3)
    assert scale(Monomial((1, 0, 0)), MonomialIdeal(ctx, [(0, 1, 1)])) == MonomialIdeal(ctx, [(1, 1, 1)])
    parts = make_paper_parts(2, 1)
    x0 = Monomial.variable(0, parts.L.n)
    assert parts.L == scale(x0, parts.J)
    assert sorted(parts.L.exponent_tuples) == sorted(
        [(1, 1, 1, 0, 0, 0), (1, 1, 0, 1, 0, 0), (1, 0, 1, 1, 0, 0)]
    )


def test_sum_rejects_mixed_contexts():
    with pytest.raises(ArityError):
        ideal_sum(I((1, 0)), MonomialIdeal(ctx_for(2), [(1, 0)]))


@settings(max_examples=40, deadline=None)
@given(small_ideals(max_vars=3), small_ideals(max_vars=3))
def test_intersection_grid(a, b):
    if a.n != b.n:
        b = MonomialIdeal(a.ctx, [tuple((list(g) + [0] * 3)[:a.n]) for g in b.exponent_tuples])
    both = intersection(a, b)
    ga, gb, gi = a.exponent_tuples, b.exponent_tuples, both.exponent_tuples
    grid = oracle.GridSpec.default(ga, gb)
    for u in grid.points():
        assert oracle.member(gi, u) == (oracle.member(ga, u) and oracle.member(gb, u))


@settings(max_examples=40, deadline=None)
@given(small_ideals(), small_ideals())
def test_canonical_equality_matches_grid(a, b):
    if a.n != b.n:
        return
    assert (a == b) == oracle.grid_equal(a, b)


# --- text format -------------------------------------------------------------

def test_parse_and_format():
    text = "# H(2)\nvars: x, y\nx^5\n x^2 * y^3   # comment\ny^5\n"
    ideal = parse_ideal(text)
    assert ideal == make_H(2)
    assert format_ideal(ideal) == "vars: x, y\ny^5\nx^2*y^3\nx^5\n"


def test_parse_unit_monomial():
    assert parse_ideal("vars: x\n1\n").is_unit()


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as exc:
        parse_ideal("vars: x, y\nx^2\nz^3\n")
    assert exc.value.line == 3
    with pytest.raises(ParseError) as exc:
        parse_ideal("x^2\n")
    assert exc.value.line == 1
    with pytest.raises(ParseError):
        parse_ideal("vars: x\nx^\n")


@settings(max_examples=60, deadline=None)
@given(small_ideals(proper=False))
def test_text_round_trip(ideal):
    assert parse_ideal(format_ideal(ideal)) == ideal


def test_prime_basics():
    p = MonomialPrime((2, 0))
    assert p.support == (0, 2)
    assert (p | MonomialPrime((1,))).support == (0, 1, 2)
    assert p.format(VariableContext(("a", "b", "c"))) == "(a, c)"
    with pytest.raises(ValueError):
        MonomialPrime(())
