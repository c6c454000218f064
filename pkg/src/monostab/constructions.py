"""The ideal families of the stability comparison and their predicted data.

The prediction functions are closed formulas.  They never call the
decomposition or v-number engines, so comparing a prediction against a
computation is a genuine cross-check between independent routes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    VariableContext,
    ideal_sum,
    scale,
)
from .errors import ParameterError, PreconditionError

XY = VariableContext(("x", "y"))


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ParameterError(message)


def make_H(b: int) -> MonomialIdeal:
    """(x^(2b+1), x^2 y^(2b-1), y^(2b+1)) in K[x, y]."""
    _require(isinstance(b, int) and b >= 1, f"b must be an integer >= 1, got {b!r}")
    return MonomialIdeal(XY, [(2 * b + 1, 0), (2, 2 * b - 1), (0, 2 * b + 1)])


def predict_H_power_generators(b: int, k: int) -> list[Monomial]:
    """The monomials u_ij, 0 <= j <= i <= k, generating make_H(b)^k.

    u_ij = x^((2b+1)(k-i) + 2(i-j)) * y^((2b+1)i - 2(i-j)).
    """
    _require(b >= 1 and k >= 1, "b and k must be >= 1")
    d = 2 * b + 1
    return [
        Monomial((d * (k - i) + 2 * (i - j), d * i - 2 * (i - j)))
        for i in range(k + 1)
        for j in range(i + 1)
    ]


def v_H_power(b: int, k: int) -> int:
    """v(make_H(b)^k): (2b+1)k below k = b, one less from k = b on."""
    _require(b >= 1 and k >= 1, "b and k must be >= 1")
    return (2 * b + 1) * k if k < b else (2 * b + 1) * k - 1


def triangle_context(blocks: int) -> VariableContext:
    return VariableContext.indexed("x", 1, 3 * blocks)


def make_triangle(i: int, ctx: VariableContext | None = None) -> MonomialIdeal:
    """Edge ideal of the triangle on x_(3i-2), x_(3i-1), x_(3i).

    By default the ring is K[x_1, ..., x_(3i)]; pass ``ctx`` to embed the
    triangle in a larger ring (its variables are looked up by name).
    """
    _require(isinstance(i, int) and i >= 1, f"i must be an integer >= 1, got {i!r}")
    ctx = ctx or triangle_context(i)
    try:
        a, b, c = (ctx.index(f"x{3 * i - s}") for s in (2, 1, 0))
    except ValueError:
        raise ParameterError(f"context lacks the variables of triangle {i}") from None

    def edge(p, q):
        e = [0] * ctx.n
        e[p] = e[q] = 1
        return tuple(e)

    return MonomialIdeal(ctx, [edge(a, b), edge(a, c), edge(b, c)])


def make_J(a: int, ctx: VariableContext | None = None) -> MonomialIdeal:
    """J = J_1 + ... + J_(a-1), disjoint triangles on x_1 .. x_(3(a-1))."""
    _require(isinstance(a, int) and a >= 2, f"J needs a >= 2, got {a!r}")
    ctx = ctx or triangle_context(a - 1)
    total = make_triangle(1, ctx)
    for i in range(2, a):
        total = ideal_sum(total, make_triangle(i, ctx))
    return total


def paper_context(a: int) -> VariableContext:
    return VariableContext(("x0",) + triangle_context(a - 1).names + ("x", "y"))


@dataclass(frozen=True)
class PaperIdeal:
    """The ideal I = x0^(2b-1) J + H together with its named pieces."""

    a: int
    b: int
    ideal: MonomialIdeal
    J: MonomialIdeal
    L: MonomialIdeal
    H: MonomialIdeal

    @property
    def declared_variables(self) -> int:
        # the stated ambient ring K[x0, ..., x_(3a), x, y]
        return 3 * (self.a + 1)

    @property
    def used_variables(self) -> int:
        return self.ideal.n


def make_paper_parts(a: int, b: int) -> PaperIdeal:
    _require(isinstance(a, int) and a >= 2, f"the composite construction needs a >= 2, got {a!r}")
    _require(isinstance(b, int) and b >= 1, f"b must be an integer >= 1, got {b!r}")
    ctx = paper_context(a)
    J = make_J(a, ctx)
    x0 = Monomial.variable(0, ctx.n, 2 * b - 1)
    L = scale(x0, J)
    n = ctx.n
    h_gens = []
    for ex, ey in ((2 * b + 1, 0), (2, 2 * b - 1), (0, 2 * b + 1)):
        e = [0] * n
        e[n - 2], e[n - 1] = ex, ey
        h_gens.append(tuple(e))
    H = MonomialIdeal(ctx, h_gens)
    return PaperIdeal(a, b, ideal_sum(L, H), J, L, H)


def make_paper_ideal(a: int, b: int) -> MonomialIdeal:
    """Ideal with (astab, vstab) = (a, b); a = 1 gives make_H(b)."""
    _require(isinstance(a, int) and a >= 1, f"a must be an integer >= 1, got {a!r}")
    if a == 1:
        return make_H(b)
    return make_paper_parts(a, b).ideal


# ---------------------------------------------------------------------------
# predictions

def predict_ass_disjoint_sum(
    ass_a: Sequence, ass_b: Sequence, k: int
) -> frozenset[MonomialPrime]:
    """Ass((A + B)^k) for A, B in disjoint variables.

    ``ass_a[j - 1]`` is Ass(A^j); both sequences must reach exponent k.
    Returns { p ∪ q : 0 <= l < k, p in Ass(A^(k-l)), q in Ass(B^(l+1)) }.
    """
    if k < 1:
        raise ParameterError("k must be >= 1")
    if len(ass_a) < k or len(ass_b) < k:
        raise PreconditionError(f"profiles must cover exponents 1..{k}")
    out = set()
    for ell in range(k):
        for p in ass_a[k - ell - 1]:
            for q in ass_b[ell]:
                if set(p.support) & set(q.support):
                    raise PreconditionError("the two ideals share variables")
                out.add(p | q)
    return frozenset(out)


def predict_ass_J_power(a: int, k: int) -> frozenset[MonomialPrime]:
    """Ass(J^k) for the disjoint triangle sum, by iterating the sum rule.

    Each triangle has Ass = its three edge primes, plus the full triangle
    prime from the second power on.
    """
    _require(a >= 2 and k >= 1, "need a >= 2 and k >= 1")

    def triangle_ass(i, j):
        s = 3 * (i - 1)
        edges = [MonomialPrime((s, s + 1)), MonomialPrime((s, s + 2)), MonomialPrime((s + 1, s + 2))]
        return frozenset(edges + ([MonomialPrime((s, s + 1, s + 2))] if j >= 2 else []))

    profile = [triangle_ass(1, j) for j in range(1, k + 1)]
    for i in range(2, a):
        other = [triangle_ass(i, j) for j in range(1, k + 1)]
        profile = [predict_ass_disjoint_sum(profile, other, j) for j in range(1, k + 1)]
    return profile[k - 1]


def shift_prime(p: MonomialPrime, offset: int) -> MonomialPrime:
    return MonomialPrime(tuple(i + offset for i in p.support))


def predict_ass_paper(a: int, k: int) -> dict[str, frozenset[MonomialPrime]]:
    """Predicted Ass(J^k), Ass(L^k), Ass(I^k) in the paper_context(a) indexing.

    Ass(L^k) = Ass(J^k) ∪ {(x0)} and Ass(I^k) = {p + (x, y) : p in Ass(L^k)}.
    """
    n = 3 * (a - 1) + 3
    ass_j = frozenset(shift_prime(p, 1) for p in predict_ass_J_power(a, k))
    ass_l = ass_j | {MonomialPrime((0,))}
    xy = MonomialPrime((n - 2, n - 1))
    return {"J": ass_j, "L": ass_l, "I": frozenset(p | xy for p in ass_l)}


@dataclass(frozen=True)
class VComposites:
    v_J: int
    v_L: int
    v_I: int
    terms: tuple[int, ...]


def predict_v_composites(a: int, b: int, k: int) -> VComposites:
    """Predicted v(J^k), v(L^k) and v(I^k) for the composite construction.

    v(I^k) is the minimum over 0 <= l < k of (2b+1)(k-l) - 1 + v_m(H^(l+1));
    ``terms`` lists those k candidate values.  v_m(H^j) uses the two-variable
    closed values directly, not the v-number engine.
    """
    _require(a >= 2 and b >= 1 and k >= 1, "need a >= 2, b >= 1, k >= 1")
    v_J = 2 * k + a - 3
    v_L = min((2 * b - 1) * k - 1 + 2 * k, (2 * b - 1) * k + v_J)
    terms = tuple(
        (2 * b + 1) * (k - ell) - 1 + v_H_power(b, ell + 1) for ell in range(k)
    )
    return VComposites(v_J, v_L, min(terms), terms)


def v_paper_ideal(a: int, b: int, k: int) -> int:
    """(2b+1)k + 2b for k < b and (2b+1)k + 2b - 1 from k = b on."""
    _require(a >= 1 and b >= 1 and k >= 1, "need a, b, k >= 1")
    if a == 1:
        return v_H_power(b, k)
    return (2 * b + 1) * k + 2 * b - (1 if k >= b else 0)


@dataclass(frozen=True)
class GroundTruth:
    astab: int
    vstab: int
    slope: int
    intercept: int


def ground_truth(family: str, a: int = 1, b: int = 1) -> GroundTruth:
    """Known (astab, vstab) and eventual v-line for the built-in families."""
    if family == "H":
        return GroundTruth(1, b, 2 * b + 1, -1)
    if family == "paper":
        if a == 1:
            return ground_truth("H", b=b)
        return GroundTruth(a, b, 2 * b + 1, 2 * b - 1)
    if family == "J":
        return GroundTruth(a, 1, 2, a - 3)
    if family == "triangle":
        return GroundTruth(2, 1, 2, -1)
    raise ParameterError(f"unknown family {family!r}")


def default_kmax(a: int, b: int) -> int:
    return max(2 * b + 2, a + b + 2, 6)
