"""Irreducible decomposition, associated primes and monomial witnesses.

Two independent routes to Ass(I) are provided:

* ``"components"`` reads the radicals off the irredundant irreducible
  decomposition and confirms each one with an explicit witness;
* ``"box"`` enumerates every monomial u with u_i <= E_i (E = componentwise
  maximum generator exponent) and keeps the colon ideals I:u that are prime.

Replacing u_i > E_i by E_i leaves every g/gcd(g, u) unchanged, so the box
holds a witness of minimal degree for every associated prime.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernels as kern
from .core import (
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    VariableContext,
    colon_monomial,
    contains,
)
from .errors import ArityError, CapacityError

BOX_LIMIT = 250_000


@dataclass(frozen=True)
class IrreducibleComponent:
    """The irreducible ideal (x_i^e_i : i in support)."""

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        entries = tuple(sorted((int(i), int(e)) for i, e in self.entries))
        if not entries:
            raise ValueError("an irreducible component needs a nonempty support")
        if any(e <= 0 for _, e in entries):
            raise ValueError("component exponents must be positive")
        object.__setattr__(self, "entries", entries)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.entries)

    @property
    def radical(self) -> MonomialPrime:
        return MonomialPrime(self.support)

    def contains(self, u: Monomial) -> bool:
        return any(u.exponents[i] >= e for i, e in self.entries)

    def as_ideal(self, ctx: VariableContext) -> MonomialIdeal:
        return MonomialIdeal(ctx, [Monomial.variable(i, ctx.n, e) for i, e in self.entries])

    def format(self, ctx: VariableContext) -> str:
        return self.as_ideal(ctx).format()


def _decompose(arr: np.ndarray) -> np.ndarray:
    """Irredundant irreducible components of a proper nonzero ideal.

    Returns a matrix whose rows are component exponent vectors, 0 marking a
    variable outside the support.  Generators are added one at a time: a
    component Q that misses the new generator g is replaced by the
    components Q + (x_j^g_j) for j in supp(g).  Such a replacement can only
    be made redundant by a component whose j-th exponent is also g_j, which
    keeps the redundancy pass small.
    """
    n = arr.shape[1]
    inf = int(arr.max()) + 1
    packer = kern.Packer(n, inf)
    gens = arr[np.lexsort([arr[:, i] for i in range(n - 1, -1, -1)])[::-1]]

    first = gens[0]
    rows = []
    for i in np.flatnonzero(first):
        row = np.full(n, inf, dtype=np.int64)
        row[i] = first[i]
        rows.append(row)
    comps = packer.pack(np.array(rows, dtype=np.int64))

    for g in gens[1:]:
        # g lies outside Q exactly when g + 1 <= Q componentwise
        missed = packer.le_table(packer.pack((g + 1)[None, :]), comps)[0]
        if not missed.any():
            continue
        keep = comps[~missed]
        bad = comps[missed]
        parts = [keep]
        for j in np.flatnonzero(g):
            gj = int(g[j])
            fresh = packer.set_column(bad, j, gj)
            rivals = keep[packer.column(keep, j) == gj]
            if len(rivals):
                fresh = fresh[~packer.some_row_above(fresh, rivals)]
            if len(fresh) > 1:
                fresh = _drop_dominated(packer, fresh)
            parts.append(fresh)
        comps = np.concatenate(parts)

    out = packer.unpack(comps)
    out[out == inf] = 0
    return out


def _drop_dominated(packer: kern.Packer, rows: np.ndarray) -> np.ndarray:
    """Remove duplicates and rows lying componentwise below another row."""
    view = np.ascontiguousarray(rows).view(
        np.dtype((np.void, rows.dtype.itemsize * rows.shape[1]))
    ).ravel()
    _, idx = np.unique(view, return_index=True)
    rows = rows[np.sort(idx)]
    drop = np.zeros(len(rows), dtype=bool)
    step = 1024
    for s in range(0, len(rows), step):
        blk = rows[s:s + step]
        table = packer.le_table(blk, rows)
        table[np.arange(len(blk)), np.arange(s, s + len(blk))] = False
        drop[s:s + step] = table.any(axis=1)
    return rows[~drop]


@lru_cache(maxsize=512)
def _component_matrix(ideal: MonomialIdeal) -> np.ndarray:
    mat = _decompose(np.asarray(ideal.array))
    mat = mat[_component_order(mat)]
    mat.setflags(write=False)
    return mat


def _component_order(mat: np.ndarray) -> np.ndarray:
    support = (mat > 0).astype(np.int64)
    keys = [mat[:, i] for i in range(mat.shape[1] - 1, -1, -1)]
    keys += [-support[:, i] for i in range(mat.shape[1] - 1, -1, -1)]
    keys.append(support.sum(axis=1))
    return np.lexsort(keys)


def irreducible_decomposition(ideal: MonomialIdeal) -> tuple[IrreducibleComponent, ...]:
    """Irredundant irreducible decomposition, in a deterministic order."""
    ideal.require_proper()
    mat = _component_matrix(ideal)
    return tuple(
        IrreducibleComponent(tuple((int(i), int(row[i])) for i in np.flatnonzero(row)))
        for row in mat
    )


def localize(ideal: MonomialIdeal, prime: MonomialPrime) -> MonomialIdeal:
    """Set every variable outside ``prime`` to 1."""
    mask = np.zeros(ideal.n, dtype=bool)
    mask[list(prime.support)] = True
    arr = np.where(mask, ideal.array, 0)
    return MonomialIdeal._from_minimal(ideal.ctx, kern.minimal_rows(arr))


def _check_prime(ideal: MonomialIdeal, prime: MonomialPrime) -> None:
    if prime.support[-1] >= ideal.n:
        raise ArityError(f"prime {prime.support} outside a context of arity {ideal.n}")


# ---------------------------------------------------------------------------
# witnesses

def _witness_candidates(ideal: MonomialIdeal, prime: MonomialPrime):
    """Minimum degree and all minimum-degree witnesses u with I:u = p.

    Write P for the support of p and C for its complement.  A monomial u is
    a witness iff (1) u_P is a standard monomial of the localization I[P]
    with x_i u_P in I[P] for every i in P, and (2) x_i u lies in I for each
    i in P.  Condition (1) says u_P + 1 is the exponent vector of an
    irreducible component of I[P] with support exactly P, equivalently of
    a component of I with support exactly P.  Given u_P,
    condition (2) says u_C lies in the intersection over i in P of
    T_i = (g_C : g generator, g_P <= u_P + e_i).
    """
    P = np.array(prime.support)
    mask = np.zeros(ideal.n, dtype=bool)
    mask[P] = True
    # the irredundant components of I[P] with support P are exactly the
    # components of I with support P (irreducible ideals are meet-prime)
    comps = _component_matrix(ideal)
    support = comps > 0
    full = comps[(support == mask).all(axis=1)][:, P]
    if not len(full):
        return None, []
    corners = full - 1
    gens = np.asarray(ideal.array)
    g_in, g_out = gens[:, mask], gens[:, ~mask]
    deg_out = g_out.sum(axis=1)
    lower, upper = _corner_bounds(corners, g_in, g_out)
    feasible = np.isfinite(lower)
    if not feasible.any():
        return None, []
    ceiling = upper[feasible].min()
    live = np.flatnonzero(feasible & (lower <= ceiling))
    live = live[np.argsort(lower[live], kind="stable")]

    floor = corners.sum(axis=1)
    best = None
    found = []
    for idx in live:
        if best is not None and lower[idx] > best:
            break
        lb = int(floor[idx])
        corner = corners[idx]
        budget = int(ceiling if best is None else best) - lb
        cheap = deg_out <= budget
        gi, go = g_in[cheap], g_out[cheap]
        transfer = []
        for member in _bumped_members(gi, corner):
            transfer.append(kern.minimal_rows(go[member]))
        transfer.sort(key=len)
        inter = transfer[0]
        for ti in transfer[1:]:
            inter = kern.lcm_products(inter, ti, budget)
            if not len(inter):
                break
        if not len(inter):
            continue
        degs = inter.sum(axis=1)
        cost = lb + int(degs.min())
        if best is None or cost < best:
            best, found = cost, []
        if cost == best:
            for rest in inter[degs == degs.min()]:
                u = np.zeros(ideal.n, dtype=np.int64)
                u[mask] = corner
                u[~mask] = rest
                found.append(Monomial(tuple(u.tolist())))
    return best, found


def _bumped_members(g_in: np.ndarray, corner: np.ndarray):
    """For each t, the rows of ``g_in`` lying below corner + e_t."""
    over = g_in > corner
    fails = over.sum(axis=1)
    inside = fails == 0
    single = (fails == 1)[:, None] & over & (g_in == corner + 1)
    return [inside | single[:, t] for t in range(len(corner))]


def _corner_bounds(corners, g_in, g_out):
    """Per-corner lower and upper bounds on the witness degree.

    For corner a the complement part must lie in every T_i, so its degree is
    at least max_i alpha(T_i); the lcm of one least-degree generator from
    each T_i is a feasible choice and gives the upper bound.
    """
    c, width = corners.shape
    deg_out = g_out.sum(axis=1)
    big = np.iinfo(np.int64).max
    lower = np.full(c, np.inf)
    upper = np.full(c, np.inf)
    floor = corners.sum(axis=1)
    step = max(1, 4_000_000 // max(1, g_in.shape[0] * max(width, 1)))
    for s in range(0, c, step):
        blk = corners[s:s + step]
        over = g_in[None, :, :] > blk[:, None, :]
        fails = over.sum(axis=2)
        inside = fails == 0
        single = (fails == 1)[:, :, None] & over & (g_in[None, :, :] == blk[:, None, :] + 1)
        alphas = np.zeros(len(blk))
        lcm = np.zeros((len(blk), g_out.shape[1]), dtype=np.int64)
        ok = np.ones(len(blk), dtype=bool)
        rows = np.arange(len(blk))
        for t in range(width):
            member = inside | single[:, :, t]
            dm = np.where(member, deg_out[None, :], big)
            arg = dm.argmin(axis=1)
            ok &= member[rows, arg]
            alphas = np.maximum(alphas, dm[rows, arg])
            lcm = np.maximum(lcm, g_out[arg])
        lower[s:s + step] = np.where(ok, floor[s:s + step] + alphas, np.inf)
        upper[s:s + step] = np.where(ok, floor[s:s + step] + lcm.sum(axis=1), np.inf)
    return lower, upper


@lru_cache(maxsize=4096)
def _witness(ideal: MonomialIdeal, prime: MonomialPrime) -> Monomial | None:
    _, found = _witness_candidates(ideal, prime)
    return min(found, key=Monomial.sort_key) if found else None


def _box_points(ideal: MonomialIdeal, limit: int) -> np.ndarray:
    bound = ideal.max_exponents()
    size = 1
    for e in bound:
        size *= e + 1
    if size > limit:
        raise CapacityError(0, size, limit)
    grids = np.indices([e + 1 for e in bound]).reshape(ideal.n, -1).T
    return grids[kern.canonical_order(grids)]


def is_prime_colon(colon: MonomialIdeal, prime: MonomialPrime) -> bool:
    return colon == prime.as_ideal(colon.ctx)


def _box_witness(ideal: MonomialIdeal, prime: MonomialPrime, limit: int) -> Monomial | None:
    target = prime.as_ideal(ideal.ctx)
    for row in _box_points(ideal, limit):
        u = Monomial(tuple(row.tolist()))
        if not contains(ideal, u) and colon_monomial(ideal, u) == target:
            return u
    return None


def find_witness(
    ideal: MonomialIdeal,
    prime: MonomialPrime,
    method: str = "components",
    box_limit: int = BOX_LIMIT,
) -> Monomial | None:
    """A minimum-degree monomial u with u not in I and I:u = p.

    Among witnesses of the least degree the graded-lex least is returned.
    ``None`` means p is not associated to I.  ``method="box"`` runs the
    exhaustive box enumeration instead (small inputs only).
    """
    ideal.require_proper()
    _check_prime(ideal, prime)
    if method == "components":
        return _witness(ideal, prime)
    if method == "box":
        return _box_witness(ideal, prime, box_limit)
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# associated primes

def _ass_components(ideal: MonomialIdeal) -> frozenset[MonomialPrime]:
    primes = set()
    for row in _component_matrix(ideal):
        p = MonomialPrime(tuple(np.flatnonzero(row).tolist()))
        if p in primes:
            continue
        u = _witness(ideal, p)
        if u is None or colon_monomial(ideal, u) != p.as_ideal(ideal.ctx):
            raise RuntimeError(f"no witness confirms component radical {p.support}")
        primes.add(p)
    return frozenset(primes)


def _ass_box(ideal: MonomialIdeal, limit: int) -> frozenset[MonomialPrime]:
    primes = set()
    for row in _box_points(ideal, limit):
        u = Monomial(tuple(row.tolist()))
        if contains(ideal, u):
            continue
        colon = colon_monomial(ideal, u)
        if colon.is_zero() or colon.is_unit():
            continue
        if int(colon.array.sum(axis=1).max()) == 1:
            primes.add(MonomialPrime(tuple(np.flatnonzero(colon.array.sum(axis=0)).tolist())))
    return frozenset(primes)


@lru_cache(maxsize=512)
def _ass_cached(ideal: MonomialIdeal) -> frozenset[MonomialPrime]:
    return _ass_components(ideal)


def associated_primes(
    ideal: MonomialIdeal, method: str = "components", box_limit: int = BOX_LIMIT
) -> frozenset[MonomialPrime]:
    """Ass(I) for a proper nonzero monomial ideal.

    ``method`` is ``"components"`` (default), ``"box"`` or ``"both"``; the
    last runs the two algorithms and raises ``RuntimeError`` on disagreement.
    """
    ideal.require_proper()
    if method == "components":
        return _ass_cached(ideal)
    if method == "box":
        return _ass_box(ideal, box_limit)
    if method == "both":
        a = _ass_cached(ideal)
        b = _ass_box(ideal, box_limit)
        if a != b:
            raise RuntimeError(
                f"associated prime algorithms disagree: {sorted(a)} vs {sorted(b)}"
            )
        return a
    raise ValueError(f"unknown method {method!r}")


def minimal_primes(ideal: MonomialIdeal) -> frozenset[MonomialPrime]:
    ass = associated_primes(ideal)
    return frozenset(
        p for p in ass if not any(q != p and q.issubset(p) for q in ass)
    )


def sorted_primes(primes) -> list[MonomialPrime]:
    return sorted(primes, key=MonomialPrime.sort_key)


def clear_caches() -> None:
    _component_matrix.cache_clear()
    _witness.cache_clear()
    _ass_cached.cache_clear()


__all__ = [
    "IrreducibleComponent",
    "associated_primes",
    "clear_caches",
    "find_witness",
    "irreducible_decomposition",
    "is_prime_colon",
    "localize",
    "minimal_primes",
    "sorted_primes",
]
