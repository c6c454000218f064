"""Monomials, monomial ideals and their exact arithmetic.

Coefficients never appear: a monomial is its exponent vector and a monomial
ideal is its minimal generating set, stored in ascending graded
lexicographic order (variables ordered as declared, first variable largest).
Because the minimal generating set is unique, structural equality of two
``MonomialIdeal`` objects is ideal equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import _kernels as kern
from .errors import ArityError, CapacityError, ImproperIdealError, ParseError

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class VariableContext:
    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("a variable context needs at least one variable")
        for name in names:
            if not isinstance(name, str) or not _NAME.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")

    @classmethod
    def indexed(cls, prefix: str, start: int, stop: int) -> "VariableContext":
        """Variables ``prefix+start`` .. ``prefix+stop`` inclusive."""
        return cls(tuple(f"{prefix}{i}" for i in range(start, stop + 1)))

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def monomial(self, **powers: int) -> "Monomial":
        exps = [0] * self.n
        for name, e in powers.items():
            exps[self.index(name)] += e
        return Monomial(tuple(exps))


@dataclass(frozen=True, order=False)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exps):
            raise ValueError("exponents must be nonnegative")
        if any(e > kern.MAX_EXPONENT for e in exps):
            raise OverflowError("exponent outside the supported range")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def unit(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def variable(cls, i: int, n: int, power: int = 1) -> "Monomial":
        exps = [0] * n
        exps[i] = power
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e)

    def is_unit(self) -> bool:
        return not any(self.exponents)

    def sort_key(self):
        return (self.degree, self.exponents)

    def _same_arity(self, other: "Monomial") -> None:
        if self.n != other.n:
            raise ArityError(f"arity {self.n} vs {other.n}")

    def divides(self, other: "Monomial") -> bool:
        self._same_arity(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._same_arity(other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, k: int) -> "Monomial":
        return Monomial(tuple(e * k for e in self.exponents))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError("inexact monomial division")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: "Monomial") -> "Monomial":
        self._same_arity(other)
        return Monomial(tuple(map(min, self.exponents, other.exponents)))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._same_arity(other)
        return Monomial(tuple(map(max, self.exponents, other.exponents)))

    def __lt__(self, other: "Monomial") -> bool:
        return self.sort_key() < other.sort_key()

    def format(self, ctx: VariableContext) -> str:
        if ctx.n != self.n:
            raise ArityError(f"arity {self.n} vs context {ctx.n}")
        factors = []
        for name, e in zip(ctx.names, self.exponents):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors) if factors else "1"


@dataclass(frozen=True)
class MonomialPrime:
    """The prime ideal generated by the variables indexed by ``support``."""

    support: tuple[int, ...]

    def __post_init__(self):
        supp = tuple(sorted(set(int(i) for i in self.support)))
        if not supp:
            raise ValueError("the zero prime is not a MonomialPrime")
        if supp[0] < 0:
            raise ValueError("variable indices must be nonnegative")
        object.__setattr__(self, "support", supp)

    def __len__(self):
        return len(self.support)

    def sort_key(self):
        return (len(self.support), self.support)

    def __lt__(self, other: "MonomialPrime") -> bool:
        return self.sort_key() < other.sort_key()

    def __or__(self, other: "MonomialPrime") -> "MonomialPrime":
        return MonomialPrime(self.support + other.support)

    def issubset(self, other: "MonomialPrime") -> bool:
        return set(self.support) <= set(other.support)

    def as_ideal(self, ctx: VariableContext) -> "MonomialIdeal":
        return MonomialIdeal(ctx, [Monomial.variable(i, ctx.n) for i in self.support])

    def format(self, ctx: VariableContext) -> str:
        return "(" + ", ".join(ctx.names[i] for i in self.support) + ")"


class MonomialIdeal:
    """A monomial ideal, held as its canonical minimal generating set."""

    __slots__ = ("ctx", "_gens", "_array", "_hash")

    def __init__(self, ctx: VariableContext, generators: Iterable = ()):
        arr = _to_matrix(generators, ctx.n)
        self._set(ctx, kern.minimal_rows(arr))

    @classmethod
    def _from_minimal(cls, ctx: VariableContext, arr: np.ndarray) -> "MonomialIdeal":
        obj = cls.__new__(cls)
        obj._set(ctx, arr)
        return obj

    def _set(self, ctx, arr):
        self.ctx = ctx
        self._array = arr
        self._array.setflags(write=False)
        self._gens = tuple(map(tuple, arr.tolist()))
        self._hash = None

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def array(self) -> np.ndarray:
        """Read-only exponent matrix of the minimal generators."""
        return self._array

    @property
    def exponent_tuples(self) -> tuple[tuple[int, ...], ...]:
        return self._gens

    @property
    def generators(self) -> tuple[Monomial, ...]:
        return tuple(Monomial(g) for g in self._gens)

    def __len__(self):
        return len(self._gens)

    def __iter__(self):
        return iter(self.generators)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ctx == other.ctx and self._gens == other._gens

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, self._gens))
        return self._hash

    def __repr__(self):
        return f"MonomialIdeal({self.format()})"

    def is_zero(self) -> bool:
        return not self._gens

    def is_unit(self) -> bool:
        return len(self._gens) == 1 and not any(self._gens[0])

    def require_proper(self) -> None:
        if self.is_zero():
            raise ImproperIdealError("operation undefined on the zero ideal")
        if self.is_unit():
            raise ImproperIdealError("operation undefined on the unit ideal")

    def max_exponents(self) -> tuple[int, ...]:
        """Componentwise maximum exponent over the minimal generators."""
        if self.is_zero():
            return (0,) * self.n
        return tuple(int(e) for e in self._array.max(axis=0))

    def __contains__(self, u: Monomial) -> bool:
        return contains(self, u)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_sum(self, other)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __pow__(self, k: int) -> "MonomialIdeal":
        return power(self, k)

    def format(self) -> str:
        return "(" + ", ".join(g.format(self.ctx) for g in self.generators) + ")"


def _to_matrix(generators, n: int) -> np.ndarray:
    rows = []
    for g in generators:
        exps = g.exponents if isinstance(g, Monomial) else tuple(g)
        if len(exps) != n:
            raise ArityError(f"generator of arity {len(exps)} in a context of arity {n}")
        rows.append(exps)
    arr = kern.as_matrix(rows, n) if rows else np.zeros((0, n), dtype=np.int64)
    kern.check_exponents(arr)
    return arr


def _check_arity(ideal: MonomialIdeal, u: Monomial) -> None:
    if u.n != ideal.n:
        raise ArityError(f"monomial of arity {u.n} against an ideal of arity {ideal.n}")


def _check_same_ring(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.ctx != b.ctx:
        raise ArityError("ideals live in different variable contexts")


def minimalize(gens: Iterable, ctx: VariableContext) -> MonomialIdeal:
    return MonomialIdeal(ctx, gens)


def unit_ideal(ctx: VariableContext) -> MonomialIdeal:
    return MonomialIdeal(ctx, [Monomial.unit(ctx.n)])


def zero_ideal(ctx: VariableContext) -> MonomialIdeal:
    return MonomialIdeal(ctx, [])


def contains(ideal: MonomialIdeal, u: Monomial) -> bool:
    """True iff some minimal generator divides ``u``."""
    _check_arity(ideal, u)
    if ideal.is_zero():
        return False
    return bool((ideal.array <= np.asarray(u.exponents)).all(axis=1).any())


def colon_monomial(ideal: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    """I : u, generated by g / gcd(g, u) over the generators g."""
    _check_arity(ideal, u)
    arr = ideal.array - np.minimum(ideal.array, np.asarray(u.exponents, dtype=np.int64))
    return MonomialIdeal._from_minimal(ideal.ctx, kern.minimal_rows(arr))


def alpha(ideal: MonomialIdeal) -> int:
    """Initial degree: the least degree of a nonzero element."""
    if ideal.is_zero():
        raise ImproperIdealError("the initial degree of the zero ideal is undefined")
    return int(ideal.array.sum(axis=1).min())


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(a, b)
    arr = np.concatenate((a.array, b.array))
    return MonomialIdeal._from_minimal(a.ctx, kern.minimal_rows(arr))


def scale(u: Monomial, ideal: MonomialIdeal) -> MonomialIdeal:
    """The ideal u·I."""
    _check_arity(ideal, u)
    arr = ideal.array + np.asarray(u.exponents, dtype=np.int64)
    kern.check_exponents(arr)
    return MonomialIdeal._from_minimal(ideal.ctx, kern.minimal_rows(arr))


def product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(a, b)
    if a.n and len(a) and len(b):
        bound = int(a.array.max()) + int(b.array.max())
        if bound > kern.MAX_EXPONENT:
            raise OverflowError("product exponent overflow")
    return MonomialIdeal._from_minimal(a.ctx, kern.sum_products(a.array, b.array))


def intersection(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """I ∩ J, generated by pairwise lcms."""
    _check_same_ring(a, b)
    if a.is_zero() or b.is_zero():
        return zero_ideal(a.ctx)
    return MonomialIdeal._from_minimal(a.ctx, kern.lcm_products(a.array, b.array))


def power(ideal: MonomialIdeal, k: int, cap: int | None = None) -> MonomialIdeal:
    """Minimal generating set of I^k.

    Built as I^j = I^(j-1)·I; every intermediate product set is minimalized
    before the next multiplication, so non-minimal products never propagate.
    ``cap`` bounds the number of minimal generators of each intermediate
    power (``CapacityError`` names the first offending exponent).
    """
    if k < 0:
        raise ValueError("power exponent must be nonnegative")
    if k == 0:
        return unit_ideal(ideal.ctx)
    result = ideal
    for j in range(1, k + 1):
        if j > 1:
            result = product(result, ideal)
        if cap is not None and len(result) > cap:
            raise CapacityError(j, len(result), cap)
    return result


# ---------------------------------------------------------------------------
# text format

def _parse_monomial(text: str, ctx: VariableContext, line: int, col: int) -> Monomial:
    exps = [0] * ctx.n
    if text == "1":
        return Monomial(tuple(exps))
    pos = col
    for factor in text.split("*"):
        if not factor:
            raise ParseError("empty factor", line, pos)
        name, caret, power = factor.partition("^")
        if name not in ctx.names:
            raise ParseError(f"unknown variable {name!r}", line, pos)
        e = 1
        if caret:
            if not power.isdigit():
                raise ParseError(f"bad exponent {power!r}", line, pos + len(name) + 1)
            e = int(power)
        exps[ctx.index(name)] += e
        pos += len(factor) + 1
    return Monomial(tuple(exps))


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse the ``vars:`` header plus one-generator-per-line format."""
    ctx = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        col = len(body) - len(body.lstrip()) + 1
        compact = "".join(body.split())
        if ctx is None:
            if not compact.startswith("vars:"):
                raise ParseError("expected a 'vars:' header", lineno, col)
            names = compact[len("vars:"):].split(",")
            try:
                ctx = VariableContext(tuple(names))
            except ValueError as exc:
                raise ParseError(str(exc), lineno, col) from None
            continue
        gens.append(_parse_monomial(compact, ctx, lineno, col))
    if ctx is None:
        raise ParseError("missing 'vars:' header", 1, 1)
    return MonomialIdeal(ctx, gens)


def format_ideal(ideal: MonomialIdeal) -> str:
    lines = ["vars: " + ", ".join(ideal.ctx.names)]
    lines += [g.format(ideal.ctx) for g in ideal.generators]
    return "\n".join(lines) + "\n"
