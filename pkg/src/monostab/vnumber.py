"""v-numbers of monomial ideals.

Witnesses are monomials: v_p(I) is the least degree of a monomial u with
I:u = p.  For monomial ideals this agrees with the least degree over all
homogeneous polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Monomial, MonomialIdeal, MonomialPrime
from .decomposition import associated_primes, find_witness, sorted_primes
from .errors import NotAssociatedError, PreconditionError

WITNESS_CONVENTION = "monomial"


@dataclass(frozen=True)
class VReport:
    per_prime: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    value: int = 0

    @property
    def primes(self) -> list[MonomialPrime]:
        return sorted_primes(self.per_prime)

    def argmin(self) -> list[MonomialPrime]:
        return [p for p in self.primes if self.per_prime[p] == self.value]

    def to_dict(self, ctx) -> dict:
        return {
            "v": self.value,
            "witness_convention": WITNESS_CONVENTION,
            "per_prime": [
                {
                    "prime": p.format(ctx),
                    "v_p": self.per_prime[p],
                    "witness": self.witnesses[p].format(ctx),
                }
                for p in self.primes
            ],
        }


def witness(ideal: MonomialIdeal, prime: MonomialPrime, method: str = "components") -> Monomial:
    u = find_witness(ideal, prime, method=method)
    if u is None:
        raise NotAssociatedError(f"{prime.format(ideal.ctx)} is not associated to {ideal!r}")
    return u


def v_p(ideal: MonomialIdeal, prime: MonomialPrime, method: str = "components") -> int:
    """Least degree of a monomial u with I:u = p."""
    return witness(ideal, prime, method).degree


def v_global(ideal: MonomialIdeal) -> VReport:
    ideal.require_proper()
    per_prime, witnesses = {}, {}
    for p in sorted_primes(associated_primes(ideal)):
        u = witness(ideal, p)
        per_prime[p] = u.degree
        witnesses[p] = u
    return VReport(per_prime, witnesses, min(per_prime.values()))


def staircase(ideal: MonomialIdeal) -> tuple[list[int], list[int]]:
    """Exponent sequences (a_i), (b_i) of a two-variable (x, y)-primary ideal.

    Generators are listed by decreasing x-exponent, so a_1 > ... > a_m = 0
    and 0 = b_1 < ... < b_m.
    """
    if ideal.n != 2:
        raise PreconditionError("staircase needs an ideal in exactly two variables")
    if ideal.is_zero() or ideal.is_unit():
        raise PreconditionError("staircase needs a proper nonzero ideal")
    gens = sorted(ideal.exponent_tuples, key=lambda g: -g[0])
    a = [g[0] for g in gens]
    b = [g[1] for g in gens]
    if b[0] != 0 or a[-1] != 0:
        raise PreconditionError("ideal is not (x, y)-primary: a pure power is missing")
    return a, b


def vm_two_variable(ideal: MonomialIdeal) -> int:
    """Closed form v_m(J) = min_i (a_i + b_(i+1) - 2) over the staircase."""
    a, b = staircase(ideal)
    return min(a[i] + b[i + 1] - 2 for i in range(len(a) - 1))
