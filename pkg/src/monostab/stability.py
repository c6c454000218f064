"""Power profiles and horizon-bounded detection of astab, vstab and vstab_p.

No effective bound for Ass or v-number stabilization is available in
general, so every detection is relative to the computed horizon k_max.  An
estimate is ``certified`` only when the caller supplies ground truth (the
built-in families do) and the detection matches it.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass, field

from .core import MonomialIdeal, MonomialPrime, alpha, power, product
from .decomposition import associated_primes, sorted_primes
from .errors import CapacityError
from .vnumber import VReport, v_global

DEFAULT_CAP = 200_000
DEFAULT_WINDOW = 2


@dataclass(frozen=True)
class ProfileEntry:
    k: int
    ideal: MonomialIdeal
    ass: frozenset
    v: VReport


@dataclass
class PowerProfile:
    ideal: MonomialIdeal
    alpha: int
    entries: list = field(default_factory=list)

    @property
    def horizon(self) -> int:
        return len(self.entries)

    def entry(self, k: int) -> ProfileEntry:
        return self.entries[k - 1]

    def v_values(self) -> list[int]:
        return [e.v.value for e in self.entries]

    def ass_sets(self) -> list[frozenset]:
        return [e.ass for e in self.entries]


def build_profile(ideal: MonomialIdeal, k_max: int, cap: int = DEFAULT_CAP) -> PowerProfile:
    """Powers I^1..I^k_max with their associated primes and v-numbers.

    I^(k+1) is formed from I^k; a power with more than ``cap`` minimal
    generators raises ``CapacityError`` naming that exponent.
    """
    ideal.require_proper()
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    profile = PowerProfile(ideal, alpha(ideal))
    current = None
    for k in range(1, k_max + 1):
        current = ideal if current is None else product(current, ideal)
        if len(current) > cap:
            raise CapacityError(k, len(current), cap)
        profile.entries.append(ProfileEntry(k, current, associated_primes(current), v_global(current)))
    return profile


def profile_entry(ideal: MonomialIdeal, k: int, cap: int = DEFAULT_CAP) -> ProfileEntry:
    """One profile entry computed from scratch (no reuse of lower powers)."""
    pk = power(ideal, k, cap=cap)
    return ProfileEntry(k, pk, associated_primes(pk), v_global(pk))


@dataclass(frozen=True)
class StabilityEstimate:
    kind: str
    index: int | None
    horizon: int
    window: int
    certified: bool = False
    line: tuple[int, int] | None = None
    prime: MonomialPrime | None = None
    ascending: bool | None = None
    expected: int | None = None

    @property
    def conclusive(self) -> bool:
        return self.index is not None

    def to_dict(self, ctx=None) -> dict:
        out = {
            "kind": self.kind,
            "index": self.index,
            "horizon": self.horizon,
            "window": self.window,
            "certified": self.certified,
            "conclusive": self.conclusive,
        }
        if self.line is not None:
            out["line"] = {"slope": self.line[0], "intercept": self.line[1]}
        if self.prime is not None:
            out["prime"] = self.prime.format(ctx) if ctx else list(self.prime.support)
        if self.ascending is not None:
            out["ascending"] = self.ascending
        if self.expected is not None:
            out["expected"] = self.expected
        return out


def _check_window(profile: PowerProfile, window: int) -> None:
    if window < 1:
        raise ValueError("window must be >= 1")
    if window >= profile.horizon:
        raise ValueError(f"window {window} must be below the horizon {profile.horizon}")


def _tail_start(values: list, ok=None) -> int:
    """Least 1-based k0 with values[k0-1:] constant (and ok[k] true on the tail)."""
    k0 = len(values)
    if ok is not None and not ok[-1]:
        return len(values) + 1
    while k0 > 1 and values[k0 - 2] == values[-1] and (ok is None or ok[k0 - 2]):
        k0 -= 1
    return k0


def _certify(index, expected):
    return expected is not None and index is not None and index == expected


def detect_astab(
    profile: PowerProfile, window: int = DEFAULT_WINDOW, expected: int | None = None
) -> StabilityEstimate:
    """Least k0 with Ass(I^k) constant on [k0, k_max], if k0 <= k_max - window."""
    _check_window(profile, window)
    ass = profile.ass_sets()
    k0 = _tail_start(ass)
    index = k0 if k0 <= profile.horizon - window else None
    ascending = all(a <= b for a, b in zip(ass, ass[1:]))
    return StabilityEstimate(
        "ass", index, profile.horizon, window, _certify(index, expected),
        ascending=ascending, expected=expected,
    )


def detect_vstab(
    profile: PowerProfile, window: int = DEFAULT_WINDOW, expected: int | None = None
) -> StabilityEstimate:
    """Least k0 with v(I^k) - alpha*k constant on [k0, k_max]."""
    _check_window(profile, window)
    a = profile.alpha
    shifted = [v - a * k for k, v in enumerate(profile.v_values(), start=1)]
    k0 = _tail_start(shifted)
    if k0 > profile.horizon - window:
        return StabilityEstimate("v", None, profile.horizon, window, expected=expected)
    return StabilityEstimate(
        "v", k0, profile.horizon, window, _certify(k0, expected),
        line=(a, shifted[-1]), expected=expected,
    )


def detect_vstab_p(
    profile: PowerProfile,
    prime: MonomialPrime,
    window: int = DEFAULT_WINDOW,
    expected: int | None = None,
) -> StabilityEstimate:
    """Least k0 from which p is associated and v_p(I^k) is linear.

    The slope is read off the last ``window`` differences, which must agree.
    """
    _check_window(profile, window)
    h = profile.horizon
    member = [prime in e.ass for e in profile.entries]
    inconclusive = StabilityEstimate("v_p", None, h, window, prime=prime, expected=expected)
    if not all(member[h - window - 1:]):
        return inconclusive
    vals = [e.v.per_prime.get(prime) for e in profile.entries]
    diffs = {vals[k] - vals[k - 1] for k in range(h - window, h)}
    if len(diffs) != 1:
        return inconclusive
    slope = diffs.pop()
    shifted = [None if v is None else v - slope * k for k, v in enumerate(vals, start=1)]
    k0 = _tail_start(shifted, member)
    if k0 > h - window:
        return inconclusive
    return StabilityEstimate(
        "v_p", k0, h, window, _certify(k0, expected),
        line=(slope, shifted[-1]), prime=prime, expected=expected,
    )


@dataclass(frozen=True)
class InequalityReport:
    astab: StabilityEstimate
    vstab: StabilityEstimate
    vstab_p: tuple
    conclusive: bool
    upper_ok: bool | None = None   # max_p vstab_p >= astab
    lower_ok: bool | None = None   # vstab <= max_p vstab_p

    @property
    def satisfied(self) -> bool:
        return bool(self.conclusive and self.upper_ok and self.lower_ok)


def check_index_inequalities(profile: PowerProfile, window: int = DEFAULT_WINDOW) -> InequalityReport:
    """Evaluate max_p vstab_p >= astab and vstab <= max_p vstab_p.

    p ranges over Ass(I^k_max), the horizon's estimate of the stable set.
    """
    astab = detect_astab(profile, window)
    vstab = detect_vstab(profile, window)
    per_prime = tuple(
        detect_vstab_p(profile, p, window) for p in sorted_primes(profile.entries[-1].ass)
    )
    parts = [astab, vstab, *per_prime]
    if not all(e.conclusive for e in parts):
        return InequalityReport(astab, vstab, per_prime, False)
    top = max(e.index for e in per_prime)
    return InequalityReport(
        astab, vstab, per_prime, True, top >= astab.index, vstab.index <= top
    )


# ---------------------------------------------------------------------------
# serialization

def profile_to_dict(profile: PowerProfile) -> dict:
    ctx = profile.ideal.ctx
    return {
        "vars": list(ctx.names),
        "alpha": profile.alpha,
        "horizon": profile.horizon,
        "entries": [
            {
                "k": e.k,
                "generators": len(e.ideal),
                "ass": [p.format(ctx) for p in sorted_primes(e.ass)],
                "v": e.v.to_dict(ctx),
            }
            for e in profile.entries
        ],
    }


def format_line(line: tuple[int, int]) -> str:
    slope, intercept = line
    if intercept == 0:
        return f"{slope}k"
    return f"{slope}k{intercept:+d}"


def profile_table(profile: PowerProfile, astab=None, vstab=None) -> str:
    ctx = profile.ideal.ctx
    rows = [("k", "#gens", "|Ass|", "v", "v-alpha*k", "Ass")]
    for e in profile.entries:
        rows.append((
            str(e.k), str(len(e.ideal)), str(len(e.ass)), str(e.v.value),
            str(e.v.value - profile.alpha * e.k),
            " ".join(p.format(ctx) for p in sorted_primes(e.ass)),
        ))
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]) - 1)]
    buf = io.StringIO()
    for r in rows:
        cells = [c.rjust(w) for c, w in zip(r, widths)] + [r[-1]]
        buf.write("  ".join(cells).rstrip() + "\n")
    if astab is not None and vstab is not None:
        a = astab.index if astab.conclusive else "?"
        v = vstab.index if vstab.conclusive else "?"
        line = format_line(vstab.line) if vstab.line else "?"
        buf.write(f"astab={a} vstab={v} line={line}\n")
    return buf.getvalue()


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
