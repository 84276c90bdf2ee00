"""Bounds and feasibility verdicts for the minimal Euler characteristic.

q_{2n}(G) is the minimum of (-1)^n chi(M) over closed orientable
2n-manifolds with (n-1)-connected universal cover and fundamental group G.
For finite G the package assembles

    max(e_n(G), mu'_n(G) - mu'_{n-1}(G))  <=  q_{2n}(G)  <=  2 mu'_n(G)

together with exact values for groups of declared cohomological period
(2 when the period divides n+2, 0 when it divides n+1), and for n = 2 a
verdict on whether G can be the fundamental group of a rational homology
4-sphere.  Each emitted verdict cites the rules that produced it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace

from .errors import (
    EulerCharError,
    MissingMetadataError,
    UnsupportedFamilyError,
)
from .groupspec import ElementaryAbelian, Frobenius, GroupMeta, GroupSpec, SemidirectIsotypic
from .swan import Exceptionality, compute_en, compute_mun, series_bundle

# Exact values established by finer (Tate cohomology) arguments than this
# package computes; reported as annotations next to the computed interval.
KNOWN_EXACT_Q4 = {"A4": 4, "A5": 4}

# Non-periodic finite subgroups of SO(3) all have mu_2 = 2, hence q_4 <= 4.
KNOWN_MU2_SO3_NONPERIODIC = ("A4", "A5", "S4", "non-periodic dihedral")

_SPEC_NAMES = {Frobenius(2): "A4"}


class VerdictKind(enum.Enum):
    IMPOSSIBLE_QS = "impossible"
    REALIZABLE_QS = "realizable"
    OPEN = "open"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    reason: str


@dataclass(frozen=True)
class QBoundReport:
    spec: GroupSpec
    n: int
    lower: int
    upper: int | None
    exact: int | None
    verdict: Verdict
    citations: tuple[str, ...]
    notes: tuple[str, ...] = ()
    annotations: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.upper is not None and self.lower > self.upper:
            raise EulerCharError(f"inverted interval [{self.lower}, {self.upper}]")
        if self.exact is not None:
            if self.exact < self.lower or (self.upper is not None and self.exact > self.upper):
                raise EulerCharError(
                    f"exact value {self.exact} outside interval [{self.lower}, {self.upper}]"
                )
        if not self.citations:
            raise EulerCharError("a report must cite the rules it applied")


def bounds_from_invariants(e_n: int, mu_prime_n: int, mu_prime_prev: int, n: int) -> tuple[int, int]:
    """Theorem-A style interval from the invariants of one group."""
    if n < 2:
        raise EulerCharError("bounds are defined for n >= 2")
    lower = max(e_n, mu_prime_n - mu_prime_prev)
    return lower, 2 * mu_prime_n


def periodic_exact_value(period: int, n: int) -> int | None:
    """Exact q_{2n} for a group of declared even period: 2, 0, or undetermined."""
    if period <= 0 or period % 2 != 0:
        raise EulerCharError(f"cohomological periods are positive even integers, got {period}")
    if (n + 2) % period == 0:
        return 2
    if (n + 1) % period == 0:
        return 0
    return None


def subgroup_refine(lower: int, subgroup_data, n: int) -> int:
    """Tighten a lower bound using finite-index subgroup invariants.

    Each datum is (index [G:H], e_n(H), mu'_n(H) - mu'_{n-1}(H)); both
    subgroup invariants bound [G:H] (-1)^n chi, so their ceilings against
    the index bound q_{2n}(G) from below.
    """
    best = lower
    for index, e_h, mu_diff_h in subgroup_data:
        if index <= 0:
            raise EulerCharError(f"subgroup index must be positive, got {index}")
        for bound in (e_h, mu_diff_h):
            best = max(best, -((-bound) // index))
    return best


def euler_sign_check(n: int, chi: int) -> bool:
    """chi > 0 exactly when n is even (nontrivial finite fundamental group)."""
    return (chi > 0) == (n % 2 == 0)


def annotation_for(spec: GroupSpec, n: int) -> dict:
    """Known exact values shipped as data, keyed by classical group names."""
    name = None
    for key, value in _SPEC_NAMES.items():
        if _same_family(spec, key):
            name = value
    out: dict = {}
    if n == 2 and name in KNOWN_EXACT_Q4:
        out["name"] = name
        out["q4"] = KNOWN_EXACT_Q4[name]
        out["source"] = "known-value-annotation"
    return out


def _same_family(a: GroupSpec, b: GroupSpec) -> bool:
    """Equality of the family data, ignoring declared metadata."""
    if type(a) is not type(b):
        return False
    return replace(a, meta=GroupMeta()) == replace(b, meta=GroupMeta())


def q_bound_report(
    spec: GroupSpec,
    n: int,
    modules=None,
    memory_budget=None,
    subgroup_data=None,
) -> QBoundReport:
    """Assemble the q_{2n} interval, exact value, and verdict for one group."""
    if n < 2:
        raise EulerCharError("q_{2n} bounds are assembled for n >= 2")
    citations: list[str] = []
    notes: list[str] = []

    bundle = series_bundle(spec, n, memory_budget)
    e_n = compute_en(bundle.values(), n)
    citations.append("cohomological-lower-bound")
    lower = e_n
    upper = None
    mu_n = mu_prime_n = None
    try:
        res = compute_mun(spec, n, modules=modules, memory_budget=memory_budget)
        mu_n, mu_prime_n = res.mu, res.mu_prime
        notes.extend(res.notes)
        if res.exceptional is Exceptionality.DECLARED:
            notes.append("declared exceptional pair: mu'_n = 0 < mu_n = 1")
        upper = 2 * mu_prime_n
        citations.append("double-resolution-upper-bound")
    except (MissingMetadataError, UnsupportedFamilyError) as exc:
        notes.append(f"mu_{n} unavailable: {exc}")
    if mu_prime_n is not None:
        try:
            prev = compute_mun(spec, n - 1, modules=modules, memory_budget=memory_budget)
            lower = max(lower, mu_prime_n - prev.mu_prime)
            citations.append("resolution-difference-lower-bound")
        except (MissingMetadataError, UnsupportedFamilyError) as exc:
            notes.append(f"mu_{n - 1} unavailable, lower bound uses e_n only: {exc}")

    if subgroup_data:
        refined = subgroup_refine(lower, subgroup_data, n)
        if refined > lower:
            lower = refined
            citations.append("subgroup-index-refinement")

    exact = None
    if spec.meta.period is not None:
        exact = periodic_exact_value(spec.meta.period, n)
        if exact is not None:
            citations.append("periodicity-exact-value")

    verdict = _verdict(spec, n, lower, mu_n, citations)
    annotations = annotation_for(spec, n)
    if annotations:
        citations.append("known-value-annotation")
    return QBoundReport(
        spec=spec,
        n=n,
        lower=lower,
        upper=upper,
        exact=exact,
        verdict=verdict,
        citations=tuple(dict.fromkeys(citations)),
        notes=tuple(notes),
        annotations=annotations,
    )


def _verdict(spec: GroupSpec, n: int, lower: int, mu_n: int | None, citations: list[str]) -> Verdict:
    if n % 2 == 1:
        citations.append("euler-characteristic-sign")
        return Verdict(
            VerdictKind.IMPOSSIBLE_QS,
            "rational homology spheres need chi = 2, impossible in dimensions 2n with n odd",
        )
    if mu_n == 1:
        citations.append("minimal-resolution-realizability")
        return Verdict(
            VerdictKind.REALIZABLE_QS,
            f"mu_{n} = 1: a minimal resolution thickens to a rational homology {2 * n}-sphere",
        )
    impossible = lower > 2
    reasons = []
    if impossible:
        reasons.append(f"q_{2 * n} >= {lower} > 2")
        if isinstance(spec, ElementaryAbelian) and spec.k > 3:
            citations.append("generator-count-obstruction")
    if n == 2 and isinstance(spec, SemidirectIsotypic) and spec.p % 2 == 1 and spec.m > 1:
        doubled = (2 * spec.a) % spec.m
        if doubled != 0 and spec.k > 4:
            citations.append("isotypic-fixed-point-free-obstruction")
            impossible = True
            reasons.append("fixed-point-free square of the action with rank above 4")
        if doubled == 0 and spec.k > 1:
            citations.append("order-two-eigenvalue-obstruction")
            impossible = True
            reasons.append("order-two eigenvalue action with rank above 1")
    if impossible:
        return Verdict(VerdictKind.IMPOSSIBLE_QS, "; ".join(reasons))
    return Verdict(VerdictKind.OPEN, "interval does not decide realizability")


def qs4_verdict(spec: GroupSpec, modules=None, memory_budget=None) -> QBoundReport:
    """Rational homology 4-sphere feasibility report (the n = 2 case)."""
    return q_bound_report(spec, 2, modules=modules, memory_budget=memory_budget)
