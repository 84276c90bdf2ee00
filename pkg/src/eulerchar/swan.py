"""The cohomological invariants e_n and the Swan invariants mu_n, mu'_n.

e_n(G) is the least integer bounding, over F = Q and F = F_p for every
prime p dividing |G|,

    h^n(G,F) - 2 (h^{n-1}(G,F) - h^{n-2}(G,F) + ... +- h^0(G,F)).

mu_n(G) is the least integer bounding (dim M)^{-1} (h^n(G,M) - ... +-
h^0(G,M)) over simple F_pG-modules M, subject to the floors mu_n >= 1 for
n even and mu_n >= 0 for n odd (G nontrivial).  mu'_n is the projective
variant: it differs from mu_n only for the exceptional pairs, which are
never detected here, only declared through spec metadata.

Computation paths by family:
  p-groups              alternating sums of the closed-form series
  cyclic                1 for n even, 0 for n odd
  semidirect E_k x| C   character enumeration (all simples are linear)
  declared period       periodicity facts in the degrees they cover
  table + module list   brute-force Swan formula through the oracle
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .characters import mun_semidirect
from .errors import (
    EulerCharError,
    MissingMetadataError,
    TruncationError,
    UnsupportedFamilyError,
)
from .groupspec import (
    ConcreteGroup,
    Cyclic,
    ElementaryAbelian,
    Frobenius,
    GroupSpec,
    Product,
    Semidirect,
    SemidirectIsotypic,
    Trivial,
    realize,
)
from .oracle import FpModule, cochain_cohomology_dim
from .series import DimSeries, closed_form_series

ORACLE_SERIES_MAX_ORDER = 64


class Exceptionality(enum.Enum):
    """Whether (G, n) is an exceptional pair (periodic with no periodic free resolution)."""

    NO = "no"
    DECLARED = "declared"
    UNKNOWN = "unknown"


def en_value(series: DimSeries, n: int) -> int:
    """The e_n expression for a single coefficient field."""
    if n < 1:
        raise EulerCharError("e_n is defined for n >= 1")
    if series.n_max < n:
        raise TruncationError(
            f"series over {series.field_name} truncated at {series.n_max}, need degree {n}"
        )
    tail = 0
    for i in range(n):
        sign = 1 if (n - 1 - i) % 2 == 0 else -1
        tail += sign * series.dims[i]
    return series.dims[n] - 2 * tail


def compute_en(series_list, n: int) -> int:
    """Maximum of the e_n expression over the supplied fields; Q must be present."""
    series_list = list(series_list)
    if not series_list:
        raise EulerCharError("need at least one series")
    if all(s.p is not None for s in series_list):
        raise EulerCharError("the rational series must be included in e_n")
    return max(en_value(s, n) for s in series_list)


def mun_pgroup(series: DimSeries, n: int) -> int:
    """Swan invariant of a p-group from its F_p series.

    The trivial module is the only simple one, so mu_n is the alternating
    partial sum of the series, clamped by the floors for nontrivial groups.
    """
    if n < 1:
        raise EulerCharError("mu_n is defined for n >= 1")
    if series.n_max < n:
        raise TruncationError(f"series truncated at {series.n_max}, need degree {n}")
    total = 0
    for i in range(n + 1):
        sign = 1 if (n - i) % 2 == 0 else -1
        total += sign * series.dims[i]
    if not any(series.dims[1:]):
        return total  # trivial group: no floors
    floor = 1 if n % 2 == 0 else 0
    return max(floor, total)


def pgroup_prime(spec: GroupSpec) -> int | None:
    """The prime p if the spec is built from p-group leaves, else None."""
    if isinstance(spec, Trivial):
        return 1  # neutral: joins with any prime
    if isinstance(spec, Cyclic):
        factors = [q for q in spec.primes()]
        return factors[0] if len(factors) == 1 else None if factors else 1
    if isinstance(spec, ElementaryAbelian):
        return spec.p if spec.k > 0 else 1
    if isinstance(spec, Product):
        left = pgroup_prime(spec.left)
        right = pgroup_prime(spec.right)
        if left is None or right is None:
            return None
        if left == 1:
            return right
        if right == 1:
            return left
        return left if left == right else None
    return None


def oracle_series(spec: GroupSpec, field: int | None, n_max: int, memory_budget=None) -> DimSeries:
    """Dimension series measured by the bar-cochain oracle (small groups only)."""
    if field is None:
        return DimSeries(None, (1,) + (0,) * n_max)
    group = realize(spec, max_order=ORACLE_SERIES_MAX_ORDER)
    module = FpModule.trivial(field, group.order)
    dims = tuple(
        cochain_cohomology_dim(group, module, n, memory_budget).h for n in range(n_max + 1)
    )
    return DimSeries(field, dims)


def series_bundle(spec: GroupSpec, n_max: int, memory_budget=None) -> dict[int | None, DimSeries]:
    """One series per relevant coefficient field: Q plus each prime dividing |G|.

    Families without a closed form (explicit tables, quaternion groups)
    fall back to the oracle, which bounds them to order 64.
    """
    fields: list[int | None] = [None] + spec.primes()
    bundle = {}
    for field in fields:
        try:
            bundle[field] = closed_form_series(spec, field, n_max)
        except UnsupportedFamilyError:
            bundle[field] = oracle_series(spec, field, n_max, memory_budget)
    return bundle


@dataclass(frozen=True)
class MunResult:
    mu: int
    mu_prime: int
    exceptional: Exceptionality
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.mu_prime > self.mu:
            raise EulerCharError("mu'_n cannot exceed mu_n")


def _mu1_from_metadata(spec: GroupSpec, notes: list[str]) -> int:
    d = spec.require_meta("d")
    if spec.meta.solvable is True:
        notes.append(f"mu_1 = d(G) - 1 = {d - 1} (declared solvable)")
    else:
        spec.require_meta("solvable")
        notes.append(f"mu_1 <= d(G) - 1 = {d - 1}; exact value unknown for nonsolvable groups (upper bound used)")
    return d - 1


def _family_mu(spec: GroupSpec, n: int, notes: list[str]) -> int | None:
    """Family-specific mu_n, or None when only declared metadata can help."""
    if isinstance(spec, Trivial) or spec.order() == 1:
        return 1 if n % 2 == 0 else -1
    if isinstance(spec, Cyclic):
        return 1 if n % 2 == 0 else 0
    p = pgroup_prime(spec)
    if p is not None and p != 1:
        series = closed_form_series(spec, p, n)
        return mun_pgroup(series, n)
    if isinstance(spec, (SemidirectIsotypic, Semidirect, Frobenius)):
        if spec.m == 1:
            # trivial complement: this is just the p-group E_k
            return mun_pgroup(closed_form_series(spec, spec.p, n), n)
        if n == 1:
            if isinstance(spec, SemidirectIsotypic) and spec.m > 1:
                # faithful isotypic action: the vector part needs k module
                # generators, so d = k + 1 and the solvable equality applies
                notes.append(f"mu_1 = k = {spec.k} (solvable, d = k + 1)")
                return spec.k
            return _mu1_from_metadata(spec, notes)
        value = mun_semidirect(spec.exponents(), spec.p, n)
        if spec.m > 1:
            notes.append("contributions at primes dividing |C| are bounded by the parity floors")
        return value
    return None


def _oracle_mu(spec: GroupSpec, n: int, modules, memory_budget, notes: list[str]) -> int:
    group = realize(spec, max_order=ORACLE_SERIES_MAX_ORDER)
    best = None
    for module in modules:
        total = 0
        for i in range(n + 1):
            sign = 1 if (n - i) % 2 == 0 else -1
            total += sign * cochain_cohomology_dim(group, module, i, memory_budget).h
        value = math.ceil(total / module.dim)
        best = value if best is None else max(best, value)
    if best is None:
        raise EulerCharError("empty module list")
    notes.append(f"Swan formula evaluated on {len(modules)} supplied simple modules")
    floor = 1 if n % 2 == 0 else 0
    return max(floor, best)


def compute_mun(
    spec: GroupSpec,
    n: int,
    modules=None,
    memory_budget=None,
) -> MunResult:
    """(mu_n, mu'_n, exceptionality) for a supported spec.

    mu'_n equals mu_n unless the spec declares a period dividing n+1
    together with exceptionality, in which case the pair is (1, 0).
    """
    if n < 1:
        raise EulerCharError("mu_n is defined for n >= 1")
    notes: list[str] = []
    period = spec.meta.period
    divides_np1 = period is not None and (n + 1) % period == 0
    divides_np2 = period is not None and (n + 2) % period == 0

    if modules is not None:
        mu = _oracle_mu(spec, n, modules, memory_budget, notes)
    else:
        mu = _family_mu(spec, n, notes)

    if mu is None:
        # no computed path: fall back on declared periodicity facts
        if divides_np2 and n % 2 == 0:
            notes.append(f"declared period {period} divides n + 2: a periodic resolution gives mu_n = 1")
            mu = 1
        elif divides_np1:
            if spec.meta.exceptional is True:
                _validate_exceptional(spec, n)
                return MunResult(1, 0, Exceptionality.DECLARED, tuple(notes))
            if spec.meta.exceptional is False:
                notes.append(f"declared period {period} divides n + 1 with a periodic free resolution: mu_n = 0")
                return MunResult(0, 0, Exceptionality.NO, tuple(notes))
            notes.append(
                f"declared period {period} divides n + 1; mu_n is 0 or 1 depending on undeclared exceptionality"
            )
            return MunResult(1, 1, Exceptionality.UNKNOWN, tuple(notes))
        elif n == 1:
            mu = _mu1_from_metadata(spec, notes)
        else:
            raise UnsupportedFamilyError(f"no mu_n path for {spec} at n = {n}")

    if not divides_np1:
        return MunResult(mu, mu, Exceptionality.NO, tuple(notes))
    # declared period divides n + 1 (n odd); resolve exceptionality
    if spec.meta.exceptional is True:
        _validate_exceptional(spec, n)
        return MunResult(1, 0, Exceptionality.DECLARED, tuple(notes))
    if spec.meta.exceptional is False or isinstance(spec, Cyclic) or pgroup_prime(spec) not in (None, 1):
        # cyclic groups and p-groups are never exceptional
        return MunResult(mu, mu, Exceptionality.NO, tuple(notes))
    return MunResult(mu, mu, Exceptionality.UNKNOWN, tuple(notes))


def _validate_exceptional(spec: GroupSpec, n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise EulerCharError(f"exceptional pairs require odd n >= 3, got n = {n}")
    if isinstance(spec, Cyclic) or pgroup_prime(spec) not in (None, 1):
        raise EulerCharError("cyclic groups and p-groups are never exceptional")


@dataclass(frozen=True)
class SwanRow:
    n: int
    e_n: int | None
    mu_n: int | None
    mu_prime_n: int | None
    exceptional: Exceptionality
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.mu_n is not None and self.mu_prime_n is not None:
            if self.mu_prime_n > self.mu_n:
                raise EulerCharError("mu'_n cannot exceed mu_n")
        if self.exceptional is Exceptionality.DECLARED:
            if self.mu_n != 1 or self.mu_prime_n != 0 or self.n % 2 == 0 or self.n < 3:
                raise EulerCharError("declared exceptional pairs force (mu, mu') = (1, 0) at odd n >= 3")


@dataclass(frozen=True)
class SwanReport:
    spec: GroupSpec
    rows: tuple[SwanRow, ...]

    def row(self, n: int) -> SwanRow:
        for r in self.rows:
            if r.n == n:
                return r
        raise EulerCharError(f"no row for degree {n}")


def swan_report(spec: GroupSpec, n_max: int, modules=None, memory_budget=None) -> SwanReport:
    """Per-degree table of e_n, mu_n, mu'_n for n = 1..n_max.

    Degrees whose values need absent metadata or an unavailable path are
    reported as None with an explanatory note rather than failing the
    whole report.
    """
    if n_max < 1:
        raise EulerCharError("n_max must be >= 1")
    bundle = series_bundle(spec, n_max, memory_budget)
    rows = []
    for n in range(1, n_max + 1):
        e_n = compute_en(bundle.values(), n)
        try:
            res = compute_mun(spec, n, modules=modules, memory_budget=memory_budget)
            rows.append(SwanRow(n, e_n, res.mu, res.mu_prime, res.exceptional, res.notes))
        except (MissingMetadataError, UnsupportedFamilyError) as exc:
            rows.append(SwanRow(n, e_n, None, None, Exceptionality.NO, (str(exc),)))
    return SwanReport(spec, tuple(rows))
