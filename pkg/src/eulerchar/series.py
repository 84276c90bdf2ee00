"""Closed-form graded dimension series of group cohomology.

A DimSeries records dim H^0 .. dim H^N of one group with coefficients in
one field, either the rationals (p = None) or a prime field F_p.  Series
for product groups are convolutions of the factors' series (field
coefficients, so there is no Tor correction), and semidirect products
with a coprime cyclic complement reduce to invariant counts of the
character data.

Series are dense integer tuples; the degrees this package ever needs stay
below ~20, so nothing sparse is warranted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .characters import CharMultiset, graded_character
from .errors import EulerCharError, TruncationError, UnsupportedFamilyError
from .groupspec import (
    Cyclic,
    ElementaryAbelian,
    Frobenius,
    GroupSpec,
    Product,
    Semidirect,
    SemidirectIsotypic,
    Trivial,
)


@dataclass(frozen=True)
class DimSeries:
    """dims[n] = dim H^n(G; F) for F = Q (p is None) or F = F_p."""

    p: int | None
    dims: tuple[int, ...]

    def __post_init__(self):
        if not self.dims:
            raise EulerCharError("a dimension series needs at least degree 0")
        if self.dims[0] != 1:
            raise EulerCharError("degree-0 dimension must be 1 for trivial coefficients")
        if any(d < 0 for d in self.dims):
            raise EulerCharError("dimensions must be nonnegative")

    @property
    def n_max(self) -> int:
        return len(self.dims) - 1

    @property
    def field_name(self) -> str:
        return "Q" if self.p is None else f"F{self.p}"

    def dim(self, n: int) -> int:
        if n > self.n_max:
            raise TruncationError(f"series over {self.field_name} truncated at degree {self.n_max}, requested {n}")
        return self.dims[n]


def trivial_series(field: int | None, n_max: int) -> DimSeries:
    return DimSeries(field, (1,) + (0,) * n_max)


def series_cyclic(m: int, field: int | None, n_max: int) -> DimSeries:
    """Series of Z/m: all ones when the characteristic divides m, else trivial."""
    if m < 1 or n_max < 0:
        raise EulerCharError("need m >= 1 and n_max >= 0")
    if field is not None and m % field == 0:
        return DimSeries(field, (1,) * (n_max + 1))
    return trivial_series(field, n_max)


def series_elementary_abelian(p: int, k: int, field: int | None, n_max: int) -> DimSeries:
    """Series of (Z/p)^k.

    Over F_p with p odd this is exterior on k degree-one generators times
    polynomial on k degree-two generators; over F_2 polynomial on k
    degree-one generators.  Any other field kills everything above degree 0.
    """
    if n_max < 0:
        raise EulerCharError("n_max must be >= 0")
    if field != p or k == 0:
        return trivial_series(field, n_max)
    if p == 2:
        dims = tuple(math.comb(k + n - 1, n) for n in range(n_max + 1))
    else:
        dims = []
        for n in range(n_max + 1):
            total = 0
            for i in range(n % 2, n + 1, 2):
                j = (n - i) // 2
                total += math.comb(k, i) * math.comb(k + j - 1, j)
            dims.append(total)
        dims = tuple(dims)
    return DimSeries(field, dims)


def series_product(a: DimSeries, b: DimSeries) -> DimSeries:
    """Kunneth convolution; truncates at the shorter series."""
    if a.p != b.p:
        raise EulerCharError(f"field mismatch: {a.field_name} vs {b.field_name}")
    n_max = min(a.n_max, b.n_max)
    dims = tuple(
        sum(a.dims[i] * b.dims[n - i] for i in range(n + 1)) for n in range(n_max + 1)
    )
    return DimSeries(a.p, dims)


def series_semidirect_invariants(exponents: CharMultiset, p: int, n_max: int) -> DimSeries:
    """Series of E_k x| C over F_p with trivial coefficients.

    Each graded piece of the cohomology of E_k is a character multiset of
    the cyclic complement; the invariant dimension is the count of
    monomials with exponent sum divisible by the complement order.
    """
    if n_max < 0:
        raise EulerCharError("n_max must be >= 0")
    dims = tuple(
        graded_character(exponents, p, n).invariants_dim() for n in range(n_max + 1)
    )
    return DimSeries(p, dims)


def closed_form_series(spec: GroupSpec, field: int | None, n_max: int) -> DimSeries:
    """Dispatch a spec to its closed-form series over one field."""
    if isinstance(spec, Trivial):
        return trivial_series(field, n_max)
    if isinstance(spec, Cyclic):
        return series_cyclic(spec.m, field, n_max)
    if isinstance(spec, ElementaryAbelian):
        return series_elementary_abelian(spec.p, spec.k, field, n_max)
    if isinstance(spec, Product):
        return series_product(
            closed_form_series(spec.left, field, n_max),
            closed_form_series(spec.right, field, n_max),
        )
    if isinstance(spec, (SemidirectIsotypic, Semidirect, Frobenius)):
        if field == spec.p:
            return series_semidirect_invariants(spec.exponents(), spec.p, n_max)
        if field is not None and spec.m % field == 0:
            # coefficients concentrate on the cyclic complement
            return series_cyclic(spec.m, field, n_max)
        return trivial_series(field, n_max)
    raise UnsupportedFamilyError(f"no closed-form series for {spec}")
