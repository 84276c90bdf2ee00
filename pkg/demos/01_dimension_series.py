"""Walkthrough: graded dimension series of group cohomology.

Every invariant in this package starts from the numbers
dim H^n(G; F) for F the rationals or a prime field.  This script prints
the closed-form series for each supported family and shows the Kunneth
convolution at work.
"""

from eulerchar import (
    parse_spec,
    closed_form_series,
    series_cyclic,
    series_elementary_abelian,
    series_product,
)

N = 6

print("== cyclic groups ==")
print("Z/4 over F2: ", series_cyclic(4, 2, N).dims, " (all ones: 2 divides 4)")
print("Z/4 over F3: ", series_cyclic(4, 3, N).dims, " (coprime characteristic kills everything)")
print("Z/4 over Q:  ", series_cyclic(4, None, N).dims, " (finite groups have no rational cohomology)")
print()

print("== elementary abelian groups ==")
for p, k in [(2, 2), (2, 3), (3, 2), (5, 3)]:
    series = series_elementary_abelian(p, k, p, N)
    print(f"(Z/{p})^{k} over F{p}: {series.dims}")
print()
print("For odd p the algebra is exterior in degree one tensor polynomial in")
print("degree two; over F2 it is polynomial in degree one.  Both give the")
print("same dimensions, binomial(k + n - 1, n).")
print()

print("== Kunneth convolution ==")
a = series_cyclic(3, 3, N)
b = series_cyclic(3, 3, N)
prod = series_product(a, b)
print("Z/3 series:           ", a.dims)
print("Z/3 x Z/3 by Kunneth: ", prod.dims)
print("closed form E(3,2):   ", series_elementary_abelian(3, 2, 3, N).dims)
print()

print("== semidirect products ==")
print("J(2) = (Z/2)^2 x| Z/3 is the alternating group A4.")
for field in (None, 2, 3):
    series = closed_form_series(parse_spec("J(2)"), field, N)
    print(f"A4 over {series.field_name:>2}: {series.dims}")
print()
print("Over F2 only the monomials with exponent sum divisible by 3 survive;")
print("over F3 the coefficients concentrate on the cyclic complement.")
