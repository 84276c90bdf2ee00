import math

import pytest

from eulerchar import (
    DimSeries,
    EulerCharError,
    TruncationError,
    closed_form_series,
    frobenius_exponents,
    parse_spec,
    series_cyclic,
    series_elementary_abelian,
    series_product,
    series_semidirect_invariants,
    trivial_series,
)


def test_series_cyclic():
    assert series_cyclic(2, 2, 4).dims == (1, 1, 1, 1, 1)
    assert series_cyclic(3, 2, 3).dims == (1, 0, 0, 0)
    assert series_cyclic(6, None, 2).dims == (1, 0, 0)
    assert series_cyclic(6, 2, 3).dims == (1, 1, 1, 1)
    assert series_cyclic(1, 5, 2).dims == (1, 0, 0)


def test_series_elementary_abelian():
    assert series_elementary_abelian(3, 2, 3, 3).dims == (1, 2, 3, 4)
    assert series_elementary_abelian(2, 3, 2, 2).dims == (1, 3, 6)
    assert series_elementary_abelian(5, 0, 5, 2).dims == (1, 0, 0)
    assert series_elementary_abelian(5, 3, 3, 4).dims == (1, 0, 0, 0, 0)
    assert series_elementary_abelian(5, 3, None, 2).dims == (1, 0, 0)


def test_series_product_convolution():
    ones = DimSeries(2, (1, 1, 1))
    assert series_product(ones, ones).dims == (1, 2, 3)
    unit = trivial_series(2, 2)
    assert series_product(ones, unit).dims == ones.dims
    with pytest.raises(EulerCharError):
        series_product(ones, DimSeries(3, (1, 1, 1)))


def test_kunneth_power_identity():
    # k-fold convolution of a cyclic series reproduces the closed form
    for p in (2, 3):
        for k in (1, 2, 3, 4):
            acc = trivial_series(p, 6)
            for _ in range(k):
                acc = series_product(acc, series_cyclic(p, p, 6))
            assert acc.dims == series_elementary_abelian(p, k, p, 6).dims


def test_kunneth_associativity_commutativity():
    a = series_elementary_abelian(3, 1, 3, 5)
    b = series_elementary_abelian(3, 2, 3, 5)
    c = series_cyclic(9, 3, 5)
    left = series_product(series_product(a, b), c)
    right = series_product(a, series_product(b, c))
    assert left.dims == right.dims
    assert series_product(a, b).dims == series_product(b, a).dims


def test_generating_identity_odd_p():
    # sum dims[n] t^n = (1+t)^k / (1-t^2)^k, coefficient-wise
    p, n_max = 5, 8
    for k in (1, 2, 3, 4):
        series = series_elementary_abelian(p, k, p, n_max)
        # multiply the series by (1-t^2)^k and compare with (1+t)^k
        minus = [math.comb(k, j) * (-1) ** j for j in range(k + 1)]  # (1-t^2)^k coefficients at t^{2j}
        for n in range(n_max + 1):
            lhs = 0
            for j in range(min(k, n // 2) + 1):
                lhs += minus[j] * series.dims[n - 2 * j]
            rhs = math.comb(k, n) if n <= k else 0
            assert lhs == rhs


def test_series_semidirect_invariants_a4():
    exps = frobenius_exponents(2)
    assert series_semidirect_invariants(exps, 2, 2).dims == (1, 0, 1)
    assert series_semidirect_invariants(exps, 2, 4).dims == (1, 0, 1, 2, 1)


def test_series_semidirect_trivial_complement_is_elementary_abelian():
    exps = frobenius_exponents(1)  # modulus 1
    assert series_semidirect_invariants(exps, 2, 4).dims == series_elementary_abelian(2, 1, 2, 4).dims


def test_series_semidirect_isotypic_degree_one_vanishes():
    from eulerchar import CharMultiset

    exps = CharMultiset(4, {1: 3})
    assert series_semidirect_invariants(exps, 5, 1).dims[1] == 0


def test_closed_form_dispatch():
    assert closed_form_series(parse_spec("Prod(E(3,1),E(3,1))"), 3, 3).dims == (1, 2, 3, 4)
    assert closed_form_series(parse_spec("J(2)"), 3, 3).dims == (1, 1, 1, 1)
    assert closed_form_series(parse_spec("J(2)"), 5, 3).dims == (1, 0, 0, 0)
    assert closed_form_series(parse_spec("C(6)"), None, 2).dims == (1, 0, 0)


def test_series_validation():
    with pytest.raises(EulerCharError):
        DimSeries(2, (2, 1))
    with pytest.raises(EulerCharError):
        DimSeries(2, (1, -1))
    with pytest.raises(TruncationError):
        DimSeries(2, (1, 1)).dim(5)
