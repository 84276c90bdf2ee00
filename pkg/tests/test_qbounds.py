import pytest

from eulerchar import (
    Cyclic,
    ElementaryAbelian,
    EulerCharError,
    Frobenius,
    KNOWN_EXACT_Q4,
    KNOWN_MU2_SO3_NONPERIODIC,
    Quaternion,
    SemidirectIsotypic,
    VerdictKind,
    annotation_for,
    bounds_from_invariants,
    compute_mun,
    euler_sign_check,
    parse_spec,
    periodic_exact_value,
    q_bound_report,
    qs4_verdict,
    subgroup_refine,
)


def test_bounds_from_invariants():
    assert bounds_from_invariants(2, 4, 2, 2) == (2, 8)  # E_3 at n = 2
    assert bounds_from_invariants(3, 2, 1, 2) == (3, 4)  # A4
    assert bounds_from_invariants(-1, 0, 1, 3) == (-1, 0)
    with pytest.raises(EulerCharError):
        bounds_from_invariants(2, 1, 0, 1)


def test_periodic_exact_value():
    assert periodic_exact_value(2, 2) == 2
    assert periodic_exact_value(2, 3) == 0
    assert periodic_exact_value(4, 2) == 2
    assert periodic_exact_value(4, 3) == 0
    assert periodic_exact_value(6, 3) is None
    assert periodic_exact_value(6, 4) == 2
    assert periodic_exact_value(6, 5) == 0
    with pytest.raises(EulerCharError):
        periodic_exact_value(3, 2)


def test_subgroup_refine():
    assert subgroup_refine(1, [(2, 2, 2)], 2) == 1
    assert subgroup_refine(1, [(1, 5, 3)], 2) == 5
    assert subgroup_refine(1, [(3, 4, 0)], 2) == 2  # ceil(4/3)
    assert subgroup_refine(3, [(2, 1, 1)], 2) == 3
    with pytest.raises(EulerCharError):
        subgroup_refine(1, [(0, 2, 2)], 2)


def test_euler_sign_check():
    assert euler_sign_check(2, 2)
    assert not euler_sign_check(3, 2)
    assert euler_sign_check(3, 0)
    assert euler_sign_check(3, -4)
    assert not euler_sign_check(2, 0)
    assert not euler_sign_check(2, -2)


def test_e3_bounds_at_n2():
    qb = q_bound_report(parse_spec("E(3,3)"), 2)
    assert (qb.lower, qb.upper) == (2, 8)


def test_e3_not_a_qs8_group():
    qb = q_bound_report(parse_spec("E(3,3)"), 4)
    assert qb.lower >= 3
    assert qb.verdict.kind is VerdictKind.IMPOSSIBLE_QS


def test_a4_interval_and_annotation():
    qb = qs4_verdict(parse_spec("J(2)"))
    assert (qb.lower, qb.upper) == (3, 4)
    assert qb.annotations["q4"] == 4
    assert qb.annotations["name"] == "A4"
    assert qb.verdict.kind is VerdictKind.IMPOSSIBLE_QS
    assert "known-value-annotation" in qb.citations
    assert KNOWN_EXACT_Q4["A5"] == 4
    assert "S4" in KNOWN_MU2_SO3_NONPERIODIC
    assert annotation_for(parse_spec("J(3)"), 2) == {}


def test_verdict_rules():
    for p in (2, 3, 5):
        qb = qs4_verdict(ElementaryAbelian(p, 4))
        assert qb.verdict.kind is VerdictKind.IMPOSSIBLE_QS
        assert "generator-count-obstruction" in qb.citations
    qb = qs4_verdict(SemidirectIsotypic(5, 5, 1, 4))
    assert qb.verdict.kind is VerdictKind.IMPOSSIBLE_QS
    assert "isotypic-fixed-point-free-obstruction" in qb.citations
    qb = qs4_verdict(SemidirectIsotypic(5, 2, 1, 2))
    assert qb.verdict.kind is VerdictKind.IMPOSSIBLE_QS
    assert "order-two-eigenvalue-obstruction" in qb.citations
    for k in (3, 4, 5):
        qb = qs4_verdict(Frobenius(k))
        assert qb.verdict.kind is VerdictKind.REALIZABLE_QS
    qb = qs4_verdict(SemidirectIsotypic(5, 2, 1, 4))
    assert qb.verdict.kind is VerdictKind.REALIZABLE_QS
    assert (qb.lower, qb.upper) == (2, 2)


def test_verdict_soundness_invariant():
    # realizable only with mu_2 = 1; impossible only with lower > 2
    specs = [
        ElementaryAbelian(3, k) for k in range(1, 6)
    ] + [
        SemidirectIsotypic(5, k, 1, m) for k in range(2, 7) for m in (2, 4)
    ] + [Frobenius(k) for k in range(2, 7)] + [Cyclic(m).with_meta(period=2) for m in (2, 5, 9)]
    for spec in specs:
        qb = qs4_verdict(spec)
        if qb.verdict.kind is VerdictKind.REALIZABLE_QS:
            assert compute_mun(spec, 2).mu == 1, spec
        if qb.verdict.kind is VerdictKind.IMPOSSIBLE_QS:
            assert qb.lower > 2, spec
        assert not (
            qb.verdict.kind is VerdictKind.REALIZABLE_QS
            and qb.verdict.kind is VerdictKind.IMPOSSIBLE_QS
        )


def test_open_verdict():
    # A4 sits strictly between: mu_2 = 2 but lower = 3 > 2, so impossible;
    # a case with lower <= 2 and mu_2 > 1 stays open
    qb = qs4_verdict(ElementaryAbelian(3, 2))
    assert compute_mun(ElementaryAbelian(3, 2), 2).mu == 2
    assert (qb.lower, qb.upper) == (2, 4)
    assert qb.verdict.kind is VerdictKind.OPEN


def test_odd_n_sign_verdict():
    qb = q_bound_report(parse_spec("E(3,2)"), 3)
    assert qb.verdict.kind is VerdictKind.IMPOSSIBLE_QS
    assert "euler-characteristic-sign" in qb.citations


def test_interval_reports_citations_nonempty():
    for text in ["1", "C(6)", "E(2,3)", "J(3)", "U(5,3,1,4)"]:
        qb = q_bound_report(parse_spec(text), 2)
        assert qb.citations
        assert qb.lower <= (qb.upper if qb.upper is not None else qb.lower)


def test_theorem_b_consistency_cyclic():
    # the exact periodic value always lands inside the invariant interval
    for m in range(2, 31):
        spec = Cyclic(m).with_meta(period=2)
        for n in (2, 3, 4, 5):
            qb = q_bound_report(spec, n)
            expected = 2 if n % 2 == 0 else 0
            assert qb.exact == expected, (m, n)
            assert qb.lower <= qb.exact <= qb.upper, (m, n, qb)


QUATERNION_META = dict(period=4, exceptional=False, d=2, solvable=True)


def test_theorem_b_consistency_quaternion():
    # generalized quaternion groups act freely on the 3-sphere, so their
    # period-4 free resolutions exist and the declared metadata is honest
    for order in (8, 12, 16, 20, 24, 28, 32):
        spec = Quaternion(order).with_meta(**QUATERNION_META)
        qb = q_bound_report(spec, 2)
        assert qb.exact == 2, order
        assert qb.lower <= 2 <= qb.upper, (order, qb)
    for order in (8, 12):
        spec = Quaternion(order).with_meta(**QUATERNION_META)
        qb = q_bound_report(spec, 3)
        assert qb.exact == 0, order
        assert qb.lower <= 0 <= qb.upper, (order, qb)


def test_report_validation():
    from eulerchar import QBoundReport, Verdict

    with pytest.raises(EulerCharError):
        QBoundReport(Cyclic(2), 2, 3, 2, None, Verdict(VerdictKind.OPEN, "x"), ("r",))
    with pytest.raises(EulerCharError):
        QBoundReport(Cyclic(2), 2, 2, 4, 5, Verdict(VerdictKind.OPEN, "x"), ("r",))
    with pytest.raises(EulerCharError):
        QBoundReport(Cyclic(2), 2, 2, 4, 3, Verdict(VerdictKind.OPEN, "x"), ())