"""Generating series: relative, vertex, degeneration, log, F0/F2 identities."""

from fractions import Fraction

import pytest

from floorgw import (
    GwError,
    Partition,
    USeries,
    ab_identity_check,
    classical_count,
    degeneration_cross_check,
    degeneration_series,
    degree_hirzebruch,
    degree_p2,
    extract_invariant,
    f0_absolute_series,
    f2_relative_dminus2_series,
    general_degree,
    gw_relative_series,
    log_series,
    sin_factor_series,
    vertex_series,
)
from helpers import acceptance_grid

F = Fraction


# ----------------------------------------------------------- relative series


def test_relative_series_p2_degree1():
    gw = gw_relative_series(degree_p2(1), 2, 6)
    assert gw.series.valuation == -1
    assert [gw.series.coefficient(k) for k in (-1, 1, 3)] == [1, F(1, 24), F(7, 5760)]


def test_relative_series_p2_cubics():
    gw = gw_relative_series(degree_p2(3), 8, 7)
    assert [gw.series.coefficient(k) for k in (1, 3, 5)] == [12, F(-3, 2), F(21, 160)]


def test_relative_series_f0_trivial_prefactor():
    # one floor, one contact on each horizontal divisor: exponent 0, count 1
    gw = gw_relative_series(degree_hirzebruch(0, 1, 1), 3, 6)
    assert gw.series == USeries.one(6)


def test_relative_series_rejects_general_family():
    delta = general_degree([(-1, 0), (0, -1), (1, 1)])
    with pytest.raises(GwError):
        gw_relative_series(delta, 2, 8)


def test_extract_invariant_values_and_errors():
    s1 = gw_relative_series(degree_p2(1), 2, 6)
    assert extract_invariant(s1, 1) == F(1, 24)
    s3 = gw_relative_series(degree_p2(3), 8, 8)
    assert extract_invariant(s3, 0) == 12
    assert extract_invariant(s3, 2) == F(21, 160)
    with pytest.raises(GwError):
        extract_invariant(s3, 4)  # u^9 is past the truncation order
    with pytest.raises(GwError):
        extract_invariant(s3, -1)


def test_leading_invariant_is_classical_count():
    for delta, n in acceptance_grid():
        if classical_count(delta, n) == 0:
            continue
        gw = gw_relative_series(delta, n, 16)
        g0 = delta.genus_for_points(n)
        assert extract_invariant(gw, g0) == classical_count(delta, n), (delta.label, n)


def test_series_parity():
    for delta, n in acceptance_grid()[::3]:
        for build in (gw_relative_series, log_series, degeneration_series):
            gw = build(delta, n, 16)
            for k in gw.series.nonzero_exponents():
                assert (k - gw.exponent_offset) % 2 == 0, (build.__name__, delta.label)
    for gw in (
        f0_absolute_series(1, 1, 6, 16),
        f0_absolute_series(2, 0, 8, 16),
        f2_relative_dminus2_series(1, 1, 6, 16),
        f2_relative_dminus2_series(2, 1, 11, 16),
        vertex_series(Partition([2, 1]), Partition([1]), 12),
    ):
        for k in gw.series.nonzero_exponents():
            assert (k - gw.exponent_offset) % 2 == 0, gw.kind


# ------------------------------------------------------------- vertex series


def test_vertex_series_base_case():
    gw = vertex_series(Partition(), Partition(), 8)
    assert gw.series == USeries.one(8)
    assert extract_invariant(gw, 0) == 1


def test_vertex_series_single_parts():
    one = vertex_series(Partition([1]), Partition(), 7)
    assert [one.series.coefficient(k) for k in (1, 3, 5)] == [
        1,
        F(-1, 24),
        F(1, 1920),
    ]
    two = vertex_series(Partition([2]), Partition(), 7)
    assert [two.series.coefficient(k) for k in (1, 3, 5)] == [1, F(-1, 6), F(1, 120)]


def test_vertex_series_leading_normalization():
    # each factor (1/l) 2 sin(l*u/2) ~ u, so the leading coefficient at
    # u^(len(mu)+len(nu)) is 1; rescaled by prod(l^mult) it becomes the
    # leading coefficient of prod (2 sin(l*u/2))^mult
    for mu, nu in [((2, 1), (1,)), ((3,), (2, 2)), ((1, 1, 1), ())]:
        mu, nu = Partition(mu), Partition(nu)
        gw = vertex_series(mu, nu, len(mu) + len(nu) + 5)
        lead = gw.series.coefficient(len(mu) + len(nu))
        assert lead == 1
        scale = 1
        for p in list(mu) + list(nu):
            scale *= p
        scaled = gw.series * scale
        assert scaled.coefficient(len(mu) + len(nu)) == scale


# ------------------------------------------------- degeneration cross-check


def test_degeneration_series_examples():
    # single floor fed by two unit edges: the square of 2 sin(u/2)
    gw = degeneration_series(degree_hirzebruch(2, 1, 0), 3, 8)
    assert gw.series == sin_factor_series(1, 2, 8)
    # plane degree 1: diagram sum is 2 sin(u/2) itself (valuation +1, not -1)
    gw1 = degeneration_series(degree_p2(1), 2, 8)
    assert gw1.series == sin_factor_series(1, 1, 8)


def test_degeneration_exponent_audit_p2_degree1():
    """Diagram sum valuation exceeds the relative valuation by exactly 2h."""
    delta = degree_p2(1)
    rel = gw_relative_series(delta, 2, 12)
    deg = degeneration_series(delta, 2, 12)
    assert rel.series.valuation == -1
    assert deg.series.valuation == 1
    assert deg.series.valuation - rel.series.valuation == 2 * delta.height
    report = degeneration_cross_check(delta, 2, 12)
    assert report.equal


def test_degeneration_equals_relative_route_for_cubics():
    report = degeneration_cross_check(degree_p2(3), 8, 16)
    assert report.equal
    assert report.diagram_sum == report.from_refined


def test_degeneration_cross_check_grid():
    for delta, n in acceptance_grid():
        assert degeneration_cross_check(delta, n, 16).equal, (delta.label, n)


def test_degeneration_matches_log_series_invariants():
    delta = degree_p2(3)
    deg = degeneration_series(delta, 8, 16)
    log = log_series(delta, 8, 16)
    assert deg.exponent_offset == log.exponent_offset
    assert deg.invariants() == log.invariants()


# ----------------------------------------------------------------- log series


def test_log_series_p2_degree1():
    gw = log_series(degree_p2(1), 2, 8)
    assert gw.series == sin_factor_series(1, 1, 8)
    assert extract_invariant(gw, 0) == 1


def test_log_series_p2_cubics_leading():
    gw = log_series(degree_p2(3), 8, 10)
    assert gw.series.valuation == 7
    assert gw.series.coefficient(7) == 12
    assert extract_invariant(gw, 0) == 12


def test_log_series_f0():
    gw = log_series(degree_hirzebruch(0, 1, 1), 3, 8)
    assert gw.series == sin_factor_series(1, 2, 8)
    assert extract_invariant(gw, 0) == 1


def test_log_minimal_genus_matches_classical():
    for delta, n in acceptance_grid():
        if classical_count(delta, n) == 0:
            continue
        gw = log_series(delta, n, 16)
        g0 = delta.genus_for_points(n)
        assert extract_invariant(gw, g0) == classical_count(delta, n)
        assert gw.series.valuation == 2 * g0 + gw.exponent_offset


# ----------------------------------------------------------- F0 / F2 series


def test_f2_series_single_floor():
    gw = f2_relative_dminus2_series(1, 0, 3, 6)
    assert gw.series.valuation == -2
    assert [gw.series.coefficient(k) for k in (-2, 0, 2, 4)] == [
        1,
        F(1, 12),
        F(1, 240),
        F(1, 6048),
    ]


def test_f2_series_zero_when_no_floors():
    assert f2_relative_dminus2_series(0, 2, 3, 8).series.is_zero()


def test_f2_series_leading_is_classical():
    gw = f2_relative_dminus2_series(1, 2, 7, 8)
    assert gw.series.coefficient(0) == classical_count(degree_hirzebruch(2, 1, 2), 7)


def test_f0_series_examples():
    gw = f0_absolute_series(1, 0, 3, 6)
    assert gw.series.valuation == -2
    assert extract_invariant(gw, 0) == 1
    assert f0_absolute_series(1, 0, 4, 6).series.is_zero()
    assert f0_absolute_series(0, 1, 1, 6).series.is_zero()


def test_f0_f2_preconditions():
    with pytest.raises(GwError):
        f0_absolute_series(1, 0, 2, 8)  # n + 1 - 4a - 2b < 0
    with pytest.raises(GwError):
        f2_relative_dminus2_series(1, 1, 4, 8)
    with pytest.raises(GwError):
        f0_absolute_series(-1, 0, 3, 8)


# ------------------------------------------------------ Abramovich-Bertram


def test_ab_identity_fixtures():
    r = ab_identity_check(1, 0, 3, 12)
    assert r.equal
    assert r.lhs_polynomial == r.rhs_polynomial
    assert sum(r.lhs_polynomial.coefficients) == 1

    r = ab_identity_check(1, 0, 4, 12)
    assert r.equal
    assert r.lhs_polynomial.is_zero()

    r = ab_identity_check(2, 0, 7, 12)
    assert r.equal
    assert str(r.lhs_polynomial) == "s^-2 + 10 + s^2"


def test_ab_identity_rejects_bad_parameters():
    with pytest.raises(GwError):
        ab_identity_check(1, 0, 2, 12)
    with pytest.raises(GwError):
        ab_identity_check(-1, 0, 3, 12)


def test_ab_identity_grid():
    for a in range(3):
        for b in range(3):
            for g in range(5):
                n = g - 1 + 4 * a + 2 * b
                if n < 0:
                    continue
                report = ab_identity_check(a, b, n, 16)
                assert report.polynomial_equal, (a, b, n)
                assert report.series_equal, (a, b, n)


# ---------------------------------------------------------------- GwSeries IO


def test_gw_series_json():
    gw = gw_relative_series(degree_p2(1), 2, 6)
    data = gw.to_json()
    assert data["kind"] == "relative"
    assert data["delta"]["family"] == "p2"
    assert data["series"]["valuation"] == -1
    assert data["invariants"][0] == {"g": 0, "value": "1"}
    assert data["invariants"][1] == {"g": 1, "value": "1/24"}
    assert USeries.from_json(data["series"]) == gw.series


def test_relative_series_against_independent_symbolic_expansion():
    sympy = pytest.importorskip("sympy")
    u = sympy.symbols("u")
    expr = (2 * sympy.cos(u) + 10) * 2 * sympy.sin(u / 2)
    expansion = sympy.series(expr, u, 0, 8).removeO()
    ours = gw_relative_series(degree_p2(3), 8, 8).series
    for k in range(ours.valuation, 8):
        assert F(ours.coefficient(k)) == F(str(sympy.nsimplify(expansion.coeff(u, k))))
