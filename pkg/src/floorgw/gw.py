"""Generating series of relative and log Gromov-Witten invariants.

The engine turns refined floor-diagram counts into invariant tables through
the substitution q = e^(iu).  Writing S for the series 2 sin(u/2) and g0 for
the minimal genus n + 1 - |delta|, the series handled here are:

* relative:     sum_g N_rel(g) u^(2g-2+d_b+d_t)
                = (refined count)|_{q=e^(iu)} * S^(2*g0-2+d_b+d_t);
* vertex:       sum_g N(g) u^(2g+len(mu)+len(nu))
                = prod_l ((1/l) 2 sin(l*u/2))^(mu_l + nu_l),
                the contribution of a single floor with outgoing partition
                mu and incoming partition nu;
* degeneration: the diagram-by-diagram sum
                sum_D (prod_E w_E^2) (prod_V vertex(mu(V), nu(V))),
                an evaluation path independent of the refined-count route;
* log:          sum_g N_log(g) u^(2g-2+2h+d_b+d_t) = relative * S^(2h).

Exponent audit.  Each diagram has g0 + h - 1 bounded edges, so the vertex
products carry total valuation 2*(g0+h-1) + d_b + d_t, which exceeds the
relative series' valuation by exactly 2h: the degeneration sum reproduces
the relative series only after dividing by S^(2h), i.e. it *is* the log
series.  ``degeneration_cross_check`` therefore compares the diagram sum
against relative * S^(2h), term by term; the plane-degree-1 case (relative
valuation -1, diagram sum valuation +1) pins the convention.

The F0 absolute and F2/D_(-2) relative series divide further powers of S out
of the relative series, and ``ab_identity_check`` verifies the
Abramovich-Bertram relation between F0 and F2 counts at both the polynomial
and the series level.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .algebra import (
    LaurentPolyS,
    Partition,
    USeries,
    lp_substitute_exponential,
    rational_to_str,
    sin_factor_series,
)
from .diagrams import (
    HTransverseDegree,
    degree_hirzebruch,
    enumerate_marked,
    multiplicity,
    refined_count,
    vertex_partitions,
)


class GwError(ValueError):
    """Invalid request to the generating-series layer."""


KINDS = ("relative", "log", "absolute_F0", "relative_F2_Dminus2", "vertex", "degeneration")


@dataclass(frozen=True)
class GwSeries:
    """A generating series with its genus-indexing convention.

    The genus-g invariant sits at u^(2g + exponent_offset); ``g_min`` is the
    lowest genus the series carries.  ``delta``/``n`` record the geometric
    input when there is one (the vertex kind has neither).
    """

    series: USeries
    kind: str
    delta: HTransverseDegree | None
    n: int | None
    exponent_offset: int
    g_min: int

    def invariant(self, g: int) -> Fraction:
        return extract_invariant(self, g)

    def max_genus(self) -> int:
        """Largest genus whose coefficient lies below the truncation order."""
        return (self.series.order - self.exponent_offset - 1) // 2

    def invariants(self) -> list[tuple[int, Fraction]]:
        return [(g, self.invariant(g)) for g in range(self.g_min, self.max_genus() + 1)]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "delta": self.delta.to_json() if self.delta is not None else None,
            "n": self.n,
            "series": self.series.to_json(),
            "invariants": [
                {"g": g, "value": rational_to_str(v)} for g, v in self.invariants()
            ],
        }


def extract_invariant(series: GwSeries, g: int) -> Fraction:
    """Coefficient of the u-power assigned to genus g by the series' kind.

    Requests below ``g_min`` or at exponents past the truncation order are
    hard errors; a truncated coefficient is never silently reported as 0.
    """
    if g < series.g_min:
        raise GwError(f"genus {g} is below the minimal genus {series.g_min}")
    exponent = 2 * g + series.exponent_offset
    if exponent >= series.series.order:
        raise GwError(
            f"genus {g} sits at u^{exponent}, beyond truncation order "
            f"{series.series.order}"
        )
    return series.series.coefficient(exponent)


def _check_series_delta(delta: HTransverseDegree, n: int) -> int:
    if delta.family == "general":
        raise GwError(
            "generating series are established for the plane and Hirzebruch "
            "families only"
        )
    g = delta.genus_for_points(n)
    if g < 0:
        raise GwError(f"n = {n} gives negative genus for {delta.label}")
    return g


def _sin_product(specs: list[tuple[int, int]], order: int) -> USeries:
    """prod (2 sin(a*u/2))^e over (a, e) in specs, truncated at ``order``.

    Factor orders are padded so the product's truncation order is exactly
    ``order``; requires order > sum of exponents (the product's valuation).
    """
    total = sum(e for _, e in specs)
    if order <= total:
        raise GwError(f"order {order} does not reach the product valuation {total}")
    acc = None
    for a, e in specs:
        factor = sin_factor_series(a, e, order - (total - e))
        acc = factor if acc is None else acc * factor
    if acc is None:
        acc = USeries.one(order)
    if acc.order != order:
        raise AssertionError("truncation bookkeeping drift")
    return acc


def vertex_series(mu: Partition, nu: Partition, order: int) -> GwSeries:
    """Contribution of one floor: prod_l ((1/l) 2 sin(l*u/2))^(mu_l + nu_l).

    Valuation len(mu) + len(nu); the genus-g invariant sits at
    u^(2g + len(mu) + len(nu)).  Requires order >= len(mu) + len(nu) + 1.
    """
    mu, nu = Partition(mu), Partition(nu)
    mults: dict[int, int] = mu.part_multiplicities()
    for part, m in nu.part_multiplicities().items():
        mults[part] = mults.get(part, 0) + m
    specs = sorted(mults.items())
    series = _sin_product(specs, order)
    scalar = Fraction(1)
    for part, m in specs:
        scalar /= Fraction(part) ** m
    return GwSeries(
        series * scalar,
        "vertex",
        None,
        None,
        exponent_offset=len(mu) + len(nu),
        g_min=0,
    )


def gw_relative_series(delta: HTransverseDegree, n: int, order: int = 16) -> GwSeries:
    """Relative invariants with a top lambda-class insertion, as a series.

    Refined count under q = e^(iu), times S^(2*g0 - 2 + d_b + d_t) with
    S = 2 sin(u/2).  The exponent can be negative (plane degree 1 gives
    S^(-1)), so the result is a Laurent series; the genus-g invariant sits
    at u^(2g - 2 + d_b + d_t) and the leading one equals the classical
    count.
    """
    g0 = _check_series_delta(delta, n)
    offset = delta.d_b + delta.d_t - 2
    e0 = 2 * g0 + offset
    counts = refined_count(delta, n)
    if counts.is_zero():
        series = USeries.zero(order)
    else:
        if order <= e0:
            raise GwError(f"order {order} does not reach the series valuation {e0}")
        series = lp_substitute_exponential(counts, order - e0) * sin_factor_series(
            1, e0, order
        )
        if series.order != order:
            raise AssertionError("truncation bookkeeping drift")
    return GwSeries(series, "relative", delta, n, exponent_offset=offset, g_min=g0)


def degeneration_series(delta: HTransverseDegree, n: int, order: int = 16) -> GwSeries:
    """The diagram sum: sum_D (prod_E w_E^2) (prod_V vertex contribution).

    Computed purely from sine-series products per floor, never touching the
    refined-count polynomial or the cosine substitution, so it is an
    independent route.  Its genus-g coefficient sits at
    u^(2g - 2 + 2h + d_b + d_t): the sum equals relative * S^(2h), i.e. the
    log series (see the module docstring's exponent audit).
    """
    g0 = _check_series_delta(delta, n)
    offset = 2 * delta.height + delta.d_b + delta.d_t - 2
    total = USeries.zero(order)
    for diagram in enumerate_marked(delta, n):
        mults: dict[int, int] = {}
        for v in diagram.vertex_positions:
            mu, nu = vertex_partitions(diagram, v)
            for part in list(mu) + list(nu):
                mults[part] = mults.get(part, 0) + 1
        specs = sorted(mults.items())
        scalar = Fraction(multiplicity(diagram))
        for part, m in specs:
            scalar /= Fraction(part) ** m
        total = total + _sin_product(specs, order) * scalar
    if total.order != order:
        raise AssertionError("truncation bookkeeping drift")
    return GwSeries(total, "degeneration", delta, n, exponent_offset=offset, g_min=g0)


def log_series(delta: HTransverseDegree, n: int, order: int = 16) -> GwSeries:
    """Log invariants: sum_g N_log(g) u^(2g-2+2h+d_b+d_t) = relative * S^(2h).

    The conversion factor S^(2h) accounts for the 2h contact points with the
    non-horizontal toric divisors.  At minimal genus N_log = N_rel equals
    the classical count.
    """
    g0 = _check_series_delta(delta, n)
    offset = 2 * delta.height + delta.d_b + delta.d_t - 2
    relative = gw_relative_series(delta, n, order)
    if relative.series.is_zero():
        series = USeries.zero(order)
    else:
        e0 = 2 * g0 + delta.d_b + delta.d_t - 2
        if order <= 2 * g0 + offset:
            raise GwError(
                f"order {order} does not reach the log valuation {2 * g0 + offset}"
            )
        series = relative.series * sin_factor_series(1, 2 * delta.height, order - e0)
        if series.order != order:
            raise AssertionError("truncation bookkeeping drift")
    return GwSeries(series, "log", delta, n, exponent_offset=offset, g_min=g0)


@dataclass(frozen=True)
class CrossCheckReport:
    """Outcome of the degeneration cross-check for one (delta, n)."""

    delta: HTransverseDegree
    n: int
    diagram_sum: USeries
    from_refined: USeries
    equal: bool

    def to_json(self) -> dict:
        return {
            "target": "degeneration",
            "delta": self.delta.to_json(),
            "n": self.n,
            "diagram_sum": self.diagram_sum.to_json(),
            "from_refined": self.from_refined.to_json(),
            "equal": self.equal,
        }


def degeneration_cross_check(
    delta: HTransverseDegree, n: int, order: int = 16
) -> CrossCheckReport:
    """Compare the two evaluation routes term by term.

    Route one is the diagram sum of ``degeneration_series`` (sine products
    per floor); route two reconstructs the same series as
    relative * S^(2h), where the relative series comes from the refined
    count through the cosine substitution.  The two routes share only the
    elementary series arithmetic.
    """
    diagram_sum = degeneration_series(delta, n, order).series
    from_refined = log_series(delta, n, order).series
    return CrossCheckReport(delta, n, diagram_sum, from_refined, diagram_sum == from_refined)


def f0_absolute_series(a: int, b: int, n: int, order: int = 16) -> GwSeries:
    """Absolute invariants of F0 in class a*D + (a+b)*F: sum_g N(g) u^(2g-2).

    Equals the relative series of the F0 degree (a, a+b) divided by
    S^(2(a+b)), one factor of S for each of the d_b + d_t = 2(a+b) boundary
    contacts traded away.  Requires n + 1 - 4a - 2b >= 0.
    """
    if a < 0 or b < 0 or n < 0:
        raise GwError(f"parameters must be nonnegative, got {(a, b, n)}")
    g0 = n + 1 - 4 * a - 2 * b
    if g0 < 0:
        raise GwError(f"n + 1 - 4a - 2b = {g0} must be nonnegative")
    if a + b == 0:
        return GwSeries(USeries.zero(order), "absolute_F0", None, n, -2, g0)
    delta = degree_hirzebruch(0, a, a + b)
    m = 2 * (a + b)
    relative = gw_relative_series(delta, n, order + m)
    if relative.series.is_zero():
        series = USeries.zero(order)
    else:
        e0 = 2 * g0 - 2 + m
        if order <= 2 * g0 - 2:
            raise GwError(f"order {order} does not reach the valuation {2 * g0 - 2}")
        series = relative.series * sin_factor_series(1, -m, order - e0)
        if series.order != order:
            raise AssertionError("truncation bookkeeping drift")
    return GwSeries(series, "absolute_F0", delta, n, exponent_offset=-2, g_min=g0)


def f2_relative_dminus2_series(h: int, d: int, n: int, order: int = 16) -> GwSeries:
    """Invariants of F2 relative to D_(-2) only: sum_g N(g) u^(2g-2+d).

    Equals the relative series of the F2 degree (h, d) divided by
    S^(2h + d), one factor for each contact with D_2 traded away.
    Requires n + 1 - 4h - 2d >= 0.
    """
    if h < 0 or d < 0 or n < 0:
        raise GwError(f"parameters must be nonnegative, got {(h, d, n)}")
    g0 = n + 1 - 4 * h - 2 * d
    if g0 < 0:
        raise GwError(f"n + 1 - 4h - 2d = {g0} must be nonnegative")
    if h + d == 0:
        return GwSeries(USeries.zero(order), "relative_F2_Dminus2", None, n, d - 2, g0)
    delta = degree_hirzebruch(2, h, d)
    m = 2 * h + d
    relative = gw_relative_series(delta, n, order + m)
    if relative.series.is_zero():
        series = USeries.zero(order)
    else:
        e0 = 2 * g0 - 2 + 2 * h + 2 * d
        if order <= 2 * g0 - 2 + d:
            raise GwError(
                f"order {order} does not reach the valuation {2 * g0 - 2 + d}"
            )
        series = relative.series * sin_factor_series(1, -m, order - e0)
        if series.order != order:
            raise AssertionError("truncation bookkeeping drift")
    return GwSeries(
        series, "relative_F2_Dminus2", delta, n, exponent_offset=d - 2, g_min=g0
    )


def _refined_count_or_zero(k: int, h: int, d: int, n: int) -> LaurentPolyS:
    if h + d == 0:
        return LaurentPolyS.zero()
    return refined_count(degree_hirzebruch(k, h, d), n)


@dataclass(frozen=True)
class AbIdentityReport:
    """Both levels of the Abramovich-Bertram comparison for (a, b, n)."""

    a: int
    b: int
    n: int
    lhs_polynomial: LaurentPolyS
    rhs_polynomial: LaurentPolyS
    polynomial_equal: bool
    lhs_series: USeries
    rhs_series: USeries
    series_equal: bool

    @property
    def equal(self) -> bool:
        return self.polynomial_equal and self.series_equal

    def to_json(self) -> dict:
        return {
            "target": "ab",
            "a": self.a,
            "b": self.b,
            "n": self.n,
            "lhs_polynomial": self.lhs_polynomial.to_json(),
            "rhs_polynomial": self.rhs_polynomial.to_json(),
            "polynomial_equal": self.polynomial_equal,
            "lhs_series": self.lhs_series.to_json(),
            "rhs_series": self.rhs_series.to_json(),
            "series_equal": self.series_equal,
            "equal": self.equal,
        }


def ab_identity_check(a: int, b: int, n: int, order: int = 16) -> AbIdentityReport:
    """Verify the Abramovich-Bertram relation between F0 and F2 counts.

    Polynomial level: the refined F0 (a, a+b) count must equal
    sum_{j=0..a} C(b+2j, j) * refined F2 (a-j, b+2j) count.  Series level:
    the F0 absolute series must equal
    sum_j C(b+2j, j) * (F2/D_(-2) series) * S^-(b+2j) to the truncation
    order.  Returns both sides of both levels.
    """
    if a < 0 or b < 0 or n < 0:
        raise GwError(f"parameters must be nonnegative, got {(a, b, n)}")
    g0 = n + 1 - 4 * a - 2 * b
    if g0 < 0:
        raise GwError(f"n + 1 - 4a - 2b = {g0} must be nonnegative")
    if order <= max(2 * g0 - 2, 0):
        raise GwError(f"order {order} is too small for minimal genus {g0}")

    lhs_poly = _refined_count_or_zero(0, a, a + b, n)
    rhs_poly = LaurentPolyS.zero()
    for j in range(a + 1):
        rhs_poly = rhs_poly + comb(b + 2 * j, j) * _refined_count_or_zero(
            2, a - j, b + 2 * j, n
        )

    lhs_series = f0_absolute_series(a, b, n, order).series
    rhs_series = USeries.zero(order)
    for j in range(a + 1):
        d = b + 2 * j
        term = f2_relative_dminus2_series(a - j, d, n, order + d).series
        prefactor = sin_factor_series(1, -d, order - (2 * g0 - 2))
        term = (term * prefactor * comb(d, j)).truncate(order)
        rhs_series = rhs_series + term

    return AbIdentityReport(
        a,
        b,
        n,
        lhs_poly,
        rhs_poly,
        lhs_poly == rhs_poly,
        lhs_series,
        rhs_series,
        lhs_series == rhs_series,
    )
