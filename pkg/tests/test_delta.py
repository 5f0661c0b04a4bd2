"""The normalized log-gamma function: routes, special values, moment
integrals, asymptotics, and the sign-pattern certificate."""

import math

import pytest

from nlgamma._backend import kernels
from nlgamma.delta import (
    MAX_DERIV_ORDER,
    Route,
    asymptotic_leading,
    check_complete_monotonicity,
    default_route,
    delta,
    delta_deriv,
    delta_deriv_at_one,
    delta_deriv_half_integer,
    frac_rep_prop2,
    integral_delta,
    integral_delta_squared,
    recurrence_residual,
)
from nlgamma.quad import QuadConfig
from nlgamma.specfun import CONSTANTS

G = CONSTANTS.euler_gamma
ROUTE_GRID = (-0.9, -0.5, -0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0)


def rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


class TestDeltaValue:
    def test_at_zero(self):
        assert delta(0.0) == -G

    def test_at_one(self):
        assert delta(1.0) == 0.0

    def test_at_minus_half(self):
        # ln Gamma(1/2) / (-1/2) = -ln pi
        assert rel(delta(-0.5), -math.log(math.pi)) < 1e-14

    @pytest.mark.parametrize("x", [0.1249, -0.1249, 0.0031, -0.0625])
    def test_series_matches_direct_form(self, x):
        direct = kernels.ln_gamma(x + 1.0) / x
        assert abs(delta(x) - direct) < 1e-13 * max(1.0, abs(direct))

    def test_domain(self):
        with pytest.raises(ValueError):
            delta(-1.0)


class TestRouteAgreement:
    @pytest.mark.parametrize("m", range(1, 9))
    def test_pairwise_grid(self, m):
        for x in ROUTE_GRID:
            routes = [Route.CLOSED, Route.HURWITZ, Route.HYP]
            if x >= 0.0:
                routes.append(Route.LAPLACE)
            vals = [delta_deriv(m, x, r) for r in routes]
            for i in range(len(vals)):
                for j in range(i + 1, len(vals)):
                    a, b = vals[i], vals[j]
                    tol = max(1e-8 * max(abs(a.value), abs(b.value)), 1e-10)
                    assert abs(a.value - b.value) <= tol, (m, x, a.route, b.route)

    @pytest.mark.parametrize("m", [1, 2, 4, 8])
    def test_error_estimates_honest(self, m):
        # cross-route gaps must not exceed ten times the summed estimates,
        # for every applicable pair
        for x in ROUTE_GRID:
            routes = [Route.CLOSED, Route.HURWITZ, Route.HYP]
            if x >= 0.0:
                routes.append(Route.LAPLACE)
            vals = [delta_deriv(m, x, r) for r in routes]
            for i in range(len(vals)):
                for j in range(i + 1, len(vals)):
                    a, b = vals[i], vals[j]
                    assert abs(a.value - b.value) <= 10.0 * (
                        a.abs_err_est + b.abs_err_est
                    ), (m, x, a.route, b.route)

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_taylor_consistency_small_x(self, m):
        for x in (-0.12, -0.06, 0.01, 0.05, 0.12):
            s = delta_deriv(m, x, Route.SERIES)
            c = delta_deriv(m, x, Route.CLOSED)
            assert abs(s.value - c.value) <= 1e-10 * max(1.0, abs(c.value)), (m, x)

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    @pytest.mark.parametrize("x", [0.5, 1.0, 3.0])
    def test_derivative_chaining(self, m, x):
        h = 1e-5
        fd = (
            delta_deriv(m, x + h, Route.CLOSED).value
            - delta_deriv(m, x - h, Route.CLOSED).value
        ) / (2.0 * h)
        nxt = delta_deriv(m + 1, x, Route.CLOSED).value
        assert rel(fd, nxt) < 1e-5

    def test_route_preconditions(self):
        with pytest.raises(ValueError):
            delta_deriv(1, 0.0, Route.CLOSED)
        with pytest.raises(ValueError):
            delta_deriv(1, -0.5, Route.LAPLACE)
        with pytest.raises(ValueError):
            delta_deriv(1, 0.5, Route.RECURRENCE)  # needs m >= 2
        with pytest.raises(ValueError):
            delta_deriv(2, 0.0, Route.RECURRENCE)
        with pytest.raises(ValueError):
            delta_deriv(1, 0.6, Route.SERIES)  # beyond the series domain cap
        with pytest.raises(ValueError):
            delta_deriv(0, 1.0)
        with pytest.raises(ValueError):
            delta_deriv(MAX_DERIV_ORDER + 1, 1.0)
        with pytest.raises(ValueError):
            delta_deriv(1, -1.5)

    def test_default_route_selection(self):
        assert default_route(1, 0.0) is Route.SERIES
        assert default_route(1, 0.1) is Route.SERIES
        assert default_route(1, 0.2) is Route.CLOSED

    def test_recurrence_route_value(self):
        r = delta_deriv(2, 1.0, Route.RECURRENCE)
        assert rel(r.value, math.pi**2 / 6.0 - 3.0 + 2.0 * G) < 1e-12


class TestSpecialValues:
    def test_first_derivative_at_zero(self):
        # pi^2/12, via the value of the expansion at the origin
        assert rel(delta_deriv(1, 0.0).value, math.pi**2 / 12.0) < 1e-14

    @pytest.mark.parametrize("m", range(1, 9))
    def test_derivatives_at_zero_all_routes(self, m):
        exact = (
            (-1.0) ** (m - 1)
            * math.factorial(m)
            * CONSTANTS.zeta_values[m + 1]
            / (m + 1.0)
        )
        for route in (Route.SERIES, Route.HURWITZ, Route.HYP, Route.LAPLACE):
            assert rel(delta_deriv(m, 0.0, route).value, exact) < 1e-11, route

    def test_first_derivative_at_one(self):
        assert rel(delta_deriv(1, 1.0).value, 1.0 - G) < 1e-13

    def test_second_derivative_at_one(self):
        assert rel(delta_deriv(2, 1.0).value, math.pi**2 / 6.0 - 3.0 + 2.0 * G) < 1e-12

    def test_first_derivative_at_minus_half(self):
        exact = 2.0 * G + 4.0 * math.log(2.0) - 2.0 * math.log(math.pi)
        assert rel(delta_deriv(1, -0.5).value, exact) < 1e-13


class TestClosedForms:
    def test_at_one_first_values(self):
        assert rel(delta_deriv_at_one(1), 1.0 - G) < 1e-15
        assert rel(delta_deriv_at_one(2), math.pi**2 / 6.0 - 3.0 + 2.0 * G) < 1e-13
        # m = 3: 6 [1 - g - (z2-1)/2 - (z3-1)/3]
        z2, z3 = CONSTANTS.zeta_values[2], CONSTANTS.zeta_values[3]
        exact = 6.0 * (1.0 - G - (z2 - 1.0) / 2.0 - (z3 - 1.0) / 3.0)
        assert rel(delta_deriv_at_one(3), exact) < 1e-14

    @pytest.mark.parametrize("m", range(1, 9))
    def test_at_one_vs_closed_route(self, m):
        assert rel(delta_deriv_at_one(m), delta_deriv(m, 1.0, Route.CLOSED).value) < 1e-11

    def test_half_integer_first_order(self):
        exact = 2.0 * G + 4.0 * math.log(2.0) - 2.0 * math.log(math.pi)
        assert rel(delta_deriv_half_integer(1), exact) < 1e-15

    def test_half_integer_regression_values(self):
        # frozen from the CLOSED route (exact polygamma combinations);
        # m = 2 also equals -pi^2 + 8 gamma + 16 ln 2 - 8 ln pi
        assert rel(delta_deriv_half_integer(2), -3.3193632797131745) < 1e-13
        assert rel(delta_deriv_half_integer(3), 13.741413610189582) < 1e-13
        exact2 = -math.pi**2 + 8.0 * G + 16.0 * math.log(2.0) - 8.0 * math.log(math.pi)
        assert rel(delta_deriv_half_integer(2), exact2) < 1e-13

    @pytest.mark.parametrize("m", range(1, 11))
    def test_half_integer_vs_closed_route(self, m):
        assert (
            rel(delta_deriv_half_integer(m), delta_deriv(m, -0.5, Route.CLOSED).value)
            < 1e-10
        )

    def test_order_caps(self):
        with pytest.raises(ValueError):
            delta_deriv_at_one(0)
        with pytest.raises(ValueError):
            delta_deriv_half_integer(11)


class TestFracRep:
    CFG = QuadConfig(rel_tol=1e-11, abs_tol=1e-9)

    def test_k1_m1_is_one_minus_gamma(self):
        lhs, rhs = frac_rep_prop2(1, 1, self.CFG)
        assert abs(lhs.value - (1.0 - G)) < 1e-10
        assert abs(rhs.value - (1.0 - G)) < 1e-9

    def test_k1_m2_matches_second_moment(self):
        exact = (3.0 - math.pi**2 / 6.0 - 2.0 * G) / 2.0  # = -D''(1)/2
        lhs, rhs = frac_rep_prop2(2, 1, self.CFG)
        assert abs(lhs.value - exact) < 1e-10
        assert abs(rhs.value - exact) < 1e-9

    @pytest.mark.parametrize("m", range(1, 5))
    @pytest.mark.parametrize("k", range(1, 6))
    def test_equality_grid(self, m, k):
        lhs, rhs = frac_rep_prop2(m, k, self.CFG)
        gap = abs(lhs.value - rhs.value)
        assert gap <= 1e-6
        assert gap <= 10.0 * (lhs.abs_err_est + rhs.abs_err_est) + 1e-12

    def test_domain(self):
        with pytest.raises(ValueError):
            frac_rep_prop2(0, 1)
        with pytest.raises(ValueError):
            frac_rep_prop2(1, 0)


class TestMomentIntegrals:
    def test_three_forms_agree(self):
        q, s, e = integral_delta()
        assert abs(q.value - s) <= 1e-8
        assert abs(q.value - e.value) <= 1e-8
        assert abs(s - e.value) <= 1e-8

    def test_four_digit_value(self):
        q, _, _ = integral_delta()
        assert round(q.value, 4) == -0.2569

    def test_series_partial_sums_bracket(self):
        # even/odd truncations of sum (-1)^k zeta(k)/k^2 bracket the limit
        zs = CONSTANTS.zeta_values
        partials = []
        acc = 0.0
        for k in range(2, 40):
            acc += (-1.0) ** k * zs[k] / (k * k)
            partials.append(acc)
        full = sum((-1.0) ** k * zs[k] / (k * k) for k in range(2, 64))
        for i, p in enumerate(partials[:-1]):
            k = i + 2
            if k % 2 == 0:
                assert p >= full - 1e-15
            else:
                assert p <= full + 1e-15

    def test_squared_forms_agree(self):
        q2, s2 = integral_delta_squared()
        assert abs(q2.value - s2) <= 1e-8

    def test_squared_positivity_and_cauchy_schwarz(self):
        q, _, _ = integral_delta()
        q2, _ = integral_delta_squared()
        assert q2.value > 0.0
        assert q2.value >= q.value**2


class TestAsymptotic:
    @pytest.mark.parametrize("m", range(1, 5))
    def test_ratio_converges_monotonically(self, m):
        gaps = []
        for x in (1e2, 1e3, 1e4):
            v = delta_deriv(m, x, Route.CLOSED).value
            gaps.append(abs(v / asymptotic_leading(m, x) - 1.0))
        assert gaps[0] > gaps[1] > gaps[2]
        assert gaps[2] <= 5e-3

    def test_refinement_improves(self):
        for m in (1, 3):
            for x in (1e2, 1e4):
                v = delta_deriv(m, x, Route.CLOSED).value
                lead = asymptotic_leading(m, x)
                refined = asymptotic_leading(m, x, refine=True)
                assert abs(v - refined) < abs(v - lead)

    def test_not_applicable_at_small_x(self):
        # documents that the formula is asymptotic only: at x -> 0 the
        # leading term is 1 while the true value is pi^2/12
        assert asymptotic_leading(1, 1e-12) == pytest.approx(1.0, rel=1e-9)
        assert rel(delta_deriv(1, 0.0).value, math.pi**2 / 12.0) < 1e-13

    def test_route_wrapper(self):
        r = delta_deriv(1, 1e4, Route.ASYMPTOTIC)
        assert rel(r.value, 1.0 / (1e4 + 1.0)) < 1e-12
        assert r.abs_err_est > 0.0

    def test_domain(self):
        with pytest.raises(ValueError):
            asymptotic_leading(1, 0.0)


class TestRecurrenceResidual:
    def test_exact_point(self):
        r = recurrence_residual(2, 1.0, Route.CLOSED)
        assert abs(r.residual) < 1e-11 * max(abs(r.lhs), abs(r.rhs))

    def test_half_point(self):
        r = recurrence_residual(2, -0.5, Route.CLOSED)
        assert abs(r.residual) < 1e-10 * max(abs(r.lhs), abs(r.rhs))

    def test_hurwitz_base(self):
        r = recurrence_residual(5, 3.0, Route.HURWITZ)
        assert r.passed

    @pytest.mark.parametrize("m", range(2, 11))
    def test_grid(self, m):
        for x in ROUTE_GRID:
            r = recurrence_residual(m, x, Route.CLOSED)
            assert r.passed, (m, x, r.residual, r.tolerance)

    def test_domain(self):
        with pytest.raises(ValueError):
            recurrence_residual(1, 1.0)
        with pytest.raises(ValueError):
            recurrence_residual(2, 0.0)


class TestMonotonicity:
    def test_reference_grid(self):
        grid = (-0.9, -0.5, 0.0, 0.5, 1.0, 2.0, 10.0, 100.0)
        rep = check_complete_monotonicity(8, grid)
        assert rep.n_fail == 0
        assert len(rep.checks) == 64

    def test_single_point_value(self):
        rep = check_complete_monotonicity(1, [0.0])
        assert rep.checks[0].lhs == pytest.approx(math.pi**2 / 12.0, rel=1e-13)

    def test_far_field_value(self):
        rep = check_complete_monotonicity(1, [1e6])
        assert rep.checks[0].lhs == pytest.approx(1.0 / (1e6 + 1.0), rel=1e-3)
        assert rep.n_fail == 0

    def test_order_cap(self):
        with pytest.raises(ValueError):
            check_complete_monotonicity(13, [1.0])
