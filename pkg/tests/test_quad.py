"""Quadrature engines: finite adaptive, unit-split tails, sawtooth
integrals, and the periodization transform."""

import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from nlgamma._backend import frac, p1
from nlgamma.quad import (
    PowerTail,
    QuadConfig,
    integrate_finite,
    integrate_unit_split,
    lemma2_transform,
    p1_integral,
)
from nlgamma.specfun import hurwitz_zeta

EULER_GAMMA = 0.5772156649015328606

# telescoping oracle: sum_{l<=1e5} [ln((l+1)/l) - 1/(l+1)] + 1/(2L) - 7/(12L^2)
ONE_MINUS_GAMMA_ORACLE = 0.42278433509844043


def test_config_validation():
    with pytest.raises(ValueError):
        QuadConfig(rel_tol=0.0)
    with pytest.raises(ValueError):
        QuadConfig(max_subdivisions=0)


class TestIntegrateFinite:
    def test_linear(self):
        r = integrate_finite(lambda u: u, 0.0, 1.0)
        assert abs(r.value - 0.5) < 1e-15
        assert r.converged and r.n_evals > 0

    def test_rational_with_antiderivative(self):
        # int_0^1 u/(u+1)^2 du = ln(u+1) + 1/(u+1) evaluated at the ends
        r = integrate_finite(lambda u: u / (u + 1.0) ** 2, 0.0, 1.0)
        assert abs(r.value - (math.log(2.0) - 0.5)) < 1e-14

    def test_hurwitz_moment(self):
        # int_0^1 u zeta(2, u+1) du = 1 - gamma
        r = integrate_finite(lambda u: u * hurwitz_zeta(2.0, u + 1.0), 0.0, 1.0)
        assert abs(r.value - (1.0 - EULER_GAMMA)) < 1e-12

    def test_empty_interval(self):
        r = integrate_finite(lambda u: u, 2.0, 2.0)
        assert r.value == 0.0 and r.converged

    def test_bad_interval(self):
        with pytest.raises(ValueError):
            integrate_finite(lambda u: u, 1.0, 0.0)

    def test_error_estimate_honest(self):
        for f, a, b, exact in [
            (lambda u: math.exp(-u * u), 0.0, 3.0, 0.8862073482595214),  # erf form
            (lambda u: 1.0 / (1.0 + u * u), 0.0, 1.0, math.pi / 4.0),
            (lambda u: u ** 7.5, 0.0, 1.0, 1.0 / 8.5),
        ]:
            r = integrate_finite(f, a, b)
            assert abs(r.value - exact) <= 10.0 * max(r.abs_err_est, 1e-16)

    def test_converged_flag_respects_tolerance(self):
        cfg = QuadConfig(rel_tol=1e-11, abs_tol=1e-13)
        r = integrate_finite(lambda u: math.sin(3.0 * u) ** 2 + u, 0.0, 4.0, cfg)
        assert r.converged
        assert r.abs_err_est <= max(cfg.abs_tol, cfg.rel_tol * abs(r.value))

    def test_nonconvergence_flagged(self):
        cfg = QuadConfig(rel_tol=1e-14, abs_tol=1e-300, max_subdivisions=3)
        r = integrate_finite(lambda u: abs(u - 1 / 3.0) ** 0.5, 0.0, 1.0, cfg)
        assert not r.converged

    @given(c=st.floats(min_value=0.05, max_value=0.95))
    @settings(max_examples=25, deadline=None)
    def test_additivity(self, c):
        f = lambda u: math.exp(-u) * (1.0 + u * u)  # noqa: E731
        whole = integrate_finite(f, 0.0, 1.0)
        parts = integrate_finite(f, 0.0, c) + integrate_finite(f, c, 1.0)
        assert abs(whole.value - parts.value) <= (
            whole.abs_err_est + parts.abs_err_est + 1e-14
        )


class TestFracHelpers:
    def test_values(self):
        assert frac(2.75) == 0.75
        assert frac(-0.25) == 0.75
        assert p1(2.75) == 0.25

    @given(
        x=st.floats(
            min_value=-1e12, max_value=1e12, allow_nan=False, allow_infinity=False
        )
    )
    @settings(max_examples=80, deadline=None)
    def test_periodicity_exact(self, x):
        # exact whenever x+1 is itself representable (no rounding in the shift)
        assume((x + 1.0) - 1.0 == x)
        assert frac(x + 1.0) == frac(x)


class TestUnitSplit:
    def test_sawtooth_over_square(self):
        tail = PowerTail.from_periodic(lambda y: y, 2.0)
        r = integrate_unit_split(lambda x: frac(x) / (x * x), 1.0, tail=tail)
        assert abs(r.value - ONE_MINUS_GAMMA_ORACLE) < 5e-13
        assert abs(r.value - ONE_MINUS_GAMMA_ORACLE) < 10.0 * r.abs_err_est + 1e-15

    def test_sawtooth_squared_over_cube(self):
        # equals (3 - pi^2/6 - 2 gamma)/2, the second closed moment at 1
        tail = PowerTail.from_periodic(lambda y: y * y, 3.0)
        r = integrate_unit_split(lambda x: frac(x) ** 2 / x**3, 1.0, tail=tail)
        exact = (3.0 - math.pi**2 / 6.0 - 2.0 * EULER_GAMMA) / 2.0
        assert abs(r.value - exact) < 1e-12

    def test_plain_inverse_square(self):
        # constant periodic factor: the mean correction makes the tail exact
        tail = PowerTail.from_periodic(lambda y: 1.0, 2.0)
        r = integrate_unit_split(lambda x: 1.0 / (x * x), 1.0, tail=tail)
        assert abs(r.value - 1.0) < 1e-12

    def test_envelope_only_tail(self):
        tail = PowerTail.from_envelope(1.0, 3.0)
        r = integrate_unit_split(
            lambda x: 1.0 / x**3, 1.0, QuadConfig(abs_tol=1e-7), tail=tail
        )
        assert r.converged
        assert abs(r.value - 0.5) <= r.abs_err_est + 1e-12
        assert abs(r.value - 0.5) < 1e-6

    def test_non_integer_start(self):
        tail = PowerTail.from_periodic(lambda y: 1.0, 2.0)
        r = integrate_unit_split(lambda x: 1.0 / (x * x), 1.5, tail=tail)
        assert abs(r.value - 1.0 / 1.5) < 1e-12

    def test_no_tail_model_geometric_fallback(self):
        r = integrate_unit_split(lambda x: math.exp(-x), 0.0)
        assert abs(r.value - 1.0) < 1e-12

    def test_budget_exhaustion_flagged(self):
        cfg = QuadConfig(tail_intervals_max=5, abs_tol=1e-13)
        tail = PowerTail.from_envelope(1.0, 1.5)
        r = integrate_unit_split(lambda x: 1.0 / x**1.5, 1.0, cfg, tail=tail)
        assert not r.converged

    def test_converged_implies_estimate_within_allowance(self):
        cfg = QuadConfig()
        cases = [
            integrate_unit_split(
                lambda x: frac(x) / (x * x),
                1.0,
                cfg,
                tail=PowerTail.from_periodic(lambda y: y, 2.0),
            ),
            integrate_unit_split(
                lambda x: frac(x) ** 3 / x**4,
                1.0,
                cfg,
                tail=PowerTail.from_periodic(lambda y: y**3, 4.0),
            ),
            p1_integral(
                lambda t: (t + 1.0) ** -4.0, lambda t: 4.0 * (t + 1.0) ** -5.0, 0.0, cfg
            ),
            integrate_finite(lambda u: math.exp(-u), 0.0, 3.0, cfg),
        ]
        for r in cases:
            assert r.converged
            assert r.abs_err_est <= max(cfg.abs_tol, cfg.rel_tol * abs(r.value))

    def test_lemma1_unit_split_equals_shifted_sums(self):
        # int_1^inf f({x}) g(x) dx = sum_l int_0^1 f(y) g(y+l) dy
        for mdeg in range(0, 4):
            g_pow = mdeg + 2.0
            tail = PowerTail.from_periodic(lambda y, m=mdeg: y**m, g_pow, shift=1.0)
            direct = integrate_unit_split(
                lambda x, m=mdeg: frac(x) ** m / (x + 1.0) ** (m + 2.0),
                1.0,
                tail=tail,
            )
            summed = 0.0
            err = 0.0
            for l in range(1, 4000):
                part = integrate_finite(
                    lambda y, m=mdeg, l=l: y**m / (y + l + 1.0) ** (m + 2.0), 0.0, 1.0
                )
                summed += part.value
                err += part.abs_err_est
            # remaining shifted-sum tail, bounded by the integral envelope
            tail_bound = 4000.0 ** (-(g_pow - 1.0)) / (g_pow - 1.0)
            assert abs(direct.value - summed) <= (
                direct.abs_err_est + err + tail_bound + 1e-12
            )


class TestP1Integral:
    def test_against_zeta_form(self):
        # integral_0^inf p1(t)/(t+a)^(s+1) dt relates to zeta(s, a)
        for s, a in [(2.0, 1.0), (3.0, 1.5), (5.0, 3.0)]:
            r = p1_integral(
                lambda t, s=s, a=a: (t + a) ** (-s - 1.0),
                lambda t, s=s, a=a: (s + 1.0) * (t + a) ** (-s - 2.0),
                0.0,
            )
            expected = (a**-s / 2.0 + a ** (1.0 - s) / (s - 1.0) - hurwitz_zeta(s, a)) / s
            assert abs(r.value - expected) < 1e-10

    def test_requires_integer_start(self):
        with pytest.raises(ValueError):
            p1_integral(lambda t: (t + 1.0) ** -3.0, lambda t: 3.0 * (t + 1.0) ** -4.0, 0.5)


class TestLemma2Transform:
    @pytest.mark.parametrize("b", [1.0, 2.0, 3.0])
    @pytest.mark.parametrize("c", [1.0, 2.0])
    @pytest.mark.parametrize("lam", [2.0, 3.0, 4.0])
    def test_equality_grid(self, b, c, lam):
        for name, f in (("one", lambda y: 1.0), ("y", lambda y: y), ("y2", lambda y: y * y)):
            lhs, rhs = lemma2_transform(f, b, c, lam)
            assert abs(lhs.value - rhs.value) < 1e-8, (name, b, c, lam)

    def test_trivial_telescoping_case(self):
        # f = 1, b = c = 1, lam = 2: both sides are exactly 1
        lhs, rhs = lemma2_transform(lambda y: 1.0, 1.0, 1.0, 2.0)
        assert abs(lhs.value - 1.0) < 1e-10
        assert abs(rhs.value - 1.0) < 1e-12

    def test_moment_case(self):
        lhs, rhs = lemma2_transform(lambda y: y, 1.0, 1.0, 2.0)
        assert abs(lhs.value - (1.0 - EULER_GAMMA)) < 1e-10
        assert abs(rhs.value - (1.0 - EULER_GAMMA)) < 1e-11

    def test_scaling_substitution(self):
        # int_0^inf f({x/b}) g(x) dx = b int_0^inf f({v}) g(b v) dv
        b, c, lam = 3.0, 2.0, 3.0
        f = lambda y: y  # noqa: E731
        scale = b ** (1.0 - lam)
        tail = PowerTail.from_periodic(lambda y: scale * f(y), lam, shift=c / b)
        subst = integrate_unit_split(
            lambda v: scale * f(frac(v)) * (v + c / b) ** (-lam), 0.0, tail=tail
        )
        # direct x-integration over blocks [j b, (j+1) b] with interior
        # breakpoints only at multiples of b
        direct = 0.0
        err = 0.0
        for j in range(4000):
            part = integrate_finite(
                lambda x: f(frac(x / b)) * (x + c) ** (-lam), j * b, (j + 1.0) * b
            )
            direct += part.value
            err += part.abs_err_est
        cut = 4000.0 * b
        tail_env = (cut + c) ** (1.0 - lam) / (lam - 1.0)
        assert abs(subst.value - direct) <= subst.abs_err_est + err + tail_env + 1e-10

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            lemma2_transform(lambda y: y, 0.0, 1.0, 2.0)
        with pytest.raises(ValueError):
            lemma2_transform(lambda y: y, 1.0, 1.0, 1.0)
        with pytest.raises(ValueError):
            lemma2_transform(lambda y: y, 1.0, -1.0, 2.0)
