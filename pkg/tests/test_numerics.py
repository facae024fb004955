"""Kernel tests: quadrature, special-function oracles, root-finder."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gtrig.errors import (
    BracketError,
    DomainError,
    NonConvergenceError,
    NonFiniteIntegrandError,
)
from gtrig.numerics import (
    agm,
    beta,
    integrate_endpoint_singular,
    log_gamma,
    solve_increasing,
)

from conftest import AGM_1_SQRT2, LOG_GAMMA_HALF, LOG_GAMMA_THIRD


def arcsine_reflected(u):
    # integrand of the arcsine integral after t -> 1 - u, so the inverse
    # square-root singularity sits at the zero endpoint
    return 1.0 / np.sqrt(u * (2.0 - u))


class TestIntegrate:
    def test_constant_integrand(self):
        res = integrate_endpoint_singular(lambda t: np.ones_like(t), 0.0, 1.0)
        assert res.value == pytest.approx(1.0, abs=1e-14)

    def test_arcsine_integral(self):
        res = integrate_endpoint_singular(arcsine_reflected, 0.0, 1.0, tol=1e-13)
        assert abs(res.value - math.pi / 2) <= 1e-13
        assert res.error_estimate <= 1e-13

    def test_lemniscate_quarter_period_vs_agm(self):
        # integral of (1 - t**4)**(-1/2) over [0, 1], reflected: the factor
        # 1 - t**4 becomes u (2 - u) (1 + (1-u)**2)
        def f(u):
            t = 1.0 - u
            return 1.0 / np.sqrt(u * (2.0 - u) * (1.0 + t * t))

        res = integrate_endpoint_singular(f, 0.0, 1.0, tol=1e-13)
        expected = math.pi / (2.0 * agm(1.0, math.sqrt(2.0)))
        assert abs(res.value - expected) <= 1e-13

    def test_result_invariants(self):
        res = integrate_endpoint_singular(arcsine_reflected, 0.0, 1.0)
        assert math.isfinite(res.error_estimate) and res.error_estimate >= 0.0
        assert 1 <= res.evaluations <= 2**20

    @given(
        st.floats(0.05, 0.45),
        st.floats(0.55, 0.95),
    )
    @settings(max_examples=25, deadline=None)
    def test_additive_over_subintervals(self, b_lo, b_hi):
        def f(t):
            return np.cos(t) + t**3

        tol = 1e-13
        for b in (b_lo, b_hi):
            whole = integrate_endpoint_singular(f, 0.0, 1.0, tol).value
            left = integrate_endpoint_singular(f, 0.0, b, tol).value
            right = integrate_endpoint_singular(f, b, 1.0, tol).value
            assert abs(whole - (left + right)) <= 2.0 * tol

    def test_random_exponent_pairs_against_beta(self):
        # 2 * integral of (1 - t**q)**(-1/p) equals (2/q) B(1/q, 1 - 1/p);
        # the full 200-pair sweep lives in the acceptance suite
        rng = np.random.default_rng(2024)
        for _ in range(40):
            p = rng.uniform(1.1, 10.0)
            q = rng.uniform(1.1, 10.0)

            def f(u, q=q, p=p):
                return np.power(-np.expm1(q * np.log1p(-u)), -1.0 / p)

            quad = 2.0 * integrate_endpoint_singular(f, 0.0, 1.0, 1e-13).value
            closed = (2.0 / q) * beta(1.0 / q, 1.0 - 1.0 / p)
            assert abs(quad - closed) / closed <= 1e-11

    def test_non_finite_integrand_raises(self):
        def f(t):
            return np.where(np.abs(t - 0.5) < 0.1, np.nan, 1.0)

        with pytest.raises(NonFiniteIntegrandError):
            integrate_endpoint_singular(f, 0.0, 1.0)

    def test_evaluation_cap_raises(self):
        with pytest.raises(NonConvergenceError):
            integrate_endpoint_singular(
                arcsine_reflected, 0.0, 1.0, tol=1e-13, max_evals=30
            )

    def test_rejects_bad_interval_and_tol(self):
        with pytest.raises(DomainError):
            integrate_endpoint_singular(arcsine_reflected, 1.0, 0.0)
        with pytest.raises(DomainError):
            integrate_endpoint_singular(arcsine_reflected, 0.0, 1.0, tol=0.0)


def log_gamma_product_form(x: float, n: int = 20000) -> float:
    """Brute-force ln Gamma via the factorial limit form, in 30-digit
    arithmetic, with two Richardson extrapolation levels to kill the 1/n and
    1/n**2 terms of the truncation error."""
    mpmath = pytest.importorskip("mpmath")
    mp = mpmath.mp
    old = mp.dps
    mp.dps = 30
    try:
        xm = mpmath.mpf(x)

        def partial(m: int):
            s = mpmath.fsum(mpmath.log(xm + k) for k in range(m + 1))
            return mpmath.log(mpmath.factorial(m)) + xm * mpmath.log(m) - s

        f1, f2, f4 = partial(n), partial(2 * n), partial(4 * n)
        r1, r2 = 2 * f2 - f1, 2 * f4 - f2
        return float((4 * r2 - r1) / 3)
    finally:
        mp.dps = old


class TestLogGamma:
    def test_gamma_of_one(self):
        assert log_gamma(1.0) == 0.0

    def test_gamma_of_half(self):
        assert abs(log_gamma(0.5) - LOG_GAMMA_HALF) <= 1e-13 * LOG_GAMMA_HALF

    def test_gamma_third_against_product_form(self):
        oracle = log_gamma_product_form(1.0 / 3.0, n=5000)
        assert abs(oracle - LOG_GAMMA_THIRD) <= 1e-11
        assert abs(log_gamma(1.0 / 3.0) - LOG_GAMMA_THIRD) <= 1e-13

    @pytest.mark.parametrize("bad", [0.0, -1.0, math.nan, math.inf])
    def test_domain(self, bad):
        with pytest.raises(DomainError):
            log_gamma(bad)


class TestBeta:
    def test_ones(self):
        assert beta(1.0, 1.0) == pytest.approx(1.0, rel=1e-14)

    def test_halves(self):
        assert beta(0.5, 0.5) == pytest.approx(math.pi, rel=1e-12)

    def test_against_quadrature(self):
        # (2/3) B(1/3, 1/2) = 2 * integral of (1 - t**3)**(-1/2); with
        # t -> 1 - u the factor 1 - t**3 becomes u (3 - 3u + u**2)
        def f(u):
            return 1.0 / np.sqrt(u * (3.0 - 3.0 * u + u * u))

        quad = 2.0 * integrate_endpoint_singular(f, 0.0, 1.0, 1e-13).value
        assert abs((2.0 / 3.0) * beta(1.0 / 3.0, 0.5) - quad) <= 1e-12

    @pytest.mark.parametrize("a,b", [(0.0, 1.0), (1.0, -2.0), (math.nan, 1.0)])
    def test_domain(self, a, b):
        with pytest.raises(DomainError):
            beta(a, b)


class TestAgm:
    def test_fixed_points(self):
        assert agm(1.0, 1.0) == 1.0
        assert agm(2.0, 2.0) == 2.0

    def test_lemniscate_value(self):
        got = agm(1.0, math.sqrt(2.0))
        assert abs(got - AGM_1_SQRT2) <= 1e-14 * AGM_1_SQRT2

    @given(
        st.floats(0.1, 50.0),
        st.floats(0.1, 50.0),
        st.floats(1e-3, 1e3),
    )
    @settings(max_examples=100, deadline=None)
    def test_homogeneity(self, a, b, k):
        assert agm(k * a, k * b) == pytest.approx(k * agm(a, b), rel=1e-14)

    def test_domain(self):
        with pytest.raises(DomainError):
            agm(0.0, 1.0)
        with pytest.raises(DomainError):
            agm(1.0, -1.0)


class TestSolveIncreasing:
    def test_identity_function(self):
        got = solve_increasing(lambda s: s, 0.0, 1.0, 0.3)
        assert abs(got - 0.3) <= 1e-13

    def test_cube(self):
        got = solve_increasing(lambda s: s**3, 0.0, 1.0, 0.027)
        assert abs(got**3 - 0.027) <= 1e-13

    def test_arcsine_inversion(self):
        # the arc-length integral of the circle: root of F(s) = pi/6 is 1/2
        def f(s):
            if s <= 0.0:
                return 0.0
            return integrate_endpoint_singular(
                lambda t: 1.0 / np.sqrt(1.0 - t * t), 0.0, s, 1e-13
            ).value

        def df(s):
            return (1.0 - s * s) ** -0.5

        got = solve_increasing(f, 0.0, 0.9, math.pi / 6.0, deriv=df)
        assert abs(got - 0.5) <= 1e-12

    @given(
        st.floats(0.1, 10.0),
        st.floats(0.0, 10.0),
        st.floats(0.0, 10.0),
        st.floats(0.0, 2.0),
    )
    @settings(max_examples=100, deadline=None)
    def test_monotone_polynomial_round_trip(self, a, b, c, root):
        def f(s):
            return a * s + b * s**3 + c * s**5

        target = f(root)
        got = solve_increasing(f, 0.0, 2.0, target, tol=1e-13)
        assert abs(f(got) - target) <= 1e-13

    def test_newton_accepts_derivative(self):
        calls = []

        def f(s):
            calls.append(s)
            return s**3

        got = solve_increasing(f, 0.0, 1.0, 0.5**3, deriv=lambda s: 3 * s * s)
        assert abs(got - 0.5) <= 1e-10
        assert len(calls) <= 12

    def test_endpoint_hits(self):
        assert solve_increasing(lambda s: s, 0.0, 1.0, 0.0) == 0.0
        assert solve_increasing(lambda s: s, 0.0, 1.0, 1.0) == 1.0

    def test_bracket_error(self):
        with pytest.raises(BracketError):
            solve_increasing(lambda s: s, 0.0, 1.0, 2.0)
        with pytest.raises(BracketError):
            solve_increasing(lambda s: s, 0.0, 1.0, -0.5)

    def test_non_convergence(self):
        with pytest.raises(NonConvergenceError):
            solve_increasing(lambda s: s**3, 0.0, 1.0, 0.027, tol=1e-16, max_iter=2)

    def test_bracket_collapse_returns_best_float(self):
        # steep slope: consecutive floats move f by ~2e-10, far above tol, so
        # the solver must settle on the best representable argument
        target = math.pi / 7.0
        got = solve_increasing(lambda s: 1e6 * s, 0.0, 1.0, target, tol=1e-13)
        assert abs(1e6 * got - target) <= 1e6 * 2.3e-16 * abs(got) + 1e-9

    def test_validates_arguments(self):
        with pytest.raises(DomainError):
            solve_increasing(lambda s: s, 1.0, 0.0, 0.5)
        with pytest.raises(DomainError):
            solve_increasing(lambda s: s, 0.0, 1.0, 0.5, tol=-1.0)
