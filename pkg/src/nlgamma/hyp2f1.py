"""Gauss 2F1 evaluation for the parameter families this library needs.

Covered: the a = 1 family (1, b; c; z) for real b, c; the diagonal
family (p, p; p+1; -x); general real parameters at arguments reachable
from those via the Pfaff map z -> z/(z-1); z = 1 with positive parameter
excess via the Gauss summation theorem.  Near-unit arguments of the
a = 1 family with c - b in {1, 2} switch to logarithmic expansions in
(1 - z).  Everything else raises: full connection-formula machinery is
out of scope.
"""

from __future__ import annotations

import math

from . import quad
from ._backend import digamma, ln_gamma
from .report import IdentityResidual

__all__ = [
    "ConvergenceError",
    "gauss_2f1",
    "hyp_identity_residual",
    "hyp_recurrence_descent",
    "pochhammer",
    "D25_TRIPLES",
]

MAX_SERIES_TERMS = 100_000
_LOG_BRANCH_Z = 0.9

# derivative-rule check points: (a, b, c) with x in {0.5, 2}
D25_TRIPLES = ((1.0, 2.0, 5.0), (2.0, 2.0, 3.0), (1.0, 4.0, 6.0))

_IDENTITY_QUAD_CFG = quad.QuadConfig(
    rel_tol=1e-12, abs_tol=5e-300, max_subdivisions=400
)


class ConvergenceError(ArithmeticError):
    """A series failed to reach tolerance within its term budget."""


def pochhammer(a, j):
    """Rising factorial (a)_j = a (a+1) ... (a+j-1); (a)_0 = 1."""
    if j < 0:
        raise ValueError("pochhammer: need j >= 0")
    out = 1.0
    for i in range(j):
        out *= a + i
    return out


def _is_nonpositive_int(v):
    return v <= 0.0 and v == math.floor(v)


def _series(a, b, c, z):
    """Defining series sum_k (a)_k (b)_k / ((c)_k k!) z^k, |z| < 1."""
    term = 1.0
    acc = 1.0
    comp = 0.0
    small = 0
    for k in range(1, MAX_SERIES_TERMS):
        term *= (a + k - 1.0) * (b + k - 1.0) * z / ((c + k - 1.0) * k)
        t = acc + term
        if abs(acc) >= abs(term):
            comp += (acc - t) + term
        else:
            comp += (term - t) + acc
        acc = t
        if abs(term) <= 1e-17 * (abs(acc) + 1e-300):
            small += 1
            if small >= 2:
                return acc + comp
        else:
            small = 0
    raise ConvergenceError(
        f"2F1 series stalled: a={a} b={b} c={c} z={z}"
    )


def _log_branch_cb1(y, z):
    """(1, y; 1+y; z) for z near 1:
    y * sum_k ((y)_k/k!) [psi(k+1) - psi(k+y) - ln(1-z)] (1-z)^k."""
    w = 1.0 - z
    lnw = math.log(w)
    psi1 = -0.5772156649015328606  # psi(1)
    psiy = digamma(y)
    coef = 1.0
    wk = 1.0
    acc = 0.0
    for k in range(MAX_SERIES_TERMS):
        term = coef * (psi1 - psiy - lnw) * wk
        acc += term
        if abs(term) <= 1e-17 * (abs(acc) + 1e-300) and k > 2:
            return y * acc
        coef *= (y + k) / (k + 1.0)
        wk *= w
        psi1 += 1.0 / (k + 1.0)
        psiy += 1.0 / (y + k)
    raise ConvergenceError(f"log branch (c-b=1) stalled: y={y} z={z}")


def _log_branch_cb2(y, z):
    """(1, y; 2+y; z) for z near 1:
    y+1 - y(y+1) sum_k ((y+1)_k/k!) [psi(k+1) - psi(k+y+1) - ln(1-z)] (1-z)^(k+1)."""
    w = 1.0 - z
    lnw = math.log(w)
    psi1 = -0.5772156649015328606
    psiy = digamma(y + 1.0)
    coef = 1.0
    wk = w
    acc = 0.0
    for k in range(MAX_SERIES_TERMS):
        term = coef * (psi1 - psiy - lnw) * wk
        acc += term
        if abs(term) <= 1e-17 * (abs(acc) + 1e-300) and k > 2:
            return (y + 1.0) - y * (y + 1.0) * acc
        coef *= (y + 1.0 + k) / (k + 1.0)
        wk *= w
        psi1 += 1.0 / (k + 1.0)
        psiy += 1.0 / (y + 1.0 + k)
    raise ConvergenceError(f"log branch (c-b=2) stalled: y={y} z={z}")


def _gauss_sum(a, b, c):
    """2F1(a, b; c; 1) = Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b))."""
    if c - a - b <= 0.0:
        raise ValueError("2F1 at z=1 needs parameter excess c - a - b > 0")
    if c <= 0.0 or c - a <= 0.0 or c - b <= 0.0:
        raise ValueError("2F1 at z=1: gamma-function form needs positive args")
    return math.exp(ln_gamma(c) + ln_gamma(c - a - b) - ln_gamma(c - a) - ln_gamma(c - b))


def _diagonal_family(p, c, z):
    """(p, p; p+1; z) with p = c - 1 >= 2, for z <= 0.

    |z| <= 0.9 uses the plain series.  Beyond, the first parameter is
    lowered once through the elementary relation

      (p-1)/p * F(p, p; p+1; z) = (1-z)^(-(p-1)) - (1/p) F(p-1, p; p+1; z)

    and the remaining function drops to the a = 1 family by the Euler
    transform F(p-1, p; p+1; z) = (1-z)^(2-p) F(2, 1; p+1; z).
    """
    if abs(z) <= _LOG_BRANCH_Z:
        return _series(p, p, c, z)
    if z > 0.0:
        raise ValueError("diagonal 2F1 family implemented for z <= 0.9 only")
    w = 1.0 - z
    mid = w ** (2.0 - p) * gauss_2f1(1.0, 2.0, c, z)
    return (p / (p - 1.0)) * (w ** (1.0 - p) - mid / p)


def gauss_2f1(a, b, c, z):
    """2F1(a, b; c; z) on the implemented families (see module docstring).

    Relative error ~1e-12 across z in [-50, 0] and z in [0, 1); z = 1
    needs c - a - b > 0.  Raises ValueError outside the implemented
    families and ConvergenceError if a series stalls.
    """
    if _is_nonpositive_int(c):
        raise ValueError(f"gauss_2f1: c must not be a non-positive integer, got {c}")
    if z > 1.0:
        raise ValueError(f"gauss_2f1: z must be <= 1, got {z}")
    if a == 0.0 or b == 0.0 or z == 0.0:
        return 1.0
    if z == 1.0:
        return _gauss_sum(a, b, c)
    if b == 1.0 and a != 1.0:
        a, b = b, a
    if a == b and c == a + 1.0 and a >= 2.0:
        return _diagonal_family(a, c, z)
    if z < 0.0:
        # Pfaff: (1-z)^(-a) F(a, c-b; c; z/(z-1)); keeps a = 1 in family
        w = z / (z - 1.0)
        return (1.0 - z) ** (-a) * gauss_2f1(a, c - b, c, w)
    if z <= _LOG_BRANCH_Z:
        return _series(a, b, c, z)
    if a == 1.0:
        d = c - b
        if abs(d - 1.0) < 1e-12:
            return _log_branch_cb1(b, z)
        if abs(d - 2.0) < 1e-12:
            return _log_branch_cb2(b, z)
    # the defining series converges for any |z| < 1; close to 1 it merely
    # slows down, and the term budget flags a genuine stall
    return _series(a, b, c, z)


def hyp_recurrence_descent(n, x):
    """Walk F(a, n+2; n+3; -x) from a = n+2 down to a = 1.

    The first step uses the moment-integral recurrence

        F(n+1, n+2; n+3; -x) = (n+2)(x+1)^(-(n+1)) - (n+1) F(n+2, n+2; n+3; -x),

    later steps the Gauss contiguous relation

        (c-a) F(a-1) + (2a - c + (b-a) z) F(a) + a (z-1) F(a+1) = 0.

    Returns the descended value of F(1, n+2; n+3; -x).
    """
    z = -x
    b = n + 2.0
    c = n + 3.0
    f_top = gauss_2f1(n + 2.0, n + 2.0, c, z)  # a = n+2
    if n == 0:
        # a = n+1 is already 1
        return (n + 2.0) * (x + 1.0) ** (-(n + 1.0)) - (n + 1.0) * f_top
    f_hi = f_top
    f_lo = (n + 2.0) * (x + 1.0) ** (-(n + 1.0)) - (n + 1.0) * f_top  # a = n+1
    a = n + 1.0
    while a > 1.0:
        f_prev = -((2.0 * a - c + (b - a) * z) * f_lo + a * (z - 1.0) * f_hi) / (c - a)
        f_hi, f_lo = f_lo, f_prev
        a -= 1.0
    return f_lo


def _moment_integral(n, x):
    """integral_0^1 u^(n+1) / (x u + 1)^(n+2) du by quadrature."""
    r = quad.integrate_finite(
        lambda u: u ** (n + 1) / (x * u + 1.0) ** (n + 2), 0.0, 1.0, _IDENTITY_QUAD_CFG
    )
    return r.value


def _second_moment_integral(n, x):
    """integral_0^1 u^(n+1) / (x u + 1)^2 du by quadrature."""
    r = quad.integrate_finite(
        lambda u: u ** (n + 1) / (x * u + 1.0) ** 2, 0.0, 1.0, _IDENTITY_QUAD_CFG
    )
    return r.value


def hyp_identity_residual(identity, n, x, abc=None, fd_step=1e-5):
    """Evaluate both sides of a named hypergeometric identity.

    Tags: A1 (Euler transform of the diagonal family), A2 (moment
    integral vs the diagonal family), A4 (second-moment base relation),
    A5 (logarithmic form of A4; inner integral by quadrature), A6 (the
    inequality chain; residual is the smaller slack), T26 (argument
    transformation z = x/(x+1) vs -x), D25 (central finite difference of
    the derivative rule at parameters abc).
    """
    if n < 0:
        raise ValueError("hyp_identity_residual: need n >= 0")
    if x < 0.0:
        raise ValueError("hyp_identity_residual: need x >= 0")
    point = {"n": n, "x": x}
    if identity == "A1":
        lhs = gauss_2f1(n + 2.0, n + 2.0, n + 3.0, -x)
        rhs = (1.0 + x) ** (-(n + 1.0)) * gauss_2f1(1.0, 1.0, n + 3.0, -x)
        return IdentityResidual.build("A1", point, lhs, rhs, 1e-10, relative_to=1e-300)
    if identity == "A2":
        lhs = gauss_2f1(n + 2.0, n + 2.0, n + 3.0, -x) / (n + 2.0)
        rhs = _moment_integral(n, x)
        return IdentityResidual.build("A2", point, lhs, rhs, 1e-10, relative_to=1e-300)
    if identity == "A4":
        lhs = _second_moment_integral(n, x)
        rhs = 1.0 / (1.0 + x) - ((n + 1.0) / (n + 2.0)) * gauss_2f1(
            1.0, n + 2.0, n + 3.0, -x
        )
        return IdentityResidual.build("A4", point, lhs, rhs, 1e-9, relative_to=1e-300)
    if identity == "A5":
        lhs = _second_moment_integral(n, x)
        if x == 0.0:
            rhs = 1.0 / (n + 2.0)  # removable limit of the closed form
        else:
            inner = quad.integrate_finite(
                lambda v: (1.0 - v**n) / (v + 1.0), 0.0, x, _IDENTITY_QUAD_CFG
            ).value
            rhs = (
                ((n + 1.0) / x ** (n + 1.0)) * (math.log1p(x) - inner)
                - 1.0 / (x + 1.0)
            ) / x
        return IdentityResidual.build("A5", point, lhs, rhs, 1e-9, relative_to=1e-300)
    if identity == "A6":
        if x > 1.0:
            raise ValueError("A6 holds on x in [0, 1]")
        s1 = quad.integrate_finite(
            lambda v: (1.0 - v**n) / (v + 1.0), 0.0, x, _IDENTITY_QUAD_CFG
        ).value if x > 0.0 else 0.0
        s2 = x - x ** (n + 1.0) / (n + 1.0)
        slack = min(s2 - s1, x - s2)
        return IdentityResidual(
            identity="A6",
            point=point,
            lhs=s1,
            rhs=s2,
            residual=slack,
            tolerance=0.0,
            passed=slack >= 0.0,
        )
    if identity == "T26":
        # F(1, n+1; n+3; x/(x+1)) = (x+1) F(1, 2; n+3; -x); the right side
        # is evaluated through its Euler integral so the two sides do not
        # share a code path:  F(1,2;c;z) = (c-1)(c-2) int_0^1 t(1-t)^(c-3)/(1-zt) dt
        lhs = gauss_2f1(1.0, n + 1.0, n + 3.0, x / (x + 1.0))
        euler = quad.integrate_finite(
            lambda t: t * (1.0 - t) ** n / (1.0 + x * t), 0.0, 1.0, _IDENTITY_QUAD_CFG
        ).value
        rhs = (x + 1.0) * (n + 1.0) * (n + 2.0) * euler
        return IdentityResidual.build("T26", point, lhs, rhs, 1e-10, relative_to=1e-300)
    if identity == "D25":
        a, b, c = abc if abc is not None else D25_TRIPLES[n % len(D25_TRIPLES)]
        h = fd_step
        lhs = (gauss_2f1(a, b, c, -(x + h)) - gauss_2f1(a, b, c, -(x - h))) / (2.0 * h)
        rhs = -(a * b / c) * gauss_2f1(a + 1.0, b + 1.0, c + 1.0, -x)
        pt = dict(point, a=a, b=b, c=c)
        return IdentityResidual.build("D25", pt, lhs, rhs, 1e-6, relative_to=1e-300)
    raise ValueError(f"unknown identity tag: {identity}")
