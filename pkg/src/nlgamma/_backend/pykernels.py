"""Pure-Python scalar kernels.

These are the hot primitives everything else is built on: log-gamma,
digamma, Hurwitz zeta via Euler-Maclaurin, the integer-order upper
incomplete gamma, fractional-part helpers and a few fused integrands
that quadrature loops evaluate millions of times.

The compiled extension ``_ckernels`` implements the same functions with
the same algorithms; ``nlgamma._backend`` picks whichever is available.
Keep the two files in sync (the parity test compares them).
"""

from __future__ import annotations

import math

__all__ = [
    "EULER_GAMMA",
    "digamma",
    "ei_defect",
    "frac",
    "gamma_zero_series",
    "hurwitz_zeta",
    "hz_route_integrand",
    "laplace_integrand",
    "laplace_tail_weight",
    "ln_gamma",
    "p1",
    "p1_route_integrand",
    "prop2_integrand",
    "trunc_exp_factor",
    "upper_incomplete_gamma_int",
    "zeta_int",
]

EULER_GAMMA = 0.5772156649015328606

_LN_SQRT_TWO_PI = 0.9189385332046727418

# B_{2i} for 2i = 2..30 as exact rationals, rendered once to doubles.
_BERNOULLI = (
    (1, 6), (-1, 30), (1, 42), (-1, 30), (5, 66), (-691, 2730), (7, 6),
    (-3617, 510), (43867, 798), (-174611, 330), (854513, 138),
    (-236364091, 2730), (8553103, 6), (-23749461029, 870),
    (8615841276005, 14322),
)

# B_{2i} / (2i)!  -- Euler-Maclaurin correction weights.
_B2I_OVER_FACT = tuple(
    p / (q * math.factorial(2 * i + 2)) for i, (p, q) in enumerate(_BERNOULLI)
)

# B_{2i} / ((2i)(2i-1))  -- Stirling series coefficients.
_B2I_STIRLING = tuple(
    p / (q * (2 * i + 2) * (2 * i + 1)) for i, (p, q) in enumerate(_BERNOULLI)
)

# B_{2i} / (2i)  -- digamma asymptotic coefficients.
_B2I_DIGAMMA = tuple(p / (q * (2 * i + 2)) for i, (p, q) in enumerate(_BERNOULLI))

_ZETA_TABLE_MAX = 64


def frac(x):
    """Fractional part x - floor(x), in [0, 1)."""
    return x - math.floor(x)


def p1(x):
    """Sawtooth frac(x) - 1/2, the first periodized Bernoulli polynomial."""
    return x - math.floor(x) - 0.5


def hurwitz_zeta(s, a):
    """Hurwitz zeta(s, a) = sum_{k>=0} (a+k)^(-s) for s > 1, a > 0.

    Euler-Maclaurin: N = max(10, ceil(10 + s)) terms summed directly, then
    the integral and half terms at a+N plus Bernoulli corrections through
    B_30.  Relative error is ~1e-14 over s in [1.5, 60], a in (0, 1e6];
    extreme corners (tiny a with huge s) can over/underflow double range.
    """
    if s <= 1.0:
        raise ValueError("hurwitz_zeta requires s > 1")
    if a <= 0.0:
        raise ValueError("hurwitz_zeta requires a > 0")
    n = max(10, int(math.ceil(10.0 + s)))
    # direct terms with Neumaier compensation
    acc = 0.0
    comp = 0.0
    for k in range(n):
        term = (a + k) ** (-s)
        t = acc + term
        if abs(acc) >= abs(term):
            comp += (acc - t) + term
        else:
            comp += (term - t) + acc
        acc = t
    z = a + n
    total = acc + comp + z ** (1.0 - s) / (s - 1.0) + 0.5 * z ** (-s)
    zpow = z ** (-s - 1.0)
    poch = s
    z2 = z * z
    for i in range(15):
        term = _B2I_OVER_FACT[i] * poch * zpow
        total += term
        if abs(term) <= 1e-17 * abs(total):
            break
        poch *= (s + 2 * i + 1) * (s + 2 * i + 2)
        zpow /= z2
    return total


_zeta_cache = [0.0] * (_ZETA_TABLE_MAX + 1)
_zeta_ready = False


def _fill_zeta_cache():
    # idempotent (same values every time), so a racing first call from
    # two threads is benign; the ready flag is set only after the fill
    global _zeta_ready
    for k in range(2, _ZETA_TABLE_MAX + 1):
        _zeta_cache[k] = hurwitz_zeta(float(k), 1.0)
    _zeta_ready = True


def zeta_int(k):
    """zeta(k) for integer 2 <= k <= 64, from a table filled on first use."""
    if not _zeta_ready:
        _fill_zeta_cache()
    return _zeta_cache[k]


def _lgam_taylor_at_1(t):
    # ln Gamma(1+t) = -gamma*t + sum_{k>=2} (-1)^k zeta(k) t^k / k, |t| <= 0.5
    if not _zeta_ready:
        _fill_zeta_cache()
    acc = 0.0
    tk = t
    sign = 1.0
    for k in range(2, _ZETA_TABLE_MAX + 1):
        tk *= t
        term = sign * _zeta_cache[k] * tk / k
        acc += term
        if abs(term) <= 1e-18 * (abs(acc) + 1e-300):
            break
        sign = -sign
    return -EULER_GAMMA * t + acc


def _lgam_taylor_at_2(t):
    # ln Gamma(2+t) = (1-gamma)*t + sum_{k>=2} (-1)^k (zeta(k)-1) t^k / k
    if not _zeta_ready:
        _fill_zeta_cache()
    acc = 0.0
    tk = t
    sign = 1.0
    for k in range(2, _ZETA_TABLE_MAX + 1):
        tk *= t
        term = sign * (_zeta_cache[k] - 1.0) * tk / k
        acc += term
        if abs(term) <= 1e-18 * (abs(acc) + 1e-300):
            break
        sign = -sign
    return (1.0 - EULER_GAMMA) * t + acc


def _stirling_lgam(z):
    # z >= 8; Bernoulli terms through B_20 leave remainder ~1e-18
    acc = 0.0
    zpow = z
    z2 = z * z
    for i in range(10):
        acc += _B2I_STIRLING[i] / zpow
        zpow *= z2
    return (z - 0.5) * math.log(z) - z + _LN_SQRT_TWO_PI + acc


def ln_gamma(x):
    """ln Gamma(x) for x > 0.

    Stirling with upward shifting for x outside [0.5, 2.5]; Taylor series
    around the zeros at 1 and 2 inside, which keeps the *relative* error
    small where ln Gamma itself crosses zero.
    """
    if x <= 0.0:
        raise ValueError("ln_gamma requires x > 0")
    if 0.5 <= x <= 1.5:
        return _lgam_taylor_at_1(x - 1.0)
    if 1.5 < x <= 2.5:
        return _lgam_taylor_at_2(x - 2.0)
    if x < 0.5:
        return _lgam_taylor_at_1(x) - math.log(x)
    shift = 0.0
    z = x
    while z < 8.0:
        shift += math.log(z)
        z += 1.0
    return _stirling_lgam(z) - shift


def digamma(x):
    """psi(x) = d/dx ln Gamma(x) for x > 0."""
    if x <= 0.0:
        raise ValueError("digamma requires x > 0")
    acc = 0.0
    z = x
    while z < 10.0:
        acc -= 1.0 / z
        z += 1.0
    # psi(z) = ln z - 1/(2z) - sum B_{2i}/(2i z^{2i}),  z >= 10
    inv2 = 1.0 / (z * z)
    zpow = inv2
    tail = 0.0
    for i in range(7):
        tail += _B2I_DIGAMMA[i] * zpow
        zpow *= inv2
    return acc + math.log(z) - 0.5 / z - tail


def upper_incomplete_gamma_int(n, x):
    """Gamma(n+1, x) = n! e^(-x) sum_{m=0}^n x^m/m!, ascending, compensated."""
    if n < 0:
        raise ValueError("upper_incomplete_gamma_int requires n >= 0")
    if x < 0.0:
        raise ValueError("upper_incomplete_gamma_int requires x >= 0")
    if n > 170:
        raise ValueError("upper_incomplete_gamma_int: n too large for double range")
    term = 1.0
    acc = 1.0
    comp = 0.0
    for m in range(1, n + 1):
        term *= x / m
        t = acc + term
        if abs(acc) >= abs(term):
            comp += (acc - t) + term
        else:
            comp += (term - t) + acc
        acc = t
    return float(math.factorial(n)) * math.exp(-x) * (acc + comp)


def trunc_exp_factor(m, y):
    """E_m(y) = integral_0^1 u^m e^(-y u) du = [m! - Gamma(m+1, y)] / y^(m+1).

    For small/moderate y the subtraction is done via the all-positive series
    m! e^(-y) sum_{i>=0} y^i / (i+m+1)!; the direct form is used once
    Gamma(m+1, y) is negligible against m!.
    """
    if y < 0.0:
        raise ValueError("trunc_exp_factor requires y >= 0")
    if y == 0.0:
        return 1.0 / (m + 1)
    if y <= m + 30.0:
        term = 1.0 / (m + 1)
        acc = term
        i = 1
        while True:
            term *= y / (m + 1 + i)
            acc += term
            if term <= 1e-18 * acc:
                break
            i += 1
        return math.exp(-y) * acc
    return (math.factorial(m) - upper_incomplete_gamma_int(m, y)) / y ** (m + 1)


def laplace_integrand(m, x, t):
    """t^m / (e^t - 1) * E_m(x t); continuous limit at t = 0.

    Collapsed form of the double integral over (t, u) of
    t^m u^m e^(-x t u) / (e^t - 1): the u-integral is E_m(x t).
    """
    if t <= 0.0:
        return 0.5 if m == 1 else 0.0
    em = trunc_exp_factor(m, x * t)
    return t ** m / math.expm1(t) * em


def laplace_tail_weight(m, big_t):
    """Bound on integral_T^inf of the laplace integrand (envelope E_m <= 1/(m+1))."""
    g = upper_incomplete_gamma_int(m, big_t)
    return g / ((m + 1) * -math.expm1(-big_t))


def gamma_zero_series(x):
    """Gamma(0, x) by the alternating series -(gamma + ln x + sum (-x)^k/(k k!)).

    Accurate only while the alternating terms stay small; callers switch to
    quadrature once cancellation would eat the 1e-11 budget (x > 5).
    """
    if x <= 0.0:
        raise ValueError("gamma_zero_series requires x > 0")
    u = 1.0
    acc = 0.0
    comp = 0.0
    k = 1
    while True:
        u *= -x / k
        term = u / k
        t = acc + term
        if abs(acc) >= abs(term):
            comp += (acc - t) + term
        else:
            comp += (term - t) + acc
        acc = t
        if abs(term) <= 1e-18 * (abs(acc) + 1e-300) and k > x:
            break
        k += 1
    return -(EULER_GAMMA + math.log(x) + acc + comp)


def _gamma_zero_asymp(x):
    # e^(-x)/x * (1 - 1/x + 2/x^2 - 6/x^3 + 24/x^4), fine for x >= 30
    inv = 1.0 / x
    poly = 1.0 + inv * (-1.0 + inv * (2.0 + inv * (-6.0 + inv * 24.0)))
    return math.exp(-x) / x * poly


def ei_defect(t):
    """gamma - t + Gamma(0, t) + ln t, computed without cancellation.

    Equals -sum_{k>=2} (-t)^k/(k k!); that series is used up to t = 30,
    beyond which Gamma(0, t) is negligible and the direct form is safe.
    """
    if t <= 0.0:
        raise ValueError("ei_defect requires t > 0")
    if t <= 30.0:
        u = -t
        acc = 0.0
        comp = 0.0
        k = 2
        while True:
            u *= -t / k
            term = u / k
            tt = acc + term
            if abs(acc) >= abs(term):
                comp += (acc - tt) + term
            else:
                comp += (term - tt) + acc
            acc = tt
            if abs(term) <= 1e-18 * (abs(acc) + 1e-300) and k > t:
                break
            k += 1
        return -(acc + comp)
    return EULER_GAMMA + math.log(t) - t + _gamma_zero_asymp(t)


def hz_route_integrand(m, x, u):
    """u^m * zeta(m+1, x*u + 1): the integrand of the moment-integral route."""
    if u <= 0.0:
        return 0.0
    return u ** m * hurwitz_zeta(m + 1.0, x * u + 1.0)


def p1_route_integrand(m, x, t):
    """p1(t) / ((t+1) (t+x+1)^(m+1)): sawtooth-weighted kernel of the 2F1 route."""
    return p1(t) / ((t + 1.0) * (t + x + 1.0) ** (m + 1))


def prop2_integrand(m, j, t):
    """(frac(t)+j)^m / (t+j+1)^(m+1): shifted fractional-part moment kernel."""
    return (t - math.floor(t) + j) ** m / (t + j + 1.0) ** (m + 1)
