# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scalar kernels: the Cython twin of pykernels.py.

Same functions, same algorithms, same constants; keep the two in sync
(the backend parity test compares them value by value).
"""

from libc.math cimport ceil, exp, expm1, floor, log, pow

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

cdef double _EULER_GAMMA = 0.5772156649015328606
cdef double _LN_SQRT_TWO_PI = 0.9189385332046727418

# B_{2i} for 2i = 2..30 rendered to doubles (exact rational -> double).
cdef double[15] _B2I = [
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0, 43867.0 / 798.0,
    -174611.0 / 330.0, 854513.0 / 138.0, -236364091.0 / 2730.0,
    8553103.0 / 6.0, -23749461029.0 / 870.0, 8615841276005.0 / 14322.0,
]

cdef double[15] _B2I_OVER_FACT
cdef double[15] _B2I_STIRLING
cdef double[15] _B2I_DIGAMMA
cdef double[171] _FACT

cdef void _init_tables():
    cdef int i
    cdef double fact = 1.0
    cdef double f2i
    for i in range(15):
        f2i = 1.0
        for j in range(1, 2 * i + 3):
            f2i *= j
        _B2I_OVER_FACT[i] = _B2I[i] / f2i
        _B2I_STIRLING[i] = _B2I[i] / ((2 * i + 2) * (2 * i + 1))
        _B2I_DIGAMMA[i] = _B2I[i] / (2 * i + 2)
    _FACT[0] = 1.0
    for i in range(1, 171):
        fact = _FACT[i - 1] * i
        _FACT[i] = fact

_init_tables()

DEF ZETA_TABLE_MAX = 64
cdef double[ZETA_TABLE_MAX + 1] _ZETA
cdef bint _ZETA_READY = False


def frac(double x):
    """Fractional part x - floor(x), in [0, 1)."""
    return x - floor(x)


def p1(double x):
    """Sawtooth frac(x) - 1/2, the first periodized Bernoulli polynomial."""
    return x - floor(x) - 0.5


cdef double _hurwitz_zeta(double s, double a) except? -1e308:
    cdef int n = <int>ceil(10.0 + s)
    if n < 10:
        n = 10
    cdef double acc = 0.0, comp = 0.0, term, t
    cdef int k
    for k in range(n):
        term = pow(a + k, -s)
        t = acc + term
        if (acc if acc >= 0 else -acc) >= (term if term >= 0 else -term):
            comp += (acc - t) + term
        else:
            comp += (term - t) + acc
        acc = t
    cdef double z = a + n
    cdef double total = acc + comp + pow(z, 1.0 - s) / (s - 1.0) + 0.5 * pow(z, -s)
    cdef double zpow = pow(z, -s - 1.0)
    cdef double poch = s
    cdef double z2 = z * z
    cdef int i
    for i in range(15):
        term = _B2I_OVER_FACT[i] * poch * zpow
        total += term
        if (term if term >= 0 else -term) <= 1e-17 * (total if total >= 0 else -total):
            break
        poch *= (s + 2 * i + 1) * (s + 2 * i + 2)
        zpow /= z2
    return total


def hurwitz_zeta(double s, double a):
    """Hurwitz zeta(s, a) for s > 1, a > 0 by Euler-Maclaurin summation."""
    if s <= 1.0:
        raise ValueError("hurwitz_zeta requires s > 1")
    if a <= 0.0:
        raise ValueError("hurwitz_zeta requires a > 0")
    return _hurwitz_zeta(s, a)


cdef void _fill_zeta():
    # idempotent (same values every time), so a racing first call from
    # two threads is benign; the ready flag is set only after the fill
    global _ZETA_READY
    cdef int k
    for k in range(2, ZETA_TABLE_MAX + 1):
        _ZETA[k] = _hurwitz_zeta(<double>k, 1.0)
    _ZETA_READY = True


def zeta_int(int k):
    """zeta(k) for integer 2 <= k <= 64, from a table filled on first use."""
    if not _ZETA_READY:
        _fill_zeta()
    return _ZETA[k]


cdef double _lgam_taylor_at_1(double t):
    if not _ZETA_READY:
        _fill_zeta()
    cdef double acc = 0.0, tk = t, term
    cdef double sign = 1.0
    cdef int k
    for k in range(2, ZETA_TABLE_MAX + 1):
        tk *= t
        term = sign * _ZETA[k] * tk / k
        acc += term
        if (term if term >= 0 else -term) <= 1e-18 * ((acc if acc >= 0 else -acc) + 1e-300):
            break
        sign = -sign
    return -_EULER_GAMMA * t + acc


cdef double _lgam_taylor_at_2(double t):
    if not _ZETA_READY:
        _fill_zeta()
    cdef double acc = 0.0, tk = t, term
    cdef double sign = 1.0
    cdef int k
    for k in range(2, ZETA_TABLE_MAX + 1):
        tk *= t
        term = sign * (_ZETA[k] - 1.0) * tk / k
        acc += term
        if (term if term >= 0 else -term) <= 1e-18 * ((acc if acc >= 0 else -acc) + 1e-300):
            break
        sign = -sign
    return (1.0 - _EULER_GAMMA) * t + acc


cdef double _stirling_lgam(double z):
    cdef double acc = 0.0
    cdef double zpow = z
    cdef double z2 = z * z
    cdef int i
    for i in range(10):
        acc += _B2I_STIRLING[i] / zpow
        zpow *= z2
    return (z - 0.5) * log(z) - z + _LN_SQRT_TWO_PI + acc


cdef double _ln_gamma(double x) except? -1e308:
    cdef double shift = 0.0
    cdef double z = x
    if 0.5 <= x <= 1.5:
        return _lgam_taylor_at_1(x - 1.0)
    if 1.5 < x <= 2.5:
        return _lgam_taylor_at_2(x - 2.0)
    if x < 0.5:
        return _lgam_taylor_at_1(x) - log(x)
    while z < 8.0:
        shift += log(z)
        z += 1.0
    return _stirling_lgam(z) - shift


def ln_gamma(double x):
    """ln Gamma(x) for x > 0: Stirling with shifting, Taylor near 1 and 2."""
    if x <= 0.0:
        raise ValueError("ln_gamma requires x > 0")
    return _ln_gamma(x)


cdef double _digamma(double x):
    cdef double acc = 0.0
    cdef double z = x
    while z < 10.0:
        acc -= 1.0 / z
        z += 1.0
    cdef double inv2 = 1.0 / (z * z)
    cdef double zpow = inv2
    cdef double tail = 0.0
    cdef int i
    for i in range(7):
        tail += _B2I_DIGAMMA[i] * zpow
        zpow *= inv2
    return acc + log(z) - 0.5 / z - tail


def digamma(double x):
    """psi(x) for x > 0."""
    if x <= 0.0:
        raise ValueError("digamma requires x > 0")
    return _digamma(x)


cdef double _upper_gamma_int(int n, double x):
    cdef double term = 1.0, acc = 1.0, comp = 0.0, t
    cdef int m
    for m in range(1, n + 1):
        term *= x / m
        t = acc + term
        if (acc if acc >= 0 else -acc) >= (term if term >= 0 else -term):
            comp += (acc - t) + term
        else:
            comp += (term - t) + acc
        acc = t
    return _FACT[n] * exp(-x) * (acc + comp)


def upper_incomplete_gamma_int(int n, double x):
    """Gamma(n+1, x) by the ascending finite sum with compensation."""
    if n < 0:
        raise ValueError("upper_incomplete_gamma_int requires n >= 0")
    if x < 0.0:
        raise ValueError("upper_incomplete_gamma_int requires x >= 0")
    if n > 170:
        raise ValueError("upper_incomplete_gamma_int: n too large for double range")
    return _upper_gamma_int(n, x)


cdef double _trunc_exp_factor(int m, double y):
    cdef double term, acc
    cdef int i
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
        return exp(-y) * acc
    return (_FACT[m] - _upper_gamma_int(m, y)) / pow(y, m + 1)


def trunc_exp_factor(int m, double y):
    """E_m(y) = integral_0^1 u^m e^(-y u) du, evaluated without cancellation."""
    if y < 0.0:
        raise ValueError("trunc_exp_factor requires y >= 0")
    return _trunc_exp_factor(m, y)


def laplace_integrand(int m, double x, double t):
    """t^m / (e^t - 1) * E_m(x t); continuous limit at t = 0.

    Collapsed form of the double integral over (t, u) of
    t^m u^m e^(-x t u) / (e^t - 1): the u-integral is E_m(x t).
    """
    if t <= 0.0:
        return 0.5 if m == 1 else 0.0
    return pow(t, m) / expm1(t) * _trunc_exp_factor(m, x * t)


def laplace_tail_weight(int m, double big_t):
    """Bound on integral_T^inf of the laplace integrand (envelope E_m <= 1/(m+1))."""
    return _upper_gamma_int(m, big_t) / ((m + 1) * -expm1(-big_t))


def gamma_zero_series(double x):
    """Gamma(0, x) by the alternating series; callers switch to quadrature
    before cancellation threatens the 1e-11 budget (x > 5)."""
    if x <= 0.0:
        raise ValueError("gamma_zero_series requires x > 0")
    cdef double u = 1.0, acc = 0.0, comp = 0.0, term, t
    cdef int k = 1
    while True:
        u *= -x / k
        term = u / k
        t = acc + term
        if (acc if acc >= 0 else -acc) >= (term if term >= 0 else -term):
            comp += (acc - t) + term
        else:
            comp += (term - t) + acc
        acc = t
        if (term if term >= 0 else -term) <= 1e-18 * ((acc if acc >= 0 else -acc) + 1e-300) and k > x:
            break
        k += 1
    return -(_EULER_GAMMA + log(x) + acc + comp)


cdef double _gamma_zero_asymp(double x):
    cdef double inv = 1.0 / x
    cdef double poly = 1.0 + inv * (-1.0 + inv * (2.0 + inv * (-6.0 + inv * 24.0)))
    return exp(-x) / x * poly


def ei_defect(double t):
    """gamma - t + Gamma(0, t) + ln t via -sum_{k>=2} (-t)^k/(k k!) for
    t <= 30, direct with the asymptotic Gamma(0, t) beyond."""
    if t <= 0.0:
        raise ValueError("ei_defect requires t > 0")
    cdef double u, acc, comp, term, tt
    cdef int k
    if t <= 30.0:
        u = -t
        acc = 0.0
        comp = 0.0
        k = 2
        while True:
            u *= -t / k
            term = u / k
            tt = acc + term
            if (acc if acc >= 0 else -acc) >= (term if term >= 0 else -term):
                comp += (acc - tt) + term
            else:
                comp += (term - tt) + acc
            acc = tt
            if (term if term >= 0 else -term) <= 1e-18 * ((acc if acc >= 0 else -acc) + 1e-300) and k > t:
                break
            k += 1
        return -(acc + comp)
    return _EULER_GAMMA + log(t) - t + _gamma_zero_asymp(t)


def hz_route_integrand(int m, double x, double u):
    """u^m * zeta(m+1, x*u + 1): the integrand of the moment-integral route."""
    if u <= 0.0:
        return 0.0
    return pow(u, m) * _hurwitz_zeta(m + 1.0, x * u + 1.0)


def p1_route_integrand(int m, double x, double t):
    """p1(t) / ((t+1) (t+x+1)^(m+1)): sawtooth-weighted kernel of the 2F1 route."""
    return (t - floor(t) - 0.5) / ((t + 1.0) * pow(t + x + 1.0, m + 1))


def prop2_integrand(int m, int j, double t):
    """(frac(t)+j)^m / (t+j+1)^(m+1): shifted fractional-part moment kernel."""
    return pow(t - floor(t) + j, m) / pow(t + j + 1.0, m + 1)
