"""Minimal double-double arithmetic for one hot spot.

The product-rule formula for the m-th derivative of ln(Gamma(x+1))/x
cancels catastrophically as x -> 0: the j-th term grows like
j!/|x|^(j+1) while the sum stays O(1).  Below |x| = 0.125 the terms are
therefore accumulated in ~32-digit double-double arithmetic, with the
polygamma values themselves produced by double-double Taylor series
around 1 (radius 1, geometric at |x| <= 0.125).

Only the handful of operations that path needs are implemented.
A value is an (hi, lo) tuple with |lo| <= ulp(hi)/2.
"""

from __future__ import annotations

import math

from ._ddconsts import EULER_GAMMA_DD, ZETA_DD

_SPLITTER = 134217729.0  # 2^27 + 1, Dekker splitting constant

K_MAX = len(ZETA_DD) - 1


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _two_prod(a, b):
    p = a * b
    ca = _SPLITTER * a
    ahi = ca - (ca - a)
    alo = a - ahi
    cb = _SPLITTER * b
    bhi = cb - (cb - b)
    blo = b - bhi
    err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, err


def add(x, y):
    s, e = _two_sum(x[0], y[0])
    e += x[1] + y[1]
    hi, lo = _two_sum(s, e)
    return (hi, lo)


def neg(x):
    return (-x[0], -x[1])


def mul(x, y):
    p, e = _two_prod(x[0], y[0])
    e += x[0] * y[1] + x[1] * y[0]
    hi, lo = _two_sum(p, e)
    return (hi, lo)


def mul_d(x, a):
    p, e = _two_prod(x[0], a)
    e += x[1] * a
    hi, lo = _two_sum(p, e)
    return (hi, lo)


def div(x, y):
    q1 = x[0] / y[0]
    r = add(x, neg(mul_d(y, q1)))
    q2 = (r[0] + r[1]) / y[0]
    hi, lo = _two_sum(q1, q2)
    return (hi, lo)


def from_float(a):
    return (a, 0.0)


def from_int(n):
    """Exact conversion of a (possibly > 2^53) Python int."""
    hi = float(n)
    lo = float(n - int(hi))
    return (hi, lo)


def to_float(x):
    return x[0] + x[1]


def _dd_polygamma_taylor(j, t):
    """psi^(j)(1 + t) in double-double, for j >= 0 and |t| <= 0.26.

    Derivative of ln Gamma(1+t) = -gamma*t + sum_{k>=2} (-1)^k zeta(k) t^k/k:
      psi^(j)(1+t) = sum_{k>=j+1} (-1)^k zeta(k) [(k-1)!/(k-1-j)!] t^(k-1-j)
    with the k = 1 term (-gamma) entering only for j = 0.
    """
    acc = (0.0, 0.0)
    if j == 0:
        acc = neg(EULER_GAMMA_DD)
    tpow = (1.0, 0.0)
    for k in range(j + 1, K_MAX + 1):
        coef = math.prod(range(k - j, k)) if j else 1  # (k-1)!/(k-1-j)!
        term = mul(ZETA_DD[k], tpow)
        if j:
            term = mul(term, from_int(coef))
        if k % 2:
            term = neg(term)
        acc = add(acc, term)
        if abs(term[0]) < 1e-34 * (abs(acc[0]) + 1e-300) and k > j + 4:
            break
        tpow = mul_d(tpow, t)
    return acc


def _dd_lgamma1p(t):
    """ln Gamma(1 + t) in double-double for |t| <= 0.26."""
    acc = mul_d(neg(EULER_GAMMA_DD), t)
    tpow = _two_prod(t, t)
    for k in range(2, K_MAX + 1):
        term = div(mul(ZETA_DD[k], tpow), from_float(float(k)))
        if k % 2:
            term = neg(term)
        acc = add(acc, term)
        if abs(term[0]) < 1e-34 * (abs(acc[0]) + 1e-300):
            break
        tpow = mul_d(tpow, t)
    return acc


def closed_product_rule_dd(m, x):
    """Leibniz expansion of d^m/dx^m [ln Gamma(x+1) / x] in double-double.

    Valid for 0 < |x| <= 0.26 and 1 <= m <= 12.  Returns (value, abs_err_est).
    """
    xpow = (x, 0.0)  # x^(j+1)
    total = (0.0, 0.0)
    magnitude = 0.0
    for j in range(m + 1):
        if j == m:
            psi = _dd_lgamma1p(x)
        else:
            psi = _dd_polygamma_taylor(m - j - 1, x)
        coef = math.comb(m, j) * math.factorial(j)
        term = div(mul(psi, from_int(coef)), xpow)
        if j % 2:
            term = neg(term)
        total = add(total, term)
        magnitude = max(magnitude, abs(term[0]))
        xpow = mul_d(xpow, x)
    value = to_float(total)
    # each term carries ~1e-32 relative noise; cancellation leaves its trace
    err = 2.0 * (abs(value) * 1.1e-16 + magnitude * (m + 1) * 5.0e-32)
    return value, err
