"""Quadrature engines.

Adaptive Gauss-Legendre panels (order 15, with an order-7 embedding for
the error estimate) for finite intervals, a unit-interval splitter for
semi-infinite integrands whose only breakpoints sit on the integer
lattice, a sawtooth-weighted integrator with paired intervals, and the
periodization transform relating integrals of f({x/b})/(x+c)^lambda to
finite Hurwitz-zeta moments.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

from ._backend import hurwitz_zeta, p1

__all__ = [
    "PowerTail",
    "QuadConfig",
    "QuadResult",
    "integrate_finite",
    "integrate_unit_split",
    "lemma2_transform",
    "p1_integral",
]

# Gauss-Legendre nodes/weights on [-1, 1] (generated with
# numpy.polynomial.legendre.leggauss and frozen: no runtime dependency).
_GL15 = (
    (-0.9879925180204854, 0.030753241996118647),
    (-0.937273392400706, 0.07036604748810807),
    (-0.8482065834104272, 0.10715922046717177),
    (-0.7244177313601701, 0.1395706779261539),
    (-0.5709721726085388, 0.16626920581699378),
    (-0.3941513470775634, 0.18616100001556188),
    (-0.20119409399743451, 0.19843148532711125),
    (0.0, 0.2025782419255609),
    (0.20119409399743451, 0.19843148532711125),
    (0.3941513470775634, 0.18616100001556188),
    (0.5709721726085388, 0.16626920581699378),
    (0.7244177313601701, 0.1395706779261539),
    (0.8482065834104272, 0.10715922046717177),
    (0.937273392400706, 0.07036604748810807),
    (0.9879925180204854, 0.030753241996118647),
)

_GL7 = (
    (-0.9491079123427585, 0.12948496616887065),
    (-0.7415311855993945, 0.2797053914892766),
    (-0.4058451513773972, 0.3818300505051183),
    (0.0, 0.41795918367346896),
    (0.4058451513773972, 0.3818300505051183),
    (0.7415311855993945, 0.2797053914892766),
    (0.9491079123427585, 0.12948496616887065),
)


@dataclass(frozen=True)
class QuadConfig:
    """Tolerances and budgets for the quadrature engines."""

    rel_tol: float = 1e-11
    abs_tol: float = 1e-13
    max_subdivisions: int = 2000
    tail_intervals_max: int = 10**6
    tail_stop: float = 1e-14

    def __post_init__(self):
        if self.rel_tol <= 0.0 or self.abs_tol < 0.0:
            raise ValueError("tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")


DEFAULT_CONFIG = QuadConfig()


@dataclass
class QuadResult:
    """A quadrature value with an honest absolute-error estimate."""

    value: float
    abs_err_est: float
    n_evals: int
    converged: bool

    def __add__(self, other):
        return QuadResult(
            self.value + other.value,
            self.abs_err_est + other.abs_err_est,
            self.n_evals + other.n_evals,
            self.converged and other.converged,
        )

    def scaled(self, c):
        return QuadResult(
            c * self.value, abs(c) * self.abs_err_est, self.n_evals, self.converged
        )


def _panel(f, a, b):
    """15-point Gauss value with an |GL15 - GL7| error estimate (22 evals)."""
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    s15 = 0.0
    for xi, wi in _GL15:
        s15 += wi * f(mid + half * xi)
    s7 = 0.0
    for xi, wi in _GL7:
        s7 += wi * f(mid + half * xi)
    return half * s15, abs(half * (s15 - s7))


def integrate_finite(f, a, b, cfg=DEFAULT_CONFIG):
    """Adaptive integral of f over [a, b].

    Globally adaptive bisection: the panel with the worst error estimate
    is split until the summed estimate meets max(abs_tol, rel_tol*|I|) or
    the subdivision budget runs out (flagged via converged=False, never
    silently).  The estimate |GL15 - GL7| tracks the error of the cruder
    rule, so it errs on the safe side for smooth integrands.
    """
    if a == b:
        return QuadResult(0.0, 0.0, 0, True)
    if a > b:
        raise ValueError("integrate_finite requires a < b")
    value, err = _panel(f, a, b)
    n_evals = 22
    heap = [(-err, a, b, value)]
    frozen = []  # panels at the double-precision width floor: kept, not split
    frozen_err = 0.0
    n_splits = 0
    converged = True
    width_floor = 1e-15 * (b - a)
    while True:
        total = math.fsum(item[3] for item in heap) + math.fsum(
            item[3] for item in frozen
        )
        total_err = math.fsum(-item[0] for item in heap) + frozen_err
        if total_err <= max(cfg.abs_tol, cfg.rel_tol * abs(total)):
            break
        if n_splits >= cfg.max_subdivisions or not heap:
            converged = False
            break
        neg_err, pa, pb, pv = heapq.heappop(heap)
        if pb - pa <= width_floor:
            frozen.append((neg_err, pa, pb, pv))
            frozen_err += -neg_err
            continue
        mid = 0.5 * (pa + pb)
        v1, e1 = _panel(f, pa, mid)
        v2, e2 = _panel(f, mid, pb)
        n_evals += 44
        heapq.heappush(heap, (-e1, pa, mid, v1))
        heapq.heappush(heap, (-e2, mid, pb, v2))
        n_splits += 1
    panels = sorted(heap + frozen, key=lambda item: item[1])
    value = math.fsum(p[3] for p in panels)
    err = math.fsum(-p[0] for p in panels) + 2e-16 * math.fsum(abs(p[3]) for p in panels)
    converged = converged and err <= max(
        cfg.abs_tol, cfg.rel_tol * abs(value), 4e-16 * abs(value)
    )
    return QuadResult(value, err, n_evals, converged)


@dataclass(frozen=True)
class PowerTail:
    """Analytic model for integral_X^inf phi(x) (x+shift)^(-power) dx.

    phi is 1-periodic with |phi| <= envelope.  With only the envelope
    known, the tail is charged envelope*(X+shift)^(1-power)/(power-1) as
    an error bound.  When the periodic profile of phi is known, two exact
    correction terms are added back to the value instead:

        mean * (X+shift)^(1-power)/(power-1)        (mean mass)
      + corr2 * (X+shift)^(-power)                  (first moment of the
                                                     running integral)

    leaving, after integrating by parts twice, a remainder bounded by
    osc2 * power * (X+shift)^(-power-1).  X must be an integer.
    """

    power: float
    shift: float = 0.0
    envelope: float = 1.0
    mean: float | None = None
    corr2: float = 0.0
    osc2: float = 0.0

    def __post_init__(self):
        if self.power <= 1.0:
            raise ValueError("tail power must exceed 1 for convergence")

    @classmethod
    def from_envelope(cls, envelope, power, shift=0.0):
        return cls(power=power, shift=shift, envelope=envelope)

    @classmethod
    def from_periodic(cls, phi, power, shift=0.0):
        """Build the corrected model from the periodic factor phi on [0, 1]."""
        mean, corr2, osc2, fmax = _periodic_profile(phi)
        return cls(
            power=power,
            shift=shift,
            envelope=fmax,
            mean=mean,
            corr2=corr2,
            osc2=osc2,
        )

    def value(self, x):
        if self.mean is None:
            return 0.0
        g = (x + self.shift) ** (-self.power)
        return self.mean * (x + self.shift) * g / (self.power - 1.0) + self.corr2 * g

    def bound(self, x):
        if self.mean is None:
            return (
                self.envelope
                * (x + self.shift) ** (1.0 - self.power)
                / (self.power - 1.0)
            )
        return self.osc2 * self.power * (x + self.shift) ** (-self.power - 1.0)


def _periodic_profile(phi):
    """Mean, second-order tail coefficient and remainder bound for phi.

    With Q(y) = integral_0^y (phi - mean), the tail correction coefficient
    is qbar = integral_0^1 Q = integral_0^1 phi(u)(1-u) du - mean/2, and the
    remainder after both corrections is bounded by sup |integral (Q - qbar)|
    times the integrated derivative of the algebraic factor.
    """
    quad_cfg = QuadConfig(rel_tol=1e-13, abs_tol=1e-16, max_subdivisions=400)
    mean = integrate_finite(phi, 0.0, 1.0, quad_cfg).value
    qbar = (
        integrate_finite(lambda u: phi(u) * (1.0 - u), 0.0, 1.0, quad_cfg).value
        - 0.5 * mean
    )
    # coarse grids are fine: osc2 only scales a safety bound
    n = 1024
    h = 1.0 / n
    fmax = 0.0
    q = 0.0
    r = 0.0
    rmax = 0.0
    prev_phi = phi(0.0) - mean
    prev_q = 0.0
    for i in range(1, n + 1):
        y = i * h
        cur_phi = phi(min(y, 1.0 - 1e-12)) - mean
        q += 0.5 * h * (prev_phi + cur_phi)
        r += 0.5 * h * ((prev_q - qbar) + (q - qbar))
        rmax = max(rmax, abs(r))
        fmax = max(fmax, abs(cur_phi + mean))
        prev_phi, prev_q = cur_phi, q
    return mean, qbar, 1.5 * rmax + 1e-17, 1.05 * fmax


def integrate_unit_split(f, start, cfg=DEFAULT_CONFIG, tail=None):
    """Integral of f over [start, inf) split at the integer lattice.

    f must be piecewise smooth with breakpoints only at integers; each
    unit interval is integrated adaptively.  Accumulation stops once the
    tail model's bound is inside half the error allowance (the other
    half covers the summed interval estimates); with no model, the stop
    also requires the last contribution to fall below tail_stop and the
    tail is charged with a geometric-ratio extrapolation instead.
    """
    # per-interval budgets must sum below the overall allowance
    local = QuadConfig(
        rel_tol=cfg.rel_tol,
        abs_tol=cfg.abs_tol / 64.0,
        max_subdivisions=cfg.max_subdivisions,
    )
    value = 0.0
    err = 0.0
    n_evals = 0
    converged = True
    x = float(start)
    first_stop = math.floor(start) + 1.0
    if first_stop > start and first_stop < start + 1.0:
        r = integrate_finite(f, start, first_stop, local)
        value += r.value
        err += r.abs_err_est
        n_evals += r.n_evals
        converged = converged and r.converged
        x = first_stop
    prev = math.inf
    intervals = 0
    while True:
        if intervals >= cfg.tail_intervals_max:
            converged = False
            break
        r = integrate_finite(f, x, x + 1.0, local)
        value += r.value
        err += r.abs_err_est
        n_evals += r.n_evals
        converged = converged and r.converged
        x += 1.0
        intervals += 1
        contrib = abs(r.value)
        tol = 0.5 * max(cfg.abs_tol, cfg.rel_tol * abs(value))
        if tail is not None:
            if tail.bound(x) <= tol and (
                contrib < cfg.tail_stop or tail.mean is not None
            ):
                value += tail.value(x)
                err += tail.bound(x)
                break
        else:
            if contrib < cfg.tail_stop and prev < math.inf:
                ratio = contrib / prev if prev > 0.0 else 0.0
                est = contrib * ratio / (1.0 - ratio) if ratio < 1.0 else math.inf
                if est <= tol:
                    err += est
                    break
        prev = contrib
    converged = converged and err <= max(cfg.abs_tol, cfg.rel_tol * abs(value))
    return QuadResult(value, err, n_evals, converged)


def p1_integral(g, gprime_mag, start, cfg=DEFAULT_CONFIG):
    """integral_start^inf p1(t) g(t) dt for smooth positive decreasing g.

    Consecutive unit intervals are paired (the sawtooth has zero mean, so
    pairs cancel to one order better) and each interval is split at its
    half-integer sign change.  Once truncated at an integer X the exact
    correction -g(X)/12 is applied; integrating the remainder by parts
    twice bounds it by 0.01*|g'(X)|, supplied via gprime_mag.
    """
    if start != math.floor(start):
        raise ValueError("p1_integral expects an integer start")
    x = float(start)
    value = 0.0
    err = 0.0
    n_evals = 0
    converged = True
    pair = 0.0
    intervals = 0
    local = QuadConfig(
        rel_tol=1e-12,
        abs_tol=max(abs(g(x)) * 1e-15, 5e-300),
        max_subdivisions=60,
    )
    while True:
        if intervals >= cfg.tail_intervals_max:
            converged = False
            break
        half = x + 0.5
        r1 = integrate_finite(lambda t: p1(t) * g(t), x, half, local)
        r2 = integrate_finite(lambda t: p1(t) * g(t), half, x + 1.0, local)
        value += r1.value + r2.value
        err += r1.abs_err_est + r2.abs_err_est
        n_evals += r1.n_evals + r2.n_evals
        converged = converged and r1.converged and r2.converged
        pair += r1.value + r2.value
        x += 1.0
        intervals += 1
        if intervals % 2 == 0:
            bound = 0.01 * abs(gprime_mag(x))
            if (
                abs(pair) < cfg.tail_stop
                and bound <= 0.5 * max(cfg.abs_tol, cfg.rel_tol * abs(value))
            ) or bound < 1e-300:
                value -= g(x) / 12.0
                err += bound
                break
            pair = 0.0
    converged = converged and err <= max(cfg.abs_tol, cfg.rel_tol * abs(value))
    return QuadResult(value, err, n_evals, converged)


def lemma2_transform(f, b, c, lam, cfg=DEFAULT_CONFIG):
    """Both sides of the periodization identity

        integral_0^inf f({x/b}) (x+c)^(-lambda) dx
            = b^(1-lambda) * integral_0^1 f(y) zeta(lambda, y + c/b) dy

    for b > 0, lambda > 1, c >= 0.  Returns (lhs, rhs) as QuadResults so
    the caller can assert their agreement.
    """
    if b <= 0.0:
        raise ValueError("lemma2_transform requires b > 0")
    if lam <= 1.0:
        raise ValueError("lemma2_transform requires lambda > 1")
    if c < 0.0:
        raise ValueError("lemma2_transform requires c >= 0")
    scale = b ** (1.0 - lam)
    tail = PowerTail.from_periodic(lambda y: scale * f(y), lam, shift=c / b)
    # substitute x = b*v so breakpoints land on integers
    lhs = integrate_unit_split(
        lambda v: scale * f(v - math.floor(v)) * (v + c / b) ** (-lam),
        0.0,
        cfg,
        tail=tail,
    )
    rhs = integrate_finite(
        lambda y: f(y) * hurwitz_zeta(lam, y + c / b), 0.0, 1.0, cfg
    ).scaled(scale)
    return lhs, rhs
