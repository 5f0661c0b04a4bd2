#!/usr/bin/env python3
"""Benchmark: compiled kernel extension vs the pure-Python fallback.

Times the hot scalar kernels and one full quadrature-backed derivative
evaluation under each backend, then prints a speedup table.

    python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import math
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from nlgamma._backend import pykernels  # noqa: E402

try:
    from nlgamma._backend import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat, inner):
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(inner)
        best = min(best, time.perf_counter() - t0)
    return best / inner


KERNEL_WORKLOADS = [
    ("ln_gamma(2.37)", lambda k: (lambda n: [k.ln_gamma(2.37) for _ in range(n)])),
    ("ln_gamma(41.0)", lambda k: (lambda n: [k.ln_gamma(41.0) for _ in range(n)])),
    ("digamma(3.1)", lambda k: (lambda n: [k.digamma(3.1) for _ in range(n)])),
    (
        "hurwitz_zeta(3.3, 1.7)",
        lambda k: (lambda n: [k.hurwitz_zeta(3.3, 1.7) for _ in range(n)]),
    ),
    (
        "hz_route_integrand(4, 2.0, u)",
        lambda k: (lambda n: [k.hz_route_integrand(4, 2.0, i / n) for i in range(1, n)]),
    ),
    (
        "laplace_integrand(3, 1.5, t)",
        lambda k: (
            lambda n: [k.laplace_integrand(3, 1.5, 0.5 + 40.0 * i / n) for i in range(n)]
        ),
    ),
    (
        "trunc_exp_factor(5, 7.0)",
        lambda k: (lambda n: [k.trunc_exp_factor(5, 7.0) for _ in range(n)]),
    ),
    ("ei_defect(3.0)", lambda k: (lambda n: [k.ei_defect(3.0) for _ in range(n)])),
]


def bench_kernels(repeat, inner):
    rows = []
    for label, make in KERNEL_WORKLOADS:
        t_py = best_of(make(pykernels), repeat, inner)
        if _ckernels is not None:
            t_cy = best_of(make(_ckernels), repeat, inner)
            rows.append((label, t_py * 1e6, t_cy * 1e6, t_py / t_cy))
        else:
            rows.append((label, t_py * 1e6, None, None))
    return rows


def bench_route(repeat):
    """Full HURWITZ-route derivative evaluation under each backend.

    The route module holds a reference to the kernel module; swapping it
    re-points the quadrature integrand at the other implementation.
    """
    import importlib

    dmod = importlib.import_module("nlgamma.delta")

    timings = {}
    saved = dmod.kernels
    try:
        for forced, mod in (("python", pykernels), ("cython", _ckernels)):
            if mod is None:
                continue
            dmod.kernels = mod
            best = math.inf
            for _ in range(repeat):
                t0 = time.perf_counter()
                dmod.delta_deriv(4, 2.5, dmod.Route.HURWITZ)
                best = min(best, time.perf_counter() - t0)
            timings[forced] = best
    finally:
        dmod.kernels = saved
    return timings


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--inner", type=int, default=20000)
    args = parser.parse_args()

    if _ckernels is None:
        print("compiled extension not built: timing the pure backend only")
        print("(build it with: pip install cython && python setup.py build_ext --inplace)")
    print(f"{'kernel':36s} {'python us':>10s} {'cython us':>10s} {'speedup':>8s}")
    for label, t_py, t_cy, speed in bench_kernels(args.repeat, args.inner):
        if t_cy is None:
            print(f"{label:36s} {t_py:10.3f} {'-':>10s} {'-':>8s}")
        else:
            print(f"{label:36s} {t_py:10.3f} {t_cy:10.3f} {speed:7.1f}x")

    timings = bench_route(args.repeat)
    if "python" in timings:
        line = f"{'delta_deriv(4, 2.5, HURWITZ)':36s} {timings['python'] * 1e6:10.1f}"
        if "cython" in timings:
            line += (
                f" {timings['cython'] * 1e6:10.1f}"
                f" {timings['python'] / timings['cython']:7.1f}x"
            )
        print(line)


if __name__ == "__main__":
    main()
