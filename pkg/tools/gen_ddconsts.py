#!/usr/bin/env python3
"""Regenerate src/nlgamma/_ddconsts.py.

Emits zeta(2..64) and Euler's constant as double-double (hi, lo) pairs,
computed at 50 significant digits with mpmath.  Run from the repo root:

    python tools/gen_ddconsts.py > src/nlgamma/_ddconsts.py
"""

import mpmath as mp

mp.mp.dps = 50


def split(v):
    hi = float(v)
    lo = float(v - mp.mpf(hi))
    return hi, lo


def main():
    print('"""Double-double constants (generated by tools/gen_ddconsts.py).')
    print()
    print('Each entry is an (hi, lo) pair with hi + lo accurate to ~1e-32.')
    print('"""')
    print()
    g_hi, g_lo = split(mp.euler)
    print(f"EULER_GAMMA_DD = ({g_hi!r}, {g_lo!r})")
    print()
    print("# ZETA_DD[k] = zeta(k) for k = 2..64; indices 0, 1 are placeholders.")
    print("ZETA_DD = (")
    print("    (0.0, 0.0),")
    print("    (0.0, 0.0),")
    for k in range(2, 65):
        hi, lo = split(mp.zeta(k))
        print(f"    ({hi!r}, {lo!r}),")
    print(")")


if __name__ == "__main__":
    main()
