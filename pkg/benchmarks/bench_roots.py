"""Compare the compiled and pure-Python root-refinement kernels.

Runs both kernels on identical starting points for a family of random monic
polynomials and reports per-call time, sweep counts, and agreement between
the two root sets.  Usage:

    python3 benchmarks/bench_roots.py [--degrees 8,16,32,64] [--repeats 20]
"""

from __future__ import annotations

import argparse
import math
import random
import statistics
import time

import numpy as np

from signspectra import random_monic_polynomial
from signspectra._aberth import aberth_iterate as pure_kernel

try:
    from signspectra._aberth_fast import aberth_iterate as fast_kernel
except ImportError:
    fast_kernel = None

STEP_TOL_FACTOR = 1e-13
RTOL = 1e-9
MAXITER = 500


def initial_points(coeffs):
    deg = len(coeffs) - 1
    radius = 1.0 + max(abs(c) for c in coeffs[:-1])
    return radius, [
        radius * complex(math.cos(a), math.sin(a))
        for a in (2.0 * math.pi * k / deg + math.pi / (2.0 * deg) for k in range(deg))
    ]


def time_pure(coeffs, init, step_tol, repeats):
    times = []
    result = None
    for _ in range(repeats):
        z = list(init)
        t0 = time.perf_counter()
        result = pure_kernel(coeffs, z, MAXITER, step_tol, RTOL)
        times.append(time.perf_counter() - t0)
    return min(times), result, z


def time_fast(coeffs, init, step_tol, repeats):
    c = np.array(coeffs, dtype=float)
    times = []
    result = None
    for _ in range(repeats):
        z = np.array(init, dtype=complex)
        t0 = time.perf_counter()
        result = fast_kernel(c, z, MAXITER, step_tol, RTOL)
        times.append(time.perf_counter() - t0)
    return min(times), result, [complex(x) for x in z]


def agreement(a, b):
    key = lambda z: (round(z.real, 6), round(z.imag, 6))
    return max(abs(x - y) for x, y in zip(sorted(a, key=key), sorted(b, key=key)))


def fmt_ms(seconds):
    return f"{seconds * 1e3:8.3f}"


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--degrees", default="8,16,32,64")
    parser.add_argument("--repeats", type=int, default=20)
    parser.add_argument("--seed", type=int, default=2024)
    args = parser.parse_args()
    degrees = [int(d) for d in args.degrees.split(",")]

    print(f"kernels: pure python vs {'compiled' if fast_kernel else 'compiled (UNAVAILABLE)'}")
    print(f"{'degree':>6} {'sweeps':>6} {'pure ms':>9} {'fast ms':>9} {'speedup':>8} {'agree':>10}")
    speedups = []
    for deg in degrees:
        rng = random.Random(args.seed + deg)
        coeffs = [float(c) for c in random_monic_polynomial(deg, rng).coeffs]
        radius, init = initial_points(coeffs)
        step_tol = STEP_TOL_FACTOR * radius
        t_pure, (sweeps, converged, _), roots_pure = time_pure(
            coeffs, init, step_tol, args.repeats
        )
        if not converged:
            raise SystemExit(f"degree {deg}: pure kernel did not converge")
        if fast_kernel is None:
            print(f"{deg:>6} {sweeps:>6} {fmt_ms(t_pure)} {'-':>9} {'-':>8} {'-':>10}")
            continue
        t_fast, (sweeps_f, converged_f, _), roots_fast = time_fast(
            coeffs, init, step_tol, args.repeats
        )
        if not converged_f:
            raise SystemExit(f"degree {deg}: compiled kernel did not converge")
        gap = agreement(roots_pure, roots_fast)
        ratio = t_pure / t_fast
        speedups.append(ratio)
        print(
            f"{deg:>6} {sweeps:>6} {fmt_ms(t_pure)} {fmt_ms(t_fast)} "
            f"{ratio:>7.1f}x {gap:>10.2e}"
        )
        if sweeps != sweeps_f:
            print(f"       note: sweep counts differ (pure {sweeps}, compiled {sweeps_f})")
    if speedups:
        print(f"geometric mean speedup: {statistics.geometric_mean(speedups):.1f}x")


if __name__ == "__main__":
    main()
