# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled simultaneous root-refinement sweep.

Mirror of _aberth.py; any change there must be made here as well.
"""

from libc.math cimport fabs


def aberth_iterate(double[::1] coeffs, double complex[::1] z,
                   int maxiter, double step_tol, double rtol):
    """Run correction sweeps on z in place; see the pure-Python twin for the contract.

    Returns (sweeps_done, converged, max_backward_error_of_last_sweep).
    """
    cdef int n = z.shape[0]
    cdef int deg = coeffs.shape[0] - 1
    cdef int sweep, i, j, k
    cdef double max_step, max_rel, ap, astep, azi, emag, rel
    cdef double complex zi, p, dp, newton, s, dz, denom, step

    max_rel = 0.0
    for sweep in range(1, maxiter + 1):
        max_step = 0.0
        max_rel = 0.0
        for i in range(n):
            zi = z[i]
            azi = abs(zi)
            p = coeffs[deg]
            dp = 0
            emag = fabs(coeffs[deg])
            for k in range(deg - 1, -1, -1):
                dp = dp * zi + p
                p = p * zi + coeffs[k]
                emag = emag * azi + fabs(coeffs[k])
            ap = abs(p)
            rel = 0.0 if emag == 0.0 else ap / emag
            if rel > max_rel:
                max_rel = rel
            if ap == 0.0:
                continue
            if dp == 0:
                # stationary point; nudge off it and keep sweeping
                z[i] = zi + (1e-6 + 1e-6j) * (1.0 + azi)
                if max_step < 1.0:
                    max_step = 1.0
                continue
            newton = p / dp
            s = 0
            for j in range(n):
                if j == i:
                    continue
                dz = zi - z[j]
                if dz == 0:
                    break
                s = s + 1.0 / dz
            else:
                denom = 1.0 - newton * s
                if denom == 0:
                    step = newton
                else:
                    step = newton / denom
                z[i] = zi - step
                astep = abs(step)
                if astep > max_step:
                    max_step = astep
                continue
            # a collision broke out of the j loop
            z[i] = zi + (1e-6 + 1e-6j) * (1.0 + azi)
            if max_step < 1.0:
                max_step = 1.0
        if max_step <= step_tol or max_rel <= rtol:
            return sweep, True, max_rel
    return maxiter, False, max_rel
