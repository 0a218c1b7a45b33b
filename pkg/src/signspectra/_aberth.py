"""Pure-Python simultaneous root-refinement sweep.

Mirror of _aberth_fast.pyx; any change here must be made there as well.  The
kernel refines all approximations together, Gauss-Seidel style: each updated
point is visible to the corrections computed after it within the same sweep.

Residual quality is measured per point as the backward error
|p(z)| / sum_k |c_k| |z|^k: the smallest relative coefficient perturbation
that would make z an exact root.  Dividing by anything coarser (say a fixed
norm of the coefficient vector) makes high-degree instances unsatisfiable in
double precision, because evaluating p near a root of magnitude r leaves
rounding noise on the order of eps * sum |c_k| r^k no matter how accurate the
root is.
"""

from __future__ import annotations


def aberth_iterate(coeffs, z, maxiter, step_tol, rtol):
    """Run correction sweeps on the mutable list z until convergence.

    coeffs holds ascending real coefficients with nonzero leading entry; z
    holds complex starting points, one per root, updated in place.  A sweep
    converges when the largest correction is at most step_tol or the largest
    backward error seen during the sweep is at most rtol.

    Returns (sweeps_done, converged, max_backward_error_of_last_sweep).
    """
    n = len(z)
    deg = len(coeffs) - 1
    acoeffs = [abs(c) for c in coeffs]
    max_rel = 0.0
    for sweep in range(1, maxiter + 1):
        max_step = 0.0
        max_rel = 0.0
        for i in range(n):
            zi = z[i]
            azi = abs(zi)
            p = complex(coeffs[deg])
            dp = 0j
            emag = acoeffs[deg]
            for k in range(deg - 1, -1, -1):
                dp = dp * zi + p
                p = p * zi + coeffs[k]
                emag = emag * azi + acoeffs[k]
            ap = abs(p)
            rel = 0.0 if emag == 0.0 else ap / emag
            if rel > max_rel:
                max_rel = rel
            if ap == 0.0:
                continue
            if dp == 0j:
                # stationary point; nudge off it and keep sweeping
                z[i] = zi + (1e-6 + 1e-6j) * (1.0 + azi)
                max_step = max(max_step, 1.0)
                continue
            newton = p / dp
            s = 0j
            collided = False
            for j in range(n):
                if j == i:
                    continue
                dz = zi - z[j]
                if dz == 0j:
                    collided = True
                    break
                s += 1.0 / dz
            if collided:
                z[i] = zi + (1e-6 + 1e-6j) * (1.0 + azi)
                max_step = max(max_step, 1.0)
                continue
            denom = 1.0 - newton * s
            step = newton if denom == 0j else newton / denom
            z[i] = zi - step
            astep = abs(step)
            if astep > max_step:
                max_step = astep
        if max_step <= step_tol or max_rel <= rtol:
            return sweep, True, max_rel
    return maxiter, False, max_rel
