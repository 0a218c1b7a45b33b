"""Root extraction for monic real polynomials, with exact preprocessing.

The float backend runs simultaneous complex refinement on all roots at once.
The rational backend first splits the polynomial into squarefree factors with
exact arithmetic, so multiple roots (including high-order zero and purely
imaginary roots) are located without the clustering loss that plain iteration
suffers; degree-1 and degree-2 factors with rational square discriminants are
solved exactly.

The refinement sweep itself lives in a compiled extension when available and
in a pure-Python twin otherwise; set SIGNSPECTRA_PURE_PYTHON=1 to force the
fallback.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .poly import Polynomial, Quadratic, char_poly

if os.environ.get("SIGNSPECTRA_PURE_PYTHON") == "1":
    from ._aberth import aberth_iterate as _aberth_iterate

    KERNEL = "python"
else:
    try:
        from ._aberth_fast import aberth_iterate as _aberth_iterate

        KERNEL = "compiled"
    except ImportError:
        from ._aberth import aberth_iterate as _aberth_iterate

        KERNEL = "python"

# Above this degree the exact squarefree split is skipped: coefficient growth
# in the rational gcd outweighs its benefit, and simple roots do not need it.
_SQUAREFREE_DEGREE_CAP = 32

_STEP_TOL_FACTOR = 1e-13


class RootFindingError(RuntimeError):
    """Raised when the residual certificate cannot be met."""

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual


@dataclass(frozen=True)
class RootMultiset:
    """Roots with multiplicity (repeated entries), closed under conjugation.

    Entries with |Im| <= tol count as real; the remaining entries must split
    into conjugate pairs, each matching within tol * (1 + |z|).
    """

    roots: tuple
    tol: float

    def __post_init__(self):
        roots = tuple(sorted((complex(z) for z in self.roots), key=lambda z: (z.real, z.imag)))
        object.__setattr__(self, "roots", roots)
        upper = [z for z in roots if z.imag > self.tol]
        lower = [z for z in roots if z.imag < -self.tol]
        if len(upper) != len(lower):
            raise ValueError("root multiset is not closed under conjugation")
        remaining = list(lower)
        for z in upper:
            dist, j = min(
                (abs(z - remaining[j].conjugate()), j) for j in range(len(remaining))
            )
            if dist > self.tol * (1.0 + abs(z)):
                raise ValueError(
                    f"root {z} has no conjugate partner within tolerance (closest at distance {dist:.3e})"
                )
            remaining.pop(j)

    @property
    def n(self) -> int:
        return len(self.roots)


class RefinedInertia(NamedTuple):
    """Eigenvalue location counts: open right half plane, open left half plane,
    zero, and nonzero imaginary-axis conjugate pairs.  The total matrix order
    is n_plus + n_minus + n_zero + 2 * n_imag."""

    n_plus: int
    n_minus: int
    n_zero: int
    n_imag: int

    def order(self) -> int:
        return self.n_plus + self.n_minus + self.n_zero + 2 * self.n_imag

    def dominates(self, other: "RefinedInertia") -> bool:
        """Componentwise >= comparison (tuple order is lexicographic, not useful here)."""
        return all(a >= b for a, b in zip(self, other))


def _exact_sqrt(f: Fraction):
    # Rational square root when it exists, else None.
    if f < 0:
        return None
    rn = math.isqrt(f.numerator)
    rd = math.isqrt(f.denominator)
    if rn * rn == f.numerator and rd * rd == f.denominator:
        return Fraction(rn, rd)
    return None


def _quadratic_roots_rational(a: Fraction, b: Fraction) -> list:
    disc = a * a - 4 * b
    if disc >= 0:
        s = _exact_sqrt(disc)
        if s is not None:
            return [complex(float((-a + s) / 2)), complex(float((-a - s) / 2))]
        sd = math.sqrt(float(disc))
        fa = float(a)
        return [complex((-fa + sd) / 2), complex((-fa - sd) / 2)]
    s = _exact_sqrt(-disc)
    if s is not None:
        im = float(s / 2)
    else:
        im = math.sqrt(float(-disc)) / 2
    re = float(-a / 2)
    return [complex(re, im), complex(re, -im)]


def _quadratic_roots_float(a: float, b: float) -> list:
    disc = a * a - 4.0 * b
    if disc >= 0.0:
        sq = math.sqrt(disc)
        r1 = (-a - sq) / 2.0 if a >= 0 else (-a + sq) / 2.0
        r2 = b / r1 if r1 != 0.0 else -a
        return [complex(r1), complex(r2)]
    return [complex(-a / 2.0, math.sqrt(-disc) / 2.0), complex(-a / 2.0, -math.sqrt(-disc) / 2.0)]


def _aberth_roots(coeffs: list, tol: float, maxiter: int) -> list:
    # coeffs: ascending floats, monic, degree >= 3, nonzero constant term.
    deg = len(coeffs) - 1
    radius = 1.0 + max(abs(c) for c in coeffs[:-1])
    init = [
        radius * complex(math.cos(a), math.sin(a))
        for a in (2.0 * math.pi * k / deg + math.pi / (2.0 * deg) for k in range(deg))
    ]
    step_tol = _STEP_TOL_FACTOR * radius
    if KERNEL == "compiled":
        z = np.array(init, dtype=complex)
        c = np.array(coeffs, dtype=float)
        _, converged, max_rel = _aberth_iterate(c, z, maxiter, step_tol, tol)
        roots = [complex(x) for x in z]
    else:
        z = list(init)
        _, converged, max_rel = _aberth_iterate(coeffs, z, maxiter, step_tol, tol)
        roots = z
    if not converged:
        raise RootFindingError(
            f"root refinement did not converge in {maxiter} sweeps "
            f"(last backward error {max_rel:.3e})",
            residual=max_rel,
        )
    return roots


def _roots_float_coeffs(coeffs: list, tol: float, maxiter: int) -> list:
    # Zero roots are factored out exactly first; doubles compare exactly to 0.
    zeros = 0
    while zeros < len(coeffs) - 1 and coeffs[zeros] == 0.0:
        zeros += 1
    work = coeffs[zeros:]
    deg = len(work) - 1
    if deg == 0:
        roots = []
    elif deg == 1:
        roots = [complex(-work[0] / work[1])]
    elif deg == 2:
        roots = _quadratic_roots_float(work[1] / work[2], work[0] / work[2])
    else:
        roots = _aberth_roots(work, tol, maxiter)
    return [0j] * zeros + roots


# --- exact squarefree split over Fraction coefficient lists (ascending) ---


def _trim(p: list) -> list:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _is_zero(p: list) -> bool:
    return all(c == 0 for c in p)


def _derivative(p: list) -> list:
    if len(p) == 1:
        return [Fraction(0)]
    return _trim([i * p[i] for i in range(1, len(p))])


def _pdivmod(a: list, b: list):
    # polynomial long division over Fraction; b must be nonzero
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(a) - 1 < db:
        return [Fraction(0)], _trim(a)
    q = [Fraction(0)] * (len(a) - db)
    for k in range(len(a) - db - 1, -1, -1):
        c = a[k + db] / lb
        q[k] = c
        if c:
            for j in range(db + 1):
                a[k + j] -= c * b[j]
    return _trim(q), _trim(a[:db] if db else [Fraction(0)])


def _pdiv_exact(a: list, b: list) -> list:
    q, r = _pdivmod(a, b)
    if not _is_zero(r):
        raise ArithmeticError("inexact polynomial division in squarefree split")
    return q


def _psub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _trim(out)


def _pgcd(a: list, b: list) -> list:
    # Euclid with monic normalization each round to keep coefficients tame.
    a, b = _trim(list(a)), _trim(list(b))
    while not _is_zero(b):
        b = [c / b[-1] for c in b]
        _, r = _pdivmod(a, b)
        a, b = b, r
    return [c / a[-1] for c in a]


def _squarefree_factors(p: Polynomial) -> list:
    """Decompose a monic rational polynomial into (squarefree factor, multiplicity)."""
    a = list(p.coeffs)
    da = _derivative(a)
    g = _pgcd(a, da)
    if len(g) == 1:
        return [(p, 1)]
    b = _pdiv_exact(a, g)
    c = _pdiv_exact(da, g)
    d = _psub(c, _derivative(b))
    out = []
    i = 1
    while len(b) > 1:
        ai = _pgcd(b, d)
        if len(ai) > 1:
            out.append((Polynomial(tuple(ai)), i))
        b = _pdiv_exact(b, ai)
        c = _pdiv_exact(d, ai)
        d = _psub(c, _derivative(b))
        i += 1
    return out


def _roots_of_rational_squarefree(factor: Polynomial, tol: float, maxiter: int) -> list:
    coeffs = list(factor.coeffs)
    roots = []
    if coeffs[0] == 0:
        # squarefree, so the zero root is simple
        roots.append(0j)
        coeffs = coeffs[1:]
    deg = len(coeffs) - 1
    if deg == 0:
        return roots
    if deg == 1:
        return roots + [complex(float(-coeffs[0]))]
    if deg == 2:
        return roots + _quadratic_roots_rational(coeffs[1], coeffs[0])
    return roots + _roots_float_coeffs([float(c) for c in coeffs], tol, maxiter)


def _close_under_conjugation(roots: list, tol: float) -> list:
    """Snap near-real roots and replace near-conjugate pairs by exact pairs."""
    reals = []
    upper = []
    lower = []
    for z in roots:
        if abs(z.imag) <= tol:
            reals.append(z.real)
        elif z.imag > 0:
            upper.append(z)
        else:
            lower.append(z)
    if len(upper) != len(lower):
        raise RootFindingError(
            f"root set is not closed under conjugation: {len(upper)} roots above the axis, "
            f"{len(lower)} below"
        )
    upper.sort(key=lambda z: (z.real, z.imag))
    out = [complex(r) for r in reals]
    remaining = list(lower)
    for z in upper:
        _, j = min((abs(z - remaining[j].conjugate()), j) for j in range(len(remaining)))
        w = remaining.pop(j)
        avg = (z + w.conjugate()) / 2.0
        out.append(avg)
        out.append(avg.conjugate())
    return out


def backward_error(coeffs: list, z: complex) -> float:
    """Smallest relative coefficient perturbation making z an exact root.

    Computed as |p(z)| / sum_k |c_k| |z|^k with both Horner passes in double
    precision.  This is the certificate quantity for find_roots: a flat
    denominator such as max|c_k| is unattainable at high degree, since the
    evaluation of p near a root of magnitude r carries rounding noise of
    order eps * sum |c_k| r^k regardless of the root's accuracy.
    """
    acc = complex(coeffs[-1])
    emag = abs(coeffs[-1])
    az = abs(z)
    for c in reversed(coeffs[:-1]):
        acc = acc * z + c
        emag = emag * az + abs(c)
    return 0.0 if emag == 0.0 else abs(acc) / emag


def find_roots(p: Polynomial, tol: float = 1e-9, maxiter: int = 500) -> RootMultiset:
    """All complex roots of p with multiplicity, certified by residuals.

    Every returned root z satisfies |p(z)| <= tol * sum_k |c_k| |z|^k in
    double-precision evaluation, i.e. z is an exact root of some polynomial
    whose coefficients differ relatively from p's by at most tol; otherwise
    RootFindingError is raised.  The result is exactly closed under
    conjugation: near-conjugate pairs are averaged, and roots with
    |Im| <= tol are snapped onto the real axis.
    """
    if p.degree < 1:
        raise ValueError("cannot extract roots of a constant polynomial")
    if p.backend == "rational" and p.degree <= _SQUAREFREE_DEGREE_CAP:
        roots = []
        for factor, mult in _squarefree_factors(p):
            froots = _roots_of_rational_squarefree(factor, tol, maxiter)
            for r in froots:
                roots.extend([r] * mult)
    else:
        roots = _roots_float_coeffs(p.float_coeffs(), tol, maxiter)
    roots = _close_under_conjugation(roots, tol)

    fc = p.float_coeffs()
    worst = max(backward_error(fc, z) for z in roots)
    if worst > tol:
        raise RootFindingError(
            f"residual certificate failed: worst backward error {worst:.3e} > {tol:.1e}",
            residual=worst,
        )
    return RootMultiset(tuple(roots), tol)


def roots_to_quadratics(multiset: RootMultiset) -> list:
    """Group a conjugation-closed multiset of even size into monic quadratics.

    Conjugate pairs become t**2 - 2*Re(z)*t + |z|**2.  Real roots are paired
    within their sign class, largest magnitude first, and zeros pair among
    themselves, so every quadratic has nonnegative constant term except for at
    most one pairing a positive with a negative leftover.
    """
    if multiset.n % 2:
        raise ValueError("total multiplicity must be even to group into quadratics")
    tol = multiset.tol
    zeros = []
    positives = []
    negatives = []
    conj = []
    for z in multiset.roots:
        if abs(z.imag) <= tol:
            r = z.real
            if abs(r) <= tol:
                zeros.append(0.0)
            elif r > 0:
                positives.append(r)
            else:
                negatives.append(r)
        elif z.imag > 0:
            conj.append(z)

    quads = [Quadratic(-2.0 * z.real, abs(z) ** 2) for z in conj]
    positives.sort(reverse=True)
    negatives.sort()
    leftovers = []

    pos_quads = []
    for i in range(0, len(positives) - 1, 2):
        r, s = positives[i], positives[i + 1]
        pos_quads.append(Quadratic(-(r + s), r * s))
    if len(positives) % 2:
        leftovers.append(positives[-1])

    neg_quads = []
    for i in range(0, len(negatives) - 1, 2):
        r, s = negatives[i], negatives[i + 1]
        neg_quads.append(Quadratic(-(r + s), r * s))
    if len(negatives) % 2:
        leftovers.append(negatives[-1])

    zero_quads = []
    pair_end = len(zeros) - (len(zeros) % 2)
    for i in range(0, pair_end, 2):
        zero_quads.append(Quadratic(-(zeros[i] + zeros[i + 1]), zeros[i] * zeros[i + 1]))
    if len(zeros) % 2:
        leftovers.append(zeros[-1])

    quads.extend(pos_quads)
    quads.extend(neg_quads)
    quads.extend(zero_quads)
    if leftovers:
        if len(leftovers) != 2:
            raise ValueError("real roots cannot be paired: odd counts in every sign class")
        r, s = leftovers
        quads.append(Quadratic(-(r + s), r * s))
    return quads


def refined_inertia_of(matrix, tol: float = 1e-9) -> RefinedInertia:
    """Classify the eigenvalues of a matrix by sign of real part.

    Eigenvalues with |z| <= tol count as zero; among the rest, |Re z| <= tol
    counts as purely imaginary (in conjugate pairs), and the remainder split
    by the sign of the real part.
    """
    cp = char_poly(matrix)
    rm = find_roots(cp, tol=tol)
    n_plus = n_minus = n_zero = n_axis = 0
    for z in rm.roots:
        if abs(z) <= tol:
            n_zero += 1
        elif abs(z.real) <= tol:
            n_axis += 1
        elif z.real > 0:
            n_plus += 1
        else:
            n_minus += 1
    if n_axis % 2:
        raise RootFindingError("imaginary eigenvalues do not pair up; classification is unstable")
    return RefinedInertia(n_plus, n_minus, n_zero, n_axis // 2)
