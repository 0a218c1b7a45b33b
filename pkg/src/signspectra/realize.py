"""Constructive realizations of target spectra over the built-in sign patterns.

The central object is a parameterized 6x6 template whose sign pattern matches
the built-in pattern "T" whenever all nine parameters are positive.  Two
closed-form parameter assignments realize, exactly on the rational backend,

  * any even sextic (t**2+b)(t**2+c)(t**2+d), and
  * any monic sextic whose coefficients satisfy a5 != 0 and a3/a5 > 0.

A 2x2 construction realizes any monic quadratic over the pattern "D".  The
block-diagonal engine splits an arbitrary monic target of degree 6t + 2d
(d >= 5) into quadratics by root finding, groups sign-homogeneous triples of
quadratics into degree-6 targets for the template, and routes the rest to 2x2
blocks.  Finally, any refined inertia of total 8 is realized over diag(T, D).

"Large enough" free parameters are fixed by explicit lower bounds that make
every positivity condition provable; a doubling fallback re-verifies them
anyway and fails loudly rather than silently accepting a bad parameter set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .matrices import FloatMatrix, RationalMatrix, block_diag, conforms
from .patterns import builtin_pattern
from .poly import Polynomial, Quadratic, char_poly, coefficient_residual, poly_mul
from .roots import RefinedInertia, find_roots, roots_to_quadratics

_MAX_DOUBLINGS = 64


class GateError(ValueError):
    """Degree-6 target outside the template's reachable set (a5 = 0 or a3/a5 <= 0)."""


@dataclass(frozen=True)
class TemplateParams:
    """The nine positive scalars that instantiate the 6x6 template."""

    x1: object
    x2: object
    x3: object
    x4: object
    x5: object
    x6: object
    x7: object
    x8: object
    x9: object

    def astuple(self) -> tuple:
        return (self.x1, self.x2, self.x3, self.x4, self.x5, self.x6, self.x7, self.x8, self.x9)

    def all_positive(self) -> bool:
        return all(x > 0 for x in self.astuple())


def template_matrix(params: TemplateParams):
    """Instantiate the template; rational for Fraction parameters, float otherwise."""
    x1, x2, x3, x4, x5, x6, x7, x8, x9 = params.astuple()
    rational = isinstance(x1, Fraction)
    one = Fraction(1) if rational else 1.0
    o = Fraction(0) if rational else 0.0
    rows = [
        [x1, one, o, o, o, o],
        [-x4, -x2, one, o, o, o],
        [o, o, o, one, o, o],
        [o, o, o, o, one, o],
        [-x6, -x5, o, o, o, one],
        [x7, x8, x9, o, -x3, o],
    ]
    cls = RationalMatrix if rational else FloatMatrix
    return cls.from_rows(rows)


def _coerce(value, backend: str):
    if backend == "rational":
        return Fraction(value)
    if backend == "float":
        return float(value)
    raise ValueError(f"unknown backend {backend!r}")


def _sqrt_upper(q):
    """An upper bound for sqrt(q), q >= 0: exact for floats and for rational
    perfect squares, and the cheap bound (isqrt(num)+1)/isqrt(den) otherwise."""
    if isinstance(q, float):
        return math.sqrt(q)
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return Fraction(rn + 1, rd)


def _even_sextic_params(b, c, d, x1, x8_override):
    e1 = b + c + d
    e2 = b * c + b * d + c * d
    e3 = b * c * d
    one = x1 - x1 + 1  # 1 in the scalar type of x1
    x3 = one
    x2 = x1
    x4 = e1 + x1 * x1 - x3
    k5 = e2 - e1 * x3 + x3 * x3
    x9 = one + max(k5 - k5, -k5)
    x5 = k5 + x9
    if x8_override is None:
        x8 = max(one, (one + e3 - x9 * (x3 - e1)) / x1)
    else:
        x8 = x8_override
    x7 = -e3 + x1 * x8 + x9 * (x3 - e1)
    x6 = x1 * x5 + x8
    return TemplateParams(x1, x2, x3, x4, x5, x6, x7, x8, x9)


def realize_even_sextic(b, c, d, backend: str = "rational", x8=None):
    """Matrix over pattern T with characteristic polynomial (t²+b)(t²+c)(t²+d).

    Total for all real b, c, d.  Exact on the rational backend.  The optional
    x8 raises that free parameter above its computed bound; positivity is
    re-verified either way.
    """
    b, c, d = (_coerce(v, backend) for v in (b, c, d))
    one = _coerce(1, backend)
    e1 = b + c + d
    x1 = one + _sqrt_upper(max(one - one, one - e1))
    x8_override = None if x8 is None else _coerce(x8, backend)
    for _ in range(_MAX_DOUBLINGS):
        params = _even_sextic_params(b, c, d, x1, x8_override)
        if params.all_positive():
            return params, template_matrix(params)
        x1 = x1 * 2
    raise ValueError(
        "no positive parameter assignment found; the supplied x8 may be below its bound"
    )


def _sextic_params(a, x1, x8_override):
    a0, a1, a2, a3, a4, a5 = a[0], a[1], a[2], a[3], a[4], a[5]
    one = x1 - x1 + 1
    ratio = a3 / a5
    x3 = ratio
    x2 = a5 + x1
    x4 = x1 * x1 + a5 * x1 + (a4 - ratio)
    k5 = ratio * ratio - a4 * ratio + a2
    x9 = one + max(k5 - k5, -k5)
    x5 = k5 + x9
    if x8_override is None:
        x8 = max(one, one - (a1 + x1 * x5 + a5 * x9), (one + a0 - x9 * (ratio - a4)) / x1)
    else:
        x8 = x8_override
    x6 = a1 + x1 * x5 + x8 + a5 * x9
    x7 = -a0 + x1 * x8 + x9 * (ratio - a4)
    return TemplateParams(x1, x2, x3, x4, x5, x6, x7, x8, x9)


def realize_sextic(target: Polynomial, x8=None):
    """Matrix over pattern T matching a monic degree-6 target with a3/a5 > 0.

    Exact on the rational backend.  Raises GateError when the target has
    a5 = 0 or a3/a5 <= 0; such sextics admit no realization over T, so the
    gate is a hard boundary rather than a numerical limitation.
    """
    if target.degree != 6:
        raise ValueError(f"target must have degree 6, got {target.degree}")
    a = target.coeffs
    a3, a5 = a[3], a[5]
    if a5 == 0 or a3 / a5 <= 0:
        raise GateError(
            f"degree-6 target needs a5 != 0 and a3/a5 > 0; got a3 = {a3}, a5 = {a5}"
        )
    backend = target.backend
    one = _coerce(1, backend)
    cq = a[4] - a3 / a5
    x1 = one + abs(a5) + _sqrt_upper(max(one - one, -cq))
    x8_override = None if x8 is None else _coerce(x8, backend)
    for _ in range(_MAX_DOUBLINGS):
        params = _sextic_params(a, x1, x8_override)
        if params.all_positive():
            return params, template_matrix(params)
        x1 = x1 * 2
    raise ValueError(
        "no positive parameter assignment found; the supplied x8 may be below its bound"
    )


def realize_quadratic(p1, p0, backend: str = "rational"):
    """2x2 matrix over pattern D with characteristic polynomial t**2 + p1*t + p0.

    [[alpha, 1], [-gamma, -delta]] with alpha = |p1| + |p0| + 2 and
    delta = alpha + p1 has trace -p1; gamma = p0 + alpha*delta makes the
    determinant p0, and alpha*delta > |p0| keeps gamma positive.  Total and
    exact on the rational backend.
    """
    p1, p0 = _coerce(p1, backend), _coerce(p0, backend)
    alpha = abs(p1) + abs(p0) + 2
    delta = alpha + p1
    beta = _coerce(1, backend)
    gamma = p0 + alpha * delta
    cls = RationalMatrix if backend == "rational" else FloatMatrix
    return cls.from_rows([[alpha, beta], [-gamma, -delta]])


@dataclass(frozen=True)
class TripleSelection:
    """Result of picking a sign-homogeneous triple of quadratics."""

    triple: tuple
    rest: tuple
    label: str
    snapped: float


def select_triple(quads, eps_zero) -> TripleSelection:
    """Pick three quadratics t**2 + a*t + b whose a's share a sign class.

    Among the quadratics with b >= 0, each a is classified as zero
    (|a| <= eps_zero, snapped to exactly 0), positive, or negative; the
    largest class wins (ties prefer zero, then positive) and its first three
    members are returned in input order.  With at least 8 quadratics of which
    at most one has b < 0, the pigeonhole principle guarantees a triple.
    """
    quads = list(quads)
    if eps_zero <= 0:
        raise ValueError("eps_zero must be positive")
    if len(quads) < 8:
        raise ValueError(f"need at least 8 quadratics, got {len(quads)}")
    if sum(1 for q in quads if q.b < 0) > 1:
        raise ValueError("at most one quadratic may have a negative constant term")
    zero_idx, pos_idx, neg_idx = [], [], []
    for i, q in enumerate(quads):
        if q.b < 0:
            continue
        if abs(q.a) <= eps_zero:
            zero_idx.append(i)
        elif q.a > 0:
            pos_idx.append(i)
        else:
            neg_idx.append(i)
    classes = {"zero": zero_idx, "positive": pos_idx, "negative": neg_idx}
    label = max(classes, key=lambda k: len(classes[k]))
    chosen = classes[label][:3]
    if len(chosen) < 3:
        raise ValueError("no sign-homogeneous triple exists; preconditions were violated")
    snapped = 0.0
    triple = []
    for i in chosen:
        q = quads[i]
        if label == "zero" and q.a != 0:
            snapped += abs(float(q.a))
            q = Quadratic(q.a - q.a, q.b)
        triple.append(q)
    chosen_set = set(chosen)
    rest = tuple(q for i, q in enumerate(quads) if i not in chosen_set)
    return TripleSelection(tuple(triple), rest, label, snapped)


@dataclass(frozen=True)
class RealizationReport:
    """A realized matrix together with the evidence that it hits its target."""

    matrix: object
    pattern: object
    target: Polynomial
    residual: float
    perturbation: float
    block_orders: tuple
    block_tags: tuple
    backend: str

    def to_dict(self) -> dict:
        return {
            "matrix": self.matrix.to_dict(),
            "pattern": self.pattern.to_dict(),
            "target": self.target.to_dict(),
            "residual": self.residual,
            "perturbation": self.perturbation,
            "block_orders": list(self.block_orders),
            "block_tags": list(self.block_tags),
            "backend": self.backend,
        }


def _exact_block_charpoly(blocks) -> Polynomial:
    # char poly of a block-diagonal matrix is the product over blocks; floats
    # lift exactly, so the product is computed without rounding
    prod = None
    for m in blocks:
        rm = m if isinstance(m, RationalMatrix) else m.lift()
        cp = char_poly(rm)
        prod = cp if prod is None else poly_mul(prod, cp)
    return prod


def realize_poly(
    f: Polynomial,
    t: int,
    d: int,
    tol: float = 1e-9,
    backend: str = "float",
    arrangement: str = "grouped",
) -> RealizationReport:
    """Realize a monic target of degree 6t + 2d over t template and d 2x2 blocks.

    Needs d >= 5.  Roots are extracted once and grouped into 3t + d monic
    quadratics; while template blocks remain, a sign-homogeneous triple is
    multiplied into a degree-6 block target (the zero class going to the even
    realizer, so the gate always passes), and the remaining quadratics map to
    2x2 blocks.  At most one quadratic has a negative constant term and it
    always lands in a 2x2 block, which keeps the triple selection fed.

    The residual is computed exactly: output blocks are lifted to rationals,
    their characteristic polynomials multiplied, and the result compared to
    the lifted target, so float cancellation cannot hide a miss.  arrangement
    is "grouped" (template blocks first) or "alternating" (template and 2x2
    blocks interleaved; needs t == d), which changes the conforming pattern
    but not the spectrum.
    """
    if d < 5:
        raise ValueError("d must be at least 5")
    if t < 0:
        raise ValueError("t must be nonnegative")
    if f.degree != 6 * t + 2 * d:
        raise ValueError(f"degree must be 6*t + 2*d = {6 * t + 2 * d}, got {f.degree}")
    if arrangement not in ("grouped", "alternating"):
        raise ValueError(f"unknown arrangement {arrangement!r}")
    if arrangement == "alternating" and t != d:
        raise ValueError("alternating arrangement needs t == d")
    if backend not in ("rational", "float"):
        raise ValueError(f"unknown backend {backend!r}")

    multiset = find_roots(f, tol=tol)
    quads = roots_to_quadratics(multiset)
    eps_zero = tol * (1.0 + max(max(abs(q.a), abs(q.b)) for q in quads))

    t_blocks = []
    perturbation = 0.0
    for _ in range(t):
        sel = select_triple(quads, eps_zero)
        quads = list(sel.rest)
        perturbation += sel.snapped
        if sel.label == "zero":
            _, m6 = realize_even_sextic(
                sel.triple[0].b, sel.triple[1].b, sel.triple[2].b, backend=backend
            )
        else:
            qs = [
                Quadratic(_coerce(q.a, backend), _coerce(q.b, backend)).to_polynomial()
                for q in sel.triple
            ]
            block_target = poly_mul(poly_mul(qs[0], qs[1]), qs[2])
            _, m6 = realize_sextic(block_target)
        t_blocks.append(m6)
    d_blocks = [realize_quadratic(q.a, q.b, backend=backend) for q in quads]

    if arrangement == "grouped":
        blocks = t_blocks + d_blocks
        tags = ["T"] * t + ["D"] * d
    else:
        blocks = [b for pair in zip(t_blocks, d_blocks) for b in pair]
        tags = ["T", "D"] * t
    matrix = block_diag(blocks)
    pattern = block_diag([builtin_pattern(tag) for tag in tags])
    if not conforms(matrix, pattern):
        raise ArithmeticError("constructed matrix does not conform; parameter bounds failed")

    residual = coefficient_residual(_exact_block_charpoly(blocks), f)
    return RealizationReport(
        matrix=matrix,
        pattern=pattern,
        target=f,
        residual=residual,
        perturbation=perturbation,
        block_orders=tuple(b.n for b in blocks),
        block_tags=tuple(tags),
        backend=backend,
    )


def _as_inertia(nu) -> RefinedInertia:
    nu = RefinedInertia(*nu)
    if any(x < 0 for x in nu):
        raise ValueError(f"inertia components must be nonnegative, got {tuple(nu)}")
    return nu


_CUBIC_SPLITS = ((3, 0), (0, 3), (2, 1), (1, 2))

_DELTA_QUADS = {
    (0, 0, 2, 0): (0, 0),
    (0, 0, 0, 1): (0, 1),
    (1, 1, 0, 0): (0, -1),
    (2, 0, 0, 0): (-2, 1),
    (0, 2, 0, 0): (2, 1),
    (1, 0, 1, 0): (-1, 0),
    (0, 1, 1, 0): (1, 0),
}


def _cubic(split, n: int) -> Polynomial:
    # monic cubics with prescribed signs: (t-N)^3, (t+N)^3, (t+3N)(t-N)^2, (t-3N)(t+N)^2
    if split == (3, 0):
        return Polynomial((-n**3, 3 * n**2, -3 * n, 1))
    if split == (0, 3):
        return Polynomial((n**3, 3 * n**2, 3 * n, 1))
    if split == (2, 1):
        return Polynomial((3 * n**3, -5 * n**2, n, 1))
    return Polynomial((-3 * n**3, -5 * n**2, -n, 1))


def realize_subinertia(nu) -> tuple:
    """From a refined inertia of total 8, build a 6x6 matrix over pattern T
    whose refined inertia mu is componentwise at most nu (total 6).

    When nu has at least six eigenvalues on the axes (n_zero + 2*n_imag >= 6),
    an even sextic does it.  Otherwise at least three eigenvalues sit off the
    axes: two eigenvalues are dropped from nu, three real ones are realized by
    a scaled cubic, and the remaining degree-3 factor h is fixed; scaling the
    cubic by doubling N makes the product pass the a3/a5 gate.
    """
    nu = _as_inertia(nu)
    if nu.order() != 8:
        raise ValueError(f"refined inertia must have total 8, got {nu.order()}")
    if nu.n_zero + 2 * nu.n_imag >= 6:
        mi = min(nu.n_imag, 3)
        m0 = 6 - 2 * mi
        vals = ((2, 3, 5)[:mi] + (0, 0, 0))[:3]
        _, matrix = realize_even_sextic(*vals)
        return RefinedInertia(0, 0, m0, mi), matrix

    n_plus, n_minus, n_zero, n_imag = nu
    if n_imag >= 1:
        mu = RefinedInertia(n_plus, n_minus, n_zero, n_imag - 1)
    elif n_zero >= 2:
        mu = RefinedInertia(n_plus, n_minus, n_zero - 2, 0)
    elif n_zero == 1:
        if n_plus >= n_minus:
            mu = RefinedInertia(n_plus - 1, n_minus, 0, 0)
        else:
            mu = RefinedInertia(n_plus, n_minus - 1, 0, 0)
    else:
        p, m = n_plus, n_minus
        for _ in range(2):
            if p >= m:
                p -= 1
            else:
                m -= 1
        mu = RefinedInertia(p, m, 0, 0)

    for split in _CUBIC_SPLITS:
        if mu.n_plus >= split[0] and mu.n_minus >= split[1]:
            break
    else:
        raise ArithmeticError("unreachable: fewer than three real eigenvalues off the axes")

    h = Polynomial((1,))
    for _ in range(mu.n_zero):
        h = poly_mul(h, Polynomial((0, 1)))
    for _ in range(mu.n_imag):
        h = poly_mul(h, Polynomial((1, 0, 1)))
    for _ in range(mu.n_plus - split[0]):
        h = poly_mul(h, Polynomial((-1, 1)))
    for _ in range(mu.n_minus - split[1]):
        h = poly_mul(h, Polynomial((1, 1)))

    n = 1
    for _ in range(_MAX_DOUBLINGS):
        target = poly_mul(_cubic(split, n), h)
        a3, a5 = target.coeffs[3], target.coeffs[5]
        if a5 != 0 and a3 / a5 > 0:
            _, matrix = realize_sextic(target)
            return mu, matrix
        n *= 2
    raise ArithmeticError(f"gate not reached after {_MAX_DOUBLINGS} doublings of the cubic scale")


def realize_inertia(nu):
    """8x8 matrix over diag(T, D) with refined inertia exactly nu (total 8).

    The 6x6 block realizes some mu <= nu; the score left over, nu - mu, has
    total 2 and is one of seven cases, each matched by an explicit quadratic
    for the 2x2 block.
    """
    nu = _as_inertia(nu)
    if nu.order() != 8:
        raise ValueError(f"refined inertia must have total 8, got {nu.order()}")
    mu, m6 = realize_subinertia(nu)
    delta = tuple(a - b for a, b in zip(nu, mu))
    if delta not in _DELTA_QUADS:
        raise ArithmeticError(f"leftover inertia {delta} has no quadratic match")
    p1, p0 = _DELTA_QUADS[delta]
    m2 = realize_quadratic(p1, p0)
    return block_diag([m6, m2])
