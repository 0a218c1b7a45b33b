import math
import os
import random
import subprocess
import sys

import pytest
from conftest import poly_from_real_roots, poly_from_root_spec

from signspectra import (
    FloatMatrix,
    Polynomial,
    Quadratic,
    RefinedInertia,
    RootFindingError,
    RootMultiset,
    backward_error,
    coefficient_residual,
    find_roots,
    poly_mul,
    realize_even_sextic,
    refined_inertia_of,
    roots_to_quadratics,
)
from signspectra._aberth import aberth_iterate as aberth_pure

F_FACTORS = (
    Polynomial((1, 1, 1)),
    Polynomial((2, -1, 1)),
    Polynomial((1, 0, 1)),
    Polynomial((-1, 0, 1)),
)


def f_degree8() -> Polynomial:
    p = F_FACTORS[0]
    for q in F_FACTORS[1:]:
        p = poly_mul(p, q)
    return p


def closed_form_roots_of_f():
    # quadratic formula on each published factor
    return [
        complex(-0.5, math.sqrt(3) / 2),
        complex(-0.5, -math.sqrt(3) / 2),
        complex(0.5, math.sqrt(7) / 2),
        complex(0.5, -math.sqrt(7) / 2),
        1j,
        -1j,
        1.0 + 0j,
        -1.0 + 0j,
    ]


def assert_root_sets_match(got, expected, tol=1e-9):
    assert len(got) == len(expected)
    remaining = list(expected)
    for z in got:
        dist, j = min((abs(z - remaining[j]), j) for j in range(len(remaining)))
        assert dist <= tol * (1.0 + abs(z))
        remaining.pop(j)


def test_find_roots_quadratics():
    assert_root_sets_match(find_roots(Polynomial((1, 0, 1))).roots, [1j, -1j], tol=0)
    assert_root_sets_match(find_roots(Polynomial((-1, 0, 1))).roots, [1, -1], tol=0)


def test_find_roots_closed_forms_degree8():
    rm = find_roots(f_degree8(), tol=1e-9)
    assert_root_sets_match(rm.roots, closed_form_roots_of_f())


def test_find_roots_float_backend_degree8():
    rm = find_roots(f_degree8().to_float(), tol=1e-9)
    assert_root_sets_match(rm.roots, closed_form_roots_of_f())


def test_find_roots_multiplicities():
    rm = find_roots(Polynomial((0, 0, 0, 0, 0, 0, 1)))  # t**6
    assert rm.roots == (0j,) * 6
    # squarefree split handles repeated quadratic factors exactly
    p = poly_mul(Polynomial((1, 0, 1)), Polynomial((1, 0, 1)))
    rm = find_roots(p)
    assert_root_sets_match(rm.roots, [1j, 1j, -1j, -1j], tol=0)


def test_find_roots_rational_exact_real_roots():
    p = Polynomial((6, -5, 1))  # (t-2)(t-3)
    assert_root_sets_match(find_roots(p).roots, [2, 3], tol=0)


def test_find_roots_float_multiple_roots_within_certificate():
    # the float path has no exact squarefree split; double roots pass the
    # backward-error certificate at position accuracy ~sqrt(tol)
    p = poly_mul(Polynomial((1.0, 0.0, 1.0)), Polynomial((1.0, 0.0, 1.0)))
    p = poly_mul(p, Polynomial((-1.0, 1.0)))
    rm = find_roots(p, tol=1e-7)
    assert_root_sets_match(rm.roots, [1j, 1j, -1j, -1j, 1.0], tol=1e-3)
    fc = p.float_coeffs()
    assert max(backward_error(fc, z) for z in rm.roots) <= 1e-7


def test_find_roots_rejects_constants():
    with pytest.raises(ValueError):
        find_roots(Polynomial((1,)))


def test_backward_error_measures_perturbation():
    coeffs = [2.0, -3.0, 1.0]  # (t-1)(t-2)
    assert backward_error(coeffs, 1.0 + 0j) == 0.0
    assert backward_error(coeffs, 2.0 + 0j) == 0.0
    # p(3) = 2 against sum |c_k| 3**k = 2 + 9 + 9 = 20
    assert backward_error(coeffs, 3.0 + 0j) == pytest.approx(0.1)


def test_certificate_bounds_returned_roots():
    rng = random.Random(5)
    for _ in range(20):
        coeffs = tuple(rng.uniform(-5, 5) for _ in range(16)) + (1.0,)
        p = Polynomial(coeffs)
        rm = find_roots(p, tol=1e-9)
        fc = p.float_coeffs()
        assert max(backward_error(fc, z) for z in rm.roots) <= 1e-9


def sample_separated_reals(rng, count, lo, hi, gap):
    reals = []
    while len(reals) < count:
        r = rng.uniform(lo, hi)
        if all(abs(r - s) >= gap for s in reals):
            reals.append(r)
    return reals


def test_scale_relative_residuals_on_tame_populations():
    # with separated roots in a small disk the coefficient-scale form of the
    # residual certificate holds as well
    rng = random.Random(11)
    for _ in range(50):
        deg = rng.randint(2, 8)
        reals = sample_separated_reals(rng, deg, -1.5, 1.5, 0.05)
        p = poly_from_real_roots(reals)
        rm = find_roots(p, tol=1e-9)
        fc = p.float_coeffs()
        scale = max(abs(c) for c in fc)
        for z in rm.roots:
            acc = complex(fc[-1])
            for c in reversed(fc[:-1]):
                acc = acc * z + c
            assert abs(acc) <= 1e-9 * scale


def test_root_multiset_validation():
    with pytest.raises(ValueError, match="not closed"):
        RootMultiset((1j,), 1e-9)
    with pytest.raises(ValueError, match="conjugate partner"):
        RootMultiset((1 + 1j, -1 - 1.5j), 1e-9)
    rm = RootMultiset((1 + 1j, 1 - 1j, 0.5), 1e-9)
    assert rm.n == 3


def test_conjugate_closure_snaps_and_pairs():
    # slightly unsymmetric inputs come back exactly closed
    rm = find_roots(poly_from_root_spec([0.5], [(1.0, 2.0), (-1.0, 0.25)]), tol=1e-9)
    ups = [z for z in rm.roots if z.imag > 0]
    for z in ups:
        assert z.conjugate() in rm.roots


def test_refined_inertia_of_diagonal():
    m = FloatMatrix.from_rows([[1.0, 0, 0], [0, -1.0, 0], [0, 0, 0.0]])
    assert refined_inertia_of(m) == RefinedInertia(1, 1, 1, 0)


def test_refined_inertia_of_even_sextic_realization():
    _, m = realize_even_sextic(1, 2, 3)
    assert refined_inertia_of(m) == RefinedInertia(0, 0, 0, 3)


def test_refined_inertia_counts_of_degree8_roots():
    rm = find_roots(f_degree8(), tol=1e-9)
    tol = 1e-9
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
    assert (n_plus, n_minus, n_zero, n_axis // 2) == (3, 3, 0, 1)


def test_refined_inertia_tuple_helpers():
    nu = RefinedInertia(3, 3, 0, 1)
    assert nu.order() == 8
    assert nu.dominates(RefinedInertia(3, 2, 0, 1))
    assert not nu.dominates(RefinedInertia(4, 0, 0, 0))


def pairing_negative_counts(reals):
    # enumerate all perfect matchings; count of products < 0 per matching
    if not reals:
        return [0]
    first, rest = reals[0], list(reals[1:])
    counts = []
    for i in range(len(rest)):
        partner = rest[i]
        sub = rest[:i] + rest[i + 1 :]
        for c in pairing_negative_counts(sub):
            counts.append(c + (1 if first * partner < 0 else 0))
    return counts


def quads_of(roots):
    return roots_to_quadratics(RootMultiset(tuple(roots), 1e-9))


def test_roots_to_quadratics_frozen_pairings():
    quads = quads_of([1.0, -1.0, 2.0, 3.0])
    assert set((q.a, q.b) for q in quads) == {(-5.0, 6.0), (0.0, -1.0)}
    assert sum(1 for q in quads if q.b < 0) == 1

    quads = quads_of([1.0, 2.0, -3.0, -4.0])
    assert set((q.a, q.b) for q in quads) == {(-3.0, 2.0), (7.0, 12.0)}
    assert all(q.b >= 0 for q in quads)

    quads = quads_of([1j, -1j, 1.0, -1.0])
    assert set((q.a, q.b) for q in quads) == {(0.0, 1.0), (0.0, -1.0)}


def test_roots_to_quadratics_is_optimal_on_frozen_examples():
    for roots in ([1.0, -1.0, 2.0, 3.0], [1.0, 2.0, -3.0, -4.0]):
        got = sum(1 for q in quads_of(roots) if q.b < 0)
        assert got == min(pairing_negative_counts(roots))


def test_roots_to_quadratics_zero_roots_snap():
    quads = quads_of([0.0, 0.0, 5e-10, -5e-10])
    assert all(q.b == 0.0 and q.a == 0.0 for q in quads)


def test_roots_to_quadratics_mixed_parities():
    # one positive, one negative, two zeros: zeros pair, leftovers cross
    quads = quads_of([2.0, -3.0, 0.0, 0.0])
    assert sum(1 for q in quads if q.b < 0) == 1
    assert Quadratic(0.0, 0.0) in quads


def test_roots_to_quadratics_odd_total_rejected():
    with pytest.raises(ValueError, match="even"):
        quads_of([1.0, 2.0, 3.0])


def test_roots_to_quadratics_reconstructs_input():
    p = poly_from_root_spec([0.3, -1.2, 2.0, -0.7], [(0.5, 1.5), (-1.0, 0.8)])
    rm = find_roots(p, tol=1e-9)
    prod = Polynomial((1,))
    for q in roots_to_quadratics(rm):
        prod = poly_mul(prod, q.lift().to_polynomial())
    assert coefficient_residual(prod, p) <= 10 * 1e-9 * p.degree


def test_kernel_dispatch_reports_a_kernel():
    from signspectra import KERNEL

    assert KERNEL in ("compiled", "python")


def test_pure_kernel_matches_active_kernel():
    coeffs = f_degree8().float_coeffs()
    deg = len(coeffs) - 1
    radius = 1.0 + max(abs(c) for c in coeffs[:-1])
    init = [
        radius * complex(math.cos(a), math.sin(a))
        for a in (2 * math.pi * k / deg + math.pi / (2 * deg) for k in range(deg))
    ]
    z_pure = list(init)
    sweeps, converged, rel = aberth_pure(coeffs, z_pure, 500, 1e-13 * radius, 1e-9)
    assert converged
    assert rel <= 1e-9
    assert_root_sets_match(z_pure, closed_form_roots_of_f(), tol=1e-8)

    rm = find_roots(f_degree8().to_float(), tol=1e-9)
    assert_root_sets_match(rm.roots, z_pure, tol=1e-8)


def test_pure_python_fallback_selected_by_env():
    code = (
        "import signspectra as ss\n"
        "from signspectra import Polynomial, find_roots\n"
        "p = Polynomial((2.0, -1.0, -2.0, 1.0))\n"
        "rm = find_roots(p, tol=1e-9)\n"
        "print(ss.KERNEL)\n"
        "print(' '.join(f'{z.real:.12f}' for z in rm.roots))\n"
    )
    env = dict(os.environ, SIGNSPECTRA_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, env=env, check=True
    )
    lines = out.stdout.strip().splitlines()
    assert lines[0] == "python"
    got = sorted(float(x) for x in lines[1].split())
    for a, b in zip(got, [-1.0, 1.0, 2.0]):  # (t-1)(t+1)(t-2)
        assert a == pytest.approx(b, abs=1e-9)


def test_unattainable_tolerance_reports_residual():
    # tolerances below the double-precision evaluation floor cannot be
    # certified; the raised error carries the achieved residual as evidence.
    # All roots are kept far from the real axis so conjugation closure is
    # not the failing step.
    p = poly_from_root_spec([], [(0.5, 1.0), (-0.5, 1.2), (1.0, 0.7), (-1.0, 1.5)])
    with pytest.raises(RootFindingError) as err:
        find_roots(p, tol=1e-18)
    assert err.value.residual is not None
    assert err.value.residual > 1e-18
