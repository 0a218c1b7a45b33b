import random
from fractions import Fraction

import pytest
from conftest import charpoly_by_cofactors

from signspectra import (
    FloatMatrix,
    Polynomial,
    Quadratic,
    RationalMatrix,
    char_poly,
    coefficient_residual,
    divisors_degree6,
    poly_mul,
    polynomial_from_dict,
    realize_even_sextic,
)


def test_polynomial_backends():
    r = Polynomial((1, 2, 1))
    assert r.backend == "rational"
    assert all(isinstance(c, Fraction) for c in r.coeffs)
    f = Polynomial((1.0, 2, 1))
    assert f.backend == "float"
    assert all(isinstance(c, float) for c in f.coeffs)
    assert r.degree == 2


def test_polynomial_monic_enforcement():
    with pytest.raises(ValueError, match="monic"):
        Polynomial((1, 2))
    with pytest.raises(ValueError, match="monic"):
        Polynomial((0.0, 2.0))
    # float leading coefficients within 1e-12 of 1 snap to exactly 1.0
    p = Polynomial((3.0, 1.0 + 5e-13))
    assert p.coeffs[-1] == 1.0
    with pytest.raises(ValueError):
        Polynomial(())


def test_polynomial_type_rules():
    with pytest.raises(TypeError):
        Polynomial((Fraction(1, 2), 0.5, 1))
    with pytest.raises(TypeError):
        Polynomial(("1/2", 1))


def test_polynomial_evaluation():
    p = Polynomial((2, 0, 1))  # t**2 + 2
    assert p(3) == 11
    assert p(Fraction(1, 2)) == Fraction(9, 4)
    assert p(1j) == 1 + 0j


def test_polynomial_lift_round_trip():
    f = Polynomial((0.1, -2.0, 1.0))
    lifted = f.lift()
    assert lifted.backend == "rational"
    assert lifted.coeffs[0] == Fraction(0.1)
    assert lifted.to_float() == f
    r = Polynomial((1, 1))
    assert r.lift() is r


def test_polynomial_from_dict():
    f = polynomial_from_dict({"coeffs": [1.0, 0.0, 1.0]})
    assert f.backend == "float"
    r = polynomial_from_dict({"coeffs": ["1/2", -3, "1"]})
    assert r.backend == "rational"
    assert r.coeffs[0] == Fraction(1, 2)
    # integer-valued floats are accepted once a string forces rationals
    r2 = polynomial_from_dict({"coeffs": ["1/2", 3.0, "1"]})
    assert r2.coeffs[1] == 3
    with pytest.raises(ValueError, match="strings or integers"):
        polynomial_from_dict({"coeffs": ["1/2", 0.25, "1"]})
    for p in (f, r):
        assert polynomial_from_dict(p.to_dict()) == p


def test_poly_mul_known_products():
    t2p1 = Polynomial((1, 0, 1))
    t2m1 = Polynomial((-1, 0, 1))
    assert poly_mul(t2p1, t2m1) == Polynomial((-1, 0, 0, 0, 1))
    # schoolbook convolution: (t**2+t+1)(t**2-t+2) = t**4 + 2t**2 + t + 2
    assert poly_mul(Polynomial((1, 1, 1)), Polynomial((2, -1, 1))) == Polynomial((2, 1, 2, 0, 1))
    p = Polynomial((4, 3, 2, 1))
    assert poly_mul(p, Polynomial((1,))) == p
    with pytest.raises(ValueError, match="backend mismatch"):
        poly_mul(t2p1, Polynomial((1.0, 0.0, 1.0)))


def test_char_poly_small_cases():
    eye2 = RationalMatrix.from_rows([[1, 0], [0, 1]])
    assert char_poly(eye2) == Polynomial((1, -2, 1))
    # companion matrix of t**3 - 2t + 5 round trips
    companion = RationalMatrix.from_rows([[0, 0, -5], [1, 0, 2], [0, 1, 0]])
    assert char_poly(companion) == Polynomial((5, -2, 0, 1))
    with pytest.raises(TypeError):
        char_poly([[1]])


def test_char_poly_even_sextic_realization_exact():
    _, m = realize_even_sextic(1, 2, 3)
    expected = poly_mul(poly_mul(Polynomial((1, 0, 1)), Polynomial((2, 0, 1))), Polynomial((3, 0, 1)))
    assert char_poly(m) == expected
    assert charpoly_by_cofactors(m) == expected


def test_char_poly_matches_cofactor_oracle():
    rng = random.Random(20240817)
    for _ in range(200):
        n = rng.randint(1, 6)
        m = RationalMatrix.from_rows(
            [
                [Fraction(rng.randint(-10, 10)) / rng.randint(1, 5) for _ in range(n)]
                for _ in range(n)
            ]
        )
        assert char_poly(m) == charpoly_by_cofactors(m)


def test_char_poly_float_agrees_with_rational():
    rng = random.Random(7)
    rows = [[rng.uniform(-2, 2) for _ in range(5)] for _ in range(5)]
    f = FloatMatrix.from_rows(rows)
    exact = char_poly(f.lift()).to_float()
    approx = char_poly(f)
    for a, b in zip(approx.coeffs, exact.coeffs):
        assert a == pytest.approx(b, rel=1e-12, abs=1e-12)


def test_coefficient_residual():
    p = Polynomial((1, 2, 1))
    assert coefficient_residual(p, p) == 0.0
    q = Polynomial((Fraction(3, 2), 2, 1))
    # max|diff| = 1/2, scale = max(1, 2) = 2
    assert coefficient_residual(q, p) == 0.25
    f = Polynomial((1.0, 2.0, 1.0))
    assert coefficient_residual(f, p) == 0.0
    with pytest.raises(ValueError, match="degree mismatch"):
        coefficient_residual(p, Polynomial((1, 1)))


FACTORS = (
    Polynomial((1, 1, 1)),
    Polynomial((2, -1, 1)),
    Polynomial((1, 0, 1)),
    Polynomial((-1, 1)),
    Polynomial((1, 1)),
)


def test_divisors_degree6_enumeration():
    divisors = divisors_degree6(FACTORS)
    assert len(divisors) == 4
    assert all(d.degree == 6 for d in divisors)
    # the quadratic-triple product, by schoolbook multiplication
    q3 = poly_mul(poly_mul(FACTORS[0], FACTORS[1]), FACTORS[2])
    assert q3 == Polynomial((2, 1, 4, 1, 3, 0, 1))
    assert q3 in divisors
    assert Polynomial((-1, -1, -1, 0, 1, 1, 1)) in divisors
    assert divisors_degree6([Polynomial((1, 0, 1))]) == []


def test_divisors_degree6_rejects_floats():
    with pytest.raises(ValueError, match="rational"):
        divisors_degree6([Polynomial((1.0, 0.0, 1.0))])


def test_quadratic():
    q = Quadratic(-3, 2)
    assert q.to_polynomial() == Polynomial((2, -3, 1))
    lifted = Quadratic(0.5, 1.0).lift()
    assert lifted.a == Fraction(1, 2)
    assert isinstance(lifted.b, Fraction)
