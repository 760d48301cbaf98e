from fractions import Fraction

import pytest

from hypergerm.errors import CapExceeded
from hypergerm.germ import ExpPoly, _poly, exppoly


def P(*cs):
    return _poly.trim(Fraction(c) for c in cs)


def test_mul_and_divmod_roundtrip():
    p, q = P(1, 2, 3), P(-1, 1)
    quot, rem = _poly.divmod_(_poly.add(_poly.mul(p, q), P(5)), q)
    assert quot == p
    assert rem == P(5)


def test_gcd_is_monic():
    a = _poly.mul(P(1, 1), P(2, 3))
    b = _poly.mul(P(1, 1), P(7, 0, 1))
    assert _poly.gcd(a, b) == P(1, 1)
    assert _poly.gcd(P(), P()) == ()


def test_evaluate_horner():
    assert _poly.evaluate(P(1, -2, 3), 4) == 1 - 8 + 48


def test_exppoly_canonical_drops_zero_polys():
    e = ExpPoly({2: (0, 0), 1: (3,)})
    assert e == ExpPoly.constant(3)
    assert ExpPoly({Fraction(1, 10): (1,), 1: (1,)}).terms[0][0] == 1


def test_exppoly_dominant_term():
    e = ExpPoly({Fraction(1, 10): (0, 0, 0, 0, 0, 1), 1: (-1,)})
    assert e.scale_key() == (1, 0)
    assert e.sign() == -1


def test_exppoly_evaluate_matches_definition():
    e = ExpPoly({2: (1, 1), Fraction(1, 3): (-2,)})
    n = 7
    assert e.evaluate(n) == (1 + n) * 2**n - 2 * Fraction(1, 3) ** n


def test_format_orders_bases_and_degrees_descending():
    e = ExpPoly({Fraction(1, 10): (-1,), 1: (1, 0, Fraction(1, 2)), 2: (3,)})
    assert e.format() == "3*pow(2,H) + 1/2*H^2 + 1 - pow(1/10,H)"
    assert e.format("n") == "3*pow(2,n) + 1/2*n^2 + 1 - pow(1/10,n)"


def test_caps(monkeypatch):
    monkeypatch.setattr(exppoly, "MAX_DEGREE", 3)
    h2 = ExpPoly.monomial(1, 2)
    with pytest.raises(CapExceeded):
        h2 * h2
    monkeypatch.setattr(exppoly, "MAX_TERMS", 2)
    with pytest.raises(CapExceeded):
        ExpPoly({1: (1,), 2: (1,), 3: (1,)})
