import math
from fractions import Fraction

import pytest

from hypergerm.errors import DivisionByZero, InfiniteArgument, NonPositiveBase
from hypergerm.germ import (
    H,
    Classification,
    ExpPoly,
    Hypernat,
    Hyperreal,
    Ordering,
    classify,
    compare,
    floor_limited,
    from_rational,
    halo_equiv,
    hypernat_H,
    parse_germ,
    pow_base,
    pow_int,
    sign,
    st,
)
from oracles import eventual_sign, numeric_sign

TENTH = Fraction(1, 10)
tiny = pow_base(TENTH, hypernat_H())  # 10**-H
nines = 1 - tiny  # 0.999...9 with H nines


class TestFromRational:
    def test_constants(self):
        assert from_rational(1) == 1
        assert from_rational(Fraction(9, 10)) == Fraction(9, 10)
        assert st(from_rational(Fraction(9, 10))) == Fraction(9, 10)

    def test_zero(self):
        assert classify(from_rational(0)) is Classification.ZERO


class TestHypernat:
    def test_H_is_infinite(self):
        h = hypernat_H()
        assert (h.a, h.c) == (1, 0)
        assert h.to_hyperreal() > 10**6
        assert classify(h.to_hyperreal()) is Classification.INFINITE

    def test_predecessor_exists(self):
        h_minus = hypernat_H() - 1
        assert (h_minus.a, h_minus.c) == (1, -1)
        assert classify(h_minus.to_hyperreal()) is Classification.INFINITE
        assert hypernat_H() + 1 > hypernat_H() > h_minus

    def test_must_be_eventually_positive(self):
        with pytest.raises(ValueError):
            Hypernat(0, 0)
        with pytest.raises(ValueError):
            Hypernat(-1, 5)
        assert Hypernat(0, 3).is_finite()

    @pytest.mark.parametrize("text,expected", [
        ("H", (1, 0)), ("H+1", (1, 1)), ("H - 1", (1, -1)), ("2*H", (2, 0)), ("3H-2", (3, -2)), ("7", (0, 7)),
    ])
    def test_parse(self, text, expected):
        h = Hypernat.parse(text)
        assert (h.a, h.c) == expected
        assert Hypernat.parse(h.format()) == h


class TestFieldOps:
    def test_additive_inverse(self):
        assert nines + tiny == 1

    def test_multiplicative_inverse(self):
        assert H * (1 / H) == 1

    def test_gap_is_tiny(self):
        gap = 1 - nines
        assert gap == tiny
        assert classify(gap) is Classification.INFINITESIMAL

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            H / (tiny - tiny)
        with pytest.raises(DivisionByZero):
            from_rational(0).reciprocal()

    def test_results_are_reduced(self):
        assert str((H * H + H) / H) == "H + 1"
        assert str(parse_germ("(2*H+2)/(H+1)")) == "2"


class TestSign:
    def test_nines_fall_short(self):
        assert sign(nines - 1) == -1
        assert nines < 1

    def test_zero(self):
        assert sign(from_rational(0)) == 0

    def test_exponential_decay_beats_polynomial_decay(self):
        x = tiny * H**5 - 1 / H
        expected = eventual_sign(lambda n: TENTH**n * n**5 - Fraction(1, n))
        assert expected == -1
        assert sign(x) == expected


class TestCompare:
    def test_nines_less_than_one(self):
        assert compare(nines, 1) is Ordering.LESS

    def test_reflexive(self):
        for x in (nines, H, tiny, from_rational(Fraction(-3, 7))):
            assert compare(x, x) is Ordering.EQUAL

    def test_tiny_dominates_its_square(self):
        # numeric oracle at n = 10, 20, 30
        for n in (10, 20, 30):
            assert numeric_sign(TENTH**n - TENTH ** (2 * n)) == 1
        assert compare(tiny, pow_base(TENTH, Hypernat(2, 0))) is Ordering.GREATER


class TestClassify:
    def test_tiny(self):
        assert classify(tiny) is Classification.INFINITESIMAL

    def test_H(self):
        assert classify(H) is Classification.INFINITE

    def test_limited(self):
        # oracle: 2 + 1/n tends to 2, so bounded and bounded away from zero
        values = [2 + Fraction(1, n) for n in (10, 100, 1000)]
        assert all(abs(v - 2) < Fraction(1, 5) for v in values)
        assert classify(2 + 1 / H) is Classification.NONZERO_LIMITED

    def test_negative_infinite(self):
        assert classify(-H * H) is Classification.INFINITE


class TestStandardPart:
    def test_st_nines(self):
        assert st(nines) == 1

    def test_st_zero(self):
        assert st(from_rational(0)) == 0

    def test_st_ratio(self):
        x = (H + 1) / H
        for n, tol in ((10**3, Fraction(1, 10**3)), (10**6, Fraction(1, 10**6))):
            assert abs(x.evaluate(n) - 1) <= tol
        assert st(x) == 1

    def test_st_of_infinite_raises(self):
        with pytest.raises(InfiniteArgument):
            st(H)

    def test_st_returns_plain_fraction(self):
        s = st(parse_germ("3/7 + pow(1/2,H)"))
        assert type(s) is Fraction and type(s.numerator) is int


class TestHalo:
    def test_nines_in_halo_of_one(self):
        assert halo_equiv(nines, 1)

    def test_reflexive(self):
        assert halo_equiv(H, H)

    def test_examples(self):
        assert classify(1 / (H * H)) is Classification.INFINITESIMAL
        assert halo_equiv(1, 1 + 1 / (H * H))
        assert classify(from_rational(1) - 2) is Classification.NONZERO_LIMITED
        assert not halo_equiv(1, 2)


class TestPowers:
    def test_pow_int(self):
        assert pow_int(H, 2) == H * H
        assert pow_int(nines, 0) == 1
        assert pow_int(H, -2) * H * H == 1
        with pytest.raises(DivisionByZero):
            pow_int(from_rational(0), -1)

    def test_pow_int_of_tiny_matches_pow_base(self):
        lhs, rhs = pow_int(tiny, 2), pow_base(Fraction(1, 100), hypernat_H())
        assert (lhs.num * rhs.den - rhs.num * lhs.den).is_zero()

    def test_pow_base(self):
        assert classify(tiny) is Classification.INFINITESIMAL
        assert pow_base(Fraction(7, 3), (0, 0)) == 1

    def test_pow_base_shifted(self):
        shifted = pow_base(TENTH, Hypernat(1, -1))
        assert shifted == 10 * tiny
        for n in (10, 20):
            assert (1 - TENTH ** (n - 1)) < (1 - TENTH**n)
        assert 1 - shifted < nines

    @pytest.mark.parametrize("b", [0, -2, Fraction(-1, 10)])
    def test_non_positive_base(self, b):
        with pytest.raises(NonPositiveBase):
            pow_base(b, hypernat_H())


class TestFloor:
    def test_nines_scaled(self):
        for n in (10, 20):
            assert math.floor(10**5 * (1 - TENTH**n)) == 99999
        assert floor_limited(10**5 * nines) == 99999

    def test_half(self):
        assert floor_limited(from_rational(Fraction(1, 2))) == 0

    def test_just_below_integer(self):
        for n in (10, 20):
            assert math.floor(3 - Fraction(1, n)) == 2
        assert floor_limited(3 - 1 / H) == 2

    def test_just_above_integer_keeps_integer(self):
        assert floor_limited(3 + 1 / H) == 3
        assert floor_limited(from_rational(-2)) == -2
        assert floor_limited(-2 - tiny) == -3

    def test_infinite(self):
        with pytest.raises(InfiniteArgument):
            floor_limited(H)


class TestParseGerm:
    @pytest.mark.parametrize("text", [
        "1 - pow(1/10, H)", "(H+1)/H", "pow(1/10, 2*H)", "-H^2 + 3", "H^-1", "pow(2,H-3)*H", "0.5*H",
    ])
    def test_format_parses_back(self, text):
        x = parse_germ(text)
        assert parse_germ(str(x)) == x

    def test_pow_two_H(self):
        assert parse_germ("pow(1/10, 2*H)") == pow_base(Fraction(1, 100), hypernat_H())

    def test_canonical_strings(self):
        assert str(parse_germ("1 - pow(1/10, H)")) == "1 - pow(1/10,H)"
        assert str(parse_germ("(H+1)/H")) == "(H + 1)/H"

    def test_from_parts_keeps_representative(self):
        num = ExpPoly({1: (1, 1)})
        den = ExpPoly({1: (0, 1)})
        x = Hyperreal.from_parts(num.scale(3), den.scale(3))
        assert x == (H + 1) / H
        assert hash(x) == hash((H + 1) / H)
