"""Exponential-polynomials: finite sums of p_b(n) * b**n.

An :class:`ExpPoly` denotes the germ at infinity of the sequence
``n -> sum(p_b(n) * b**n)`` over positive rational bases ``b``.  Because
distinct (base, degree) pairs give linearly independent sequences, the
stored form is unique, so structural equality is semantic equality.
"""
from fractions import Fraction

from gmpy2 import mpq as Q

from ..errors import CapExceeded
from . import _poly

MAX_TERMS = 64
MAX_DEGREE = 64


def to_fraction(q):
    """Plain-int Fraction from a gmpy2 rational."""
    return Fraction(int(q.numerator), int(q.denominator))


def _check_caps(terms):
    if len(terms) > MAX_TERMS:
        raise CapExceeded(f"{len(terms)} exponential terms exceed the cap of {MAX_TERMS}")
    for _, p in terms:
        if len(p) - 1 > MAX_DEGREE:
            raise CapExceeded(f"degree {len(p) - 1} exceeds the cap of {MAX_DEGREE}")


class ExpPoly:
    __slots__ = ("terms",)

    def __init__(self, mapping=None):
        # mapping: base -> coefficient tuple (low degree first)
        items = []
        for base, poly in (mapping or {}).items():
            poly = _poly.trim(Q(c) for c in poly)
            if poly:
                items.append((Q(base), poly))
        items.sort(key=lambda t: t[0], reverse=True)
        terms = tuple(items)
        _check_caps(terms)
        self.terms = terms

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        _check_caps(terms)
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, c):
        c = Q(c)
        return cls._raw(((Q(1), (c,)),) if c else ())

    @classmethod
    def monomial(cls, coeff=1, degree=0, base=1):
        """``coeff * H**degree * base**H``."""
        base = Q(base)
        if base <= 0:
            raise ValueError("bases must be positive")
        coeff = Q(coeff)
        if not coeff:
            return cls._raw(())
        poly = (Q(0),) * degree + (coeff,)
        return cls._raw(((base, poly),))

    # -- structure -------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_unit(self):
        """True for ``c * b**H`` with c != 0, the only invertible ExpPolys."""
        return len(self.terms) == 1 and len(self.terms[0][1]) == 1

    def as_constant(self):
        """The Fraction value if this is a constant, else None."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1:
            base, poly = self.terms[0]
            if base == 1 and len(poly) == 1:
                return to_fraction(poly[0])
        return None

    def scale_key(self):
        """(base, degree) of the dominant term; larger means faster growth."""
        base, poly = self.terms[0]
        return base, len(poly) - 1

    def leading_coefficient(self):
        return self.terms[0][1][-1]

    def sign(self):
        if not self.terms:
            return 0
        return 1 if self.leading_coefficient() > 0 else -1

    def max_degree(self):
        return max((len(p) - 1 for _, p in self.terms), default=-1)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if not other.terms:
            return self
        if not self.terms:
            return other
        acc = dict(self.terms)
        for base, poly in other.terms:
            acc[base] = _poly.add(acc[base], poly) if base in acc else poly
        return ExpPoly(acc)

    def __neg__(self):
        return ExpPoly._raw(tuple((b, _poly.neg(p)) for b, p in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.terms or not other.terms:
            return ExpPoly._raw(())
        if len(other.terms) == 1 and other.terms[0] == (1, _poly.ONE):
            return self
        acc = {}
        for b1, p1 in self.terms:
            for b2, p2 in other.terms:
                base = b1 * b2
                prod = _poly.mul(p1, p2)
                acc[base] = _poly.add(acc[base], prod) if base in acc else prod
        return ExpPoly(acc)

    def scale(self, c):
        c = Q(c)
        if not c:
            return ExpPoly._raw(())
        return ExpPoly._raw(tuple((b, _poly.scale(p, c)) for b, p in self.terms))

    def rebase(self, factor):
        """Multiply by ``factor**H`` (factor > 0)."""
        if factor == 1:
            return self
        return ExpPoly._raw(tuple((b * factor, p) for b, p in self.terms))

    def map_polys(self, fn):
        return ExpPoly({b: fn(p) for b, p in self.terms})

    def polys(self):
        return [p for _, p in self.terms]

    # -- evaluation and comparison ---------------------------------------

    def evaluate(self, n):
        """Exact value of the denoted sequence at the natural ``n``."""
        total = Q(0)
        for base, poly in self.terms:
            total += _poly.evaluate(poly, n) * base ** n
        return to_fraction(total)

    def __eq__(self, other):
        if not isinstance(other, ExpPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        return f"ExpPoly({self.format()!r})"

    def format(self, symbol="H"):
        """Render with bases decreasing and degrees decreasing."""
        if not self.terms:
            return "0"
        pieces = []
        for base, poly in self.terms:
            for deg in range(len(poly) - 1, -1, -1):
                c = poly[deg]
                if c:
                    pieces.append((c, _monomial_body(abs(c), deg, base, symbol)))
        out = []
        for i, (c, body) in enumerate(pieces):
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)


def _monomial_body(mag, deg, base, symbol):
    factors = []
    if deg == 1:
        factors.append(symbol)
    elif deg > 1:
        factors.append(f"{symbol}^{deg}")
    if base != 1:
        factors.append(f"pow({base},{symbol})")
    if not factors:
        return str(mag)
    if mag != 1:
        factors.insert(0, str(mag))
    return "*".join(factors)
