"""Hyperreal germs: quotients of exponential-polynomials in one infinite H.

Every comparison in this fragment is settled by eventual dominance of the
denoted sequences, so no ultrafilter choice ever enters.  Values are
immutable; all operations return new objects.
"""
import enum
import math
import numbers
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from gmpy2 import mpq as Q

from ..errors import DivisionByZero, InfiniteArgument, NonPositiveBase
from . import _poly
from .exppoly import ExpPoly, to_fraction

_ZERO = ExpPoly.constant(0)
_ONE = ExpPoly.constant(1)


class Classification(enum.Enum):
    ZERO = "Zero"
    INFINITESIMAL = "Infinitesimal"
    NONZERO_LIMITED = "NonzeroLimited"
    INFINITE = "Infinite"

    def __str__(self):
        return self.value


class Ordering(enum.Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"

    def __str__(self):
        return self.value


def _common_poly_factor(polys):
    g = _poly.ZERO
    for p in polys:
        if len(p) == 1:
            return _poly.ONE
        g = _poly.gcd(g, p) if g else _poly.monic(p)
        if len(g) == 1:
            return _poly.ONE
    return g


def _normalize(num, den):
    if den.is_zero():
        raise DivisionByZero("denominator germ is zero")
    if num.is_zero():
        return _ZERO, _ONE
    if den.is_unit():
        (base, (c,)), = den.terms
        return num.rebase(1 / base).scale(1 / c), _ONE
    g = _common_poly_factor(num.polys() + den.polys())
    if len(g) > 1:
        num = num.map_polys(lambda p: _poly.divmod_(p, g)[0])
        den = den.map_polys(lambda p: _poly.divmod_(p, g)[0])
        if den.is_unit():
            return _normalize(num, den)
    top_base = den.terms[0][0]
    if top_base != 1:
        num, den = num.rebase(1 / top_base), den.rebase(1 / top_base)
    lead = den.leading_coefficient()
    if lead != 1:
        num, den = num.scale(1 / lead), den.scale(1 / lead)
    return num, den


@total_ordering
class Hyperreal:
    """Germ ``num/den``; equality is decided by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = _ONE
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _trusted(cls, num, den):
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @classmethod
    def from_parts(cls, num, den):
        """Build without normalizing; for representative-independence checks."""
        if den.is_zero():
            raise DivisionByZero("denominator germ is zero")
        if den.sign() < 0:
            num, den = -num, -den
        return cls._trusted(num, den)

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def as_rational(self):
        """The Fraction this germ equals, or None if it is not constant."""
        if self.num.is_zero():
            return Fraction(0)
        c = self.num.leading_coefficient() / self.den.leading_coefficient()
        if self.num.scale_key() != self.den.scale_key():
            return None
        return to_fraction(c) if self.num == self.den.scale(c) else None

    def evaluate(self, n):
        """Exact value of the denoted sequence at index ``n``."""
        d = self.den.evaluate(n)
        if not d:
            raise DivisionByZero(f"denominator vanishes at n={n}")
        return self.num.evaluate(n) / d

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            if self.den == _ONE:
                return Hyperreal._trusted(self.num + other.num, _ONE)
            return Hyperreal(self.num + other.num, self.den)
        return Hyperreal(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return Hyperreal._trusted(-self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.den == _ONE and other.den == _ONE:
            return Hyperreal._trusted(self.num * other.num, _ONE)
        return Hyperreal(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def reciprocal(self):
        if self.num.is_zero():
            raise DivisionByZero("reciprocal of the zero germ")
        return Hyperreal(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            raise DivisionByZero("division by the zero germ")
        return Hyperreal(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return pow_int(self, k)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- order -----------------------------------------------------------------

    def sign(self):
        # den is normalized to a positive dominant coefficient
        return self.num.sign() * self.den.sign()

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return self.num == other.num
        return (self.num * other.den - other.num * self.den).is_zero()

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return (self - other).sign() < 0

    def __hash__(self):
        if self.num.is_zero():
            return hash(0)
        q = self.as_rational()
        if q is not None:
            return hash(q)
        nb, nd = self.num.scale_key()
        db, dd = self.den.scale_key()
        lead = self.num.leading_coefficient() / self.den.leading_coefficient()
        return hash((nb / db, nd - dd, lead))

    # -- presentation ------------------------------------------------------------

    def format(self, symbol="H"):
        top = self.num.format(symbol)
        if self.den == _ONE:
            return top
        if _is_sum(self.num):
            top = f"({top})"
        bottom = self.den.format(symbol)
        if not re.fullmatch(rf"{symbol}(\^\d+)?", bottom):
            bottom = f"({bottom})"
        return f"{top}/{bottom}"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Hyperreal({self.format()!r})"


def _is_sum(ep):
    return sum(1 for _, p in ep.terms for c in p if c) > 1


def _coerce(x):
    if isinstance(x, Hyperreal):
        return x
    if isinstance(x, Hypernat):
        return x.to_hyperreal()
    if isinstance(x, numbers.Rational):
        return from_rational(x)
    return NotImplemented


@total_ordering
@dataclass(frozen=True)
class Hypernat:
    """Affine hypernatural ``a*H + c``, eventually positive."""

    a: int
    c: int

    def __post_init__(self):
        if self.a < 0 or (self.a == 0 and self.c < 1):
            raise ValueError(f"{self.a}*H{self.c:+d} is not eventually positive")

    def is_finite(self):
        return self.a == 0

    def __lt__(self, other):
        if isinstance(other, int):
            other = (0, other)
        elif isinstance(other, Hypernat):
            other = (other.a, other.c)
        else:
            return NotImplemented
        return (self.a, self.c) < other

    def __add__(self, k):
        if isinstance(k, Hypernat):
            return Hypernat(self.a + k.a, self.c + k.c)
        if isinstance(k, int):
            return Hypernat(self.a, self.c + k)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, k):
        if isinstance(k, int):
            return Hypernat(self.a, self.c - k)
        return NotImplemented

    def to_hyperreal(self):
        return Hyperreal._trusted(ExpPoly({1: (Fraction(self.c), Fraction(self.a))}), _ONE)

    def evaluate(self, n):
        return self.a * n + self.c

    def format(self, symbol="H"):
        if self.a == 0:
            return str(self.c)
        head = symbol if self.a == 1 else f"{self.a}*{symbol}"
        return head if self.c == 0 else f"{head}{self.c:+d}"

    def __str__(self):
        return self.format()

    @classmethod
    def parse(cls, text, symbol="H"):
        return cls(*parse_affine(text, symbol))


_AFFINE = r"\s*(?:([+-]?\d+)\s*\*?\s*)?{sym}\s*(?:([+-])\s*(\d+))?\s*|\s*([+-]?\d+)\s*"


def parse_affine(text, symbol="H"):
    """Parse ``[k][*]H[(+|-)c]`` or a bare integer into ``(a, c)``."""
    from ..errors import NotationError

    m = re.fullmatch(_AFFINE.format(sym=re.escape(symbol)), text)
    if not m:
        raise NotationError(f"expected an affine expression in {symbol}", text, 0)
    if m.group(4) is not None:
        return 0, int(m.group(4))
    a = int(m.group(1)) if m.group(1) is not None else 1
    c = int(m.group(3)) if m.group(3) is not None else 0
    if m.group(2) == "-":
        c = -c
    return a, c


# -- operations ------------------------------------------------------------------


def from_rational(q):
    return Hyperreal._trusted(ExpPoly.constant(q), _ONE)


def hypernat_H():
    return Hypernat(1, 0)


H = Hyperreal._trusted(ExpPoly.monomial(1, 1), _ONE)


def add(x, y):
    return _coerce(x) + y


def sub(x, y):
    return _coerce(x) - y


def mul(x, y):
    return _coerce(x) * y


def div(x, y):
    return _coerce(x) / y


def sign(x):
    return _coerce(x).sign()


def compare(x, y):
    s = (_coerce(x) - _coerce(y)).sign()
    return Ordering.LESS if s < 0 else Ordering.GREATER if s > 0 else Ordering.EQUAL


def classify(x):
    x = _coerce(x)
    if x.num.is_zero():
        return Classification.ZERO
    top, bottom = x.num.scale_key(), x.den.scale_key()
    if top < bottom:
        return Classification.INFINITESIMAL
    if top > bottom:
        return Classification.INFINITE
    return Classification.NONZERO_LIMITED


def st(x):
    """Standard part: the rational infinitely close to a limited germ."""
    x = _coerce(x)
    kind = classify(x)
    if kind is Classification.INFINITE:
        raise InfiniteArgument(f"st is undefined for the infinite germ {x}")
    if kind is Classification.NONZERO_LIMITED:
        return to_fraction(x.num.leading_coefficient() / x.den.leading_coefficient())
    return Fraction(0)


def halo_equiv(x, y):
    return classify(_coerce(x) - _coerce(y)) in (Classification.ZERO, Classification.INFINITESIMAL)


def pow_int(x, k):
    x = _coerce(x)
    if k < 0:
        if x.is_zero():
            raise DivisionByZero("negative power of the zero germ")
        x, k = x.reciprocal(), -k
    result = from_rational(1)
    while k:
        if k & 1:
            result = result * x
        k >>= 1
        if k:
            x = x * x
    return result


def pow_base(b, e):
    """``b**e`` for a positive rational base and affine exponent ``a*H + c``.

    ``e`` may be a :class:`Hypernat`, an int, or an ``(a, c)`` pair; unlike
    Hypernat the pair form accepts any integers (``0*H + 0`` gives 1).
    """
    b = Q(b)
    if b <= 0:
        raise NonPositiveBase(f"base {b} is not positive")
    if isinstance(e, Hypernat):
        a, c = e.a, e.c
    elif isinstance(e, int):
        a, c = 0, e
    else:
        a, c = e
    return Hyperreal._trusted(ExpPoly.monomial(b ** c, 0, b ** a), _ONE)


def floor_limited(x):
    """Eventual floor of the denoted sequence for a non-infinite germ."""
    x = _coerce(x)
    limit = st(x)
    if limit.denominator != 1:
        return math.floor(limit)
    below = (x - limit).sign() < 0
    return int(limit) - 1 if below else int(limit)
