"""Closed-form sequences: evaluation, ultralimits, real limits, hyperfinite sums."""
import enum
from fractions import Fraction

from .errors import DivisionByZero, UnsupportedForm
from .expr import Node, PowBase, Var, interpret, parse_expr
from .germ import (
    Classification,
    Hypernat,
    Hyperreal,
    classify,
    from_rational,
    germ_of,
    pow_base,
    st,
)

SeqExpr = Node
n = Var()


class Divergence(enum.Enum):
    UNBOUNDED = "Unbounded"
    DIVERGES = "Diverges"

    def __str__(self):
        return self.value


def parse_sequence(text):
    """Parse a sequence expression in the variable ``n``."""
    return parse_expr(text, "n")


def geometric(base, a=1, c=0):
    """Sequence node ``base ** (a*n + c)``."""
    return PowBase(Fraction(base), a, c)


def eval_at(u, index):
    """Exact value of ``u`` at the natural ``index``."""
    index = Fraction(index)
    try:
        return interpret(u, index, lambda b, a, c: b ** (a * index.numerator + c))
    except DivisionByZero as exc:
        raise DivisionByZero(f"{exc} at n={index}") from None


def ultralimit(u):
    """Germ obtained by substituting the infinite H for n."""
    return germ_of(u)


def real_limit(u):
    """The ordinary limit as a Fraction, or Divergence.UNBOUNDED."""
    x = ultralimit(u)
    if classify(x) is Classification.INFINITE:
        return Divergence.UNBOUNDED
    return st(x)


def _faulhaber(d, m):
    # sum_{k=1}^{m} k**d for d <= 3; m may be a germ
    if d == 0:
        return m
    if d == 1:
        return m * (m + 1) / 2
    if d == 2:
        return m * (m + 1) * (2 * m + 1) / 6
    return (m * (m + 1) / 2) ** 2


def _term_pieces(term):
    x = term if isinstance(term, Hyperreal) else ultralimit(term)
    if x.den.as_constant() != 1:
        raise UnsupportedForm(f"summand {x} is not a sum of c*r^n and c*n^d pieces")
    pieces = []
    for base, poly in x.num.terms:
        if base == 1:
            if len(poly) > 4:
                raise UnsupportedForm(f"power sums are supported up to degree 3, got {len(poly) - 1}")
            pieces.extend(("power", d, c) for d, c in enumerate(poly) if c)
        elif len(poly) > 1:
            raise UnsupportedForm(f"mixed term n^k*({base})^n is not supported")
        else:
            pieces.append(("geometric", base, poly[0]))
    return pieces


def hyperfinite_sum(term, upper):
    """Closed form of ``sum(term(n) for n = 1..upper)`` with ``upper = a*H + c``.

    ``term`` is a sequence expression (or its germ) made of pieces
    ``c * r**n`` and ``c * n**d`` with ``d <= 3``.
    """
    if isinstance(upper, int):
        upper = Hypernat(0, upper)
    m = upper.to_hyperreal()
    total = from_rational(0)
    for kind, key, coeff in _term_pieces(term):
        if kind == "power":
            total = total + coeff * _faulhaber(key, m)
        else:
            r = key
            total = total + coeff * r * (1 - pow_base(r, upper)) / (1 - r)
    return total


def direct_sum(term, upper_value):
    """Term-by-term sum for n = 1..upper_value; the oracle for hyperfinite_sum."""
    return sum((eval_at(term, k) for k in range(1, upper_value + 1)), Fraction(0))
