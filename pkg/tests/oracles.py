"""Independent numeric oracles.

Nothing here uses the dominance logic under test: they only evaluate
sequences at concrete indices with exact rationals.
"""
import math
from fractions import Fraction


def numeric_sign(v):
    return (v > 0) - (v < 0)


def eventual_sign(f, start=100, factor=10, limit=10**5):
    """Sign of ``f(n)`` once it agrees at three successive indices."""
    signs = []
    n = start
    while n <= limit:
        signs.append(numeric_sign(f(n)))
        if len(signs) >= 3 and signs[-1] == signs[-2] == signs[-3]:
            return signs[-1]
        n *= factor
    raise AssertionError(f"sign did not stabilize up to n={limit}: {signs}")


def decimal_digit(value, k):
    """k-th digit after the point of a nonnegative rational."""
    return math.floor(Fraction(value) * 10**k) % 10


def finite_decimal_value(integer_part, digits, tail_prefix=(), tail_period=()):
    """Value of ``integer_part.digits`` followed by an ordinary repeating tail."""
    v = Fraction(integer_part)
    for i, d in enumerate(digits, start=1):
        v += Fraction(d, 10**i)
    shift = len(digits)
    for i, d in enumerate(tail_prefix, start=1):
        v += Fraction(d, 10 ** (shift + i))
    shift += len(tail_prefix)
    if tail_period:
        p = len(tail_period)
        block = int("".join(map(str, tail_period)))
        v += Fraction(block, 10**shift * (10**p - 1))
    return v


def geometric_series(digit, terms):
    """Partial sums of digit * 10**-n, n = 1..terms."""
    return sum(Fraction(digit, 10**n) for n in range(1, terms + 1))
