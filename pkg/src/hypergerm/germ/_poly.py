# Dense univariate polynomials over gmpy2 rationals, stored as coefficient tuples
# lowest degree first. The empty tuple is the zero polynomial; nonzero
# polynomials never carry trailing zeros.
from gmpy2 import mpq as Q

ZERO = ()
ONE = (Q(1),)


def trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


def const(c):
    c = Q(c)
    return (c,) if c else ZERO


def degree(p):
    return len(p) - 1


def add(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def neg(p):
    return tuple(-c for c in p)


def scale(p, c):
    if not c:
        return ZERO
    return tuple(a * c for a in p)


def mul(p, q):
    if not p or not q:
        return ZERO
    out = [Q(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return tuple(out)


def divmod_(p, q):
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quot = [Q(0)] * max(len(p) - len(q) + 1, 0)
    lead = q[-1]
    for shift in range(len(p) - len(q), -1, -1):
        c = rem[shift + len(q) - 1] / lead
        quot[shift] = c
        if c:
            for j, b in enumerate(q):
                rem[shift + j] -= c * b
    return trim(quot), trim(rem)


def monic(p):
    lead = p[-1]
    return p if lead == 1 else tuple(c / lead for c in p)


def gcd(p, q):
    """Monic gcd; gcd(0, 0) is 0."""
    while q:
        p, q = q, divmod_(p, q)[1]
    return monic(p) if p else ZERO


def evaluate(p, x):
    acc = Q(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc
