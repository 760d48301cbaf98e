"""Exact arithmetic on the exponential-polynomial germ fragment of *R."""
from ..expr import interpret, parse_expr
from .exppoly import ExpPoly
from .hyperreal import (
    H,
    Classification,
    Hypernat,
    Hyperreal,
    Ordering,
    add,
    classify,
    compare,
    div,
    floor_limited,
    from_rational,
    halo_equiv,
    hypernat_H,
    mul,
    parse_affine,
    pow_base,
    pow_int,
    sign,
    st,
    sub,
)


def germ_of(node):
    """Evaluate an expression tree with its variable bound to H."""
    value = interpret(node, H, lambda b, a, c: pow_base(b, (a, c)))
    return value if isinstance(value, Hyperreal) else from_rational(value)


def parse_germ(text):
    """Parse a germ expression such as ``1 - pow(1/10, H)``."""
    return germ_of(parse_expr(text, "H"))


__all__ = [
    "H", "Classification", "ExpPoly", "Hypernat", "Hyperreal", "Ordering",
    "add", "classify", "compare", "div", "floor_limited", "from_rational",
    "germ_of", "halo_equiv", "hypernat_H", "mul", "parse_affine", "parse_germ",
    "pow_base", "pow_int", "sign", "st", "sub",
]
