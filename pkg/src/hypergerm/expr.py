"""Expression trees and the shared arithmetic grammar.

The same grammar reads germ expressions (variable ``H``) and sequence
expressions (variable ``n``)::

    expr   := term (('+'|'-') term)*
    term   := unary (('*'|'/') unary)*
    unary  := '-' unary | factor
    factor := atom ('^' ['-'] int)?
    atom   := number | VAR | 'pow(' rational ',' affine ')' | '(' expr ')'
    affine := [int] ['*'] VAR [('+'|'-') int] | ['-'] int
"""
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, NotationError


class Node:
    __slots__ = ()

    def __add__(self, other):
        return Add(self, _lift(other))

    def __radd__(self, other):
        return Add(_lift(other), self)

    def __sub__(self, other):
        return Sub(self, _lift(other))

    def __rsub__(self, other):
        return Sub(_lift(other), self)

    def __mul__(self, other):
        return Mul(self, _lift(other))

    def __rmul__(self, other):
        return Mul(_lift(other), self)

    def __truediv__(self, other):
        return Div(self, _lift(other))

    def __rtruediv__(self, other):
        return Div(_lift(other), self)

    def __neg__(self):
        return Neg(self)

    def __pow__(self, k):
        return Power(self, k)


def _lift(x):
    return x if isinstance(x, Node) else Const(Fraction(x))


@dataclass(frozen=True)
class Const(Node):
    value: Fraction

    def format(self, var):
        v = self.value
        return str(v) if v.denominator == 1 and v >= 0 else f"({v})"


@dataclass(frozen=True)
class Var(Node):
    def format(self, var):
        return var


@dataclass(frozen=True)
class Add(Node):
    left: Node
    right: Node

    def format(self, var):
        return f"({self.left.format(var)} + {self.right.format(var)})"


@dataclass(frozen=True)
class Sub(Node):
    left: Node
    right: Node

    def format(self, var):
        return f"({self.left.format(var)} - {self.right.format(var)})"


@dataclass(frozen=True)
class Mul(Node):
    left: Node
    right: Node

    def format(self, var):
        return f"{self.left.format(var)}*{self.right.format(var)}"


@dataclass(frozen=True)
class Div(Node):
    left: Node
    right: Node

    def format(self, var):
        return f"{self.left.format(var)}/({self.right.format(var)})"


@dataclass(frozen=True)
class Neg(Node):
    operand: Node

    def format(self, var):
        return f"(-{self.operand.format(var)})"


@dataclass(frozen=True)
class Power(Node):
    operand: Node
    exponent: int

    def format(self, var):
        return f"({self.operand.format(var)})^{self.exponent}"


@dataclass(frozen=True)
class PowBase(Node):
    """``base ** (a*var + c)``."""

    base: Fraction
    a: int
    c: int

    def format(self, var):
        if self.a == 0:
            exp = str(self.c)
        else:
            exp = var if self.a == 1 else f"{self.a}*{var}"
            if self.c:
                exp += f"{self.c:+d}"
        return f"pow({self.base},{exp})"


def interpret(node, var_value, pow_base):
    """Fold ``node`` with Python arithmetic on whatever ``var_value`` is."""
    if isinstance(node, Const):
        return node.value
    if isinstance(node, Var):
        return var_value
    if isinstance(node, PowBase):
        return pow_base(node.base, node.a, node.c)
    if isinstance(node, Neg):
        return -interpret(node.operand, var_value, pow_base)
    if isinstance(node, Power):
        x = interpret(node.operand, var_value, pow_base)
        if node.exponent < 0 and not x:
            raise DivisionByZero("negative power of zero")
        return x ** node.exponent
    left = interpret(node.left, var_value, pow_base)
    right = interpret(node.right, var_value, pow_base)
    if isinstance(node, Add):
        return left + right
    if isinstance(node, Sub):
        return left - right
    if isinstance(node, Mul):
        return left * right
    if not right:
        raise DivisionByZero("division by zero")
    return left / right


# -- parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|([A-Za-z_]+)|(.))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.end() == pos or not m.group(0).strip():
            break
        start = m.start(m.lastindex)
        kind = ("num", "name", "sym")[m.lastindex - 1]
        tokens.append((kind, m.group(m.lastindex), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, var):
        self.text = text
        self.var = var
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise NotationError(message, self.text, tok[2])

    def expect(self, value):
        tok = self.take()
        if tok[1] != value:
            self.fail(f"expected {value!r}", tok)
        return tok

    def accept(self, value):
        if self.peek()[1] == value and self.peek()[0] != "num":
            return self.take()
        return None

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        node = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return node

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "sym":
            op = self.take()[1]
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self):
        node = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "sym":
            op = self.take()[1]
            rhs = self.unary()
            node = Mul(node, rhs) if op == "*" else Div(node, rhs)
        return node

    def unary(self):
        if self.accept("-"):
            return Neg(self.unary())
        return self.factor()

    def factor(self):
        node = self.atom()
        if self.accept("^"):
            negative = bool(self.accept("-"))
            tok = self.take()
            if tok[0] != "num" or "." in tok[1]:
                self.fail("expected an integer exponent", tok)
            k = int(tok[1])
            node = Power(node, -k if negative else k)
        return node

    def integer(self):
        negative = bool(self.accept("-"))
        tok = self.take()
        if tok[0] != "num" or "." in tok[1]:
            self.fail("expected an integer", tok)
        return -int(tok[1]) if negative else int(tok[1])

    def atom(self):
        tok = self.peek()
        if tok[0] == "num":
            self.take()
            return Const(Fraction(tok[1]))
        if tok[0] == "name":
            if tok[1] == self.var:
                self.take()
                return Var()
            if tok[1] == "pow":
                return self.pow_atom()
            self.fail(f"unknown name {tok[1]!r}")
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        self.fail("expected a number, variable, pow(...) or '('")

    def pow_atom(self):
        self.take()
        self.expect("(")
        base = Fraction(self.integer())
        if self.accept("/"):
            base /= self.integer()
        self.expect(",")
        a, c = self.affine()
        self.expect(")")
        return PowBase(base, a, c)

    def affine(self):
        lead = -1 if self.accept("-") else 1
        tok = self.peek()
        if tok[0] == "name" and tok[1] == self.var:
            self.take()
            a = lead
        else:
            k = lead * self.integer()
            self.accept("*")
            nxt = self.peek()
            if not (nxt[0] == "name" and nxt[1] == self.var):
                return 0, k
            self.take()
            a = k
        c = 0
        if self.peek()[1] in ("+", "-") and self.peek()[0] == "sym":
            sign = -1 if self.take()[1] == "-" else 1
            c = sign * self.integer()
        return a, c


def parse_expr(text, var="H"):
    """Parse ``text`` into an expression tree over the variable ``var``."""
    return _Parser(text, var).parse()
