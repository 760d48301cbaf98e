"""Repeating decimals and Lightstone-style extended decimals.

Extended decimal text attaches a digit group to a range of ranks::

    0.9{1..H}0{H+1..}          H nines, then zeros from rank H+1 on
    0.9{1..H}(123){H+1..}      H nines, then 123 repeating
    0.9{1..}                   nines at every rank, finite or not

Grammar::

    extdec  := ['-'] int ([.,] segment+)?
    segment := group '{' range '}'
    group   := digit+ | '(' digit+ ')'
    range   := bound '..' bound?
    bound   := nat | 'H' (('+'|'-') nat)?

A group repeats cyclically from the start of its range.  The final
segment must be open-ended; a closed final segment gets a zero tail.
The repeating shorthand ``0.58(3)`` is accepted wherever extended text is.
"""
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotationError, OutOfRange, UnsupportedForm
from .germ import Classification, Hypernat, Hyperreal, classify, floor_limited, from_rational, pow_base
from .germ.exppoly import to_fraction

_TENTH = Fraction(1, 10)
_REPEATING = re.compile(r"\s*([+-])?(\d+)(?:[.,](\d*)(?:\((\d+)\))?)?\s*")


def _primitive_root(group):
    p = len(group)
    for k in range(1, p + 1):
        if p % k == 0 and group[:k] * (p // k) == group:
            return group[:k]
    return group


def _digits_value(digits):
    return int("".join(map(str, digits))) if digits else 0


@dataclass(frozen=True)
class RepeatingDecimal:
    negative: bool
    integer_part: int
    prefix: tuple
    period: tuple = ()

    def __post_init__(self):
        if self.integer_part < 0:
            raise ValueError("integer_part must be a natural number")
        if any(d not in range(10) for d in self.prefix + self.period):
            raise ValueError("digits must lie in 0..9")

    def canonical(self):
        """Minimal period and minimal prefix; ``(0)`` periods are dropped."""
        prefix, period = tuple(self.prefix), _primitive_root(tuple(self.period))
        if period == (0,):
            period = ()
        while prefix and period and prefix[-1] == period[-1]:
            period = (prefix[-1],) + period[:-1]
            prefix = prefix[:-1]
        if not period:
            while prefix and prefix[-1] == 0:
                prefix = prefix[:-1]
        negative = self.negative and bool(self.integer_part or any(prefix) or any(period))
        return RepeatingDecimal(negative, self.integer_part, prefix, period)

    def value(self):
        m, p = len(self.prefix), len(self.period)
        v = Fraction(self.integer_part) + Fraction(_digits_value(self.prefix), 10 ** m)
        if p:
            v += Fraction(_digits_value(self.period), 10 ** m * (10 ** p - 1))
        return -v if self.negative else v

    def __str__(self):
        text = ("-" if self.negative else "") + str(self.integer_part)
        if self.prefix or self.period:
            text += "." + "".join(map(str, self.prefix))
            if self.period:
                text += "(" + "".join(map(str, self.period)) + ")"
        return text

    @classmethod
    def from_rational(cls, q):
        """Canonical expansion by long division (never ends in nines)."""
        q = Fraction(q)
        negative = q < 0
        q = abs(q)
        whole, rem = divmod(q.numerator, q.denominator)
        den = q.denominator
        digits, seen = [], {}
        while rem and rem not in seen:
            seen[rem] = len(digits)
            d, rem = divmod(rem * 10, den)
            digits.append(d)
        if rem:
            start = seen[rem]
            return cls(negative, whole, tuple(digits[:start]), tuple(digits[start:]))
        return cls(negative, whole, tuple(digits), ())


def parse_repeating(text):
    m = _REPEATING.fullmatch(text)
    if not m:
        raise NotationError("expected a repeating decimal like 0.58(3)", text, 0)
    sign, whole, prefix, period = m.groups()
    return RepeatingDecimal(
        sign == "-",
        int(whole),
        tuple(int(c) for c in prefix or ""),
        tuple(int(c) for c in period or ""),
    ).canonical()


def repeating_to_rational(d):
    """Exact value of a repeating decimal (object or text)."""
    if isinstance(d, str):
        d = parse_repeating(d)
    return d.value()


# -- extended decimals ----------------------------------------------------------------


@dataclass(frozen=True)
class Segment:
    """Digits ``group`` cycling over ranks ``start..end``; ``end=None`` is open."""

    start: Hypernat
    end: Hypernat = None
    group: tuple = (0,)

    def length(self):
        """Number of ranks covered as an (a, c) pair, or None when open."""
        if self.end is None:
            return None
        return self.end.a - self.start.a, self.end.c - self.start.c + 1

    def digit(self, rank):
        offset_a, offset_c = rank.a - self.start.a, rank.c - self.start.c
        p = len(self.group)
        if offset_a and p > 1:
            raise UnsupportedForm("digit phase at an infinite offset is undetermined")
        return self.group[offset_c % p]

    def format(self):
        g = "".join(map(str, self.group))
        if len(g) > 1 and self.length() != (0, len(g)):
            g = f"({g})"
        end = "" if self.end is None else self.end.format()
        return f"{g}{{{self.start.format()}..{end}}}"


@dataclass(frozen=True)
class ExtendedDecimal:
    integer_part: int
    segments: tuple
    negative: bool = False

    def digit(self, rank):
        """Digit at a finite (int) or hypernatural rank."""
        if isinstance(rank, int):
            rank = Hypernat(0, rank)
        for seg in self.segments:
            if seg.start <= rank and (seg.end is None or rank <= seg.end):
                return seg.digit(rank)
        raise OutOfRange(f"rank {rank} is not covered")

    def __str__(self):
        return render_extended(self)


def _canonical_segments(segments):
    segs = list(segments)
    if not segs:
        return (Segment(Hypernat(0, 1), None, (0,)),)
    expected = Hypernat(0, 1)
    for i, seg in enumerate(segs):
        if seg.start != expected:
            raise UnsupportedForm(f"segment {i + 1} starts at rank {seg.start}, expected {expected}")
        if seg.end is None:
            if i != len(segs) - 1:
                raise UnsupportedForm("only the final segment may be open-ended")
            break
        if seg.end < seg.start:
            raise UnsupportedForm(f"empty rank range {seg.start}..{seg.end}")
        expected = seg.end + 1
    if segs[-1].end is not None:
        segs.append(Segment(segs[-1].end + 1, None, (0,)))

    cleaned = []
    for seg in segs:
        group = tuple(seg.group)
        length = seg.length()
        if length is not None and length[0] == 0:
            expanded = tuple(group[j % len(group)] for j in range(length[1]))
            group = _primitive_root(expanded)
        else:
            group = _primitive_root(group)
            if length is not None and len(group) > 1:
                raise UnsupportedForm(
                    "a multi-digit group over an infinite closed range has no determined value")
        cleaned.append(Segment(seg.start, seg.end, group))

    merged = [cleaned[0]]
    for seg in cleaned[1:]:
        prev = merged[-1]
        plen = prev.length()
        aligned = len(prev.group) == 1 or (plen[0] == 0 and plen[1] % len(prev.group) == 0)
        if prev.group == seg.group and aligned:
            merged[-1] = Segment(prev.start, seg.end, prev.group)
        else:
            merged.append(seg)
    return tuple(merged)


def make_extended(integer_part, segments, negative=False):
    """Build a canonical ExtendedDecimal from raw segments."""
    segs = _canonical_segments(segments)
    if negative and integer_part == 0 and all(set(s.group) == {0} for s in segs):
        negative = False
    return ExtendedDecimal(integer_part, segs, negative)


def _from_repeating(rd):
    segs = []
    m = len(rd.prefix)
    if m:
        segs.append(Segment(Hypernat(0, 1), Hypernat(0, m), rd.prefix))
    segs.append(Segment(Hypernat(0, m + 1), None, rd.period or (0,)))
    return make_extended(rd.integer_part, segs, rd.negative)


class _ExtParser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def fail(self, message):
        raise NotationError(message, self.text, self.pos)

    def peek(self):
        return self.text[self.pos:self.pos + 1]

    def eat(self, s):
        if self.text.startswith(s, self.pos):
            self.pos += len(s)
            return True
        return False

    def digits(self):
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected digits")
        return self.text[start:self.pos]

    def bound(self):
        if self.eat("H"):
            c = 0
            if self.peek() in ("+", "-"):
                sign = -1 if self.text[self.pos] == "-" else 1
                self.pos += 1
                c = sign * int(self.digits())
            at = self.pos
            try:
                return Hypernat(1, c)
            except ValueError:
                self.pos = at
                self.fail("rank must be positive")
        at = self.pos
        k = int(self.digits())
        if k < 1:
            self.pos = at
            self.fail("ranks start at 1")
        return Hypernat(0, k)

    def segment(self):
        if self.eat("("):
            group = self.digits()
            if not self.eat(")"):
                self.fail("expected ')'")
        else:
            group = self.digits()
        if not self.eat("{"):
            self.fail("expected '{'")
        start = self.bound()
        if not self.eat(".."):
            self.fail("expected '..'")
        end = None if self.peek() == "}" else self.bound()
        if not self.eat("}"):
            self.fail("expected '}'")
        return Segment(start, end, tuple(int(c) for c in group))

    def parse(self):
        self.text = self.text.strip()
        negative = self.eat("-")
        whole = int(self.digits())
        segments = []
        if self.peek() in (".", ","):
            self.pos += 1
            segments.append(self.segment())
            while self.pos < len(self.text):
                segments.append(self.segment())
        if self.pos != len(self.text):
            self.fail("unexpected trailing text")
        return make_extended(whole, segments, negative)


def parse_extended(text):
    """Parse extended-decimal text (or the ``0.58(3)`` shorthand)."""
    if "{" not in text:
        return _from_repeating(parse_repeating(text))
    return _ExtParser(text).parse()


def _rank_power(start):
    # 10**-(start - 1) for a rank start = a*H + c
    return pow_base(_TENTH, (start.a, start.c - 1))


def extended_value(d):
    """Exact germ denoted by an extended decimal."""
    total = from_rational(d.integer_part)
    for seg in d.segments:
        p = len(seg.group)
        g = _digits_value(seg.group)
        length = seg.length()
        if length is None:
            part = Fraction(g, 10 ** p - 1) * _rank_power(seg.start)
        elif length[0] == 0:
            digits = tuple(seg.group[j % p] for j in range(length[1]))
            part = Fraction(_digits_value(digits), 10 ** length[1]) * _rank_power(seg.start)
        elif p == 1:
            shortfall = pow_base(_TENTH, length)
            part = Fraction(g, 9) * _rank_power(seg.start) * (1 - shortfall)
        else:
            raise UnsupportedForm("multi-digit group over an infinite closed range")
        total = total + part
    return -total if d.negative else total


def render_extended(d):
    head = ("-" if d.negative else "") + str(d.integer_part)
    return head + "." + "".join(seg.format() for seg in d.segments)


def digit_at(x, k):
    """Digit at finite rank ``k`` of a germ in [0, 1)."""
    if not isinstance(x, Hyperreal):
        x = from_rational(x)
    if k < 1:
        raise OutOfRange(f"rank {k} is not a positive integer")
    if classify(x) is Classification.INFINITE or x.sign() < 0 or not x < 1:
        raise OutOfRange(f"{x} is outside [0, 1)")
    return floor_limited(x * 10 ** k) % 10


def _split_decimal_germ(x):
    """Write ``x`` as ``q + r * 10**-H``; UnsupportedForm otherwise."""
    if x.den.as_constant() != 1:
        raise UnsupportedForm(f"{x} is not an exponential-polynomial germ")
    q, r = Fraction(0), Fraction(0)
    for base, poly in x.num.terms:
        if len(poly) > 1:
            raise UnsupportedForm(f"{x} has polynomial growth in H")
        if base == 1:
            q = to_fraction(poly[0])
        elif base == _TENTH:
            r = to_fraction(poly[0])
        elif base.numerator == 1 and str(base.denominator).rstrip("0") == "1":
            raise UnsupportedForm(f"{x} uses more than one infinite decimal scale")
        else:
            raise UnsupportedForm(f"{x} has a non-decimal infinite part")
    return q, r


def _largest_exponent(r, bound, inclusive):
    # largest integer c with r * 10**c < bound (or <= when inclusive)
    def ok(c):
        v = r * Fraction(10) ** c
        return v <= bound if inclusive else v < bound

    c = 0
    while not ok(c):
        c -= 1
    while ok(c + 1):
        c += 1
    return c


def lightstone(x):
    """Extended decimal for ``q + r * 10**-H`` germs (see render_lightstone)."""
    if not isinstance(x, Hyperreal):
        x = from_rational(x)
    negative = x.sign() < 0
    if negative:
        x = -x
    q, r = _split_decimal_germ(x)
    rd = RepeatingDecimal.from_rational(q)
    if not r:
        return _from_repeating(RepeatingDecimal(negative, rd.integer_part, rd.prefix, rd.period))

    whole, prefix = rd.integer_part, list(rd.prefix)
    if len(rd.period) > 1:
        raise UnsupportedForm(
            f"{x}: a multi-digit period meets an infinite rank at an undetermined phase")
    if rd.period:
        tail_digit = rd.period[0]
    elif r > 0:
        tail_digit = 0
    else:
        # switch the terminating expansion to its nines form
        tail_digit = 9
        if prefix:
            prefix[-1] -= 1
        else:
            whole -= 1

    if r > 0:
        c = _largest_exponent(r, Fraction(9 - tail_digit, 9), inclusive=False)
    else:
        c = _largest_exponent(-r, Fraction(tail_digit, 9), inclusive=True)
    tail = Fraction(tail_digit, 9) + r * Fraction(10) ** c
    td = RepeatingDecimal.from_rational(tail)

    m = len(prefix)
    boundary = Hypernat(1, c)
    segs = []
    if m:
        segs.append(Segment(Hypernat(0, 1), Hypernat(0, m), tuple(prefix)))
    segs.append(Segment(Hypernat(0, m + 1), boundary, (tail_digit,)))
    if td.prefix:
        segs.append(Segment(boundary + 1, boundary + len(td.prefix), td.prefix))
    segs.append(Segment(boundary + len(td.prefix) + 1, None, td.period or (0,)))
    return make_extended(whole, segs, negative)


def render_lightstone(x):
    """Lightstone notation for a germ of the form ``q + r * 10**-H``.

    >>> from hypergerm.germ import parse_germ
    >>> render_lightstone(parse_germ("1 - pow(1/10,H)"))
    '0.9{1..H}0{H+1..}'
    """
    return render_extended(lightstone(x))
