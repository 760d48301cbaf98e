"""Seeded property suites for the ordered-field laws and standard part.

Each law draws its cases from ``random.Random(f"{seed}:{name}")``, so a
(seed, cases) pair fixes every generated germ regardless of which laws run
or in which order.
"""
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .germ import (
    Classification,
    ExpPoly,
    Hyperreal,
    classify,
    from_rational,
    halo_equiv,
    pow_base,
    st,
)

BASES = (Fraction(1, 10), Fraction(1, 2), Fraction(1), Fraction(2))


@dataclass(frozen=True)
class Ops:
    """The field operations under test; swap one out to build a mutant."""

    add: Callable = lambda x, y: x + y
    sub: Callable = lambda x, y: x - y
    mul: Callable = lambda x, y: x * y
    div: Callable = lambda x, y: x / y


DEFAULT_OPS = Ops()


def random_exppoly(rng, max_terms=2, max_degree=2):
    mapping = {}
    for base in rng.sample(BASES, rng.randint(1, max_terms)):
        deg = rng.randint(0, max_degree)
        coeffs = [rng.randint(-4, 4) for _ in range(deg)]
        coeffs.append(rng.choice((-3, -2, -1, 1, 2, 3)))
        mapping[base] = tuple(coeffs)
    return ExpPoly(mapping)


def random_germ(rng):
    roll = rng.random()
    if roll < 0.15:
        return from_rational(Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
    num = random_exppoly(rng)
    if roll < 0.6:
        den = ExpPoly.monomial(rng.choice((1, 2, 3, -1)), 0, rng.choice(BASES))
    else:
        den = random_exppoly(rng, 2, 1)
    return Hyperreal(num, den)


def random_limited_germ(rng):
    x = random_germ(rng)
    return x.reciprocal() if classify(x) is Classification.INFINITE else x


def random_near(rng, x):
    """A germ in the halo of ``x`` about half the time."""
    if rng.random() < 0.5:
        return random_germ(rng)
    eps = pow_base(rng.choice((Fraction(1, 10), Fraction(1, 2))), (1, 0)) * rng.randint(-3, 3)
    return x + eps


@dataclass(frozen=True)
class Law:
    name: str
    arity: int
    holds: Callable
    limited: bool = False
    chained: bool = False  # later arguments drawn near the previous one

    def sample(self, rng):
        draw = random_limited_germ if self.limited else random_germ
        xs = [draw(rng)]
        for _ in range(self.arity - 1):
            xs.append(random_near(rng, xs[-1]) if self.chained else draw(rng))
        return xs


def _trichotomy(o, x, y):
    return [x < y, x == y, y < x].count(True) == 1


def _implies(a, b):
    return (not a) or b


def _mul_inverse(o, x):
    return x.is_zero() or o.mul(x, o.div(1, x)) == 1


ORDERED_FIELD_LAWS = (
    Law("add_associative", 3, lambda o, x, y, z: o.add(o.add(x, y), z) == o.add(x, o.add(y, z))),
    Law("add_commutative", 2, lambda o, x, y: o.add(x, y) == o.add(y, x)),
    Law("mul_associative", 3, lambda o, x, y, z: o.mul(o.mul(x, y), z) == o.mul(x, o.mul(y, z))),
    Law("mul_commutative", 2, lambda o, x, y: o.mul(x, y) == o.mul(y, x)),
    Law("distributive", 3, lambda o, x, y, z: o.mul(x, o.add(y, z)) == o.add(o.mul(x, y), o.mul(x, z))),
    Law("add_identity", 1, lambda o, x: o.add(x, 0) == x),
    Law("mul_identity", 1, lambda o, x: o.mul(x, 1) == x),
    Law("add_inverse", 1, lambda o, x: o.add(x, o.sub(0, x)) == 0),
    Law("mul_inverse", 1, _mul_inverse),
    Law("trichotomy", 2, _trichotomy),
    Law("order_translation", 3, lambda o, x, y, z: _implies(x < y, o.add(x, z) < o.add(y, z))),
    Law("order_product", 2, lambda o, x, y: _implies(0 < x and 0 < y, 0 < o.mul(x, y))),
)

STANDARD_PART_LAWS = (
    Law("st_additive", 2, lambda o, x, y: st(o.add(x, y)) == st(x) + st(y), limited=True),
    Law("st_multiplicative", 2, lambda o, x, y: st(o.mul(x, y)) == st(x) * st(y), limited=True),
    Law("st_monotone", 2, lambda o, x, y: _implies(x <= y, st(x) <= st(y)), limited=True),
    Law("st_residual", 1,
        lambda o, x: classify(o.sub(x, st(x))) in (Classification.ZERO, Classification.INFINITESIMAL),
        limited=True),
    Law("halo_reflexive", 1, lambda o, x: halo_equiv(x, x)),
    Law("halo_symmetric", 2, lambda o, x, y: halo_equiv(x, y) == halo_equiv(y, x), chained=True),
    Law("halo_transitive", 3,
        lambda o, x, y, z: _implies(halo_equiv(x, y) and halo_equiv(y, z), halo_equiv(x, z)),
        chained=True),
)

ALL_LAWS = ORDERED_FIELD_LAWS + STANDARD_PART_LAWS


@dataclass
class LawResult:
    name: str
    cases: int
    failures: int = 0
    counterexample: tuple = None
    case_index: int = None
    error: str = None

    @property
    def passed(self):
        return self.failures == 0

    def format(self):
        if self.passed:
            return f"PASS {self.name} ({self.cases} cases)"
        args = ", ".join(f"x{i + 1} = {x}" for i, x in enumerate(self.counterexample))
        why = f" raised {self.error}" if self.error else ""
        return (f"FAIL {self.name} ({self.failures}/{self.cases} cases failed); "
                f"first counterexample at case {self.case_index}{why}: {args}")

    def as_dict(self):
        out = {"law": self.name, "cases": self.cases, "passed": self.passed, "failures": self.failures}
        if not self.passed:
            out["case_index"] = self.case_index
            out["counterexample"] = [str(x) for x in self.counterexample]
            if self.error:
                out["error"] = self.error
        return out


def check_law(law, seed, cases, ops=DEFAULT_OPS):
    rng = random.Random(f"{seed}:{law.name}")
    result = LawResult(law.name, cases)
    for i in range(cases):
        xs = law.sample(rng)
        try:
            ok = law.holds(ops, *xs)
            err = None
        except Exception as exc:  # a law that raises is a failed case
            ok, err = False, f"{type(exc).__name__}: {exc}"
        if not ok:
            result.failures += 1
            if result.counterexample is None:
                result.counterexample, result.case_index, result.error = tuple(xs), i, err
    return result


def _check_star(args):
    law, seed, cases, ops = args
    return check_law(law, seed, cases, ops)


def run_laws(seed=0, cases=1000, ops=DEFAULT_OPS, laws=ALL_LAWS, workers=1):
    """Check each law; results come back in suite order."""
    jobs = [(law, seed, cases, ops) for law in laws]
    if workers > 1 and ops is DEFAULT_OPS:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(_check_star, jobs))
    return [_check_star(job) for job in jobs]
