from fractions import Fraction

from hypothesis import settings, strategies as st

from hypergerm.germ import ExpPoly, Hyperreal

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

BASES = [Fraction(1, 10), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3)]
small = st.integers(-5, 5)
nonzero = st.integers(-5, 5).filter(bool)


@st.composite
def exppolys(draw, max_terms=2, max_degree=2):
    bases = draw(st.lists(st.sampled_from(BASES), min_size=1, max_size=max_terms, unique=True))
    mapping = {}
    for b in bases:
        coeffs = draw(st.lists(small, max_size=max_degree))
        mapping[b] = tuple(coeffs) + (draw(nonzero),)
    return ExpPoly(mapping)


@st.composite
def germs(draw):
    num = draw(exppolys())
    if draw(st.booleans()):
        den = ExpPoly.monomial(draw(nonzero), 0, draw(st.sampled_from(BASES)))
    else:
        den = draw(exppolys(max_terms=2, max_degree=1))
    return Hyperreal(num, den)


rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 1000)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s.split()[2].rstrip(":"))):
        terminalreporter.write_line(line)
