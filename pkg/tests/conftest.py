from fractions import Fraction

from hypothesis import settings, strategies as st

from heckechar.qpoly import LaurentPoly, RationalFn

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

coeffs = st.integers(-6, 6)
laurent = st.dictionaries(st.integers(-4, 4), coeffs, max_size=5).map(LaurentPoly)
nonzero_laurent = laurent.filter(lambda p: not p.is_zero())
ratfns = st.builds(lambda a, b: RationalFn(a, b), laurent, nonzero_laurent)
rational_points = st.fractions(min_value=-5, max_value=5, max_denominator=7).filter(lambda x: x != 0)


def poly(s: str) -> LaurentPoly:
    """Parse the few shapes of literal used in tests: 'q^2-3q+1' style."""
    import re

    s = s.replace(" ", "")
    terms = {}
    for sign, coef, var, exp in re.findall(r"([+-]?)(\d*)(q?)(?:\^(-?\d+))?", s):
        if not coef and not var:
            continue
        c = int(coef) if coef else 1
        e = (int(exp) if exp else 1) if var else 0
        terms[e] = terms.get(e, 0) + (-c if sign == "-" else c)
    return LaurentPoly(terms)


__all__ = ["Fraction", "laurent", "nonzero_laurent", "poly", "ratfns", "rational_points"]


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[key])
