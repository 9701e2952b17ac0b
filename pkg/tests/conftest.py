from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from affp1.algebra import LaurentPoly

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)
nonzero_rationals = rationals.filter(bool)


@st.composite
def laurent(draw, lo=-6, hi=6, var="u", max_terms=5):
    exps = draw(st.lists(st.integers(lo, hi), max_size=max_terms, unique=True))
    return LaurentPoly({e: draw(rationals) for e in exps}, var)


@st.composite
def polynomials(draw, max_deg=4):
    coeffs = draw(st.lists(rationals, max_size=max_deg + 1))
    return LaurentPoly.from_coeffs(coeffs)


@pytest.fixture
def u():
    return LaurentPoly.monomial


@pytest.fixture
def F():
    return Fraction


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
