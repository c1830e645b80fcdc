from fractions import Fraction

import pytest
from hypothesis import strategies as st

from hyperred.polycore import Poly

ACCEPTANCE_LINES = []


def small_rats(max_den=4, bound=9):
    return st.builds(
        Fraction,
        st.integers(-bound, bound),
        st.integers(1, max_den),
    )


@st.composite
def polys(draw, max_deg=6, nonzero=False, coeffs=None):
    coeffs = coeffs or small_rats()
    deg = draw(st.integers(0 if nonzero else -1, max_deg))
    if deg < 0:
        return Poly()
    cs = [draw(coeffs) for _ in range(deg)]
    lead = draw(coeffs.filter(lambda c: c != 0))
    return Poly(cs + [lead])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
