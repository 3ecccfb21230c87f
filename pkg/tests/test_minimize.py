import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from specinv import NumericalError
from specinv.minimize import bracket_minimum, golden_section


@settings(max_examples=80, deadline=None)
@given(c=st.floats(-5, 5), width=st.floats(0.5, 10))
def test_golden_finds_parabola_vertex(c, width):
    x, fx = golden_section(lambda t: (t - c) ** 2 + 1, c - width, c + 0.7 * width, 1e-10)
    # at a quadratic minimum f is flat to round-off within ~sqrt(eps) of the vertex
    assert abs(x - c) <= 1e-7 * max(1.0, abs(c))
    assert fx == pytest.approx(1.0)


def test_golden_on_boundary_minimum():
    x, _ = golden_section(lambda t: t, 0.0, 1.0, 1e-12)
    assert x < 1e-11


def test_bracket_then_refine():
    f = lambda u: math.exp(u) + 4 * math.exp(-u)
    a, m, c = bracket_minimum(f, 5.0, 0.5)
    assert a < m < c and f(m) < f(a) and f(m) < f(c)
    x, _ = golden_section(f, a, c, 1e-12)
    assert x == pytest.approx(math.log(2), abs=1e-7)


def test_bracket_fails_for_monotone():
    with pytest.raises(NumericalError):
        bracket_minimum(lambda u: u, 0.0, 1.0, lo=-10, hi=10)
