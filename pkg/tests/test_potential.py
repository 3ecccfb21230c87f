import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from specinv import OscBarrier, PotentialShape, Power, RangeError, Tabulated, evaluate, parse_shape, validate_transform


def test_evaluate_examples():
    assert evaluate(PotentialShape(OscBarrier(1, 1, 1)), 0.0) == 1.0
    assert evaluate(PotentialShape(OscBarrier(1, 1, 1)), 1.0) == 1.5
    assert evaluate(PotentialShape(Power(1)), 3.0) == 9.0


@settings(max_examples=60, deadline=None)
@given(
    a=st.floats(0.01, 10), b=st.floats(0.01, 10), c=st.floats(0.01, 10),
    x=st.lists(st.floats(-50, 50, allow_nan=False), min_size=1, max_size=20),
)
def test_shape_is_even_and_matches_formula(a, b, c, x):
    shape = PotentialShape(OscBarrier(a, b, c))
    x = np.array(x)
    fx = evaluate(shape, x)
    assert np.array_equal(fx, evaluate(shape, -x))
    direct = a * x**2 + b / (c + x**2)
    np.testing.assert_allclose(fx, direct, rtol=4 * np.finfo(float).eps, atol=0)


def test_power_shape_even():
    shape = PotentialShape(Power(2.5))
    x = np.linspace(-3, 3, 41)
    assert np.array_equal(shape(x), shape(-x))
    assert np.all(np.diff(shape(x[x >= 0])) > 0)


def test_validate_oscbarrier_on_small_grid():
    # second divided differences computed by hand, all positive
    y = np.array([0, 0.5, 1, 2, 4])
    g = y + 1 / (1 + y)
    slope = np.diff(g) / np.diff(y)
    assert np.all(2 * np.diff(slope) / (y[2:] - y[:-2]) > 0)
    assert validate_transform(OscBarrier(1, 1, 1), y).accepted


def test_validate_reports_concave_table():
    t = Tabulated([0, 1, 2, 3], [0, 2, 3, 3.5])
    report = validate_transform(t)
    assert not report.accepted
    assert report.convexity == [1, 2]
    assert report.monotonicity == []
    assert "concave" in report.describe()


@pytest.mark.parametrize("grid", [None, [0, 1, 2, 3], np.linspace(0, 100, 57)])
def test_linear_power_is_accepted(grid):
    assert validate_transform(Power(1), grid).accepted


def test_validate_rejects_concave_power():
    report = validate_transform(Power(0.5))
    assert report.convexity and not report.monotonicity


def test_validate_reports_monotonicity():
    report = validate_transform(Tabulated([0, 1, 2, 3, 4], [1, 0.5, 1, 2, 4]))
    assert report.monotonicity == [0]


@pytest.mark.parametrize("a", [0.5, 1, 2])
@pytest.mark.parametrize("b", [0.5, 1, 2])
@pytest.mark.parametrize("c", [0.5, 1, 2])
def test_oscbarrier_lattice_classification(a, b, c):
    # g'(y) = a - b/(c+y)^2 is negative near y = 0 exactly when b > a c^2
    report = validate_transform(OscBarrier(a, b, c))
    assert report.accepted == (b <= a * c * c)
    assert report.convexity == []


@settings(max_examples=50, deadline=None)
@given(
    increments=st.lists(st.floats(0.1, 5), min_size=4, max_size=12).map(sorted),
    dent=st.integers(0, 100),
    depth=st.floats(0.05, 0.9),
)
def test_manufactured_concavity_is_rejected(increments, dent, depth):
    # convex table (increasing increments on a unit grid) with one increment shrunk
    inc = np.array(increments, dtype=float)
    k = 1 + dent % (inc.size - 1)
    inc[k] = inc[k - 1] * (1 - depth)
    g = np.concatenate([[0.0], np.cumsum(inc)])
    y = np.arange(g.size, dtype=float)
    report = validate_transform(Tabulated(y, g))
    assert not report.accepted
    assert k in report.convexity


def test_validate_grid_too_small():
    with pytest.raises(ValueError, match=">= 4"):
        validate_transform(Power(1), [0, 1, 2])


def test_tabulated_range_error_names_x():
    shape = PotentialShape(Tabulated([0, 1, 2, 4], [0, 1, 3, 9]))
    assert shape(1.0) == 1.0
    with pytest.raises(RangeError, match="x = 2.5"):
        shape(np.array([0.0, 2.5]))


def test_tabulated_needs_four_increasing_knots():
    with pytest.raises(ValueError, match=">= 4"):
        Tabulated([0, 1, 2], [0, 1, 2])
    with pytest.raises(ValueError, match="strictly increasing"):
        Tabulated([0, 1, 1, 2], [0, 1, 2, 3])


@pytest.mark.parametrize("bad", [lambda: Power(0), lambda: OscBarrier(1, 0, 1), lambda: OscBarrier(-1, 1, 1)])
def test_parameter_positivity(bad):
    with pytest.raises(ValueError):
        bad()


def test_parse_shape_grammar(tmp_path):
    assert parse_shape("power:p=1").transform == Power(1.0)
    assert parse_shape("oscbarrier:a=1,b=2,c=0.5").transform == OscBarrier(1, 2, 0.5)
    path = tmp_path / "g.csv"
    path.write_text("y,g\n0,0\n1,1\n2,4\n3,9\n")
    t = parse_shape(f"tabulated:file={path}").transform
    assert isinstance(t, Tabulated) and t.y == (0, 1, 2, 3)
    assert parse_shape(parse_shape("oscbarrier:a=1,b=2,c=0.5").spec()).transform == OscBarrier(1, 2, 0.5)


@pytest.mark.parametrize("spec", ["power", "power:q=1", "oscbarrier:a=1,b=1", "cubic:p=2", "power:p=x"])
def test_parse_shape_rejects(spec):
    with pytest.raises(ValueError):
        parse_shape(spec)


def test_tabulated_file_header_checked(tmp_path):
    path = tmp_path / "g.csv"
    path.write_text("x,f\n0,0\n1,1\n2,4\n3,9\n")
    with pytest.raises(ValueError, match="header"):
        parse_shape(f"tabulated:file={path}")
