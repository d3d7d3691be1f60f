from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import TAU, lagrange_reversion, long_division
from shellbound.errors import BranchUndefined, DivisionBySingularSeries, InnerNotVanishing, NotNormalized
from shellbound.series import TruncatedSeries as TS
from shellbound.series import arith, compose, differentiate, evaluate, power, revert

finite = st.floats(-3, 3, allow_nan=False)
cplx = st.builds(complex, finite, finite)


def series_st(order=8, lead=None):
    coeffs = st.lists(cplx, min_size=order + 1, max_size=order + 1)
    if lead is None:
        return coeffs.map(TS)
    return coeffs.map(lambda c: TS([*lead, *c[len(lead):]]))


def normalized_st(order=8):
    unit = st.builds(lambda r, t: r * np.exp(2j * np.pi * t), st.floats(0, 1), st.floats(0, 1))
    return st.lists(unit, min_size=order - 1, max_size=order - 1).map(lambda c: TS([0, 1, *c]))


def test_difference_of_squares():
    out = TS.from_coeffs([1, 1], 4) * TS.from_coeffs([1, -1], 4)
    assert np.allclose(out.coeffs, [1, 0, -1, 0, 0])


def test_ptilde_division_matches_display():
    q = arith(TS.from_coeffs([1, 0, TAU**2], 5), TS.from_coeffs([1, -TAU, -(TAU**2)], 5), "div")
    expected = [1, TAU, 3 * TAU**2, 4 * TAU**3, 7 * TAU**4, 11 * TAU**5]
    assert np.allclose(q.coeffs, expected, atol=1e-15)


def test_self_division_is_one():
    f = TS.from_coeffs([2, 1, -3, 0.5], 6)
    assert np.allclose((f / f).coeffs, TS.constant(1, 6).coeffs)


def test_result_order_is_minimum():
    a, b = TS.from_coeffs([1, 2], 7), TS.from_coeffs([1, 1], 4)
    for kind in ("add", "sub", "mul", "div"):
        assert arith(a, b, kind).order == 4


def test_division_by_singular_raises():
    with pytest.raises(DivisionBySingularSeries):
        TS.from_coeffs([1, 1], 3) / TS.from_coeffs([1e-15, 1], 3)


def test_coefficients_are_read_only():
    f = TS.from_coeffs([1, 2], 3)
    with pytest.raises(ValueError):
        f.coeffs[0] = 5


@pytest.mark.parametrize("bad", [[1], list(range(70))])
def test_order_limits(bad):
    with pytest.raises(ValueError):
        TS(bad)


def test_compose_linear_outer():
    out = compose(TS.from_coeffs([1, 1], 5), TS.from_coeffs([0, 0, 1], 5))
    assert np.allclose(out.coeffs, [1, 0, 1, 0, 0, 0])


def test_compose_ptilde_with_extremal_u():
    # h = (1+z)/(1-z) gives u(z) = z
    p = long_division([1, 0, TAU**2], [1, -TAU, -(TAU**2)], 6)
    h = TS.from_coeffs([1, 2, 2, 2, 2, 2, 2], 6)
    u = (h - 1) / (h + 1)
    out = compose(TS(p), u)
    assert abs(out[1] - TAU) < 1e-14 and abs(out[2] - 3 * TAU**2) < 1e-14


def test_compose_ptilde_with_c1_zero():
    p = long_division([1, 0, TAU**2], [1, -TAU, -(TAU**2)], 6)
    h = TS.from_coeffs([1, 0, 2], 6)
    out = compose(TS(p), (h - 1) / (h + 1))
    assert abs(out[1]) < 1e-15 and abs(out[2] - TAU) < 1e-14


def test_compose_needs_vanishing_inner():
    with pytest.raises(InnerNotVanishing):
        compose(TS.from_coeffs([1, 1], 3), TS.from_coeffs([0.5, 1], 3))


def test_revert_identity():
    assert np.allclose(revert(TS.identity(6)).coeffs, TS.identity(6).coeffs)


def test_revert_z_plus_z2():
    assert np.allclose(revert(TS.from_coeffs([0, 1, 1], 4)).coeffs, [0, 1, -1, 2, -5])


def test_revert_z_plus_z2_plus_z3():
    g = revert(TS.from_coeffs([0, 1, 1, 1], 4))
    assert abs(g[3] - 1) < 1e-15 and abs(g[4]) < 1e-15


def test_revert_needs_normalized():
    with pytest.raises(NotNormalized):
        revert(TS.from_coeffs([0, 2, 1], 4))


@pytest.mark.parametrize("a", [[1], [1, 1], [Fraction(1, 2), Fraction(-1, 3), 2], [0, 0, 0, 1]])
def test_revert_matches_exact_lagrange(a):
    order = 8
    exact = lagrange_reversion(a, order)
    g = revert(TS.from_coeffs([0, 1, *map(float, a)], order))
    assert np.allclose(g.coeffs.real, [float(x) for x in exact], rtol=1e-13, atol=1e-13)


@given(normalized_st(6))
def test_revert_closed_forms(f):
    a2, a3, a4 = f[2], f[3], f[4]
    g = revert(f)
    assert abs(g[2] + a2) < 1e-12
    assert abs(g[3] - (2 * a2 * a2 - a3)) < 1e-12
    assert abs(g[4] + (5 * a2**3 - 5 * a2 * a3 + a4)) < 1e-12


@given(normalized_st(8))
def test_compose_revert_roundtrip(f):
    err = compose(f, revert(f)) - TS.identity(f.order)
    assert np.abs(err.coeffs).max() < 1e-10


@given(normalized_st(8))
def test_revert_is_an_involution(f):
    assert np.abs((revert(revert(f)) - f).coeffs).max() < 1e-9


@given(series_st(), series_st())
def test_mul_commutes(a, b):
    assert np.allclose((a * b).coeffs, (b * a).coeffs, atol=1e-12)


@given(series_st(6), series_st(6), series_st(6))
def test_mul_associates(a, b, c):
    assert np.allclose(((a * b) * c).coeffs, (a * (b * c)).coeffs, atol=1e-10)


@given(series_st(), series_st(lead=[1]))
def test_div_then_mul_roundtrip(a, b):
    scale = max(1.0, np.abs((a / b).coeffs).max() * np.abs(b.coeffs).max())
    assert np.abs(((a / b) * b - a).coeffs).max() < 1e-12 * scale


def test_derivative_examples():
    assert np.allclose(differentiate(TS.identity(4)).coeffs, [1, 0, 0, 0])
    f = TS.from_coeffs([0, 1, 2 + 1j, -3], 3)
    assert np.allclose(f.derivative().coeffs, [1, 2 * (2 + 1j), -9])
    p = TS(long_division([1, 0, TAU**2], [1, -TAU, -(TAU**2)], 8))
    assert abs(p.derivative()[0] - TAU) < 1e-15


@given(series_st())
def test_evaluate_at_zero(f):
    assert evaluate(f, 0) == f[0]


def test_evaluate_truncated_ptilde():
    p = TS(long_division([1, 0, TAU**2], [1, -TAU, -(TAU**2)], 40))
    z = 0.1
    assert abs(p(z) - (1 + TAU**2 * z * z) / (1 - TAU * z - TAU**2 * z * z)) < 1e-10


def test_evaluate_is_vectorised():
    f = TS.from_coeffs([1, 2, 3], 2)
    z = np.array([0, 1, 1j])
    assert np.allclose(f(z), 1 + 2 * z + 3 * z * z)


@given(normalized_st(6), st.floats(-2, 2))
def test_power_matches_repeated_product(f, p):
    q = TS.from_coeffs([1, *f.coeffs[2:]], 5)
    for k in (2, 3):
        assert np.allclose(power(q, k).coeffs, (q**k).coeffs, atol=1e-9)
    assert np.allclose((power(q, p) * power(q, -p)).coeffs, TS.constant(1, 5).coeffs, atol=1e-8)


def test_power_half_squares_back():
    q = TS.from_coeffs([1, 0.3, -0.2, 0.1], 6)
    r = power(q, 0.5)
    assert np.allclose((r * r).coeffs, q.coeffs, atol=1e-14)


def test_power_needs_unit_constant():
    with pytest.raises(BranchUndefined):
        power(TS.from_coeffs([2, 1], 4), 0.5)
