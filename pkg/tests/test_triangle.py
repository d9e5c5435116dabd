import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings

from cevatri.extgroup import INF, ext_close
from cevatri.errors import DegenerateTriangle, EquilateralInput, NonPositiveSide
from cevatri.triangle import (
    ShapeDescriptor,
    Triangle,
    TriangleClass,
    brocard_angle,
    classify,
    cone_angle,
    fundamental_interval,
    hajja_sigma,
    kappa,
    mu_closed_form,
    mu_nu,
    shape_descriptor,
    tan_brocard,
)
from cevatri.unitgroup import diamond, unit_close

from conftest import random_triangles, triangles

R7 = math.sqrt(7.0)
PAIR_T = Triangle(math.sqrt(5 * R7 + 5), math.sqrt(5 * R7 - 4), math.sqrt(5 * R7 - 1))
PAIR_V = Triangle(2 * math.sqrt(5 * R7 + 4), 2 * math.sqrt(5 * R7 + 1), 2 * math.sqrt(5 * R7 - 5))


def interior_angles(T):
    a, b, c = T.sides
    A = math.acos((b * b + c * c - a * a) / (2 * b * c))
    B = math.acos((c * c + a * a - b * b) / (2 * c * a))
    return A, B, math.pi - A - B


def brocard_oracle(T):
    """cot(omega) = cot A + cot B + cot C."""
    return math.atan(1.0 / sum(1.0 / math.tan(x) for x in interior_angles(T)))


def cone_oracle(T):
    t = np.array(T.squares)
    one = np.ones(3)
    return math.acos(min(1.0, float(t @ one) / (np.linalg.norm(t) * math.sqrt(3.0))))


# ---------------------------------------------------------------- validation


def test_valid_triangle_fields():
    T = Triangle(8, 9, 12)
    assert T.sides == (8.0, 9.0, 12.0)
    assert T.squares == (64.0, 81.0, 144.0)
    assert list(T) == [8.0, 9.0, 12.0]
    assert T[2] == 12.0
    assert T.rotated(1).sides == (9.0, 12.0, 8.0)
    assert T.reversed().sides == (12.0, 9.0, 8.0)
    assert Triangle.from_squares((64, 81, 144)) == T


@pytest.mark.parametrize("sides", [(1, 1, 3), (1, 2, 3), (5, 1, 1)])
def test_degenerate_rejected(sides):
    with pytest.raises(DegenerateTriangle) as info:
        Triangle(*sides)
    assert "|a-b| < c < a+b" in info.value.inequality


@pytest.mark.parametrize("sides", [(0, 1, 1), (-1, 2, 2), (math.inf, 1, 1), (math.nan, 1, 1)])
def test_non_positive_rejected(sides):
    with pytest.raises(NonPositiveSide):
        Triangle(*sides)


def test_triangle_is_immutable():
    T = Triangle(3, 4, 5)
    with pytest.raises(AttributeError):
        T.a = 2.0


# ------------------------------------------------------------ classification


@pytest.mark.parametrize(
    "sides, expected",
    [
        ((8, 9, 12), TriangleClass.INCREASING),
        ((12, 9, 8), TriangleClass.DECREASING),
        ((9, 12, 8), TriangleClass.INCREASING),
        ((5, 5, 8), TriangleClass.WIDE),
        ((5, 3, 5), TriangleClass.NARROW),
        ((1, 1, 1), TriangleClass.EQUILATERAL),
    ],
)
def test_classify_examples(sides, expected):
    assert classify(Triangle(*sides)) is expected


@given(triangles())
def test_classify_invariances(T):
    cls = classify(T)
    assert classify(T.scaled(3.7)) is cls
    assert classify(T.rotated(1)) is cls
    assert classify(T.rotated(2)) is cls
    swap = {
        TriangleClass.INCREASING: TriangleClass.DECREASING,
        TriangleClass.DECREASING: TriangleClass.INCREASING,
    }
    assert classify(T.reversed()) is swap.get(cls, cls)


# -------------------------------------------------------------------- angles


def test_brocard_values():
    assert tan_brocard(Triangle(3, 4, 5)) == pytest.approx(0.48, rel=1e-14)
    assert tan_brocard(Triangle(1, 1, math.sqrt(2))) == pytest.approx(0.5, rel=1e-14)
    assert brocard_angle(Triangle(1, 1, 1)) == pytest.approx(math.pi / 6, rel=1e-14)
    assert math.tan(cone_angle(Triangle(1, 1, math.sqrt(2)))) == pytest.approx(math.sqrt(2) / 4, rel=1e-14)
    assert cone_angle(Triangle(1, 1, 1)) == 0.0


def test_matched_pair_angles():
    # both triangles share tan(omega) = sqrt(7)/5 and tan(gamma) = sqrt(2)/5
    for T in (PAIR_T, PAIR_V):
        assert tan_brocard(T) == pytest.approx(R7 / 5, rel=1e-12)
        assert math.tan(cone_angle(T)) == pytest.approx(math.sqrt(2) / 5, rel=1e-12)


@given(triangles())
def test_brocard_matches_cotangent_oracle(T):
    assert brocard_angle(T) == pytest.approx(brocard_oracle(T), rel=1e-9)


@given(triangles())
def test_cone_matches_vector_angle(T):
    g = cone_angle(T)
    assert 0.0 <= g < math.atan(1 / math.sqrt(2))
    # arccos loses precision near 0, so compare absolutely
    assert g == pytest.approx(cone_oracle(T), abs=1e-7)


@given(triangles())
def test_brocard_cone_identity(T):
    tw, tg = tan_brocard(T), math.tan(cone_angle(T))
    assert abs(3 * tw * tw + 2 * tg * tg - 1) <= 1e-12


# -------------------------------------------------------- kappa, mu and nu


def test_reference_parameters():
    T = Triangle(8, 9, 12)
    assert kappa(T) == pytest.approx(17 / 80, rel=1e-12)
    mu, nu = mu_nu(T)
    assert mu == pytest.approx(1 / 9, rel=1e-12)
    assert nu == pytest.approx(10 / 17, rel=1e-12)
    assert fundamental_interval(T) == (mu, nu)
    assert mu_closed_form(T) == pytest.approx(1 / 9, rel=1e-12)


def test_reversed_reference_parameters():
    R = Triangle(12, 9, 8)
    assert kappa(R) == pytest.approx(63 / 80, rel=1e-12)
    mu, nu = mu_nu(R)
    assert mu == pytest.approx(8 / 9, rel=1e-12)
    assert nu == pytest.approx(7 / 17, rel=1e-12)


def test_matched_pair_parameters():
    assert kappa(PAIR_T) == pytest.approx(1.5, rel=1e-12)
    assert kappa(PAIR_V) == pytest.approx(1 / 3, rel=1e-12)
    assert mu_nu(PAIR_T)[0] == pytest.approx((3 - R7) / 2, rel=1e-12)
    assert mu_nu(PAIR_V)[0] == pytest.approx(R7 - 2, rel=1e-12)


def test_isosceles_parameters():
    assert mu_nu(Triangle(5, 5, 8)) == (0.0, 0.5)
    assert mu_nu(Triangle(5, 3, 5)) == (0.5, 0.0)
    assert kappa(Triangle(5, 5, 8)) == 0.0
    assert kappa(Triangle(5, 3, 5)) is INF


def test_equilateral_rejected():
    with pytest.raises(EquilateralInput):
        mu_nu(Triangle(2, 2, 2))
    with pytest.raises(EquilateralInput):
        mu_closed_form(Triangle(2, 2, 2))


@given(triangles())
def test_closed_form_agrees_with_group_route(T):
    if classify(T) is TriangleClass.EQUILATERAL:
        return
    assert unit_close(mu_closed_form(T), mu_nu(T)[0], 1e-9)


@given(triangles())
def test_mu_nu_shape(T):
    mu, nu = mu_nu(T)
    assert 0.0 <= mu < 1.0 and 0.0 <= nu < 1.0
    # nu is mu shifted by 1/2 in the diamond group
    assert unit_close(diamond(mu, 0.5), nu, 1e-9)


@given(triangles())
def test_reversal_reflects_mu(T):
    mu, nu = mu_nu(T)
    mu_r, nu_r = mu_nu(T.reversed())
    assert unit_close(mu_r, 1 - mu if mu else 0.0, 1e-9)
    assert unit_close(nu_r, 1 - nu if nu else 0.0, 1e-9)


@given(triangles())
def test_kappa_scale_invariant_and_mu_rotation_invariant(T):
    # near-isosceles kappa is huge, so compare on the circle
    assert ext_close(kappa(T.scaled(2.5)), kappa(T), 1e-9)
    assert unit_close(mu_nu(T.rotated(1))[0], mu_nu(T)[0], 1e-9)


# ------------------------------------------------------------------- shapes


def test_shape_descriptor_equilateral():
    s = shape_descriptor(Triangle(3, 3, 3))
    assert s == ShapeDescriptor(0.0, 1.0)
    assert not s.close(ShapeDescriptor(0.0, 0.999999999999))


def test_shape_descriptor_wraps():
    assert ShapeDescriptor(0.1, 1e-12).close(ShapeDescriptor(0.1, 1 - 1e-12))
    assert shape_descriptor(Triangle(1, 1, 1.5)).as_complex().imag == 0.0


def test_hajja_sigma():
    assert abs(hajja_sigma(Triangle(1, 1, 1))) < 1e-15
    for T in random_triangles(np.random.default_rng(5), 50):
        s = hajja_sigma(T)
        x, y, z = T.squares
        w = cmath.exp(-2j * math.pi / 3)
        assert s == pytest.approx((x + w * y + w.conjugate() * z) / (x + y + z))
        assert abs(s) == pytest.approx(math.tan(cone_angle(T)) / math.sqrt(2), rel=1e-9)


@settings(max_examples=50)
@given(triangles())
def test_scaling_keeps_shape(T):
    assert shape_descriptor(T).close(shape_descriptor(T.scaled(0.3)))
