import math

import pytest
from hypothesis import given, strategies as st

from kleinian_rp.trace_core import (BARINF, INF, Elliptic, ExtExp, Hyperbolic, InvalidRotation,
                                    Parabolic, Parameters, PiLoxodromic, UPoint, beta_from_upoint,
                                    class_d_gate, classify_element, gamma_from_upoint,
                                    reduce_to_primitive, upoint_from_beta, upoint_from_gamma)


def test_extexp_order_and_arithmetic():
    assert BARINF > INF > ExtExp.fin(10**6)
    assert INF / 2 == INF and BARINF / 3 == BARINF
    assert ExtExp.fin(12) / 2 == 6
    assert INF.gcd(6) == 6 and BARINF.gcd(4) == 4
    assert INF.reciprocal() == 0 and ExtExp.fin(4).reciprocal() == 0.25
    assert str(INF) == "∞" and str(BARINF) == "∞̄"
    for tag in ("fin:7", "inf", "barinf"):
        assert ExtExp.from_tag(tag).tag == tag


@pytest.mark.parametrize("beta, expected", [
    (-2.0, Elliptic(4, 1)),
    (0.0, Parabolic()),
    (-4.0, Elliptic(2, 1)),
])
def test_classify_element_examples(beta, expected):
    assert classify_element(beta) == expected


def test_classify_element_types():
    e = classify_element(-4 * math.sin(2 * math.pi / 5) ** 2)
    assert isinstance(e, Elliptic) and (e.n, e.q) == (5, 2) and not e.primitive
    assert isinstance(classify_element(-5.0), PiLoxodromic)
    assert isinstance(classify_element(2.0), Hyperbolic)


@given(st.integers(3, 200))
def test_upoint_angle_roundtrip(n):
    u = UPoint.angle(n)
    assert u.t() == n
    assert upoint_from_beta(beta_from_upoint(u)) == u
    assert upoint_from_gamma(gamma_from_upoint(u)) == u


@given(st.floats(0.05, 4.0))
def test_upoint_length_roundtrip(length):
    u = UPoint.of_length(length)
    assert u.t() == BARINF
    back = upoint_from_beta(beta_from_upoint(u))
    assert back.kind == u.kind and math.isclose(back.length, length, rel_tol=1e-7)


def test_zero_upoint():
    assert UPoint.zero().t() == INF
    assert beta_from_upoint(UPoint.zero()) == 0.0
    assert gamma_from_upoint(UPoint.zero()) == -4.0


def test_reduce_to_primitive_examples():
    r, g = reduce_to_primitive(5, 2, -1.0)
    assert r == 3 and math.isclose(g, -0.3819660112501051, rel_tol=1e-12)
    r, g = reduce_to_primitive(7, 2, -1.0)
    assert r == 4 and math.isclose(g, -math.sin(math.pi / 7) ** 2 / math.sin(2 * math.pi / 7) ** 2,
                                      rel_tol=1e-12)
    with pytest.raises(InvalidRotation):
        reduce_to_primitive(6, 2, -1.0)
    with pytest.raises(InvalidRotation):
        reduce_to_primitive(7, 1, -1.0)


def test_class_d_gate():
    assert class_d_gate(Parameters(-3, -3, -4))
    assert not class_d_gate(Parameters(-3, -3, 0))
    assert not class_d_gate(Parameters(-5, -3, -4))
    assert not class_d_gate(Parameters(-3, -3, -2))  # -beta beta'/4 = -2.25


def test_parameters_reject_nonfinite():
    with pytest.raises(ValueError):
        Parameters(float("nan"), 0, -1)
