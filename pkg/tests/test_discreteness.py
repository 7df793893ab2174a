import math

import pytest

from kleinian_rp.discreteness import (DISCRETE, NOT_CLASS_D, NOT_DISCRETE, ROWS,
                                      UNRESOLVED, ConditionViolated, SearchBounds, classify,
                                      enumerate_instances, generate_family,
                                      theorem2_conditions, two_elliptic_discrete)
from kleinian_rp.presentations import GroupSpec
from kleinian_rp.trace_core import Parameters, UPoint

SQ5 = math.sqrt(5)


def test_all_rows_registered():
    labels = {r.label for r in ROWS}
    assert {"11+", "11-", "12+", "12-"} <= labels
    assert {r.row for r in ROWS} == set(range(1, 25))


def test_row5_tet453():
    res = classify(Parameters(-3, SQ5 - 1, (SQ5 - 1) / 2))
    assert res.verdict == DISCRETE
    assert [str(m.group) for m in res.matches] == ["Tet[4,5;3]"]


def test_row5_swapped_order():
    res = classify(Parameters(SQ5 - 1, -3, (SQ5 - 1) / 2))
    assert res.verdict == DISCRETE and res.matches[0].swapped


def test_gt33inf():
    res = classify(Parameters(-3, -3, -4))
    assert res.verdict == DISCRETE
    assert "GT[3,3;∞]" in {str(m.group) for m in res.matches}


def test_not_discrete_and_not_class_d():
    assert classify(Parameters(-1, -1, -0.5)).verdict == NOT_DISCRETE
    assert classify(Parameters(-3, -3, 0)).verdict == NOT_CLASS_D


def test_nonprimitive_generator_is_reduced():
    beta = -4 * math.sin(2 * math.pi / 5) ** 2
    res = classify(Parameters(beta, -3, -5))
    assert res.reduced is not None
    assert res.reduced.beta == pytest.approx(-4 * math.sin(math.pi / 5) ** 2)


def test_row1_condition_violated():
    with pytest.raises(ConditionViolated):
        generate_family(1, {}, {"u": UPoint.angle(3), "v": UPoint.angle(3),
                                "w": UPoint.angle(4)})


def test_row16_values():
    inst = generate_family(16, {"n": 5})
    assert inst.params.beta_prime == pytest.approx(9.708203932, abs=1e-8)
    assert inst.params.gamma == pytest.approx(3.236067977, abs=1e-8)


def test_two_elliptic_examples():
    res = two_elliptic_discrete(3, 3, -3.0)
    assert res.verdict == DISCRETE and str(res.matches[0].group) == "GT[3,3;3]"
    beta = -4 * math.sin(math.pi / 7) ** 2
    res = two_elliptic_discrete(7, 7, -(beta + 2) ** 2)
    assert res.verdict == DISCRETE
    assert "Tet[3,7;3]" in {str(m.group) for m in res.matches}


def test_two_elliptic_hyperbolic_commutator():
    assert two_elliptic_discrete(5, 7, -6.0).verdict == DISCRETE
    assert two_elliptic_discrete(5, 7, -3.9).verdict == NOT_DISCRETE


@pytest.mark.parametrize("schema, exps, ok", [
    ("GT", [3, 3, 3], True),
    ("PH", [4, 3, 3], True),
    ("H", [2, 3, 9, 2], False),
    ("H", [2, 3, 7, 2], True),
    ("R", [5, 2, 2], True),
])
def test_theorem2_conditions(schema, exps, ok):
    assert theorem2_conditions(GroupSpec(schema, exps)) is ok


def test_unresolved_past_bound():
    beta = -4 * math.sin(math.pi / 300) ** 2
    res = classify(Parameters(beta, beta, -4.5), SearchBounds(int_bound=50))
    assert res.verdict == UNRESOLVED and "bound 50" in res.reason


def test_enumeration_is_deterministic():
    a = [i.key() for i in enumerate_instances(17, max_int=6)]
    b = [i.key() for i in enumerate_instances(17, max_int=6)]
    assert a == b and len(a) > 0
