import cmath
import random

import pytest
from hypothesis import given, settings, strategies as st

from kleinian_rp.discreteness import generate_family
from kleinian_rp.realization import (Mat2C, MatrixPair, NoCommutator, commutator, commutator_half_root,
                                     evaluate_word, normal_form_gamma, realize,
                                     square_roots, verify_relators)
from kleinian_rp.presentations import Word
from kleinian_rp.trace_core import Parameters, UPoint

finite = st.floats(-20, 20, allow_nan=False)


@settings(max_examples=200)
@given(finite, finite, finite)
def test_realize_recovers_parameters(b, bp, g):
    pair = realize(Parameters(b, bp, g))
    assert pair.F.det() == pytest.approx(1, abs=1e-12)
    assert pair.G.det() == pytest.approx(1, abs=1e-12)
    assert pair.max_param_error() <= 1e-9 * max(1, abs(b), abs(bp), abs(g)) ** 2


def test_realize_is_deterministic():
    p = Parameters(-3, -2, -5)
    assert realize(p).to_json() == realize(p).to_json()


def test_json_roundtrip():
    m = realize(Parameters(-3, 1.5, -7)).F
    assert Mat2C.from_json(m.to_json()) == m


def test_normal_form_identity(seed):
    rng = random.Random(seed)
    for _ in range(500):
        s, t, r = (complex(rng.uniform(-3, 3), rng.uniform(-3, 3)) for _ in range(3))
        if min(abs(s), abs(t)) < 0.1:
            continue
        F, G = Mat2C(s, 1, 0, 1 / s), Mat2C(t, 0, r, 1 / t)
        assert abs(commutator(F, G).trace() - 2 - normal_form_gamma(s, t, r)) < 1e-9


def test_evaluate_word_matches_products():
    pair = realize(Parameters(-3, -2, -5))
    w = Word.parse("fg^-1f^2")
    direct = pair.F @ pair.G.inverse() @ pair.F @ pair.F
    assert evaluate_word(w, pair).max_abs_diff(direct) < 1e-12


def test_verify_gt333_complete():
    inst = generate_family(1, {}, {"u": UPoint.angle(3), "v": UPoint.angle(3),
                                   "w": UPoint.angle(6)})
    report = verify_relators(inst)
    assert report.status == "complete" and report.passed
    assert report.max_deviation < 1e-10


def test_verify_parabolic_commutator():
    inst = generate_family(1, {}, {"u": UPoint.angle(3), "v": UPoint.angle(3),
                                   "w": UPoint.zero()})
    report = verify_relators(inst)
    assert report.passed
    assert any(c.kind == "parabolic" for c in report.checks)


def test_square_roots_square_to_k():
    pair = realize(Parameters(-3, -2, -5))
    K = commutator(pair.F, pair.G)
    for h in square_roots(K):
        assert (h @ h).distance_to_pm_identity() > 0.1
        assert min((h @ h).max_abs_diff(K), (h @ h).max_abs_diff(-K)) < 1e-10


def test_half_root_involution():
    pair = realize(Parameters(-3, -3, -5))
    h = commutator_half_root(pair)
    assert h.unique
    assert abs((h.root @ pair.G).trace()) < 1e-9


def test_half_root_needs_commutator():
    F = Mat2C(cmath.exp(0.3j), 0, 0, cmath.exp(-0.3j))
    G = Mat2C(cmath.exp(0.5j), 0, 0, cmath.exp(-0.5j))
    with pytest.raises(NoCommutator):
        commutator_half_root(MatrixPair(F, G, Parameters(-0.3, -0.9, 0.0)))
