import cmath

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from orbidim import lawton
from orbidim.lawton import (
    NotUnimodular,
    TraceCoordinates,
    cayley_hamilton_residual,
    eval_P,
    eval_Q,
    hopf_pair,
    lawton_residual,
    random_unimodular,
    selftest,
    trace_coords,
    verify_paper_points,
)
from orbidim.lawton_polys import P_TEXT, P_TERMS, Q_TEXT, Q_TERMS, VARIABLES

SYMS = sp.symbols(" ".join(VARIABLES))


@pytest.mark.parametrize("text, terms", [(P_TEXT, P_TERMS), (Q_TEXT, Q_TERMS)], ids=["P", "Q"])
def test_transcriptions_agree(text, terms):
    display = sp.expand(sp.sympify(text.replace("^", "**"), locals=dict(zip(VARIABLES, SYMS))))
    assert sp.expand(lawton.eval_terms(terms, SYMS) - display) == 0


@given(st.lists(st.integers(-5, 5), min_size=8, max_size=8))
def test_transcriptions_agree_at_integer_points(point):
    env = dict(zip(VARIABLES, point))
    for text, terms in ((P_TEXT, P_TERMS), (Q_TEXT, Q_TERMS)):
        assert eval(text.replace("^", "**"), {}, env) == lawton.eval_terms(terms, point)


def test_monomial_counts():
    assert len(P_TERMS) == 10
    assert len(Q_TERMS) == 73


@given(st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False),
       st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False))
def test_slice_values(r, s):
    base = (0, 0, 1, 0, 0, 1, r, s)
    assert cmath.isclose(eval_P(base), r * s - 2, abs_tol=1e-9)
    assert cmath.isclose(eval_Q(base), r**3 + s**3 - 5 * r * s + 5, rel_tol=1e-12, abs_tol=1e-8)


def test_q_at_unit_point():
    assert eval_Q((0, 0, 1, 0, 0, 1, 1, 1)) == 2


@given(*(st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False) for _ in range(4)))
def test_hopf_slice(z, w, r, s):
    q = eval_Q((0, 0, z, 0, 0, w, r, s))
    expected = r**3 + s**3 + z**3 + w**3 + r * s * z * w - 6 * r * s - 6 * z * w + 9
    assert cmath.isclose(q, expected, rel_tol=1e-12, abs_tol=1e-8)


def test_identity_pair():
    c = trace_coords(np.eye(3), np.eye(3))
    assert all(v == 3 for v in c.base) and c.tau == 3
    assert eval_P(c) == 6 and eval_Q(c) == 9  # (tau - 3)^2
    assert lawton_residual(np.eye(3), np.eye(3)) == 0


def test_hopf_pair():
    A, B = hopf_pair()
    c = trace_coords(A, B)
    assert max(abs(v) for v in c.base) < 1e-12
    om = cmath.exp(2j * cmath.pi / 3)
    assert abs(c.tau - 3 * om) < 1e-12
    assert lawton_residual(A, B) < 1e-12


def test_non_unimodular_rejected():
    with pytest.raises(NotUnimodular):
        trace_coords(2 * np.eye(3), np.eye(3))
    with pytest.raises(ValueError):
        trace_coords(np.eye(2), np.eye(3))


def _pair(seed):
    rng = np.random.default_rng(seed)
    return random_unimodular(rng, 2)


@settings(max_examples=60)
@given(st.integers(0, 2**32 - 1))
def test_random_pairs(seed):
    A, B = _pair(seed)
    assert abs(np.linalg.det(A) - 1) < 1e-9
    assert lawton_residual(A, B) <= 1e-8
    assert cayley_hamilton_residual(A) <= 1e-9


@settings(max_examples=40)
@given(st.integers(0, 2**32 - 1))
def test_symmetries(seed):
    rng = np.random.default_rng(seed)
    A, B, G = random_unimodular(rng, 3)
    c = trace_coords(A, B)
    scale = max(1.0, *(abs(v) for v in c.base))
    # conjugation invariance
    Gi = np.linalg.inv(G)
    cg = trace_coords(G @ A @ Gi, G @ B @ Gi)
    assert max(abs(a - b) for a, b in zip(c.base + (c.tau,), cg.base + (cg.tau,))) <= 1e-8 * scale
    # swapping the generators exchanges the roots
    cs = trace_coords(B, A)
    assert np.allclose((cs.x, cs.y, cs.z, cs.u, cs.v, cs.w, cs.r, cs.s),
                       (c.y, c.x, c.z, c.v, c.u, c.w, c.s, c.r), rtol=1e-9, atol=1e-9 * scale)
    p, q = eval_P(c), eval_Q(c)
    sc = max(1.0, abs(p), abs(q))
    assert abs(c.tau + cs.tau - p) <= 1e-8 * sc and abs(c.tau * cs.tau - q) <= 1e-8 * sc
    # inversion swaps x<->u, y<->v, z<->w and r<->s
    ci = trace_coords(np.linalg.inv(A), np.linalg.inv(B))
    assert np.allclose(ci.base, (c.u, c.v, c.w, c.x, c.y, c.z, c.s, c.r), rtol=0, atol=1e-8 * scale)


def test_random_unimodular_shapes():
    M = random_unimodular(np.random.default_rng(0), 50)
    assert M.shape == (50, 3, 3)
    assert np.allclose(np.linalg.det(M), 1)


def test_selftest_deterministic():
    a = selftest(samples=500, seed=7)
    b = selftest(samples=500, seed=7)
    assert a == b and a.passed


def test_selftest_rejects_empty():
    with pytest.raises(ValueError):
        selftest(samples=0)


def test_reference_points():
    report = verify_paper_points()
    assert report.passed, report.failures
    assert [c.name[0] for c in report.checks] == list("abcdef")


def test_trace_coordinates_dict():
    c = TraceCoordinates(*range(9))
    assert c.as_dict()["tau"] == 8 and c.base == tuple(range(8))
