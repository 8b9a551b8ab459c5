import cmath

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from sp4gysin.branching import (
    cohomology_D11,
    graded_square,
    kunneth,
    restrict_untwisted,
    restrict_wreath,
    sigma_signed_multiplicities,
    sigma_twisted_trace,
)
from sp4gysin.char_ring import DominantWeight
from sp4gysin.laurent import LaurentPolynomial
from sp4gysin.modular_forms import dim_cusp_forms

W = DominantWeight


def weights_up_to(n):
    return [W(s - b, b) for s in range(n + 1) for b in range(s // 2 + 1)]


def oracle_restriction(w):
    """Peel SL2 x SL2 blocks off the Freudenthal character one at a time."""
    rest = dict(oracles.freudenthal(w.a, w.b))
    out = {}
    while any(rest.values()):
        top = max(k for k, v in rest.items() if v and k[0] >= 0 and k[1] >= 0)
        m = rest[top]
        out[top] = m
        for i in range(top[0] + 1):
            for j in range(top[1] + 1):
                key = (top[0] - 2 * i, top[1] - 2 * j)
                rest[key] = rest.get(key, 0) - m
    return out


def test_untwisted_examples():
    assert restrict_untwisted(W(1, 0)) == {(1, 0): 1, (0, 1): 1}
    assert restrict_untwisted(W(0, 0)) == {(0, 0): 1}
    r = restrict_untwisted(W(2, 2))
    assert sum((c + 1) * (d + 1) * m for (c, d), m in r.items()) == 14


@pytest.mark.parametrize("w", weights_up_to(10))
def test_untwisted_against_block_peeling(w):
    r = restrict_untwisted(w)
    assert r == oracle_restriction(w)
    assert all(r.get((d, c)) == m for (c, d), m in r.items())


def test_twisted_trace_examples():
    assert sigma_twisted_trace(W(0, 0)) == LaurentPolynomial.constant(1, 1)
    assert sigma_twisted_trace(W(1, 0)) == LaurentPolynomial.zero(1)
    assert sigma_signed_multiplicities(W(2, 2)).get(0) == 1


def test_embedded_swap_is_symplectic_with_expected_eigenvalues():
    g = oracles.embedded_swap(1.7, 0.6)
    j = oracles.symplectic_form()
    assert np.allclose(g.T @ j @ g, j)
    w = cmath.sqrt(1.7 * 0.6)
    assert np.allclose(sorted(np.linalg.eigvals(g), key=lambda z: (z.real, z.imag)),
                       sorted([w, -w, 1 / w, -1 / w], key=lambda z: (z.real, z.imag)))


@pytest.mark.parametrize("x,y", [(1.7, 0.6), (0.9, 2.3), (1.1, 1.3)])
def test_twisted_trace_matches_matrix_model(x, y):
    g = oracles.embedded_swap(x, y)
    w = cmath.sqrt(x * y)
    assert abs(np.trace(g) - sigma_twisted_trace(W(1, 0)).evaluate((w,))) < 1e-12
    lam2, sym2 = oracles.square_traces(g)
    # Lambda^2 V = V_{1+1} + trivial (the symplectic form, fixed by sigma); Sym^2 V = V_{2+0}
    assert abs(lam2 - 1 - sigma_twisted_trace(W(1, 1)).evaluate((w,))) < 1e-10
    assert abs(sym2 - sigma_twisted_trace(W(2, 0)).evaluate((w,))) < 1e-10


def test_wreath_single_copy_claims():
    for l in (1, 2, 3):
        r = restrict_wreath(W(2 * l, 2 * l))
        assert r.diag_plus.get(0) == 1
        assert r.diag_minus.get(0, 0) == 0
    for w in [W(2, 0), W(3, 1), W(4, 0), W(5, 3), W(7, 1), W(6, 4), W(10, 0), W(9, 1), W(8, 2), W(7, 3)]:
        assert restrict_wreath(w).off(w.a - w.b, 0) == 1


def test_standard_wreath():
    r = restrict_wreath(W(1, 0))
    assert r.off_diagonal == {(1, 0): 1}
    assert not r.diag_plus and not r.diag_minus


@pytest.mark.parametrize("w", weights_up_to(14))
def test_wreath_dimension_and_trace_consistency(w):
    r = restrict_wreath(w)
    assert r.dimension() == w.dimension
    at_one = sigma_twisted_trace(w).evaluate((1,))
    assert at_one == sum((a + 1) * m for a, m in r.diag_plus.items()) - sum((a + 1) * m for a, m in r.diag_minus.items())
    assert all(m > 0 for m in list(r.off_diagonal.values()) + list(r.diag_plus.values()) + list(r.diag_minus.values()))


@pytest.mark.parametrize("w", weights_up_to(14))
def test_parity_and_h0_vanishing(w):
    c = cohomology_D11(w, -1)
    if (w.a + w.b) % 2:
        assert c.h0 == {} and c.h1 == {}
    if not (w.a == w.b and w.a % 2 == 0):
        assert c.total(0) == 0


@pytest.mark.parametrize("w", [W(a, b) for a, b in [(2, 0), (3, 1), (5, 3), (4, 2), (7, 1), (10, 0)]])
def test_only_the_ab_zero_block_contributes_h1(w):
    c = cohomology_D11(w, -1)
    contributing = [p for p in c.contributions if p.cohomology.get(1)]
    assert [(p.family, p.label) for p in contributing] == [("U", (w.a - w.b, 0))]
    assert c.h1 == {w.a + w.b + 3: 2 * dim_cusp_forms(w.a - w.b + 2), 2 * w.a + 4: 1}


def test_d11_examples():
    assert cohomology_D11(W(2, 2), -1).h0 == {6: 1}
    for a in (1, 3, 5):
        c = cohomology_D11(W(a, a), -1)
        assert c.total(0) == 0 and c.total(1) == 0
    c = cohomology_D11(W(3, 1), -1)
    assert c.h1 == {7: 0, 10: 1}
    assert {k: v for k, v in c.h1.items() if v} == {10: 1}


@given(st.integers(-3, 3))
def test_twist_shifts_weights(t):
    base = cohomology_D11(W(3, 1), 0)
    shifted = cohomology_D11(W(3, 1), t)
    assert shifted.h1 == {w - 2 * t: d for w, d in base.h1.items()}


def test_graded_linear_algebra():
    x = {0: {0: 1}, 1: {3: 2}}
    y = {0: {1: 1}, 1: {}}
    assert kunneth(x, y) == {0: {1: 1}, 1: {4: 2}}
    assert graded_square({0: {0: 2}, 1: {}}, True)[0] == {0: 3}
    assert graded_square({0: {0: 2}, 1: {}}, False)[0] == {0: 1}
    assert graded_square({0: {0: 1}, 1: {}}, False)[0] == {}
