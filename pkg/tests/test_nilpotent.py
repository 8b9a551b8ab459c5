from fractions import Fraction
from math import comb

import pytest

import oracles
from sp4gysin.char_ring import DominantWeight
from sp4gysin.errors import DegreeOutOfRange, OddParity
from sp4gysin.nilpotent import (
    N_B,
    N_P,
    N_Q,
    ce,
    ce_cohomology,
    euler_identity_holds,
    kostant_cohomology,
    stalk_dimensions,
)
from sp4gysin.representations import (
    E_ALPHA1,
    E_ALPHA2,
    SIEGEL_RADICAL,
    act,
    explicit_irrep,
    highest_weight_vector,
    sl2_module,
    sl2_pair_module,
    sp4_module,
)

W = DominantWeight


def weights_up_to(n):
    return [W(s - b, b) for s in range(n + 1) for b in range(s // 2 + 1)]


@pytest.mark.parametrize("w", weights_up_to(8))
def test_explicit_irrep_has_freudenthal_weights(w):
    assert explicit_irrep(w).weight_multiplicities() == oracles.freudenthal(w.a, w.b)


@pytest.mark.parametrize("w", [W(1, 0), W(2, 2), W(3, 1), W(4, 0)])
def test_highest_weight_vector_is_killed_by_raising(w):
    hv = highest_weight_vector(w)
    assert act(E_ALPHA1, hv) == {}
    assert act(E_ALPHA2, hv) == {}


@pytest.mark.parametrize("w", [W(1, 0), W(2, 2), W(3, 1)])
def test_siegel_radical_acts_commutatively(w):
    mod = sp4_module(w)
    ops = [str(r) for r, _ in SIEGEL_RADICAL]
    for key in mod.weights:
        v = {key: Fraction(1)}
        for x in ops:
            for y in ops:
                assert mod.apply(x, mod.apply(y, v)) == mod.apply(y, mod.apply(x, v))


@pytest.mark.parametrize("m", range(15))
def test_nB_closed_form(m):
    res = ce(N_B, m)
    assert res.by_degree[0] == {(m,): 1}
    assert res.by_degree[1] == {(-m - 2,): 1}
    (h0,) = res.representatives[0][(m,)]
    (h1,) = res.representatives[1][(-m - 2,)]
    # key i is X^{m-i} Y^i: X^m in degree 0 and Y^m (x) eta in degree 1
    assert list(h0) == [((), 0)]
    assert list(h1) == [((0,), m)]


def test_nB_trivial_coefficients():
    res = ce(N_B, 0)
    assert res.dimension(0) == res.dimension(1) == 1


@pytest.mark.parametrize("c", [0, 2, 4, 6])
def test_nP_is_kunneth_of_nB(c):
    res = ce(N_P, (c, 0))
    assert res.by_degree[0] == {(c, 0): 1}
    assert res.by_degree[1] == {(-c - 2, 0): 1, (c, -2): 1}
    assert res.by_degree[2] == {(-c - 2, -2): 1}
    assert sum(res.dimension(l) for l in range(3)) == 4


def test_kostant_examples():
    assert kostant_cohomology("Q", W(2, 2), 1).sl2_label == 6
    assert kostant_cohomology("Q", W(2, 2), 0).sl2_label == 0
    assert kostant_cohomology("Q", W(5, 3), 2).sl2_label == 10
    assert kostant_cohomology("B", 4, 1).levi_weight == (-6,)
    with pytest.raises(DegreeOutOfRange):
        kostant_cohomology("Q", W(1, 0), 4)
    with pytest.raises(DegreeOutOfRange):
        kostant_cohomology("B", 3, 2)


@pytest.mark.parametrize("w", weights_up_to(6))
def test_kostant_matches_ce(w):
    res = ce(N_Q, w, representatives=False)
    for l in range(4):
        k = kostant_cohomology("Q", w, l)
        assert res.levi_decomposition(l) == {k.levi_weight: 1}
        expected = w.a - w.b if l in (0, 3) else w.a + w.b + 2
        assert res.sl2_labels(l) == {expected: 1}


@pytest.mark.parametrize("alg,module", [(N_B, sl2_module(3)), (N_P, sl2_pair_module(2, 1)),
                                        (N_Q, sp4_module(W(2, 1))), (N_Q, sp4_module(W(2, 2)))],
                         ids=["H3", "H2xH1", "V21", "V22"])
def test_poincare_duality_and_euler(alg, module):
    res = ce_cohomology(alg, module, representatives=False)
    dual = ce_cohomology(alg, module.dual(), representatives=False)
    n = alg.dimension
    for l in range(n + 1):
        assert res.dimension(l) == dual.dimension(n - l)
    assert euler_identity_holds(alg, module, res)
    assert sum((-1) ** l * comb(n, l) for l in range(n + 1)) * module.dimension == res.euler_characteristic()


def test_stalks():
    for w in (W(3, 1), W(2, 0), W(5, 3)):
        assert stalk_dimensions(w).source == {2 * (w.a - w.b) + 2: 1, 2: 1}
    st = stalk_dimensions(W(5, 3))
    assert st.target_full == {11: 2, 22: 1}
    assert st.target_invariant == {11: 1, 22: 1}
    with pytest.raises(OddParity):
        stalk_dimensions(W(3, 2))
    with pytest.raises(ValueError):
        stalk_dimensions(W(2, 2))
