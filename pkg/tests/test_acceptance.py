"""One test per acceptance criterion; each records a PASS/FAIL line shown in the terminal summary."""

import io
import json
import time

import mpmath
import pytest

import oracles
from sp4gysin.branching import restrict_wreath
from sp4gysin.char_ring import DominantWeight, decompose_sp4, is_weyl_invariant, sp4_irrep_character
from sp4gysin.cli import run
from sp4gysin.gysin import relation_candidates, weight_ledger_report
from sp4gysin.lie_structure import free_lie_graded, witt_dimension
from sp4gysin.lvalues import completed_l, euler_product, l_value, period
from sp4gysin.modular_forms import delta, dim_cusp_forms, dim_modular_forms, hecke_defects
from sp4gysin.nilpotent import N_B, N_Q, ce, kostant_cohomology

W = DominantWeight


def weights_up_to(n):
    return [W(s - b, b) for s in range(n + 1) for b in range(s // 2 + 1)]


class Check:
    def __init__(self, log, number, text, budget=None):
        self.log, self.number, self.text, self.budget = log, number, text, budget

    def __enter__(self):
        self.start = time.perf_counter()
        self.ok = True
        return self

    def fail(self, why):
        self.ok = False
        self.why = why

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        if exc_type is not None:
            self.ok, self.why = False, f"{exc_type.__name__}: {exc}"
        if self.ok and self.budget is not None and elapsed > self.budget:
            self.ok, self.why = False, f"took {elapsed:.1f}s, budget {self.budget}s"
        status = "PASS" if self.ok else "FAIL"
        line = f"CRITERION {self.number} {status}: {self.text} ({elapsed:.2f}s)"
        if not self.ok:
            line += f" [{self.why}]"
        self.log.append(line)
        print(line)
        if exc_type is None and not self.ok:
            pytest.fail(line)
        return False


def cli_json(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out, stderr=io.StringIO())
    assert code == 0
    return json.loads(out.getvalue())


def test_criterion_1_generator(acceptance_log):
    with Check(acceptance_log, 1, "theorem-a generator is V_{2+2}(3) alone over a+b <= 30", budget=10) as c:
        data = cli_json("theorem-a", "--max-weight", "30")
        if data["generator"]["module"] != "V_{2+2}(3)" or data["generator"]["hodge_weight"] != -2:
            c.fail(f"generator {data['generator']}")


def test_criterion_2_relation_bound(acceptance_log):
    expected = {(a, b) for n in (2, 4, 6, 10) for b in range(n + 1) for a in [n - b] if a > b}
    with Check(acceptance_log, 2, "11 candidate pairs from a+b in {2,4,6,10}, degrees 3..7", budget=10) as c:
        rep = relation_candidates(max_weight=30)
        pairs = [(x.weight.a, x.weight.b) for x in rep.candidates]
        if set(pairs) != expected or len(pairs) != 11:
            c.fail(f"pairs {pairs}")
        elif rep.degrees != [3, 4, 5, 6, 7]:
            c.fail(f"degrees {rep.degrees}")


def test_criterion_3_branching(acceptance_log):
    pairs = [W(2, 0), W(3, 1), W(4, 0), W(5, 1), W(4, 2), W(5, 3), W(7, 1), W(6, 4), W(10, 0), W(9, 1)]
    with Check(acceptance_log, 3, "single copies of U_0^+ in V_{2l+2l} and U_{a-b,0} in ten V_{a+b}", budget=30) as c:
        for l in (1, 2, 3):
            r = restrict_wreath(W(2 * l, 2 * l))
            if r.diag_plus.get(0) != 1 or r.diag_minus.get(0, 0) != 0:
                c.fail(f"l={l}: {r.to_json()}")
        for w in pairs:
            if restrict_wreath(w).off(w.a - w.b, 0) != 1:
                c.fail(f"{w}")


def test_criterion_4_kostant_equals_ce(acceptance_log):
    with Check(acceptance_log, 4, "Kostant and Chevalley-Eilenberg agree on n_Q for a+b <= 10", budget=60) as c:
        for w in weights_up_to(10):
            res = ce(N_Q, w, representatives=False)
            for l in range(4):
                k = kostant_cohomology("Q", w, l)
                table = w.a - w.b if l in (0, 3) else w.a + w.b + 2
                if res.levi_decomposition(l) != {k.levi_weight: 1} or res.sl2_labels(l) != {table: 1}:
                    c.fail(f"{w} l={l}: CE {res.levi_decomposition(l)} vs Kostant {k.levi_weight}")


def test_criterion_5_nB_closed_form(acceptance_log):
    with Check(acceptance_log, 5, "n_B cohomology is X^m in degree 0 and Y^m (x) eta in degree 1, m <= 14") as c:
        for m in range(15):
            res = ce(N_B, m)
            h0 = res.representatives[0].get((m,), [])
            h1 = res.representatives[1].get((-m - 2,), [])
            if res.dimension(0) != 1 or res.dimension(1) != 1:
                c.fail(f"m={m}: dims")
            elif [list(v) for v in h0] != [[((), 0)]] or [list(v) for v in h1] != [[((0,), m)]]:
                c.fail(f"m={m}: representatives {h0} {h1}")


def test_criterion_6_modular_dimensions(acceptance_log):
    with Check(acceptance_log, 6, "s_k equals monomial-basis count for even k <= 40") as c:
        for k in range(4, 41, 2):
            r = oracles.monomial_rank(k, k // 4 + 3)
            if dim_modular_forms(k) != r or dim_cusp_forms(k) != r - 1:
                c.fail(f"k={k}")
        if (dim_cusp_forms(8), dim_cusp_forms(12), dim_cusp_forms(14)) != (0, 1, 0):
            c.fail("s_8, s_12, s_14")


def test_criterion_7_l_values(acceptance_log):
    with Check(acceptance_log, 7, "functional equation, L(Delta,8), L(Delta,10), Euler product at 11", budget=30) as c:
        f = delta(120)
        for s in range(1, 12):
            lam, _ = completed_l(f, s, split=1.3)
            dual, _ = completed_l(f, 12 - s, split=0.7)
            if not abs(lam - dual) < 1e-9:
                c.fail(f"residual at s={s}")
        for s in (8, 10):
            lv = l_value(f, s)
            if not abs(lv.value) > 10 * lv.error_bound:
                c.fail(f"L(Delta,{s}) not certified")
        lv = l_value(f, 11)
        prod, log_tail = euler_product(f, 11)
        if not abs(lv.value - prod) / abs(prod) <= mpmath.exp(log_tail) - 1 + lv.error_bound / abs(lv.value):
            c.fail("Euler product disagrees")


def test_criterion_8_periods(acceptance_log):
    with Check(acceptance_log, 8, "r_n(Delta) matches quadrature at n = 0, 2, 4 to 1e-8") as c:
        f = delta(60)
        coeffs = [int(x) for x in f.coefficients]
        for n in (0, 2, 4):
            quad = oracles.period_by_quadrature(coeffs, 12, n)
            if not abs(complex(period(f, n).value) - quad) / abs(quad) < 1e-8:
                c.fail(f"n={n}")


def test_criterion_9_property_suites(acceptance_log):
    with Check(acceptance_log, 9, "Weyl invariance, peeling round trip, Witt identity to degree 7, Hecke to 1e4") as c:
        for w in weights_up_to(12):
            ch = sp4_irrep_character(w)
            if not is_weyl_invariant(ch) or decompose_sp4(ch) != {w: 1}:
                c.fail(f"{w}")
        gen = sp4_irrep_character(W(2, 2))
        for n in range(1, 8):
            if free_lie_graded(gen, n).dimension != witt_dimension(14, n):
                c.fail(f"Witt n={n}")
        if hecke_defects(delta(10_000)):
            c.fail("Hecke multiplicativity")


def test_criterion_10_weight_ledger(acceptance_log):
    with Check(acceptance_log, 10, "weight ledger validates for every even a+b <= 14") as c:
        for w in weights_up_to(14):
            if (w.a + w.b) % 2 == 0 and not weight_ledger_report(w).validate():
                c.fail(f"{w}")
