"""Cohomology of the abelian nilpotent radicals n_B, n_P = n_B x n_B and n_Q.

Two independent routes: a Chevalley-Eilenberg solver over the rationals on an
explicit weight basis, and Kostant's theorem via Weyl group combinatorics.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Hashable

from sp4gysin.char_ring import RHO, DominantWeight, POSITIVE_ROOTS, weyl_act, weyl_group
from sp4gysin.errors import DegreeOutOfRange, OddParity
from sp4gysin.facts import WeightTable, sl2z_cohomology
from sp4gysin.linalg import Echelon, SparseVector, nullspace
from sp4gysin.modular_forms import dim_cusp_forms
from sp4gysin.representations import WeightModule, sl2_module, sl2_pair_module, sp4_module


@dataclass(frozen=True)
class NilpotentAlgebra:
    """An abelian nilpotent Lie algebra given by its generators' torus weights (roots)."""

    name: str
    generators: tuple[tuple[str, tuple[int, ...]], ...]  # (operator name, root)
    levi: str

    @property
    def dimension(self) -> int:
        return len(self.generators)

    def bracket(self, i: int, j: int) -> dict:
        return {}


N_B = NilpotentAlgebra("n_B", (("e", (2,)),), "torus G_m of SL2")
N_P = NilpotentAlgebra("n_P", (("e1", (2, 0)), ("e2", (0, 2))), "torus G_m x G_m")
N_Q = NilpotentAlgebra("n_Q", (("(2, 0)", (2, 0)), ("(1, 1)", (1, 1)), ("(0, 2)", (0, 2))), "GL2")
ALGEBRAS = {a.name: a for a in (N_B, N_P, N_Q)}


@dataclass(frozen=True)
class CohomologyResult:
    algebra: str
    coefficient: str
    by_degree: tuple[dict[tuple[int, ...], int], ...]  # torus weight -> dimension
    representatives: tuple[dict[tuple[int, ...], list[SparseVector]], ...]

    def dimension(self, l: int) -> int:
        return sum(self.by_degree[l].values())

    def euler_characteristic(self) -> int:
        return sum((-1) ** l * self.dimension(l) for l in range(len(self.by_degree)))

    def levi_decomposition(self, l: int) -> dict[tuple[int, int], int]:
        """For n_Q: GL2 highest weights (p, q), p >= q, with multiplicities."""
        if self.algebra != "n_Q":
            return dict(sorted(self.by_degree[l].items(), reverse=True))
        rest = dict(self.by_degree[l])
        out: dict[tuple[int, int], int] = {}
        while any(rest.values()):
            top = max(mu for mu, d in rest.items() if d and mu[0] >= mu[1])
            m = rest[top]
            if m < 0:
                raise ArithmeticError("cohomology weights are not a GL2 character")
            out[top] = m
            for i in range(top[0] - top[1] + 1):
                mu = (top[0] - i, top[1] + i)
                rest[mu] = rest.get(mu, 0) - m
        return out

    def sl2_labels(self, l: int) -> dict[int, int]:
        out: dict[int, int] = {}
        for (p, q), m in self.levi_decomposition(l).items():
            out[p - q] = out.get(p - q, 0) + m
        return out


def _cochain_weight(module: WeightModule, alg: NilpotentAlgebra, subset, key):
    w = list(module.weights[key])
    for i in subset:
        root = alg.generators[i][1]
        w = [x - r for x, r in zip(w, root)]
    return tuple(w)


def _differential(module: WeightModule, alg: NilpotentAlgebra, subset, key) -> SparseVector:
    """d(eta_I (x) v) = sum_j eta_j ^ eta_I (x) E_j v."""
    out: SparseVector = {}
    for j, (op, _) in enumerate(alg.generators):
        if j in subset:
            continue
        image = module.apply(op, {key: Fraction(1)})
        if not image:
            continue
        sign = -1 if sum(1 for i in subset if i < j) % 2 else 1
        target = tuple(sorted(subset + (j,)))
        for k, c in image.items():
            out[(target, k)] = out.get((target, k), 0) + sign * c
    return out


def ce_cohomology(alg: NilpotentAlgebra, module: WeightModule, representatives: bool = True) -> CohomologyResult:
    """H^l(alg, module) for l = 0..dim, split by torus weight."""
    n = alg.dimension
    chains: dict[int, dict[tuple, list]] = {l: {} for l in range(n + 2)}
    for l in range(n + 1):
        for subset in itertools.combinations(range(n), l):
            for key in module.weights:
                chains[l].setdefault(_cochain_weight(module, alg, subset, key), []).append((subset, key))
    by_degree = []
    reps = []
    for l in range(n + 1):
        dims: dict[tuple[int, ...], int] = {}
        rep_l: dict[tuple[int, ...], list[SparseVector]] = {}
        for mu, basis in sorted(chains[l].items()):
            rows = [_differential(module, alg, s, k) for s, k in basis]
            # kernel of d on this weight block: solve sum x_b d(b) = 0
            columns = list(basis)
            transpose: dict[Hashable, SparseVector] = {}
            for b, row in zip(columns, rows):
                for k, c in row.items():
                    transpose.setdefault(k, {})[b] = c
            kernel = nullspace(list(transpose.values()), columns)
            image = Echelon(_differential(module, alg, s, k) for s, k in chains[l - 1].get(mu, [])) if l else Echelon()
            dim = len(kernel) - image.rank
            if dim:
                dims[mu] = dim
                if representatives:
                    span = Echelon(image.rows)
                    chosen = []
                    for v in kernel:
                        if span.add(v):
                            chosen.append(v)
                    rep_l[mu] = chosen
        by_degree.append(dims)
        reps.append(rep_l)
    return CohomologyResult(alg.name, module.name, tuple(by_degree), tuple(reps))


def euler_identity_holds(alg: NilpotentAlgebra, module: WeightModule, result: CohomologyResult) -> bool:
    expected = sum((-1) ** l * comb(alg.dimension, l) for l in range(alg.dimension + 1)) * module.dimension
    return result.euler_characteristic() == expected


def coefficient_module(alg: NilpotentAlgebra, label) -> WeightModule:
    """n_B: label m (H_m); n_P: label (c, d) (H_c x H_d); n_Q: a DominantWeight."""
    if alg.name == "n_B":
        return sl2_module(int(label))
    if alg.name == "n_P":
        c, d = label
        return sl2_pair_module(c, d)
    if not isinstance(label, DominantWeight):
        label = DominantWeight(*label)
    return sp4_module(label)


def ce(alg: NilpotentAlgebra | str, label, representatives: bool = True) -> CohomologyResult:
    if isinstance(alg, str):
        alg = ALGEBRAS[alg]
    return ce_cohomology(alg, coefficient_module(alg, label), representatives)


@dataclass(frozen=True)
class KostantLabel:
    parabolic: str
    degree: int
    weyl_length: int
    levi_weight: tuple[int, ...]

    @property
    def sl2_label(self) -> int:
        if self.parabolic == "B":
            return self.levi_weight[0]
        return self.levi_weight[0] - self.levi_weight[1]


def _length(element) -> int:
    return sum(1 for r in POSITIVE_ROOTS if weyl_act(element, r) not in POSITIVE_ROOTS)


def kostant_cohomology(parabolic: str, w, l: int) -> KostantLabel:
    """Levi representation carried by H^l of the nilradical.

    Q (Siegel, Levi GL2 with simple root (1,-1)): mu = x(lambda + rho) - rho for
    the unique x of length l with x(lambda + rho) Levi dominant.  B is the Borel
    of SL2 acting on H_m (``w`` an integer m): weight m in degree 0 and -m-2 in degree 1.
    """
    if parabolic == "B":
        m = w if isinstance(w, int) else w.a + w.b
        if l == 0:
            return KostantLabel("B", 0, 0, (m,))
        if l == 1:
            return KostantLabel("B", 1, 1, (-m - 2,))
        raise DegreeOutOfRange(f"n_B has dimension 1; degree {l} is out of range")
    if parabolic != "Q":
        raise ValueError(f"unknown parabolic {parabolic!r}")
    if not 0 <= l <= 3:
        raise DegreeOutOfRange(f"n_Q has dimension 3; degree {l} is out of range")
    if not isinstance(w, DominantWeight):
        w = DominantWeight(*w)
    shifted = (w.a + RHO[0], w.b + RHO[1])
    for x in weyl_group():
        y = weyl_act(x, shifted)
        if y[0] > y[1] and _length(x) == l:
            return KostantLabel("Q", l, l, (y[0] - RHO[0], y[1] - RHO[1]))
    raise AssertionError("no Kostant representative found")


def kostant_table(w: DominantWeight) -> dict[int, dict[tuple[int, int], int]]:
    return {l: {kostant_cohomology("Q", w, l).levi_weight: 1} for l in range(4)}


def hodge_weight_nP(c: int, d: int, torus: tuple[int, int]) -> int:
    """Hodge weight of a class of torus weight ``torus`` in H^*(n_P, H_c x H_d).

    X has weight 0, Y weight 2 and eta weight 2, i.e. weight = c + d - (e1 + e2).
    """
    return c + d - torus[0] - torus[1]


@dataclass(frozen=True)
class StalkTable:
    weight: DominantWeight
    source: WeightTable
    target_full: WeightTable
    target_invariant: WeightTable
    notes: tuple[str, ...] = field(default_factory=tuple)

    def to_json(self) -> dict:
        fmt = lambda t: [{"w": k, "dim": v} for k, v in sorted(t.items())]
        return {
            "pair": [self.weight.a, self.weight.b],
            "source": fmt(self.source),
            "target": fmt(self.target_full),
            "target_sigma_invariant": fmt(self.target_invariant),
            "notes": list(self.notes),
        }


def stalk_dimensions(w: DominantWeight) -> StalkTable:
    """Source H^1(n_P, H_{a-b} x H_0) and target H^1(SL2(Z), H_{a+b+2})^sigma of the boundary stalk map."""
    if (w.a + w.b) % 2:
        raise OddParity(f"{w} has odd a+b; sigma acts nontrivially and the stalk computation is not supported")
    if not w.a > w.b:
        raise ValueError("stalk computation needs a > b")
    c = w.a - w.b
    res = ce(N_P, (c, 0))
    source: WeightTable = {}
    for mu, d in res.by_degree[1].items():
        h = hodge_weight_nP(c, 0, mu)
        source[h] = source.get(h, 0) + d
    m = w.a + w.b + 2
    full = sl2z_cohomology(m)[1]
    s = dim_cusp_forms(m + 2)
    # sigma = diag(-1, 1) swaps the holomorphic and antiholomorphic halves of the cusp part
    # and fixes the Eisenstein class (the one with a GL2(Z)-invariant lift)
    invariant = {m + 1: s, 2 * m + 2: 1}
    notes = (f"dim H^1(SL2(Z), H_{m}) = 2 s_{m + 2} + 1 = {2 * s + 1}",
             f"sigma-invariants: s_{m + 2} + 1 = {s + 1}")
    return StalkTable(w, dict(sorted(source.items())), full, invariant, notes)
