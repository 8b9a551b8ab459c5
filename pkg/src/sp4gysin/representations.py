"""Explicit weight-basis models of the coefficient modules used for nilpotent cohomology.

V_{a+b} is realised as the Cartan component of Sym^{a-b} V (x) Sym^b Lambda^2 V
generated by e1^{a-b} (e1 ^ e2)^b.  The symplectic form is
omega(e1, e3) = omega(e2, e4) = 1, so the torus is diag(t1, t2, 1/t1, 1/t2)
and e1, e2, e3, e4 have weights (1,0), (0,1), (-1,0), (0,-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Hashable

from sp4gysin.char_ring import DominantWeight
from sp4gysin.linalg import Echelon, SparseVector

Matrix4 = dict[tuple[int, int], int]  # (row, col) -> entry, 0-based; X e_j = sum_i X[i, j] e_i

# sp4 root vectors, 0-based indices
E_ALPHA1 = {(0, 1): 1, (3, 2): -1}  # root (1,-1)
F_ALPHA1 = {(1, 0): 1, (2, 3): -1}
E_ALPHA2 = {(1, 3): 1}  # root (0,2)
F_ALPHA2 = {(3, 1): 1}
SIEGEL_RADICAL = (
    ((2, 0), {(0, 2): 1}),
    ((1, 1), {(0, 3): 1, (1, 2): 1}),
    ((0, 2), {(1, 3): 1}),
)

_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
_PAIR_INDEX = {p: 4 + i for i, p in enumerate(_PAIRS)}
_VAR_WEIGHT = [(1, 0), (0, 1), (-1, 0), (0, -1)]
_VAR_WEIGHT += [tuple(_VAR_WEIGHT[i][k] + _VAR_WEIGHT[j][k] for k in range(2)) for i, j in _PAIRS]


def _wedge(i: int, j: int) -> tuple[int, int] | None:
    """(variable index, sign) for e_i ^ e_j."""
    if i == j:
        return None
    if i < j:
        return _PAIR_INDEX[(i, j)], 1
    return _PAIR_INDEX[(j, i)], -1


def _variable_images(x: Matrix4) -> list[dict[int, int]]:
    images: list[dict[int, int]] = [dict() for _ in range(10)]
    for (i, j), c in x.items():
        images[j][i] = images[j].get(i, 0) + c
    for (k, l), var in _PAIR_INDEX.items():
        out: dict[int, int] = {}
        for (i, j), c in x.items():
            if j == k:
                w = _wedge(i, l)
            elif j == l:
                w = _wedge(k, i)
            else:
                continue
            if w:
                out[w[0]] = out.get(w[0], 0) + c * w[1]
        images[var] = {v: c for v, c in out.items() if c}
    return images


def act(x: Matrix4, vec: SparseVector) -> SparseVector:
    """Derivation action of a 4x4 matrix on polynomials in e_i and e_i ^ e_j."""
    images = _variable_images(x)
    out: SparseVector = {}
    for key, coeff in vec.items():
        for var, e in enumerate(key):
            if not e:
                continue
            for target, c in images[var].items():
                new = list(key)
                new[var] -= 1
                new[target] += 1
                new = tuple(new)
                out[new] = out.get(new, 0) + coeff * e * c
    return {k: v for k, v in out.items() if v}


def monomial_weight(key: tuple[int, ...]) -> tuple[int, int]:
    return (sum(e * w[0] for e, w in zip(key, _VAR_WEIGHT)), sum(e * w[1] for e, w in zip(key, _VAR_WEIGHT)))


@dataclass
class WeightModule:
    """A finite-dimensional module with a weight basis and a family of commuting operators.

    ``operators`` maps a name to a sparse matrix: basis key -> {basis key: coeff}.
    """

    name: str
    weights: dict[Hashable, tuple[int, ...]]
    operators: dict[str, dict[Hashable, SparseVector]]

    @property
    def dimension(self) -> int:
        return len(self.weights)

    def apply(self, op: str, vec: SparseVector) -> SparseVector:
        out: SparseVector = {}
        for k, c in vec.items():
            for k2, c2 in self.operators[op].get(k, {}).items():
                out[k2] = out.get(k2, 0) + c * c2
        return {k: v for k, v in out.items() if v}

    def dual(self) -> WeightModule:
        """V* with X acting by -X^T and negated weights."""
        ops: dict[str, dict[Hashable, SparseVector]] = {}
        for name, mat in self.operators.items():
            t: dict[Hashable, SparseVector] = {}
            for k, row in mat.items():
                for k2, c in row.items():
                    t.setdefault(k2, {})[k] = -c
            ops[name] = t
        return WeightModule(f"{self.name}*", {k: tuple(-x for x in w) for k, w in self.weights.items()}, ops)


def sl2_module(m: int) -> WeightModule:
    """H_m with basis X^{m-i} Y^i (key i) and e = X d/dY, so e X^{m-i} Y^i = i X^{m-i+1} Y^{i-1}."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    weights = {i: (m - 2 * i,) for i in range(m + 1)}
    e = {i: {i - 1: Fraction(i)} for i in range(1, m + 1)}
    return WeightModule(f"H_{m}", weights, {"e": e})


def sl2_pair_module(c: int, d: int) -> WeightModule:
    """H_c (x) H_d for SL2 x SL2 with the two Borel generators e1 = e (x) 1, e2 = 1 (x) e."""
    weights = {(i, j): (c - 2 * i, d - 2 * j) for i in range(c + 1) for j in range(d + 1)}
    e1 = {(i, j): {(i - 1, j): Fraction(i)} for i in range(1, c + 1) for j in range(d + 1)}
    e2 = {(i, j): {(i, j - 1): Fraction(j)} for i in range(c + 1) for j in range(1, d + 1)}
    return WeightModule(f"H_{c}xH_{d}", weights, {"e1": e1, "e2": e2})


@dataclass(frozen=True)
class ExplicitIrrep:
    weight: DominantWeight
    basis: dict[tuple[int, int], list[SparseVector]]  # RREF rows per torus weight

    def weight_multiplicities(self) -> dict[tuple[int, int], int]:
        return {mu: len(rows) for mu, rows in self.basis.items()}

    @property
    def dimension(self) -> int:
        return sum(len(r) for r in self.basis.values())


def highest_weight_vector(w: DominantWeight) -> SparseVector:
    key = [0] * 10
    key[0] = w.a - w.b
    key[_PAIR_INDEX[(0, 1)]] = w.b
    return {tuple(key): Fraction(1)}


@lru_cache(maxsize=None)
def explicit_irrep(w: DominantWeight) -> ExplicitIrrep:
    """Weight-space bases of V_{a+b}, generated from the highest weight vector by F_alpha1 and F_alpha2."""
    ech: dict[tuple[int, int], Echelon] = {}
    hv = highest_weight_vector(w)
    top = (w.a, w.b)
    ech[top] = Echelon([hv])
    # process weights in decreasing rho-height so each space is complete before it is lowered
    pending = {top}
    while pending:
        mu = max(pending, key=lambda m: (2 * m[0] + m[1], m))
        pending.discard(mu)
        for f, root in ((F_ALPHA1, (1, -1)), (F_ALPHA2, (0, 2))):
            nu = (mu[0] - root[0], mu[1] - root[1])
            for row in ech[mu].rows:
                v = act(f, row)
                if v:
                    ech.setdefault(nu, Echelon()).add(v)
                    pending.add(nu)
    return ExplicitIrrep(w, {mu: [dict(r) for r in e.rows] for mu, e in sorted(ech.items())})


def sp4_module(w: DominantWeight, operators: tuple = SIEGEL_RADICAL) -> WeightModule:
    """V_{a+b} with the given sp4 elements expressed as matrices in the explicit weight basis."""
    rep = explicit_irrep(w)
    ech = {mu: Echelon(rows) for mu, rows in rep.basis.items()}
    weights = {}
    for mu, rows in rep.basis.items():
        for i in range(len(rows)):
            weights[(mu, i)] = mu
    ops: dict[str, dict[Hashable, SparseVector]] = {}
    for root, x in operators:
        mat: dict[Hashable, SparseVector] = {}
        for mu, rows in rep.basis.items():
            nu = (mu[0] + root[0], mu[1] + root[1])
            for i, row in enumerate(rows):
                img = act(x, row)
                if not img:
                    continue
                coords = ech[nu].coordinates(img)
                mat[(mu, i)] = {(nu, j): c for j, c in enumerate(coords) if c}
        ops[str(root)] = mat
    return WeightModule(str(w), weights, ops)
