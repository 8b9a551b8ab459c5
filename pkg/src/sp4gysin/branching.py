"""Restriction of Sp4 irreducibles to SL2 x SL2 x| S2 and cohomology on D11.

SL2 x SL2 sits block-diagonally: the first factor acts on <e1, e3>, the
second on <e2, e4>, so the torus element (u, v) is diag(u, v, 1/u, 1/v) and
the untwisted restriction is plain substitution (t1, t2) -> (u, v).  The swap
sigma exchanges e1 <-> e2 and e3 <-> e4.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from sp4gysin.char_ring import (
    DominantWeight,
    SL2Character,
    decompose_sl2xsl2,
    sp4_irrep_character,
    virtual_decompose_sl2,
)
from sp4gysin.errors import InconsistentTraces
from sp4gysin.facts import WeightTable, sl2z_cohomology
from sp4gysin.laurent import LaurentPolynomial

Graded = dict[int, WeightTable]


def restrict_untwisted(w: DominantWeight) -> dict[tuple[int, int], int]:
    """Multiplicities of H_c (x) H_d in the restriction of V_{a+b} to SL2 x SL2."""
    return decompose_sl2xsl2(sp4_irrep_character(w))


def sigma_twisted_trace(w: DominantWeight) -> SL2Character:
    """Trace of sigma . diag(x, y, 1/x, 1/y) on V_{a+b}, as a polynomial in w = sqrt(xy).

    On <e1, e2> the element is [[0, y], [x, 0]] with eigenvalues +w, -w, and
    on <e3, e4> the eigenvalues are +1/w, -1/w.  So it is conjugate in Sp4 to
    the torus point (t1, t2) = (w, -w).  Choosing -w for the root is harmless
    since the Weyl group contains t1 <-> t2.
    """
    c = sp4_irrep_character(w)
    out: dict[tuple[int], int] = {}
    for (e1, e2), m in c.items():
        key = (e1 + e2,)
        out[key] = out.get(key, 0) + m * (-1) ** (e2 % 2)
    return LaurentPolynomial(out, nvars=1)


def sigma_signed_multiplicities(w: DominantWeight) -> dict[int, int]:
    """m_a^+ - m_a^- for every a, read off the twisted trace with u = w^2."""
    trace = sigma_twisted_trace(w)
    if any(e[0] % 2 for e in trace):
        raise InconsistentTraces("twisted trace has odd powers of w")
    return {a: m for a, m in virtual_decompose_sl2(trace.map_exponents(lambda e: (e[0] // 2,))).items() if m}


@dataclass(frozen=True)
class WreathDecomposition:
    off_diagonal: dict[tuple[int, int], int] = field(default_factory=dict)
    diag_plus: dict[int, int] = field(default_factory=dict)
    diag_minus: dict[int, int] = field(default_factory=dict)

    def dimension(self) -> int:
        off = sum(2 * (a + 1) * (b + 1) * m for (a, b), m in self.off_diagonal.items())
        diag = sum((a + 1) ** 2 * m for a, m in self.diag_plus.items())
        diag += sum((a + 1) ** 2 * m for a, m in self.diag_minus.items())
        return off + diag

    def off(self, a: int, b: int) -> int:
        return self.off_diagonal.get((max(a, b), min(a, b)), 0)

    def to_json(self) -> dict:
        return {
            "offDiagonal": [{"pair": list(k), "mult": v} for k, v in sorted(self.off_diagonal.items(), reverse=True)],
            "diagPlus": [{"a": k, "mult": v} for k, v in sorted(self.diag_plus.items(), reverse=True)],
            "diagMinus": [{"a": k, "mult": v} for k, v in sorted(self.diag_minus.items(), reverse=True)],
        }


def restrict_wreath(w: DominantWeight) -> WreathDecomposition:
    untwisted = restrict_untwisted(w)
    signed = sigma_signed_multiplicities(w)
    off: dict[tuple[int, int], int] = {}
    plus: dict[int, int] = {}
    minus: dict[int, int] = {}
    for (c, d), m in untwisted.items():
        if c > d:
            if untwisted.get((d, c), 0) != m:
                raise InconsistentTraces(f"restriction not symmetric at ({c},{d})")
            off[(c, d)] = m
        elif c == d:
            diff = signed.get(c, 0)
            if (m + diff) % 2 or abs(diff) > m:
                raise InconsistentTraces(f"m+ + m- = {m} and m+ - m- = {diff} at a = {c}")
            if (m + diff) // 2:
                plus[c] = (m + diff) // 2
            if (m - diff) // 2:
                minus[c] = (m - diff) // 2
    stray = set(signed) - {c for (c, d) in untwisted if c == d}
    if stray:
        raise InconsistentTraces(f"twisted trace sees H_a with no diagonal block: {sorted(stray)}")
    return WreathDecomposition(off, plus, minus)


# Weight-graded super linear algebra on H^0, H^1.

def _shift(table: WeightTable, by: int) -> WeightTable:
    return {w + by: d for w, d in table.items()}


def _add_into(target: WeightTable, table: WeightTable, mult: int = 1) -> None:
    for w, d in table.items():
        target[w] = target.get(w, 0) + mult * d


def _tensor(x: WeightTable, y: WeightTable) -> WeightTable:
    out: WeightTable = {}
    for w1, d1 in x.items():
        for w2, d2 in y.items():
            out[w1 + w2] = out.get(w1 + w2, 0) + d1 * d2
    return out


def _square(x: WeightTable, symmetric: bool) -> WeightTable:
    out: WeightTable = {}
    items = sorted(x.items())
    for i, (w1, d1) in enumerate(items):
        same = d1 * (d1 + 1) // 2 if symmetric else d1 * (d1 - 1) // 2
        if same:
            out[2 * w1] = out.get(2 * w1, 0) + same
        for w2, d2 in items[i + 1:]:
            out[w1 + w2] = out.get(w1 + w2, 0) + d1 * d2
    return out


def kunneth(x: Graded, y: Graded) -> Graded:
    """Degrees 0 and 1 of the tensor product of two graded weight tables."""
    return {
        0: _tensor(x.get(0, {}), y.get(0, {})),
        1: _merge(_tensor(x.get(1, {}), y.get(0, {})), _tensor(x.get(0, {}), y.get(1, {}))),
    }


def _merge(p: WeightTable, q: WeightTable) -> WeightTable:
    out = dict(p)
    _add_into(out, q)
    return out


def graded_square(x: Graded, symmetric: bool) -> Graded:
    """Degrees 0 and 1 of the graded Sym^2 (or Lambda^2); degree 1 is H^0 (x) H^1 either way."""
    return {0: _square(x.get(0, {}), symmetric), 1: _tensor(x.get(0, {}), x.get(1, {}))}


@dataclass(frozen=True)
class D11Contribution:
    family: str  # "U", "U+", "U-"
    label: tuple[int, ...]
    multiplicity: int
    twist: int
    cohomology: Graded


@dataclass(frozen=True)
class D11Cohomology:
    weight: DominantWeight
    twist: int
    h0: WeightTable
    h1: WeightTable
    contributions: tuple[D11Contribution, ...]

    def degree(self, q: int) -> WeightTable:
        return {0: self.h0, 1: self.h1}.get(q, {})

    def total(self, q: int) -> int:
        return sum(self.degree(q).values())


def cohomology_D11(w: DominantWeight, twist: int = 0) -> D11Cohomology:
    """Weight-graded H^0 and H^1 of D11 with coefficients V_{a+b}(twist).

    A summand built from H_c and H_d carries the Tate twist -(a+b-c-d)/2 so
    that it has the Hodge weight of V_{a+b}; the extra ``twist`` lowers all
    weights by 2 * twist.
    """
    n = w.a + w.b
    if n % 2:
        return D11Cohomology(w, twist, {}, {}, ())
    dec = restrict_wreath(w)
    h0: WeightTable = {}
    h1: WeightTable = {}
    parts = []

    def absorb(family, label, mult, size, graded):
        inner = (n - size) // 2
        shift = 2 * inner - 2 * twist
        g = {q: _shift(t, shift) for q, t in graded.items()}
        parts.append(D11Contribution(family, label, mult, twist - inner, g))
        _add_into(h0, g.get(0, {}), mult)
        _add_into(h1, g.get(1, {}), mult)

    for (c, d), m in sorted(dec.off_diagonal.items(), reverse=True):
        absorb("U", (c, d), m, c + d, kunneth(sl2z_cohomology(c), sl2z_cohomology(d)))
    for a, m in sorted(dec.diag_plus.items(), reverse=True):
        absorb("U+", (a,), m, 2 * a, graded_square(sl2z_cohomology(a), True))
    for a, m in sorted(dec.diag_minus.items(), reverse=True):
        absorb("U-", (a,), m, 2 * a, graded_square(sl2z_cohomology(a), False))
    return D11Cohomology(w, twist, dict(sorted(h0.items())), dict(sorted(h1.items())), tuple(parts))
