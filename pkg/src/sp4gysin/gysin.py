"""Gysin-sequence weight bookkeeping for A_2, M_2 = A_2 - D11 and the divisor D11.

The two pieces of the long exact sequence used are

    0 -> H^1(A2, V) -> H^1(M2, V) -> H^0(D11, V(-1)) -> H^2(A2, V)
      -> H^2(M2, V) -> H^1(D11, V(-1)) -> H^3(A2, V)

Everything imported (vanishing theorems, nonvanishing of Gysin maps,
Eichler-Shimura) comes from ``facts`` with its citation attached.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from sp4gysin.branching import cohomology_D11
from sp4gysin.char_ring import DominantWeight
from sp4gysin.errors import MissingCitation, OddParity, UnsupportedWeight
from sp4gysin.facts import Citation, CohomologyFact, WeightTable, citation, gysin_h0_rank, h1_A2, h2_A2, h3_A2_tate
from sp4gysin.lie_structure import DEFAULT_DEGREE_CAP, multiplicity_in_free_lie
from sp4gysin.lvalues import nonvanishing_check
from sp4gysin.modular_forms import dim_cusp_forms

DEFAULT_SWEEP = 30
STABILITY_RANGE = (16, 60)


@dataclass(frozen=True)
class TateTwisted:
    """V_{a+b}(m), or Q(m) when ``label`` is None; Hodge weight (a+b) - 2m."""

    label: DominantWeight | None
    twist: int

    @property
    def hodge_weight(self) -> int:
        size = 0 if self.label is None else self.label.size
        return size - 2 * self.twist

    def twisted(self, m: int) -> TateTwisted:
        return TateTwisted(self.label, self.twist + m)

    def __str__(self) -> str:
        if self.label is None:
            return f"Q({self.twist})"
        return f"{self.label}({self.twist})"

    def to_json(self) -> dict:
        return {
            "module": str(self),
            "pair": None if self.label is None else [self.label.a, self.label.b],
            "twist": self.twist,
            "hodge_weight": self.hodge_weight,
        }


def _nonzero(table: WeightTable) -> WeightTable:
    return {w: d for w, d in table.items() if d}


@dataclass(frozen=True)
class GysinMap:
    name: str
    source: str
    target: str
    rank: dict[int, int | None]  # weight -> rank, None when no fact decides it
    citation: Citation | None

    def to_json(self) -> dict:
        return {
            "map": self.name,
            "source": self.source,
            "target": self.target,
            "rank": [{"w": w, "rank": r} for w, r in sorted(self.rank.items())],
            "citation": None if self.citation is None else self.citation.to_json(),
        }


def _gysin_h0(w: DominantWeight) -> tuple[WeightTable, CohomologyFact, GysinMap]:
    source = cohomology_D11(w, -1).h0
    target = h2_A2(w.a, w.b)
    rank: dict[int, int | None] = {}
    cit = None
    total = sum(source.values())
    if total:
        r, cit = gysin_h0_rank(w.a, w.b, total, target)
        for weight, d in source.items():
            rank[weight] = min(r, d)
    return source, target, GysinMap("gysin_0", "H^0(D11, V(-1))", "H^2(A2, V)", rank, cit)


def _gysin_h1(w: DominantWeight, certify: bool = False):
    source = cohomology_D11(w, -1).h1
    target = h3_A2_tate(w.a, w.b)
    rank: dict[int, int | None] = {}
    cit = None
    certificate = None
    if w.a > w.b and (w.a + w.b) % 2 == 0:
        tate = 2 * w.a + 4
        s = dim_cusp_forms(w.a + w.b + 4)
        if source.get(tate):
            if s:
                rank[tate] = 1
                cit = citation("gysin_tate_nonvanishing")
                if certify and s == 1:
                    certificate = nonvanishing_check(w.a, w.b)
            else:
                rank[tate] = 0
        for weight in source:
            # the cusp-form slot maps into a part of H^3 that is not tabulated
            rank.setdefault(weight, None)
    return source, target, GysinMap("gysin_1", "H^1(D11, V(-1))", "H^3(A2, V)", rank, cit), certificate


def h1_M2(w: DominantWeight) -> WeightTable:
    """Weight-graded H^1(M2, V_{a+b}) = H^1(A2, V) + ker(H^0(D11, V(-1)) -> H^2(A2, V))."""
    if (w.a + w.b) % 2:
        return {}
    out = dict(_nonzero(h1_A2(w.a, w.b).value))
    source, _, g0 = _gysin_h0(w)
    for weight, d in source.items():
        k = d - (g0.rank.get(weight) or 0)
        if k:
            out[weight] = out.get(weight, 0) + k
    return dict(sorted(out.items()))


def h2_M2_weights(w: DominantWeight) -> set[int]:
    """Weights that H^2(M2, V_{a+b}) can carry: slots of H^2(A2, V) and of H^1(D11, V(-1))."""
    if (w.a + w.b) % 2:
        return set()
    return set(h2_A2(w.a, w.b).value) | set(cohomology_D11(w, -1).h1)


def _pairs(max_weight: int):
    for n in range(max_weight + 1):
        for b in range(n // 2 + 1):
            yield DominantWeight(n - b, b)


def generator_sweep(max_weight: int = DEFAULT_SWEEP) -> list[TateTwisted]:
    """Every V_lambda(m) in H_1(u_2): H^1(M2, V_lambda) of weight 2m contributes V_lambda(m)."""
    out = []
    for w in _pairs(max_weight):
        for weight, d in h1_M2(w).items():
            if weight % 2:
                raise ArithmeticError(f"odd weight {weight} in H^1(M2, {w})")
            out.extend([TateTwisted(w, weight // 2)] * d)
    return out


def generator_module(max_weight: int = DEFAULT_SWEEP) -> TateTwisted:
    found = generator_sweep(max_weight)
    if len(found) != 1:
        raise ArithmeticError(f"expected a single generator module, found {[str(g) for g in found]}")
    return found[0]


@dataclass(frozen=True)
class RelationCandidate:
    weight: DominantWeight
    twist: int
    lcs_degree: int
    free_lie_multiplicity: int

    @property
    def module(self) -> TateTwisted:
        return TateTwisted(self.weight, self.twist)

    def to_json(self) -> dict:
        return {
            "pair": [self.weight.a, self.weight.b],
            "module": str(self.module),
            "hodge_weight": self.module.hodge_weight,
            "lcsDegree": self.lcs_degree,
            "freeLieMultiplicity": self.free_lie_multiplicity,
        }


@dataclass(frozen=True)
class Exclusion:
    weight: DominantWeight
    cusp_dimension: int
    status: str  # "certified", "uncertified", "cited, not machine-certified"
    certificate: object | None = None

    def to_json(self) -> dict:
        return {
            "pair": [self.weight.a, self.weight.b],
            "s": self.cusp_dimension,
            "form_weight": self.weight.size + 4,
            "status": self.status,
            "certificate": None if self.certificate is None else self.certificate.to_json(),
            "citation": citation("gysin_tate_nonvanishing").to_json(),
        }


@dataclass(frozen=True)
class RelationReport:
    generator: TateTwisted
    candidates: tuple[RelationCandidate, ...]
    exclusions: tuple[Exclusion, ...]
    max_weight: int
    stable: bool

    @property
    def degrees(self) -> list[int]:
        return sorted({c.lcs_degree for c in self.candidates})

    def occurring(self) -> list[RelationCandidate]:
        return [c for c in self.candidates if c.free_lie_multiplicity > 0]

    def ruled_out_by_free_lie(self) -> list[RelationCandidate]:
        return [c for c in self.candidates if c.free_lie_multiplicity == 0]


def stability_holds(lo: int = STABILITY_RANGE[0], hi: int = STABILITY_RANGE[1]) -> bool:
    """s_k > 0 for every even k in [lo, hi], so no candidate appears beyond a+b = 10."""
    return all(dim_cusp_forms(k) > 0 for k in range(lo, hi + 1, 2))


def relation_candidates(certify: bool = False, max_weight: int = DEFAULT_SWEEP,
                        generator: TateTwisted | None = None) -> RelationReport:
    """Modules V_{a+b}(m) that can occur in H_2(u_2).

    A weight slot w of H^2(M2, V_lambda) gives V_lambda in H_2 with Hodge weight
    |lambda| - w.  The free Lie algebra on the generator only has weights that
    are positive multiples of the generator weight, and H_2 sits in bracket
    length >= 2.  The Tate slot 2a+4 survives only if the Gysin map into H^3(A2)
    vanishes on it, which cannot happen once s_{a+b+4} > 0.
    """
    gen = generator if generator is not None else generator_module(max_weight)
    gw = gen.hodge_weight
    if gw >= 0:
        raise ArithmeticError("the generator must have negative weight")
    cands = []
    excl = []
    for w in _pairs(max_weight):
        if (w.a + w.b) % 2:
            continue
        for slot in sorted(h2_M2_weights(w)):
            hodge = w.size - slot
            if hodge % gw or hodge // gw < 2:
                continue
            m = hodge // gw
            s = dim_cusp_forms(w.size + 4) if w.a > w.b else 0
            if w.a > w.b and slot == 2 * w.a + 4 and s:
                if s == 1 and certify:
                    cert = nonvanishing_check(w.a, w.b)
                    excl.append(Exclusion(w, s, "certified" if cert.certified else "uncertified", cert))
                elif s == 1:
                    excl.append(Exclusion(w, s, "uncertified"))
                else:
                    excl.append(Exclusion(w, s, "cited, not machine-certified"))
                continue
            if m > DEFAULT_DEGREE_CAP:
                raise UnsupportedWeight(f"candidate {w} in degree {m} exceeds the free Lie degree cap")
            twist = (w.size - hodge) // 2
            mult = multiplicity_in_free_lie(w, gen.label, m)
            cands.append(RelationCandidate(w, twist, m, mult))
    return RelationReport(gen, tuple(cands), tuple(excl), max_weight, stability_holds())


@dataclass
class LedgerTerm:
    term: str
    space: str
    coefficient: str
    twist: int
    weights: WeightTable
    provenance: str  # "computed" or "cited-fact"
    citation: Citation | None = None
    exact: bool = True
    note: str = ""

    def __post_init__(self):
        if self.provenance == "cited-fact" and self.citation is None:
            raise MissingCitation(f"term {self.term} is a cited fact without a citation")

    def to_json(self) -> dict:
        return {
            "term": self.term,
            "space": self.space,
            "coefficient": self.coefficient,
            "twist": self.twist,
            "weights": [{"w": w, "dim": d} for w, d in sorted(self.weights.items())],
            "citation": None if self.citation is None else self.citation.to_json(),
            "provenance": self.provenance,
            "exact": self.exact,
            "note": self.note,
        }


@dataclass
class WeightLedger:
    weight: DominantWeight
    terms: list[LedgerTerm]
    maps: list[GysinMap]
    certificates: list = field(default_factory=list)

    def term(self, name: str) -> LedgerTerm:
        return next(t for t in self.terms if t.term == name)

    def validate(self) -> bool:
        """Each determined nonzero rank sits on a weight present on both sides of its map."""
        by_name = {t.term: t for t in self.terms}
        for g in self.maps:
            src, tgt = by_name[g.source], by_name[g.target]
            for weight, r in g.rank.items():
                if weight not in src.weights:
                    return False
                if r and (src.weights[weight] < r or tgt.weights.get(weight, 0) < r):
                    return False
        return True

    def to_json(self) -> dict:
        return {
            "pair": [self.weight.a, self.weight.b],
            "terms": [t.to_json() for t in self.terms],
            "maps": [g.to_json() for g in self.maps],
            "certificates": [c.to_json() for c in self.certificates],
            "consistent": self.validate(),
        }


def _fact_term(name: str, fact: CohomologyFact, twist: int = 0) -> LedgerTerm:
    return LedgerTerm(name, fact.space, fact.coefficient, twist, dict(fact.value), "cited-fact",
                      fact.citation, fact.exact, fact.note)


def weight_ledger_report(w: DominantWeight, certify: bool = False) -> WeightLedger:
    if (w.a + w.b) % 2:
        raise OddParity(f"{w}: a+b odd, every term vanishes by parity")
    coeff = str(w)
    d11 = cohomology_D11(w, -1)
    _, h2_fact, g0 = _gysin_h0(w)
    _, h3_fact, g1, cert = _gysin_h1(w, certify)
    es = citation("eichler_shimura")
    terms = [
        _fact_term("H^1(A2, V)", h1_A2(w.a, w.b)),
        LedgerTerm("H^1(M2, V)", "M2", coeff, 0, h1_M2(w), "computed"),
        LedgerTerm("H^0(D11, V(-1))", "D11", coeff, -1, dict(d11.h0), "computed", es),
        _fact_term("H^2(A2, V)", h2_fact),
        LedgerTerm("H^2(M2, V)", "M2", coeff, 0, {x: None for x in sorted(h2_M2_weights(w))}, "computed",
                   exact=False, note="possible weights only; dimensions not determined"),
        LedgerTerm("H^1(D11, V(-1))", "D11", coeff, -1, dict(d11.h1), "computed", es),
        _fact_term("H^3(A2, V)", h3_fact),
    ]
    ledger = WeightLedger(w, terms, [g0, g1], [cert] if cert is not None else [])
    if not ledger.validate():
        raise ArithmeticError(f"weight mismatch across a Gysin map for {w}")
    return ledger


def theorem_a(max_weight: int = DEFAULT_SWEEP, certify: bool = True) -> dict:
    gens = generator_sweep(max_weight)
    if len(gens) != 1:
        raise ArithmeticError(f"expected one generator module, found {len(gens)}")
    gen = gens[0]
    rel = relation_candidates(certify=certify, max_weight=max_weight, generator=gen)
    return {
        "generator": gen.to_json(),
        "generator_sweep_max_weight": max_weight,
        "candidates": [c.to_json() for c in rel.candidates],
        "candidate_pairs": [[c.weight.a, c.weight.b] for c in rel.candidates],
        "degree_range": [min(rel.degrees), max(rel.degrees)],
        "degrees": rel.degrees,
        "free_lie_zero": [[c.weight.a, c.weight.b] for c in rel.ruled_out_by_free_lie()],
        "exclusions": [e.to_json() for e in rel.exclusions],
        "stable_beyond_sweep": rel.stable,
        "note": "H_2(u_2) is a subrepresentation of the listed candidates; which ones occur is not determined",
    }
