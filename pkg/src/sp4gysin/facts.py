"""Imported cohomological facts, each tied to an entry of ``data/facts.json``.

Logic elsewhere never hard-codes an imported theorem: it asks this module,
which returns the value together with its citation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from sp4gysin.errors import MissingCitation
from sp4gysin.modular_forms import dim_cusp_forms

WeightTable = dict[int, int]


@dataclass(frozen=True)
class Citation:
    key: str
    source: str
    statement: str

    def __post_init__(self):
        if not self.source.strip() or not self.statement.strip():
            raise MissingCitation(f"fact {self.key!r} has an empty citation")

    def to_json(self) -> dict:
        return {"key": self.key, "source": self.source, "statement": self.statement}


@dataclass(frozen=True)
class CohomologyFact:
    space: str
    coefficient: str
    degree: int
    value: WeightTable
    citation: Citation
    exact: bool = True
    note: str = ""

    def __post_init__(self):
        if not isinstance(self.citation, Citation):
            raise MissingCitation(f"fact about H^{self.degree}({self.space}, {self.coefficient}) is uncited")


@lru_cache(maxsize=None)
def load_table() -> dict:
    raw = resources.files("sp4gysin").joinpath("data/facts.json").read_text(encoding="utf-8")
    return json.loads(raw)


@lru_cache(maxsize=None)
def citation(key: str) -> Citation:
    for entry in load_table()["facts"]:
        if entry["key"] == key:
            c = entry.get("citation") or {}
            return Citation(key, c.get("source", ""), c.get("statement", ""))
    raise MissingCitation(f"no fact {key!r} in the facts table")


def table_version() -> int:
    return load_table()["version"]


def odd_parity(a: int, b: int) -> bool:
    return (a + b) % 2 == 1


def sl2z_cohomology(m: int) -> dict[int, WeightTable]:
    """Weight-graded H^q(SL2(Z), H_m), q = 0, 1 (higher degrees vanish)."""
    out: dict[int, WeightTable] = {0: {}, 1: {}}
    if m == 0:
        out[0] = {0: 1}
    elif m % 2 == 0:
        # cusp slot kept even when s_{m+2} = 0
        out[1] = {m + 1: 2 * dim_cusp_forms(m + 2), 2 * m + 2: 1}
    return out


def sl2z_fact(m: int, degree: int) -> CohomologyFact:
    return CohomologyFact("M11", f"H_{m}", degree, sl2z_cohomology(m).get(degree, {}), citation("eichler_shimura"))


def h1_A2(a: int, b: int) -> CohomologyFact:
    coeff = f"V_{{{a}+{b}}}"
    if odd_parity(a, b):
        return CohomologyFact("A2", coeff, 1, {}, citation("parity_vanishing"))
    if a + b == 0:
        # H^1(Sp4(Z), Q) = 0 follows from H^1(Gamma_2, Q) = 0 and the Gysin sequence
        return CohomologyFact("A2", coeff, 1, {}, citation("mumford_h1_trivial"))
    return CohomologyFact("A2", coeff, 1, {}, citation("borel_h1_A2"))


def h2_A2(a: int, b: int) -> CohomologyFact:
    """H^2(A_2, V_{a+b}); for a = b even the weight slot 2a+2 is reported with a lower bound."""
    coeff = f"V_{{{a}+{b}}}"
    if odd_parity(a, b):
        return CohomologyFact("A2", coeff, 2, {}, citation("parity_vanishing"))
    if a + b == 0:
        return CohomologyFact("A2", coeff, 2, {2: 1}, citation("h2_A2_trivial"))
    if a == b and a % 2 == 0:
        k = a + b + 4
        s = dim_cusp_forms(k)
        note = f"s_{k} = 0: no cusp form of weight {k}" if s == 0 else "dimension is a lower bound"
        return CohomologyFact("A2", coeff, 2, {2 * a + 2: 1 if s else 0}, citation("petersen_h2_A2"),
                              exact=(s == 0), note=note)
    return CohomologyFact("A2", coeff, 2, {}, citation("petersen_h2_A2"))


def h3_A2_tate(a: int, b: int) -> CohomologyFact:
    """The Tate summand of H^3(A_2, V_{a+b}) that can receive the Gysin map (a > b)."""
    coeff = f"V_{{{a}+{b}}}"
    if odd_parity(a, b):
        return CohomologyFact("A2", coeff, 3, {}, citation("parity_vanishing"))
    if a > b:
        k = a + b + 4
        s = dim_cusp_forms(k)
        return CohomologyFact("A2", coeff, 3, {2 * a + 4: s}, citation("petersen_h3_A2_tate"), exact=False,
                              note=f"summand: s_{k} = {s} copies of Q(-{a + 2})")
    return CohomologyFact("A2", coeff, 3, {}, citation("petersen_h3_A2_tate"), exact=False,
                          note="only the summand receiving the Gysin map is tabulated; the source vanishes")


def gysin_h0_rank(a: int, b: int, source_dim: int, target: CohomologyFact) -> tuple[int, Citation | None]:
    """Rank of H^0(D11, V(-1)) -> H^2(A_2, V) with the fact that decides it."""
    if source_dim == 0 or not any(target.value.values()):
        return 0, None
    if a + b == 0:
        # H^1(M_2, Q) = 0 forces injectivity
        return source_dim, citation("mumford_h1_trivial")
    if a == b and a % 2 == 0 and a >= 4 and source_dim == 1:
        return 1, citation("petersen_gysin_h0")
    raise LookupError(f"no fact determines the degree-0 Gysin map for V_{{{a}+{b}}}")


@dataclass(frozen=True)
class FactsSummary:
    version: int
    keys: list[str] = field(default_factory=list)


def summary() -> FactsSummary:
    return FactsSummary(table_version(), [e["key"] for e in load_table()["facts"]])
