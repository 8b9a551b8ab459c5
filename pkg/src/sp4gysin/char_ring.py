"""Characters of Sp4 and SL2 as exact Laurent polynomials.

Sp4 characters live on the maximal torus diag(t1, t2, 1/t1, 1/t2).  An
irreducible representation is labelled by a partition (a, b), a >= b >= 0,
whose highest weight is t1^a t2^b; in fundamental-weight coordinates this
is [a - b, b].
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from functools import lru_cache

from sp4gysin.errors import NotARepresentation
from sp4gysin.laurent import LaurentPolynomial

SymplecticCharacter = LaurentPolynomial
SL2Character = LaurentPolynomial

RHO = (2, 1)
POSITIVE_ROOTS = ((1, -1), (1, 1), (2, 0), (0, 2))


@dataclass(frozen=True, order=True)
class DominantWeight:
    a: int
    b: int

    def __post_init__(self):
        if not (isinstance(self.a, int) and isinstance(self.b, int)):
            raise TypeError("weights are integers")
        if not self.a >= self.b >= 0:
            raise ValueError(f"({self.a},{self.b}) is not dominant: need a >= b >= 0")

    @classmethod
    def parse(cls, text: str) -> DominantWeight:
        a, b = (int(x) for x in text.replace("(", "").replace(")", "").split(","))
        return cls(a, b)

    @property
    def size(self) -> int:
        return self.a + self.b

    @property
    def fundamental(self) -> tuple[int, int]:
        """Coordinates [n1, n2] in the basis lambda_1 = t1, lambda_2 = t1 t2."""
        return (self.a - self.b, self.b)

    @property
    def dimension(self) -> int:
        a, b = self.a, self.b
        return (a - b + 1) * (b + 1) * (a + 2) * (a + b + 3) // 6

    def __str__(self) -> str:
        return f"V_{{{self.a}+{self.b}}}"

    def key(self) -> str:
        return f"{self.a},{self.b}"


def weyl_group() -> list[tuple[tuple[int, int], tuple[int, int], int]]:
    """Signed permutations of two coordinates as (permutation, signs, determinant)."""
    out = []
    for perm in ((0, 1), (1, 0)):
        for signs in itertools.product((1, -1), repeat=2):
            det = (1 if perm == (0, 1) else -1) * signs[0] * signs[1]
            out.append((perm, signs, det))
    return out


def weyl_act(element, e: tuple[int, int]) -> tuple[int, int]:
    perm, signs, _ = element
    return (signs[0] * e[perm[0]], signs[1] * e[perm[1]])


def is_weyl_invariant(c: SymplecticCharacter) -> bool:
    return all(c.map_exponents(lambda e, g=g: weyl_act(g, e)) == c for g in weyl_group())


def _alternant(e: tuple[int, int]) -> LaurentPolynomial:
    return LaurentPolynomial({weyl_act(g, e): g[2] for g in weyl_group()}, nvars=2)


def _divide_by_binomial(p: LaurentPolynomial, root: tuple[int, int]) -> LaurentPolynomial:
    """Exact quotient p / (1 - t^{-root}) for a positive root."""
    # rho-height is positive on every positive root, so peeling terms from the top
    # in that order is long division.
    def height(e):
        return RHO[0] * e[0] + RHO[1] * e[1]

    floor = min(height(e) for e in p)
    pending = dict(p.items())
    heap = [(-height(e), e) for e in pending]
    heapq.heapify(heap)
    quotient: dict[tuple[int, int], int] = {}
    while heap:
        _, e = heapq.heappop(heap)
        c = pending.pop(e, 0)
        if c == 0:
            continue
        if height(e) < floor + height(root):
            raise ArithmeticError("polynomial is not divisible by the Weyl denominator factor")
        quotient[e] = quotient.get(e, 0) + c
        lower = (e[0] - root[0], e[1] - root[1])
        if lower not in pending:
            heapq.heappush(heap, (-height(lower), lower))
        pending[lower] = pending.get(lower, 0) + c
    return LaurentPolynomial(quotient, nvars=2)


@lru_cache(maxsize=None)
def _sp4_character(a: int, b: int) -> SymplecticCharacter:
    numerator = _alternant((a + RHO[0], b + RHO[1]))
    for root in POSITIVE_ROOTS:
        numerator = _divide_by_binomial(numerator, root)
    return numerator.map_exponents(lambda e: (e[0] - RHO[0], e[1] - RHO[1]))


def sp4_irrep_character(w: DominantWeight) -> SymplecticCharacter:
    """Character of V_{a+b} from the Weyl character formula for C2."""
    return _sp4_character(w.a, w.b)


@lru_cache(maxsize=None)
def sl2_irrep_character(m: int) -> SL2Character:
    """Character u^m + u^{m-2} + ... + u^{-m} of H_m = Sym^m H."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return LaurentPolynomial({(m - 2 * i,): 1 for i in range(m + 1)}, nvars=1)


def standard_character() -> SymplecticCharacter:
    return sp4_irrep_character(DominantWeight(1, 0))


def character_from_decomposition(table: dict[DominantWeight, int]) -> SymplecticCharacter:
    total = LaurentPolynomial.zero(2)
    for w, m in table.items():
        total = total + sp4_irrep_character(w) * m
    return total


def decompose_sp4(c: SymplecticCharacter) -> dict[DominantWeight, int]:
    """Multiplicities of irreducibles in ``c`` by highest-weight peeling.

    Raises NotARepresentation if a negative multiplicity appears or if a
    non-Weyl-invariant remainder is left over.
    """
    return _peel_sp4(c, allow_negative=False)


def _peel_sp4(c: SymplecticCharacter, allow_negative: bool) -> dict[DominantWeight, int]:
    if c.nvars != 2:
        raise ValueError("an Sp4 character has two variables")
    rest = c
    out: dict[DominantWeight, int] = {}
    while True:
        dominant = [e for e in rest if e[0] >= e[1] >= 0]
        if not dominant:
            break
        top = max(dominant)
        mult = rest[top]
        if mult < 0 and not allow_negative:
            raise NotARepresentation(f"negative multiplicity {mult} at highest weight {top}")
        w = DominantWeight(*top)
        out[w] = out.get(w, 0) + mult
        rest = rest - sp4_irrep_character(w) * mult
    if rest:
        raise NotARepresentation("remainder is not Weyl invariant")
    return dict(sorted(out.items(), reverse=True))


def decompose_sl2(c: SL2Character) -> dict[int, int]:
    return _peel_sl2(c, allow_negative=False)


def _peel_sl2(c: SL2Character, allow_negative: bool) -> dict[int, int]:
    if c.nvars != 1:
        raise ValueError("an SL2 character has one variable")
    rest = c
    out: dict[int, int] = {}
    while True:
        top = max((e[0] for e in rest if e[0] >= 0), default=None)
        if top is None:
            break
        mult = rest[(top,)]
        if mult < 0 and not allow_negative:
            raise NotARepresentation(f"negative multiplicity {mult} at H_{top}")
        out[top] = out.get(top, 0) + mult
        rest = rest - sl2_irrep_character(top) * mult
    if rest:
        raise NotARepresentation("remainder is not invariant under u -> 1/u")
    return dict(sorted(out.items(), reverse=True))


def virtual_decompose_sl2(c: SL2Character) -> dict[int, int]:
    """Like ``decompose_sl2`` but signed multiplicities are allowed."""
    return _peel_sl2(c, allow_negative=True)


def decompose_sl2xsl2(c: LaurentPolynomial) -> dict[tuple[int, int], int]:
    """Decompose a two-variable character of SL2 x SL2 into H_a (x) H_b.

    For an invariant character the multiplicity of H_p (x) H_q is the second
    difference c[p,q] - c[p+2,q] - c[p,q+2] + c[p+2,q+2].
    """
    if c.nvars != 2:
        raise ValueError("an SL2 x SL2 character has two variables")
    if c.map_exponents(lambda e: (-e[0], e[1])) != c or c.map_exponents(lambda e: (e[0], -e[1])) != c:
        raise NotARepresentation("character is not invariant under the SL2 x SL2 Weyl group")
    out: dict[tuple[int, int], int] = {}
    for p, q in c:
        if p < 0 or q < 0:
            continue
        m = c[(p, q)] - c[(p + 2, q)] - c[(p, q + 2)] + c[(p + 2, q + 2)]
        if m < 0:
            raise NotARepresentation(f"negative multiplicity at H_{p} x H_{q}")
        if m:
            out[(p, q)] = m
    return dict(sorted(out.items(), reverse=True))
