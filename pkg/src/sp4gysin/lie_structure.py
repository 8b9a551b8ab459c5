"""Plethystic operations: Adams operations, Lambda^2/Sym^2, free Lie algebra pieces."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import divisors
from sympy.functions.combinatorial.numbers import mobius

from sp4gysin.char_ring import DominantWeight, SymplecticCharacter, decompose_sp4, sp4_irrep_character
from sp4gysin.errors import HalfIntegerCoefficient, NonIntegralResult
from sp4gysin.laurent import LaurentPolynomial

DEFAULT_DEGREE_CAP = 7


@dataclass(frozen=True)
class GradedLiePiece:
    degree: int
    character: SymplecticCharacter

    @property
    def dimension(self) -> int:
        return self.character.dimension()


def adams(d: int, c: LaurentPolynomial) -> LaurentPolynomial:
    """psi^d: every torus variable t_i replaced by t_i^d."""
    if d < 1:
        raise ValueError("Adams operations are indexed by d >= 1")
    return c.map_exponents(lambda e: tuple(d * x for x in e))


def _halve(c: LaurentPolynomial) -> LaurentPolynomial:
    out = {}
    for e, v in c.items():
        if v % 2:
            raise HalfIntegerCoefficient(f"coefficient {v}/2 at {e}: input is not an actual character")
        out[e] = v // 2
    return LaurentPolynomial(out, nvars=c.nvars)


def lambda2(c: LaurentPolynomial) -> LaurentPolynomial:
    return _halve(c * c - adams(2, c))


def sym2(c: LaurentPolynomial) -> LaurentPolynomial:
    return _halve(c * c + adams(2, c))


def witt_dimension(dim: int, n: int) -> int:
    """Dimension of the degree-n part of a free Lie algebra on ``dim`` generators."""
    total = sum(int(mobius(d)) * dim ** (n // d) for d in divisors(n))
    if total % n:
        raise NonIntegralResult(f"Witt count not integral for dim={dim}, n={n}")
    return total // n


def free_lie_graded(c: SymplecticCharacter, n: int) -> GradedLiePiece:
    """Character of L_n(V) = (1/n) sum_{d | n} mu(d) psi^d(c)^{n/d}."""
    if n < 1:
        raise ValueError("degree must be positive")
    total = LaurentPolynomial.zero(c.nvars)
    for d in divisors(n):
        mu = int(mobius(d))
        if mu:
            total = total + adams(d, c) ** (n // d) * mu
    out = {}
    for e, v in total.items():
        q = Fraction(v, n)
        if q.denominator != 1:
            raise NonIntegralResult(f"coefficient {q} at {e} in degree {n}")
        out[e] = int(q)
    return GradedLiePiece(n, LaurentPolynomial(out, nvars=c.nvars))


@lru_cache(maxsize=None)
def _free_lie_decomposition(generator: DominantWeight, n: int) -> dict[DominantWeight, int]:
    return decompose_sp4(free_lie_graded(sp4_irrep_character(generator), n).character)


def free_lie_decomposition(generator: DominantWeight, n: int) -> dict[DominantWeight, int]:
    return dict(_free_lie_decomposition(generator, n))


def multiplicity_in_free_lie(target: DominantWeight, generator: DominantWeight, n: int) -> int:
    """Multiplicity of V_target in L_n(V_generator)."""
    return _free_lie_decomposition(generator, n).get(target, 0)
