"""Sp4 character calculus and Gysin-sequence bookkeeping for the genus-two
relative completion: generators and relation bounds from first principles."""

from sp4gysin.char_ring import (
    DominantWeight,
    decompose_sl2,
    decompose_sp4,
    sl2_irrep_character,
    sp4_irrep_character,
)
from sp4gysin.laurent import LaurentPolynomial

__version__ = "0.1.0"

__all__ = [
    "DominantWeight",
    "LaurentPolynomial",
    "decompose_sl2",
    "decompose_sp4",
    "sl2_irrep_character",
    "sp4_irrep_character",
]
