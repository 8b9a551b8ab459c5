"""Exact linear algebra over the rationals on sparse vectors (dict column -> Fraction)."""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping

SparseVector = dict[Hashable, Fraction]


def _clean(vec: Mapping) -> SparseVector:
    return {k: Fraction(v) for k, v in vec.items() if v != 0}


class Echelon:
    """Incrementally maintained reduced row echelon basis of a subspace.

    Each stored row has a pivot key with coefficient 1, and every pivot key is
    zero in all other rows, so coordinates of a vector in the span are read off
    at the pivot positions.
    """

    def __init__(self, vectors: Iterable[Mapping] = ()):
        self.rows: list[SparseVector] = []
        self.pivots: list[Hashable] = []
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Mapping) -> SparseVector:
        r = _clean(vec)
        for pivot, row in zip(self.pivots, self.rows):
            c = r.get(pivot)
            if c:
                for k, v in row.items():
                    nv = r.get(k, 0) - c * v
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
        return r

    def add(self, vec: Mapping) -> bool:
        """Insert ``vec``; return False if it already lies in the span."""
        r = self.reduce(vec)
        if not r:
            return False
        pivot = min(r, key=_sort_key)
        scale = r[pivot]
        r = {k: v / scale for k, v in r.items()}
        for row in self.rows:
            c = row.get(pivot)
            if c:
                for k, v in r.items():
                    nv = row.get(k, 0) - c * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        self.rows.append(r)
        self.pivots.append(pivot)
        return True

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)

    def coordinates(self, vec: Mapping) -> list[Fraction]:
        """Coordinates of ``vec`` in the stored basis; raises if not in the span."""
        if not self.contains(vec):
            raise ValueError("vector is not in the span")
        v = _clean(vec)
        return [v.get(p, Fraction(0)) for p in self.pivots]


def _sort_key(k):
    return (str(type(k)), k)


def rank(rows: Iterable[Mapping]) -> int:
    return Echelon(rows).rank


def nullspace(rows: list[Mapping], columns: list[Hashable]) -> list[SparseVector]:
    """Basis of {x : row . x = 0 for every row}, x indexed by ``columns``."""
    ech = Echelon()
    order = {c: i for i, c in enumerate(columns)}
    # pivot choice by column order keeps the free columns well defined
    for row in rows:
        r = ech.reduce(row)
        if not r:
            continue
        pivot = min(r, key=order.__getitem__)
        scale = r[pivot]
        r = {k: v / scale for k, v in r.items()}
        for other in ech.rows:
            c = other.get(pivot)
            if c:
                for k, v in r.items():
                    nv = other.get(k, 0) - c * v
                    if nv:
                        other[k] = nv
                    else:
                        other.pop(k, None)
        ech.rows.append(r)
        ech.pivots.append(pivot)
    pivot_set = set(ech.pivots)
    basis = []
    for free in columns:
        if free in pivot_set:
            continue
        vec: SparseVector = {free: Fraction(1)}
        for pivot, row in zip(ech.pivots, ech.rows):
            c = row.get(free)
            if c:
                vec[pivot] = -c
        basis.append(vec)
    return basis
