"""Sparse Laurent polynomials with integer coefficients in a fixed number of variables."""

from __future__ import annotations

from typing import Callable, Iterable, Iterator, Mapping

Exponent = tuple[int, ...]


class LaurentPolynomial:
    """Immutable sparse Laurent polynomial: exponent tuple -> nonzero coefficient.

    Coefficients are normally ``int``; ``fractions.Fraction`` is tolerated for
    intermediate values (see ``lie_structure``).
    """

    __slots__ = ("_terms", "nvars", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = (), nvars: int | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponent, int] = {}
        for exp, coeff in items:
            exp = tuple(int(e) for e in exp)
            if nvars is None:
                nvars = len(exp)
            elif len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have {nvars} entries")
            clean[exp] = clean.get(exp, 0) + coeff
        if nvars is None:
            raise ValueError("nvars is required for the zero polynomial")
        self._terms = {e: c for e, c in clean.items() if c != 0}
        self.nvars = nvars
        self._hash: int | None = None

    @classmethod
    def monomial(cls, exp: Exponent, coeff: int = 1) -> LaurentPolynomial:
        return cls({tuple(exp): coeff})

    @classmethod
    def constant(cls, value: int, nvars: int) -> LaurentPolynomial:
        return cls({(0,) * nvars: value}, nvars=nvars)

    @classmethod
    def zero(cls, nvars: int) -> LaurentPolynomial:
        return cls({}, nvars=nvars)

    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __iter__(self) -> Iterator[Exponent]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __getitem__(self, exp: Exponent) -> int:
        return self._terms.get(tuple(exp), 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _coerce(self, other) -> LaurentPolynomial:
        if isinstance(other, LaurentPolynomial):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return LaurentPolynomial.constant(other, self.nvars)

    def __add__(self, other) -> LaurentPolynomial:
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out, nvars=self.nvars)

    __radd__ = __add__

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial({e: -c for e, c in self._terms.items()}, nvars=self.nvars)

    def __sub__(self, other) -> LaurentPolynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> LaurentPolynomial:
        return self._coerce(other) - self

    def __mul__(self, other) -> LaurentPolynomial:
        if not isinstance(other, LaurentPolynomial):
            return LaurentPolynomial({e: c * other for e, c in self._terms.items()}, nvars=self.nvars)
        other = self._coerce(other)
        out: dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial(out, nvars=self.nvars)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPolynomial:
        if n < 0:
            raise ValueError("negative powers of Laurent polynomials are not supported")
        result = LaurentPolynomial.constant(1, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPolynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, int):
            return self == LaurentPolynomial.constant(other, self.nvars)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def map_exponents(self, f: Callable[[Exponent], Exponent], nvars: int | None = None) -> LaurentPolynomial:
        """Substitute monomials; colliding images are summed."""
        out: dict[Exponent, int] = {}
        for e, c in self._terms.items():
            e2 = tuple(f(e))
            out[e2] = out.get(e2, 0) + c
        return LaurentPolynomial(out, nvars=self.nvars if nvars is None else nvars)

    def map_coefficients(self, f: Callable) -> LaurentPolynomial:
        return LaurentPolynomial({e: f(c) for e, c in self._terms.items()}, nvars=self.nvars)

    def evaluate(self, point: Iterable) -> object:
        point = tuple(point)
        total = 0
        for e, c in self._terms.items():
            term = c
            for x, k in zip(point, e):
                term = term * x**k
            total = total + term
        return total

    def dimension(self) -> int:
        """Value at the identity (all variables 1)."""
        return sum(self._terms.values())

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        return sorted(self._terms.items(), reverse=True)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        names = ["t1", "t2", "t3", "t4"] if self.nvars > 1 else ["u"]
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"{names[i]}^{k}" if k != 1 else names[i] for i, k in enumerate(e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")
