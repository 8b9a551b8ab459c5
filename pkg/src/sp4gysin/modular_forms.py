"""Level-one modular forms as exact truncated q-expansions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import bernoulli

from sp4gysin.errors import UnsupportedWeight


def dim_cusp_forms(k: int) -> int:
    """s_k, the dimension of weight-k cusp forms for SL2(Z)."""
    if k < 12 or k % 2:
        return 0
    if k % 12 == 2:
        return k // 12 - 1
    return k // 12


def dim_modular_forms(k: int) -> int:
    if k < 0 or k % 2:
        return 0
    if k == 0:
        return 1
    if k == 2:
        return 0
    return dim_cusp_forms(k) + 1


def eisenstein_monomials(k: int) -> list[tuple[int, int]]:
    """Exponent pairs (i, j) with 4i + 6j = k: the monomial basis E4^i E6^j of M_k."""
    return [(i, (k - 4 * i) // 6) for i in range(k // 4 + 1) if (k - 4 * i) >= 0 and (k - 4 * i) % 6 == 0]


def _kronecker_mul_nonneg(a: list[int], b: list[int], n: int) -> list[int]:
    if not a or not b or not any(a) or not any(b):
        return [0] * n
    bound = max(a) * max(b) * min(len(a), len(b), n)
    width = (bound.bit_length() + 8) // 8
    pa = int.from_bytes(b"".join(x.to_bytes(width, "little") for x in a[:n]), "little")
    pb = int.from_bytes(b"".join(x.to_bytes(width, "little") for x in b[:n]), "little")
    raw = (pa * pb).to_bytes(width * (2 * n + 1), "little")
    return [int.from_bytes(raw[i * width:(i + 1) * width], "little") for i in range(n)]


def multiply_int_series(a: list[int], b: list[int], n: int) -> list[int]:
    """First ``n`` coefficients of a*b for integer power series (Kronecker substitution)."""
    ap = [max(x, 0) for x in a]
    am = [max(-x, 0) for x in a]
    bp = [max(x, 0) for x in b]
    bm = [max(-x, 0) for x in b]
    pp = _kronecker_mul_nonneg(ap, bp, n)
    mm = _kronecker_mul_nonneg(am, bm, n)
    pm = _kronecker_mul_nonneg(ap, bm, n)
    mp = _kronecker_mul_nonneg(am, bp, n)
    return [w + x - y - z for w, x, y, z in zip(pp, mm, pm, mp)]


@dataclass(frozen=True)
class QExpansion:
    """sum_{n=0}^{precision} a(n) q^n with exact rational coefficients."""

    weight: int
    coefficients: tuple[Fraction, ...]

    @property
    def precision(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficients[n]

    def is_cusp_form(self) -> bool:
        return self.coefficients[0] == 0

    def _common_denominator(self) -> int:
        return math.lcm(*(c.denominator for c in self.coefficients))

    def _as_ints(self) -> tuple[list[int], int]:
        d = self._common_denominator()
        return [int(c * d) for c in self.coefficients], d

    def __mul__(self, other):
        if not isinstance(other, QExpansion):
            return QExpansion(self.weight, tuple(c * other for c in self.coefficients))
        n = min(self.precision, other.precision) + 1
        a, da = self._as_ints()
        b, db = other._as_ints()
        prod = multiply_int_series(a, b, n)
        return QExpansion(self.weight + other.weight, tuple(Fraction(x, da * db) for x in prod))

    __rmul__ = __mul__

    def __add__(self, other: QExpansion) -> QExpansion:
        if self.weight != other.weight:
            raise ValueError("cannot add forms of different weight")
        n = min(self.precision, other.precision) + 1
        return QExpansion(self.weight, tuple(x + y for x, y in zip(self.coefficients[:n], other.coefficients[:n])))

    def __sub__(self, other: QExpansion) -> QExpansion:
        return self + other * -1

    def __pow__(self, e: int) -> QExpansion:
        result = QExpansion(0, (Fraction(1),) + (Fraction(0),) * self.precision)
        for _ in range(e):
            result = result * self
        return result

    def truncate(self, n: int) -> QExpansion:
        return QExpansion(self.weight, self.coefficients[: n + 1])

    def normalized(self) -> QExpansion:
        lead = next(c for c in self.coefficients if c != 0)
        return self * (1 / lead)

    def integer_coefficients(self) -> list[int]:
        if any(c.denominator != 1 for c in self.coefficients):
            raise ValueError("coefficients are not all integers")
        return [int(c) for c in self.coefficients]


def divisor_sums(power: int, n: int) -> list[int]:
    """sigma_power(m) for m = 0..n (entry 0 is 0)."""
    out = [0] * (n + 1)
    for d in range(1, n + 1):
        dp = d**power
        for m in range(d, n + 1, d):
            out[m] += dp
    return out


def divisor_counts(n: int) -> list[int]:
    return divisor_sums(0, n)


@lru_cache(maxsize=None)
def eisenstein(k: int, precision: int) -> QExpansion:
    """Normalized Eisenstein series E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n, k >= 4 even."""
    if k < 4 or k % 2:
        raise UnsupportedWeight(f"no level-one Eisenstein series of weight {k}")
    b = bernoulli(k)
    factor = Fraction(-2 * k) / Fraction(int(b.p), int(b.q))
    sig = divisor_sums(k - 1, precision)
    coeffs = [Fraction(1)] + [factor * sig[n] for n in range(1, precision + 1)]
    return QExpansion(k, tuple(coeffs))


@lru_cache(maxsize=None)
def delta(precision: int) -> QExpansion:
    """Delta = (E4^3 - E6^2) / 1728."""
    e4 = eisenstein(4, precision)
    e6 = eisenstein(6, precision)
    return (e4 * e4 * e4 - e6 * e6) * Fraction(1, 1728)


EIGENFORM_WEIGHTS = (12, 16, 18, 20, 22, 26)


@lru_cache(maxsize=None)
def eigenform(k: int, precision: int) -> QExpansion:
    """The normalized Hecke eigenform of weight k when the cusp space is a line."""
    if dim_cusp_forms(k) != 1:
        raise UnsupportedWeight(f"s_{k} = {dim_cusp_forms(k)}; only one-dimensional cusp spaces are supported")
    (i, j), = eisenstein_monomials(k - 12)
    f = delta(precision)
    for _ in range(i):
        f = f * eisenstein(4, precision)
    for _ in range(j):
        f = f * eisenstein(6, precision)
    return f.normalized()


def monomial_basis(k: int, precision: int) -> list[QExpansion]:
    out = []
    for i, j in eisenstein_monomials(k):
        f = QExpansion(0, (Fraction(1),) + (Fraction(0),) * precision)
        for _ in range(i):
            f = f * eisenstein(4, precision)
        for _ in range(j):
            f = f * eisenstein(6, precision)
        out.append(f)
    return out


def hecke_defects(f: QExpansion, limit: int | None = None) -> list[tuple[int, int]]:
    """Pairs (m, n), gcd 1, with mn <= limit where a(mn) != a(m) a(n)."""
    limit = f.precision if limit is None else min(limit, f.precision)
    a = f.integer_coefficients()
    bad = []
    for m in range(2, limit + 1):
        for n in range(m + 1, limit // m + 1):
            if math.gcd(m, n) == 1 and a[m * n] != a[m] * a[n]:
                bad.append((m, n))
    return bad


def deligne_violations(f: QExpansion, limit: int | None = None) -> list[int]:
    """n with |a(n)| > d(n) n^{(k-1)/2}, tested exactly via squares."""
    limit = f.precision if limit is None else min(limit, f.precision)
    a = f.integer_coefficients()
    d = divisor_counts(limit)
    k = f.weight
    return [n for n in range(1, limit + 1) if a[n] * a[n] > d[n] * d[n] * n ** (k - 1)]
