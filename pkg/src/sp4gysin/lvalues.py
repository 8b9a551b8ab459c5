"""L-values, periods and nonvanishing certificates for level-one eigenforms.

For a cusp form f of weight k the completed function

    Lambda(s) = (2 pi)^{-s} Gamma(s) L(f, s) = int_0^oo f(iy) y^{s-1} dy

is split at y = c and the piece below c is folded back with f(-1/z) = z^k f(z):

    Lambda(s) = sum_n a(n) [ (2 pi n)^{-s} Gamma(s, 2 pi n c)
                             + i^k (2 pi n)^{s-k} Gamma(k - s, 2 pi n / c) ].

The result does not depend on c, which gives a non-tautological check of the
functional equation.  Truncation after N terms is bounded with
|a(n)| <= d(n) n^{(k-1)/2} <= 2 n^{k/2}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, ROUND_HALF_EVEN

import mpmath

from sp4gysin.errors import PrecisionUnreachable, UnsupportedWeight
from sp4gysin.modular_forms import QExpansion, dim_cusp_forms, eigenform

WORKING_DPS = 40
DEFAULT_TOLERANCE = 1e-12
CERTIFICATE_MARGIN = 10
DEFAULT_PRECISION = 60


@dataclass(frozen=True)
class LValue:
    s: float
    weight: int
    value: mpmath.mpf
    error_bound: mpmath.mpf
    terms: int

    def to_json(self) -> dict:
        return {
            "s": serialize_real(self.s),
            "weight": self.weight,
            "value": decimal_string(self.value, self.error_bound),
            "error_bound": bound_string(self.error_bound),
            "terms": self.terms,
            "provenance": "computed",
        }


@dataclass(frozen=True)
class PeriodValue:
    n: int
    weight: int
    value: mpmath.mpc
    error_bound: mpmath.mpf

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "weight": self.weight,
            "real": decimal_string(self.value.real, self.error_bound),
            "imag": decimal_string(self.value.imag, self.error_bound),
            "error_bound": bound_string(self.error_bound),
            "provenance": "computed",
        }


@dataclass(frozen=True)
class PeriodPolynomial:
    """r(f)(X, Y) = sum_n C(m, n) r_n(f) X^n Y^{m-n}, m = k - 2."""

    degree: int
    periods: tuple[PeriodValue, ...]

    def coefficient(self, n: int) -> mpmath.mpc:
        return math.comb(self.degree, n) * self.periods[n].value

    def modular_symbol(self, n: int) -> mpmath.mpc:
        """Projection onto the eigenline spanned by X^n Y^{m-n}."""
        return self.coefficient(n)

    def evaluate(self, x, y) -> mpmath.mpc:
        return mpmath.fsum(self.coefficient(n) * x**n * y ** (self.degree - n) for n in range(self.degree + 1))

    def to_json(self) -> dict:
        return {"degree": self.degree, "periods": [p.to_json() for p in self.periods]}


@dataclass(frozen=True)
class NonvanishingCertificate:
    a: int
    b: int
    weight: int
    s: int
    l_value: LValue
    margin: int
    convergence_inequality: bool
    certified: bool

    def to_json(self) -> dict:
        return {
            "pair": [self.a, self.b],
            "form_weight": self.weight,
            "evaluation_point": self.s,
            "l_value": self.l_value.to_json(),
            "margin": self.margin,
            "euler_product_inequality": f"2*({self.a}+2) > {self.a}+{self.b}+4",
            "euler_product_inequality_holds": self.convergence_inequality,
            "certified": self.certified,
        }


def bound_string(x) -> str:
    """Scientific notation rounded up to three significant digits."""
    x = mpmath.mpf(x)
    if x == 0:
        return "0"
    exp = int(mpmath.floor(mpmath.log10(x)))
    mant = mpmath.ceil(x / mpmath.mpf(10) ** (exp - 2))
    if mant >= 1000:
        mant, exp = mpmath.ceil(mant / 10), exp + 1
    return f"{int(mant) / 100:.2f}e{exp:+03d}"


def decimal_string(value, error) -> str:
    """``value`` rounded to the decimal places its error bound certifies."""
    error = mpmath.mpf(error)
    places = 30 if error == 0 else max(0, min(30, int(mpmath.floor(-mpmath.log10(error)))))
    with mpmath.workdps(WORKING_DPS):
        text = mpmath.nstr(mpmath.mpf(value), WORKING_DPS, min_fixed=-mpmath.inf, max_fixed=mpmath.inf)
    q = Decimal(text).quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN)
    if q == 0:
        q = abs(q)
    return format(q, "f")


def serialize_real(x) -> str:
    return format(Decimal(str(x)).normalize(), "f")


def _tail_bound(k: int, sigma, x, n_terms: int):
    """Bound on sum_{n > N} 2 n^{k/2} (2 pi n)^{-sigma} Gamma(sigma, 2 pi n x)."""
    big_x = 2 * mpmath.pi * (n_terms + 1) * x
    if sigma > 1:
        if big_x <= 2 * (sigma - 1):
            return mpmath.inf
        factor = 1 / (1 - (sigma - 1) / big_x)
    else:
        factor = mpmath.mpf(1)
    p = mpmath.mpf(k) / 2 - 1
    alpha = 2 * mpmath.pi * x
    first = mpmath.mpf(n_terms + 1) ** p * mpmath.exp(-alpha * (n_terms + 1))
    ratio = (mpmath.mpf(n_terms + 2) / (n_terms + 1)) ** p * mpmath.exp(-alpha)
    if ratio >= 1:
        return mpmath.inf
    return 2 * factor * x ** (sigma - 1) / (2 * mpmath.pi) * first / (1 - ratio)


def completed_l(f: QExpansion, s, split=1, n_terms: int | None = None):
    """(Lambda(f, s), truncation + rounding bound) using the first ``n_terms`` coefficients."""
    k = f.weight
    if not f.is_cusp_form():
        raise UnsupportedWeight("L-values are implemented for cusp forms only")
    n_terms = f.precision if n_terms is None else min(n_terms, f.precision)
    with mpmath.workdps(WORKING_DPS):
        s = mpmath.mpf(s)
        c = mpmath.mpf(split)
        eps = (-1) ** (k // 2)
        total = mpmath.mpf(0)
        magnitude = mpmath.mpf(0)
        for n in range(1, n_terms + 1):
            a = f[n]
            if a == 0:
                continue
            a = mpmath.mpf(a.numerator) / a.denominator
            x = 2 * mpmath.pi * n
            t1 = a * x ** (-s) * mpmath.gammainc(s, x * c)
            t2 = eps * a * x ** (s - k) * mpmath.gammainc(k - s, x / c)
            total += t1 + t2
            magnitude += abs(t1) + abs(t2)
        bound = _tail_bound(k, s, c, n_terms) + _tail_bound(k, k - s, 1 / c, n_terms)
        bound += magnitude * mpmath.mpf(10) ** (-(WORKING_DPS - 8))
        return +total, +bound


def l_value(f: QExpansion, s, tolerance: float = DEFAULT_TOLERANCE, split=1) -> LValue:
    """L(f, s) for 0 < s < k with a rigorous error bound below ``tolerance``."""
    k = f.weight
    if not 0 < s < k:
        raise ValueError(f"s = {s} outside the critical range (0, {k}); use the functional equation")
    with mpmath.workdps(WORKING_DPS):
        scale = (2 * mpmath.pi) ** mpmath.mpf(s) / mpmath.gamma(mpmath.mpf(s))
        n_terms = 1
        while True:
            tail = (_tail_bound(k, mpmath.mpf(s), mpmath.mpf(split), n_terms)
                    + _tail_bound(k, k - mpmath.mpf(s), 1 / mpmath.mpf(split), n_terms))
            if tail * scale < tolerance / 100 or n_terms >= f.precision:
                break
            n_terms += 1
        lam, bound = completed_l(f, s, split, n_terms)
        err = bound * scale
        if not err < tolerance:
            raise PrecisionUnreachable(
                f"error bound {mpmath.nstr(err, 3)} exceeds tolerance {tolerance} with {f.precision} coefficients"
            )
        return LValue(s=s, weight=k, value=lam * scale, error_bound=err, terms=n_terms)


def period(f: QExpansion, n: int, tolerance: float = DEFAULT_TOLERANCE) -> PeriodValue:
    """r_n(f) = int_0^{i oo} f(z) z^n dz = n! (-2 pi i)^{-n-1} L(f, n+1)."""
    m = f.weight - 2
    if not 0 <= n <= m:
        raise ValueError(f"period index {n} outside 0..{m}")
    lv = l_value(f, n + 1, tolerance)
    with mpmath.workdps(WORKING_DPS):
        factor = math.factorial(n) * (-2j * mpmath.pi) ** (-(n + 1))
        value = factor * lv.value
        err = abs(factor) * lv.error_bound
    return PeriodValue(n=n, weight=f.weight, value=value, error_bound=err)


def period_polynomial(f: QExpansion, tolerance: float = DEFAULT_TOLERANCE) -> PeriodPolynomial:
    m = f.weight - 2
    return PeriodPolynomial(degree=m, periods=tuple(period(f, n, tolerance) for n in range(m + 1)))


def euler_product(f: QExpansion, s, prime_bound: int = 100):
    """Truncated product over p <= prime_bound and a bound on log|L / partial product|."""
    k = f.weight
    primes = [p for p in range(2, prime_bound + 1) if all(p % q for q in range(2, int(p**0.5) + 1))]
    if primes[-1] > f.precision:
        raise PrecisionUnreachable("q-expansion too short for the requested primes")
    with mpmath.workdps(WORKING_DPS):
        s = mpmath.mpf(s)
        prod = mpmath.mpf(1)
        for p in primes:
            a = mpmath.mpf(int(f[p]))
            prod /= 1 - a * mpmath.mpf(p) ** (-s) + mpmath.mpf(p) ** (k - 1 - 2 * s)
        # each local factor is (1 - alpha p^-s)(1 - beta p^-s), |alpha| = |beta| = p^{(k-1)/2}
        expo = (k - 1) / mpmath.mpf(2) - s
        if expo >= -1:
            raise ValueError("Euler product does not converge absolutely at this point")
        # sum_{p > P} 2 x_p / (1 - x_p) with x_p = p^expo, dominated by an integral over n > P
        x0 = mpmath.mpf(prime_bound) ** expo
        log_tail = 2 / (1 - x0) * mpmath.mpf(prime_bound) ** (expo + 1) / (-(expo + 1))
        return prod, log_tail


def nonvanishing_check(a: int, b: int, tolerance: float = DEFAULT_TOLERANCE,
                       margin: int = CERTIFICATE_MARGIN, precision: int = DEFAULT_PRECISION) -> NonvanishingCertificate:
    """Certify L(f, a+3) != 0 for the eigenform f of weight a+b+4."""
    if (a + b) % 2 or not a > b >= 0:
        raise ValueError("need a + b even and a > b >= 0")
    k = a + b + 4
    s_k = dim_cusp_forms(k)
    if s_k == 0:
        raise UnsupportedWeight(f"s_{k} = 0: no cusp form of weight {k}, nothing to certify")
    if s_k != 1:
        raise UnsupportedWeight(f"s_{k} = {s_k}: multi-dimensional cusp space, not machine-certified")
    f = eigenform(k, precision)
    lv = l_value(f, a + 3, tolerance)
    inequality = 2 * (a + 2) > a + b + 4
    certified = bool(inequality and abs(lv.value) > margin * lv.error_bound)
    return NonvanishingCertificate(a=a, b=b, weight=k, s=a + 3, l_value=lv, margin=margin,
                                   convergence_inequality=inequality, certified=certified)
