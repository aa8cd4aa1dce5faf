"""
Hilbert-Poincare series of the sl2 diagonal centralizer, computed three ways,
plus the Catalan / Riordan combinatorics of its numerator.

All coefficients are exact integers.  Laurent expansions use y = x^2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Sequence


class NonIntegralCoefficient(ArithmeticError):
    """A dimension count came out non-integral, which can only be a bug."""


# ----------------------------------------------------------------------
# polynomials


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple  # lowest degree first, trailing zeros trimmed

    def __init__(self, coeffs: Sequence[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        m = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (m - len(self.coeffs))
        b = other.coeffs + (0,) * (m - len(other.coeffs))
        return IntPolynomial([x + y for x, y in zip(a, b)])

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        acc = IntPolynomial([1])
        for _ in range(k):
            acc = acc * self
        return acc

    def reversed(self, d: int) -> "IntPolynomial":
        """t^d * p(1/t); requires d >= degree."""
        if d < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        c = list(self.coeffs) + [0] * (d + 1 - len(self.coeffs))
        return IntPolynomial(c[::-1])

    def to_list(self) -> list:
        return list(self.coeffs)


def _binomial_power(sign: int, k: int, step: int = 1) -> IntPolynomial:
    """(1 + sign*t^step)^k."""
    base = [0] * (step + 1)
    base[0], base[step] = 1, sign
    return IntPolynomial(base) ** k


# ----------------------------------------------------------------------
# truncated power series


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series in t known up to and including t^K."""

    K: int
    coeffs: tuple

    def __init__(self, K: int, coeffs: Sequence[int] = ()):
        if K < 0:
            raise ValueError("truncation degree must be non-negative")
        c = []
        for x in list(coeffs)[: K + 1]:
            if isinstance(x, float) or (hasattr(x, "denominator") and x.denominator != 1):
                raise NonIntegralCoefficient(f"coefficient {x!r} is not an integer")
            c.append(int(x))
        c += [0] * (K + 1 - len(c))
        object.__setattr__(self, "K", K)
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_poly(cls, p: IntPolynomial, K: int) -> "TruncatedSeries":
        return cls(K, p.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        K = min(self.K, other.K)
        return TruncatedSeries(K, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        K = min(self.K, other.K)
        return TruncatedSeries(K, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, int):
            return TruncatedSeries(self.K, [c * other for c in self.coeffs])
        K = min(self.K, other.K)
        out = [0] * (K + 1)
        for i, a in enumerate(self.coeffs[: K + 1]):
            if a:
                for j in range(K + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(K, out)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        """Reciprocal; the constant term must be +1 or -1 to stay integral."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise NonIntegralCoefficient("only series with unit constant term are invertible over Z")
        inv = [0] * (self.K + 1)
        inv[0] = c0
        for k in range(1, self.K + 1):
            s = sum(self.coeffs[j] * inv[k - j] for j in range(1, k + 1))
            inv[k] = -s * c0
        return TruncatedSeries(self.K, inv)

    def to_list(self) -> list:
        return list(self.coeffs)


class LaurentSeriesInY:
    """Finite sum over y-exponents of truncated t-series: sum_e y^e * S_e(t)."""

    def __init__(self, K: int, parts: dict | None = None):
        self.K = K
        self.parts = {e: s for e, s in (parts or {}).items() if any(s.coeffs)}

    @classmethod
    def monomial(cls, K: int, y_exp: int, t_coeffs: Sequence[int]) -> "LaurentSeriesInY":
        return cls(K, {y_exp: TruncatedSeries(K, t_coeffs)})

    def __mul__(self, other: "LaurentSeriesInY") -> "LaurentSeriesInY":
        K = min(self.K, other.K)
        out: dict = {}
        for e1, s1 in self.parts.items():
            for e2, s2 in other.parts.items():
                # each t carries at most one power of y, so |y-exponent| <= K
                if abs(e1 + e2) > K:
                    continue
                prod = s1 * s2
                e = e1 + e2
                out[e] = out[e] + prod if e in out else prod
        return LaurentSeriesInY(K, out)

    def constant_term(self) -> TruncatedSeries:
        return self.parts.get(0, TruncatedSeries(self.K))


# ----------------------------------------------------------------------
# combinatorial sequences


def catalan(r: int) -> int:
    if r < 0:
        raise ValueError("r must be non-negative")
    return comb(2 * r, r) - comb(2 * r, r + 1)


def _laurent_constant_term(factors: Sequence[dict]) -> int:
    """Constant term of a product of Laurent polynomials given as {exp: coeff}."""
    acc = {0: 1}
    for f in factors:
        nxt: dict = {}
        for e1, c1 in acc.items():
            for e2, c2 in f.items():
                nxt[e1 + e2] = nxt.get(e1 + e2, 0) + c1 * c2
        acc = nxt
    return acc.get(0, 0)


def riordan(k: int) -> int:
    """Constant term of (1 - y)(1 + y + 1/y)^k."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return _laurent_constant_term([{0: 1, 1: -1}] + [{-1: 1, 0: 1, 1: 1}] * k)


def riordan_binomial(k: int) -> int:
    """The same numbers as the inverse binomial transform of Catalan numbers."""
    return sum((-1) ** (k - i) * comb(k, i) * catalan(i) for i in range(k + 1))


def a_coeff(r: int, k: int) -> int:
    if k % 2 == 0:
        return comb(r, k // 2) ** 2
    return comb(r, k // 2) * comb(r, k // 2 + 1)


def q_poly(r: int) -> IntPolynomial:
    if r < 0:
        raise ValueError("r must be non-negative")
    return IntPolynomial([(-1) ** k * a_coeff(r, k) for k in range(2 * r + 1)])


def q_poly_constant_term(r: int) -> IntPolynomial:
    """Q_r via the constant term in y of (1 - y)(1 + t y)^r (1 + t/y)^r."""
    # Laurent polynomial in y with IntPolynomial(t) coefficients
    acc: dict = {0: IntPolynomial([1]), 1: IntPolynomial([-1])}
    for step, y_exp in [(r, 1), (r, -1)]:
        for _ in range(step):
            nxt: dict = {}
            for e, p in acc.items():
                nxt[e] = nxt.get(e, IntPolynomial()) + p
                shifted = p * IntPolynomial([0, 1])
                nxt[e + y_exp] = nxt.get(e + y_exp, IntPolynomial()) + shifted
            acc = nxt
    return acc.get(0, IntPolynomial())


def p_poly(r: int) -> IntPolynomial:
    return _binomial_power(1, r) * q_poly(r)


def riordan_expansion(r: int) -> IntPolynomial:
    """sum_k R_k C(r,k) (1+t^3)^(r-k) (t+t^2)^k."""
    acc = IntPolynomial()
    for k in range(r + 1):
        term = _binomial_power(1, r - k, 3) * (IntPolynomial([0, 1, 1]) ** k)
        acc = acc + term * (riordan(k) * comb(r, k))
    return acc


def check_palindrome(r: int) -> bool:
    p = p_poly(r)
    return p.reversed(3 * r) == p


def check_riordan_expansion(r: int) -> bool:
    return p_poly(r) == riordan_expansion(r)


def check_gould_identity(a: int, b: int, k: int, kp: int) -> bool:
    lhs = sum(
        comb(i + a + b, i) * comb(b, k - i) * comb(a, kp - i)
        for i in range(0, min(k, kp) + 1)
    )
    return lhs == comb(kp + b, k) * comb(k + a, kp)


# ----------------------------------------------------------------------
# the three routes to F_n(t)


def _check_n(n: int) -> None:
    if n < 2:
        raise ValueError("the series is defined for n >= 2")


def closed_form_series(n: int, K: int) -> TruncatedSeries:
    """P_r(t) / (1 - t^2)^(3(r+1)) with r = n - 2."""
    _check_n(n)
    r = n - 2
    denom = TruncatedSeries.from_poly(_binomial_power(-1, 3 * (r + 1), 2), K)
    return TruncatedSeries.from_poly(p_poly(r), K) * denom.inverse()


def constant_term_series(n: int, K: int) -> TruncatedSeries:
    """[ (1 - y) / ((1-t)^n (1-t y)^n (1-t/y)^n) ]_0, expanded to t^K."""
    _check_n(n)
    geom = [comb(k + n - 1, k) for k in range(K + 1)]
    # (1 - t y)^-n and (1 - t/y)^-n: the y-exponent equals the t-exponent (+/-)
    up = LaurentSeriesInY(K, {k: TruncatedSeries(K, [0] * k + [geom[k]]) for k in range(K + 1)})
    down = LaurentSeriesInY(K, {-k: TruncatedSeries(K, [0] * k + [geom[k]]) for k in range(K + 1)})
    front = LaurentSeriesInY(K, {0: TruncatedSeries(K, geom), 1: TruncatedSeries(K, [-g for g in geom])})
    return (front * up * down).constant_term()


def a_tilde(n: int, k: int) -> int:
    m = k // 2
    if k % 2 == 0:
        return comb(n + m - 1, m) ** 2
    return comb(n + m - 1, m) * comb(n + m, m + 1)


def tilde_formula_series(n: int, K: int) -> TruncatedSeries:
    """(1-t)^-n * sum_k (-1)^k a~_k t^k."""
    _check_n(n)
    alt = TruncatedSeries(K, [(-1) ** k * a_tilde(n, k) for k in range(K + 1)])
    one_minus_t = TruncatedSeries.from_poly(_binomial_power(-1, n), K)
    return alt * one_minus_t.inverse()


# ----------------------------------------------------------------------
# multigraded series


def compositions(k: int, parts: int, caps: Sequence[int] | None = None) -> Iterator[tuple]:
    """Weak compositions of k into `parts` parts in lexicographic order, optionally capped."""
    if parts == 0:
        if k == 0:
            yield ()
        return
    cap = k if caps is None else min(k, caps[0])
    rest_caps = None if caps is None else caps[1:]
    if rest_caps is not None and k - cap > sum(rest_caps):
        return
    for first in range(cap + 1):
        for tail in compositions(k - first, parts - 1, rest_caps):
            yield (first,) + tail


@dataclass
class MultiSeries:
    n: int
    bounds: tuple
    coeffs: dict = field(default_factory=dict)
    max_total: int | None = None

    def __getitem__(self, exps: tuple) -> int:
        return self.coeffs.get(tuple(exps), 0)

    def specialize(self) -> TruncatedSeries:
        """Set every t_a = t.  Complete up to min(bounds) (and max_total if set)."""
        K = min(self.bounds)
        if self.max_total is not None:
            K = min(K, self.max_total)
        out = [0] * (K + 1)
        for exps, c in self.coeffs.items():
            d = sum(exps)
            if d <= K:
                out[d] += c
        return TruncatedSeries(K, out)


def multigraded_series(n: int, bounds: Sequence[int] | int, max_total: int | None = None) -> MultiSeries:
    """
    (prod_a 1/(1 - t_a)) * (sum_{mu,nu |= k} t^(mu+nu) - sum_{mu |= k, nu |= k-1} t^(mu+nu)),
    truncated to exponent bounds per variable and optionally to total degree.
    """
    _check_n(n)
    if isinstance(bounds, int):
        bounds = (bounds,) * n
    bounds = tuple(bounds)
    if len(bounds) != n or min(bounds) < 0:
        raise ValueError("need one non-negative bound per variable")
    limit = sum(bounds) if max_total is None else min(sum(bounds), max_total)

    numer: dict = {}

    def add_pairs(k_mu: int, k_nu: int, sign: int) -> None:
        for mu in compositions(k_mu, n, bounds):
            caps = tuple(b - m for b, m in zip(bounds, mu))
            for nu in compositions(k_nu, n, caps):
                key = tuple(m + v for m, v in zip(mu, nu))
                numer[key] = numer.get(key, 0) + sign

    k = 0
    while 2 * k - 1 <= limit:
        if 2 * k <= limit:
            add_pairs(k, k, 1)
        if k >= 1:
            add_pairs(k, k - 1, -1)
        k += 1

    # multiply by 1/(1 - t_a) for each a: prefix sums along every axis
    coeffs = {key: c for key, c in numer.items() if c}
    for axis in range(n):
        grown: dict = {}
        for key, c in coeffs.items():
            for e in range(key[axis], bounds[axis] + 1):
                new = key[:axis] + (e,) + key[axis + 1 :]
                if max_total is not None and sum(new) > max_total:
                    break
                grown[new] = grown.get(new, 0) + c
        coeffs = {key: c for key, c in grown.items() if c}
    return MultiSeries(n, bounds, coeffs, max_total)


def three_way_agreement(n: int, K: int) -> tuple[bool, dict]:
    routes = {
        "closed_form": closed_form_series(n, K).to_list(),
        "constant_term": constant_term_series(n, K).to_list(),
        "tilde_formula": tilde_formula_series(n, K).to_list(),
    }
    vals = list(routes.values())
    return all(v == vals[0] for v in vals), routes
