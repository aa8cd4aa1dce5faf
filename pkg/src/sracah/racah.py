"""
Noncommutative expressions in the symbols P_ij and F_ijk.

Words are kept exactly as written; the only rewriting is index
normalization of single symbols (P_ij = P_ji, F antisymmetric).  Expressions
are evaluated in U(sl2)^{(x) n} through P_ab -> T^(a,b), F_ijk -> -T^(i,j,k).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, NamedTuple, Sequence

from sracah.tensor import Coeff, TensorElement, _norm, format_coeff, multiply, polarized_trace


class Sym(NamedTuple):
    kind: str  # "P" or "F"
    idx: tuple


def _perm_sign(seq: Sequence[int]) -> int:
    sign = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def normalize_symbol(kind: str, idx: Sequence[int]) -> tuple[int, Sym | None]:
    """Canonical (sign, symbol); F with a repeated index gives (0, None)."""
    idx = tuple(int(i) for i in idx)
    if kind == "P":
        if len(idx) != 2:
            raise ValueError(f"P takes two indices, got {idx}")
        return 1, Sym("P", tuple(sorted(idx)))
    if kind == "F":
        if len(idx) != 3:
            raise ValueError(f"F takes three indices, got {idx}")
        if len(set(idx)) < 3:
            return 0, None
        return _perm_sign(idx), Sym("F", tuple(sorted(idx)))
    raise ValueError(f"unknown symbol kind {kind!r}")


def sym_str(s: Sym) -> str:
    return f"{s.kind}_{''.join(str(i) for i in s.idx)}"


class RacahExpr:
    """Linear combination of words in P/F symbols with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {w: _norm(c) for w, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, c: Coeff) -> "RacahExpr":
        return cls({(): c})

    @classmethod
    def word(cls, raw: Iterable[tuple], coeff: Coeff = 1) -> "RacahExpr":
        """Build a single word from raw (kind, indices) pairs, normalizing each symbol."""
        sign = 1
        syms = []
        for kind, idx in raw:
            s, sym = normalize_symbol(kind, idx)
            if not s:
                return cls()
            sign *= s
            syms.append(sym)
        return cls({tuple(syms): sign * coeff})

    def indices(self) -> set:
        return {i for w in self.terms for s in w for i in s.idx}

    def max_index(self) -> int:
        return max(self.indices(), default=0)

    def degree(self) -> int:
        """Filtration degree with deg P = 2, deg F = 3."""
        return max((sum(2 if s.kind == "P" else 3 for s in w) for w in self.terms), default=0)

    def __add__(self, other):
        if not isinstance(other, RacahExpr):
            other = RacahExpr.const(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return RacahExpr(out)

    __radd__ = __add__

    def __neg__(self):
        return RacahExpr({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, RacahExpr):
            other = RacahExpr.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RacahExpr):
            return RacahExpr({w: c * other for w, c in self.terms.items()})
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
        return RacahExpr(out)

    def __rmul__(self, other):
        return RacahExpr({w: other * c for w, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, RacahExpr):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"RacahExpr({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items(), key=lambda wc: (len(wc[0]), wc[0])):
            body = " ".join(sym_str(s) for s in w) or "1"
            parts.append(f"{format_coeff(c)}*{body}")
        return " + ".join(parts)


def P(i: int, j: int) -> RacahExpr:
    return RacahExpr.word([("P", (i, j))])


def F(i: int, j: int, k: int) -> RacahExpr:
    return RacahExpr.word([("F", (i, j, k))])


def normalize(word: Iterable[tuple]) -> RacahExpr:
    """Normalize a raw word [(kind, indices), ...] into a signed canonical word."""
    return RacahExpr.word(word)


def comm(a: RacahExpr, b: RacahExpr) -> RacahExpr:
    return a * b - b * a


def anticomm(a: RacahExpr, b: RacahExpr) -> RacahExpr:
    return a * b + b * a


# ----------------------------------------------------------------------
# symmetrized determinants


def sym_det(m: Sequence[Sequence]) -> RacahExpr:
    """(1/k!) sum over row and column permutations, entries multiplied in order."""
    k = len(m)
    if k == 0 or any(len(row) != k for row in m):
        raise ValueError("symmetrized determinant needs a non-empty square matrix")
    entries = [[e if isinstance(e, RacahExpr) else RacahExpr.const(e) for e in row] for row in m]
    acc = RacahExpr()
    perms = [(p, _perm_sign(p)) for p in itertools.permutations(range(k))]
    for rho, s_rho in perms:
        for sigma, s_sigma in perms:
            term = RacahExpr.const(s_rho * s_sigma)
            for t in range(k):
                term = term * entries[rho[t]][sigma[t]]
            acc = acc + term
    return acc * Fraction(1, factorial(k))


def p_matrix(rows: Sequence[int], cols: Sequence[int]) -> list:
    """The matrix (P_{r c}) for r in rows, c in cols."""
    return [[P(r, c) for c in cols] for r in rows]


@lru_cache(maxsize=None)
def det_p(rows: Sequence[int], cols: Sequence[int]) -> RacahExpr:
    return sym_det(p_matrix(rows, cols))


# ----------------------------------------------------------------------
# distinguished elements


def _require_distinct(*idx: int) -> None:
    if len(set(idx)) != len(idx):
        raise ValueError(f"indices must be distinct, got {idx}")


@lru_cache(maxsize=None)
def build_Q(n: int) -> RacahExpr:
    if n < 2:
        raise ValueError("Q_n needs n >= 2")
    acc = RacahExpr()
    for i, j in itertools.combinations(range(1, n + 1), 2):
        acc = acc + P(i, j)
    return acc


@lru_cache(maxsize=None)
def build_w(i: int, j: int, k: int) -> RacahExpr:
    _require_distinct(i, j, k)
    third = Fraction(1, 3)
    quad = (
        anticomm(P(i, j), P(i, k))
        + anticomm(P(i, j), P(j, k))
        + anticomm(P(i, k), P(j, k))
        + P(i, j) * P(k, k)
        + P(i, k) * P(j, j)
        + P(j, k) * P(i, i)
    )
    return F(i, j, k) * F(i, j, k) + Fraction(1, 2) * det_p((i, j, k), (i, j, k)) - third * quad


@lru_cache(maxsize=None)
def build_x(i: int, j: int, k: int, l: int) -> RacahExpr:
    _require_distinct(i, j, k, l)
    half, third = Fraction(1, 2), Fraction(1, 3)
    return (
        F(i, j, k) * F(j, k, l)
        + half * det_p((i, j, k), (j, k, l))
        + half * (F(i, j, l) + F(i, k, l)) * P(j, k)
        - third * (P(i, j) * P(k, l) + P(i, k) * P(j, l) + P(i, l) * P(j, k))
    )


@lru_cache(maxsize=None)
def build_y(i: int, j: int, k: int, l: int, m: int) -> RacahExpr:
    _require_distinct(i, j, k, l, m)
    half = Fraction(1, 2)
    return (
        F(i, j, k) * F(k, l, m)
        + half * det_p((i, j, k), (k, l, m))
        + half * (F(i, j, l) * P(k, m) - F(i, j, m) * P(k, l))
    )


@lru_cache(maxsize=None)
def build_z(i: int, j: int, k: int, l: int, m: int, p: int) -> RacahExpr:
    _require_distinct(i, j, k, l, m, p)
    return F(i, j, k) * F(l, m, p) + Fraction(1, 2) * det_p((i, j, k), (l, m, p))


def _signed_perm_product(cols: Sequence[int]) -> RacahExpr:
    """sum over sigma in S3 of sgn(sigma) P_{sigma(1) c1} P_{sigma(2) c2} P_{sigma(3) c3}."""
    acc = RacahExpr()
    for sigma in itertools.permutations((1, 2, 3)):
        term = RacahExpr.const(_perm_sign(sigma))
        for r, c in zip(sigma, cols):
            term = term * P(r, c)
        acc = acc + term
    return acc


def w123_expanded() -> RacahExpr:
    """Alternative closed expression for w_123."""
    return (
        F(1, 2, 3) * F(1, 2, 3)
        - F(1, 2, 3) * P(1, 3)
        - P(1, 2) * (P(1, 3) + P(2, 3) + P(3, 3))
        + Fraction(1, 2) * _signed_perm_product((1, 2, 3))
    )


def x1234_expanded() -> RacahExpr:
    """Alternative closed expression for x_1234."""
    return (
        F(1, 2, 3) * F(2, 3, 4)
        - F(1, 2, 3) * P(2, 4)
        + F(1, 2, 4) * P(2, 3)
        + F(1, 3, 4) * P(2, 3)
        - P(1, 4) * P(2, 3)
        + Fraction(1, 2) * _signed_perm_product((2, 3, 4))
    )


# ----------------------------------------------------------------------
# evaluation in U(sl2)^{(x) n}


def symbol_image(s: Sym, n: int) -> TensorElement:
    if s.kind == "P":
        return polarized_trace(s.idx, n)
    return -polarized_trace(s.idx, n)


class Evaluator:
    """
    Homomorphism P_ab -> T^(a,b), F_ijk -> -T^(i,j,k) into U(sl2)^{(x) n}.

    Images of word prefixes are memoized, so evaluating many words sharing
    prefixes (determinant expansions, basis monomials) is cheap.
    """

    def __init__(self, n: int, max_cache: int = 200_000):
        self.n = n
        self.max_cache = max_cache
        self._cache: dict = {(): TensorElement.one(n)}

    def word(self, w: tuple) -> TensorElement:
        hit = self._cache.get(w)
        if hit is not None:
            return hit
        for s in w:
            for i in s.idx:
                if not 1 <= i <= self.n:
                    raise IndexError(f"index {i} of {sym_str(s)} exceeds n={self.n}")
        val = multiply(self.word(w[:-1]), symbol_image(w[-1], self.n))
        if len(self._cache) < self.max_cache:
            self._cache[w] = val
        return val

    def __call__(self, e: RacahExpr) -> TensorElement:
        acc: dict = {}
        for w, c in e.terms.items():
            for m, k in self.word(w).terms.items():
                acc[m] = acc.get(m, 0) + c * k
        return TensorElement(self.n, acc)


def eval_in_tensor(e: RacahExpr, n: int) -> TensorElement:
    if e.max_index() > n:
        raise IndexError(f"expression uses index {e.max_index()} > n={n}")
    return Evaluator(n)(e)
