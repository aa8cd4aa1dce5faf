"""
Exact arithmetic in the tensor power U(sl2)^{(x) n}.

Every factor is written in the PBW basis e12^a e11^b e21^c (e22 = -e11 is
eliminated on input).  An element is a sparse map from tensor monomials,
i.e. tuples of n exponent triples (a, b, c), to exact rational coefficients.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Union

Coeff = Union[int, Fraction]
FactorMonomial = tuple  # (a, b, c)
TensorMonomial = tuple  # tuple of n FactorMonomial

UNIT_FACTOR: FactorMonomial = (0, 0, 0)
NEG_INF = float("-inf")

# sl2 basis labels; the position is the slot in a FactorMonomial
GENERATORS = ("e12", "e11", "e21")
_SLOT = {"e12": 0, "e11": 1, "e21": 2}


class AmbientMismatch(ValueError):
    """Operands live in tensor powers with different numbers of factors."""


def _norm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def parse_coeff(text: str) -> Coeff:
    return _norm(Fraction(text))


def format_coeff(c: Coeff) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


# ----------------------------------------------------------------------
# products inside one copy of U(sl2)


def _times_generator(mono: FactorMonomial, slot: int) -> dict:
    """Normal form of (e12^a e11^b e21^c) * g for a single generator g."""
    a, b, c = mono
    if slot == 2:  # e21
        return {(a, b, c + 1): 1}
    if slot == 1:  # e11: e21^c e11 = (e11 + c) e21^c
        out = {(a, b + 1, c): 1}
        if c:
            out[(a, b, c)] = c
        return out
    # e12: e21^c e12 = e12 e21^c - (2c e11 + c(c-1)) e21^(c-1)
    #      e11^b e12 = e12 (e11 + 1)^b
    out: dict = {}
    for j in range(b + 1):
        out[(a + 1, j, c)] = comb(b, j)
    if c:
        key = (a, b + 1, c - 1)
        out[key] = out.get(key, 0) - 2 * c
        if c > 1:
            key = (a, b, c - 1)
            out[key] = out.get(key, 0) - c * (c - 1)
    return out


@lru_cache(maxsize=None)
def factor_product(left: FactorMonomial, right: FactorMonomial) -> tuple:
    """PBW normal form of left*right in U(sl2), as a tuple of (monomial, int)."""
    if right == UNIT_FACTOR:
        return ((left, 1),)
    if left == UNIT_FACTOR:
        return ((right, 1),)
    a, b, c = right
    if c and not a and not b:
        # appending e21's never reorders anything
        return (((left[0], left[1], left[2] + c), 1),)
    # peel the last generator of `right` and recurse on the shorter word
    if c:
        prefix, slot = (a, b, c - 1), 2
    elif b:
        prefix, slot = (a, b - 1, 0), 1
    else:
        prefix, slot = (a - 1, 0, 0), 0
    acc: dict = {}
    for mono, k in factor_product(left, prefix):
        for mono2, k2 in _times_generator(mono, slot).items():
            acc[mono2] = acc.get(mono2, 0) + k * k2
    return tuple((m, k) for m, k in acc.items() if k)


# ----------------------------------------------------------------------


def _monomial_sort_key(mono: TensorMonomial) -> tuple:
    flat = tuple(e for f in mono for e in f)
    return (sum(flat), flat)


class TensorElement:
    """
    A finite linear combination of PBW tensor monomials in U(sl2)^{(x) n}.

    Instances are treated as immutable; every arithmetic operation returns a
    new element in canonical form (no zero coefficients stored).
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping | None = None):
        if n < 1:
            raise ValueError("need at least one tensor factor")
        self.n = n
        clean = {}
        if terms:
            for mono, c in terms.items():
                if len(mono) != n:
                    raise AmbientMismatch(f"monomial {mono} does not have {n} factors")
                if c:
                    clean[tuple(tuple(f) for f in mono)] = _norm(c)
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "TensorElement":
        return cls(n)

    @classmethod
    def one(cls, n: int, coeff: Coeff = 1) -> "TensorElement":
        return cls(n, {(UNIT_FACTOR,) * n: coeff})

    @classmethod
    def generator(cls, label: str, a: int, n: int) -> "TensorElement":
        """e_label^(a) with a 1-based factor index; e22 is returned as -e11."""
        if not 1 <= a <= n:
            raise IndexError(f"factor index {a} outside 1..{n}")
        if label not in _SLOT and label != "e22":
            raise ValueError(f"unknown sl2 generator {label!r}; expected e12, e11, e21 or e22")
        sign = 1
        if label == "e22":
            label, sign = "e11", -1
        f = [0, 0, 0]
        f[_SLOT[label]] = 1
        mono = [UNIT_FACTOR] * n
        mono[a - 1] = tuple(f)
        return cls(n, {tuple(mono): sign})

    # -- arithmetic -----------------------------------------------------

    def _check(self, other: "TensorElement") -> None:
        if self.n != other.n:
            raise AmbientMismatch(f"cannot combine elements of U(sl2)^{self.n} and U(sl2)^{other.n}")

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            other = TensorElement.one(self.n, other)
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return TensorElement(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return TensorElement(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TensorElement):
            other = TensorElement.one(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, k: Coeff) -> "TensorElement":
        if not k:
            return TensorElement(self.n)
        return TensorElement(self.n, {m: c * k for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if isinstance(other, TensorElement):
            return self.n == other.n and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"TensorElement(n={self.n}, {self.to_text()})"

    # -- structure ------------------------------------------------------

    def degree(self):
        """Filtration degree; NEG_INF for the zero element."""
        if not self.terms:
            return NEG_INF
        return max(sum(sum(f) for f in m) for m in self.terms)

    def homogeneous_part(self, d: int) -> "TensorElement":
        return TensorElement(
            self.n, {m: c for m, c in self.terms.items() if sum(sum(f) for f in m) == d}
        )

    def top_component(self) -> "TensorElement":
        d = self.degree()
        if d == NEG_INF:
            return self
        return self.homogeneous_part(d)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda mc: _monomial_sort_key(mc[0]))

    # -- serialization --------------------------------------------------

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        lines = []
        for mono, c in self.sorted_terms():
            factors = []
            for i, (a, b, cc) in enumerate(mono, start=1):
                factors.append(f"e12_{i}^{a} e11_{i}^{b} e21_{i}^{cc}")
            lines.append(f"{format_coeff(c)} * " + " | ".join(factors))
        return "\n".join(lines)

    def to_json(self) -> list:
        return [
            {"monomial": [list(f) for f in mono], "coeff": format_coeff(c)}
            for mono, c in self.sorted_terms()
        ]

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, data: Iterable, n: int | None = None) -> "TensorElement":
        data = list(data)
        if n is None:
            if not data:
                raise ValueError("cannot infer n from an empty term list")
            n = len(data[0]["monomial"])
        terms: dict = {}
        for item in data:
            mono = tuple(tuple(int(e) for e in f) for f in item["monomial"])
            if any(len(f) != 3 or min(f) < 0 for f in mono):
                raise ValueError(f"bad factor monomial in {item!r}")
            terms[mono] = terms.get(mono, 0) + parse_coeff(str(item["coeff"]))
        return cls(n, terms)


def multiply(x: TensorElement, y: TensorElement) -> TensorElement:
    """Product x*y in canonical PBW form."""
    if x.n != y.n:
        raise AmbientMismatch(f"cannot multiply elements of U(sl2)^{x.n} and U(sl2)^{y.n}")
    out: dict = {}
    get = out.get
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            c12 = c1 * c2
            parts = []
            simple = True
            for f1, f2 in zip(m1, m2):
                if f2 == UNIT_FACTOR:
                    parts.append(((f1, 1),))
                elif f1 == UNIT_FACTOR:
                    parts.append(((f2, 1),))
                else:
                    p = factor_product(f1, f2)
                    parts.append(p)
                    if len(p) > 1:
                        simple = False
            if simple:
                mono = tuple(p[0][0] for p in parts)
                k = 1
                for p in parts:
                    k *= p[0][1]
                out[mono] = get(mono, 0) + c12 * k
                continue
            for combo in itertools.product(*parts):
                k = c12
                for _, kk in combo:
                    k *= kk
                mono = tuple(f for f, _ in combo)
                out[mono] = get(mono, 0) + k
    return TensorElement(x.n, out)


def commutator(x: TensorElement, y: TensorElement) -> TensorElement:
    return multiply(x, y) - multiply(y, x)


def product(elements: Iterable[TensorElement], n: int) -> TensorElement:
    acc = TensorElement.one(n)
    for e in elements:
        acc = multiply(acc, e)
    return acc


# ----------------------------------------------------------------------
# sl2 structure


def _gen(label: str, a: int, n: int) -> TensorElement:
    return TensorElement.generator(label, a, n)


def diagonal(g: str, n: int) -> TensorElement:
    """Image of the sl2 generator g under the diagonal embedding."""
    if n < 1:
        raise ValueError("n must be positive")
    if g not in _SLOT and g != "e22":
        raise ValueError(f"unknown sl2 generator {g!r}")
    acc = TensorElement.zero(n)
    for a in range(1, n + 1):
        acc = acc + _gen(g, a, n)
    return acc


def adjoint_action(g: str, x: TensorElement) -> TensorElement:
    """[delta(g), x]."""
    return commutator(diagonal(g, x.n), x)


def is_central(x: TensorElement, n: int | None = None) -> bool:
    """True iff x commutes with the diagonal copy of sl2."""
    if n is not None and n != x.n:
        raise AmbientMismatch(f"element has {x.n} factors, expected {n}")
    return all(not adjoint_action(g, x) for g in GENERATORS)


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= n:
        raise IndexError(f"factor index {i} outside 1..{n}")


def _casimir_from(e12, e11, e21) -> TensorElement:
    return e11 * e11 - e11 + e12 * e21


def casimir(i: int, n: int) -> TensorElement:
    """C_i = (e11^(i))^2 - e11^(i) + e12^(i) e21^(i)."""
    _check_index(i, n)
    return _casimir_from(_gen("e12", i, n), _gen("e11", i, n), _gen("e21", i, n))


def intermediate_casimir(i: int, j: int, n: int) -> TensorElement:
    """Casimir with every e_ab replaced by e_ab^(i) + e_ab^(j)."""
    _check_index(i, n)
    _check_index(j, n)
    if i == j:
        raise ValueError("intermediate Casimir needs two distinct factors")
    e12, e11, e21 = (_gen(g, i, n) + _gen(g, j, n) for g in GENERATORS)
    return _casimir_from(e12, e11, e21)


_MATRIX_UNIT = {(1, 1): "e11", (1, 2): "e12", (2, 1): "e21", (2, 2): "e22"}


def polarized_trace(indices: Iterable[int], n: int) -> TensorElement:
    """
    T^(a1..ad) = sum over i1..id in {1,2} of
    e_{i2 i1}^(a1) e_{i3 i2}^(a2) ... e_{i1 id}^(ad).
    """
    return _polarized_trace(tuple(indices), n)


@lru_cache(maxsize=4096)
def _polarized_trace(indices: tuple, n: int) -> TensorElement:
    d = len(indices)
    if d < 2:
        raise ValueError("polarized traces need at least two slots")
    for a in indices:
        _check_index(a, n)
    acc = TensorElement.zero(n)
    for ii in itertools.product((1, 2), repeat=d):
        term = TensorElement.one(n)
        for s, a in enumerate(indices):
            label = _MATRIX_UNIT[(ii[(s + 1) % d], ii[s])]
            term = multiply(term, _gen(label, a, n))
        acc = acc + term
    return acc


def degree(x: TensorElement):
    return x.degree()
