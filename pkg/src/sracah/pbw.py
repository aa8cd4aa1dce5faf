"""
Explicit PBW bases of the centralizer for n = 2, 3, 4: enumeration, degree
counts against the Hilbert-Poincare series, and exact rank certificates for
the graded images in U(sl2)^{(x) n}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from sracah.linalg import DEFAULT_BUDGET, check_budget, rank
from sracah.racah import Evaluator, RacahExpr, Sym, sym_str
from sracah.series import closed_form_series, compositions
from sracah.tensor import TensorElement

SUPPORTED_N = (2, 3, 4)


def _p(i, j):
    return Sym("P", (i, j))


def _f(i, j, k):
    return Sym("F", (i, j, k))


@dataclass(frozen=True)
class Family:
    f: Sym | None
    f_first: bool
    p_list: tuple
    # positions in p_list whose exponents may not all be positive at once
    not_all_positive: tuple = ()


def _families(n: int) -> tuple:
    if n == 2:
        return (Family(None, True, (_p(1, 1), _p(1, 2), _p(2, 2))),)
    if n == 3:
        ps = (_p(1, 1), _p(1, 2), _p(1, 3), _p(2, 2), _p(2, 3), _p(3, 3))
        return (Family(None, False, ps), Family(_f(1, 2, 3), False, ps))
    if n == 4:
        return (
            Family(_f(1, 2, 3), True, tuple(_p(*ij) for ij in [(1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (2, 4), (3, 3), (3, 4)])),
            Family(_f(1, 2, 4), True, tuple(_p(*ij) for ij in [(1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (2, 4), (3, 4), (4, 4)])),
            Family(_f(1, 3, 4), True, tuple(_p(*ij) for ij in [(1, 1), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 3), (3, 4), (4, 4)])),
            Family(_f(2, 3, 4), True, tuple(_p(*ij) for ij in [(1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (2, 4), (3, 3), (3, 4), (4, 4)])),
            Family(
                None,
                True,
                tuple(_p(*ij) for ij in [(1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (2, 4), (3, 3), (3, 4), (4, 4)]),
                not_all_positive=(0, 4, 7, 9),
            ),
        )
    raise ValueError(f"PBW bases are only available for n in {SUPPORTED_N}, got n={n}")


@dataclass(frozen=True)
class BasisMonomial:
    family: int
    f: Sym | None
    f_first: bool
    p_list: tuple
    exponents: tuple

    @property
    def degree(self) -> int:
        return 2 * sum(self.exponents) + (3 if self.f else 0)

    def word(self) -> tuple:
        ps = tuple(s for s, e in zip(self.p_list, self.exponents) for _ in range(e))
        if self.f is None:
            return ps
        return (self.f,) + ps if self.f_first else ps + (self.f,)

    def expr(self) -> RacahExpr:
        return RacahExpr({self.word(): 1})

    def __str__(self):
        parts = []
        for s, e in zip(self.p_list, self.exponents):
            if e == 1:
                parts.append(sym_str(s))
            elif e > 1:
                parts.append(f"{sym_str(s)}^{e}")
        if self.f is not None:
            if self.f_first:
                parts.insert(0, sym_str(self.f))
            else:
                parts.append(sym_str(self.f))
        return " ".join(parts) or "1"


def _family_monomials(idx: int, fam: Family, d: int):
    rest = d - (3 if fam.f else 0)
    if rest < 0 or rest % 2:
        return
    for exps in compositions(rest // 2, len(fam.p_list)):
        if fam.not_all_positive and all(exps[i] > 0 for i in fam.not_all_positive):
            continue
        yield BasisMonomial(idx, fam.f, fam.f_first, fam.p_list, exps)


def enumerate_basis(n: int, max_degree: int, min_degree: int = 0) -> list:
    """Basis monomials ordered by degree, then family, then exponents."""
    fams = _families(n)
    out = []
    for d in range(min_degree, max_degree + 1):
        for idx, fam in enumerate(fams):
            out.extend(_family_monomials(idx, fam, d))
    return out


def count_by_degree(n: int, max_degree: int) -> list:
    counts = [0] * (max_degree + 1)
    for m in enumerate_basis(n, max_degree):
        counts[m.degree] += 1
    return counts


def verify_counts(n: int, max_degree: int) -> bool:
    return count_by_degree(n, max_degree) == closed_form_series(n, max_degree).to_list()


# ----------------------------------------------------------------------
# rank certificates


@dataclass(frozen=True)
class RankCertificate:
    n: int
    degree: int
    count: int
    ambient_dim: int
    rank: int

    @property
    def passed(self) -> bool:
        return self.rank == self.count

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "degree": self.degree,
            "count": self.count,
            "ambient_dim": self.ambient_dim,
            "rank": self.rank,
            "pass": self.passed,
        }


_EVALUATORS: dict = {}


def _evaluator(n: int) -> Evaluator:
    if n not in _EVALUATORS:
        _EVALUATORS[n] = Evaluator(n)
    return _EVALUATORS[n]


def graded_image(m: BasisMonomial, n: int) -> TensorElement:
    """Homogeneous component of degree deg(m) of the image of m."""
    return _evaluator(n).word(m.word()).homogeneous_part(m.degree)


def ambient_dimension(n: int, degree: int) -> int:
    """Number of PBW tensor monomials of exactly this degree in U(sl2)^{(x) n}."""
    return comb(degree + 3 * n - 1, degree)


def _col_key(mono) -> tuple:
    return tuple(e for f in mono for e in f)


def _row(e: TensorElement) -> dict:
    return {_col_key(m): c for m, c in e.terms.items()}


def _graded_rows(n: int, degree: int) -> tuple:
    monos = enumerate_basis(n, degree, min_degree=degree)
    return monos, [_row(graded_image(m, n)) for m in monos]


def independence_rank(n: int, degree: int, budget: int | None = DEFAULT_BUDGET) -> RankCertificate:
    """Rank of the graded images of all basis monomials of exactly this degree."""
    monos, rows = _graded_rows(n, degree)
    check_budget(rows, budget)
    return RankCertificate(n, degree, len(monos), ambient_dimension(n, degree), rank(rows, budget))


def spanning_witness(n: int, max_degree: int = 4, budget: int | None = DEFAULT_BUDGET) -> bool:
    """Every product P_ab P_cd lies in the span of basis images of degree <= max_degree."""
    ev = _evaluator(n)
    basis_rows = [_row(ev.word(m.word())) for m in enumerate_basis(n, max_degree)]
    gens = [_p(a, b) for a, b in itertools.combinations_with_replacement(range(1, n + 1), 2)]
    base_rank = rank(basis_rows, budget)
    if base_rank != len(basis_rows):
        return False
    for g1 in gens:
        for g2 in gens:
            v = _row(ev.word((g1, g2)))
            if rank(basis_rows + [v], budget) != base_rank:
                return False
    return True


def degree8_witness(budget: int | None = DEFAULT_BUDGET) -> tuple:
    """
    For n = 4: certify the degree-8 graded images of the basis are independent
    and that the graded image of P_11 P_22 P_33 P_44 lies in their span.
    Returns (certificate, in_span).
    """
    monos, rows = _graded_rows(4, 8)
    check_budget(rows, budget)
    base = rank(rows, budget)
    cert = RankCertificate(4, 8, len(monos), ambient_dimension(4, 8), base)
    target = (_p(1, 1), _p(2, 2), _p(3, 3), _p(4, 4))
    v = _row(_evaluator(4).word(target).homogeneous_part(8))
    return cert, rank(rows + [v], budget) == base
