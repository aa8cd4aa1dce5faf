"""
Catalogue of Racah / special Racah relations and their verification in
U(sl2)^{(x) n}.

A relation instance is identified by a tag and an index tuple.  Its
expression is LHS - RHS, which must evaluate to exactly zero under
P_ab -> T^(a,b), F_ijk -> -T^(i,j,k).
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from sracah.racah import (
    Evaluator,
    F,
    P,
    RacahExpr,
    build_Q,
    build_w,
    build_x,
    build_y,
    build_z,
    comm,
    det_p,
)
from sracah.tensor import TensorElement, commutator


@dataclass(frozen=True)
class RelationId:
    tag: str
    indices: tuple

    def __str__(self):
        return f"{self.tag}{self.indices}"


@dataclass
class RelationReport:
    tag: str
    indices: tuple
    n: int
    residual_zero: bool
    residual_terms: int
    millis: int = 0

    def payload(self, timing: bool = False) -> dict:
        d = asdict(self)
        d["indices"] = list(self.indices)
        millis = d.pop("millis")
        if timing:
            d["meta"] = {"millis": millis}
        return d


# ----------------------------------------------------------------------
# relation bodies (LHS - RHS)


def _rn0_central(i, a, b):
    return comm(P(i, i), P(a, b))


def _rn1(i, j, k, l):
    return comm(P(i, j), P(k, l))


def _rn2(i, j, k):
    return comm(P(i, j), P(j, k)) - 2 * F(i, j, k)


def _rn3(i, j, k):
    rhs = P(i, k) * (P(j, k) + P(j, j)) - (P(j, k) + P(k, k)) * P(i, j)
    return comm(P(j, k), F(i, j, k)) - rhs


def _rn4(i, j, k, l):
    return comm(P(k, l), F(i, j, k)) - (P(i, k) * P(j, l) - P(i, l) * P(j, k))


def _rn5(i, j, k, l):
    return comm(F(i, j, k), F(j, k, l)) + (F(i, j, l) + F(i, k, l)) * P(j, k)


def _srn5(i, j, k, l):
    rhs = F(j, k, l) * P(i, j) - F(i, j, k) * P(j, l) - F(i, k, l) * (P(j, k) + P(j, j))
    return comm(F(i, j, k), F(j, k, l)) - rhs


def _rn6(i, j, k, l, m):
    return comm(F(i, j, k), F(k, l, m)) - (F(i, l, m) * P(j, k) - F(j, l, m) * P(i, k))


def _rnd5(a, i, j, k, l):
    return P(a, i) * F(j, k, l) - P(a, j) * F(i, k, l) + P(a, k) * F(i, j, l) - P(a, l) * F(i, j, k)


def _q_central(n):
    def body(a, b):
        return comm(build_Q(n), P(a, b))

    return body


def _w_central(i, j, k, a, b):
    return comm(build_w(i, j, k), P(a, b))


def _x_central(i, j, k, l, a, b):
    return comm(build_x(i, j, k, l), P(a, b))


def det8_expr() -> RacahExpr:
    """det(P_1234^1234) minus its expression through lower determinants."""
    third = Fraction(1, 3)
    minors3 = (
        det_p((1, 2, 3), (1, 2, 4))
        - det_p((1, 2, 3), (1, 3, 4))
        + det_p((1, 2, 3), (2, 3, 4))
        + det_p((1, 2, 4), (1, 3, 4))
        - det_p((1, 2, 4), (2, 3, 4))
        + det_p((1, 3, 4), (2, 3, 4))
    )
    mixed = RacahExpr()
    for (i, j), (k, l) in (
        ((1, 2), (3, 4)),
        ((1, 3), (2, 4)),
        ((1, 4), (2, 3)),
        ((2, 3), (1, 4)),
        ((2, 4), (1, 3)),
        ((3, 4), (1, 2)),
    ):
        mixed = mixed + P(i, j) * det_p((k, l), (k, l))
    rhs = -third * minors3 + 2 * third * mixed
    return det_p((1, 2, 3, 4), (1, 2, 3, 4)) - rhs


# ----------------------------------------------------------------------
# index enumeration


def _distinct(k: int) -> Callable[[int], Iterator[tuple]]:
    def gen(n):
        return itertools.permutations(range(1, n + 1), k)

    return gen


def _pairs(n):
    return itertools.combinations_with_replacement(range(1, n + 1), 2)


def _rn0_indices(n):
    for i in range(1, n + 1):
        for a, b in _pairs(n):
            yield (i, a, b)


def _rnd5_indices(n):
    for a in range(1, n + 1):
        for t in itertools.permutations(range(1, n + 1), 4):
            yield (a,) + t


def _with_pairs(k: int):
    def gen(n):
        for t in itertools.combinations(range(1, n + 1), k):
            for ab in _pairs(n):
                yield t + ab

    return gen


def _det8_indices(n):
    if n >= 4:
        yield ()


# tag -> (builder taking (n, indices), index generator, minimum n, arity)
CATALOGUE: dict = {
    "Q_central": (lambda n, t: _q_central(n)(*t), lambda n: _pairs(n), 2, 2),
    "cons_y": (lambda n, t: build_y(*t), _distinct(5), 5, 5),
    "cons_z": (lambda n, t: build_z(*t), _distinct(6), 6, 6),
    "det8_n4": (lambda n, t: det8_expr(), _det8_indices, 4, 0),
    "rn0_central": (lambda n, t: _rn0_central(*t), _rn0_indices, 2, 3),
    "rn1": (lambda n, t: _rn1(*t), _distinct(4), 4, 4),
    "rn2": (lambda n, t: _rn2(*t), _distinct(3), 3, 3),
    "rn3": (lambda n, t: _rn3(*t), _distinct(3), 3, 3),
    "rn4": (lambda n, t: _rn4(*t), _distinct(4), 4, 4),
    "rn5": (lambda n, t: _rn5(*t), _distinct(4), 4, 4),
    "rn6": (lambda n, t: _rn6(*t), _distinct(5), 5, 5),
    "rnd5": (lambda n, t: _rnd5(*t), _rnd5_indices, 4, 5),
    "srn5": (lambda n, t: _srn5(*t), _distinct(4), 4, 4),
    "srn7_w": (lambda n, t: build_w(*t), _distinct(3), 3, 3),
    "srn8_x": (lambda n, t: build_x(*t), _distinct(4), 4, 4),
    "w_central": (lambda n, t: _w_central(*t), _with_pairs(3), 3, 5),
    "x_central": (lambda n, t: _x_central(*t), _with_pairs(4), 4, 6),
}

TAGS = tuple(sorted(CATALOGUE))

# tags whose leading indices must be pairwise distinct, and how many
_DISTINCT_PREFIX = {
    "cons_y": 5,
    "cons_z": 6,
    "rn1": 4,
    "rn2": 3,
    "rn3": 3,
    "rn4": 4,
    "rn5": 4,
    "rn6": 5,
    "srn5": 4,
    "srn7_w": 3,
    "srn8_x": 4,
    "w_central": 3,
    "x_central": 4,
}


def validate(r: RelationId, n: int) -> None:
    if r.tag not in CATALOGUE:
        raise KeyError(f"unknown relation tag {r.tag!r}")
    _, _, min_n, arity = CATALOGUE[r.tag]
    if n < min_n:
        raise ValueError(f"{r.tag} needs n >= {min_n}, got n={n}")
    if len(r.indices) != arity:
        raise ValueError(f"{r.tag} takes {arity} indices, got {r.indices}")
    if any(not 1 <= i <= n for i in r.indices):
        raise ValueError(f"indices {r.indices} outside 1..{n}")
    k = _DISTINCT_PREFIX.get(r.tag)
    if k and len(set(r.indices[:k])) != k:
        raise ValueError(f"{r.tag} requires distinct indices, got {r.indices}")
    if r.tag == "rnd5" and len(set(r.indices[1:])) != 4:
        raise ValueError(f"rnd5 requires distinct i,j,k,l, got {r.indices}")


def relation_lhs(r: RelationId, n: int) -> RacahExpr:
    validate(r, n)
    return CATALOGUE[r.tag][0](n, r.indices)


def catalogue(n: int, tags: Iterable[str] | None = None) -> list:
    """All relation instances applicable at n, sorted by (tag, indices)."""
    chosen = TAGS if tags is None else tuple(sorted(set(tags)))
    out = []
    for tag in chosen:
        if tag not in CATALOGUE:
            raise KeyError(f"unknown relation tag {tag!r}")
        _, gen, min_n, _ = CATALOGUE[tag]
        if n < min_n:
            continue
        out.extend(RelationId(tag, tuple(t)) for t in gen(n))
    out.sort(key=lambda r: (r.tag, r.indices))
    return out


# ----------------------------------------------------------------------
# verification

_EVALUATORS: dict = {}


def _evaluator(n: int) -> Evaluator:
    ev = _EVALUATORS.get(n)
    if ev is None:
        ev = _EVALUATORS[n] = Evaluator(n)
    return ev


# centrality tags: (element, generator) whose commutator is the relation
_COMMUTATOR_PAIRS: dict = {
    "Q_central": lambda n, t: (build_Q(n), P(*t)),
    "rn0_central": lambda n, t: (P(t[0], t[0]), P(t[1], t[2])),
    "w_central": lambda n, t: (build_w(*t[:3]), P(*t[3:])),
    "x_central": lambda n, t: (build_x(*t[:4]), P(*t[4:])),
}

_IMAGES: dict = {}


def _image(n: int, e: RacahExpr) -> TensorElement:
    key = (n, e)
    hit = _IMAGES.get(key)
    if hit is None:
        hit = _IMAGES[key] = _evaluator(n)(e)
    return hit


def verify_relation(r: RelationId, n: int) -> RelationReport:
    """Evaluate LHS - RHS of one instance and record whether it vanishes exactly."""
    start = time.perf_counter()
    validate(r, n)
    pair = _COMMUTATOR_PAIRS.get(r.tag)
    if pair is not None:
        # the evaluation map is a homomorphism: image([X, Y]) = [image X, image Y]
        x, y = pair(n, r.indices)
        residual = commutator(_image(n, x), _image(n, y))
    else:
        residual = _evaluator(n)(relation_lhs(r, n))
    millis = int(round((time.perf_counter() - start) * 1000))
    return RelationReport(r.tag, r.indices, n, not residual, len(residual), millis)


def _verify_chunk(args):
    n, chunk = args
    return [verify_relation(r, n) for r in chunk]


def relation_suite(
    n: int,
    max_cases: int | None = None,
    tags: Iterable[str] | None = None,
    indices: tuple | None = None,
    jobs: int = 1,
) -> list:
    """Verify every catalogued instance at n; reports come back in (tag, indices) order."""
    if n < 2:
        raise ValueError("relation suite needs n >= 2")
    todo = catalogue(n, tags)
    if indices is not None:
        todo = [r for r in todo if r.indices == tuple(indices)]
    if max_cases is not None:
        todo = todo[:max_cases]
    if jobs <= 1 or len(todo) < 2:
        return [verify_relation(r, n) for r in todo]
    size = max(1, len(todo) // (4 * jobs))
    chunks = [(n, todo[i : i + size]) for i in range(0, len(todo), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_verify_chunk, chunks))
    return [rep for chunk in results for rep in chunk]


def summarize(reports: list) -> dict:
    failed = [r for r in reports if not r.residual_zero]
    by_tag: dict = {}
    for r in reports:
        s = by_tag.setdefault(r.tag, {"passed": 0, "failed": 0})
        s["passed" if r.residual_zero else "failed"] += 1
    return {
        "total": len(reports),
        "passed": len(reports) - len(failed),
        "failed": len(failed),
        "by_tag": by_tag,
        "ok": not failed,
    }
