"""Exact rank of sparse rational matrices by fraction-free elimination."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping

DEFAULT_BUDGET = 50_000_000


class ResourceBudgetExceeded(RuntimeError):
    """The matrix is larger than the configured cell budget."""


def integer_row(row: Mapping) -> dict:
    """Scale a sparse row with rational entries to a primitive integer row."""
    items = [(k, Fraction(v)) for k, v in row.items() if v]
    if not items:
        return {}
    den = lcm(*(v.denominator for _, v in items))
    out = {k: int(v * den) for k, v in items}
    return _primitive(out)


def _primitive(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def check_budget(rows: list, budget: int | None) -> int:
    """Potential dense size rows x distinct columns; raise if above budget."""
    cols = set()
    for r in rows:
        cols.update(r)
    cells = len(rows) * len(cols)
    if budget is not None and cells > budget:
        raise ResourceBudgetExceeded(f"{len(rows)} x {len(cols)} matrix exceeds budget of {budget} cells")
    return len(cols)


def rank(rows: Iterable[Mapping], budget: int | None = DEFAULT_BUDGET) -> int:
    """
    Rank of the matrix whose rows are sparse maps column -> rational.

    Columns must be mutually comparable; they are eliminated in sorted order.
    Among the rows leading with the current column the pivot is the one with
    the smallest leading magnitude; every other such row r becomes
    p*r - r_c*pivot and is divided by its content.
    """
    work = [r for r in (integer_row(r) for r in rows) if r]
    check_budget(work, budget)
    pending = [(min(r), r) for r in work]
    r_count = 0
    while pending:
        col = min(lead for lead, _ in pending)
        group = [r for lead, r in pending if lead == col]
        rest = [(lead, r) for lead, r in pending if lead != col]
        group.sort(key=lambda r: (abs(r[col]), len(r)))
        piv = group[0]
        r_count += 1
        p = piv[col]
        for r in group[1:]:
            c = r[col]
            new = {k: p * v for k, v in r.items()}
            for k, v in piv.items():
                x = new.get(k, 0) - c * v
                if x:
                    new[k] = x
                else:
                    new.pop(k, None)
            if new:
                new = _primitive(new)
                rest.append((min(new), new))
        pending = rest
    return r_count


def in_span(basis: list, v: Mapping, budget: int | None = DEFAULT_BUDGET) -> bool:
    base = rank(basis, budget)
    return rank(list(basis) + [v], budget) == base
