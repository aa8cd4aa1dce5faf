import pytest

from sracah.linalg import ResourceBudgetExceeded
from sracah.pbw import (
    ambient_dimension,
    count_by_degree,
    degree8_witness,
    enumerate_basis,
    graded_image,
    independence_rank,
    spanning_witness,
    verify_counts,
)


def _of_degree(n, d):
    return [m for m in enumerate_basis(n, d) if m.degree == d]


def test_enumeration_examples():
    assert [str(m) for m in _of_degree(3, 3)] == ["F_123"]
    deg2 = _of_degree(4, 2)
    assert len(deg2) == 10
    assert {str(m) for m in deg2} == {f"P_{i}{j}" for i in range(1, 5) for j in range(i, 5)}
    assert len(_of_degree(2, 4)) == 6


def test_enumeration_order_is_deterministic():
    ms = enumerate_basis(4, 6)
    assert [m.degree for m in ms] == sorted(m.degree for m in ms)
    assert [str(m) for m in ms] == [str(m) for m in enumerate_basis(4, 6)]
    assert str(ms[0]) == "1"


def test_subscript_notation_printing():
    f_family = [m for m in _of_degree(4, 9) if m.f is not None and m.family == 0]
    names = {str(m) for m in f_family}
    assert "F_123 P_12^2 P_34" in names
    n3 = {str(m) for m in _of_degree(3, 7)}
    assert "P_12 P_23 F_123" in n3


def test_fifth_family_constraint():
    for m in enumerate_basis(4, 10):
        if m.family == 4:
            diag = [m.exponents[i] for i in (0, 4, 7, 9)]
            assert 0 in diag
    assert "P_11 P_22 P_33 P_44" not in {str(m) for m in _of_degree(4, 8)}


def test_counts():
    assert count_by_degree(4, 5) == [1, 0, 10, 4, 55, 36]
    assert count_by_degree(3, 5) == [1, 0, 6, 1, 21, 6]
    for n in (2, 3, 4):
        assert count_by_degree(n, 0) == [1]


@pytest.mark.parametrize("n, d", [(2, 12), (3, 12), (4, 8)])
def test_counts_match_series(n, d):
    assert verify_counts(n, d)


def test_unsupported_n():
    with pytest.raises(ValueError):
        enumerate_basis(5, 2)
    with pytest.raises(ValueError):
        independence_rank(1, 2)


def test_rank_certificate_examples():
    c = independence_rank(4, 2)
    assert (c.count, c.rank, c.passed) == (10, 10, True)
    assert c.ambient_dim == ambient_dimension(4, 2) == 78
    assert independence_rank(3, 3).to_json() == {
        "n": 3, "degree": 3, "count": 1, "ambient_dim": ambient_dimension(3, 3), "rank": 1, "pass": True,
    }
    assert independence_rank(4, 5).rank == 36


@pytest.mark.parametrize("n, top", [(2, 10), (3, 8), (4, 5)])
def test_rank_certificates(n, top):
    for d in range(top + 1):
        c = independence_rank(n, d)
        assert c.passed, c
        assert c.rank <= min(c.count, c.ambient_dim)


def test_graded_image_is_homogeneous():
    m = _of_degree(3, 7)[-1]
    img = graded_image(m, 3)
    assert img and all(sum(sum(f) for f in mono) == 7 for mono in img.terms)


def test_degree8_witness():
    # P_11 P_22 P_33 P_44 is excluded from the basis but lies in its graded span
    cert, spanned = degree8_witness()
    assert cert.passed and cert.count == 714
    assert spanned


@pytest.mark.parametrize("n", [3, 4])
def test_spanning_witness(n):
    assert spanning_witness(n, 4)


def test_budget_guard():
    with pytest.raises(ResourceBudgetExceeded):
        independence_rank(4, 4, budget=100)
