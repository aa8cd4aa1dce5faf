import itertools
from fractions import Fraction

import pytest

from sracah.racah import (
    F,
    P,
    RacahExpr,
    Sym,
    anticomm,
    build_Q,
    build_w,
    build_x,
    build_y,
    comm,
    eval_in_tensor,
    normalize,
    normalize_symbol,
    sym_det,
    w123_expanded,
    x1234_expanded,
)
from sracah.tensor import casimir, is_central, polarized_trace


def test_normalize_examples():
    assert normalize([("F", (2, 1, 3))]) == -F(1, 2, 3)
    assert normalize([("P", (3, 1))]) == P(1, 3)
    assert normalize([("F", (1, 1, 2))]) == 0


def test_cyclic_f_keeps_sign():
    assert normalize([("F", (2, 3, 1))]) == F(1, 2, 3)
    assert normalize_symbol("F", (3, 2, 1)) == (-1, Sym("F", (1, 2, 3)))
    assert normalize_symbol("P", (2, 2)) == (1, Sym("P", (2, 2)))


def test_word_with_vanishing_symbol_is_zero():
    assert normalize([("P", (1, 2)), ("F", (3, 3, 1))]) == 0


def test_words_are_not_reordered():
    assert P(1, 2) * P(2, 3) != P(2, 3) * P(1, 2)
    assert comm(P(1, 2), P(1, 2)) == 0


def test_expression_metadata():
    e = P(1, 2) * F(2, 3, 4) + 3
    assert e.degree() == 5
    assert e.max_index() == 4
    assert str(P(1, 3) * P(1, 3) - P(2, 2)) == "-1*P_22 + 1*P_13 P_13"


def test_sym_det_small_cases():
    assert sym_det([[P(1, 2)]]) == P(1, 2)
    assert sym_det([[1, 2], [3, 4]]) == RacahExpr.const(-2)
    with pytest.raises(ValueError):
        sym_det([[1, 2]])


def test_sym_det_noncommuting_2x2():
    a, b, c, d = P(1, 1), P(1, 2), P(2, 1), P(2, 2)
    expected = (a * d + d * a - b * c - c * b) * Fraction(1, 2)
    assert sym_det([[a, b], [c, d]]) == expected


def test_build_Q():
    assert build_Q(3) == P(1, 2) + P(1, 3) + P(2, 3)
    assert build_Q(2) == P(1, 2)


def test_builders_need_distinct_indices():
    with pytest.raises(ValueError):
        build_w(1, 1, 2)
    with pytest.raises(ValueError):
        build_x(1, 2, 3, 3)


def test_evaluation_examples():
    assert eval_in_tensor(P(1, 1), 2) == casimir(1, 2).scale(2)
    assert eval_in_tensor(comm(P(1, 2), P(2, 3)) - F(1, 2, 3) * 2, 3) == 0
    assert eval_in_tensor(RacahExpr(), 3) == 0
    assert eval_in_tensor(F(1, 2, 3), 3) == -polarized_trace([1, 2, 3], 3)


def test_evaluation_is_multiplicative():
    x, y = P(1, 2) + F(1, 2, 3), P(2, 3) - 2
    assert eval_in_tensor(x * y, 3) == eval_in_tensor(x, 3) * eval_in_tensor(y, 3)


def test_null_elements_vanish():
    assert eval_in_tensor(build_w(1, 2, 3), 3) == 0
    assert eval_in_tensor(build_x(1, 2, 3, 4), 4) == 0
    assert eval_in_tensor(build_y(1, 2, 3, 4, 5), 5) == 0


def test_expansions_agree_with_builders():
    assert eval_in_tensor(w123_expanded() - build_w(1, 2, 3), 3) == 0
    assert eval_in_tensor(x1234_expanded() - build_x(1, 2, 3, 4), 4) == 0


def test_w_image_symmetric_under_s3():
    base = eval_in_tensor(build_w(1, 2, 4), 4)
    for p in itertools.permutations((1, 2, 4)):
        assert eval_in_tensor(build_w(*p), 4) == base


def test_x_image_symmetric_under_s4():
    base = eval_in_tensor(build_x(1, 2, 3, 4), 5)
    for p in itertools.permutations((1, 2, 3, 4)):
        assert eval_in_tensor(build_x(*p), 5) == base


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_images_of_central_elements(n):
    for i in range(1, n + 1):
        assert is_central(eval_in_tensor(P(i, i), n), n)
    assert is_central(eval_in_tensor(build_Q(n), n), n)


def test_images_of_w_and_x_are_central():
    assert is_central(eval_in_tensor(build_w(1, 3, 4), 4), 4)
    assert is_central(eval_in_tensor(build_x(2, 3, 4, 5), 5), 5)


def test_anticommutator():
    assert anticomm(P(1, 2), P(1, 3)) == P(1, 2) * P(1, 3) + P(1, 3) * P(1, 2)


def test_w_needs_the_anticommutator_reading():
    # swapping {P_13, P_23} for the plain product P_13 P_23 leaves a residual
    product_reading = build_w(1, 2, 3) + Fraction(1, 3) * (P(2, 3) * P(1, 3))
    assert eval_in_tensor(product_reading, 3) != 0
