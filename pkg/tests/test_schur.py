import itertools

import pytest

from errors import AmbientMismatchError, CapExceededError, InadmissibleFormulaError, ParameterRangeError
from qarith import ONE, V, ZERO
from schur import (
    Comparison,
    SchurElement,
    basis,
    basis_size,
    coeff_functions,
    diag_idempotent,
    formula_product,
    leading_failures,
    leading_term_cases,
    linear_extension,
    multi_mul,
    normalization,
    oracle_product,
    parse_formula_lhs,
    preorder_leq,
    preorder_leq_two_condition,
    product,
    short_mul,
    strictly_below,
    triangular_monomial,
    unit,
    unitriangular_failures,
    left_factor,
)
from weyl import Composition, ThetaMatrix, compositions, theta_unit

DIAG_11 = ThetaMatrix.from_rows([[1, 0], [0, 1]])
E21 = ThetaMatrix.from_rows([[0, 1], [1, 0]])


def element(A):
    return SchurElement.basis_element(A)


@pytest.mark.parametrize("n,r,size", [(1, 1, 2), (1, 2, 3), (2, 1, 8), (2, 2, 36)])
def test_basis_sizes(n, r, size):
    assert len(basis(n, r)) == size
    assert basis_size(n, r) == size


def test_basis_is_sorted_and_distinct():
    matrices = basis(2, 2)
    assert matrices == sorted(set(matrices), key=lambda A: A.row_major())


def test_basis_errors():
    with pytest.raises(ParameterRangeError):
        basis(0, 1)
    with pytest.raises(CapExceededError):
        basis(3, 3, cap=100)


def test_normalization_exponents():
    assert normalization(DIAG_11).exponent == 0
    assert normalization(E21).exponent == -1
    assert normalization(ThetaMatrix.diag((2, 2))).exponent == 0


def test_weight_idempotent_acts_as_identity():
    for A in basis(2, 1):
        left = diag_idempotent(Composition(A.ro()[:2]))
        assert product(left, element(A)) == element(A)


def test_mismatched_profiles_give_zero():
    A = ThetaMatrix.diag((1, 0, 0, 1))
    B = ThetaMatrix.diag((0, 1, 1, 0))
    assert oracle_product(A, B).is_zero()


def test_square_of_e21():
    expected = element(E21).scale(V - V ** -1) + element(DIAG_11)
    assert oracle_product(E21, E21) == expected


def test_unit_and_zero():
    X = element(E21).scale(V) + element(DIAG_11)
    assert product(X, unit(1, 1)) == X
    assert product(unit(1, 1), X) == X
    assert product(SchurElement.zero(1, 1), X).is_zero()


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatchError):
        product(unit(1, 1), unit(1, 2))


def test_associativity_at_2_2():
    matrices = basis(2, 2)
    sample = matrices[::5]
    for A, B, C in itertools.islice(itertools.product(sample, repeat=3), 200):
        left = product(oracle_product(A, B), element(C))
        right = product(element(A), oracle_product(B, C))
        assert left == right


def test_coeff_functions_zero_c():
    assert coeff_functions(ThetaMatrix.diag((1, 1)), 1).c_A == ZERO


def test_short_formula_examples():
    A = ThetaMatrix.diag((0, 1, 1, 0))
    assert short_mul("e", 1, Composition((0, 0)), A) == element(theta_unit(2, 1, 2))
    B = theta_unit(2, 2, 1)
    assert short_mul("e", 1, Composition((0, 0)), B) == element(ThetaMatrix.diag((1, 0, 0, 1)))
    expected = element(E21).scale(V - V ** -1) + element(DIAG_11)
    assert short_mul("t", 1, Composition((0,)), E21) == expected


@pytest.mark.parametrize("n,r", [(1, 1), (1, 2), (2, 1)])
def test_short_formulas_match_oracle(n, r):
    shapes = [("e", h) for h in range(1, n)] + [("f", h) for h in range(1, n)] + [("t", n)]
    for kind, h in shapes:
        for lam in compositions(n, r - 1):
            left = left_factor(kind, h, 1, lam)
            for A in basis(n, r):
                assert short_mul(kind, h, lam, A) == oracle_product(left, A)


def test_multi_formula_m1_is_short_formula():
    for lam in compositions(2, 1):
        for A in basis(2, 2):
            assert multi_mul("up", 1, 1, lam, A) == short_mul("e", 1, lam, A)
            assert multi_mul("down", 1, 1, lam, A) == short_mul("f", 1, lam, A)


def test_multi_formula_m2_matches_oracle():
    lam = Composition((0, 0))
    for direction, kind in (("up", "e"), ("down", "f")):
        left = left_factor(kind, 1, 2, lam)
        for A in basis(2, 2):
            assert multi_mul(direction, 1, 2, lam, A) == oracle_product(left, A)


def test_parse_formula_lhs():
    assert parse_formula_lhs(E21) == ("t", 1, 1, Composition((0,)))
    L = theta_unit(2, 1, 2, 2)
    assert parse_formula_lhs(L) == ("e", 1, 2, Composition((0, 0)))
    with pytest.raises(InadmissibleFormulaError):
        parse_formula_lhs(DIAG_11)
    with pytest.raises(InadmissibleFormulaError):
        parse_formula_lhs(theta_unit(2, 1, 3))


def test_formula_product_matches_oracle_for_e21_square():
    assert formula_product(E21, E21) == oracle_product(E21, E21)


def test_preorder_basics():
    assert preorder_leq(E21, E21)
    assert strictly_below(DIAG_11, E21)
    assert not strictly_below(E21, DIAG_11)


def test_preorder_forms_agree():
    matrices = basis(2, 2)
    for A in matrices:
        for B in matrices:
            assert preorder_leq(A, B) == preorder_leq_two_condition(A, B)


def test_linear_extension_respects_preorder():
    order = linear_extension(basis(2, 1))
    position = {A: k for k, A in enumerate(order)}
    for A in order:
        for B in order:
            if strictly_below(A, B):
                assert position[A] < position[B]


def test_triangular_monomial_examples():
    assert triangular_monomial(E21) == element(E21)
    for lam in compositions(2, 2):
        A = ThetaMatrix.diag(lam.hat())
        assert triangular_monomial(A) == element(A)


@pytest.mark.parametrize("n,r", [(1, 2), (2, 1)])
def test_transition_matrix_unitriangular(n, r):
    assert unitriangular_failures(n, r) == []


def test_leading_terms_at_2_1():
    cases = leading_term_cases(2, 1)
    assert cases
    for case in cases:
        assert leading_failures(case) == []


def test_comparison_json():
    c = Comparison("square", oracle_product(E21, E21), oracle_product(E21, E21))
    assert c.ok
    data = c.to_json()
    assert data["case"] == "square"
    assert data["lhs"] == data["rhs"]
    assert Comparison("count", 2, 2).to_json() == {"case": "count", "lhs": 2, "rhs": 2}
