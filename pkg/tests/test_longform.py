import pytest

from errors import InvalidMatrixError, ParameterRangeError
from longform import (
    FormalCombination,
    LongElement,
    STABILITY_IDENTITIES,
    commutation_checks,
    divided_power,
    divided_t_mul,
    dp2_check,
    dp3_checks,
    eae_rhs,
    formal_apply,
    formal_o,
    formal_t,
    generator_value,
    j_box,
    k_binomial,
    k_binomial_checks,
    long_element,
    long_mul,
    long_mul_formal,
    middle_unit,
    normalize_j,
    o_element,
    product,
    r_stability_identities,
    verify_r_stability,
    zero_diagonal_matrices,
    zero_vector,
)
from qarith import V
from schur import SchurElement, unit
from weyl import Composition, ThetaMatrix, theta_unit

E21 = ThetaMatrix.from_rows([[0, 1], [1, 0]])
DIAG_11 = ThetaMatrix.diag((1, 1))


def test_o_element_single_weight():
    assert o_element((1, 0), 1) == SchurElement.basis_element(DIAG_11).scale(V)


def test_long_element_small_cases():
    assert long_element(E21, (0, 0), 1) == SchurElement.basis_element(E21)
    assert long_element(theta_unit(1, 2, 1, 2), (0, 0), 1).is_zero()
    with pytest.raises(InvalidMatrixError):
        long_element(DIAG_11, (0, 0), 1)


def test_o_zero_is_unit():
    for n, r in [(1, 1), (1, 2), (2, 1)]:
        assert o_element(zero_vector(n), r) == unit(n, r)
        assert FormalCombination.unit(n).evaluate(r) == unit(n, r)


def test_normalize_j_preserves_values():
    j = (1, -1, 0, 2)
    A = theta_unit(2, 2, 1)
    for r in (1, 2):
        assert long_element(A, j, r) == long_element(A, normalize_j(j), r)


def test_o_times_long_element():
    lhs = product(o_element((1, 0), 1), long_element(E21, (0, 0), 1))
    assert lhs == long_element(E21, (1, 0), 1).scale(V)


def test_long_element_times_o():
    lhs = product(long_element(E21, (0, 0), 2), o_element((1, 0), 2))
    assert lhs == long_element(E21, (1, 0), 2).scale(V)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_formal_generators_on_unit(r):
    one = FormalCombination.unit(1)
    assert formal_t(one).evaluate(r) == generator_value("t", 1, r)
    j0 = (1, 0)
    assert formal_o(j0, one).evaluate(r) == o_element(j0, r)


def test_long_mul_formal_matches_numeric_at_n2():
    for A in zero_diagonal_matrices(2, 1):
        operand = LongElement(A, (0, 0, 0, 0))
        for kind in ("e", "f"):
            formal = long_mul_formal(kind, operand, h=1)
            for r in (1, 2):
                assert formal.evaluate(r) == long_mul(kind, operand, r, h=1)


def test_formal_apply_rejects_unknown_kind():
    with pytest.raises(ParameterRangeError):
        formal_apply("x", FormalCombination.unit(1))


N1_IDENTITIES = [i for i in STABILITY_IDENTITIES if i not in ("longMF2", "longMF3")]


@pytest.mark.parametrize("identity", N1_IDENTITIES)
def test_r_stability_n1(identity):
    report = verify_r_stability(identity, [1, 2, 3], 1, jbox=1, max_half=2)
    assert report.cases > 0
    assert report.failures == []


@pytest.mark.parametrize("identity", ["longMF2", "longMF3", "longMF4"])
def test_r_stability_n2(identity):
    report = verify_r_stability(identity, [1, 2], 2, jbox=0, max_half=1)
    assert report.cases > 0
    assert report.failures == []


def test_r_stability_perturbed_fails():
    report = verify_r_stability("longMF1_left", [2], 1, jbox=1, max_half=1, perturb=True)
    assert report.failures
    assert len(report.failures) == report.cases


def test_unknown_identity():
    with pytest.raises(ParameterRangeError):
        r_stability_identities("longMF9", 1)


@pytest.mark.parametrize("m", [1, 2])
def test_divided_powers_e_f(m):
    for kind in ("e", "f"):
        assert divided_power(kind, 1, m, 2, 2).ok


def test_divided_power_range():
    with pytest.raises(ParameterRangeError):
        divided_power("e", 1, 3, 2, 2)


@pytest.mark.parametrize("m,n,r", [(1, 1, 1), (2, 1, 1), (2, 1, 2), (3, 1, 2), (3, 1, 3), (2, 2, 2), (3, 2, 2)])
def test_unwound_t_powers(m, n, r):
    for check in dp2_check(m, n, r):
        assert check.ok, check.label


def test_eae_at_n1():
    zero = zero_vector(1)
    for r in (1, 2, 3):
        lhs = product(long_element(middle_unit(1), zero, r), long_element(middle_unit(1), zero, r))
        assert eae_rhs(1, 1).evaluate(r) == lhs


@pytest.mark.parametrize("m,A,j", [
    (1, E21, (0, 0)),
    (2, E21, (1, 0)),
    (2, ThetaMatrix.zero(1), (0, 1)),
])
def test_divided_t_mul_two_point(m, A, j):
    for check in dp3_checks(m, A, j, 1):
        assert check.ok, check.label


def test_divided_t_mul_m1_is_t_raw_rule():
    X = FormalCombination.symbol(E21, (0, 0))
    assert divided_t_mul(1, X) == formal_apply("t_raw", X)


def test_commutations():
    for check in commutation_checks(2, 2):
        assert check.ok, check.label


def test_commutations_n3():
    for check in commutation_checks(3, 1):
        assert check.ok, check.label


def test_k_binomial_examples():
    assert k_binomial(Composition((1,)), 1) == SchurElement.basis_element(DIAG_11)
    for check in k_binomial_checks(2, 2):
        assert check.ok, check.label


def test_j_box_is_normalized():
    box = j_box(1, 1)
    assert all(j == normalize_j(j) for j in box)
    assert len(box) == len(set(box))
