import pytest

from errors import CapExceededError, InvalidMatrixError, ParameterRangeError
from weyl import (
    Composition,
    ThetaMatrix,
    compositions,
    coset_reps,
    double_coset,
    double_coset_table,
    enumerate_group,
    generator,
    group_elements,
    identity,
    length,
    longest_parabolic_length,
    matrix_of_triple,
    parabolic,
    reduced_word,
    theta_unit,
    triple_count,
    triple_of_matrix,
    word_to_element,
)

DIAG_11 = ThetaMatrix.from_rows([[1, 0], [0, 1]])
ANTIDIAG_11 = ThetaMatrix.from_rows([[0, 1], [1, 0]])


def test_word_to_element():
    assert word_to_element(2, []).images == (1, 2, 3, 4)
    assert word_to_element(2, [2]).images == (1, 3, 2, 4)
    assert word_to_element(2, [1]).images == (2, 1, 4, 3)


def test_lengths():
    assert length(identity(2)) == 0
    assert length(generator(2, 2)) == 1
    assert max(length(w) for w in group_elements(2)) == 4


@pytest.mark.parametrize("r,size", [(1, 2), (2, 8), (3, 48)])
def test_group_sizes(r, size):
    assert len(group_elements(r)) == size


def test_enumerate_group_lengths_r1():
    assert sorted(l for _, l in enumerate_group(1)) == [0, 1]


def test_group_rank_cap():
    with pytest.raises(CapExceededError):
        enumerate_group(6)


@pytest.mark.parametrize("w", group_elements(2))
def test_reduced_word_rebuilds_element(w):
    assert word_to_element(2, reduced_word(w)) == w


def test_generator_out_of_range():
    with pytest.raises(ParameterRangeError):
        generator(2, 3)


def test_parabolic_subgroups():
    assert parabolic(Composition((1, 1))) == frozenset({identity(2)})
    assert parabolic(Composition((2, 0))) == frozenset({identity(2), generator(2, 1)})
    assert len(parabolic(Composition((3,)))) == 6
    assert longest_parabolic_length(Composition((2,))) == 1


def test_coset_reps():
    assert len(coset_reps(Composition((1, 1)))) == 8
    assert set(coset_reps(Composition((1,)))) == {identity(1), generator(1, 1)}
    assert len(coset_reps(Composition((2,)))) == 4


def test_double_cosets():
    one = Composition((1,))
    coset = double_coset(one, one, generator(1, 1))
    assert coset.elements == frozenset({generator(1, 1)})
    assert coset.d_plus == generator(1, 1)
    two = Composition((2,))
    coset = double_coset(two, two, identity(2))
    assert coset.elements == frozenset({identity(2), generator(2, 1)})
    assert coset.d_plus == generator(2, 1)


def test_matrix_of_triple():
    one = Composition((1,))
    assert matrix_of_triple(one, identity(1), one) == DIAG_11
    assert matrix_of_triple(one, generator(1, 1), one) == ANTIDIAG_11
    two = Composition((2,))
    assert matrix_of_triple(two, identity(2), two) == ThetaMatrix.from_rows([[2, 0], [0, 2]])


def test_triple_of_matrix():
    assert triple_of_matrix(DIAG_11) == (Composition((1,)), identity(1), Composition((1,)))
    assert triple_of_matrix(ANTIDIAG_11)[1] == generator(1, 1)


@pytest.mark.parametrize("n,r", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_triples_biject_with_matrices(n, r):
    for lam in compositions(n, r):
        for mu in compositions(n, r):
            for A, d in double_coset_table(lam, mu).items():
                assert triple_of_matrix(A) == (lam, d, mu)


def test_triple_counts():
    assert [triple_count(1, 1), triple_count(1, 2), triple_count(2, 1), triple_count(2, 2)] == [2, 3, 8, 36]


def test_theta_matrix_validation():
    with pytest.raises(InvalidMatrixError):
        ThetaMatrix.from_rows([[1, 0], [0, 2]])
    with pytest.raises(InvalidMatrixError):
        ThetaMatrix.from_rows([[1]])
    with pytest.raises(InvalidMatrixError):
        ThetaMatrix.from_rows([[-1, 0], [0, -1]])


def test_theta_unit_middle_entries_coincide():
    assert theta_unit(2, 2, 3) == theta_unit(2, 3, 2)
    A = theta_unit(2, 2, 1)
    assert A(2, 1) == 1 and A(3, 4) == 1 and A.total() == 2


def test_compositions():
    assert [c.parts for c in compositions(2, 1)] == [(0, 1), (1, 0)]
    assert len(compositions(2, 2)) == 3
    assert Composition((1, 0)).hat() == (1, 0, 0, 1)
