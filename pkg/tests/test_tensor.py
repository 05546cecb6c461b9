import pytest

from errors import DecompositionError, InputParseError, ParameterRangeError
from qarith import V
from schur import SchurElement
from tensor import (
    GlExpression,
    GlGenerator,
    Operator,
    TensorVector,
    all_indices,
    check_commuting_and_match,
    check_eta_bijection,
    check_hecke_relations,
    check_hecke_routes,
    check_relations,
    eta,
    eta_inverse,
    generators,
    gl_action,
    hat_index,
    hecke_action_tensor,
    hecke_action_via_eta,
    index_matrix,
    iota_image,
    matrix_index,
    operator_of_generator,
    parse_generator,
    ui_action_closed,
    weight,
)
from weyl import ThetaMatrix, theta_unit


def w(n, *i):
    return TensorVector.basis(n, i)


def test_hat_index_and_weight():
    assert hat_index((1, 3), 2) == (1, 3, 2, 4)
    assert weight((1, 1), 1) == (2, 2)


def test_gl_generators_on_small_vectors():
    E1 = GlExpression.word(GlGenerator("E", 1))
    K1 = GlExpression.word(GlGenerator("K", 1))
    assert gl_action(E1, w(1, 2)) == w(1, 1)
    assert gl_action(E1, w(1, 1)).is_zero()
    assert gl_action(K1, w(1, 1)) == w(1, 1).scale(V)


def test_gl_comultiplication_order():
    E1 = GlExpression.word(GlGenerator("E", 1))
    assert gl_action(E1, w(1, 2, 2)) == w(1, 2, 1) + w(1, 1, 2).scale(V ** -1)


def test_gl_generator_validation():
    with pytest.raises(InputParseError):
        GlGenerator("X", 1)
    with pytest.raises(InputParseError):
        GlGenerator("E", 1, 2)
    with pytest.raises(ParameterRangeError):
        gl_action(GlExpression.word(GlGenerator("E", 2)), w(1, 1))


def test_closed_forms_n1():
    assert ui_action_closed(("d", 1), w(1, 1)) == w(1, 1).scale(V ** -1)
    assert ui_action_closed(("dinv", 1), w(1, 2, 1)) == w(1, 2, 1).scale(V ** 2)
    assert ui_action_closed(("t", 1), w(1, 1)) == w(1, 1).scale(V ** -1) + w(1, 2)
    assert ui_action_closed(("t", 1), w(1, 2)) == w(1, 1) + w(1, 2).scale(V)


@pytest.mark.parametrize("n,r", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_closed_forms_match_pullback(n, r):
    for gen in generators(n, inverses=True):
        for i in all_indices(n, r):
            vec = TensorVector.basis(n, i)
            assert ui_action_closed(gen, vec) == gl_action(iota_image(gen, n), vec), (gen, i)


def test_parse_generator():
    assert parse_generator("t", 2) == ("t", 2)
    assert parse_generator("dinv_1", 2) == ("dinv", 1)
    assert parse_generator(" e_1 ", 2) == ("e", 1)
    with pytest.raises(InputParseError):
        parse_generator("x_1", 2)
    with pytest.raises(InputParseError):
        parse_generator("e", 2)
    with pytest.raises(ParameterRangeError):
        parse_generator("e_2", 2)
    with pytest.raises(ParameterRangeError):
        parse_generator("d_0", 2)


def test_place_permutations():
    assert hecke_action_tensor(1, w(1, 1)) == w(1, 2).scale(V)
    assert hecke_action_tensor(1, w(1, 2)) == w(1, 2).scale(V ** 2 - 1) + w(1, 1).scale(V)
    assert hecke_action_tensor(1, w(1, 1, 2)) == w(1, 2, 1).scale(V)
    assert hecke_action_tensor(1, w(1, 1, 1)) == w(1, 1, 1).scale(V ** 2)
    with pytest.raises(ParameterRangeError):
        hecke_action_tensor(3, w(1, 1, 1))


def test_hecke_route_agrees_on_basis():
    for i in all_indices(2, 2):
        for j in (1, 2):
            vec = TensorVector.basis(2, i)
            assert hecke_action_tensor(j, vec) == hecke_action_via_eta(j, vec)


def test_eta_examples():
    assert eta(w(1, 1)) == SchurElement.basis_element(ThetaMatrix.diag((1, 1)))
    assert eta(w(1, 2)) == SchurElement.basis_element(ThetaMatrix.from_rows([[0, 1], [1, 0]]))
    image = index_matrix((2,), 2)
    assert image(2, 1) == 1 and image(3, 4) == 1 and image.total() == 2


def test_eta_round_trip():
    vec = w(2, 1, 3).scale(V) + w(2, 4, 2)
    assert eta_inverse(eta(vec), 2) == vec
    for i in all_indices(2, 2):
        assert matrix_index(index_matrix(i, 2), 2) == i


def test_eta_shifts_when_n_below_r():
    vec = w(1, 1, 2)
    image = eta(vec)
    assert (image.n, image.r) == (2, 2)
    assert image == SchurElement.basis_element(index_matrix((2, 3), 2))
    assert eta_inverse(image, 1) == vec


def test_index_matrix_errors():
    with pytest.raises(ParameterRangeError):
        index_matrix((1, 2), 1)
    with pytest.raises(DecompositionError):
        matrix_index(ThetaMatrix.diag((1, 0, 0, 1)), 2)
    with pytest.raises(DecompositionError):
        eta_inverse(SchurElement.basis_element(theta_unit(2, 4, 1)), 1)


def test_operator_algebra():
    op = operator_of_generator(("t", 1), 1, 2)
    one = Operator.identity(1, 2)
    assert one @ op == op
    assert op @ one == op
    assert (op - op) == one.scale(0)


@pytest.mark.parametrize("n,r", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_defining_relations(n, r):
    for check in check_relations(n, r):
        assert check.ok, check.label


def test_defining_relations_n3():
    for check in check_relations(3, 1):
        assert check.ok, check.label


@pytest.mark.parametrize("n,r", [(1, 2), (2, 2), (1, 3)])
def test_hecke_relations(n, r):
    for check in check_hecke_relations(n, r):
        assert check.ok, check.label


@pytest.mark.parametrize("n,r", [(1, 1), (2, 1), (2, 2)])
def test_commuting_and_eta_match(n, r):
    checks = check_commuting_and_match(n, r)
    assert any(c.label.startswith("eta") for c in checks)
    for check in checks:
        assert check.ok, check.label


def test_commuting_without_schur_leg():
    checks = check_commuting_and_match(1, 2)
    assert checks
    assert not any(c.label.startswith("eta") for c in checks)
    for check in checks:
        assert check.ok, check.label


@pytest.mark.parametrize("n,r", [(1, 1), (2, 1), (2, 2)])
def test_eta_bijection(n, r):
    for check in check_eta_bijection(n, r):
        assert check.ok, check.label


def test_hecke_routes_at_1_1():
    for check in check_hecke_routes(1, 1):
        assert check.ok, check.label


def test_tensor_vector_json():
    data = (w(1, 2, 1).scale(V) + w(1, 1, 1)).to_json()
    assert data["n"] == 1 and data["r"] == 2
    assert [t["index"] for t in data["terms"]] == [[1, 1], [2, 1]]
