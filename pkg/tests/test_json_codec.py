import pytest

from errors import InputParseError
from hecke import HeckeElement
from json_codec import (
    composition_from_json,
    hecke_from_json,
    index_from_text,
    laurent_from_json,
    load_json_arg,
    schur_from_json,
    tensor_from_json,
    matrix_from_json,
    weyl_from_json,
)
from qarith import LaurentPoly, V
from schur import SchurElement, oracle_product
from tensor import TensorVector
from weyl import Composition, ThetaMatrix, generator

E21 = ThetaMatrix.from_rows([[0, 1], [1, 0]])


def test_bare_matrix_reads_as_basis_element():
    assert schur_from_json([[0, 1], [1, 0]]) == SchurElement.basis_element(E21)


def test_schur_element_json_is_read_back():
    X = oracle_product(E21, E21)
    assert schur_from_json(X.to_json(), 1, 1) == X


def test_schur_json_errors():
    with pytest.raises(InputParseError):
        schur_from_json({"n": 1, "r": 1})
    with pytest.raises(InputParseError):
        schur_from_json({"n": 1, "r": 2, "terms": [{"matrix": [[0, 1], [1, 0]], "coeff": 1}]})
    with pytest.raises(InputParseError):
        schur_from_json([[0, 1], [1, 0]], n=2)


def test_laurent_forms():
    assert laurent_from_json(3) == LaurentPoly.constant(3)
    assert laurent_from_json({"v": {"-1": 2}}) == 2 * V ** -1
    with pytest.raises(InputParseError):
        laurent_from_json({"v": {"x": 1}})


def test_weyl_hecke_and_composition():
    assert weyl_from_json([2, 1]) == generator(1, 1)
    h = hecke_from_json({"terms": [{"w": [2, 1], "coeff": {"v": {"1": 1}}}]}, 1)
    assert h == HeckeElement.basis(generator(1, 1)).scale(V)
    assert composition_from_json([1, 0]).parts == (1, 0)
    with pytest.raises(InputParseError):
        composition_from_json([-1])


def test_tensor_vector_json_is_read_back():
    vec = TensorVector.basis(2, (1, 4)).scale(V) + TensorVector.basis(2, (3, 3))
    assert tensor_from_json(vec.to_json()) == vec
    with pytest.raises(InputParseError):
        tensor_from_json({"n": 1, "r": 2, "terms": [{"index": [1], "coeff": {"v": {"0": 1}}}]})


def test_load_json_arg(tmp_path):
    path = tmp_path / "m.json"
    path.write_text("[[1,0],[0,1]]")
    assert load_json_arg(f"@{path}") == [[1, 0], [0, 1]]
    with pytest.raises(InputParseError):
        load_json_arg(f"@{tmp_path / 'missing.json'}")
    with pytest.raises(InputParseError):
        load_json_arg("{")


def test_index_from_text():
    assert index_from_text("1,2,2") == [1, 2, 2]
    with pytest.raises(InputParseError):
        index_from_text("1,x")


def test_object_forms():
    assert weyl_from_json({"images": [2, 1]}) == generator(1, 1)
    assert generator(1, 1).to_json() == {"images": [2, 1]}
    assert composition_from_json({"parts": [1, 0]}) == Composition((1, 0))
    assert Composition((1, 0)).to_json() == {"parts": [1, 0]}
    assert matrix_from_json(E21.to_json()) == E21
    assert E21.to_json() == {"n": 1, "rows": [[0, 1], [1, 0]]}
    assert schur_from_json(E21.to_json(), 1, 1) == SchurElement.basis_element(E21)


@pytest.mark.parametrize("reader,data", [
    (matrix_from_json, {"n": 2, "rows": [[0, 1], [1, 0]]}),
    (matrix_from_json, {"rows": [[0, 1], [1, 0]]}),
    (weyl_from_json, {"w": [2, 1]}),
    (composition_from_json, {"parts": [-1]}),
])
def test_object_forms_rejected(reader, data):
    with pytest.raises(InputParseError):
        reader(data)
