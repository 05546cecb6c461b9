"""
JSON forms for the iSchur toolkit
Schemas (checked with jsonschema) for every value that crosses the CLI or the
explorer, plus the parse helpers that turn validated JSON back into objects.
"""

import json
import os
from typing import Any, Dict, List, Optional

import jsonschema

from errors import InputParseError

LAURENT_SCHEMA = {
    "type": "object",
    "properties": {
        "v": {
            "type": "object",
            "patternProperties": {"^-?[0-9]+$": {"type": "integer"}},
            "additionalProperties": False,
        }
    },
    "required": ["v"],
}

# bare rows, as they appear inside SchurElement terms
ROWS_SCHEMA = {
    "type": "array",
    "minItems": 2,
    "items": {"type": "array", "items": {"type": "integer", "minimum": 0}},
}

MATRIX_SCHEMA = {
    "type": "object",
    "properties": {"n": {"type": "integer", "minimum": 1}, "rows": ROWS_SCHEMA},
    "required": ["n", "rows"],
    "additionalProperties": False,
}

PARTS_SCHEMA = {"type": "array", "minItems": 1, "items": {"type": "integer", "minimum": 0}}

COMPOSITION_SCHEMA = {
    "type": "object",
    "properties": {"parts": PARTS_SCHEMA},
    "required": ["parts"],
    "additionalProperties": False,
}

# bare images, as they appear inside HeckeElement terms
IMAGES_SCHEMA = {"type": "array", "minItems": 2, "items": {"type": "integer"}}

WEYL_SCHEMA = {
    "type": "object",
    "properties": {"images": IMAGES_SCHEMA},
    "required": ["images"],
    "additionalProperties": False,
}

HECKE_SCHEMA = {
    "type": "object",
    "properties": {
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"w": IMAGES_SCHEMA, "coeff": LAURENT_SCHEMA},
                "required": ["w", "coeff"],
            },
        }
    },
    "required": ["terms"],
}

SCHUR_SCHEMA = {
    "type": "object",
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "r": {"type": "integer", "minimum": 0},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"matrix": ROWS_SCHEMA, "coeff": LAURENT_SCHEMA},
                "required": ["matrix", "coeff"],
            },
        },
    },
    "required": ["n", "r", "terms"],
}

TENSOR_SCHEMA = {
    "type": "object",
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "r": {"type": "integer", "minimum": 1},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "index": {"type": "array", "minItems": 1, "items": {"type": "integer", "minimum": 1}},
                    "coeff": LAURENT_SCHEMA,
                },
                "required": ["index", "coeff"],
            },
        },
    },
    "required": ["n", "r", "terms"],
}

REPORT_SCHEMA = {
    "type": "object",
    "properties": {
        "suite": {"type": "string"},
        "grid": {"type": "object"},
        "cases": {"type": "integer", "minimum": 0},
        "failures": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"case": {"type": "string"}, "lhs": {}, "rhs": {}},
                "required": ["case", "lhs", "rhs"],
            },
        },
        "failure_count": {"type": "integer", "minimum": 0},
        "wall_time": {"type": "number"},
    },
    "required": ["suite", "grid", "cases", "failures", "failure_count"],
}

TABLE_SCHEMA = {
    "type": "array",
    "items": {
        "type": "object",
        "properties": {"A": MATRIX_SCHEMA, "B": MATRIX_SCHEMA, "product": SCHUR_SCHEMA},
        "required": ["A", "B", "product"],
        "additionalProperties": False,
    },
}

CONFIG_SCHEMA = {
    "type": "object",
    "properties": {
        "max_n": {"type": "integer", "minimum": 1, "maximum": 4},
        "max_r": {"type": "integer", "minimum": 1, "maximum": 4},
        "max_basis": {"type": "integer", "minimum": 1, "maximum": 10000},
        "max_group_rank": {"type": "integer", "minimum": 1, "maximum": 5},
        "threads": {"type": "integer", "minimum": 1},
        "default_jbox": {"type": "integer", "minimum": 0, "maximum": 3},
        "output_dir": {"type": "string"},
        "last_updated": {"type": "string"},
    },
    "additionalProperties": False,
}


def validate(data: Any, schema: Dict, what: str):
    """
    Raises:
        InputParseError: naming what failed and where
    """
    try:
        jsonschema.validate(data, schema)
    except jsonschema.ValidationError as e:
        where = "/".join(str(p) for p in e.absolute_path) or "top level"
        raise InputParseError(f"Invalid {what} at {where}: {e.message}") from e


def load_json_arg(text: str) -> Any:
    """Parse a JSON command-line argument; '@path' reads the file instead"""
    try:
        if text.startswith("@"):
            path = text[1:]
            if not os.path.exists(path):
                raise InputParseError(f"File not found: {path}")
            with open(path, "r", encoding="utf-8") as f:
                return json.load(f)
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputParseError(f"Malformed JSON: {e}") from e


def dumps(obj: Any, indent: Optional[int] = None) -> str:
    return json.dumps(obj, sort_keys=False, ensure_ascii=False, indent=indent)


def laurent_from_json(data: Any):
    from qarith import LaurentPoly

    if isinstance(data, int) and not isinstance(data, bool):
        return LaurentPoly.constant(data)
    validate(data, LAURENT_SCHEMA, "Laurent polynomial")
    return LaurentPoly.from_json(data)


def matrix_from_json(data: Any):
    """A ThetaMatrix from {"n": n, "rows": [...]} or from its bare rows"""
    from weyl import ThetaMatrix

    if isinstance(data, list):
        validate(data, ROWS_SCHEMA, "matrix")
        return ThetaMatrix.from_rows(data)
    validate(data, MATRIX_SCHEMA, "matrix")
    A = ThetaMatrix.from_rows(data["rows"])
    if A.n != data["n"]:
        raise InputParseError(f"Matrix rows have size {A.size}, expected {2 * data['n']} for n={data['n']}")
    return A


def composition_from_json(data: Any):
    from weyl import Composition

    if isinstance(data, list):
        validate(data, PARTS_SCHEMA, "composition")
        return Composition.of(data)
    validate(data, COMPOSITION_SCHEMA, "composition")
    return Composition.of(data["parts"])


def weyl_from_json(data: Any):
    from weyl import WeylElement

    if isinstance(data, list):
        validate(data, IMAGES_SCHEMA, "Weyl group element")
        return WeylElement.checked(data)
    validate(data, WEYL_SCHEMA, "Weyl group element")
    return WeylElement.checked(data["images"])


def hecke_from_json(data: Any, rank: int):
    from hecke import HeckeElement

    validate(data, HECKE_SCHEMA, "Hecke element")
    terms = {}
    for term in data["terms"]:
        w = weyl_from_json(term["w"])
        terms[w] = terms.get(w, laurent_from_json(0)) + laurent_from_json(term["coeff"])
    return HeckeElement(rank, terms)


def schur_from_json(data: Any, n: Optional[int] = None, r: Optional[int] = None):
    """
    A SchurElement from its JSON form, or from a single matrix (read as [A]).

    Raises:
        InputParseError: on malformed input or an (n, r) that disagrees with the data
    """
    from schur import SchurElement

    if isinstance(data, list) or (isinstance(data, dict) and "rows" in data):
        element = SchurElement.basis_element(matrix_from_json(data))
    else:
        validate(data, SCHUR_SCHEMA, "Schur algebra element")
        terms = {}
        for term in data["terms"]:
            A = matrix_from_json(term["matrix"])
            if A.n != data["n"] or A.total() != 2 * data["r"]:
                raise InputParseError(f"Matrix {term['matrix']} does not lie in S^i({data['n']}, {data['r']})")
            terms[A] = terms.get(A, laurent_from_json(0)) + laurent_from_json(term["coeff"])
        element = SchurElement(data["n"], data["r"], terms)
    if (n is not None and element.n != n) or (r is not None and element.r != r):
        raise InputParseError(f"Element lies in S^i({element.n}, {element.r}), expected S^i({n}, {r})")
    return element


def tensor_from_json(data: Any):
    from tensor import TensorVector, check_index

    validate(data, TENSOR_SCHEMA, "tensor vector")
    terms = {}
    for term in data["terms"]:
        i = check_index(term["index"], data["n"])
        if len(i) != data["r"]:
            raise InputParseError(f"Index {term['index']} should have length {data['r']}")
        terms[i] = terms.get(i, laurent_from_json(0)) + laurent_from_json(term["coeff"])
    return TensorVector(data["n"], data["r"], terms)


def index_from_text(text: str) -> List[int]:
    """'1,2,2' -> [1, 2, 2]"""
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as e:
        raise InputParseError(f"Malformed multi-index: {text}") from e
