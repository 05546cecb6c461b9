import json

import pytest

from json_codec import TABLE_SCHEMA, dumps, validate
from main import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main
from qarith import V
from tensor import TensorVector

E21 = "[[0,1],[1,0]]"


def run(capsys, *argv):
    code = main(["--quiet", *argv])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_basis(capsys):
    code, data = run(capsys, "basis", "--n", "1", "--r", "1")
    assert code == EXIT_OK
    assert data == [{"n": 1, "rows": [[0, 1], [1, 0]]}, {"n": 1, "rows": [[1, 0], [0, 1]]}]
    code, data = run(capsys, "basis", "--n", "2", "--r", "1")
    assert code == EXIT_OK and len(data) == 8


def test_basis_rejects_n0(capsys):
    code, data = run(capsys, "basis", "--n", "0", "--r", "1")
    assert code == EXIT_USAGE
    assert data is None


def test_mult_both_methods_agree(capsys):
    code, data = run(capsys, "mult", "--lhs", E21, "--rhs", E21, "--method", "both")
    assert code == EXIT_OK
    assert data["match"] is True
    assert data["oracle"] == data["formula"]
    assert data["oracle"]["n"] == 1 and data["oracle"]["r"] == 1


def test_mult_oracle_from_file(capsys, tmp_path):
    path = tmp_path / "lhs.json"
    path.write_text(E21)
    code, data = run(capsys, "mult", "--lhs", f"@{path}", "--rhs", "[[1,0],[0,1]]")
    assert code == EXIT_OK
    assert (data["n"], data["r"]) == (1, 1)
    assert [t["matrix"] for t in data["terms"]] == [[[0, 1], [1, 0]]]


def test_mult_accepts_matrix_object(capsys):
    lhs = '{"n": 1, "rows": [[0,1],[1,0]]}'
    code, data = run(capsys, "mult", "--lhs", lhs, "--rhs", E21, "--method", "formula")
    assert code == EXIT_OK
    _, oracle = run(capsys, "mult", "--lhs", E21, "--rhs", E21)
    assert data == oracle


def test_mult_input_errors(capsys):
    assert run(capsys, "mult", "--lhs", "[[0,1],", "--rhs", E21)[0] == EXIT_USAGE
    assert run(capsys, "mult", "--lhs", "[[1,0],[0,2]]", "--rhs", E21)[0] == EXIT_USAGE
    assert run(capsys, "mult", "--n", "2", "--lhs", E21, "--rhs", E21)[0] == EXIT_USAGE
    assert run(capsys, "mult", "--lhs", "[[1,0],[0,1]]", "--rhs", E21, "--method", "formula")[0] == EXIT_USAGE


def test_tensor_act(capsys):
    code, data = run(capsys, "tensor-act", "--n", "1", "--gen", "t", "--index", "1")
    assert code == EXIT_OK
    expected = TensorVector.basis(1, (1,)).scale(V ** -1) + TensorVector.basis(1, (2,))
    assert data == json.loads(dumps(expected.to_json()))


def test_tensor_act_both_routes(capsys):
    code, data = run(capsys, "tensor-act", "--n", "2", "--gen", "e_1", "--index", "4,1", "--via", "both")
    assert code == EXIT_OK
    assert data["match"] is True


def test_tensor_act_errors(capsys):
    assert run(capsys, "tensor-act", "--n", "1", "--r", "2", "--gen", "t", "--index", "1")[0] == EXIT_USAGE
    assert run(capsys, "tensor-act", "--n", "1", "--gen", "q_1", "--index", "1")[0] == EXIT_USAGE
    assert run(capsys, "tensor-act", "--n", "1", "--gen", "t", "--index", "3")[0] == EXIT_USAGE


def test_verify_passes(capsys):
    code, data = run(capsys, "verify", "short", "--n", "1", "--r", "1")
    assert code == EXIT_OK
    assert data["failures"] == [] and data["failure_count"] == 0 and data["cases"] == 2
    assert "wall_time" not in data


def test_verify_timing(capsys):
    code, data = run(capsys, "verify", "dimension", "--n", "1", "--r", "2", "--timing")
    assert code == EXIT_OK
    assert "wall_time" in data


def test_verify_perturbed_fails(capsys):
    code, data = run(capsys, "verify", "long", "--n", "1", "--r", "2", "--jbox", "0", "--perturb")
    assert code == EXIT_FAILURE
    assert data["failure_count"] == len(data["failures"]) > 0
    assert {"case", "lhs", "rhs"} <= set(data["failures"][0])


def test_verify_caps(capsys):
    code, _ = run(capsys, "verify", "dimension", "--n", "9", "--r", "1")
    assert code == EXIT_USAGE


def test_table(capsys, tmp_path):
    out = tmp_path / "table.json"
    code, data = run(capsys, "table", "--n", "1", "--r", "1", "--out", str(out))
    assert code == EXIT_OK
    assert data == {"file": str(out), "records": 4}
    stored = json.loads(out.read_text())
    validate(stored, TABLE_SCHEMA, "table")
    assert len(stored) == 4
    assert stored[0]["A"] == {"n": 1, "rows": [[0, 1], [1, 0]]}
    assert stored[0]["B"] == stored[0]["A"]
    assert stored[0]["product"]["n"] == 1


def test_table_default_location(capsys, isolated_data_dir):
    code, data = run(capsys, "table", "--n", "1", "--r", "1")
    assert code == EXIT_OK
    assert data["file"].startswith(str(isolated_data_dir))


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense", "--n", "1", "--r", "1"])
    assert exc.value.code == 2


@pytest.mark.parametrize("argv", [
    ["verify", "multi", "--n", "2", "--r", "2", "--m-max", "0"],
    ["verify", "long", "--n", "1", "--r", "2", "--jbox", "-3"],
    ["verify", "dimension", "--n", "1", "--r", "1", "--threads", "0"],
    ["verify", "stability", "--n", "1", "--r", "1", "--r-set", "0,1"],
    ["verify", "stability", "--n", "1", "--r", "1", "--r-set", "one"],
])
def test_verify_rejects_out_of_range_options(capsys, argv):
    code, data = run(capsys, *argv)
    assert code == EXIT_USAGE
    assert data is None


def test_outputs_are_byte_identical_across_runs(capsys, tmp_path):
    first, second = tmp_path / "first.json", tmp_path / "second.json"
    run(capsys, "table", "--n", "1", "--r", "2", "--out", str(first))
    run(capsys, "table", "--n", "1", "--r", "2", "--out", str(second))
    assert first.read_bytes() == second.read_bytes()

    outputs = []
    for _ in range(2):
        assert main(["--quiet", "verify", "short", "--n", "2", "--r", "1"]) == EXIT_OK
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
