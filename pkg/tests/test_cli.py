"""Command-line surface: outputs, exit codes, JSON schemas, determinism."""

import json

import pytest

from tritangle import parse_state, state_from_json
from tritangle.cli import main
from _util import same_physical_state

GHZ = "(|000> + |111>)/sqrt(2)"
PSI = "1/2(|100>+|010>+|001>+|111>)"
ROT = '{"matrix": [["1","1"],["-1","1"]], "sqrt_scale2": 2}'


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_ghz(capsys):
    code, out, err = run(capsys, ["classify", GHZ])
    assert code == 0 and err == ""
    assert "[1; 0, 0, 0, 0, 0, 0]" in out
    assert "1/16" in out


def test_classify_json_schema(capsys):
    code, out, _ = run(capsys, ["classify", PSI, "--json"])
    assert code == 0
    record = json.loads(out)
    assert set(record) == {"det_abs2", "sub2", "display", "separable"}
    assert record["det_abs2"] == "1/16"
    assert record["display"] == [1.0] * 7
    assert record["separable"] is False


def test_classify_float_backend(capsys):
    code, out, _ = run(capsys, ["classify", GHZ, "--float", "--json"])
    assert code == 0
    record = json.loads(out)
    assert record["det_abs2"] == pytest.approx(1 / 16)


def test_classify_parse_error_exit2(capsys):
    code, out, err = run(capsys, ["classify", "|00"])
    assert code == 2 and out == "" and "offset" in err


def test_classify_mixed_arity_exit2(capsys):
    code, _, err = run(capsys, ["classify", "|00> + |000>"])
    assert code == 2 and "mixes" in err


def test_classify_wrong_qubit_count_exit3(capsys):
    code, _, err = run(capsys, ["classify", "|00>"])
    assert code == 3 and "3-qubit" in err


def test_table_statuses(capsys):
    code, out, _ = run(capsys, ["table", "--json"])
    assert code == 0
    rows = {r["name"]: r for r in json.loads(out)}
    assert rows["separable"]["status"] == "matches"
    assert rows["GHZ"]["status"] == "matches"
    assert rows["psi"]["status"] == "matches"
    assert rows["phi"]["status"] == "matches"
    assert rows["W"]["status"] == "matches up to entry order"
    assert rows["cluster"]["status"] == "DISAGREES"
    assert rows["cluster"]["computed"] == [1, 1, 1, 0, 0, 1, 1]
    assert rows["cluster"]["quoted"] == [1, 1, 0, 1, 1, 0, 1]
    assert rows["separable"]["separable"] is True


def test_table_text_output(capsys):
    code, out, _ = run(capsys, ["table"])
    assert code == 0
    assert "DISAGREES" in out
    assert out.count("\n") == 6


def test_measure_ghz(capsys):
    code, out, _ = run(capsys, ["measure", GHZ, "--qubit", "1", "--outcome", "0", "--json"])
    assert code == 0
    record = json.loads(out)
    assert record["prob"] == 0.5
    assert record["prob_exact"] == "1/2"
    assert record["concurrence"] == 0.0


def test_measure_impossible_outcome_exit3(capsys):
    code, _, err = run(capsys, ["measure", "|000>", "--qubit", "1", "--outcome", "1"])
    assert code == 3 and "probability 0" in err


def test_measure_requires_flags(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["measure", GHZ])
    assert exc.value.code == 2


def test_transform_ghz_to_psi(capsys):
    code, out, _ = run(
        capsys, ["transform", GHZ, "--u1", ROT, "--u2", ROT, "--u3", ROT, "--json"]
    )
    assert code == 0
    record = json.loads(out)
    result = state_from_json(record["state"])
    assert same_physical_state(result, parse_state(PSI))


def test_transform_backend_mismatch_exit4(capsys):
    s = 2 ** -0.5
    float_rot = json.dumps({"matrix": [[s, s], [-s, s]]})
    code, _, err = run(capsys, ["transform", GHZ, "--u1", float_rot])
    assert code == 4 and "unitary" in err


def test_transform_bad_matrix_json_exit2(capsys):
    code, _, err = run(capsys, ["transform", GHZ, "--u1", "{not json"])
    assert code == 2


def test_check_sep_product(capsys):
    code, out, _ = run(capsys, ["check-sep", "|000>", "--json"])
    assert code == 0
    record = json.loads(out)
    assert set(record) == {"separable", "factors", "oracle_agrees"}
    assert record["separable"] is True
    assert record["oracle_agrees"] is True
    assert record["factors"]["fx"] == [["1", "0"], ["0", "0"]]


def test_check_sep_entangled(capsys):
    code, out, _ = run(capsys, ["check-sep", GHZ, "--json"])
    assert code == 0
    record = json.loads(out)
    assert record["separable"] is False
    assert record["factors"] is None
    assert record["oracle_agrees"] is True


def test_factor_command(capsys):
    code, out, _ = run(capsys, ["factor", "3|000> + 3|001> - |010> - |011> + 6|100> + 6|101> - 2|110> - 2|111>", "--json"])
    assert code == 0
    record = json.loads(out)
    assert record["factors"]["fz"] == [["1", "0"], ["1", "0"]]


def test_factor_not_separable_exit3(capsys):
    code, _, err = run(capsys, ["factor", GHZ])
    assert code == 3 and "not a product" in err


def test_random_deterministic(capsys):
    code1, out1, _ = run(capsys, ["random", "--count", "25", "--seed", "9", "--json"])
    code2, out2, _ = run(capsys, ["random", "--count", "25", "--seed", "9", "--json"])
    assert code1 == code2 == 0
    assert out1 == out2
    record = json.loads(out1)
    assert record["mismatches"] == 0
    assert len(record["states"]) == 25


def test_random_kind_product_all_separable(capsys):
    code, out, _ = run(capsys, ["random", "--count", "10", "--seed", "3", "--kind", "product", "--json"])
    assert code == 0
    record = json.loads(out)
    assert all(r["separable"] for r in record["states"])


def test_json_state_input(tmp_path, capsys):
    code, out, _ = run(capsys, ["classify", GHZ, "--json"])
    expected = json.loads(out)
    path = tmp_path / "state.json"
    from tritangle import state_to_json

    path.write_text(json.dumps(state_to_json(parse_state(GHZ))))
    code, out, _ = run(capsys, ["classify", "--json-state", str(path), "--json"])
    assert code == 0
    assert json.loads(out) == expected


def test_json_state_malformed_exit2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"amps": "nope"}')
    code, _, err = run(capsys, ["classify", "--json-state", str(path)])
    assert code == 2


def test_no_expression_exit2(capsys):
    code, _, err = run(capsys, ["classify"])
    assert code == 2
