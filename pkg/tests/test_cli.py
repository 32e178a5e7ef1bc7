import json

import pytest

from cubicrel import cli


def invoke(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_decompose_json(capsys):
    code, out, _ = invoke(capsys, "decompose", "S")
    assert code == 0
    data = json.loads(out)
    assert data["dimension"] == 1 + 7 + 1 and data["degree"] == 1


def test_json_output_is_byte_identical(capsys):
    first = invoke(capsys, "verify", "szs-sym")[1]
    second = invoke(capsys, "verify", "szs-sym")[1]
    assert first == second
    assert json.loads(first)["passed"] is True


@pytest.mark.parametrize("key", ["szs-sym", "szs-hilb", "yfy", "yfy-hilb", "deg5", "a1", "a2"])
def test_verify_registered(capsys, key):
    code, out, _ = invoke(capsys, "verify", key)
    assert code == 0 and json.loads(out)["passed"]


def test_find_relation_degree_four_with_z(capsys):
    code, out, _ = invoke(capsys, "find-relation", "--degree", "4", "--with", "Z", "--distinguished", "Z")
    data = json.loads(out)
    assert code == 0 and data["field_dimension"] == 1
    assert data["mod_L"] == ["[S^(4)] ≡ [S^(3)] (mod L)"]


def test_usage_errors_exit_two(capsys):
    assert invoke(capsys, "verify", "nope")[0] == 2
    assert invoke(capsys, "decompose", "Q")[0] == 2
    assert invoke(capsys, "burnside", "--case", "smooth")[0] == 2
    assert invoke(capsys, "find-relation", "--classes", "S,Q")[0] == 2


def test_failing_check_exits_one(capsys, monkeypatch):
    monkeypatch.setitem(cli.COMMANDS, "validate",
                        lambda cfg: {"checks": [{"check": "planted", "passed": False, "detail": "x"}],
                                     "passed": False})
    code, _, err = invoke(capsys, "validate")
    assert code == 1 and "first failing check: planted" in err


def test_out_file(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = invoke(capsys, "--out", str(path), "burnside", "--case", "a2")
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["group_order"] == 72


@pytest.mark.parametrize("fmt", ["text", "tsv"])
def test_other_formats(capsys, fmt):
    code, out, _ = invoke(capsys, "--format", fmt, "burnside", "--case", "a1")
    assert code == 0 and out.strip()
    if fmt == "tsv":
        assert all(line.count("\t") == 2 for line in out.splitlines() if line)


def test_fourfold_derive(capsys):
    code, out, _ = invoke(capsys, "fourfold", "--derive")
    data = json.loads(out)
    assert code == 0 and data["passed"] and data["space"]["field_dimension"] == 1


def test_all_for_a1_case(capsys):
    code, out, _ = invoke(capsys, "--case", "a1", "all")
    assert code == 0 and json.loads(out)["passed"]


def test_find_relation_empty_space_has_complete_certificate(capsys):
    code, out, _ = invoke(capsys, "find-relation", "--degree", "2", "--json")
    data = json.loads(out)
    assert code == 0 and data["nullity"] == 0
    assert data["certificate"]["complete"] and data["certificate"]["residual"] == []


def test_json_flag_overrides_top_level_format(capsys):
    _, out, _ = invoke(capsys, "--format", "text", "verify", "deg5", "--json")
    assert json.loads(out)["passed"]
