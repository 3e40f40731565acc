import copy
import json

import pytest

from grdecomp.cli import main
from grdecomp.fixtures import fixture_data
from grdecomp.session import session_from_dict, session_to_dict


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_fixtures_listing(capsys):
    code, out, _ = run(capsys, "fixtures")
    assert code == 0 and "fermion" in out.split()


def test_decompose_json_is_stable(capsys):
    code, out, _ = run(capsys, "decompose", "--fixture", "fermion", "--spec", "a0", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["matrix"] == [[{"0": 1, "1": 1}]]
    assert data["q1"] == [[2]] and data["ungraded_oracle"] == [[2]]
    code2, out2, _ = run(capsys, "decompose", "--fixture", "fermion", "--spec", "a0", "--format", "json")
    assert out == out2


def test_text_commands(capsys):
    for argv in (
        ("validate", "--fixture", "hecke_s2"),
        ("character", "--fixture", "fermion"),
        ("fingerprint", "--fixture", "fermion", "--depth", "2"),
        ("specialize", "--fixture", "fermion", "--spec", "a0p"),
        ("simples", "--fixture", "hecke_s3_e3", "--spec", "zeta3"),
        ("diagram", "--fixture", "hecke_s3_e3", "--spec", "zeta3"),
        ("factorcheck", "--fixture", "hecke_s2", "--tower", "t1"),
    ):
        code, out, err = run(capsys, *argv)
        assert code == 0, (argv, err)
        assert out.strip()
    code, out, _ = run(capsys, "factorcheck", "--fixture", "hecke_s2", "--tower", "t1")
    assert out.startswith("PASS")


def test_computation_errors_exit_2(capsys):
    code, _, err = run(capsys, "simples", "--fixture", "nonsplit_rotation")
    assert code == 2 and "NotSplit" in err and "Traceback" not in err
    code, _, err = run(
        capsys, "factorcheck", "--fixture", "hecke_s2_tower", "--theta", "v1", "--theta-prime", "vm1"
    )
    assert code == 2 and "KernelNotNested" in err


def _write(tmp_path, data):
    p = tmp_path / "s.json"
    p.write_text(json.dumps(data) if not isinstance(data, str) else data)
    return str(p)


def test_input_errors_exit_1(capsys, tmp_path):
    code, _, err = run(capsys, "validate", _write(tmp_path, "{not json"))
    assert code == 1 and "SchemaError" in err
    code, _, err = run(capsys, "validate", _write(tmp_path, {}))
    assert code == 1 and "SchemaError" in err
    data = copy.deepcopy(fixture_data("fermion"))
    data["modules"][0]["action"]["xy"][1][1] = "b"
    code, _, err = run(capsys, "character", _write(tmp_path, data))
    assert code == 1 and "UndeclaredVariable" in err
    data["modules"][0]["action"]["xy"][1][1] = "a +"
    code, out, _ = run(capsys, "character", _write(tmp_path, data), "--format", "json")
    assert code == 1 and json.loads(out)["error"] == "ExpressionSyntaxError"


def test_validate_reports_violations(capsys, tmp_path):
    data = copy.deepcopy(fixture_data("fermion"))
    data["modules"][0]["action"]["x"] = [["0", "1"], ["1", "0"]]
    code, out, _ = run(capsys, "validate", _write(tmp_path, data), "--format", "json")
    assert code == 1
    rep = json.loads(out)
    assert not rep["ok"]
    kinds = {v["kind"] for r in rep["reports"] for v in r["violations"]}
    assert "homogeneity" in kinds


@pytest.mark.parametrize("name", ["fermion", "hecke_s2_tower", "hecke_s3_e3", "exterior"])
def test_session_round_trip(name):
    s = session_from_dict(fixture_data(name))
    emitted = session_to_dict(s)
    again = session_from_dict(json.loads(json.dumps(emitted)))
    assert session_to_dict(again) == emitted
    assert again.algebra == s.algebra
    assert [m.action for m in again.modules] == [m.action for m in s.modules]


def test_undeclared_variable_in_product_is_located():
    from grdecomp.errors import UndeclaredVariable

    data = copy.deepcopy(fixture_data("hecke_s2"))
    data["algebra"]["products"]["T*T"]["T"] = "w - 1"
    with pytest.raises(UndeclaredVariable, match=r"T\*T"):
        session_from_dict(data)


def test_hecke_s2_fixture_shape():
    s = session_from_dict(fixture_data("hecke_s2"))
    assert (len(s.modules), len(s.specializations), len(s.towers)) == (2, 2, 1)
