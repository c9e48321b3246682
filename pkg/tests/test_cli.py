import json

import pytest

from fusion_paths.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_verlinde(capsys):
    assert run(capsys, "verlinde", "--k", "1", "--N", "4") == (0, "[8, 8]\n")


def test_verlinde_json(capsys):
    code, out = run(capsys, "--format", "json", "verlinde", "--k", "2", "--N", "2")
    assert code == 0 and json.loads(out)["values"] == [3, 4, 3]


def test_paths_count(capsys):
    assert run(capsys, "paths", "--k", "1", "--l", "0", "--N", "3", "--count") == (0, "4\n")


def test_paths_checks(capsys):
    assert run(capsys, "paths", "--k", "2", "--l", "1", "--N", "4", "--check-bijection", "--check-recursion")[0] == 0


def test_char(capsys):
    assert run(capsys, "char", "--k", "1", "--l", "0", "--N", "2") == (0, "1 + q*z2\n")


def test_char_verify_exit_codes(capsys):
    assert run(capsys, "char", "--k", "1", "--N", "4", "--verify", "right")[0] == 0
    assert run(capsys, "char", "--k", "1", "--N", "4", "--verify", "left")[0] == 1
    assert run(capsys, "char", "--k", "1", "--N", "4", "--verify", "all", "--from-gradings")[0] == 0


def test_oracle_dims(capsys):
    code, out = run(capsys, "--format", "json", "oracle", "dims", "--family", "W", "--k", "1",
                    "--l1", "1", "--l2", "1", "--M", "1", "--N", "1")
    data = json.loads(out)
    assert code == 0 and data["total"] == 2
    assert [s["basis"] for s in data["spaces"]] == [["1"], ["h_1"]]


def test_oracle_csv(capsys):
    code, out = run(capsys, "--format", "csv", "oracle", "dims", "--k", "1", "--l1", "1", "--l2", "1",
                    "--M", "0", "--N", "3")
    assert code == 0 and out.splitlines()[0].startswith("family,k,l1,l2,l3,M,N,m,n,d,dim")


def test_oracle_verify(capsys):
    assert run(capsys, "oracle", "verify-aux", "--k", "1", "--maxMN", "2")[0] == 0
    assert run(capsys, "oracle", "verify-thmR", "--k", "1", "--l1", "1", "--l2", "1", "--l3", "1",
               "--M", "1", "--N", "1")[0] == 0


def test_aux_cap_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("FUSION_PATHS_AUX_CAP", "5")
    assert run(capsys, "oracle", "dims", "--k", "1", "--l1", "1", "--l2", "1", "--M", "1", "--N", "1")[0] == 0


def test_bad_parameters(capsys):
    assert run(capsys, "verlinde", "--k", "0", "--N", "2")[0] == 2
    assert run(capsys, "paths", "--k", "1", "--l", "3", "--N", "2")[0] == 2
    assert run(capsys, "oracle", "verify-thmR", "--k", "1", "--l1", "0", "--l2", "1", "--l3", "1",
               "--M", "1", "--N", "1")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["verlinde", "--k", "x"])
    assert exc.value.code == 2


def test_suite_group(capsys):
    code, out = run(capsys, "--format", "json", "suite", "--only", "properties")
    assert code == 0 and json.loads(out)["criteria"][0]["id"] == 17


def test_suite_reports_corrupted_golden_file(capsys, tmp_path):
    from fusion_paths.golden import _load
    data = _load("r_matrix_k1.json")
    data["rows"][0][0] = [{"c": 2, "q": 0, "z1": 0, "z2": 0}]
    (tmp_path / "r_matrix_k1.json").write_text(json.dumps(data))
    for name in ("l_matrix_k1.json", "w1_monomial_table.json"):
        (tmp_path / name).write_text(json.dumps(_load(name)))
    code, out = run(capsys, "--format", "json", "suite", "--only", "combinatorics", "--golden-dir", str(tmp_path))
    failed = [c["id"] for c in json.loads(out)["criteria"] if not c["passed"]]
    assert code == 1 and 6 in failed
