import json
import subprocess
import sys

import pytest

from orbitcalc.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_orbits_listing(capsys):
    data = run_json(capsys, "orbits", "-1", "4", "--nilp", "0")
    assert [o["columns"] for o in data["orbits"]] == [[2, 2], [4]]
    assert [o["dimension"] for o in data["orbits"]] == [6, 0]
    full = run_json(capsys, "orbits", "-1", "4")
    assert len(full["orbits"]) == 4


def test_infchar(capsys):
    data = run_json(capsys, "infchar", "-1", "4")
    assert data["infinitesimal_character"] == ["2", "1"]
    assert data["orbit"]["columns"] == [4]


def test_bvdual(capsys):
    data = run_json(capsys, "bvdual", "-1", "2,2")
    assert data["dual"] == {"eps": 1, "dim": 5, "columns": [3, 1, 1]}
    assert data["half_h"] == ["1", "0"]
    assert data["checked"] is True


def test_lift_with_oracle(capsys):
    data = run_json(capsys, "lift", "-1", "2,2", "--dim", "8",
                    "--oracle", "--trials", "6")
    assert data["lift"]["columns"] == [4, 2, 2]
    assert data["sampled"]["columns"] == [4, 2, 2]
    assert data["agrees"] is True


def test_lift_plain(capsys):
    data = run_json(capsys, "lift", "-1", "2", "--dim", "4")
    assert data["lift"]["columns"] == [2, 2]
    assert "sampled" not in data
    empty = run_json(capsys, "lift", "1", "-", "--dim", "4")
    assert empty["lift"]["columns"] == [4]  # image of the point space is 0


def test_descend(capsys):
    data = run_json(capsys, "descend", "Sp(2,R)", "1,0|0,1")
    assert data["descent"] == "0,1"
    assert data["descended_form"]["signature"] == [0, 1]
    assert data["descended_form"]["eps"] == 1


def test_gendescend_default_is_plain_descent(capsys):
    data = run_json(capsys, "gendescend", "Sp(2,R)", "1,0|0,1")
    assert data["descent"] == "0,1"


def test_gendescend_with_target(capsys):
    data = run_json(capsys, "gendescend", "Sp(2,R)", "1,0|0,1",
                    "--target-sig", "2,1")
    assert data["descent"] == "2,1"
    assert data["target_form"]["signature"] == [2, 1]


def test_induce(capsys):
    data = run_json(capsys, "induce", "O(3,2)", "1,0", "--l", "2")
    assert data["results"] == [{"diagram": "2,1|0,1|1,0", "index": 2}]


def test_induce_signature_mismatch(capsys):
    code, _, err = run_cli(capsys, "induce", "O(2,2)", "1,0", "--l", "2")
    assert code == 1 and err.startswith("error:")


def test_korbits(capsys):
    data = run_json(capsys, "korbits", "Sp(4,R)", "2,2")
    assert [e["diagram"] for e in data["k_orbits"]] == \
        ["0,2|2,0", "1,1|1,1", "2,0|0,2"]
    assert [e["component_group"]["size"] for e in data["k_orbits"]] == \
        [2, 4, 2]


def test_korbits_admissible(capsys):
    data = run_json(capsys, "korbits", "Sp(4,R)", "2,2", "--admissible")
    assert [len(e["admissible"]) for e in data["k_orbits"]] == [2, 4, 2]


def test_count_flag_and_default_parity(capsys):
    data = run_json(capsys, "count", "Sp(2,R)", "1,1", "--parity", "1")
    assert data["total"] == 4 and data["genuine"] is True
    again = run_json(capsys, "count", "Sp(2,R)", "1,1")
    assert again == data


def test_classify_json(capsys):
    data = run_json(capsys, "classify", "Sp(4,R)", "--parity", "0")
    totals = {tuple(r["orbit_columns"]): r["total"] for r in data["rows"]}
    assert totals == {(2, 2): 8, (4,): 1}


def test_classify_csv(capsys):
    code, out, _ = run_cli(capsys, "classify", "Sp(4,R)", "--parity", "0",
                           "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].startswith("form,parity,orbit_columns")
    assert len(lines) == 5  # header, zero orbit, three parameters of [2,2]


def test_classify_requires_parity(capsys):
    code, _, err = run_cli(capsys, "classify", "Sp(4,R)")
    assert code == 1 and "parity" in err


def test_domain_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "infchar", "-1", "2,1")
    assert code == 1
    assert err.startswith("error:")


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["orbits", "2", "4"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_config_file_defaults(tmp_path, monkeypatch, capsys):
    cfg = tmp_path / "orbitcalc.cfg"
    cfg.write_text("parity=0\noutput_format=csv  # table output\n")
    monkeypatch.setenv("ORBITCALC_CONFIG", str(cfg))
    code, out, _ = run_cli(capsys, "classify", "Sp(4,R)")
    assert code == 0 and out.startswith("form,parity")
    # explicit flags win over the config file
    code, out, _ = run_cli(capsys, "classify", "Sp(4,R)", "--format", "json")
    assert code == 0 and out.lstrip().startswith("{")


def test_config_file_errors(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("ORBITCALC_CONFIG", str(tmp_path / "missing.cfg"))
    code, _, err = run_cli(capsys, "orbits", "-1", "2")
    assert code == 1 and "config" in err
    bad = tmp_path / "bad.cfg"
    bad.write_text("parity=maybe\n")
    monkeypatch.setenv("ORBITCALC_CONFIG", str(bad))
    code, _, err = run_cli(capsys, "classify", "Sp(4,R)")
    assert code == 1 and "parity" in err


def test_oracle_check_suite(capsys):
    data = run_json(capsys, "oracle-check", "dimension", "--max-dim", "4")
    assert data["passed"] is True
    assert data["suites"]["dimension"]["failures"] == []
    assert data["suites"]["dimension"]["cases"] > 0


def test_deterministic_output(capsys):
    first = run_cli(capsys, "classify", "Sp(4,R)", "--parity", "0")
    second = run_cli(capsys, "classify", "Sp(4,R)", "--parity", "0")
    assert first == second


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "orbitcalc", "orbits", "-1", "2"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["orbits"]
