import json
import re
import subprocess
import sys

from orderinv.cli import main


def run_cli(*argv) -> subprocess.CompletedProcess:
    return subprocess.run(
        [sys.executable, "-m", "orderinv.cli", *argv],
        capture_output=True, text=True,
    )


def parse_table(text: str) -> dict[str, str]:
    rows = {}
    for line in text.splitlines():
        parts = re.split(r"\s{2,}", line.rstrip(), maxsplit=1)
        if len(parts) == 2:
            rows[parts[0]] = parts[1]
    return rows


def test_help_and_usage_exit_codes():
    assert run_cli("--help").returncode == 0
    assert run_cli().returncode == 2
    assert run_cli("compute").returncode == 2  # --group is required
    assert run_cli("frobnicate").returncode == 2


def test_compute_table_output(capsys):
    assert main(["compute", "--group", "S3", "--r", "0", "--s", "1"]) == 0
    rows = parse_table(capsys.readouterr().out)
    assert rows["weighted order sum"] == "13"
    assert rows["cyclic baseline"] == "21"
    assert rows["cyclic excess"] == "-8 (neg)"


def test_compute_json_output(capsys):
    assert main(["compute", "--group", "Q8", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["order"] == 8
    assert payload["solution_counts"] == {"1": 1, "2": 2, "4": 8, "8": 8}
    assert payload["cyclic_subgroup_count"] == 5
    assert payload["is_nilpotent"] is True and payload["is_cyclic"] is False


def test_compute_approximate_exponents(capsys):
    assert main(["compute", "--group", "C6", "--r", "0.5", "--s", "1/2",
                 "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["mode"] == "approximate"
    assert payload["sign"] == "zero"  # cyclic group, excess vanishes


def test_compute_bad_inputs():
    assert main(["compute", "--group", "NOPE"]) == 2
    assert main(["compute", "--group", "C12", "--n", "7"]) == 2
    assert run_cli("compute", "--group", "C4", "--r", "abc").returncode == 2


def test_compute_from_file(tmp_path, capsys):
    path = tmp_path / "klein.json"
    path.write_text(json.dumps({
        "label": "klein", "order": 4,
        "table": [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]],
    }))
    assert main(["compute", "--group", str(path), "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["group"] == "klein"
    assert payload["solution_counts"] == {"1": 1, "2": 4, "4": 4}


def test_match_solvable_group(capsys):
    assert main(["match", "--group", "D4"]) == 0
    assert "found and verified" in capsys.readouterr().out


def test_match_json(capsys):
    assert main(["match", "--group", "S3", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["status"] == "found" and payload["verified"] is True
    assert payload["assignment"]["2"] == {"2": 1, "6": 2}


def test_example_defaults(capsys):
    assert main(["example"]) == 0
    rows = parse_table(capsys.readouterr().out)
    assert rows["expected count"] == "10"
    assert rows["consistent"] == "True"
    assert "brute=10" in rows["checks"]


def test_example_rejects_non_semidirect_labels():
    assert main(["example", "--group", "S4"]) == 2


def test_example_json(capsys):
    assert main(["example", "--group", "C5:C6", "--grid", "2",
                 "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["claim"] == "inversion-semidirect-count"
    assert payload["consistent"] is True


def test_ingest_reports_and_exit_codes(tmp_path, capsys):
    good = tmp_path / "good.json"
    good.write_text(json.dumps({
        "label": "c3", "order": 3, "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]],
    }))
    bad = tmp_path / "bad.json"
    bad.write_text("{broken")
    assert main(["ingest", str(good)]) == 0
    assert "OK" in capsys.readouterr().out
    assert main(["ingest", str(good), str(bad), "--format", "json"]) == 2
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["groups"]) == 1 and len(payload["errors"]) == 1


def test_verify_small_catalog(tmp_path, capsys):
    spec = tmp_path / "cat.json"
    spec.write_text(json.dumps({
        "families": {"cyclic": [1, 8], "symmetric": [1, 3]},
        "order_cap": 8,
    }))
    assert main(["verify", "--catalog", str(spec)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["summary"]["groups"] == 11
    assert payload["summary"]["inconsistent"] == 0
    assert payload["exit_status"] == 0


def test_verify_claim_selection(tmp_path, capsys):
    spec = tmp_path / "cat.json"
    spec.write_text(json.dumps({"families": {"cyclic": [1, 5]}}))
    assert main(["verify", "--catalog", str(spec),
                 "--claims", "frobenius-divisibility,min-cyclic-count"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["claims"] == ["frobenius-divisibility", "min-cyclic-count"]
    for record in payload["groups"]:
        assert {v["claim"] for v in record["verdicts"]} == set(payload["claims"])


def test_verify_out_file(tmp_path, capsys):
    spec = tmp_path / "cat.json"
    spec.write_text(json.dumps({"families": {"cyclic": [1, 4]}}))
    out = tmp_path / "report.json"
    assert main(["verify", "--catalog", str(spec), "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    payload = json.loads(out.read_text())
    assert payload["summary"]["groups"] == 4


def test_verify_bad_ingested_file_exits_two(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("[]")
    spec = tmp_path / "cat.json"
    spec.write_text(json.dumps({
        "families": {"cyclic": [1, 4]}, "ingested": ["bad.json"],
    }))
    assert main(["verify", "--catalog", str(spec)]) == 2
    payload = json.loads(capsys.readouterr().out)
    assert payload["summary"]["groups"] == 4  # families still swept
    assert len(payload["input_errors"]) == 1


def test_verify_relative_ingest_paths_resolve_to_spec_dir(tmp_path, capsys):
    (tmp_path / "k.json").write_text(json.dumps({
        "label": "k4", "order": 4,
        "table": [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]],
    }))
    spec = tmp_path / "cat.json"
    spec.write_text(json.dumps({
        "families": {"cyclic": [1, 2]}, "ingested": ["k.json"],
    }))
    assert main(["verify", "--catalog", str(spec)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert [g["label"] for g in payload["groups"]] == ["C1", "C2", "k4"]


def test_verify_table_format(tmp_path, capsys):
    spec = tmp_path / "cat.json"
    spec.write_text(json.dumps({"families": {"dihedral": [3, 5]}}))
    assert main(["verify", "--catalog", str(spec), "--format", "table"]) == 0
    out = capsys.readouterr().out
    assert parse_table(out)["groups"] == "3"
    assert "INCONSISTENT" not in out


def test_verify_rejects_bad_spec_files(tmp_path):
    missing = tmp_path / "none.json"
    assert main(["verify", "--catalog", str(missing)]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"families": ["cyclic"]}))
    assert main(["verify", "--catalog", str(bad)]) == 2


def test_workers_env_is_honored(tmp_path, monkeypatch, capsys):
    spec = tmp_path / "cat.json"
    spec.write_text(json.dumps({"families": {"cyclic": [1, 6]}}))
    monkeypatch.setenv("ORDERINV_WORKERS", "2")
    assert main(["verify", "--catalog", str(spec)]) == 0
    capsys.readouterr()
    monkeypatch.setenv("ORDERINV_WORKERS", "banana")
    assert main(["verify", "--catalog", str(spec)]) == 2


def test_console_script_smoke():
    proc = run_cli("compute", "--group", "C6", "--format", "json")
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["is_cyclic"] is True
