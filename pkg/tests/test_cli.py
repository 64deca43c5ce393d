import json

import pytest

from augcube.cli import main


def run_cli(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr().out
    return status, out


def test_topology_round_trip(tmp_path, capsys):
    art = tmp_path / "g.json"
    assert main(["topology", "4", "--json", str(art)]) == 0
    status, out = run_cli(capsys, "verify", str(art))
    assert status == 0 and json.loads(out)["ok"]


def test_fn_table(capsys):
    status, out = run_cli(capsys, "fn-table", "--max", "4")
    rows = json.loads(out)["rows"]
    assert status == 0 and rows == [[2, 3], [3, 8], [4, 21]]


def test_pair_round_trip(tmp_path, capsys):
    art = tmp_path / "p.json"
    assert main(["pair", "4", "--j", "3", "--json", str(art)]) == 0
    data = json.loads(art.read_text())
    assert data["union_is_whole"]
    status, out = run_cli(capsys, "verify", str(art))
    assert status == 0 and json.loads(out)["ok"]


def test_subcubes_round_trip(tmp_path, capsys):
    art = tmp_path / "s.json"
    assert main(["subcubes", "3", "--json", str(art)]) == 0
    assert len(json.loads(art.read_text())["selections"]) == 8
    status, out = run_cli(capsys, "verify", str(art))
    assert status == 0 and json.loads(out)["ok"]


def test_edhc_verify_and_round_trip(tmp_path, capsys):
    art = tmp_path / "e.json"
    assert main(["edhc", "4", "--verify", "--json", str(art)]) == 0
    data = json.loads(art.read_text())
    assert data["verified"] and len(data["cycles"]) == 2
    status, out = run_cli(capsys, "verify", str(art))
    assert status == 0 and json.loads(out)["ok"]


def test_verify_rejects_tampered_cycle(tmp_path, capsys):
    art = tmp_path / "e.json"
    assert main(["edhc", "3", "--json", str(art)]) == 0
    data = json.loads(art.read_text())
    data["cycles"][0][0], data["cycles"][0][1] = (
        data["cycles"][0][1],
        data["cycles"][0][0],
    )
    art.write_text(json.dumps(data))
    status, out = run_cli(capsys, "verify", str(art))
    assert status == 1
    assert json.loads(out)["problems"]


def test_verify_rejects_malformed(tmp_path, capsys):
    art = tmp_path / "bad.json"
    art.write_text(json.dumps({"artifact": "no-such-kind"}))
    assert main(["verify", str(art)]) == 1


def test_fault_trial_round_trip(tmp_path, capsys):
    art = tmp_path / "t.json"
    status = main([
        "fault-trial", "--n", "5", "--faults", "12", "--trials", "2",
        "--seed", "7", "--pattern", "matching", "--json", str(art),
    ])
    assert status == 0
    data = json.loads(art.read_text())
    assert len(data["trials"]) == 2
    assert all(t["spectrum_complete"] for t in data["trials"])
    status, out = run_cli(capsys, "verify", str(art))
    assert status == 0 and json.loads(out)["ok"]


def test_oracle_golden_check(capsys):
    status, out = run_cli(capsys, "oracle", "golden-check")
    data = json.loads(out)
    assert status == 0
    assert data["rows"] == 45 and data["distinct_rows"] == 24
    assert data["rows_all_valid"]
    assert data["enumeration_count"] == 32 and not data["enumeration_covered"]


def test_oracle_subgraph_count(capsys):
    status, out = run_cli(capsys, "oracle", "subgraph-count", "--n", "2")
    assert status == 0 and json.loads(out)["count"] == 3


def test_byte_identical_reruns(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["fault-trial", "--n", "5", "--faults", "12", "--seed", "3"]
    assert main(argv + ["--json", str(a)]) == 0
    assert main(argv + ["--json", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["fault-trial", "--n", "5"])  # missing required --faults
    assert exc.value.code == 2


def test_bad_value_exits_1(capsys):
    assert main(["topology", "0"]) == 1
    assert main(["verify", "/nonexistent/path.json"]) == 1


def test_dot_output(tmp_path):
    dot = tmp_path / "g.dot"
    assert main(["edhc", "3", "--dot", str(dot), "--json", str(tmp_path / "x.json")]) == 0
    text = dot.read_text()
    assert text.startswith("graph") and "--" in text
