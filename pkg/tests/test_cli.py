import json
from pathlib import Path

import pytest

from coprime_ramsey import cli

REPO = Path(__file__).resolve().parents[1]
GOLDEN = str(REPO / "golden")

FAST_GOLDEN_COMMANDS = [
    ["values"],
    ["mixed"],
    ["rank-table"],
    ["edge-table"],
    ["sat-diag"],
    ["imbalance"],
    ["balanced-split"],
    ["window"],
    ["offdiag"],
    ["gap-scan", "--m-max", "1000000"],
    ["shifted"],
    ["shifted", "--certs", "--m", "2..50", "--k", "3..7"],
    ["oracle"],
    ["endpoint-decide", "--c", "3,4", "--k", "3"],
]


@pytest.mark.parametrize("argv", FAST_GOLDEN_COMMANDS, ids=lambda a: " ".join(a))
def test_golden_commands_match(argv, capsys):
    code = cli.main(argv + ["--golden-dir", GOLDEN])
    assert code == 0, capsys.readouterr().err


def test_labels_golden(capsys):
    code = cli.main(["labels", "--golden-dir", GOLDEN])
    assert code == 0


def test_golden_mismatch_is_exit_1(tmp_path, capsys):
    bad = tmp_path / "values.csv"
    bad.write_text("k,prime_index,R,ratio_k_log_k\n2,2,999,0.0\n")
    code = cli.main(["values", "--golden-dir", str(tmp_path)])
    assert code == 1


def test_write_golden_then_match(tmp_path, capsys):
    assert cli.main(["mixed", "--golden-dir", str(tmp_path), "--write-golden"]) == 0
    assert (tmp_path / "mixed.csv").exists()
    assert cli.main(["mixed", "--golden-dir", str(tmp_path)]) == 0


def test_output_deterministic(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    cli.main(["values", "--out", str(a), "--golden-dir", str(tmp_path)])
    cli.main(["values", "--out", str(b), "--golden-dir", str(tmp_path)])
    assert a.read_bytes() == b.read_bytes()
    assert a.read_bytes().endswith(b"\n") and b"\r" not in a.read_bytes()


def test_usage_error_exit_3(capsys):
    assert cli.main(["values", "--k", "nonsense"]) == 3
    assert cli.main(["no-such-command"]) == 3


def test_support_check_builtins(capsys):
    assert cli.main(["support-check", "--builtin", "g30", "--demands", "10,10"]) == 0
    out = capsys.readouterr().out
    assert "pass one-universal r=10 M=18 avoiding" in out

    assert cli.main(["support-check", "--builtin", "interval-11-17", "--expect-fail"]) == 0
    out = capsys.readouterr().out
    assert "singleton-coverage 3 5 7" in out

    assert cli.main(["support-check", "--builtin", "g30-extra", "--expect-fail"]) == 0
    out = capsys.readouterr().out
    assert "adjacency-mismatch" in out and "6" in out and "10" in out

    # an unflagged failure is a mismatch
    assert cli.main(["support-check", "--builtin", "g30-extra"]) == 1


def test_support_check_forcing(capsys):
    assert cli.main(["support-check", "--builtin", "g30", "--demands", "3,3"]) == 0
    out = capsys.readouterr().out
    assert "forcing" in out and "clique" in out


def test_verify_accepts_own_witness(capsys):
    assert cli.main(["verify", str(REPO / "golden" / "k10-witness.json")]) == 0
    assert capsys.readouterr().out.strip() == "accept"


def test_verify_rejects_tampered(tmp_path, capsys):
    doc = json.loads((REPO / "golden" / "k10-witness.json").read_text())
    doc["witness"]["colors"][0] = 2  # vertex 1 moved out of its bin color
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    assert cli.main(["verify", str(bad)]) == 1


def test_encode_cnf_writes_file(tmp_path):
    out = tmp_path / "g.cnf"
    assert cli.main(["encode-cnf", "--n", "7", "--k", "3", "--out", str(out)]) == 0
    text = out.read_bytes()
    assert text.startswith(b"p cnf 14 52\n")
    assert text.count(b"\n") == 53


def test_parse_range():
    assert cli.parse_range("2..5") == [2, 3, 4, 5]
    assert cli.parse_range("7") == [7]
    assert cli.parse_range("1,3..4") == [1, 3, 4]
    with pytest.raises(ValueError):
        cli.parse_range("x")
