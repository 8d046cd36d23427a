import json
import subprocess
import sys
from pathlib import Path

import pytest

from delpezzo.cli import main

ROOT = Path(__file__).resolve().parent.parent
SURF_DIR = ROOT / "surf"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_sing_resolve_exact_line(capsys):
    code, out, _ = run_cli(capsys, "sing", "resolve", "7", "3")
    assert code == 0
    assert out == "chain: -3 -2 -2 | alpha: 3/7 2/7 1/7\n"


def test_sing_resolve_rejects_bad_type(capsys):
    code, _, err = run_cli(capsys, "sing", "resolve", "4", "2")
    assert code == 1
    assert "gcd" in err


def test_sing_classify(tmp_path, capsys):
    graph_file = tmp_path / "chain.graph"
    graph_file.write_text("vertices: -3 -2 -2\nedges: 1-2, 2-3\n")
    code, out, _ = run_cli(capsys, "sing", "classify", str(graph_file))
    assert code == 0
    assert "other_log_terminal" in out
    assert "1/7(1,3)" in out
    assert "3/7 2/7 1/7" in out


def test_group_info(capsys):
    code, out, _ = run_cli(capsys, "group", "info", "A5")
    assert code == 0
    assert "order: 60" in out
    assert "P1 orbit sizes: 12 20 30 60" in out
    code, out, _ = run_cli(capsys, "group", "info", "L2_7")
    assert "order: 168" in out
    assert "NoFaithfulAction" in out


def test_surf_run_json(capsys):
    code, out, _ = run_cli(
        capsys, "surf", "run", str(SURF_DIR / "ptilde_12_0.surf"), "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["k2"] == "3/2"
    assert payload["singular_points"][0]["type"] == "1/8(1,1)"


def test_surf_run_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.surf"
    bad.write_text("blowup on C\n")
    code, _, err = run_cli(capsys, "surf", "run", str(bad))
    assert code == 1 and "expected" in err
    not_lt = tmp_path / "notlt.surf"
    not_lt.write_text(
        "base P2\ntrack C = 2H\ntrack L = H\nblowup 1 on C as E\ncontract C,L\nreport\n"
    )
    code, _, err = run_cli(capsys, "surf", "run", str(not_lt))
    assert code == 2
    missing = tmp_path / "missing.surf"
    code, _, err = run_cli(capsys, "surf", "run", str(missing))
    assert code == 1


def test_every_committed_surf_example_runs(capsys):
    files = sorted(SURF_DIR.glob("*.surf"))
    assert files
    for path in files:
        code, out, err = run_cli(capsys, "surf", "run", str(path))
        assert code == 0, (path.name, err)


def test_output_is_byte_identical_across_runs(capsys):
    first = run_cli(capsys, "surf", "run", str(SURF_DIR / "f_2_10_1.surf"), "--json")
    second = run_cli(capsys, "surf", "run", str(SURF_DIR / "f_2_10_1.surf"), "--json")
    assert first == second
    a = run_cli(capsys, "audit", "run", "--all")
    b = run_cli(capsys, "audit", "run", "--all")
    assert a == b


def test_family_build(capsys):
    code, out, _ = run_cli(
        capsys, "family", "build", "PTilde", "--params", "k=12,s=0"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["k2"] == "3/2" and payload["rho"] == 12
    code, _, err = run_cli(capsys, "family", "build", "F", "--params", "n=6,k=12,a=1")
    assert code == 1 and "ak-2n > 0" in err


def test_family_verify_all(capsys):
    code, out, _ = run_cli(capsys, "family", "verify-all")
    assert code == 0
    assert "0 failures" in out


def test_audit_run_single(capsys):
    code, out, _ = run_cli(capsys, "audit", "run", "audit_klein_noether")
    assert code == 0
    payload = json.loads(out)
    assert payload[0]["verdict"] == "ContradictionConfirmed"


def test_audit_run_all(capsys):
    code, out, _ = run_cli(capsys, "audit", "run", "--all")
    assert code == 0
    payload = json.loads(out)
    assert len(payload) == 6
    assert all(r["verdict"] in ("ContradictionConfirmed", "IdentityHolds") for r in payload)


def test_audit_run_with_range(capsys):
    code, out, _ = run_cli(
        capsys, "audit", "run", "audit_k2_f10", "--range", "s_max=10"
    )
    assert code == 0
    assert json.loads(out)[0]["verdict"] == "ContradictionConfirmed"


def test_audit_unknown_name(capsys):
    code, _, err = run_cli(capsys, "audit", "run", "audit_nonexistent")
    assert code == 1 and "unknown audit" in err


def test_unknown_subcommand_exits_one(capsys):
    with pytest.raises(SystemExit) as exit_info:
        main(["frobnicate"])
    assert exit_info.value.code == 1


def test_version_flag():
    proc = subprocess.run(
        [sys.executable, "-m", "delpezzo.cli", "--version"],
        capture_output=True,
        text=True,
        cwd=ROOT,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "delpezzo 0.1.0"
