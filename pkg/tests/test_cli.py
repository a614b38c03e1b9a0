"""Command line behavior: manifests, formats, exit codes."""

import json
import subprocess
import sys
from fractions import Fraction

import pytest

import linespectra.cli as cli_mod
from linespectra.cli import main
from linespectra.inequalities import InequalityReport
from linespectra.serialization import load_configuration


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def gen(tmp_path, capsys, *argv):
    path = tmp_path / "config.json"
    code, out, err = run(capsys, "generate", *argv, "--out", str(path))
    assert code == 0, err
    return path


# --- generate ---


def test_generate_grid(tmp_path, capsys):
    path = tmp_path / "grid.json"
    code, out, err = run(capsys, "generate", "grid", "--a", "3", "--b", "3",
                         "--out", str(path))
    assert code == 0
    manifest = json.loads(out)
    assert manifest["command"] == "generate"
    assert manifest["arguments"] == {"generator": "grid", "a": 3, "b": 3}
    assert manifest["result"]["n"] == 9
    assert manifest["result"]["expected_spectrum"] is None
    assert load_configuration(str(path)).label == "grid(a=3,b=3)"


def test_generate_family_with_closed_form(tmp_path, capsys):
    path = tmp_path / "np.json"
    code, out, _ = run(capsys, "generate", "near-pencil", "--n", "6",
                       "--out", str(path))
    assert code == 0
    manifest = json.loads(out)
    assert manifest["result"]["expected_spectrum"] == {"2": 5, "5": 1}


def test_generate_random_echoes_seed(tmp_path, capsys):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "generate", "random", "--n", "10", "--seed", "4",
                       "--bound", "50", "--out", str(path))
    assert code == 0
    manifest = json.loads(out)
    assert manifest["arguments"] == {
        "generator": "random", "n": 10, "seed": 4, "bound": 50,
    }


def test_generate_hyphenated_aliases(tmp_path, capsys):
    a = gen(tmp_path, capsys, "sylvester-cubic", "--k", "3")
    label_a = load_configuration(str(a)).label
    b = gen(tmp_path, capsys, "cuspidal-cubic", "--k", "3")
    label_b = load_configuration(str(b)).label
    assert label_a == label_b == "sylvester_cubic(k=3)"


def test_generate_requires_out(capsys):
    code, _, err = run(capsys, "generate", "grid", "--a", "2", "--b", "2")
    assert code == 1
    assert "error:" in err


def test_generate_requires_family_parameters(tmp_path, capsys):
    code, _, err = run(capsys, "generate", "fermat",
                       "--out", str(tmp_path / "f.json"))
    assert code == 1
    assert "--m" in err


# --- analyze ---


def test_analyze_json_manifest(tmp_path, capsys):
    path = gen(tmp_path, capsys, "boroczky", "--m", "4")
    code, out, _ = run(capsys, "analyze", str(path))
    assert code == 0
    manifest = json.loads(out)
    assert manifest["command"] == "analyze"
    assert manifest["arguments"] == {"input": str(path), "format": "json"}
    result = manifest["result"]
    assert result["n"] == 8
    assert result["ell"] == {"2": 4, "3": 6, "4": 1}
    assert result["real"] is True


def test_analyze_csv(tmp_path, capsys):
    path = gen(tmp_path, capsys, "grid", "--a", "2", "--b", "3")
    code, out, _ = run(capsys, "analyze", str(path), "--format", "csv")
    assert code == 0
    assert out.startswith("quantity,value\nn,6\n")


def test_analyze_out_writes_file_and_threads_stay_hidden(tmp_path, capsys):
    path = gen(tmp_path, capsys, "grid", "--a", "6", "--b", "6")
    dest = tmp_path / "a.json"
    code, out, _ = run(capsys, "analyze", str(path), "--threads", "3",
                       "--out", str(dest))
    assert code == 0
    assert out == ""
    manifest = json.loads(dest.read_text())
    assert set(manifest["arguments"]) == {"input", "format"}


def test_analyze_threads_do_not_change_bytes(tmp_path, capsys):
    path = gen(tmp_path, capsys, "grid", "--a", "6", "--b", "6")
    one = tmp_path / "one.json"
    four = tmp_path / "four.json"
    assert run(capsys, "analyze", str(path), "--out", str(one))[0] == 0
    assert run(capsys, "analyze", str(path), "--threads", "4",
               "--out", str(four))[0] == 0
    assert one.read_bytes() == four.read_bytes()


def test_analyze_rejects_bad_thread_count(tmp_path, capsys):
    path = gen(tmp_path, capsys, "grid", "--a", "2", "--b", "2")
    code, _, err = run(capsys, "analyze", str(path), "--threads", "0")
    assert code == 1


def test_analyze_missing_file(capsys):
    code, _, err = run(capsys, "analyze", "/nonexistent/config.json")
    assert code == 1
    assert "error:" in err


def test_analyze_duplicate_points_rejected(tmp_path, capsys):
    bad = tmp_path / "dupe.json"
    bad.write_text(json.dumps({
        "field": {"kind": "rational"},
        "points": [["1", "0", "1"], ["2", "0", "2"]],
    }))
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 1


# --- check ---


def test_check_all_reports(tmp_path, capsys):
    path = gen(tmp_path, capsys, "boroczky", "--m", "5")
    code, out, _ = run(capsys, "check", str(path))
    assert code == 0
    manifest = json.loads(out)
    result = manifest["result"]
    assert manifest["arguments"]["which"] == "all"
    assert len(result["reports"]) == 35
    assert result["violations"] == []
    assert result["exit_code"] == 0


def test_check_single_name(tmp_path, capsys):
    path = gen(tmp_path, capsys, "boroczky", "--m", "5")
    code, out, _ = run(capsys, "check", str(path), "melchior")
    assert code == 0
    reports = json.loads(out)["result"]["reports"]
    assert [r["name"] for r in reports] == ["melchior"]


def test_check_group_prefix(tmp_path, capsys):
    path = gen(tmp_path, capsys, "grid", "--a", "3", "--b", "3")
    code, out, _ = run(capsys, "check", str(path), "basic")
    assert code == 0
    reports = json.loads(out)["result"]["reports"]
    assert {r["name"] for r in reports} == {
        "basic_line_count", "basic_incidences", "basic_pair_count",
    }


def test_check_all_flag_overrides_positional(tmp_path, capsys):
    path = gen(tmp_path, capsys, "grid", "--a", "2", "--b", "2")
    code, out, _ = run(capsys, "check", str(path), "melchior", "--all")
    assert code == 0
    assert len(json.loads(out)["result"]["reports"]) == 35


def test_check_unknown_name(tmp_path, capsys):
    path = gen(tmp_path, capsys, "grid", "--a", "2", "--b", "2")
    code, _, err = run(capsys, "check", str(path), "mystery")
    assert code == 1
    assert "error:" in err


def test_check_csv(tmp_path, capsys):
    path = gen(tmp_path, capsys, "grid", "--a", "3", "--b", "3")
    code, out, _ = run(capsys, "check", str(path), "--format", "csv")
    assert code == 0
    assert out.startswith("name,kind,applicable,satisfied,tight,")


def test_check_exit_two_on_violated_proof(tmp_path, capsys, monkeypatch):
    path = gen(tmp_path, capsys, "grid", "--a", "2", "--b", "2")
    broken = InequalityReport(
        name="synthetic", kind="theorem", applicable=True,
        applicability_reason="", relation=">=", lhs=Fraction(0),
        rhs=Fraction(1), slack=Fraction(-1), satisfied=False,
        tight=False, strict=False,
    )
    monkeypatch.setattr(cli_mod, "run_checks", lambda *a, **k: [broken])
    code, out, _ = run(capsys, "check", str(path))
    assert code == 2
    result = json.loads(out)["result"]
    assert result["violations"] == ["synthetic"]
    assert result["exit_code"] == 2


# --- search ---


def test_search_exhaustive_manifest(capsys):
    code, out, _ = run(capsys, "search", "exhaustive", "--n", "4", "--g", "3",
                       "--cap", "2")
    assert code == 0
    manifest = json.loads(out)
    assert manifest["arguments"] == {
        "mode": "exhaustive", "n": 4, "g": 3, "cap": 2,
        "objective": "incidences", "prune": True,
    }
    record = manifest["result"]["record"]
    assert record["best_value"] == 12
    ref = manifest["result"]["conjecture_reference"]
    assert ref["threshold"] == "3/8"
    assert ref["at_or_above"] is True
    assert ref["max_collinear"] <= 2


def test_search_local_with_checkpoint(tmp_path, capsys):
    ckpt = tmp_path / "s.ckpt"
    code, out, _ = run(capsys, "search", "local", "--n", "8", "--cap", "8",
                       "--iterations", "50", "--restarts", "1",
                       "--checkpoint", str(ckpt))
    assert code == 0
    assert ckpt.exists()
    record = json.loads(out)["result"]["record"]
    assert record["method"] == "local"


def test_search_validation(capsys):
    assert run(capsys, "search", "exhaustive", "--n", "4", "--g", "3")[0] == 1
    assert run(capsys, "search", "exhaustive", "--n", "4", "--cap", "2")[0] == 1
    assert run(capsys, "search", "local", "--n", "8", "--cap", "8",
               "--format", "csv")[0] == 1


# --- render ---


def test_render_writes_svg(tmp_path, capsys):
    path = gen(tmp_path, capsys, "boroczky", "--m", "4")
    dest = tmp_path / "fig.svg"
    code, out, _ = run(capsys, "render", str(path), "--out", str(dest))
    assert code == 0
    manifest = json.loads(out)
    assert manifest["result"] == {"path": str(dest), "points": 8, "lines": 11}
    assert dest.read_text().startswith("<svg ")


def test_render_requires_out(tmp_path, capsys):
    path = gen(tmp_path, capsys, "boroczky", "--m", "4")
    assert run(capsys, "render", str(path))[0] == 1


def test_render_refuses_non_real_input(tmp_path, capsys):
    path = gen(tmp_path, capsys, "fermat", "--m", "3")
    dest = tmp_path / "fig.svg"
    code, _, err = run(capsys, "render", str(path), "--out", str(dest))
    assert code == 1
    assert not dest.exists()


# --- top level ---


def test_no_subcommand_is_an_error(capsys):
    code, _, err = run(capsys)
    assert code == 1
    assert "subcommand" in err


def test_unknown_subcommand_is_an_error(capsys):
    assert run(capsys, "frobnicate")[0] == 1


def test_module_entry_point(tmp_path):
    path = tmp_path / "c.json"
    proc = subprocess.run(
        [sys.executable, "-m", "linespectra", "generate", "grid",
         "--a", "2", "--b", "2", "--out", str(path)],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["command"] == "generate"
    proc = subprocess.run(
        [sys.executable, "-m", "linespectra", "check", str(path)],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
