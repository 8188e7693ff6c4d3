import json
import subprocess
import sys
from fractions import Fraction

import pytest

from qcong import cli
from qcong.families import FamilySpec
from qcong.sweep import (
    SweepConfig,
    build_config,
    default_workers,
    expand_ints,
    expand_tasks,
    parse_config_text,
    record_key,
    render_csv,
    render_jsonl,
    run_sweep,
    run_task,
)

# -- config parsing -----------------------------------------------------------


def test_parse_config_text_basics():
    text = """
    # grid for a quick look
    theorems = 1.1, lemmas
    n = 3..5
    d = 1, 2

    families = ones, delta:1
    """
    raw = parse_config_text(text)
    assert raw["theorems"] == ["1.1", "lemmas"]
    assert raw["n"] == ["3..5"]
    assert raw["families"] == ["ones", "delta:1"]


def test_parse_config_rejects_junk():
    with pytest.raises(ValueError):
        parse_config_text("just some words\n")
    with pytest.raises(ValueError):
        parse_config_text("n = 3\nn = 4\n")


def test_expand_ints():
    assert expand_ints(["3..5", "9"], "n") == (3, 4, 5, 9)
    assert expand_ints(["-2..1"], "r") == (-2, -1, 0, 1)
    with pytest.raises(ValueError):
        expand_ints(["5..3"], "n")
    with pytest.raises(ValueError):
        expand_ints(["ones"], "n")


def test_build_config_defaults_and_validation():
    cfg = build_config({"theorems": ["1.1"], "n": ["3", "5"]})
    assert cfg.n_values == (3, 5)
    assert cfg.d_values == (1,)
    assert cfg.r_values == (0,)
    assert cfg.families == (FamilySpec("ones"),)
    assert cfg.format == "jsonl"
    assert cfg.workers == 1

    with pytest.raises(ValueError):
        build_config({"n": ["3"]})
    with pytest.raises(ValueError):
        build_config({"theorems": ["1.3"], "n": ["3"]})
    with pytest.raises(ValueError):
        build_config({"theorems": ["1.1"], "n": ["3"], "volume": ["11"]})
    with pytest.raises(ValueError):
        build_config({"theorems": ["1.1"], "n": ["3"], "format": ["yaml"]})


def test_default_workers_env(monkeypatch):
    monkeypatch.delenv("QCONG_WORKERS", raising=False)
    assert default_workers() == 1
    monkeypatch.setenv("QCONG_WORKERS", "4")
    assert default_workers() == 4
    monkeypatch.setenv("QCONG_WORKERS", "zero")
    with pytest.raises(ValueError):
        default_workers()


def test_config_workers_beats_env(monkeypatch):
    monkeypatch.setenv("QCONG_WORKERS", "4")
    cfg = build_config({"theorems": ["1.1"], "n": ["3"], "workers": ["2"]})
    assert cfg.workers == 2
    cfg = build_config({"theorems": ["1.1"], "n": ["3"]})
    assert cfg.workers == 4


# -- task expansion and skip accounting --------------------------------------


def test_expand_tasks_counts_gcd_skips():
    cfg = SweepConfig(theorems=("1.1",), n_values=(4, 6), d_values=(2, 3), r_values=(0, 1))
    tasks, skipped = expand_tasks(cfg)
    # n=4: d=2 shares a factor (2 r-values x 1 family skipped), d=3 runs
    # n=6: both d values share a factor
    assert skipped == 2 + 2 + 2
    assert len(tasks) == 2
    assert all(t[0] == "thm1.1" for t in tasks)


def test_expand_tasks_rational_family_skips_under_1_1():
    fams = (FamilySpec("ones"), FamilySpec("sun_p_x"))
    cfg = SweepConfig(theorems=("1.1",), n_values=(3,), families=fams)
    tasks, skipped = expand_tasks(cfg)
    assert len(tasks) == 1 and skipped == 1
    cfg = SweepConfig(theorems=("1.2",), n_values=(3,), families=fams)
    tasks, skipped = expand_tasks(cfg)
    assert len(tasks) == 2 and skipped == 0


def test_expand_tasks_sun_p_needs_odd_coprime():
    cfg = SweepConfig(theorems=("sun_p",), n_values=(3, 4, 5), d_values=(1, 3))
    tasks, skipped = expand_tasks(cfg)
    kept = [(t[1][0], t[1][1]) for t in tasks]
    assert (3, 3) not in kept and (4, 1) not in kept
    assert (3, 1) in kept and (5, 3) in kept
    assert skipped == 3  # (3,3), (4,1), (4,3)


def test_expand_tasks_classical_skips_bad_p_and_alpha():
    cfg = SweepConfig(
        theorems=("classical",), n_values=(5, 6),
        alphas=(Fraction(1, 5), Fraction(2)),
        classical_seeds=3,
    )
    tasks, skipped = expand_tasks(cfg)
    # n=6 is not prime (2 alphas x 3 seeds), alpha=1/5 is not 5-integral (3 seeds)
    assert skipped == 6 + 3
    assert len(tasks) == 3


def test_expand_tasks_lemmas_and_even_sign():
    cfg = SweepConfig(theorems=("lemmas",), n_values=(4,), s_values=(0, 1))
    tasks, skipped = expand_tasks(cfg)
    kinds = sorted(t[0] for t in tasks)
    assert kinds.count("lemma-sn") == 3
    assert kinds.count("lemma-sn-minus1") == 3
    assert kinds.count("even-sign") == 1
    assert skipped == 6  # s=0 row


# -- record shape and rendering ----------------------------------------------


def test_run_task_record_shapes():
    rec = run_task(("thm1.1", (5, 2, 1, "ones")))
    assert rec["check"] == "thm1.1"
    assert rec["holds"] is True
    assert set(rec) >= {"n", "d", "r", "family", "a", "exponent", "sign", "branch"}
    assert "residual" not in rec
    assert "wall_time" not in rec

    rec = run_task(("lemma-sn", (5, 1, 2)))
    assert rec == {"check": "lemma-sn", "n": 5, "s": 1, "j": 2, "holds": True}

    rec = run_task(("classical", (5, "1/2", 0, 9)))
    assert rec == {"check": "classical", "p": 5, "alpha": "1/2", "seed": 0, "holds": True}


def test_render_jsonl_is_compact_and_sorted():
    recs = sorted(
        [run_task(("lemma-sn", (5, 1, j))) for j in (3, 1, 2)],
        key=record_key,
    )
    text = render_jsonl(recs)
    lines = text.strip().split("\n")
    assert [json.loads(line)["j"] for line in lines] == [1, 2, 3]
    assert " " not in lines[0]


def test_render_csv_has_fixed_header():
    recs = [run_task(("even-sign", (4,)))]
    text = render_csv(recs)
    head, row = text.strip().split("\n")
    assert head.startswith("check,n,p,d,r,a,s,j,alpha,seed,family,holds")
    assert row.startswith("even-sign,4,")
    assert ",true" in row


# -- determinism across worker counts ----------------------------------------


def test_sweep_output_independent_of_workers(tmp_path):
    raw = {
        "theorems": ["1.1", "lemmas"],
        "n": ["3..6"],
        "d": ["1", "5"],
        "r": ["0", "2"],
        "families": ["ones", "random_poly:3:2"],
    }
    out1 = tmp_path / "w1.jsonl"
    out2 = tmp_path / "w2.jsonl"
    cfg1 = build_config(dict(raw, workers=["1"], output=[str(out1)]))
    cfg2 = build_config(dict(raw, workers=["2"], output=[str(out2)]))
    s1 = run_sweep(cfg1)
    s2 = run_sweep(cfg2)
    assert out1.read_bytes() == out2.read_bytes()
    assert s1.failed == s2.failed == 0
    assert s1.total == s2.total


# -- command line -------------------------------------------------------------


def test_cli_cyclotomic(capsys):
    assert cli.main(["cyclotomic", "6"]) == 0
    assert capsys.readouterr().out.strip() == "1*q^0 + -1*q^1 + 1*q^2"


def test_cli_qbinom_and_qpoch(capsys):
    assert cli.main(["qbinom", "4", "2"]) == 0
    assert capsys.readouterr().out.strip() == "1*q^0 + 1*q^1 + 2*q^2 + 1*q^3 + 1*q^4"
    assert cli.main(["qbinom", "--base", "2", "--", "-1", "1"]) == 0
    assert capsys.readouterr().out.strip() == "-1*q^-2"
    assert cli.main(["qpoch", "1", "1", "1"]) == 0
    assert capsys.readouterr().out.strip() == "1*q^0 + -1*q^1"


def test_cli_transform(capsys):
    assert cli.main(["transform", "--kind", "hat", "--family", "ones", "--length", "3"]) == 0
    out = capsys.readouterr().out.strip().split("\n")
    assert out[0] == "0: 1*q^0"
    assert out[1] == "1: 1*q^0 + -1*q^1"


def test_cli_congruent_exit_codes(tmp_path, capsys):
    lhs = tmp_path / "lhs.txt"
    rhs = tmp_path / "rhs.txt"
    lhs.write_text("1*q^7\n")
    rhs.write_text("1*q^2\n")
    assert cli.main(["congruent", "--n", "5", "--m", "1", "--lhs", str(lhs), "--rhs", str(rhs)]) == 0
    assert "CONGRUENT" in capsys.readouterr().out

    rhs.write_text("1*q^3\n")
    assert cli.main(["congruent", "--n", "5", "--m", "1", "--lhs", str(lhs), "--rhs", str(rhs)]) == 1
    out = capsys.readouterr().out
    assert "NOT CONGRUENT" in out and "residual:" in out

    # denominator sharing a factor with the modulus is usage error, not False
    bad = tmp_path / "bad.txt"
    bad.write_text("1*q^0\n1*q^0 + 1*q^1 + 1*q^2 + 1*q^3 + 1*q^4\n")
    assert cli.main(["congruent", "--n", "5", "--m", "1", "--lhs", str(bad), "--rhs", str(rhs)]) == 2


def test_cli_congruent_rational_files(tmp_path, capsys):
    lhs = tmp_path / "lhs.txt"
    rhs = tmp_path / "rhs.txt"
    # (1 - q^6) / (1 - q) vs the q-integer [6] mod Phi_5^2
    lhs.write_text("# numerator then denominator\n1*q^0 + -1*q^6\n1*q^0 + -1*q^1\n")
    rhs.write_text("1*q^0 + 1*q^1 + 1*q^2 + 1*q^3 + 1*q^4 + 1*q^5\n")
    assert cli.main(["congruent", "--n", "5", "--m", "2", "--lhs", str(lhs), "--rhs", str(rhs)]) == 0


def test_cli_verify_pass_and_formats(capsys):
    assert cli.main(["verify", "thm1.1", "--n", "6", "--d", "5", "--r", "2",
                     "--family", "delta:1"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("PASS thm1.1 n=6 d=5 r=2 family=delta:1 ")
    assert "branch=even" in out and "a=2" in out and "exponent=21" in out and "sign=+1" in out

    assert cli.main(["verify", "thm2.1", "--n", "5", "--a", "2", "--s", "1",
                     "--family", "ones"]) == 0
    assert cli.main(["verify", "lemma-sn", "--n", "5", "--s", "1", "--j", "2"]) == 0
    assert cli.main(["verify", "s0", "--n", "5", "--a", "2"]) == 0
    assert cli.main(["verify", "classical", "--p", "7", "--alpha", "5/2"]) == 0
    capsys.readouterr()


def test_cli_verify_missing_args_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "thm1.1", "--n", "5"])
    assert exc.value.code == 2


def test_cli_verify_invalid_cell_reports_error(capsys):
    assert cli.main(["verify", "thm1.1", "--n", "6", "--d", "3", "--r", "1"]) == 2
    assert "error:" in capsys.readouterr().err


def test_cli_sweep_with_config_and_overrides(tmp_path, capsys):
    cfg = tmp_path / "grid.cfg"
    cfg.write_text("theorems = lemmas\nn = 3..5\ns = 1\n")
    out = tmp_path / "records.jsonl"
    code = cli.main(["sweep", "--config", str(cfg), "--n", "3..4", "--output", str(out)])
    assert code == 0
    err = capsys.readouterr().err
    assert "failed=0" in err
    lines = out.read_text().strip().split("\n")
    recs = [json.loads(line) for line in lines]
    assert {r["n"] for r in recs} == {3, 4}
    assert recs == sorted(recs, key=record_key)


def test_cli_sweep_csv_to_stdout(capsys):
    code = cli.main(["sweep", "--theorems", "lemmas", "--n", "3", "--s", "1",
                     "--format", "csv"])
    assert code == 0
    out = capsys.readouterr().out
    assert out.startswith("check,n,p,d,r,")


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "qcong.cli", "cyclotomic", "7"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1*q^0 + 1*q^1 + 1*q^2 + 1*q^3 + 1*q^4 + 1*q^5 + 1*q^6"
