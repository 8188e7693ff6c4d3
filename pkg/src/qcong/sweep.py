"""Grid sweeps over theorem checks with byte-deterministic reports.

A sweep expands its config into independent check tasks, runs them (in a
process pool when workers > 1), sorts the records by a fixed key, and
renders them to JSON-lines or CSV.  Records never contain timing, so the
emitted file depends only on the config, not on the worker count or
machine load.  Invalid grid cells (gcd(n, d) > 1, even n where a statement
needs odd, non-p-integral alpha) are counted as skipped, not errored.

Config files are flat ``key = value`` lines; '#' starts a comment.  Values
are comma-separated atoms, each an integer, a fraction, an inclusive range
``lo..hi``, or a token such as a family label.  Every key can be overridden
by the matching command-line flag.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import re
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from multiprocessing import get_context
from pathlib import Path

from .families import DEFAULT_COEFF_BOUND, FamilySpec, random_int_sequence
from .theorems import (
    AlphaParams,
    SymParams,
    check_classical_sun,
    check_even_sign_fact,
    check_guo_zeng,
    check_lemma_sn_binom,
    check_lemma_sn_minus1,
    check_sun_p_analogue,
    check_thm_1_1,
    check_thm_1_2,
    check_thm_2_1,
)
from .transforms import RATIONAL

THEOREM_CHOICES = ("1.1", "1.2", "2.1", "guo_zeng", "sun_p", "lemmas", "classical")
WORKERS_ENV = "QCONG_WORKERS"

DEFAULT_ALPHAS = (Fraction(2), Fraction(1, 2), Fraction(-1, 3), Fraction(5, 2))

_RANGE_RE = re.compile(r"^(-?\d+)\.\.(-?\d+)$")


def default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw is None or raw == "":
        return 1
    try:
        workers = int(raw)
    except ValueError:
        raise ValueError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None
    if workers < 1:
        raise ValueError(f"{WORKERS_ENV} must be at least 1")
    return workers


@dataclass
class SweepConfig:
    theorems: tuple[str, ...]
    n_values: tuple[int, ...]
    d_values: tuple[int, ...] = (1,)
    r_values: tuple[int, ...] = (0,)
    s_values: tuple[int, ...] = (1,)
    a_values: "tuple[int, ...] | None" = None  # None = all residues 0..n-1
    families: tuple[FamilySpec, ...] = (FamilySpec("ones"),)
    alphas: tuple[Fraction, ...] = DEFAULT_ALPHAS
    classical_seeds: int = 10
    classical_bound: int = DEFAULT_COEFF_BOUND
    workers: int = 1
    output: "str | None" = None
    format: str = "jsonl"


@dataclass
class SweepSummary:
    total: int
    passed: int
    failed: int
    skipped: int
    wall_time: float


def split_atoms(value: str) -> list[str]:
    return [a.strip() for a in value.split(",") if a.strip()]


def parse_config_text(text: str) -> dict[str, list[str]]:
    data: dict[str, list[str]] = {}
    for idx, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"config line {idx}: expected 'key = value'")
        key, _, value = line.partition("=")
        key = key.strip()
        if key in data:
            raise ValueError(f"config line {idx}: duplicate key {key!r}")
        data[key] = split_atoms(value)
    return data


def expand_ints(atoms: list[str], key: str) -> tuple[int, ...]:
    out: list[int] = []
    for atom in atoms:
        m = _RANGE_RE.match(atom)
        if m:
            lo, hi = int(m.group(1)), int(m.group(2))
            if lo > hi:
                raise ValueError(f"{key}: empty range {atom!r}")
            out.extend(range(lo, hi + 1))
        else:
            try:
                out.append(int(atom))
            except ValueError:
                raise ValueError(f"{key}: expected integer or range, got {atom!r}") from None
    return tuple(out)


_CONFIG_KEYS = {
    "theorems", "n", "d", "r", "s", "a", "families", "alphas",
    "classical_seeds", "classical_bound", "workers", "output", "format",
}


def build_config(raw: dict[str, list[str]]) -> SweepConfig:
    unknown = set(raw) - _CONFIG_KEYS
    if unknown:
        raise ValueError(f"unknown config keys: {', '.join(sorted(unknown))}")

    def single(key: str) -> "str | None":
        atoms = raw.get(key)
        if atoms is None:
            return None
        if len(atoms) != 1:
            raise ValueError(f"{key} takes a single value")
        return atoms[0]

    theorems = tuple(raw.get("theorems", []))
    if not theorems:
        raise ValueError("config needs a 'theorems' key")
    for t in theorems:
        if t not in THEOREM_CHOICES:
            raise ValueError(f"unknown theorem {t!r}; choices: {', '.join(THEOREM_CHOICES)}")
    if "n" not in raw:
        raise ValueError("config needs an 'n' key")

    cfg = SweepConfig(theorems=theorems, n_values=expand_ints(raw["n"], "n"))
    if "d" in raw:
        cfg.d_values = expand_ints(raw["d"], "d")
    if "r" in raw:
        cfg.r_values = expand_ints(raw["r"], "r")
    if "s" in raw:
        cfg.s_values = expand_ints(raw["s"], "s")
    if "a" in raw:
        cfg.a_values = expand_ints(raw["a"], "a")
    if "families" in raw:
        cfg.families = tuple(FamilySpec.parse(a) for a in raw["families"])
    if "alphas" in raw:
        cfg.alphas = tuple(Fraction(a) for a in raw["alphas"])
    seeds = single("classical_seeds")
    if seeds is not None:
        cfg.classical_seeds = int(seeds)
        if cfg.classical_seeds < 1:
            raise ValueError("classical_seeds must be at least 1")
    bound = single("classical_bound")
    if bound is not None:
        cfg.classical_bound = int(bound)
        if cfg.classical_bound < 1:
            raise ValueError("classical_bound must be at least 1")
    workers = single("workers")
    cfg.workers = int(workers) if workers is not None else default_workers()
    if cfg.workers < 1:
        raise ValueError("workers must be at least 1")
    output = single("output")
    if output is not None:
        cfg.output = output
    fmt = single("format")
    if fmt is not None:
        if fmt not in ("jsonl", "csv"):
            raise ValueError(f"format must be jsonl or csv, got {fmt!r}")
        cfg.format = fmt
    return cfg


def load_config(path: "str | Path", overrides: "dict[str, str] | None" = None) -> SweepConfig:
    raw = parse_config_text(Path(path).read_text())
    for key, value in (overrides or {}).items():
        raw[key] = split_atoms(value)
    return build_config(raw)


# -- task expansion ---------------------------------------------------------


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


def expand_tasks(cfg: SweepConfig) -> tuple[list[tuple], int]:
    """All runnable (check_id, args) tasks plus the count of skipped cells."""
    tasks: list[tuple] = []
    skipped = 0
    for thm in cfg.theorems:
        if thm in ("1.1", "1.2"):
            check_id = "thm1.1" if thm == "1.1" else "thm1.2"
            for n in cfg.n_values:
                for d in cfg.d_values:
                    if math.gcd(n, d) != 1:
                        skipped += len(cfg.r_values) * len(cfg.families)
                        continue
                    for r in cfg.r_values:
                        for fam in cfg.families:
                            if thm == "1.1" and fam.kind == RATIONAL:
                                skipped += 1
                                continue
                            tasks.append((check_id, (n, d, r, fam.label())))
        elif thm == "2.1":
            for n in cfg.n_values:
                a_values = cfg.a_values if cfg.a_values is not None else tuple(range(n))
                for a in a_values:
                    if not 0 <= a < n:
                        skipped += len(cfg.s_values) * len(cfg.families)
                        continue
                    for s in cfg.s_values:
                        for fam in cfg.families:
                            if fam.kind == RATIONAL:
                                skipped += 1
                                continue
                            tasks.append(("thm2.1", (n, a, s, fam.label())))
        elif thm == "guo_zeng":
            for n in cfg.n_values:
                for d in cfg.d_values:
                    if math.gcd(n, d) != 1:
                        skipped += len(cfg.r_values)
                        continue
                    for r in cfg.r_values:
                        tasks.append(("guo_zeng", (n, d, r)))
        elif thm == "sun_p":
            for n in cfg.n_values:
                for d in cfg.d_values:
                    valid = n % 2 == 1 and n >= 3 and math.gcd(n, d) == 1
                    if not valid:
                        skipped += len(cfg.r_values)
                        continue
                    for r in cfg.r_values:
                        tasks.append(("sun_p", (n, d, r)))
        elif thm == "lemmas":
            for n in cfg.n_values:
                for s in cfg.s_values:
                    if s == 0:
                        skipped += 2 * (n - 1)
                        continue
                    for j in range(1, n):
                        tasks.append(("lemma-sn", (n, s, j)))
                        tasks.append(("lemma-sn-minus1", (n, s, j)))
                if n % 2 == 0:
                    tasks.append(("even-sign", (n,)))
        elif thm == "classical":
            for p in cfg.n_values:
                if not _is_odd_prime(p):
                    skipped += len(cfg.alphas) * cfg.classical_seeds
                    continue
                for alpha in cfg.alphas:
                    if alpha.denominator % p == 0:
                        skipped += cfg.classical_seeds
                        continue
                    for seed in range(cfg.classical_seeds):
                        tasks.append(("classical", (p, str(alpha), seed, cfg.classical_bound)))
        else:  # unreachable, build_config validated
            raise ValueError(f"unknown theorem {thm!r}")
    return tasks, skipped


# -- task execution ---------------------------------------------------------


def _record_from_report(rep) -> dict:
    rec: dict = {"check": rep.check}
    rec.update(rep.params)
    rec["holds"] = rep.holds
    if rep.a is not None:
        rec["a"] = rep.a
    if rep.exponent is not None:
        rec["exponent"] = rep.exponent
    if rep.sign is not None:
        rec["sign"] = rep.sign
    if rep.branch is not None:
        rec["branch"] = rep.branch
    if rep.residual is not None:
        rec["residual"] = rep.residual
    return rec


def run_task(task: tuple) -> dict:
    kind, args = task
    if kind == "thm1.1":
        n, d, r, fam = args
        return _record_from_report(check_thm_1_1(SymParams.create(n, d, r), fam))
    if kind == "thm1.2":
        n, d, r, fam = args
        return _record_from_report(check_thm_1_2(SymParams.create(n, d, r), fam))
    if kind == "thm2.1":
        n, a, s, fam = args
        return _record_from_report(check_thm_2_1(AlphaParams.create(n, a, s), fam))
    if kind == "guo_zeng":
        n, d, r = args
        return _record_from_report(check_guo_zeng(SymParams.create(n, d, r)))
    if kind == "sun_p":
        n, d, r = args
        return _record_from_report(check_sun_p_analogue(SymParams.create(n, d, r)))
    if kind == "lemma-sn":
        n, s, j = args
        return {"check": "lemma-sn", "n": n, "s": s, "j": j,
                "holds": check_lemma_sn_binom(n, s, j)}
    if kind == "lemma-sn-minus1":
        n, s, j = args
        return {"check": "lemma-sn-minus1", "n": n, "s": s, "j": j,
                "holds": check_lemma_sn_minus1(n, s, j)}
    if kind == "even-sign":
        (n,) = args
        return {"check": "even-sign", "n": n, "holds": check_even_sign_fact(n)}
    if kind == "classical":
        p, alpha, seed, bound = args
        fs = random_int_sequence(seed, p, bound)
        return {"check": "classical", "p": p, "alpha": alpha, "seed": seed,
                "holds": check_classical_sun(p, Fraction(alpha), fs)}
    raise ValueError(f"unknown task kind {kind!r}")


_KEY_FIELDS = {
    "thm1.1": ("n", "d", "r", "family"),
    "thm1.2": ("n", "d", "r", "family"),
    "thm2.1": ("n", "a", "s", "family"),
    "guo_zeng": ("n", "d", "r", "family"),
    "sun_p": ("n", "d", "r", "family"),
    "lemma-sn": ("n", "s", "j"),
    "lemma-sn-minus1": ("n", "s", "j"),
    "even-sign": ("n",),
    "classical": ("p", "alpha", "seed"),
}


def record_key(rec: dict) -> tuple:
    return (rec["check"],) + tuple(rec[f] for f in _KEY_FIELDS[rec["check"]])


# -- rendering --------------------------------------------------------------

CSV_COLUMNS = (
    "check", "n", "p", "d", "r", "a", "s", "j", "alpha", "seed",
    "family", "holds", "exponent", "sign", "branch", "residual",
)


def render_jsonl(records: list[dict]) -> str:
    return "".join(json.dumps(rec, separators=(",", ":")) + "\n" for rec in records)


def render_csv(records: list[dict]) -> str:
    def cell(rec: dict, col: str) -> str:
        v = rec.get(col)
        if v is None:
            return ""
        if isinstance(v, bool):
            return "true" if v else "false"
        return str(v)

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        writer.writerow([cell(rec, col) for col in CSV_COLUMNS])
    return buf.getvalue()


def run_sweep(cfg: SweepConfig) -> SweepSummary:
    started = time.perf_counter()
    tasks, skipped = expand_tasks(cfg)
    if cfg.workers > 1 and len(tasks) > 1:
        chunk = max(1, len(tasks) // (cfg.workers * 8))
        with get_context().Pool(cfg.workers) as pool:
            records = pool.map(run_task, tasks, chunksize=chunk)
    else:
        records = [run_task(t) for t in tasks]
    records.sort(key=record_key)
    text = render_csv(records) if cfg.format == "csv" else render_jsonl(records)
    if cfg.output:
        Path(cfg.output).write_text(text)
    else:
        sys.stdout.write(text)
    failed = sum(1 for rec in records if not rec["holds"])
    return SweepSummary(
        total=len(records),
        passed=len(records) - failed,
        failed=failed,
        skipped=skipped,
        wall_time=time.perf_counter() - started,
    )


def format_summary(s: SweepSummary) -> str:
    return (f"total={s.total} passed={s.passed} failed={s.failed} "
            f"skipped={s.skipped} wall={s.wall_time:.2f}s")
