"""Exit criteria. Each test records a PASS/FAIL line that is echoed in the
"acceptance criteria" section at the end of the pytest run."""

import math
import os
import random
import subprocess
import sys
import time
from fractions import Fraction as F

import pytest

from conftest import ACCEPTANCE
from ktcolor.clique import omega
from ktcolor.colorers import offline_optimal, run
from ktcolor.generators import gen_random_general, gen_random_unit, gen_theorem2
from ktcolor.verify import check, check_level2_matching, chromatic_brute

TIGHT_XS = range(3, 41)
UNIT_COUNT = 1000
GENERAL_COUNT = 500
SMALL_COUNT = 200


def record(key, ok, detail):
    ACCEPTANCE[key] = (ok, detail)
    assert ok, detail


def unit_workload():
    """(seed, n, span, denominator) for the random unit instances; n up to 2000."""
    rng = random.Random(20261018)
    for k in range(UNIT_COUNT):
        n = 2000 if k % 50 == 0 else int(round(2 ** rng.uniform(1, math.log2(2000))))
        density = F(rng.uniform(0.3, 40)).limit_denominator(10)
        span = max(F(1), n / density)
        denominator = rng.choice([1, 2, 3, 6, 10, 1000, 1000, 1000])
        yield k, n, span, denominator


def general_workload():
    rng = random.Random(1981)
    for k in range(GENERAL_COUNT):
        n = int(round(2 ** rng.uniform(1, 9.5)))
        max_len = F(rng.randint(1, 40), 4)
        span = max(F(1), n * max_len / rng.randint(1, 30))
        yield k, n, span, max_len, rng.choice([1, 2, 3, 1000])


@pytest.fixture(scope="module")
def unit_sweep():
    """Run KT and First-Fit on every random unit instance once; keep only summaries."""
    rows = []
    for seed, n, span, denominator in unit_workload():
        inst = gen_random_unit(n, seed, span, denominator)
        kt_result = run("kt", inst)
        kt = check(inst, kt_result)
        ff = check(inst, run("first_fit", inst))
        rows.append({
            "seed": seed, "n": n, "omega": kt.omega,
            "kt_colors": kt.distinct_colors, "kt_proper": kt.proper,
            "kt_bound_ok": kt.bounds["kt_unit_3w-3"]["satisfied"],
            "level2_matching": check_level2_matching(inst, kt_result),
            "level2_colors": kt.per_level_palette_sizes.get(2, 0),
            "ff_colors": ff.distinct_colors, "ff_proper": ff.proper,
        })
    return rows


def test_c1_tightness():
    start = time.perf_counter()
    bad = []
    for x in TIGHT_XS:
        inst = gen_theorem2(x)
        result = run("kt", inst)
        expected = {1: 1, 2: 2, **{level: 3 for level in range(3, x + 1)}}
        w = omega(inst).size
        if w != x or result.distinct_colors != 3 * x - 3 or result.palette_sizes() != expected:
            bad.append((x, w, result.distinct_colors))
    elapsed = time.perf_counter() - start
    record("C1 tightness", not bad and elapsed < 10,
           f"x=3..40: omega=x, colors=3x-3, palettes 1,2,3..3 "
           f"(failures {bad}); {elapsed:.2f}s (limit 10s)")


def test_c2_unit_upper_bound(unit_sweep):
    bad = [r["seed"] for r in unit_sweep if not (r["kt_proper"] and r["kt_bound_ok"])]
    max_n = max(r["n"] for r in unit_sweep)
    max_w = max(r["omega"] for r in unit_sweep)
    tight = sum(r["kt_colors"] == max(1, 3 * r["omega"] - 3) for r in unit_sweep)
    record("C2 unit bound 3w-3", len(unit_sweep) >= 1000 and max_n == 2000 and not bad,
           f"{len(unit_sweep)} instances, n<={max_n}, omega<={max_w}, "
           f"{tight} at the bound, failing seeds {bad}")


def test_c3_general_bound():
    bad = []
    count = 0
    max_w = 0
    for seed, n, span, max_len, denominator in general_workload():
        inst = gen_random_general(n, seed, span, max_len, denominator)
        report = check(inst, run("kt", inst))
        count += 1
        max_w = max(max_w, report.omega)
        sizes = report.per_level_palette_sizes
        palettes_ok = sizes.get(1, 0) <= 1 and all(s <= 3 for s in sizes.values())
        colors_ok = report.distinct_colors <= max(1, 3 * report.omega - 2)
        if not (report.proper and palettes_ok and colors_ok):
            bad.append(seed)
    record("C3 general bound 3w-2", count >= 500 and not bad,
           f"{count} instances, omega<={max_w}, failing seeds {bad}")


def test_c4_level2_matching(unit_sweep):
    bad = [r["seed"] for r in unit_sweep
           if not r["level2_matching"] or r["level2_colors"] > 2]
    for x in TIGHT_XS:
        inst = gen_theorem2(x)
        result = run("kt", inst)
        if not check_level2_matching(inst, result) or result.palette_sizes()[2] > 2:
            bad.append(f"tight x={x}")
    record("C4 level-2 matching", not bad,
           f"{len(unit_sweep)} random + {len(TIGHT_XS)} tight unit instances, failures {bad}")


def test_c5_golden_trace():
    inst = gen_theorem2(3)
    result = run("kt", inst)
    a = result.assignments
    phase_a = [v.level for v in a[:5]]
    level3 = [(inst[i].left, a[i].color) for i in range(len(inst)) if a[i].level == 3]
    phase_c_level2 = [a[i].color for i in range(9, 13) if a[i].level == 2]
    ok = (len(inst) == 13
          and phase_a == [1, 2, 1, 2, 1]
          and level3 == [(F(1, 3), 1), (F(1), 2), (F(7, 3), 1), (F(5, 3), 3)]
          and phase_c_level2 == [1, 2]
          and result.distinct_colors == 6)
    record("C5 x=3 golden trace", ok,
           f"phase A levels {phase_a}, level-3 {[(str(l), c) for l, c in level3]}, "
           f"phase C level-2 {phase_c_level2}, colors {result.distinct_colors}")


def test_c6_oracle_agreement():
    rng = random.Random(6)
    bad = []
    for k in range(SMALL_COUNT):
        n = rng.randint(0, 12)
        if k % 2:
            inst = gen_random_unit(n, k, span=rng.randint(1, 8), denominator=rng.choice([1, 2, 4]))
        else:
            inst = gen_random_general(n, k, span=rng.randint(1, 8), max_len=rng.randint(1, 4),
                                      denominator=rng.choice([1, 2, 4]))
        values = (chromatic_brute(inst), omega(inst).size, offline_optimal(inst).distinct_colors)
        if len(set(values)) != 1:
            bad.append((k, values))
    record("C6 oracle agreement", not bad,
           f"{SMALL_COUNT} instances n<=12: chromatic = omega = offline colors, failures {bad}")


def test_c7_first_fit_bound(unit_sweep):
    bad = [r["seed"] for r in unit_sweep
           if not r["ff_proper"] or r["ff_colors"] > 2 * r["omega"] - 1]
    worst = max(r["ff_colors"] - (2 * r["omega"] - 1) for r in unit_sweep)
    record("C7 First-Fit 2w-1", not bad,
           f"{len(unit_sweep)} unit instances, max(ff - (2w-1)) = {worst}, failing seeds {bad}")


PIPELINE = [
    ["gen", "theorem2", "--x", "5", "-o", "t.jsonl"],
    ["gen", "random-unit", "--n", "400", "--seed", "7", "--span", "40", "-o", "u.jsonl"],
    ["gen", "random-general", "--n", "300", "--seed", "3", "--span", "50",
     "--max-len", "7/2", "-o", "g.jsonl"],
    ["run", "kt", "-i", "t.jsonl", "-o", "t_kt.json", "--trace", "t_trace.jsonl"],
    ["run", "ff", "-i", "u.jsonl", "-o", "u_ff.json"],
    ["run", "kt", "-i", "u.jsonl", "-o", "u_kt.json"],
    ["run", "opt", "-i", "g.jsonl", "-o", "g_opt.json"],
    ["run", "kt", "-i", "g.jsonl", "-o", "g_kt.json"],
    ["verify", "-i", "t.jsonl", "-r", "t_kt.json"],
    ["verify", "-i", "u.jsonl", "-r", "u_kt.json"],
    ["verify", "-i", "g.jsonl", "-r", "g_kt.json"],
    ["experiment", "--x-range", "3:12", "-o", "e.csv"],
]


def _pipeline(workdir, hashseed):
    env = dict(os.environ, PYTHONHASHSEED=str(hashseed))
    for i, argv in enumerate(PIPELINE):
        proc = subprocess.run([sys.executable, "-m", "ktcolor", *argv], cwd=workdir, env=env,
                              capture_output=True)
        assert proc.returncode == 0, proc.stderr
        (workdir / f"stdout_{i}.txt").write_bytes(proc.stdout)
    return {p.name: p.read_bytes() for p in sorted(workdir.iterdir())}


def test_c8_determinism(tmp_path):
    first, second = tmp_path / "a", tmp_path / "b"
    first.mkdir()
    second.mkdir()
    a = _pipeline(first, 1)
    b = _pipeline(second, 2)
    differing = sorted(name for name in a if a[name] != b.get(name))
    record("C8 determinism", a.keys() == b.keys() and not differing,
           f"{len(a)} files (instances, results, trace, reports, CSV) byte-identical; "
           f"differing {differing}")
