#!/usr/bin/env python3
"""Run every amix subcommand and validate its JSON report against docs/schemas."""

import json
import math
import subprocess
import sys
from pathlib import Path

import jsonschema

BERN = '{"type":"bernoulli","p":0.4}'
GAUSS = '{"type":"gaussian","mu":1,"sigma2":0.5}'
C4_PI4 = '{"type":"atoms","atoms":[[0.7853981633974483,1.0]]}'

# (schema, argv, expected exit code)
CASES = [
    ("spectrum", ["spectrum", "--graph", "path:4"], 0),
    ("spectrum", ["spectrum", "--graph", "product:(complete:2)x(path:3)"], 0),
    ("amm", ["amm", "--graph", "path:3", "--dist", '{"type":"uniform_real_line"}'], 0),
    ("amm", ["amm", "--graph", "cycle:5", "--dist", GAUSS], 0),
    ("mixing", ["mixing", "--graph", "complete:3", "--time", "0.6981317007977318"], 0),
    ("check-feasible", ["check-feasible", "--graph", "complete:4"], 0),
    ("check-feasible", ["check-feasible", "--graph", "complete:5"], 1),
    ("solve-uniform", ["solve-uniform", "--graph", "path:3"], 0),
    ("solve-uniform", ["solve-uniform", "--graph", "path:4", "--family", "cosine_product"], 0),
    ("solve-uniform", ["solve-uniform", "--graph", "complete:5"], 1),
    ("verify-uniform", ["verify-uniform", "--graph", "cycle:4", "--dist", C4_PI4], 0),
    ("verify-uniform", ["verify-uniform", "--graph", "path:3", "--dist", BERN], 1),
    ("monte-carlo", ["monte-carlo", "--graph", "complete:3", "--dist", BERN, "--count", "20000", "--seed", "3"], 0),
    ("cartesian-check", ["cartesian-check", "--graph", "complete:3", "--graph2", "path:3", "--dist", BERN], 0),
    ("cartesian-check", ["cartesian-check", "--graph", "complete:2", "--graph2", "path:3", "--dist", GAUSS,
                         "--count", "20000"], 0),
    ("avg-state", ["avg-state", "--graph", "path:3", "--dist", GAUSS, "--vertex", "1"], 0),
    ("gram", ["gram", "--graph", "path:3", "--dist1", BERN, "--dist2", GAUSS], 0),
    ("choi-check", ["choi-check", "--graph", "path:3", "--dist", GAUSS], 0),
    ("paper-suite", ["--format", "json", "paper-suite"], 0),
]

INPUT_ERRORS = [
    ["amm", "--graph", "wheel:5"],
    ["amm", "--graph", "path:3", "--dist", "{bad"],
    ["avg-state", "--graph", "path:3", "--dist", BERN, "--vertex", "7"],
    ["verify-uniform", "--graph", "path:3"],
    ["no-such-command"],
]


def run(binary, argv):
    return subprocess.run([binary, *argv], capture_output=True, text=True, timeout=300)


def main():
    binary, schema_dir = sys.argv[1], Path(sys.argv[2])
    schemas = {p.name.removesuffix(".schema.json"): json.loads(p.read_text())
               for p in schema_dir.glob("*.schema.json")}
    failures = []

    for name, argv, expected in CASES:
        label = " ".join(argv)
        proc = run(binary, argv)
        if proc.returncode != expected:
            failures.append(f"{label}: exit {proc.returncode}, expected {expected}: {proc.stderr.strip()}")
            continue
        try:
            report = json.loads(proc.stdout)
            jsonschema.validate(report, schemas[name])
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            failures.append(f"{label}: {str(e).splitlines()[0]}")
            continue
        if run(binary, argv).stdout != proc.stdout:
            failures.append(f"{label}: output differs between runs")
        print(f"ok   {label}")

    for argv in INPUT_ERRORS:
        proc = run(binary, argv)
        if proc.returncode != 2 or not proc.stderr.strip():
            failures.append(f"{' '.join(argv)}: expected exit 2 with a message, got {proc.returncode}")
        else:
            print(f"ok   {' '.join(argv)} (exit 2)")

    # The P3 classical average from the command line.
    report = json.loads(run(binary, CASES[2][1]).stdout)
    expected = [[3, 2, 3], [2, 4, 2], [3, 2, 3]]
    if any(not math.isclose(report["matrix"]["data"][i][j], expected[i][j] / 8, abs_tol=1e-12)
           for i in range(3) for j in range(3)):
        failures.append("amm path:3 does not match (1/8)[[3,2,3],[2,4,2],[3,2,3]]")

    csv = run(binary, ["--format", "csv", "amm", "--graph", "path:3"]).stdout.splitlines()
    if csv[0] != "i,j,value" or len(csv) != 10:
        failures.append("amm csv output has the wrong shape")

    for f in failures:
        print(f"FAIL {f}")
    print(f"{len(failures)} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
