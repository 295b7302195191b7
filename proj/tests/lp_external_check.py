"""Solve emitted LP files with scipy's HiGHS and compare against the solver.

usage: lp_external_check.py <hvmdp executable> <scratch dir>
"""

import re
import subprocess
import sys
from pathlib import Path

import numpy as np
from scipy.optimize import linprog

TERM = re.compile(r"([+-])?\s*([0-9.eE+-]+)\s+(z_\d+_\d+)")


def parse_lp(text):
    objective, rows, rhs, section, current = {}, {}, {}, None, None
    for line in text.splitlines():
        if not line or line.startswith("\\"):
            continue
        if line in ("Minimize", "Subject To", "Bounds", "End"):
            section = line
            continue
        if section == "Bounds":
            continue
        body = line.strip()
        if ":" in body.split()[0]:
            current, body = body.split(":", 1)
            if section == "Subject To":
                rows[current] = {}
        target = objective if section == "Minimize" else rows[current]
        if "=" in body:
            body, value = body.split("=")
            rhs[current] = float(value)
        for sign, coef, var in TERM.findall(body):
            target[var] = target.get(var, 0.0) + (-1.0 if sign == "-" else 1.0) * float(coef)
    return objective, rows, rhs


def field(report, key):
    for line in report.splitlines():
        if line.startswith(key + ": "):
            return line[len(key) + 2:]
    raise KeyError(key)


def main():
    tool, scratch = sys.argv[1], Path(sys.argv[2])
    scratch.mkdir(parents=True, exist_ok=True)
    worst = 0.0
    for seed in range(1, 21):
        kind = "hv" if seed % 2 else "hvag"
        instance = scratch / f"instance_{seed}.json"
        gen = ["gen", "--states", str(2 + seed % 4), "--seed", str(seed), "-o", str(instance)]
        gen += ["--kind", "transient"] if kind == "hv" else ["--kind", "ht", "--alpha", "0.3"]
        subprocess.run([tool, *gen], check=True)

        lp_path = scratch / f"instance_{seed}.lp"
        extra = [] if kind == "hv" else ["--state", "0"]
        subprocess.run([tool, "emit-lp", str(instance), "--kind", kind, "-o", str(lp_path), *extra],
                       check=True, capture_output=True)
        objective, rows, rhs = parse_lp(lp_path.read_text())
        columns = sorted(objective)
        index = {c: i for i, c in enumerate(columns)}
        names = sorted(rows)
        a_eq = np.zeros((len(names), len(columns)))
        for r, name in enumerate(names):
            for var, coef in rows[name].items():
                a_eq[r, index[var]] = coef
        b_eq = np.array([rhs[n] for n in names])
        c = np.array([objective[v] for v in columns])
        res = linprog(c, A_eq=a_eq, b_eq=b_eq, bounds=(0, None), method="highs")
        if res.status != 0:
            print(f"seed {seed}: linprog failed: {res.message}")
            return 1

        command = "solve-total" if kind == "hv" else "solve-average"
        report = subprocess.run([tool, command, str(instance), "--method", "howard", *extra],
                                check=True, capture_output=True, text=True).stdout
        values = [float(v) for v in field(report, "discounted_values").strip("[]").split(",")]
        gap = abs(res.fun - sum(values))
        worst = max(worst, gap / max(1.0, abs(res.fun)))
        if gap > 1e-7 * max(1.0, abs(res.fun)):
            print(f"seed {seed} ({kind}): LP objective {res.fun!r} vs sum of values {sum(values)!r}")
            return 1
    print(f"20 LPs agree with the policy-iteration values, worst relative gap {worst:.3g}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
