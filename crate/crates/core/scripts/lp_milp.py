#!/usr/bin/env python3
"""Solve a linear LP-format model written by `sipp emit` with scipy's MILP solver.

Usage: lp_milp.py MODEL.lp

Prints `objective: <value>`. Only the linear (basic, sorted) models are
supported; quadratic rows are rejected.

    sipp bench --n 10 --lp-roundtrip "python3 scripts/lp_milp.py"
"""

import re
import sys

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp

SECTIONS = {"minimize", "subject to", "bounds", "binaries", "binary", "end"}
TERM = re.compile(r"([+-])?\s*(\d+(?:\.\d+)?)?\s*([A-Za-z_][\w]*)")


def sections(text):
    current, out = None, {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("\\"):
            continue
        if line.lower() in SECTIONS:
            current = line.lower()
            out.setdefault(current, [])
            continue
        out[current].append(line)
    return out


def statements(lines):
    """Joins wrapped lines; a statement starts with `name:`."""
    joined = []
    for line in lines:
        if re.match(r"^[A-Za-z_]\w*:", line) or not joined:
            joined.append(line)
        else:
            joined[-1] += " " + line
    return joined


def linear(expr):
    if "[" in expr:
        raise SystemExit("quadratic rows are not supported")
    terms, pos = {}, 0
    expr = expr.strip()
    while pos < len(expr):
        m = TERM.match(expr, pos)
        if not m:
            raise SystemExit(f"cannot parse expression near: {expr[pos:]!r}")
        sign = -1.0 if m.group(1) == "-" else 1.0
        coef = float(m.group(2)) if m.group(2) else 1.0
        terms[m.group(3)] = terms.get(m.group(3), 0.0) + sign * coef
        pos = m.end()
        while pos < len(expr) and expr[pos] == " ":
            pos += 1
    return terms


def main(path):
    parts = sections(open(path, encoding="utf-8").read())
    index = {}

    def var(name):
        return index.setdefault(name, len(index))

    (objective,) = statements(parts["minimize"])
    obj = {var(k): v for k, v in linear(objective.split(":", 1)[1]).items()}

    rows = []
    for stmt in statements(parts.get("subject to", [])):
        name, body = stmt.split(":", 1)
        m = re.match(r"(.*?)(<=|>=|=)\s*(-?\d+(?:\.\d+)?)\s*$", body)
        if not m:
            raise SystemExit(f"cannot parse row {name}")
        coefs = {var(k): v for k, v in linear(m.group(1)).items()}
        rhs = float(m.group(3))
        lo, hi = {"<=": (-np.inf, rhs), ">=": (rhs, np.inf), "=": (rhs, rhs)}[m.group(2)]
        rows.append((coefs, lo, hi))

    bounds = {}
    for line in parts.get("bounds", []):
        lo, name, hi = re.match(r"(\S+)\s*<=\s*(\w+)\s*<=\s*(\S+)", line).groups()
        bounds[var(name)] = (float(lo), float(hi))

    binaries = set()
    for key in ("binaries", "binary"):
        for line in parts.get(key, []):
            binaries.update(var(name) for name in line.split())

    size = len(index)
    c = np.zeros(size)
    for i, v in obj.items():
        c[i] = v
    a = np.zeros((len(rows), size))
    lo = np.empty(len(rows))
    hi = np.empty(len(rows))
    for r, (coefs, l, h) in enumerate(rows):
        for i, v in coefs.items():
            a[r, i] = v
        lo[r], hi[r] = l, h

    lower = np.zeros(size)
    upper = np.full(size, np.inf)
    for i, (l, h) in bounds.items():
        lower[i], upper[i] = l, h
    integrality = np.zeros(size)
    for i in binaries:
        lower[i], upper[i], integrality[i] = 0, 1, 1

    res = milp(
        c,
        constraints=[LinearConstraint(a, lo, hi)] if rows else [],
        bounds=Bounds(lower, upper),
        integrality=integrality,
    )
    if not res.success:
        raise SystemExit(f"solver failed: {res.message}")
    print(f"objective: {res.fun:.6f}")


if __name__ == "__main__":
    if len(sys.argv) != 2:
        raise SystemExit(__doc__)
    main(sys.argv[1])
