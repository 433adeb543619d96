#!/usr/bin/env python3
"""Brute-force point counts for the two figure sweeps.

Independent of the C++ grid builder: no logarithms, no per-axis bounds.
Every (j, m) with |j|_inf <= LEVELS and |m|_inf <= RADIUS is tested against

    2^-(delta2(j) - delta1(j)) * exp(-b * sum_i |m_i| / 2^j_i) >= eps * (1 - 1e-12)

with delta1 = 0 and delta2 = (1 - theta) |j|_1 + theta |j|_inf.

Usage: figure_counts.py > tests/golden/figure_counts.json
"""
import json

import numpy as np

LEVELS = 12
RADIUS = 256
SLACK = 1e-12


def count(theta, b, eps):
    m = np.arange(-RADIUS, RADIUS + 1)
    total = 0
    levels = 0
    for j1 in range(LEVELS + 1):
        for j2 in range(LEVELS + 1):
            gap = (1 - theta) * (j1 + j2) + theta * max(j1, j2)
            r = np.abs(m)[:, None] / 2.0**j1 + np.abs(m)[None, :] / 2.0**j2
            keep = 2.0**-gap * np.exp(-b * r) >= eps * (1 - SLACK)
            n = int(keep.sum())
            if n == 0:
                continue
            if max(j1, j2) == LEVELS:
                raise SystemExit("level scan too small")
            if keep[0, :].any() or keep[-1, :].any() or keep[:, 0].any() or keep[:, -1].any():
                raise SystemExit("translation scan too small")
            total += n
            levels += 1
    return total, levels


def main():
    eps = 0.03
    fig1 = []
    for b in (4.0, 2.0, 1.0, 0.5):
        n, lv = count(0.75, b, eps)
        fig1.append({"b_w": b, "theta": 0.75, "epsilon": eps, "total_points": n, "levels": lv})
    fig2 = []
    for theta in (0.0, 0.25, 0.5, 0.75):
        n, lv = count(theta, 2.0, eps)
        fig2.append({"b_w": 2.0, "theta": theta, "epsilon": eps, "total_points": n, "levels": lv})
    out = {
        "derivation": "brute-force scan of the raw grid inequality, tools/oracles/figure_counts.py",
        "scan": {"max_level": LEVELS, "max_translation": RADIUS, "relative_slack": SLACK},
        "delta1": "zero",
        "delta2": "(1 - theta) |j|_1 + theta |j|_inf",
        "weight_sweep": fig1,
        "smoothness_sweep": fig2,
    }
    print(json.dumps(out, indent=1))


if __name__ == "__main__":
    main()
