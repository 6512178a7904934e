#!/usr/bin/env python3
"""Render the error-decay comparison from the figure1 CSVs.

Usage: python scripts/plot_figure1.py [csv_dir] [output.png]
Expects figure1_s0.5.csv and figure1_s1.5.csv as written by
``chebquad figure1`` (run it first, or pass the directory).
"""

import csv
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def load(path: Path):
    with path.open() as handle:
        rows = list(csv.DictReader(handle))
    cols = {key: [float(r[key]) for r in rows] for key in rows[0]}
    return cols


def main() -> int:
    src = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("out")
    dest = Path(sys.argv[2]) if len(sys.argv) > 2 else src / "figure1.png"
    fig, axes = plt.subplots(1, 2, figsize=(10, 4.2))
    for ax, s in zip(axes, (0.5, 1.5)):
        data = load(src / f"figure1_s{s:g}.csv")
        ax.loglog(data["n"], data["E_gauss"], "k.", ms=7, label="Gauss")
        ax.loglog(data["n"], data["E_cc"], "o", mfc="none", mec="k", ms=6, label="Clenshaw-Curtis")
        ax.loglog(data["n"], data["fit_line"], "k-", lw=1, label=rf"$c\,n^{{-{s + 1:g}}}$")
        ax.set_title(rf"$|x-0.3|^{{{s:g}}}$")
        ax.set_xlabel("n")
        ax.set_ylabel("|error|")
        ax.legend()
        ax.grid(True, which="both", alpha=0.25)
    fig.tight_layout()
    fig.savefig(dest, dpi=150)
    print(f"wrote {dest}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
