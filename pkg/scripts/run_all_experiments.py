#!/usr/bin/env python3
"""Run the full experiment battery and collect the CSVs under out/.

Each block is one CLI invocation; a nonzero exit from any of them fails the
whole script, mirroring the per-command RESULT lines.
"""

import sys
from pathlib import Path

from chebquad.cli import main

OUT = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("out")

RUNS = [
    ["figure1", "--out", str(OUT)],
    ["figure1", "--s", "2.5", "--out", str(OUT / "s2.5")],
    ["nodes", "--family", "cc", "--n-min", "64", "--out", str(OUT)],
    ["nodes", "--family", "gauss", "--n-min", "64", "--out", str(OUT)],
    ["alias", "--family", "cc", "--n-min", "10", "--out", str(OUT / "alias_cc_n10.csv")],
    ["alias", "--family", "gauss", "--n-min", "200", "--out", str(OUT / "alias_gauss_n200.csv")],
    ["gauss-model", "--out", str(OUT / "gauss_model.csv")],
    ["remez", "--function", "abs_pow:s=1,xi=0.3", "--dump-reference", "--out", str(OUT)],
    ["ratio", "--s", "0.5", "--out", str(OUT / "ratio_s0.5.csv")],
    ["bounds", "--family", "cc", "--function", "abs_pow:s=1,xi=0"],
    ["bounds", "--family", "gauss", "--function", "quad_spline:xi=0.3"],
]


def run() -> int:
    for args in RUNS:
        print(f"\n$ chebquad {' '.join(args)}")
        code = main(args)
        if code != 0:
            print(f"command failed with exit code {code}", file=sys.stderr)
            return code
    print(f"\nall experiments finished; output under {OUT}/")
    return 0


if __name__ == "__main__":
    sys.exit(run())
