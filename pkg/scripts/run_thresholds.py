#!/usr/bin/env python3
"""Threshold estimate from a distance-4 vs distance-8 sweep.

Runs the (code, epsilon) grid described by a JSON config (see
threshold_config.json next to this script), writes the per-point CSV, and
prints the estimated crossing for each variant.  Equivalent to
`irmwpm sweep --config ...`; kept as a script so the grid and estimates are
easy to tweak programmatically.
"""

import argparse
import pathlib
import sys

from irmwpm import build_hole_with_distance, build_mixed_boundary
from irmwpm.cli import parse_config
from irmwpm.sim import estimate_threshold, run_trials, write_csv

HERE = pathlib.Path(__file__).resolve().parent
BUILDERS = {"mixed": build_mixed_boundary, "hole": build_hole_with_distance}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--config", default=str(HERE / "threshold_config.json"))
    ap.add_argument("--out", default="thresholds.csv")
    args = ap.parse_args(argv)

    spec = parse_config(pathlib.Path(args.config).read_text(encoding="utf-8"))
    codes = [BUILDERS[kind](d) for kind, d in spec.codes]
    table = []
    for code in codes:
        for eps in spec.epsilons:
            print(f"running {code.kind.value} d={code.d} eps={eps} "
                  f"({spec.trials} trials)...", file=sys.stderr)
            table.append(run_trials(code, eps, spec.trials, spec.seed,
                                    spec.variants))

    with open(args.out, "w", encoding="utf-8", newline="") as f:
        write_csv(f, table)
    print(f"wrote {args.out}", file=sys.stderr)

    for variant in spec.variants:
        est = estimate_threshold(table, variant)
        if est is None:
            print(f"{variant.value}: no crossing found")
        else:
            print(f"{variant.value}: threshold ~ {est.value:.4f} "
                  f"(spread {est.spread:.4f} over {len(est.crossings)} "
                  f"crossing(s))")


if __name__ == "__main__":
    main()
