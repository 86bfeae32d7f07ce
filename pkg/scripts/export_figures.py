#!/usr/bin/env python3
"""Write the four diagnostic curve families to CSV files.

1: valid summation-fraction window of the triple-intersection sum, vs alpha
2: valid summation-fraction window of the pair-only sum, vs alpha
3: the two per-row decay bases xi and theta, vs alpha
4: close-up of theta around its minimizer

Empty cells mark alphas where a quantity is undefined."""

from __future__ import annotations

import argparse
import csv
from pathlib import Path

from gekr.optimize import figure_data


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path("figures"))
    parser.add_argument("--grid-step", type=float, default=0.005)
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for fig in (1, 2, 3, 4):
        table = figure_data(fig, grid_step=args.grid_step)
        path = args.out / f"figure{fig}.csv"
        with path.open("w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(table.columns)
            for row in table.rows:
                writer.writerow("" if cell is None else f"{cell:.9f}" for cell in row)
        print(f"wrote {path} ({len(table.rows)} rows)")


if __name__ == "__main__":
    main()
