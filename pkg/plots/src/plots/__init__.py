"""Plot FER or mean-ANV curves against Eb/N0 from simulation CSV files.

Consumes only the documented CSV schema (comment lines starting with '#',
then a header row containing at least ``ebn0_db`` and the selected metric
column).  Rendering never modifies the inputs.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

__version__ = "0.1.0"

METRICS = {"fer": "fer", "anv": "mean_anv"}


@dataclass(frozen=True)
class CurveSpec:
    """One line of the figure: a CSV file, a legend label, and the column
    to plot on the y axis."""

    csv_path: str
    label: str
    metric: str = "fer"

    @property
    def column(self) -> str:
        if self.metric not in METRICS:
            raise ValueError(f"unknown metric {self.metric!r}; choose from {sorted(METRICS)}")
        return METRICS[self.metric]


def read_curve(spec: CurveSpec) -> Tuple[List[float], List[float]]:
    """Return (ebn0_db, metric) columns sorted by Eb/N0."""
    with open(spec.csv_path, newline="") as fh:
        rows = [r for r in csv.reader(fh) if r and not r[0].startswith("#")]
    if not rows:
        raise ValueError(f"{spec.csv_path}: no header row")
    header = rows[0]
    for col in ("ebn0_db", spec.column):
        if col not in header:
            raise ValueError(f"{spec.csv_path}: missing column {col!r}")
    xi, yi = header.index("ebn0_db"), header.index(spec.column)
    points = sorted((float(r[xi]), float(r[yi])) for r in rows[1:])
    if not points:
        raise ValueError(f"{spec.csv_path}: no data rows")
    return [p[0] for p in points], [p[1] for p in points]


def render(curves: Sequence[CurveSpec], out_path: str) -> "plt.Figure":
    """Draw one semilog-y figure with a line per curve and save it."""
    if not curves:
        raise ValueError("at least one curve is required")
    fig, ax = plt.subplots(figsize=(6.0, 4.5))
    ylabels = set()
    for spec in curves:
        x, y = read_curve(spec)
        ax.semilogy(x, y, marker="o", label=spec.label)
        ylabels.add(spec.metric.upper().replace("ANV", "mean ANV"))
    ax.set_xlabel("Eb/N0 (dB)")
    ax.set_ylabel(" / ".join(sorted(ylabels)))
    ax.grid(True, which="both", alpha=0.4)
    ax.legend()
    fig.tight_layout()
    fig.savefig(out_path)
    return fig


def parse_curve_arg(arg: str, metric: str) -> CurveSpec:
    """Split a ``CSV:LABEL`` argument; the path may not contain ':'."""
    path, sep, label = arg.rpartition(":")
    if not sep or not path or not label:
        raise ValueError(f"--curve expects CSV:LABEL, got {arg!r}")
    return CurveSpec(path, label, metric)


def main(argv: Optional[List[str]] = None) -> int:
    parser = argparse.ArgumentParser(prog="paccode-plot", description=__doc__)
    parser.add_argument(
        "--curve", action="append", default=[], metavar="CSV:LABEL",
        help="input CSV and legend label; repeat for multiple lines",
    )
    parser.add_argument("--metric", choices=sorted(METRICS), default="fer")
    parser.add_argument("--out", required=True, help="output image path")
    args = parser.parse_args(argv)
    try:
        curves = [parse_curve_arg(a, args.metric) for a in args.curve]
        fig = render(curves, args.out)
        plt.close(fig)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
