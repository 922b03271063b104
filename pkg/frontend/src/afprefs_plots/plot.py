"""Render benchmark sweep CSVs as line charts.

One PNG per metric, x = framework size, one line per attack probability.
Only the CSV is consumed; the solver package is not imported.
"""

import argparse
import csv
import sys
from collections import defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

DEFAULT_METRICS = [
    "ctime_ms",
    "vtime1_ms",
    "vtime2_ms",
    "preference_sets",
    "preferences",
]


class PlotDataError(ValueError):
    """Raised for an empty CSV or a missing column."""


def read_rows(csv_path):
    with open(csv_path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    if not rows:
        raise PlotDataError(f"{csv_path}: no data rows")
    return rows


def _column(rows, name):
    if name not in rows[0]:
        have = ", ".join(sorted(rows[0]))
        raise PlotDataError(f"missing column {name!r} (have: {have})")
    return [float(r[name]) for r in rows]


def render(csv_path, out_dir, metrics=None, group_key="pr", x="aaf_size"):
    """Write one line chart per metric; returns the list of files written.

    Points sharing a (group, x) value are averaged, so the function also
    works on raw per-instance dumps, not just pre-averaged sweeps.
    """
    rows = read_rows(csv_path)
    metrics = list(metrics) if metrics is not None else list(DEFAULT_METRICS)
    for name in [group_key, x, *metrics]:
        _column(rows, name)

    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for metric in metrics:
        series = defaultdict(lambda: defaultdict(list))
        for row in rows:
            series[row[group_key]][float(row[x])].append(float(row[metric]))
        fig, ax = plt.subplots(figsize=(6, 4))
        for group in sorted(series, key=float):
            pts = sorted(
                (xv, sum(ys) / len(ys)) for xv, ys in series[group].items()
            )
            ax.plot(
                [p[0] for p in pts],
                [p[1] for p in pts],
                marker="o",
                label=f"{group_key}={group}",
            )
        ax.set_xlabel(x)
        ax.set_ylabel(metric)
        ax.legend()
        ax.grid(True, alpha=0.3)
        fig.tight_layout()
        path = out_dir / f"{metric}.png"
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(str(path))
    return written


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--csv", required=True, help="benchmark sweep CSV")
    parser.add_argument("--out", required=True, help="output directory for PNGs")
    parser.add_argument(
        "--metrics",
        default=",".join(DEFAULT_METRICS),
        help="comma-separated y columns (default: %(default)s)",
    )
    parser.add_argument("--group-key", default="pr")
    parser.add_argument("--x", default="aaf_size")
    args = parser.parse_args(argv)
    metrics = [m for m in args.metrics.split(",") if m]
    try:
        written = render(args.csv, args.out, metrics, args.group_key, args.x)
    except (PlotDataError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for path in written:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
