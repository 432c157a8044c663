#!/usr/bin/env python3
"""Render curve bundles written by `gaussent figures <id> --out DIR`.

Each bundle is fig<id>_curve<k>.csv plus fig<id>_manifest.csv; the manifest
names the x axis (tau or gamma_t) and the quantity to plot.
"""
import argparse
import csv
import pathlib
import sys


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("directory", type=pathlib.Path, help="directory holding fig*_manifest.csv")
    parser.add_argument("--out", type=pathlib.Path, default=None, help="output directory (default: input)")
    args = parser.parse_args()

    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        sys.exit("matplotlib is required: pip install matplotlib")

    manifests = sorted(args.directory.glob("fig*_manifest.csv"))
    if not manifests:
        sys.exit(f"no fig*_manifest.csv under {args.directory}")

    out_dir = args.out or args.directory
    out_dir.mkdir(parents=True, exist_ok=True)

    for manifest in manifests:
        with open(manifest, newline="") as handle:
            rows = list(csv.DictReader(handle))
        axis, quantity = rows[0]["axis"], rows[0]["quantity"]
        fig, ax = plt.subplots(figsize=(6.0, 4.0))
        for row in rows:
            with open(args.directory / row["file"], newline="") as handle:
                data = list(csv.DictReader(handle))
            ax.plot(
                [float(d[axis]) for d in data],
                [float(d[quantity]) for d in data],
                label=f"r={row['r']}, nbar={row['nbar']}",
            )
        ax.set_xlabel(axis.replace("_", " "))
        ax.set_ylabel(quantity.replace("_", " "))
        ax.set_title(f"figure {rows[0]['figure']} ({rows[0]['model']} reservoir)")
        ax.legend(fontsize=8)
        target = out_dir / f"fig{rows[0]['figure']}.png"
        fig.savefig(target, dpi=150, bbox_inches="tight")
        plt.close(fig)
        print(f"wrote {target}")


if __name__ == "__main__":
    main()
