#!/usr/bin/env python3
"""Generate demo inputs: a single trend-rich series and a labelled dataset.

Writes under the output directory:
  demo_series.txt          one value per line (use with ``oppmine mine``)
  labelled/s_*.txt         per-sequence files in three shape classes
  labelled/manifest.json   manifest with labels (use with ``oppmine cluster``)
"""

import argparse
import json
from pathlib import Path

import numpy as np


def bounded_walk(rng, n, drift=0.0):
    steps = rng.normal(drift, 1.0, n)
    walk = np.cumsum(steps)
    return walk - np.linspace(0, 1, n) * walk.mean()


def sawtooth(rng, n, period):
    ramp = np.tile(np.linspace(0, period - 1, period), n // period + 1)[:n]
    return ramp + rng.normal(0, 0.05, n)


def zigzag(rng, n):
    pattern = np.tile([0.0, 2.0, 1.0, 3.0], n // 4 + 1)[:n]
    return pattern + rng.normal(0, 0.05, n)


def write_series(path, values):
    path.write_text("".join(f"{v:.6f}\n" for v in values))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="data", help="output directory")
    parser.add_argument("--length", type=int, default=2000)
    parser.add_argument("--per-class", type=int, default=8)
    parser.add_argument("--seq-length", type=int, default=160)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    write_series(out / "demo_series.txt", bounded_walk(rng, args.length))

    labelled = out / "labelled"
    labelled.mkdir(exist_ok=True)
    makers = {"walk": bounded_walk, "saw": lambda r, n: sawtooth(r, n, 5), "zigzag": zigzag}
    entries = []
    idx = 0
    for label, make in makers.items():
        for _ in range(args.per_class):
            name = f"s_{idx:03d}.txt"
            write_series(labelled / name, make(rng, args.seq_length))
            entries.append({"path": name, "label": label})
            idx += 1
    (labelled / "manifest.json").write_text(
        json.dumps({"format": "plain", "entries": entries}, indent=2) + "\n"
    )
    print(f"wrote {out / 'demo_series.txt'} and {len(entries)} labelled sequences")


if __name__ == "__main__":
    main()
