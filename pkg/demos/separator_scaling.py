"""Crossing size of random sphere separators as k grows.

Prints the median crossing count per k, the fitted log-log exponent, and the
share of each sphere lying inside the bounding square of the corpus.  Once
the sphere no longer fits in the square, the crossing count stops growing
with its length.

    python3 demos/separator_scaling.py [--n 8192] [--seeds 30]
"""
import argparse

import numpy as np

from lowdense.cli import fit_exponent
from lowdense.generators import gen_random_disks
from lowdense.geometry import PackedObjects
from lowdense.separator import separate_packed


def inside_share(center, R, lo, hi, samples=2000):
    th = np.linspace(0, 2 * np.pi, samples, endpoint=False)
    pts = center + R * np.c_[np.cos(th), np.sin(th)]
    return float(np.mean(((pts >= lo) & (pts <= hi)).all(axis=1)))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=8192)
    ap.add_argument("--seeds", type=int, default=30)
    ap.add_argument("--ks", default="64,256,1024,4096")
    args = ap.parse_args()

    objs = gen_random_disks(args.n, 2, seed=1)
    packed = PackedObjects(objs)
    lo, hi = packed.reps.min(axis=0), packed.reps.max(axis=0)
    ks = [int(k) for k in args.ks.split(",")]
    med = []
    print(f"{'k':>6} {'crossing':>9} {'per length':>11} {'in square':>10}")
    for k in ks:
        cross, dens, share = [], [], []
        for s in range(args.seeds):
            res = separate_packed(packed, np.arange(args.n), k, np.random.default_rng(s))
            R = res.sphere.radius
            cross.append(len(res.crossing))
            dens.append(len(res.crossing) / (2 * np.pi * R))
            share.append(inside_share(np.asarray(res.sphere.center), R, lo, hi))
        med.append(float(np.median(cross)))
        print(f"{k:>6} {med[-1]:>9.1f} {np.median(dens):>11.3f} {np.median(share):>10.2f}")
    print(f"fitted exponent: {fit_exponent(ks, med):.3f}")


if __name__ == "__main__":
    main()
