"""Measure the two calibrated constants in lowdense.config on the random-disk corpus.

crossing_constant C: sphere separators are accepted when at most
2 C (rho + sqrt(rho k)) objects cross; we report the C that covers the 95th
percentile of observed crossings.

division_constant K: psi = ceil(K rho / eps^2) should give total excess
<= eps n.  We scan K and report the smallest value that passes on every
corpus/seed tried, for eps in {0.5, 0.25, 0.1}.

    python demos/calibrate_constants.py [--quick]
"""
import argparse
import math

import numpy as np

from lowdense.division import build_division, psi_for_epsilon
from lowdense.generators import gen_random_disks
from lowdense.geometry import PackedObjects
from lowdense.igraph import build_intersection_graph, pairwise_density_proxy
from lowdense.separator import separate_packed


def crossing_ratio(n, ks, seeds, corpus_seed=1):
    objs = gen_random_disks(n, 2, seed=corpus_seed)
    rho = pairwise_density_proxy(objs)
    packed = PackedObjects(objs)
    ratios = []
    for k in ks:
        for s in seeds:
            res = separate_packed(packed, np.arange(n), k, np.random.default_rng(s))
            ratios.append(len(res.crossing) / (rho + math.sqrt(rho * k)))
    return rho, np.array(ratios)


def division_scan(n, Ks, epss, corpora, seeds):
    graphs = [build_intersection_graph(gen_random_disks(n, 2, seed=c)) for c in corpora]
    table = {}
    for K in Ks:
        worst = {}
        for eps in epss:
            psi = psi_for_epsilon(2, eps, 2, K=K)
            worst[eps] = max(build_division(g, psi, seed=s).excess / n for g in graphs for s in seeds)
        table[K] = worst
        cells = "  ".join(f"eps={e}: psi={psi_for_epsilon(2, e, 2, K=K)} excess/n={w:.3f}"
                          for e, w in worst.items())
        print(f"K={K:<4} {cells}")
    return table


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true")
    a = ap.parse_args()
    seeds = range(5 if a.quick else 30)
    rho, r = crossing_ratio(8192, [64, 256, 1024, 4096], seeds)
    q = float(np.quantile(r, 0.95))
    print(f"proxy rho={rho}; crossing/(rho+sqrt(rho k)): median {np.median(r):.2f}, "
          f"95th pct {q:.2f} -> C ~ {q / 2:.2f} (2C covers the 95th pct)")
    Ks = [1, 2, 4, 6, 8]
    table = division_scan(4096, Ks, [0.5, 0.25, 0.1], corpora=[1, 2] if a.quick else [1, 2, 3],
                          seeds=range(3 if a.quick else 5))
    ok = [K for K in Ks if all(w <= e for e, w in table[K].items())]
    print("smallest passing K:", ok[0] if ok else None)


if __name__ == "__main__":
    main()
