"""From a small cubic graph to hitting-set, set-cover, circle and plane instances.

Each construction keeps the optimum equal to the minimum vertex cover of the
source graph; the verifier re-derives the incidences from the geometry and
checks the angle, depth and position conditions.

    python3 demos/hardness_walkthrough.py
"""
from lowdense.generators import (complete_bipartite_graph, gen_circle_hardness, gen_cover_hardness,
                                 gen_hitting_hardness, gen_plane_hardness, verify_certificate)
from lowdense.oracles import exact_min_feasible, exact_vertex_cover
from lowdense.problems import abstract_set_cover


def main():
    g = complete_bipartite_graph(3, 3)
    print(f"source: K_3,3 with {g.n} vertices, {g.m} edges, vertex cover {len(exact_vertex_cover(g))}")
    hit = gen_hitting_hardness(g, delta=1.0)
    cover = gen_cover_hardness(g, delta=1.0)
    circle = gen_circle_hardness(g)
    plane = gen_plane_hardness(circle)
    for cert in (hit, cover, circle, plane):
        opt = len(exact_min_feasible(abstract_set_cover(cert.system)))
        rep = verify_certificate(cert)
        print(f"\n{cert.kind}: {len(cert.system.sets)} sets over {cert.system.universe} elements, optimum {opt}")
        print(rep)


if __name__ == "__main__":
    main()
