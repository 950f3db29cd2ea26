"""Command-line driver: ``lowdense {gen,solve,bench,verify,divide}``.

Exit codes: 0 ok, 1 verification failure, 2 usage or schema error,
3 exact-solver cap or other internal error.  ``LOWDENSE_SEED`` supplies the
default ``--seed``.
"""
import argparse
import csv
import math
import os
import sys
import time

import numpy as np

from . import io

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _default_seed():
    s = os.environ.get("LOWDENSE_SEED")
    if s is None or s == "":
        return 0
    try:
        return int(s)
    except ValueError:
        raise UsageError(f"LOWDENSE_SEED must be an integer, got {s!r}") from None


def _int_list(text):
    """'64,256' or '0-29' or a mix; empty -> error."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part[1:]:
            a, b = part.split("-", 1)
            out.extend(range(int(a), int(b) + 1))
        else:
            out.append(int(part))
    if not out:
        raise argparse.ArgumentTypeError("empty list")
    return out


def _write(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# gen

def cmd_gen(args):
    from . import generators as G
    what = args.what
    if what == "disks":
        if args.n is None:
            raise UsageError("gen disks needs --n")
        objs = G.gen_random_disks(args.n, args.rho, seed=args.seed, d=args.dim)
        doc = io.geometric_doc(objs)
    elif what == "graph":
        doc = io.graph_doc(_family(args))
    else:
        if what == "plane-hard" and args.cert:
            cert = io.certificate_from_doc(io.load(args.cert))
            if cert.kind != "circle":
                raise UsageError("--cert must hold a circle certificate")
        else:
            if not args.graph:
                raise UsageError(f"gen {what} needs --graph FILE")
            g = _load_graph(args.graph)
            if what == "hit-hard":
                cert = G.gen_hitting_hardness(g, args.delta)
            elif what == "cover-hard":
                cert = G.gen_cover_hardness(g, args.delta)
            else:
                cert = G.gen_circle_hardness(g, args.delta, args.perturb)
        if what == "plane-hard":
            cert = G.gen_plane_hardness(cert)
        doc = io.certificate_doc(cert)
    _write(io.save(doc), args.out)
    return EXIT_OK


def _family(args):
    from . import generators as G
    fam, n = args.family, args.n
    if fam == "petersen":
        return G.petersen_graph()
    if n is None:
        raise UsageError(f"--family {fam} needs --n")
    if fam == "path":
        return G.path_graph(n)
    if fam == "cycle":
        return G.cycle_graph(n)
    if fam == "star":
        return G.star_graph(n - 1)
    if fam == "complete":
        return G.complete_graph(n)
    if fam == "cubic":
        return G.random_cubic_graph(n, seed=args.seed)
    raise UsageError(f"unknown family {fam!r}")


def _load_graph(path):
    doc = io.load(path)
    if doc["kind"] == "graph":
        return io.graph_from_json(doc)
    if doc["kind"] == "domination":
        return io.graph_from_json(doc["graph"])
    if doc["kind"] == "geometric":
        from .igraph import build_intersection_graph
        objs, _ = io.geometric_from_doc(doc)
        return build_intersection_graph(objs)
    raise UsageError(f"{path}: a {doc['kind']} file holds no graph")


# ---------------------------------------------------------------------------
# solve

def _parse_algo(text):
    if text == "exact":
        return "exact", None
    kind, _, val = text.partition(":")
    if kind not in ("local", "division") or not val.isdigit() or int(val) < 1:
        raise UsageError(f"--algo must be local:T, division:PSI or exact (got {text!r})")
    return kind, int(val)


def _build_problem(args, doc):
    """(SearchProblem, intersection graph when division:PSI can run on it, else None)."""
    from . import problems as P
    from .igraph import build_intersection_graph
    prob, kind = args.problem, doc["kind"]
    if prob in ("is", "density-pack", "shallow-pack"):
        if kind == "graph" and prob == "is":
            g = io.graph_from_json(doc)
            return P.make_independent_set_problem(g), None
        if kind != "geometric":
            raise UsageError(f"solve {prob} needs a geometric file")
        objs, pts = io.geometric_from_doc(doc)
        g = build_intersection_graph(objs)
        if prob == "is":
            return P.make_independent_set_problem(g), g
        if prob == "density-pack":
            return P.make_density_packing_problem(objs, args.rho_max, g=g), g
        if len(pts) == 0:
            raise UsageError("solve shallow-pack needs points in the file")
        return P.make_shallow_coverage_problem(objs, pts, args.k), g
    if prob == "dominate":
        if kind == "domination":
            inst = io.domination_from_doc(doc)
        elif kind == "graph":
            g = io.graph_from_json(doc)
            inst = P.DominationInstance(g, range(g.n), range(g.n), connected=args.connected)
        else:
            raise UsageError("solve dominate needs a domination or graph file")
        return P.make_domination_problem(inst), None
    if prob in ("hit", "cover"):
        if kind == "set_system":
            return P.abstract_set_cover(P.SetSystemInstance(doc["universe"], doc["sets"])), None
        if kind != "geometric":
            raise UsageError(f"solve {prob} needs a geometric or set_system file")
        objs, pts = io.geometric_from_doc(doc)
        f = P.hitting_set_to_domination if prob == "hit" else P.set_cover_to_domination
        return P.make_domination_problem(f(objs, pts)), None
    if prob == "vc":
        g = _load_graph_doc(doc)
        return P.make_domination_problem(P.vertex_cover_via_subdivision(g)), None
    raise UsageError(f"unknown problem {prob!r}")


def _load_graph_doc(doc):
    if doc["kind"] == "graph":
        return io.graph_from_json(doc)
    if doc["kind"] == "geometric":
        from .igraph import build_intersection_graph
        return build_intersection_graph(io.geometric_from_doc(doc)[0])
    raise UsageError("solve vc needs a graph or geometric file")


def cmd_solve(args):
    from .localsearch import MAXIMIZE, division_approx_packing, local_search
    from .oracles import CapExceeded, exact_max_feasible, exact_min_feasible
    algo, param = _parse_algo(args.algo)
    doc = io.load(args.file)
    p, g = _build_problem(args, doc)
    exact = exact_max_feasible if p.direction == MAXIMIZE else exact_min_feasible
    out = {"problem": args.problem, "algo": args.algo, "direction": p.direction}
    t0 = time.perf_counter()
    try:
        if algo == "local":
            tr = local_search(p, param, budget=args.budget)
            sol = tr.solution
            out["trace"] = {"rounds": tr.rounds, "examined": tr.examined, "complete": tr.complete}
        elif algo == "division":
            if p.direction != MAXIMIZE or g is None:
                raise UsageError("division:PSI applies to packing problems on geometric files")
            sol, div = division_approx_packing(g, p.feasible, param, seed=args.seed, with_division=True)
            out["trace"] = {"psi": div.psi, "excess": div.excess, "clusters": len(div.clusters)}
        else:
            sol = exact(p)
        out["millis"] = round(1000 * (time.perf_counter() - t0), 3)
        out["solution"] = sorted(sol)
        out["size"] = len(sol)
        out["feasible"] = bool(p.accepts(frozenset(sol)))
        if args.oracle:
            opt = len(exact(p))
            out["optimum"] = opt
            out["ratio"] = (len(sol) / opt if opt else 1.0) if p.direction != MAXIMIZE else \
                (opt / len(sol) if sol else (1.0 if opt == 0 else math.inf))
    except CapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.json:
        sys.stdout.write(io.dumps(out))
    else:
        print(f"{args.problem} [{args.algo}] size {out['size']} ({p.direction})")
        print("solution:", " ".join(map(str, out["solution"])))
        for k, v in out.get("trace", {}).items():
            print(f"{k}: {v}")
        if args.oracle:
            print(f"optimum: {out['optimum']}  ratio: {out['ratio']:.4f}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# bench

def fit_exponent(xs, ys):
    """Least-squares slope of log y against log x."""
    xs, ys = np.asarray(xs, float), np.asarray(ys, float)
    keep = (xs > 0) & (ys > 0)
    if keep.sum() < 2 or len(set(xs[keep])) < 2:
        return None
    return float(np.polyfit(np.log(xs[keep]), np.log(ys[keep]), 1)[0])


def bench_separator(n, rho, ks, seeds, corpus_seed=1, d=2):
    from .generators import gen_random_disks
    from .geometry import PackedObjects
    from .separator import separate_packed
    objs = gen_random_disks(n, rho, seed=corpus_seed, d=d)
    packed = PackedObjects(objs)
    idx = np.arange(n)
    rows = []
    for k in ks:
        for s in seeds:
            t0 = time.perf_counter()
            res = separate_packed(packed, idx, k, np.random.default_rng(s))
            ms = 1000 * (time.perf_counter() - t0)
            rows.append({"n": n, "k": k, "seed": s, "crossing": len(res.crossing),
                         "inside": len(res.inside), "outside": len(res.outside),
                         "trials": res.trials, "millis": round(ms, 3)})
    return rows


def bench_division(n, rho, psis, seeds, corpus_seed=1, d=2):
    from .division import build_division
    from .generators import gen_random_disks
    from .igraph import build_intersection_graph
    g = build_intersection_graph(gen_random_disks(n, rho, seed=corpus_seed, d=d))
    rows = []
    for psi in psis:
        for s in seeds:
            t0 = time.perf_counter()
            div = build_division(g, psi, seed=s)
            ms = 1000 * (time.perf_counter() - t0)
            rows.append({"n": n, "psi": psi, "seed": s, "excess": div.excess,
                         "max_cluster": div.psi, "trials": div.trials, "millis": round(ms, 3)})
    return rows


def _median_by(rows, key, val):
    groups = {}
    for r in rows:
        groups.setdefault(r[key], []).append(r[val])
    xs = sorted(groups)
    return xs, [float(np.median(groups[x])) for x in xs]


def cmd_bench(args):
    if args.what == "separator":
        rows = bench_separator(args.n, args.rho, args.k_list, args.seeds, args.corpus_seed)
        key, val = "k", "crossing"
    else:
        rows = bench_division(args.n, args.rho, args.psi_list, args.seeds, args.corpus_seed)
        key, val = "psi", "excess"
    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        w = csv.DictWriter(fh, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        e = fit_exponent(*_median_by(rows, key, val))
        if e is not None:
            fh.write(f"# exponent {val}~{key}^e: e={e:.4f}\n")
    finally:
        if args.out:
            fh.close()
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify / divide

def cmd_verify(args):
    doc = io.load(args.file)
    if args.what == "certificate":
        from .generators import verify_certificate
        if doc["kind"] != "set_system" or "certificate" not in doc:
            raise UsageError("file holds no certificate")
        rep = verify_certificate(io.certificate_from_doc(doc))
    elif args.what == "division":
        from .division import validate_division
        if "division" not in doc:
            raise UsageError("file holds no 'division' section")
        rep = validate_division(_load_graph_doc_any(doc), io.division_from_json(doc["division"]))
    else:
        from .packing import verify_packing
        if "packing" not in doc:
            raise UsageError("file holds no 'packing' section")
        rep = verify_packing(_load_graph_doc_any(doc), io.packing_from_json(doc["packing"]))
    print(rep)
    return EXIT_OK if rep.ok else EXIT_FAIL


def _load_graph_doc_any(doc):
    if doc["kind"] in ("graph", "geometric"):
        return _load_graph_doc(doc)
    raise UsageError(f"a {doc['kind']} file carries no graph to check against")


def cmd_divide(args):
    from .division import build_division
    doc = io.load(args.file)
    if doc["kind"] != "geometric":
        raise UsageError("divide needs a geometric file")
    g = _load_graph_doc(doc)
    div = build_division(g, args.psi, seed=args.seed)
    doc = dict(doc, division=io.division_json(div))
    _write(io.save(doc), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser():
    seed = dict(type=int, default=None, help="random seed (default: $LOWDENSE_SEED or 0)")
    ap = argparse.ArgumentParser(prog="lowdense", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="generate an instance file")
    g.add_argument("what", choices=["disks", "hit-hard", "cover-hard", "circle-hard", "plane-hard", "graph"])
    g.add_argument("--n", type=int)
    g.add_argument("--rho", type=float, default=2.0)
    g.add_argument("--dim", type=int, default=2, choices=[2, 3])
    g.add_argument("--seed", **seed)
    g.add_argument("--delta", type=float, default=1.0, help="angle slack in degrees")
    g.add_argument("--perturb", type=float, default=None)
    g.add_argument("--graph", help="graph file for hardness constructions")
    g.add_argument("--cert", help="circle certificate to lift (plane-hard)")
    g.add_argument("--family", default="path",
                   choices=["path", "cycle", "star", "complete", "petersen", "cubic"])
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="run an algorithm on an instance")
    s.add_argument("problem", choices=["is", "density-pack", "shallow-pack", "dominate", "hit", "cover", "vc"])
    s.add_argument("file")
    s.add_argument("--algo", default="local:1", help="local:T | division:PSI | exact")
    s.add_argument("--seed", **seed)
    s.add_argument("--json", action="store_true")
    s.add_argument("--oracle", action="store_true", help="also solve exactly and report the ratio")
    s.add_argument("--budget", type=int, default=None, help="max exchanges examined (local search)")
    s.add_argument("--rho-max", type=int, default=1)
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--connected", action="store_true")
    s.set_defaults(func=cmd_solve)

    b = sub.add_parser("bench", help="scaling benchmarks as CSV")
    b.add_argument("what", choices=["separator", "division"])
    b.add_argument("--n", type=int, default=8192)
    b.add_argument("--rho", type=float, default=2.0)
    b.add_argument("--k-list", type=_int_list, default=[64, 256, 1024, 4096])
    b.add_argument("--psi-list", type=_int_list, default=[16, 64, 256])
    b.add_argument("--seeds", type=_int_list, default=list(range(30)))
    b.add_argument("--corpus-seed", type=int, default=1)
    b.add_argument("--out")
    b.set_defaults(func=cmd_bench)

    v = sub.add_parser("verify", help="check a certificate, division or packing file")
    v.add_argument("what", choices=["certificate", "division", "packing"])
    v.add_argument("file")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("divide", help="attach a psi-division to a geometric file")
    d.add_argument("file")
    d.add_argument("--psi", type=int, required=True)
    d.add_argument("--seed", **seed)
    d.add_argument("--out")
    d.set_defaults(func=cmd_divide)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if hasattr(args, "seed") and args.seed is None:
            args.seed = _default_seed()
        return args.func(args)
    except (UsageError, io.SchemaError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (FileNotFoundError, ValueError) as e:
        # bad input values (e.g. a graph the construction rejects)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:  # noqa: BLE001 - reported as an internal error
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
