"""Instance files: canonical JSON, schema validation and conversions.

Every file is a JSON object with a top-level ``kind`` of ``geometric``,
``set_system``, ``domination`` or ``graph``.  Canonical form sorts keys and
writes floats with 17 significant digits, so load/dump round-trips
byte-for-byte.
"""
import json
import math

import jsonschema
import numpy as np

from .geometry import AxisBox, Ball, Circle2, Point, Triangle2
from .igraph import IntersectionGraph


class SchemaError(ValueError):
    pass


# ---------------------------------------------------------------------------
# canonical JSON

def _fmt_float(x):
    if not math.isfinite(x):
        raise ValueError(f"non-finite float {x!r} cannot be written")
    s = "%.17g" % x
    if not any(c in s for c in ".eEn"):
        s += ".0"
    return s


def _emit(obj, out):
    if obj is None:
        out.append("null")
    elif isinstance(obj, (bool, np.bool_)):
        out.append("true" if obj else "false")
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.append(_fmt_float(float(obj)))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, dict):
        out.append("{")
        for i, k in enumerate(sorted(obj, key=str)):
            if i:
                out.append(",")
            out.append(json.dumps(str(k)))
            out.append(":")
            _emit(obj[k], out)
        out.append("}")
    elif isinstance(obj, (list, tuple, np.ndarray)):
        out.append("[")
        for i, v in enumerate(obj):
            if i:
                out.append(",")
            _emit(v, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(doc):
    out = []
    _emit(doc, out)
    return "".join(out) + "\n"


def loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from None


# ---------------------------------------------------------------------------
# schemas

_ids = {"type": "array", "items": {"type": "integer", "minimum": 0}}
_vec = {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 3}
_graph = {
    "type": "object",
    "required": ["n", "edges"],
    "properties": {
        "n": {"type": "integer", "minimum": 0},
        "edges": {"type": "array", "items": {"type": "array", "items": {"type": "integer", "minimum": 0},
                                             "minItems": 2, "maxItems": 2}},
    },
}
_object = {
    "type": "object",
    "required": ["type"],
    "properties": {"type": {"enum": ["point", "ball", "box", "triangle", "circle"]},
                   "id": {"type": "integer", "minimum": 0}},
    "allOf": [
        {"if": {"properties": {"type": {"const": "point"}}},
         "then": {"required": ["coords"], "properties": {"coords": _vec}}},
        {"if": {"properties": {"type": {"enum": ["ball", "circle"]}}},
         "then": {"required": ["center", "radius"],
                  "properties": {"center": _vec, "radius": {"type": "number", "minimum": 0}}}},
        {"if": {"properties": {"type": {"const": "box"}}},
         "then": {"required": ["lo", "hi"], "properties": {"lo": _vec, "hi": _vec}}},
        {"if": {"properties": {"type": {"const": "triangle"}}},
         "then": {"required": ["vertices"],
                  "properties": {"vertices": {"type": "array", "items": _vec, "minItems": 3, "maxItems": 3},
                                 "degenerate": {"type": "boolean"}}}},
    ],
}
_division = {
    "type": "object",
    "required": ["psi", "clusters"],
    "properties": {"psi": {"type": "integer", "minimum": 0},
                   "clusters": {"type": "array", "items": _ids},
                   "excess": {"type": "integer", "minimum": 0}},
}
_packing = {
    "type": "object",
    "required": ["clusters", "centers", "t", "ell"],
    "properties": {"clusters": {"type": "array", "items": _ids}, "centers": _ids,
                   "t": {"type": "integer", "minimum": 0}, "ell": {"type": "integer", "minimum": 1}},
}
_certificate = {
    "type": "object",
    "required": ["construction", "graph", "points", "params"],
    "properties": {
        "construction": {"enum": ["hitting", "cover", "circle", "plane"]},
        "graph": _graph,
        "points": {"type": "array", "items": _vec},
        "objects": {"type": "array", "items": _object},
        "planes": {"type": "array", "items": {"type": "array", "items": {"type": "number"},
                                              "minItems": 3, "maxItems": 3}},
        "params": {"type": "object"},
        "claim": {"type": "string"},
        "set_vertex": _ids,
    },
}
_pos_map = {"type": "object", "patternProperties": {"^[0-9]+$": {"type": "integer", "minimum": 1}},
            "additionalProperties": False}

SCHEMAS = {
    "graph": {"type": "object", "required": ["kind", "n", "edges"],
              "properties": dict(_graph["properties"], kind={"const": "graph"},
                                 division=_division, packing=_packing)},
    "geometric": {
        "type": "object",
        "required": ["kind", "dimension", "objects"],
        "properties": {"kind": {"const": "geometric"}, "dimension": {"enum": [2, 3]},
                       "objects": {"type": "array", "items": _object},
                       "points": {"type": "array", "items": _vec},
                       "division": _division, "packing": _packing},
    },
    "set_system": {
        "type": "object",
        "required": ["kind", "universe", "sets"],
        "properties": {"kind": {"const": "set_system"}, "universe": {"type": "integer", "minimum": 0},
                       "sets": {"type": "array", "items": _ids}, "certificate": _certificate},
    },
    "domination": {
        "type": "object",
        "required": ["kind", "graph", "D", "C"],
        "properties": {"kind": {"const": "domination"}, "graph": _graph, "D": _ids, "C": _ids,
                       "demand": _pos_map, "reach": _pos_map, "connected": {"type": "boolean"}},
    },
}


def validate(doc):
    """Schema-check ``doc``; raises :class:`SchemaError` naming the offending location."""
    if not isinstance(doc, dict) or doc.get("kind") not in SCHEMAS:
        raise SchemaError(f"top-level 'kind' must be one of {sorted(SCHEMAS)}")
    v = jsonschema.Draft202012Validator(SCHEMAS[doc["kind"]])
    errs = sorted(v.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errs:
        e = errs[0]
        where = "/".join(str(p) for p in e.absolute_path) or "<root>"
        raise SchemaError(f"{where}: {e.message}")
    _check_ids(doc)
    return doc


def _check_ids(doc):
    kind = doc["kind"]
    if kind in ("graph", "domination"):
        g = doc if kind == "graph" else doc["graph"]
        _check_edges(g, kind if kind == "graph" else "graph")
    if kind == "geometric":
        ids = [o.get("id", i) for i, o in enumerate(doc["objects"])]
        if ids != list(range(len(ids))):
            raise SchemaError("objects: ids must be dense and 0-based in file order")
        dim = doc["dimension"]
        for i, o in enumerate(doc["objects"]):
            for key in ("coords", "center", "lo", "hi"):
                if key in o and len(o[key]) != dim:
                    raise SchemaError(f"objects/{i}/{key}: expected {dim} coordinates")
    if kind == "set_system":
        for i, s in enumerate(doc["sets"]):
            bad = [e for e in s if e >= doc["universe"]]
            if bad:
                raise SchemaError(f"sets/{i}: element {bad[0]} outside universe {doc['universe']}")


def _check_edges(g, where):
    for i, (u, v) in enumerate(g["edges"]):
        if not u < v:
            raise SchemaError(f"{where}/edges/{i}: edges must be written u < v")
        if v >= g["n"]:
            raise SchemaError(f"{where}/edges/{i}: vertex {v} out of range for n={g['n']}")


def load(path):
    with open(path) as fh:
        return validate(loads(fh.read()))


def save(doc, path=None):
    """Validate and write ``doc`` canonically; returns the text.  ``path=None`` -> no file."""
    validate(loads(dumps(doc)))
    text = dumps(doc)
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text)
    return text


# ---------------------------------------------------------------------------
# conversions

def object_to_json(o):
    d = {"type": o.kind, "id": int(max(o.id, 0))}
    if o.kind == "point":
        d["coords"] = o.coords.tolist()
    elif o.kind in ("ball", "circle"):
        d["center"] = o.coords.tolist()
        d["radius"] = float(o.radius)
    elif o.kind == "box":
        d["lo"], d["hi"] = o.coords[0].tolist(), o.coords[1].tolist()
    else:
        d["vertices"] = o.coords.tolist()
        d["degenerate"] = bool(o.degenerate)
    return d


def object_from_json(d, i=None):
    t = d["type"]
    oid = d.get("id", i if i is not None else -1)
    if t == "point":
        return Point(d["coords"], id=oid)
    if t == "ball":
        return Ball(d["center"], d["radius"], id=oid)
    if t == "circle":
        return Circle2(d["center"], d["radius"], id=oid)
    if t == "box":
        return AxisBox(d["lo"], d["hi"], id=oid)
    return Triangle2(*d["vertices"], id=oid, degenerate=d.get("degenerate", False))


def geometric_doc(objs, pts=None):
    objs = list(objs)
    dim = objs[0].dim if objs else (len(pts[0]) if pts is not None and len(pts) else 2)
    doc = {"kind": "geometric", "dimension": int(dim),
           "objects": [dict(object_to_json(o), id=i) for i, o in enumerate(objs)]}
    if pts is not None:
        doc["points"] = [list(map(float, p)) for p in pts]
    return doc


def geometric_from_doc(doc):
    objs = [object_from_json(d, i) for i, d in enumerate(doc["objects"])]
    pts = np.array(doc.get("points", []), dtype=float).reshape(-1, doc["dimension"])
    return objs, pts


def graph_json(g):
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}


def graph_doc(g):
    return dict(graph_json(g), kind="graph")


def graph_from_json(d):
    return IntersectionGraph.from_edges(d["n"], [tuple(e) for e in d["edges"]])


def domination_doc(inst):
    doc = {"kind": "domination", "graph": graph_json(inst.graph), "D": list(inst.D), "C": list(inst.C),
           "connected": bool(inst.connected)}
    if inst.demand:
        doc["demand"] = {str(k): v for k, v in inst.demand.items()}
    if inst.reach:
        doc["reach"] = {str(k): v for k, v in inst.reach.items()}
    return doc


def domination_from_doc(doc):
    from .problems import DominationInstance
    return DominationInstance(graph_from_json(doc["graph"]), doc["D"], doc["C"],
                              {int(k): v for k, v in doc.get("demand", {}).items()},
                              {int(k): v for k, v in doc.get("reach", {}).items()},
                              doc.get("connected", False))


def certificate_doc(cert):
    c = {"construction": cert.kind, "graph": graph_json(cert.graph),
         "points": np.asarray(cert.points).tolist(),
         "params": cert.params, "claim": cert.claim}
    if cert.objects:
        c["objects"] = [dict(object_to_json(o), id=i) for i, o in enumerate(cert.objects)]
    if cert.planes is not None:
        c["planes"] = np.asarray(cert.planes).tolist()
    if cert.set_vertex is not None:
        c["set_vertex"] = list(cert.set_vertex)
    return {"kind": "set_system", "universe": cert.system.universe,
            "sets": [list(s) for s in cert.system.sets], "certificate": c}


def certificate_from_doc(doc):
    from .generators import HardnessCertificate
    from .problems import SetSystemInstance
    c = doc["certificate"]
    planes = np.array(c["planes"], dtype=float).reshape(-1, 3) if "planes" in c else None
    dim = 3 if c["construction"] == "plane" else 2
    return HardnessCertificate(
        c["construction"], graph_from_json(c["graph"]),
        SetSystemInstance(doc["universe"], doc["sets"]),
        np.array(c["points"], dtype=float).reshape(-1, dim),
        [object_from_json(d, i) for i, d in enumerate(c.get("objects", []))],
        planes, dict(c["params"]), c.get("claim", ""), c.get("set_vertex"))


def division_json(div):
    return {"psi": int(div.psi), "clusters": [sorted(c) for c in div.clusters], "excess": int(div.excess)}


def division_from_json(d):
    from .division import Division
    div = Division.from_clusters(d["clusters"], d["psi"])
    if "excess" in d:
        div.excess = d["excess"]
    return div


def packing_json(p):
    return {"clusters": [sorted(c) for c in p.clusters], "centers": list(p.centers),
            "t": int(p.t), "ell": int(p.ell)}


def packing_from_json(d):
    from .packing import ShallowPacking
    return ShallowPacking(d["clusters"], d["centers"], d["t"], d["ell"])
