"""JSON reading and writing for categories, structures, map data and reports."""

import json

import numpy as np

from .catalan import CatalanSimplex
from .fincat import (
    FinCategory, Functor, NatTrans, cyclic_group, discrete, functor_compose, functor_product,
    indiscrete, nat_identity, power, thin,
)
from .mapcore import MapData, a_of, composite_source, eta_keys, eta_of, spine_category, t_keys, t_of
from .ordcomb import IndexSubset
from .classify.common import constant, projection, unique_nat
from .classify.lax import LaxStructure, lax_shapes, strict_from_monoid
from .classify.monoid import Monoid
from .classify.sigma import SigmaStructure
from .classify.skew import (
    SkewStructure, alpha_source, alpha_target, lam_source, rho_target, skew_from_monoid,
)


class SchemaError(ValueError):
    pass


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def load(path):
    with open(path) as fh:
        return json.load(fh)


def _need(obj, key, where):
    try:
        return obj[key]
    except (KeyError, TypeError):
        raise SchemaError("%s: missing field %r" % (where, key)) from None


# ---- categories

def category_from_json(obj):
    if "preset" in obj:
        p = obj["preset"]
        if p == "cyclic_group":
            return cyclic_group(int(_need(obj, "n", "category")))
        if p == "discrete":
            return discrete(_need(obj, "objects", "category"), name=obj.get("name"))
        if p == "indiscrete":
            return indiscrete(_need(obj, "objects", "category"), name=obj.get("name"))
        if p == "chain":
            objs = [str(o) for o in _need(obj, "objects", "category")]
            return thin(objs, lambda a, b: objs.index(a) <= objs.index(b), name=obj.get("name"))
        raise SchemaError("unknown category preset %r" % p)
    comp = [tuple(e) for e in _need(obj, "composition", "category")]
    return FinCategory(_need(obj, "objects", "category"),
                       [tuple(m) for m in _need(obj, "morphisms", "category")],
                       _need(obj, "identities", "category"), comp, name=obj.get("name"))


def category_to_json(C):
    if C.factors is not None:
        raise ValueError("only atomic categories are written out")
    comp = []
    for g in range(C.n_mor):
        for f in range(C.n_mor):
            gf = C.table[g, f]
            if gf >= 0:
                comp.append([C.mor_id(g), C.mor_id(f), C.mor_id(gf)])
    return {"objects": list(C.objects), "morphisms": [list(m) for m in C.morphisms],
            "identities": {C.obj_id(o): C.mor_id(C.ident[o]) for o in range(C.n_obj)},
            "composition": comp, "name": C.name}


def monoid_from_json(obj):
    return Monoid(tuple(_need(obj, "elements", "monoid")),
                  tuple(tuple(r) for r in _need(obj, "op_table", "monoid")), _need(obj, "unit", "monoid"))


def monoid_to_json(M):
    return {"kind": "monoid", "elements": list(M.elements), "op_table": [list(r) for r in M.op_table],
            "unit": M.unit}


# ---- functors and transformations

def functor_from_json(obj, A, arity):
    if obj == "identity" or obj == {"rule": "identity"}:
        if arity != 1:
            raise SchemaError("identity functor needs arity 1")
        return Functor.identity(A)
    rule = _need(obj, "rule", "functor")
    if rule == "projection":
        return projection(A, arity, int(_need(obj, "index", "functor")))
    if rule == "constant":
        return constant(A, arity, _need(obj, "object", "functor"))
    if rule == "table":
        src = power(A, arity)
        return Functor.from_ids(src, A, _need(obj, "objects", "functor"), _need(obj, "morphisms", "functor"))
    raise SchemaError("unknown functor rule %r" % rule)


def functor_to_json(F):
    S, T = F.src, F.tgt
    return {"rule": "table",
            "objects": {S.obj_id(k): T.obj_id(v) for k, v in enumerate(F.obj_map)},
            "morphisms": {S.mor_id(k): T.mor_id(v) for k, v in enumerate(F.mor_map)}}


def nat_from_json(obj, src, tgt):
    if obj == "identity":
        if src != tgt:
            raise SchemaError("identity transformation between different functors")
        return nat_identity(src)
    if obj == "unique":
        return unique_nat(src, tgt)
    if "constant" in obj:
        m = src.tgt.mor_index(str(obj["constant"]))
        return NatTrans(src, tgt, np.full(src.src.n_obj, m))
    comps = _need(obj, "components", "transformation")
    D, C = src.src, src.tgt
    try:
        arr = [C.mor_index(str(comps[D.obj_id(k)])) for k in range(D.n_obj)]
    except KeyError as e:
        raise SchemaError("transformation components: missing or unknown id %s" % e) from None
    return NatTrans(src, tgt, arr)


def nat_to_json(t):
    return {"components": t.component_ids()}


# ---- structures

def _shape_key(n, ks):
    return "%d;%s" % (n, ",".join(str(k) for k in ks))


def lax_from_json(obj, default_bound=4):
    """A lax structure, either explicit or strict from a monoid with optional overrides."""
    if obj.get("kind") == "monoid" or "monoid" in obj:
        M = monoid_from_json(obj if obj.get("kind") == "monoid" else obj["monoid"])
        bound = int(obj.get("arity_bound", default_bound))
        s = strict_from_monoid(M, bound, obj.get("presentation", "one_object"))
        if "iota" in obj and bound >= 1:
            s.iota = nat_from_json(obj["iota"], s.iota.src, s.iota.tgt)
        for key, val in obj.get("gamma", {}).items():
            n, ks = _parse_shape(key)
            g = s.gamma[(n, ks)]
            s.gamma[(n, ks)] = nat_from_json(val, g.src, g.tgt)
        return s
    A = category_from_json(_need(obj, "category", "lax"))
    bound = int(_need(obj, "arity_bound", "lax"))
    tj = _need(obj, "tensors", "lax")
    tensors = {n: functor_from_json(_need(tj, str(n), "tensors"), A, n) for n in range(bound + 1)}
    iota = nat_from_json(_need(obj, "iota", "lax"), Functor.identity(A), tensors[1]) if bound >= 1 else None
    gj = _need(obj, "gamma", "lax")
    gamma = {}
    for n, ks in lax_shapes(bound):
        src = functor_compose(tensors[n], functor_product([tensors[k] for k in ks]))
        entry = gj if isinstance(gj, str) else _need(gj, _shape_key(n, ks), "gamma")
        gamma[(n, ks)] = nat_from_json(entry, src, tensors[sum(ks)])
    return LaxStructure(A, tensors, iota, gamma, bound)


def _parse_shape(key):
    n, _, rest = key.partition(";")
    return int(n), tuple(int(k) for k in rest.split(",") if k != "")


def lax_to_json(s):
    return {"kind": "lax", "category": category_to_json(s.base), "arity_bound": s.arity_bound,
            "tensors": {str(n): functor_to_json(F) for n, F in sorted(s.tensors.items())},
            "iota": nat_to_json(s.iota) if s.iota is not None else None,
            "gamma": {_shape_key(n, ks): nat_to_json(g) for (n, ks), g in sorted(s.gamma.items())}}


def skew_from_json(obj):
    if "monoid" in obj:
        s = skew_from_monoid(monoid_from_json(obj["monoid"]), obj.get("presentation", "discrete"))
        A, T, u = s.base, s.tensor, s.unit
    else:
        A = category_from_json(_need(obj, "category", "skew"))
        T = functor_from_json(_need(obj, "tensor", "skew"), A, 2)
        u = functor_from_json(_need(obj, "unit", "skew"), A, 0)
        s = None
    idA = Functor.identity(A)
    bounds = {"alpha": (alpha_source(A, T), alpha_target(A, T)),
              "lambda": (lam_source(A, T, u), idA), "rho": (idA, rho_target(A, T, u))}
    nats = {}
    for name, (src, tgt) in bounds.items():
        if name in obj:
            nats[name] = nat_from_json(obj[name], src, tgt)
        elif s is not None:
            nats[name] = {"alpha": s.alpha, "lambda": s.lam, "rho": s.rho}[name]
        else:
            raise SchemaError("skew: missing field %r" % name)
    return SkewStructure(A, T, u, nats["alpha"], nats["lambda"], nats["rho"])


def skew_to_json(s):
    return {"kind": "skew", "category": category_to_json(s.base), "tensor": functor_to_json(s.tensor),
            "unit": functor_to_json(s.unit), "alpha": nat_to_json(s.alpha),
            "lambda": nat_to_json(s.lam), "rho": nat_to_json(s.rho)}


def sigma_from_json(obj):
    A = category_from_json(_need(obj, "category", "sigma"))
    sj = _need(obj, "sigma", "sigma")
    sigma = {int(k): [functor_from_json(f, A, int(k)) for f in fs] for k, fs in sj.items()}
    gamma = obj.get("gamma", "unique")
    if gamma != "unique":
        raise SchemaError("sigma: only gamma = \"unique\" is read from files")
    return SigmaStructure(A, sigma, gamma, obj.get("h", "cyclic_by_dim"))


# ---- map data

def mapdata_to_json(d):
    A = d.base
    fs = [{"simplex": x.to_json(), "objects": t_of(d, x).obj_map.tolist(),
           "morphisms": t_of(d, x).mor_map.tolist()} for x in t_keys(d.max_dim)]
    es = [{"simplex": x.to_json(), "C": list(els), "components": eta_of(d, x, els).components.tolist()}
          for x, els in eta_keys(d.max_dim)]
    return {"kind": "mapdata", "max_dim": d.max_dim, "category": category_to_json(A),
            "functors": fs, "transformations": es}


def _in_range(arr, size, what):
    if len(arr) and (arr.min() < 0 or arr.max() >= size):
        raise ValueError("%s index out of range" % what)


def mapdata_from_json(obj):
    """Raw tables; typing is left to validate()."""
    A = category_from_json(_need(obj, "category", "mapdata"))
    top = int(_need(obj, "max_dim", "mapdata"))
    t_table = {}
    for e in _need(obj, "functors", "mapdata"):
        x = CatalanSimplex.from_json(_need(e, "simplex", "functor entry"))
        d0 = MapData(top, A, {}, {})
        src, tgt = spine_category(d0, x), a_of(d0, x.edge(0, x.dim))
        try:
            F = Functor(src, tgt, e["objects"], e["morphisms"])
            _in_range(F.obj_map, tgt.n_obj, "object")
            _in_range(F.mor_map, tgt.n_mor, "morphism")
            t_table[x] = F
        except (KeyError, ValueError) as err:
            raise SchemaError("functor entry for %r: %s" % (x, err)) from None
    d = MapData(top, A, t_table, {})
    eta_table = {}
    for e in _need(obj, "transformations", "mapdata"):
        x = CatalanSimplex.from_json(_need(e, "simplex", "transformation entry"))
        els = tuple(_need(e, "C", "transformation entry"))
        try:
            src = composite_source(d, x, IndexSubset(x.dim, els))
            t = NatTrans(src, t_of(d, x), e["components"])
            _in_range(t.components, t.cod.n_mor, "morphism")
            eta_table[(x, els)] = t
        except (KeyError, ValueError) as err:
            raise SchemaError("transformation entry for %r at %r: %s" % (x, els, err)) from None
    d.eta_table = eta_table
    return d
