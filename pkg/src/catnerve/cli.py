"""Command line front end.  Every command writes a JSON report; exit 0 on pass, 1 on fail, 2 on bad input."""

import argparse
import json
import os
import sys

from . import formats
from .catalan import CatalanSimplex, count_simplices, enumerate_simplices
from .classify.lax import lax_axioms, lax_classify, lax_equal, lax_recover, recovery_dim
from .classify.sigma import sigma_axioms, sigma_classify
from .classify.skew import SkewClassifier, skew_axioms
from .mapcore import check_all, recheck


class InputError(Exception):
    pass


def _read(path):
    try:
        return formats.load(path)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError("cannot read %s: %s" % (path, e)) from None


def _kind(obj, *allowed):
    k = obj.get("kind") if isinstance(obj, dict) else None
    if k not in allowed:
        raise InputError("expected a file of kind %s, got %r" % ("/".join(allowed), k))


def _parse_witness(text):
    if os.path.exists(text):
        with open(text) as fh:
            text = fh.read()
    try:
        w = json.loads(text)
        return CatalanSimplex.from_json(w["simplex"]), w["A"], w["B"]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        raise InputError("bad --witness: %s" % e) from None


def _sweep(d, args, extra=None):
    if args.witness:
        x, A, B = _parse_witness(args.witness)
        try:
            res = recheck(d, x, A, B)
        except ValueError as e:
            raise InputError(str(e)) from None
        report = {"status": "pass" if res["holds"] else "fail", "witness": res}
    else:
        report = check_all(d, workers=args.workers)
    if extra:
        report.update(extra)
    return report


def _axiom_report(failures):
    return {"status": "fail" if failures else "pass", "failures": failures}


def cmd_enumerate(args):
    n = args.n
    if n < 0:
        raise InputError("n must be >= 0")
    report = {"status": "pass", "n": n, "count": count_simplices(n),
              "nondegenerate": len(enumerate_simplices(n, True))}
    if args.list:
        report["simplices"] = [x.to_json() for x in enumerate_simplices(n)]
    return report


def _lax(args):
    obj = _read(args.file)
    _kind(obj, "lax", "monoid")
    if args.arity_bound is not None:
        obj = dict(obj, arity_bound=args.arity_bound)
    return formats.lax_from_json(obj, default_bound=args.max_dim)


def cmd_check_lax(args):
    return _axiom_report(lax_axioms(_lax(args)))


def cmd_classify_lax(args):
    s = _lax(args)
    if s.arity_bound < args.max_dim:
        raise InputError("arity bound %d is below --max-dim %d" % (s.arity_bound, args.max_dim))
    return _sweep(lax_classify(s, args.max_dim), args)


def cmd_roundtrip_lax(args):
    s = _lax(args)
    bound = s.arity_bound
    top = recovery_dim(bound)
    back = lax_recover(lax_classify(s, top), bound)
    same = lax_equal(s, back, bound)
    return {"status": "pass" if same else "fail", "arity_bound": bound, "max_dim": top,
            "result": "recovered == input" if same else "recovered != input"}


def _skew(args):
    obj = _read(args.file)
    _kind(obj, "skew")
    return formats.skew_from_json(obj)


def cmd_check_skew(args):
    return _axiom_report(skew_axioms(_skew(args)))


def cmd_classify_skew(args):
    k = SkewClassifier(_skew(args))
    d = k.mapdata(args.max_dim)
    report = _sweep(d, args)
    report["path_conflicts"] = [dict(c, tree=repr(c["tree"])) for c in k.conflicts]
    if report["path_conflicts"]:
        report["status"] = "fail"
    return report


def _sigma(args):
    obj = _read(args.file)
    _kind(obj, "sigma")
    return formats.sigma_from_json(obj)


def cmd_check_sigma(args):
    return _axiom_report(sigma_axioms(_sigma(args), args.max_dim))


def cmd_classify_sigma(args):
    return _sweep(sigma_classify(_sigma(args), args.max_dim), args)


def cmd_check_mapdata(args):
    obj = _read(args.file)
    _kind(obj, "mapdata")
    d = formats.mapdata_from_json(obj)
    if args.max_dim_given:
        d.max_dim = min(d.max_dim, args.max_dim)
        d.t_table = {x: F for x, F in d.t_table.items() if x.dim <= d.max_dim}
        d.eta_table = {k: t for k, t in d.eta_table.items() if k[0].dim <= d.max_dim}
    return _sweep(d, args)


COMMANDS = {
    "enumerate-catalan": cmd_enumerate,
    "check-lax": cmd_check_lax, "classify-lax": cmd_classify_lax, "roundtrip-lax": cmd_roundtrip_lax,
    "check-skew": cmd_check_skew, "classify-skew": cmd_classify_skew,
    "check-sigma": cmd_check_sigma, "classify-sigma": cmd_classify_sigma,
    "check-mapdata": cmd_check_mapdata,
}


def build_parser():
    p = argparse.ArgumentParser(prog="catnerve", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--out", help="write the JSON report here instead of stdout")

    e = sub.add_parser("enumerate-catalan", help="count (and list) the n-simplices")
    e.add_argument("n", type=int)
    e.add_argument("--list", action="store_true")
    common(e)
    for name in COMMANDS:
        if name == "enumerate-catalan":
            continue
        sp = sub.add_parser(name)
        sp.add_argument("file")
        sp.add_argument("--max-dim", type=int, default=None)
        sp.add_argument("--arity-bound", type=int, default=None)
        sp.add_argument("--workers", type=int, default=1)
        sp.add_argument("--witness", help="JSON (or a file holding it) with simplex, A and B to re-check")
        common(sp)
    return p


def run(argv=None):
    """Returns (exit code, report or None)."""
    args = build_parser().parse_args(argv)
    if hasattr(args, "max_dim"):
        args.max_dim_given = args.max_dim is not None
        if args.max_dim is None:
            args.max_dim = 6
        if args.max_dim < 1 or (args.arity_bound is not None and args.arity_bound < 0) or args.workers < 1:
            print("error: need --max-dim >= 1, --arity-bound >= 0, --workers >= 1", file=sys.stderr)
            return 2, None
    try:
        report = COMMANDS[args.command](args)
    except (InputError, formats.SchemaError, ValueError, KeyError) as e:
        print("error: %s" % (e.args[0] if e.args else e), file=sys.stderr)
        return 2, None
    text = formats.dumps(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    _summary(args.command, report)
    return (0 if report["status"] == "pass" else 1), report


def _summary(command, report):
    bits = [command, report["status"]]
    if "checked" in report:
        bits.append("%d squares checked" % report["checked"])
    if "failures" in report:
        bits.append("%d failures" % len(report["failures"]))
    if "result" in report:
        bits.append(report["result"])
    print(": ".join(bits[:2]) + ("  (" + ", ".join(bits[2:]) + ")" if bits[2:] else ""), file=sys.stderr)


def main(argv=None):
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
