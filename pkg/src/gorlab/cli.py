"""The gorlab command line tool.

Every subcommand prints one JSON document (default) or a plain-text
rendering; both carry the same verdicts.  Exit codes: 0 when every
check passed, 1 when any failed, 2 when something stayed inconclusive.
"""

import argparse
import json
import sys

from .approximation import (
    ApproximationError,
    gprojective_approximation,
    serre_operator,
)
from .duality import (
    report as run_report,
    verify_local_duality_integer,
    verify_serre_duality_field,
)
from .gorenstein import OmegaHatError, dualizing_bimodule, gorenstein_check, omega_hat
from .localization import singular_locus
from .modules import ModuleError
from .serialize import (
    SCHEMA_PREFIX,
    dump_json,
    module_to_json,
    resolve_algebra,
    resolve_module,
)
from .tate import tate_ext

PASS, FAIL, INCONCLUSIVE = 0, 1, 2


def _parse_range(text):
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(
            "range must look like a..b, got %r" % text)
    return int(lo), int(hi)


def _render_text(doc, indent=0, out=None):
    pad = "  " * indent
    if isinstance(doc, dict):
        for key in sorted(doc):
            val = doc[key]
            if isinstance(val, (dict, list)):
                out.append("%s%s:" % (pad, key))
                _render_text(val, indent + 1, out)
            else:
                out.append("%s%s: %s" % (pad, key, val))
    elif isinstance(doc, list):
        for val in doc:
            if isinstance(val, (dict, list)):
                out.append("%s-" % pad)
                _render_text(val, indent + 1, out)
            else:
                out.append("%s- %s" % (pad, val))
    return out


def _emit(doc, args):
    if getattr(args, "text", False):
        print("\n".join(_render_text(doc, out=[])))
    else:
        sys.stdout.write(dump_json(doc))


def _cmd_gorenstein(args):
    algebra = resolve_algebra(args.algebra)
    v = gorenstein_check(algebra, depth=args.depth)
    doc = dict(v.to_json())
    doc["schema"] = "%s/gorenstein/1" % SCHEMA_PREFIX
    doc["algebra"] = algebra.name
    _emit(doc, args)
    if v.status == "Gorenstein":
        return PASS
    if v.status == "NotGorenstein":
        return FAIL
    return INCONCLUSIVE


def _cmd_omega(args):
    algebra = resolve_algebra(args.algebra)
    w = dualizing_bimodule(algebra)
    doc = {
        "schema": "%s/omega/1" % SCHEMA_PREFIX,
        "algebra": algebra.name,
        "rank": w.rank,
        "invariants": repr(w.env_module().r_invariants()),
    }
    code = PASS
    if args.hat:
        try:
            oh = omega_hat(algebra, depth=args.depth)
            ver = oh.verify(depth=args.depth)
            doc["hat"] = {
                "length": oh.length,
                "terms": [
                    {"degree": p, "gens": oh.term(p).gens}
                    for p in range(oh.length + 1)
                ],
                "verification": ver,
            }
            if not ver.get("pass", True):
                code = FAIL
        except OmegaHatError as exc:
            doc["hat"] = {"error": str(exc)}
            code = INCONCLUSIVE
    _emit(doc, args)
    return code


def _cmd_tate(args):
    algebra = resolve_algebra(args.algebra)
    m = resolve_module(args.module_m, algebra)
    n = resolve_module(args.module_n, algebra)
    lo, hi = args.range
    try:
        g = tate_ext(m, n, window=(lo, hi), depth=args.depth)
    except ModuleError as exc:
        _emit({"schema": "%s/tate/1" % SCHEMA_PREFIX,
               "algebra": algebra.name, "error": str(exc)}, args)
        return INCONCLUSIVE
    doc = dict(g.to_json())
    doc["schema"] = "%s/tate/1" % SCHEMA_PREFIX
    doc["algebra"] = algebra.name
    doc["modules"] = [m.as_left().name, n.as_left().name]
    _emit(doc, args)
    return PASS


def _cmd_approx(args):
    algebra = resolve_algebra(args.algebra)
    m = resolve_module(args.module, algebra)
    try:
        tri = gprojective_approximation(m, depth=args.depth)
    except ApproximationError as exc:
        statuses = []
        for item in getattr(exc, "verdicts", []):
            v = item[1] if isinstance(item, tuple) else item
            s = getattr(v, "status", None)
            if s is not None:
                statuses.append(s)
        _emit({"schema": "%s/approx/1" % SCHEMA_PREFIX,
               "algebra": algebra.name, "error": str(exc)}, args)
        return INCONCLUSIVE if "Inconclusive" in statuses else FAIL
    doc = dict(tri.to_json())
    doc["schema"] = "%s/approx/1" % SCHEMA_PREFIX
    doc["algebra"] = algebra.name
    _emit(doc, args)
    return PASS


def _cmd_serre_op(args):
    algebra = resolve_algebra(args.algebra)
    m = resolve_module(args.module, algebra)
    out = serre_operator(m, args.d, depth=args.depth)
    doc = {
        "schema": "%s/serre-op/1" % SCHEMA_PREFIX,
        "algebra": algebra.name,
        "d": args.d,
        "module": m.as_left().name,
        "result": module_to_json(out),
        "invariants": repr(out.r_invariants()),
    }
    _emit(doc, args)
    return PASS


def _cmd_singular_locus(args):
    algebra = resolve_algebra(args.algebra)
    sites = singular_locus(algebra, depth=args.depth)
    doc = {
        "schema": "%s/singular-locus/1" % SCHEMA_PREFIX,
        "algebra": algebra.name,
        "sites": [s.to_json() for s in sites],
    }
    _emit(doc, args)
    if any(s.status == "probably singular" for s in sites):
        return INCONCLUSIVE
    return PASS


_EXIT_BY_VERDICT = {"pass": PASS, "fail": FAIL, "inconclusive": INCONCLUSIVE}


def _cmd_verify_serre(args):
    algebra = resolve_algebra(args.algebra)
    m = resolve_module(args.module_m, algebra)
    n = resolve_module(args.module_n, algebra)
    rep = verify_serre_duality_field(
        algebra, m, n, window=args.range, depth=args.depth)
    _emit(rep.to_json(), args)
    return _EXIT_BY_VERDICT[rep.verdict]


def _cmd_verify_local(args):
    algebra = resolve_algebra(args.algebra)
    m = resolve_module(args.module_m, algebra)
    n = resolve_module(args.module_n, algebra)
    rep = verify_local_duality_integer(
        algebra, m, n, args.prime, window=args.range, depth=args.depth)
    _emit(rep.to_json(), args)
    return _EXIT_BY_VERDICT[rep.verdict]


def _cmd_report(args):
    algebra = resolve_algebra(args.algebra)
    config = {}
    if args.config:
        with open(args.config, "r", encoding="utf-8") as fh:
            config = json.load(fh)
    doc = run_report(algebra, config)
    _emit(doc, args)
    return _EXIT_BY_VERDICT[doc["verdict"]]


def build_parser():
    ap = argparse.ArgumentParser(
        prog="gorlab",
        description="Gorenstein homological calculations on finite algebras")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, depth=12):
        p.add_argument("--depth", type=int, default=depth,
                       help="search depth for resolutions and verdicts")
        mode = p.add_mutually_exclusive_group()
        mode.add_argument("--json", dest="text", action="store_false",
                          help="JSON output (default)")
        mode.add_argument("--text", dest="text", action="store_true",
                          help="plain text rendering")
        p.set_defaults(text=False)

    p = sub.add_parser("gorenstein", help="Gorenstein verdict for an algebra")
    p.add_argument("algebra")
    common(p)
    p.set_defaults(fn=_cmd_gorenstein)

    p = sub.add_parser("omega", help="the dualizing bimodule, optionally its"
                                     " perfect replacement")
    p.add_argument("algebra")
    p.add_argument("--hat", action="store_true",
                   help="also build and verify the perfect complex")
    common(p, depth=8)
    p.set_defaults(fn=_cmd_omega)

    p = sub.add_parser("tate", help="Tate cohomology over a degree window")
    p.add_argument("algebra")
    p.add_argument("module_m")
    p.add_argument("module_n")
    p.add_argument("--range", type=_parse_range, default=(-4, 4),
                   help="degree window a..b")
    common(p, depth=8)
    p.set_defaults(fn=_cmd_tate)

    p = sub.add_parser("approx", help="Gorenstein projective approximation")
    p.add_argument("algebra")
    p.add_argument("module")
    common(p, depth=8)
    p.set_defaults(fn=_cmd_approx)

    p = sub.add_parser("serre-op", help="the Serre operator on a module")
    p.add_argument("algebra")
    p.add_argument("module")
    p.add_argument("--d", type=int, choices=(0, 1), required=True,
                   help="base dimension at the site: 0 field, 1 integers")
    common(p, depth=8)
    p.set_defaults(fn=_cmd_serre_op)

    p = sub.add_parser("singular-locus", help="sites with a non-perfect simple")
    p.add_argument("algebra")
    common(p)
    p.set_defaults(fn=_cmd_singular_locus)

    pv = sub.add_parser("verify", help="duality verifications")
    vsub = pv.add_subparsers(dest="verify_command", required=True)

    p = vsub.add_parser("serre", help="Serre duality over a field")
    p.add_argument("algebra")
    p.add_argument("module_m")
    p.add_argument("module_n")
    p.add_argument("--range", type=_parse_range, default=(-3, 3))
    common(p, depth=8)
    p.set_defaults(fn=_cmd_verify_serre)

    p = vsub.add_parser("local", help="local duality at an integer prime")
    p.add_argument("algebra")
    p.add_argument("module_m")
    p.add_argument("module_n")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--range", type=_parse_range, default=(-2, 2))
    common(p, depth=8)
    p.set_defaults(fn=_cmd_verify_local)

    p = sub.add_parser("report", help="aggregated verification run")
    p.add_argument("algebra")
    p.add_argument("--config", help="JSON config file selecting checks")
    common(p, depth=8)
    p.set_defaults(fn=_cmd_report)

    return ap


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    merged = []
    skip = False
    for i, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        # glue "--range -3..3" into one token so argparse does not read
        # the negative bound as an option
        if tok == "--range" and i + 1 < len(argv):
            merged.append("--range=%s" % argv[i + 1])
            skip = True
        else:
            merged.append(tok)
    args = build_parser().parse_args(merged)
    try:
        return args.fn(args)
    except (ModuleError, ApproximationError, ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return FAIL


if __name__ == "__main__":
    sys.exit(main())
