"""Command-line front end.

Exit codes: 0 when every check matches, 1 on a mismatch, 2 on a usage error.
"""

import argparse
import hashlib
import json
import sys

from .field import Scalar, format_scalar, sc_arith
from .groups import (
    Word, rho_235, enumerate_image, verify_relations, circle_weight, adjoint_rep,
    sym_power_rep_of, trivial_rep,
)
from .cohomology import cochain_maps, cohomology_dims
from .laurent import tl_substitute3
from .serialize import (
    SchemaError, dumps, scalar_to_json, to_json, presentation_to_json, presentation_from_json, spec_from_json,
)
from .surgery import (
    SurgerySpec, STANDING_HYPOTHESIS, z_theta_surgery, cyclic_lift_value, independence_certificate,
    surgery_coefficient,
)
from .theta import embed_class, w_scalar, f_poly
from . import repro

SURGERY_LABEL = "value of Z_Theta under the surgery formula"


class UsageError(Exception):
    pass


def _table(rows, header=None):
    rows = [[str(c) for c in r] for r in rows]
    if header:
        rows = [list(header)] + rows
    if not rows:
        return ""
    widths = [max(len(r[k]) for r in rows) for k in range(len(rows[0]))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    if header:
        lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _emit(args, payload, table, ok=True):
    if args.json:
        payload = dict(payload)
        payload["table"] = table
        print(dumps(payload))
    else:
        print(table)
    return 0 if ok else 1


def _scalar_arg(text):
    try:
        return Scalar.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse scalar {text!r}: {exc}") from None


def _variant(args):
    return int(args.rep[1])


# -- field ----------------------------------------------------------------

def cmd_field(args):
    x = _scalar_arg(args.x)
    if args.op in ("conj", "show", "inv"):
        if args.y is not None:
            raise UsageError(f"'{args.op}' takes one operand")
        if args.op == "conj":
            r = x.conj()
        elif args.op == "inv":
            if x.is_zero():
                raise UsageError("zero has no inverse")
            r = x.inverse()
        else:
            r = x
    else:
        if args.y is None:
            raise UsageError(f"'{args.op}' takes two operands")
        try:
            r = sc_arith(args.op, x, _scalar_arg(args.y))
        except ZeroDivisionError:
            raise UsageError("division by zero") from None
    return _emit(args, {"result": scalar_to_json(r)}, format_scalar(r))


# -- theta ----------------------------------------------------------------

def cmd_theta(args):
    if args.action == "fpoly":
        if len(args.values) != 1:
            raise UsageError("fpoly takes one integer p")
        p = args.values[0]
        f = f_poly(p)
        g = tl_substitute3(f, 0, 1, 3)
        payload = {"p": p, "f_p": to_json(f), "substituted": to_json(g)}
        table = _table([["f_p", f], ["f_p(1,x,x^3)", g], ["extremal", f"{g.max_degree()}, {g.min_degree()}"]])
        return _emit(args, payload, table)
    if len(args.values) != 3:
        raise UsageError("w takes three integers a b c")
    a, b, c = args.values
    cls = w_scalar(args.eps, a, b, c)
    img = embed_class(cls)
    payload = {"class": to_json(cls), "image": to_json(img)}
    table = _table([["W(Theta(t^a,t^b,t^c))", cls], ["image", img]])
    return _emit(args, payload, table)


# -- rep ------------------------------------------------------------------

def cmd_rep(args):
    rho = rho_235(_variant(args))
    pres = rho.presentation
    rels = verify_relations(rho, pres)
    size = enumerate_image(rho)
    rows = []
    for k, name in enumerate(pres.generators):
        m = rho.images[k]
        entries = "[" + "; ".join(", ".join(format_scalar(x) for x in r) for r in m.entries) + "]"
        rows.append([name, entries, format_scalar(m.trace()), format_scalar(circle_weight(m))])
    table = _table(rows, ["gen", "matrix", "trace", "circle weight"])
    table += "\n" + _table([[pres.format(r), "ok" if v else "FAIL"] for r, v in zip(pres.relators, rels)],
                           ["relator", "holds"])
    table += f"\nimage size: {len(size)}"
    payload = {
        "rep": args.rep,
        "presentation": presentation_to_json(pres),
        "images": [to_json(m) for m in rho.images],
        "relators_hold": rels,
        "image_size": len(size),
    }
    return _emit(args, payload, table, all(rels) and len(size) == 120)


# -- cohomology -----------------------------------------------------------

def _coeff_rep(rho, name):
    if name == "adjoint":
        return adjoint_rep(rho)
    if name == "trivial":
        return trivial_rep(rho.presentation)
    return sym_power_rep_of(rho, int(name[3:]))


def cmd_cohomology(args):
    rho = rho_235(_variant(args))
    pres = rho.presentation
    if args.presentation:
        try:
            with open(args.presentation, encoding="utf-8") as fh:
                pres = presentation_from_json(json.load(fh))
        except (OSError, json.JSONDecodeError, SchemaError) as exc:
            raise UsageError(f"bad presentation file: {exc}") from None
        if pres.generators != rho.presentation.generators:
            raise UsageError("presentation generators must be x1 x2 x3 h")
    coeff = _coeff_rep(rho, args.coeff)
    try:
        cm = cochain_maps(pres, coeff)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    h0, h1 = cohomology_dims(cm)
    digest = hashlib.sha256(json.dumps(presentation_to_json(pres), sort_keys=True).encode()).hexdigest()
    payload = {"h0": h0, "h1": h1, "coefficient-system": f"{args.coeff}({args.rep})", "presentation-hash": digest}
    if args.matrices:
        payload["d0"] = to_json(cm.d0)
        payload["d1"] = to_json(cm.d1)
    table = _table([
        ["coefficients", payload["coefficient-system"]],
        ["h0", h0],
        ["h1", h1],
        ["homology", "inferred by duality, not computed"],
        ["presentation sha256", digest[:16]],
    ])
    return _emit(args, payload, table)


# -- ztheta ---------------------------------------------------------------

def _parse_dec(text):
    word, sep, exp = text.rpartition(":")
    if not sep:
        word, exp = text, "0"
    try:
        return word.strip() or "1", int(exp)
    except ValueError:
        raise UsageError(f"bad decoration {text!r}; expected 'WORD:EXP'") from None


def _spec_from_args(args):
    if not args.dec or len(args.dec) != 3:
        raise UsageError("exactly three --dec WORD:EXP options are required")
    try:
        return SurgerySpec(args.eps, tuple(_parse_dec(d) for d in args.dec), _variant(args))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _image_table(spec, img, extra=()):
    rows = [["surgery", spec.describe()], ["coefficient", format_scalar(surgery_coefficient(spec))],
            ["image", img]] + list(extra)
    rows += [["label", SURGERY_LABEL], ["hypothesis", STANDING_HYPOTHESIS]]
    return _table(rows)


def cmd_ztheta(args):
    if args.action == "eval":
        spec = _spec_from_args(args)
        img = z_theta_surgery(spec)
        payload = {"label": SURGERY_LABEL, "spec": to_json(spec), "image": to_json(img),
                   "hypotheses": [STANDING_HYPOTHESIS]}
        return _emit(args, payload, _image_table(spec, img))
    if args.action == "lift":
        if args.r is None or args.r < 1:
            raise UsageError("--r must be a positive integer")
        spec = _spec_from_args(args)
        (w0, a0), (g, p), (h, q) = spec.decorations
        if len(w0) or a0:
            raise UsageError("the cyclic-cover rule needs the first decoration to be 1:0")
        img = cyclic_lift_value(g, h, p, q, args.r, spec.eps, spec.variant)
        payload = {"label": SURGERY_LABEL, "spec": to_json(spec), "r": args.r, "image": to_json(img),
                   "hypotheses": [STANDING_HYPOTHESIS]}
        return _emit(args, payload, _image_table(spec, img, [["cover degree", args.r]]))
    # cert
    if not args.file:
        raise UsageError("cert needs --file specs.json")
    try:
        with open(args.file, encoding="utf-8") as fh:
            raw = json.load(fh)
        if isinstance(raw, dict):
            raw = raw.get("specs")
        if not isinstance(raw, list):
            raise SchemaError("expected a list of surgery specs")
        specs = [spec_from_json(s, f"$[{n}]") for n, s in enumerate(raw)]
        cert = independence_certificate(specs)
    except (OSError, json.JSONDecodeError, SchemaError, ValueError) as exc:
        raise UsageError(f"bad spec file: {exc}") from None
    rows = [[s.describe(), format_scalar(surgery_coefficient(s))] for s in cert.inputs]
    table = _table(rows, ["surgery", "coefficient"])
    table += "\n" + _table([
        ["rank (full)", cert.rank_full],
        ["rank (cokernel)", cert.rank_coker],
        ["conclusion", cert.conclusion],
        ["hypothesis", STANDING_HYPOTHESIS],
    ])
    return _emit(args, {"certificate": to_json(cert)}, table)


# -- repro ----------------------------------------------------------------

def cmd_repro(args):
    names = args.cases or list(repro.CASES)
    unknown = [c for c in names if c not in repro.CASES]
    if unknown:
        raise UsageError(f"unknown repro case(s): {', '.join(unknown)}")
    reports = [repro.run_repro(c) for c in names]
    rows = [[r.case, r.provenance, "match" if r.match else "MISMATCH"] for r in reports]
    table = _table(rows, ["case", "source", "result"])
    payload = {"reports": [r.to_json(with_runtime=False) for r in reports]}
    return _emit(args, payload, table, all(r.match for r in reports))


# -- parser ---------------------------------------------------------------

def _globals(parser, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--json", action="store_true", default=d(False), help="emit JSON")
    parser.add_argument("--rep", choices=("v1", "v2"), default=d("v1"), help="which representation of pi_1")
    parser.add_argument("--eps", type=int, choices=(0, 1), default=d(0), help="parity")


def build_parser(prog="thetainv"):
    parser = argparse.ArgumentParser(prog=prog, description="Exact Theta-graph invariant calculations.")
    _globals(parser, False)
    common = argparse.ArgumentParser(add_help=False)
    _globals(common, True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", parents=[common], help="arithmetic in Q(i, sqrt5)")
    p.add_argument("op", choices=("add", "sub", "mul", "div", "conj", "inv", "show"))
    p.add_argument("x")
    p.add_argument("y", nargs="?")
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("theta", parents=[common], help="the f_p family and the W map on scalar decorations")
    p.add_argument("action", choices=("fpoly", "w"))
    p.add_argument("values", type=int, nargs="+")
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("rep", parents=[common], help="the SU(2) representation and its checks")
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("cohomology", parents=[common], help="twisted H^0, H^1 via Fox calculus")
    p.add_argument("--coeff", choices=("adjoint", "sym2", "sym4", "trivial"), default="adjoint")
    p.add_argument("--matrices", action="store_true", help="include d0 and d1 in the JSON output")
    p.add_argument("--presentation", help="presentation JSON file (generators x1 x2 x3 h)")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("ztheta", parents=[common], help="surgery values and independence certificates")
    p.add_argument("action", choices=("eval", "lift", "cert"))
    p.add_argument("--dec", action="append", help="edge decoration WORD:EXP, given three times")
    p.add_argument("--r", type=int, help="cover degree for 'lift'")
    p.add_argument("--file", help="JSON list of surgery specs for 'cert'")
    p.set_defaults(func=cmd_ztheta)

    p = sub.add_parser("repro", parents=[common], help="recompute the published numbers")
    p.add_argument("cases", nargs="*", help=f"subset of: {', '.join(repro.CASES)}")
    p.set_defaults(func=cmd_repro)
    return parser


def main(argv=None, prog="thetainv"):
    parser = build_parser(prog)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{prog}: error: {exc}", file=sys.stderr)
        return 2


def ztheta_main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    return main(["ztheta"] + list(argv), prog="ztheta")


def entry():
    sys.exit(main())


def ztheta_entry():
    sys.exit(ztheta_main())


if __name__ == "__main__":
    entry()
