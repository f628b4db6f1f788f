"""Command-line front end.

    gpperiods decide -i FILE [--json]
    gpperiods epsilon -i FILE --target {as,component}
    gpperiods enumerate --q Q --shapes LIST --max-report N [--check]
    gpperiods zeta --satake A,B --q Q --terms M

Exit codes: 0 success, 2 invalid input, 3 unsupported case, 1 internal fault.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from fractions import Fraction

import jsonschema

from .algnum import AlgNumber, zeta
from .asai import asai_of_component, asai_parameter
from .decider import (
    RULES,
    EnumBounds,
    GPInput,
    InconsistencyError,
    PeriodReport,
    decide_period,
    enumerate_cases,
    exceptional_overlap,
    extend_character,
    hom_dim_component,
)
from .epsilon import epsilon_sign, epsilon_wd
from .langlands import (
    Kind,
    langlands_parameter,
    principal_series,
    sigma_twist,
    steinberg_twist,
    supercuspidal,
    twist,
)
from .localfield import (
    EtaleCubicAlgebra,
    GPError,
    LocalField,
    Shape,
    UnsupportedCase,
    ValidationError,
    build_character,
    default_level,
    discriminant_character,
    evaluate_at_minus_one,
)
from .zetalab import SatakeData, matches_asai, reconstruct_L_factor, zeta_series

_CHAR = {
    "type": "object",
    "properties": {
        "k": {"type": "integer"},
        "u": {
            "oneOf": [
                {"type": "integer", "not": {"const": 0}},
                {"type": "string", "pattern": r"^-?(zeta\d+(\^-?\d+)?|\d+(/\d+)?|i)$"},
            ]
        },
    },
    "required": ["k"],
    "additionalProperties": False,
}

INSTANCE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "period problem instance",
    "type": "object",
    "properties": {
        "field": {
            "type": "object",
            "properties": {"p": {"type": "integer", "minimum": 3}, "f": {"type": "integer", "minimum": 1}},
            "required": ["p", "f"],
            "additionalProperties": False,
        },
        "algebra": {
            "type": "object",
            "properties": {
                "shape": {"enum": [s.value for s in Shape]},
                "extension": {"enum": ["unramified", "ramified"]},
                "presentation": {"enum": ["square", "nonsquare"]},
            },
            "required": ["shape"],
            "additionalProperties": False,
        },
        "components": {
            "type": "array",
            "minItems": 1,
            "maxItems": 3,
            "items": {
                "type": "object",
                "properties": {
                    "kind": {"enum": [k.value for k in Kind]},
                    "alpha": _CHAR,
                    "beta": _CHAR,
                    "chi": _CHAR,
                    "label": {"type": "string"},
                    "dim": {"const": 2},
                    "det": _CHAR,
                    "eps_sign": {"enum": [1, -1]},
                    "eps_twists": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "properties": {"chi": _CHAR, "eps_sign": {"enum": [1, -1]}},
                            "required": ["chi", "eps_sign"],
                            "additionalProperties": False,
                        },
                    },
                    "dihedral": {
                        "type": "object",
                        "properties": {
                            "extension": {"enum": ["unramified", "ramified"]},
                            "presentation": {"enum": ["square", "nonsquare"]},
                            "theta": _CHAR,
                        },
                        "required": ["extension", "theta"],
                        "additionalProperties": False,
                    },
                },
                "required": ["kind"],
                "additionalProperties": False,
                "allOf": [
                    {"if": {"properties": {"kind": {"const": "principal_series"}}},
                     "then": {"required": ["alpha", "beta"]}},
                    {"if": {"properties": {"kind": {"enum": ["sigma_twist", "steinberg_twist"]}}},
                     "then": {"required": ["chi"]}},
                    {"if": {"properties": {"kind": {"const": "supercuspidal"}}},
                     "then": {"anyOf": [{"required": ["dihedral"]}, {"required": ["label", "det"]}]}},
                ],
            },
        },
        "psi_level": {"const": 0},
        "asai_eps_sign": {"enum": [1, -1]},
    },
    "required": ["field", "algebra", "components"],
    "additionalProperties": False,
}

_ZETA = re.compile(r"^(-?)zeta(\d+)(?:\^(-?\d+))?$")


def parse_number(s) -> AlgNumber:
    """Integers, fractions, i, zetaN and zetaN^j (optionally negated)."""
    if isinstance(s, int):
        return AlgNumber.rational(s)
    s = str(s).strip()
    m = _ZETA.match(s)
    if m:
        out = zeta(int(m.group(2)), int(m.group(3) or 1))
        return -out if m.group(1) else out
    if s in ("i", "-i"):
        return zeta(4, 1 if s == "i" else 3)
    try:
        return AlgNumber.rational(Fraction(s))
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"cannot parse number {s!r}") from None


def _char(fld, d):
    return build_character(fld, d["k"], parse_number(d.get("u", 1)))


def _component(fld, d):
    kind = d["kind"]
    if kind == "principal_series":
        return principal_series(_char(fld, d["alpha"]), _char(fld, d["beta"]))
    if kind == "sigma_twist":
        return sigma_twist(_char(fld, d["chi"]))
    if kind == "steinberg_twist":
        return steinberg_twist(_char(fld, d["chi"]))
    dih = None
    if "dihedral" in d:
        if fld.base is not None:
            raise UnsupportedCase("dihedral supercuspidals are supported over the base field only")
        dd = d["dihedral"]
        ext = fld.extension(2, dd["extension"], dd.get("presentation", "square"))
        dih = (ext, _char(ext, dd["theta"]))
    omega = _char(fld, d["det"]) if "det" in d else None
    twists = [(_char(fld, t["chi"]), t["eps_sign"]) for t in d.get("eps_twists", [])]
    return supercuspidal(fld, d.get("label", "sc"), omega=omega, eps_sign=d.get("eps_sign"),
                         eps_twists=twists, dihedral=dih)


def parse_instance(doc: dict) -> GPInput:
    try:
        jsonschema.validate(doc, INSTANCE_SCHEMA)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(x) for x in exc.absolute_path) or "<root>"
        raise ValidationError(f"schema: {path}: {exc.message}") from None
    p, f = doc["field"]["p"], doc["field"]["f"]
    alg = doc["algebra"]
    shape = Shape(alg["shape"])
    level = 0
    if shape == Shape.CUBIC_FIELD:
        level = math.lcm(default_level(p, f), p ** (3 * f) - 1)
    F = LocalField(p, f, level)
    ext = None
    if shape != Shape.SPLIT3:
        deg = 2 if shape == Shape.QUAD_TIMES_F else 3
        ext = F.extension(deg, alg.get("extension", "unramified"), alg.get("presentation", "square"))
    A = EtaleCubicAlgebra(shape, F, ext)
    fields = A.component_fields
    if len(doc["components"]) != len(fields):
        raise ValidationError(f"{shape.value} needs {len(fields)} components")
    comps = [_component(L, d) for L, d in zip(fields, doc["components"])]
    return GPInput(A, comps, doc.get("asai_eps_sign"), doc.get("psi_level", 0))


def _load(path: str) -> dict:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path} is not valid JSON: {exc}") from None
    # a saved report carries its instance; deciding it again must reproduce it
    if isinstance(doc, dict) and "instance" in doc and "dim_H" in doc:
        doc = doc["instance"]
    return doc


def report_document(doc: dict, rep: PeriodReport) -> dict:
    return {**rep.to_dict(), "instance": doc}


def format_report(inp: GPInput, rep: PeriodReport) -> str:
    comps = " x ".join(str(c) for c in inp.components)
    sign = {1: "+1", -1: "-1", None: "unknown"}[rep.eps_sign]
    lines = [
        f"algebra     {inp.algebra.shape.value} over q = {inp.algebra.base.q}"
        + (f", {inp.algebra.ext}" if inp.algebra.ext is not None else ""),
        f"Pi          {comps}",
        f"dim_H       {rep.dim_H}",
        f"dim_H'      {rep.dim_Hprime}",
        f"eps sign    {sign} ({rep.eps_source})",
        f"JL nonzero  {rep.jl_nonzero}",
        f"case        {rep.case_tag}",
        f"relevance   {rep.relevance}",
        "citations:",
    ]
    lines += [f"  [{r}] {RULES[r]}" for r in rep.citations]
    return "\n".join(lines)


def cmd_decide(args) -> int:
    doc = _load(args.input)
    inp = parse_instance(doc)
    rep = decide_period(inp)
    if args.json:
        print(json.dumps(report_document(doc, rep), indent=2))
    else:
        print(format_report(inp, rep))
    return 0


def cmd_epsilon(args) -> int:
    inp = parse_instance(_load(args.input))
    if args.target == "as":
        rho = asai_parameter(inp.algebra, inp.components)
        eps = epsilon_wd(rho)
        w = evaluate_at_minus_one(discriminant_character(inp.algebra))
        print(f"As(Pi)                 {rho}")
        print(f"eps(As Pi)             {eps}")
        print(f"omega_A(-1)            {w}")
        print(f"eps(As Pi) omega_A(-1) {epsilon_sign(eps * w):+d}")
    else:
        for i, pi in enumerate(inp.components):
            rho = langlands_parameter(pi)
            print(f"[{i}] {pi}: rho = {rho}; eps = {epsilon_wd(rho)}; As = {asai_of_component(pi)}")
    return 0


def check_instance(inp: GPInput, rep: PeriodReport) -> list[str]:
    """Invariant failures for one decided instance (empty when all hold)."""
    bad = []
    if rep.dim_H + rep.dim_Hprime != 1:
        bad.append("dim_H + dim_H' != 1")
    if not rep.jl_nonzero and rep.dim_Hprime != 0:
        bad.append("dim_H' nonzero without a JL transfer")
    if rep.eps_source == "constructive" and rep.eps_sign is not None:
        if (rep.eps_sign == 1) != (rep.dim_H == 1):
            bad.append("structural and constructive signs disagree")
    if rep.case_tag == "split.sigma" and rep.eps_source == "constructive" and rep.eps_sign != 1:
        bad.append("Sigma component but eps sign is not +1")
    if rep.case_tag == "quad.a":
        pi, sigma = inp.components
        if pi.kind == Kind.PRINCIPAL_SERIES:
            lift = extend_character(sigma.chi, inp.algebra.ext)
            if lift is not None:
                pi0 = twist(pi, lift)
                both = hom_dim_component(pi0, "steinberg") + hom_dim_component(pi0, "trivial")
                if both != 1 and not exceptional_overlap(pi0):
                    bad.append("Steinberg/trivial dichotomy fails")
    return bad


def cmd_enumerate(args) -> int:
    shapes = [s.strip() for s in args.shapes.split(",") if s.strip()]
    for s in shapes:
        if s not in {x.value for x in Shape}:
            raise ValidationError(f"unknown shape {s!r}")
    bounds = EnumBounds(max_per_algebra=args.max_per_algebra)
    total = held = 0
    for inp in enumerate_cases(args.q, shapes, bounds):
        try:
            rep = decide_period(inp)
            bad = check_instance(inp, rep) if args.check else []
        except InconsistencyError as exc:
            rep, bad = None, [str(exc)]
        total += 1
        held += not bad
        if total <= args.max_report and rep is not None:
            comps = " x ".join(str(c) for c in inp.components)
            print(f"{total:4d} {inp.algebra.shape.value:13s} {comps:45s} "
                  f"({rep.dim_H},{rep.dim_Hprime}) {rep.case_tag}")
        for b in bad:
            print(f"FAIL #{total}: {b}", file=sys.stderr)
    print(f"instances: {total}")
    if args.check:
        print(f"dichotomy holds: {held}/{total}")
        return 0 if held == total else 1
    return 0


def cmd_zeta(args) -> int:
    parts = args.satake.split(",")
    if len(parts) != 2:
        raise ValidationError("--satake takes two values A,B")
    sd = SatakeData(parse_number(parts[0]), parse_number(parts[1]), args.q)
    ts = zeta_series(sd, args.terms)
    L = reconstruct_L_factor(ts, args.max_deg)
    ok = matches_asai(sd, L)
    print(f"Z(W, Phi, s) = {L}   (checked through X^{ts.order})")
    print(f"reciprocal roots vs Frobenius eigenvalues of As(a + b): {'match' if ok else 'MISMATCH'}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gpperiods", description="GL(2) period dimensions over cubic etale algebras")
    sub = ap.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decide", help="decide dim_H and dim_H' for an instance")
    d.add_argument("-i", "--input", required=True)
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_decide)

    e = sub.add_parser("epsilon", help="epsilon factors of an instance")
    e.add_argument("-i", "--input", required=True)
    e.add_argument("--target", choices=["as", "component"], default="as")
    e.set_defaults(func=cmd_epsilon)

    n = sub.add_parser("enumerate", help="enumerate instances and check invariants")
    n.add_argument("--q", type=int, required=True)
    n.add_argument("--shapes", default="split3,quad_times_f,cubic_field")
    n.add_argument("--max-report", type=int, default=20)
    n.add_argument("--max-per-algebra", type=int, default=None)
    n.add_argument("--check", action="store_true")
    n.set_defaults(func=cmd_enumerate)

    z = sub.add_parser("zeta", help="reconstruct the Asai L-factor from the zeta integral")
    z.add_argument("--satake", required=True, help="A,B e.g. 1,1 or zeta12^5,i")
    z.add_argument("--q", type=int, required=True)
    z.add_argument("--terms", type=int, default=40)
    z.add_argument("--max-deg", type=int, default=4)
    z.set_defaults(func=cmd_zeta)
    return ap


def run_command(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UnsupportedCase as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return 3
    except GPError as exc:
        print(f"internal fault: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
