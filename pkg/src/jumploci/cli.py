"""Command-line front end.

Subcommands route to the library and emit deterministic JSON (default) or a
short text report.  All rationals appear as strings "p/q"; output is
byte-identical across runs for identical inputs.

Exit codes: 0 success, 1 domain error (a JSON error object is printed),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .fox import (abelianize, alexander_matrix, contains_translated_torus,
                  depth1_membership, parse_presentation)
from .laurent import LaurentPoly
from .omega import (fpk_report, nonopen_witness, omega1_r1_description,
                    omega_codim1_closed_form, omega_membership)
from .qlinalg import (PluckerVector, RationalSubspace, clear_denominators,
                      format_rational, parse_rational, schubert_equations)
from .tcone import (DEFAULT_SUPPORT_LIMIT, SubspaceArrangement,
                    tangent_cone_description, tangent_cone_polys)
from .tori import GradedDescription, VarietyDescription


# ---------------------------------------------------------------------------
# input plumbing
# ---------------------------------------------------------------------------

def _load_json(value: str):
    """Inline JSON if the value looks like JSON, else a file path."""
    stripped = value.strip()
    if stripped.startswith("{") or stripped.startswith("["):
        return json.loads(stripped)
    with open(value, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _parse_subspace(data, ambient_dim: Optional[int] = None) -> RationalSubspace:
    """Rows, or {"basis": rows}; entries are "p/q" strings or integers."""
    if isinstance(data, dict):
        rows = data["basis"]
        if ambient_dim is None and "n" in data:
            ambient_dim = int(data["n"])
    else:
        rows = data
    parsed = [[parse_rational(str(x)) for x in row] for row in rows]
    if ambient_dim is None:
        if not parsed:
            raise ValueError("cannot infer ambient dimension of an empty basis")
        ambient_dim = len(parsed[0])
    return RationalSubspace.from_rows(parsed, ambient_dim)


def _subspace_rows(space: RationalSubspace) -> list[list[str]]:
    return [[format_rational(x) for x in row] for row in space.basis]


def _parse_polys(texts: Sequence[str]) -> list[LaurentPoly]:
    probe = [LaurentPoly.parse(t) for t in texts]
    n = max((f.num_vars for f in probe), default=0)
    return [LaurentPoly.parse(t, num_vars=n) for t in texts]


def _arrangement_payload(arr: SubspaceArrangement) -> dict:
    payload = arr.to_json()
    payload["projective_points"] = [
        list(clear_denominators(s.basis[0]))
        for s in arr.subspaces if s.dim == 1]
    return payload


def _arrangement_text(arr: SubspaceArrangement) -> list[str]:
    if arr.empty:
        return ["tangent cone: empty (the identity is not on the variety)"]
    lines = [f"tangent cone: {len(arr.subspaces)} subspace(s) in Q^{arr.ambient_dim}"]
    for s in arr.subspaces:
        if s.dim == 0:
            lines.append("  {0}")
        elif s.dim == 1:
            lines.append("  line through "
                         f"{list(clear_denominators(s.basis[0]))}")
        else:
            rows = "; ".join(str([format_rational(x) for x in row])
                             for row in s.basis)
            lines.append(f"  dim {s.dim}: span of {rows}")
    return lines


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (json_payload, text_lines)
# ---------------------------------------------------------------------------

def _cmd_alexander(args) -> tuple[dict, list[str]]:
    pres = parse_presentation(args.pres)
    ab = abelianize(pres)
    matrix = alexander_matrix(pres, ab)
    payload = {
        "generators": list(pres.generator_names),
        "free_rank": ab.free_rank,
        "torsion_invariants": list(ab.torsion_invariants),
        "matrix": matrix.to_json(),
        "matrix_text": [[e.to_text() for e in row] for row in matrix.entries],
    }
    lines = [f"generators: {', '.join(pres.generator_names)}",
             f"free rank: {ab.free_rank}",
             f"torsion invariants: {list(ab.torsion_invariants)}"]
    for row in matrix.entries:
        lines.append("  [" + ",  ".join(e.to_text() for e in row) + "]")
    return payload, lines


def _cmd_tcone(args) -> tuple[dict, list[str]]:
    if args.poly:
        polys = _parse_polys(args.poly)
        arr = tangent_cone_polys(polys, max_support=args.max_support)
    else:
        desc = VarietyDescription.from_json(_load_json(args.desc))
        arr = tangent_cone_description(desc)
    return _arrangement_payload(arr), _arrangement_text(arr)


def _cmd_charvar_check(args) -> tuple[dict, list[str]]:
    pres = parse_presentation(args.pres)
    ab = abelianize(pres)
    desc = VarietyDescription.from_json(_load_json(args.desc))
    if desc.ambient_dim != ab.free_rank:
        raise ValueError(
            f"description lives in Q^{desc.ambient_dim} but the presentation "
            f"has free rank {ab.free_rank}")
    reports = []
    for comp in desc.components:
        generic = contains_translated_torus(pres, comp)
        at_translate = depth1_membership(pres, comp.translate)
        reports.append({
            "component": comp.to_json(),
            "generic_contained": generic,
            "translate_in_locus": at_translate,
        })
    verified = all(r["generic_contained"] and r["translate_in_locus"]
                   for r in reports)
    payload = {"verified": verified, "components": reports}
    lines = [f"verified: {verified}"]
    for i, r in enumerate(reports):
        lines.append(f"  component {i}: generic={r['generic_contained']} "
                     f"translate={r['translate_in_locus']}")
    return payload, lines


def _cmd_omega_test(args) -> tuple[dict, list[str]]:
    desc = VarietyDescription.from_json(_load_json(args.desc))
    plane = _parse_subspace(_load_json(args.plane), desc.ambient_dim)
    if args.r is not None and plane.dim != args.r:
        raise ValueError(f"plane has dimension {plane.dim}, expected r={args.r}")
    verdict = omega_membership(desc, plane)
    payload = verdict.to_json()
    payload["plane"] = _subspace_rows(plane)
    if verdict.member:
        lines = ["member: the cover determined by this plane has finite "
                 "Betti numbers"]
    else:
        lines = [f"blocked by {len(verdict.blockers)} component(s):"]
        for comp, reason in verdict.blockers:
            lines.append(f"  {comp.to_json()} ({reason})")
    return payload, lines


def _cmd_omega_describe(args) -> tuple[dict, list[str]]:
    if args.r == 1:
        if args.poly:
            arr = tangent_cone_polys(_parse_polys(args.poly),
                                     max_support=args.max_support)
        else:
            desc = VarietyDescription.from_json(_load_json(args.desc))
            arr = tangent_cone_description(desc)
        excluded = omega1_r1_description(arr)
        payload = {
            "r": 1,
            "ambient_dim": arr.ambient_dim,
            "excluded_subspaces": [_subspace_rows(s) for s in excluded],
            "excluded_projective_points": [
                list(clear_denominators(s.basis[0]))
                for s in excluded if s.dim == 1],
        }
        if not excluded:
            lines = ["every line survives: the set is all of projective space"]
        else:
            lines = [f"{len(excluded)} excluded projective subspace(s):"]
            for s in excluded:
                if s.dim == 1:
                    lines.append(f"  point {list(clear_denominators(s.basis[0]))}")
                else:
                    lines.append(f"  P(L) for dim-{s.dim} L = {_subspace_rows(s)}")
        return payload, lines
    if not args.desc:
        raise ValueError("closed forms for r >= 2 require --desc")
    desc = VarietyDescription.from_json(_load_json(args.desc))
    verdict = omega_codim1_closed_form(desc, args.r)
    payload = verdict.to_json()
    if verdict.kind == "all":
        lines = [f"all r={args.r} planes are members"]
    elif verdict.kind == "empty":
        lines = [f"no r={args.r} plane is a member"]
    else:
        lines = [f"members are exactly the r={args.r} planes inside "
                 f"{_subspace_rows(verdict.subspace)}"]
    return payload, lines


def _cmd_schubert_eqs(args) -> tuple[dict, list[str]]:
    space = _parse_subspace(_load_json(args.space))
    forms = schubert_equations(space, args.r)
    subsets = PluckerVector.subset_order(space.ambient_dim, args.r)
    payload = {
        "r": args.r,
        "n": space.ambient_dim,
        "subsets": [list(s) for s in subsets],
        "forms": [[format_rational(c) for c in form] for form in forms],
    }
    lines = [f"{len(forms)} incidence equation(s) for r={args.r} against "
             f"a dim-{space.dim} subspace of Q^{space.ambient_dim}"]
    for form in forms:
        terms = []
        for c, sub in zip(form, subsets):
            if c != 0:
                label = "p" + "".join(str(i + 1) for i in sub)
                terms.append(f"{format_rational(c)}*{label}")
        lines.append("  " + " + ".join(terms) + " = 0")
    return payload, lines


def _cmd_witness(args) -> tuple[dict, list[str]]:
    desc = VarietyDescription.from_json(_load_json(args.desc))
    q_list = [int(q) for q in args.q.split(",") if q.strip()]
    report = nonopen_witness(desc, args.component, args.r, q_list)
    payload = report.to_json()
    lines = [f"P = {_subspace_rows(report.plane)} -> member"]
    for step in report.family:
        lines.append(f"  q={step.q}: distance {format_rational(step.plucker_distance)}"
                     f" -> {'member' if step.verdict.member else 'blocked'}")
    return payload, lines


def _cmd_fpk(args) -> tuple[dict, list[str]]:
    graded = GradedDescription.from_json(_load_json(args.graded))
    report = fpk_report(graded, args.k, args.r)
    payload = report.to_json()
    lines = [f"certified empty: {report.certified_empty}", report.reason]
    if report.deduction:
        lines.append(report.deduction)
    return payload, lines


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jumploci",
        description="Exact computations with characteristic varieties and "
                    "finite-Betti-number cover sets.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("json", "text"), default="json",
                       help="output format (default json)")

    p = sub.add_parser("alexander",
                       help="Alexander matrix of a presentation")
    p.add_argument("--pres", required=True,
                   help="presentation text, e.g. '<x1,x2 | [x1,x2]>'")
    add_format(p)
    p.set_defaults(handler=_cmd_alexander)

    p = sub.add_parser("tcone", help="exponential tangent cone at 1")
    p.add_argument("--poly", action="append", default=[],
                   help="Laurent polynomial text (repeatable)")
    p.add_argument("--desc", help="variety description (JSON file or inline)")
    p.add_argument("--max-support", type=int, default=DEFAULT_SUPPORT_LIMIT,
                   help="support-size guard for partition enumeration")
    add_format(p)
    p.set_defaults(handler=_cmd_tcone)

    p = sub.add_parser("charvar-check",
                       help="verify a description against a presentation")
    p.add_argument("--pres", required=True)
    p.add_argument("--desc", required=True)
    add_format(p)
    p.set_defaults(handler=_cmd_charvar_check)

    p = sub.add_parser("omega-test",
                       help="membership of a plane in the finite-Betti set")
    p.add_argument("--desc", required=True)
    p.add_argument("--plane", required=True,
                   help="basis rows (JSON file or inline)")
    p.add_argument("--r", type=int, default=None,
                   help="expected plane dimension (validated)")
    add_format(p)
    p.set_defaults(handler=_cmd_omega_test)

    p = sub.add_parser("omega-describe",
                       help="closed-form description of the membership set")
    p.add_argument("--poly", action="append", default=[])
    p.add_argument("--desc")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--max-support", type=int, default=DEFAULT_SUPPORT_LIMIT)
    add_format(p)
    p.set_defaults(handler=_cmd_omega_describe)

    p = sub.add_parser("schubert-eqs",
                       help="incidence equations in Plücker coordinates")
    p.add_argument("--space", required=True,
                   help="subspace basis rows (JSON file or inline)")
    p.add_argument("--r", type=int, required=True)
    add_format(p)
    p.set_defaults(handler=_cmd_schubert_eqs)

    p = sub.add_parser("witness",
                       help="non-openness witness family P_q -> P")
    p.add_argument("--desc", required=True)
    p.add_argument("--component", type=int, required=True,
                   help="index of the translated component to perturb along")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--q", required=True, help="comma-separated positive integers")
    add_format(p)
    p.set_defaults(handler=_cmd_witness)

    p = sub.add_parser("fpk",
                       help="homological-finiteness deduction from emptiness")
    p.add_argument("--graded", required=True,
                   help="graded description (JSON file or inline)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    add_format(p)
    p.set_defaults(handler=_cmd_fpk)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.subcommand == "tcone" and bool(args.poly) == bool(args.desc):
        parser.error("tcone needs exactly one of --poly / --desc")
    if args.subcommand == "omega-describe" and bool(args.poly) == bool(args.desc):
        parser.error("omega-describe needs exactly one of --poly / --desc")
    try:
        payload, lines = args.handler(args)
    except (ValueError, ArithmeticError, KeyError, OSError,
            json.JSONDecodeError) as exc:
        print(json.dumps({"error": {"type": type(exc).__name__,
                                    "message": str(exc)}}, indent=2))
        return 1
    if args.format == "text":
        print("\n".join(lines))
    else:
        print(json.dumps(payload, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
