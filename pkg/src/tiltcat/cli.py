"""Command-line interface.

Weights are comma-separated fundamental-weight coordinates, grades are
integers, and J is written ``a:b`` with ``-inf`` / ``+inf`` allowed.  A point
of P+ x Z is written as the weight coordinates followed by the grade, so in
type A1 ``2,1`` means (2w1, 1).
"""
from __future__ import annotations

import argparse
import json
import sys

from tiltcat.catobjects import DomainError, FamilyTag, build_object, family_name, object_check_failures
from tiltcat.charring import TruncationSpec
from tiltcat.modengine import WindowError, ext1, graded_character_of, irreducible
from tiltcat.orders import adjoint_face, covering_leq, lex_leq, psi_face_check, psi_leq
from tiltcat.rootdata import UnsupportedType, build_root_system


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# parsing


def parse_ints(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def parse_J(text: str) -> TruncationSpec:
    if ":" not in text:
        raise UsageError(f"J must look like a:b, got {text!r}")
    lo, hi = text.split(":", 1)
    ends = []
    for x in (lo, hi):
        x = x.strip()
        if x in ("-inf", "+inf", "inf"):
            ends.append(float("-inf") if x == "-inf" else float("inf"))
        else:
            try:
                ends.append(int(x))
            except ValueError:
                raise UsageError(f"bad interval end {x!r}") from None
    try:
        return TruncationSpec(ends[0], ends[1])
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def parse_point(rs, text: str) -> tuple:
    v = parse_ints(text)
    if len(v) != rs.rank + 1:
        raise UsageError(f"a point needs {rs.rank} weight coordinates and a grade, got {text!r}")
    return tuple(v[:-1]), v[-1]


def parse_weight(rs, text: str) -> tuple:
    v = parse_ints(text)
    if len(v) != rs.rank:
        raise UsageError(f"a weight needs {rs.rank} coordinates, got {text!r}")
    return v


def wname(w) -> str:
    """2w1, w1+w2, 0, -w1 ..."""
    parts = []
    for i, c in enumerate(w):
        if not c:
            continue
        coef = "" if c == 1 else "-" if c == -1 else str(c)
        parts.append(f"{coef}w{i + 1}")
    if not parts:
        return "0"
    return "+".join(parts).replace("+-", "-")


def _point(p) -> dict:
    return {"weight": list(p[0]), "grade": p[1]}


# ---------------------------------------------------------------------------
# commands: each returns (results, certificate or None, table lines)


def cmd_char(rs, args):
    gamma = parse_J(args.J)
    lam = parse_weight(rs, args.weight)
    fam = family_name(args.object)
    mod = build_object(rs, FamilyTag(fam, lam, args.grade, gamma), cutoff=args.cutoff, check=False)
    ch = graded_character_of(mod)
    rec = ch.to_record()
    res = {"object": mod.name, "certified": mod.certified, "dimension": ch.dimension(), "character": rec}
    lines = [f"{mod.name}  certified={str(mod.certified).lower()}", "grade  weight  mult"]
    for t in rec["terms"]:
        lines.append(f"{t['grade']:>5}  {wname(t['weight']):<8} {t['mult']}")
    lines.append(f"total dimension {ch.dimension()}")
    return [res], None, lines


def cmd_object(rs, args):
    gamma = parse_J(args.J)
    lam = parse_weight(rs, args.weight)
    fam = family_name(args.object)
    tag = FamilyTag(fam, lam, args.grade, gamma)
    mod = build_object(rs, tag, cutoff=args.cutoff, check=False)
    problems = object_check_failures(rs, tag, mod)
    from tiltcat.modengine import bracket_violations, socle_of, top_generators
    brackets = len(bracket_violations(mod))
    tops = [_point((w, g)) for _, w, g in top_generators(mod)]
    soc = [{"weight": list(w), "grade": g, "mult": m} for (w, g), m in sorted(socle_of(mod).items(), key=lambda it: (it[0][1], it[0][0]))]
    res = {"object": mod.name, "dimension": mod.dim, "certified": mod.certified,
           "bracket_violations": brackets, "head": tops, "socle": soc, "post_check_failures": problems}
    lines = [f"{mod.name}", f"dimension {mod.dim}", f"certified {str(mod.certified).lower()}",
             f"bracket violations {brackets}",
             "head " + ", ".join(f"V({wname(t['weight'])},{t['grade']})" for t in tops),
             "socle " + ", ".join(f"V({wname(s['weight'])},{s['grade']})^{s['mult']}" for s in soc),
             "post-checks " + ("ok" if not problems else "; ".join(problems))]
    if problems:
        raise DomainError("; ".join(problems))
    return [res], None, lines


def cmd_order(rs, args):
    p, q = parse_point(rs, args.from_), parse_point(rs, args.to)
    if args.kind == "lex":
        val = lex_leq(rs, p, q)
        extra = {}
    elif args.kind == "covering":
        val = covering_leq(rs, p, q)
        extra = {}
    else:
        if not args.psi:
            raise UsageError("--kind psi needs at least one --psi weight")
        face = adjoint_face(rs, [parse_weight(rs, w) for w in args.psi])
        verdict = psi_face_check(face)
        if not verdict:
            raise DomainError(f"not a face (radius {verdict.radius}): witness {verdict.witness}")
        val = psi_leq(p, q, face)
        extra = {"psi": [list(w) for w in sorted(face.psi)], "face_radius": verdict.radius}
    res = {"kind": args.kind, "from": _point(p), "to": _point(q), "value": val, **extra}
    return [res], None, [str(val).lower()]


def cmd_sset(rs, args):
    from tiltcat.tilting import build_eta, build_sset, verify_enumeration
    gamma = parse_J(args.J)
    anchor = parse_point(rs, args.anchor)
    spec = build_sset(rs, gamma, anchor)
    eta = build_eta(spec, args.depth)
    log = verify_enumeration(rs, spec, eta)
    res = spec.as_record()
    res["eta"] = [_point(p) for p in eta]
    res["checked_pairs"] = len(log)
    lines = ["enumeration " + " ".join(wname(w) for w in spec.enumeration),
             "r " + " ".join(map(str, spec.bounds))]
    if spec.primed is not None:
        lines.append("r' " + " ".join(map(str, spec.primed)))
        lines.append("a " + " ".join(map(str, spec.gaps)))
    lines.append("eta " + " ".join(f"({wname(w)},{s})" for w, s in eta))
    lines.append(f"invariants verified on {len(log)} ordered pairs")
    return [res], None, lines


def cmd_ext(rs, args):
    gamma = parse_J(args.J)
    mods = []
    for fam, pt in ((args.left_object, args.left), (args.right_object, args.right)):
        lam, g = parse_point(rs, pt)
        f = family_name(fam)
        if f == "Simple":
            mods.append(irreducible(rs, lam, g))
        else:
            mods.append(build_object(rs, FamilyTag(f, lam, g, gamma), check=False))
    e = ext1(mods[0], mods[1])
    res = {"left": mods[0].name, "right": mods[1].name, "ext1": e.dim}
    return [res], None, [f"dim Ext^1({mods[0].name}, {mods[1].name}) = {e.dim}"]


def cmd_tilt(rs, args):
    from tiltcat.tilting import build_tilting
    gamma = parse_J(args.J)
    lam, r = parse_point(rs, args.anchor)
    T, cert, tower = build_tilting(rs, gamma, (lam, r))
    rec = cert.as_record()
    res = {"module": T.name, "dimension": T.dim,
           "tower": [{**_point(s.point), "d": s.d, "split": s.split, "dim": s.dim} for s in tower],
           "character": cert.character.to_record()}
    lines = [f"{T.name}  dimension {T.dim}"]
    lines.append("tower " + " ".join(f"({wname(s.point[0])},{s.point[1]})^{s.d}" for s in tower))
    for s, d in sorted(cert.highest_line.items()):
        lines.append(f"T[{s}]_{{{wname(lam)}}} = {d}")
    lines.append("Delta multiplicities " + ", ".join(
        f"({wname(m['weight'])},{m['grade']}):{m['mult']}" for m in rec["delta_multiplicities"]))
    lines.append(f"Ext^1(Delta, T) = 0 on {len(cert.ext_vanishing_log)} points")
    lines.append(f"End dim {cert.end_dim}, radical dim {cert.rad_dim}, indecomposable {str(cert.indecomposable).lower()}")
    lines.append(f"Nabla filtration {str(cert.nabla).lower()}")
    return [res], rec, lines


def cmd_bgg(rs, args):
    from tiltcat.tilting import bgg_check
    gamma = parse_J(args.J)
    cap = parse_weight(rs, args.cap)
    rep = bgg_check(rs, gamma, cap)
    rows = []
    for key in sorted(rep.projective_side, key=lambda k: (k[0][0], k[0][1], k[1][0], k[1][1])):
        vals = (rep.projective_side[key], rep.injective_side[key], rep.literal[key], rep.natural[key])
        if any(vals):
            rows.append({"from": _point(key[0]), "to": _point(key[1]), "P:W": vals[0], "I:Nabla": vals[1],
                         "literal": vals[2], "natural": vals[3]})
    holding = {side: rep.conventions_holding(side) for side in ("projective", "injective")}
    res = {"conventions": holding, "entries": rows}
    lines = [f"projective side holds for: {', '.join(holding['projective']) or 'none'}",
             f"injective side holds for: {', '.join(holding['injective']) or 'none'}",
             "(lam,r) (mu,s)  [P:W] [I:Nabla] [D(mu,r):V(lam,s)] [D(mu,s):V(lam,r)]"]
    for row in rows:
        lines.append(f"({wname(row['from']['weight'])},{row['from']['grade']}) "
                     f"({wname(row['to']['weight'])},{row['to']['grade']})  "
                     f"{row['P:W']} {row['I:Nabla']} {row['literal']} {row['natural']}")
    return [res], None, lines


def cmd_trivial(rs, args):
    from tiltcat.tilting import trivial_tilting_check
    gamma = parse_J(args.J)
    cap = parse_weight(rs, args.cap)
    face = None
    if args.order == "psi":
        if not args.psi:
            raise UsageError("--order psi needs at least one --psi weight")
        face = adjoint_face(rs, [parse_weight(rs, w) for w in args.psi])
        if not psi_face_check(face):
            raise DomainError("the given weights do not form a face")
    rep = trivial_tilting_check(rs, gamma, args.order, cap, face)
    res = {"order": rep.order, "regions": len(rep.regions), "standard_is_simple": rep.standard_is_simple,
           "costandard_is_injective": rep.costandard_is_injective, "reciprocity": rep.reciprocity,
           "hom_vanishing": rep.hom_vanishing, "ext_formula": rep.ext_formula, "passed": rep.passed,
           "failures": [repr(f) for f in rep.failures]}
    lines = [f"order {rep.order} on {len(rep.regions)} region(s)"]
    for k in ("standard_is_simple", "costandard_is_injective", "reciprocity", "hom_vanishing", "ext_formula", "passed"):
        lines.append(f"{k} {str(res[k]).lower()}")
    lines.extend(res["failures"])
    if not rep.passed:
        raise DomainError("trivial tilting check failed")
    return [res], None, lines


def cmd_selftest(rs, args):
    from tiltcat import selftest
    results = selftest.run(quick=not args.full)
    lines = [f"{'PASS' if r['passed'] else 'FAIL'}  {r['name']}" for r in results]
    npass = sum(r["passed"] for r in results)
    lines.append(f"{npass}/{len(results)} checks passed")
    if npass != len(results):
        raise SelftestFailed(results, lines)
    return results, None, lines


class SelftestFailed(Exception):
    def __init__(self, results, lines):
        super().__init__("selftest failed")
        self.results = results
        self.lines = lines


COMMANDS = {
    "char": cmd_char, "object": cmd_object, "order": cmd_order, "sset": cmd_sset, "ext": cmd_ext,
    "tilt": cmd_tilt, "bgg": cmd_bgg, "trivial-tilt": cmd_trivial, "selftest": cmd_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tiltcat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, J="0:1"):
        p.add_argument("--algebra", default="A1", help="A1, A2, A3 or C2")
        p.add_argument("--J", default=J, help="grade interval a:b")
        p.add_argument("--json", action="store_true", help="structured output")
        return p

    for name in ("char", "object"):
        p = common(sub.add_parser(name))
        p.add_argument("--object", default="delta", help="simple, proj, inj, delta, global-weyl, nabla")
        p.add_argument("--weight", required=True)
        p.add_argument("--grade", type=int, default=0)
        p.add_argument("--cutoff", type=int, default=None, help="grade cutoff for unbounded J")

    p = common(sub.add_parser("order"))
    p.add_argument("--kind", choices=["lex", "covering", "psi"], default="covering")
    p.add_argument("--from", dest="from_", required=True)
    p.add_argument("--to", required=True)
    p.add_argument("--psi", action="append", default=[], help="a weight of the face (repeatable)")

    p = common(sub.add_parser("sset"))
    p.add_argument("--anchor", required=True)
    p.add_argument("--depth", type=int, default=3)

    p = common(sub.add_parser("ext"))
    p.add_argument("--left-object", default="simple")
    p.add_argument("--left", required=True)
    p.add_argument("--right-object", default="simple")
    p.add_argument("--right", required=True)

    p = common(sub.add_parser("tilt"))
    p.add_argument("--anchor", required=True)

    p = common(sub.add_parser("bgg"))
    p.add_argument("--cap", default="4")

    p = common(sub.add_parser("trivial-tilt"))
    p.add_argument("--order", choices=["covering", "psi"], default="covering")
    p.add_argument("--psi", action="append", default=[])
    p.add_argument("--cap", default="4")

    p = common(sub.add_parser("selftest"))
    p.add_argument("--full", action="store_true", help="include the slower sweeps")
    return parser


def render(args, results, certificate, lines) -> str:
    if args.json:
        config = {k: v for k, v in sorted(vars(args).items()) if k not in ("json",)}
        doc = {"config": config, "results": results}
        if certificate is not None:
            doc["certificate"] = certificate
        return json.dumps(doc, sort_keys=True, indent=2, default=str)
    return "\n".join(lines)


def run_command(argv) -> tuple:
    """Returns (exit code, standard output text, standard error text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else 2), "", ""
    try:
        rs = build_root_system(args.algebra)
        results, cert, lines = COMMANDS[args.command](rs, args)
    except UsageError as exc:
        return 2, "", f"usage error: {exc}"
    except SelftestFailed as exc:
        return 1, render(args, exc.results, None, exc.lines), "selftest failed"
    except (DomainError, WindowError, UnsupportedType, ValueError, RuntimeError) as exc:
        return 1, "", f"error: {exc}"
    return 0, render(args, results, cert, lines), ""


def main(argv=None) -> int:
    code, out, err = run_command(sys.argv[1:] if argv is None else argv)
    if out:
        print(out)
    if err:
        print(err, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
