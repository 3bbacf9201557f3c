"""Command line interface: ``matchfield <command> ...``.

Exit codes: 0 success, 2 mathematical mismatch or failure, 64 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings
from dataclasses import dataclass, field

from . import standard_basis as sb
from ._accel import configure_threads
from .algebra import NoLift, degree2_kernel, sagbi_certificate_degree2
from .combinatorics import MatchingField, Tableau, proper_subsets
from .polytope import combinatorially_isomorphic, face_lattice, matching_field_polytope
from .reproduce import TARGETS, reproduce
from .weights import NonGenericWeight, initial_term, weight_matrix_block

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class Result:
    code: int = EXIT_OK
    data: object = None
    text: list[str] = field(default_factory=list)
    header: list[str] | None = None
    rows: list[list] = field(default_factory=list)


def _ells(args) -> list[int]:
    if args.ell == "all":
        return list(range(args.n + 1))
    try:
        ell = int(args.ell)
    except ValueError:
        raise UsageError(f"--ell must be an integer or 'all', got {args.ell!r}")
    if not 0 <= ell <= args.n:
        raise UsageError(f"--ell must lie in 0..{args.n}")
    return [ell]


def _vec(xs) -> str:
    return "(" + ",".join(str(x) for x in xs) + ")"


def _plain(x):
    return int(x) if getattr(x, "denominator", 1) == 1 else str(x)


# ------------------------------------------------------------------ commands

def cmd_weights(args) -> Result:
    res = Result(header=["n", "ell", "subset", "variable", "weight", "sign"])
    payload = []
    for ell in _ells(args):
        M = weight_matrix_block(args.n, ell)
        field_ = MatchingField.block(args.n, ell)
        entries = []
        for s in proper_subsets(args.n):
            r = initial_term(M, s)
            name = "P" + "".join(map(str, field_.column(s)))
            entries.append({"subset": list(s), "weight": _plain(r.weight), "sign": r.sign})
            res.rows.append([args.n, ell, " ".join(map(str, s)), name, _plain(r.weight), r.sign])
        payload.append({"n": args.n, "ell": ell, "matrix": M.tolist(), "weights": entries})
        res.text.append(f"M_{ell} (n={args.n}):")
        res.text.extend("  " + " ".join(f"{x:>3}" for x in row) for row in M.tolist())
        res.text.append(f"w_{ell} = {_vec(e['weight'] for e in entries)}")
    res.data = payload[0] if len(payload) == 1 else payload
    return res


def cmd_ideal(args) -> Result:
    res = Result(header=["n", "ell", "generator"])
    payload = []
    for ell in _ells(args):
        field_ = MatchingField.block(args.n, ell)
        gens = [b.format(field_, args.n) for b in degree2_kernel(field_, args.grassmannian)]
        payload.append({"n": args.n, "ell": ell, "grassmannian": args.grassmannian, "generators": gens})
        scope = f"Gr({args.grassmannian},{args.n})" if args.grassmannian else f"Flag_{args.n}"
        res.text.append(f"{scope}, B_{ell}: {len(gens)} degree-2 generators")
        res.text.extend("  " + g for g in gens)
        res.rows.extend([args.n, ell, g] for g in gens)
    res.data = payload[0] if len(payload) == 1 else payload
    return res


def cmd_certify(args) -> Result:
    res = Result(header=["n", "ell", "quadratic_generation", "dim_equal", "lifts_exist", "dim", "certified"])
    payload = []
    for ell in _ells(args):
        rep = sagbi_certificate_degree2(args.n, ell, max_columns=args.max_columns)
        d = rep.to_json()
        d["ell"] = ell
        payload.append(d)
        status = "certified" if rep.certified else "NOT certified"
        res.text.append(
            f"n={args.n} ell={ell}: {status} (quadratic generation {rep.quadratic_generation}, "
            f"dim {rep.dim} vs {rep.dim_diagonal}, lifts {rep.lifts_exist})"
        )
        res.text.extend(f"  failure: {f}" for f in rep.failures)
        res.rows.append([args.n, ell, rep.quadratic_generation, rep.dim_equal, rep.lifts_exist, rep.dim, rep.certified])
        if not rep.certified:
            res.code = EXIT_MISMATCH
    res.data = payload[0] if len(payload) == 1 else payload
    return res


def _read_tableau(args) -> Tableau:
    text = args.tableau
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--tableau is not valid JSON: {exc}")
    if isinstance(data, list):
        data = {"columns": data}
    data.setdefault("n", args.n)
    if data["n"] != args.n:
        raise UsageError("tableau n differs from --n")
    return Tableau.from_json(data)


def cmd_tableau(args) -> Result:
    ells = _ells(args)
    if len(ells) != 1:
        raise UsageError("tableau commands need a single --ell")
    ell = ells[0]
    t = _read_tableau(args)
    res = Result(header=["action", "type", "columns"])
    action = args.action
    try:
        if action == "classify":
            typ = sb.classify_flag(t, ell)
            out = t
        elif action == "map":
            typ = sb.classify_flag(t, ell)
            out = sb.S_flag(t, ell)
        elif action == "invert":
            out = sb.S_flag_inverse(t, ell)
            typ = sb.classify_flag(out, ell)
        else:
            out = sb.normalize_to_basis(t, ell)
            typ = sb.classify_flag(out, ell)
    except sb.NotInBasis as exc:
        return Result(EXIT_MISMATCH, {"error": str(exc)}, [f"error: {exc}"])
    except ValueError as exc:
        raise UsageError(str(exc))
    cols = [list(c) for c in out.columns]
    res.data = {"action": action, "n": args.n, "ell": ell, "type": str(typ), "tableau": {"n": args.n, "columns": cols}}
    res.text = [f"type {typ}", "columns " + " | ".join(",".join(map(str, c)) for c in cols)]
    res.rows = [[action, str(typ), json.dumps(cols)]]
    return res


def cmd_polytope(args) -> Result:
    if args.action == "isomorphic":
        if args.ell1 is None or args.ell2 is None:
            raise UsageError("polytope isomorphic needs --ell1 and --ell2")
        for e in (args.ell1, args.ell2):
            if not 0 <= e <= args.n:
                raise UsageError(f"ell values must lie in 0..{args.n}")
        a = matching_field_polytope(args.n, args.ell1).hull
        b = matching_field_polytope(args.n, args.ell2).hull
        iso = combinatorially_isomorphic(a, b)
        return Result(
            EXIT_OK,
            {"n": args.n, "ell1": args.ell1, "ell2": args.ell2, "isomorphic": iso},
            [f"n={args.n}: B_{args.ell1} and B_{args.ell2} polytopes are {'' if iso else 'not '}combinatorially isomorphic"],
            ["n", "ell1", "ell2", "isomorphic"],
            [[args.n, args.ell1, args.ell2, iso]],
        )
    res = Result(header=["n", "ell", "dim", "vertices", "facets", "f_vector"])
    payload = []
    for ell in _ells(args):
        pc = matching_field_polytope(args.n, ell)
        hull = pc.hull
        d = {"n": args.n, "ell": ell, "dim": hull.dim, "n_points": len(pc), "n_vertices": len(hull.vertices),
             "n_facets": hull.n_facets}
        want_f = args.fvector or args.format == "json" or not args.facets
        fv = face_lattice(hull).f_vector if want_f else None
        if fv is not None:
            d["f_vector"] = list(fv)
        if args.format == "json":
            d["points"] = pc.points.tolist()
            d["facets"] = hull.facets_json()
            d["equations"] = hull.equations.tolist()
        payload.append(d)
        res.rows.append([args.n, ell, hull.dim, len(hull.vertices), hull.n_facets, " ".join(map(str, fv or ()))])
        if args.fvector:
            res.text.append(_vec(fv) if len(_ells(args)) == 1 else f"ell={ell} {_vec(fv)}")
            continue
        res.text.append(f"n={args.n} ell={ell}: dim {hull.dim}, {len(hull.vertices)}/{len(pc)} vertices, {hull.n_facets} facets")
        if fv is not None:
            res.text.append(f"  f-vector {_vec(fv)}")
        if args.facets:
            for a, b in zip(hull.normals.tolist(), hull.offsets.tolist()):
                res.text.append(f"  {_vec(a)} . x <= {b}")
    res.data = payload[0] if len(payload) == 1 else payload
    return res


def cmd_reproduce(args) -> Result:
    rep = reproduce(args.target)
    return Result(
        EXIT_OK if rep.ok else EXIT_MISMATCH,
        rep.to_json(),
        rep.lines(),
        ["name", "ok", "expected", "actual"],
        [[c["name"], c["ok"], json.dumps(c["expected"]), json.dumps(c["actual"])] for c in rep.checks],
    )


# ------------------------------------------------------------------ parser

def _output_options(default):
    # sub-commands use SUPPRESS so options given before the command survive
    p = _Parser(add_help=False)
    p.add_argument("--format", choices=("text", "json", "csv"), default=default("text"))
    p.add_argument("--json", dest="format", action="store_const", const="json", default=default("text"),
                   help="same as --format json")
    p.add_argument("--output", "-o", default=default(None), help="write to this file instead of stdout")
    return p


def build_parser() -> argparse.ArgumentParser:
    top = _output_options(lambda x: x)
    common = _output_options(lambda x: argparse.SUPPRESS)

    nl = _Parser(add_help=False)
    nl.add_argument("--n", type=int, required=True)
    nl.add_argument("--ell", default="0", help="integer in 0..n or 'all'")

    p = _Parser(prog="matchfield", description=__doc__.splitlines()[0], parents=[top])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("weights", parents=[common, nl], help="weight matrix M_ell and weight vector")
    s.set_defaults(func=cmd_weights)

    s = sub.add_parser("ideal", parents=[common, nl], help="degree-2 generators of the matching field ideal")
    s.add_argument("--grassmannian", type=int, metavar="K", help="restrict to k-subsets")
    s.set_defaults(func=cmd_ideal)

    s = sub.add_parser("certify", parents=[common, nl], help="degree-2 SAGBI certificate")
    s.add_argument("--max-columns", type=int, default=3)
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("tableau", parents=[common, nl], help="typed two-column tableau basis")
    s.add_argument("action", choices=("classify", "map", "invert", "normalize"))
    s.add_argument("--tableau", required=True, help='JSON {"n":..,"columns":[[..],[..]]} or @file')
    s.set_defaults(func=cmd_tableau)

    s = sub.add_parser("polytope", parents=[common, nl], help="matching field polytope")
    s.add_argument("action", nargs="?", choices=("summary", "isomorphic"), default="summary")
    s.add_argument("--fvector", action="store_true")
    s.add_argument("--facets", action="store_true")
    s.add_argument("--ell1", type=int)
    s.add_argument("--ell2", type=int)
    s.set_defaults(func=cmd_polytope)

    s = sub.add_parser("reproduce", parents=[common], help="recompute published values and diff")
    s.add_argument("target", choices=TARGETS)
    s.set_defaults(func=cmd_reproduce)
    return p


def _render(res: Result, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(res.data, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if res.header:
            w.writerow(res.header)
        w.writerows(res.rows)
        return buf.getvalue()
    return "\n".join(res.text) + "\n"


def main(argv=None) -> int:
    warnings.filterwarnings("ignore", message=".*TBB.*")
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", None) is not None and args.n < 2:
        parser.error("--n must be at least 2")
    configure_threads()
    try:
        res = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"matchfield: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NonGenericWeight, NoLift) as exc:
        print(f"matchfield: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    out = _render(res, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return res.code


if __name__ == "__main__":
    sys.exit(main())
