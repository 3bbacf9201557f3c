"""Recompute the published examples and f-vector table and diff them against the bundled golden data."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from . import standard_basis as sb
from .algebra import degree2_kernel, parse_polynomial, same_up_to_sign
from .combinatorics import MatchingField, Tableau, proper_subsets
from .polytope import combinatorially_isomorphic, f_vector, matching_field_polytope
from .weights import initial_term, weight_matrix_block, weight_vector

TARGETS = ("example-2-2", "example-2-3", "table-1", "section-4-examples")


def golden(name: str) -> dict:
    with resources.files("matchfield.data").joinpath(name).open(encoding="utf-8") as fh:
        return json.load(fh)


@dataclass
class Report:
    target: str
    checks: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def check(self, name: str, expected, actual, ok: bool | None = None):
        ok = expected == actual if ok is None else ok
        self.checks.append({"name": name, "expected": expected, "actual": actual, "ok": bool(ok)})
        return ok

    @property
    def ok(self) -> bool:
        return all(c["ok"] for c in self.checks)

    @property
    def matched(self) -> int:
        return sum(c["ok"] for c in self.checks)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            if c["ok"]:
                out.append(f"ok    {c['name']}")
            else:
                out.append(f"FAIL  {c['name']}")
                out.append(f"        expected {c['expected']}")
                out.append(f"        actual   {c['actual']}")
        out.extend(f"note  {x}" for x in self.notes)
        out.append(f"{self.target}: {self.matched}/{len(self.checks)} matched")
        return out

    def to_json(self) -> dict:
        return {"target": self.target, "ok": self.ok, "matched": self.matched, "checks": self.checks, "notes": self.notes}


def example_2_2() -> Report:
    g = golden("example_2_2.json")
    rep = Report("example-2-2")
    n, ell = g["n"], g["ell"]
    M = weight_matrix_block(n, ell)
    field_ = MatchingField.block(n, ell)
    rep.check(f"M_{ell} for n={n}", g["matrix"], M.tolist())
    w = weight_vector(M)
    names = ["P" + "".join(map(str, field_.column(s))) for s in proper_subsets(n)]
    rep.check("variable order", g["variables"], names)
    rep.check(f"w for n={n}, ell={ell}", g["weights"], [int(x) for x in w.values()])
    for t in g["initial_terms"]:
        r = initial_term(M, t["subset"])
        actual = {"weight": int(r.weight), "sign": r.sign, "monomial": str(r.exponent), "column": list(field_.column(r.subset))}
        expected = {k: t[k] for k in actual}
        rep.check(f"in(P{''.join(map(str, t['subset']))})", expected, actual)
    for row in g["n3"]:
        M3 = weight_matrix_block(3, row["ell"])
        rep.check(f"M_{row['ell']} for n=3", row["matrix"], M3.tolist())
        rep.check(f"w for n=3, ell={row['ell']}", row["weights"], [int(x) for x in weight_vector(M3).values()])
    return rep


def example_2_3() -> Report:
    g = golden("example_2_3.json")
    rep = Report("example-2-3")
    n, ell = g["n"], g["ell"]
    field_ = MatchingField.block(n, ell)
    kernel = degree2_kernel(field_)
    used = set()
    for gen in g["generators"]:
        poly = parse_polynomial(gen["text"])
        hit = next((b for b in kernel if same_up_to_sign(poly, b.polynomial())), None)
        if gen.get("disputed"):
            leftover = [b.format(field_, n) for b in kernel if b not in used and all(
                not same_up_to_sign(parse_polynomial(x["text"]), b.polynomial()) for x in g["generators"])]
            rep.notes.append(
                f"disputed generator {gen['text']!r}: "
                + ("found in kernel" if hit else "not in kernel")
                + (f"; unmatched kernel binomial {leftover[0]}" if leftover else "")
            )
            continue
        rep.check(gen["text"], "in kernel up to sign", "in kernel up to sign" if hit else "missing", hit is not None)
        if hit is not None:
            used.add(hit)
    rep.check("kernel size", len(g["generators"]), len(kernel))
    for row in golden("example_2_2.json")["n3"]:
        f3 = MatchingField.block(3, row["ell"])
        k3 = degree2_kernel(f3)
        ok = len(k3) == 1 and same_up_to_sign(parse_polynomial(row["ideal"]), k3[0].polynomial())
        rep.check(f"n=3, ell={row['ell']}: {row['ideal']}", row["ideal"], k3[0].format(None, 3) if k3 else None, ok)
    return rep


def table_1() -> Report:
    g = golden("table_1.json")
    rep = Report("table-1")
    cache = {}
    for row in g["rows"]:
        for ell in row["ell"]:
            fv = list(f_vector(matching_field_polytope(row["n"], ell)))
            cache[row["n"], ell] = fv
            rep.check(f"n={row['n']} ell={ell}", row["f_vector"], fv)
    groups = {}
    for row in g["rows"]:
        for ell in row["ell"]:
            groups[row["n"], ell] = tuple(row["ell"])
    for n in sorted({r["n"] for r in g["rows"]}):
        ells = sorted(e for (m, e) in groups if m == n)
        hulls = {e: matching_field_polytope(n, e).hull for e in ells}
        for i, a in enumerate(ells):
            for b in ells[i + 1:]:
                expected = groups[n, a] == groups[n, b]
                rep.check(f"n={n} isomorphic({a}, {b})", expected, combinatorially_isomorphic(hulls[a], hulls[b]))
    return rep


def section_4_examples() -> Report:
    g = golden("section_4_examples.json")
    rep = Report("section-4-examples")
    for ex in g["classify"]:
        t = Tableau(ex["columns"], ex["n"])
        rep.check(f"{ex['name']} type", ex["type"], str(sb.classify_flag(t, ex["ell"])))
    for ex in g["normalize"]:
        t = Tableau(ex["columns"], ex["n"])
        out = sb.normalize_to_basis(t, ex["ell"])
        rep.check(f"{ex['name']} normalize", [list(c) for c in ex["result"]], [list(c) for c in out.columns])
        rep.check(f"{ex['name']} type", ex["type"], str(sb.classify_flag(out, ex["ell"])))
    for ex in g["bijection"]:
        field_ = MatchingField.block(ex["n"], ex["ell"])
        printed = Tableau(ex["printed_columns"], ex["n"])
        if not printed.is_valid(field_):
            rep.notes.append(f"{ex['name']}: printed tableau {ex['printed_columns']} is not valid for B_{ex['ell']}; using {ex['columns']}")
        t = Tableau(ex["columns"], ex["n"])
        rep.check(f"{ex['name']} type", ex["type"], str(sb.classify_flag(t, ex["ell"])))
        img = sb.S_flag(t, ex["ell"])
        rep.check(f"{ex['name']} S", [list(c) for c in ex["image"]], [list(c) for c in img.columns])
        back = sb.S_flag_inverse(Tableau(ex["image"], ex["n"]), ex["ell"])
        rep.check(f"{ex['name']} S inverse", [list(c) for c in ex["columns"]], [list(c) for c in back.columns])
    return rep


def reproduce(target: str) -> Report:
    table = {
        "example-2-2": example_2_2,
        "example-2-3": example_2_3,
        "table-1": table_1,
        "section-4-examples": section_4_examples,
    }
    if target not in table:
        raise KeyError(target)
    return table[target]()
