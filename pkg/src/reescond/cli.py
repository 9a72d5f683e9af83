"""Command-line front end: ``reescond <command> ...``.

Exit status: 0 ok, 1 a verified property failed (DIFFER or violation),
2 bad input, 3 a resource cap was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from .conductor import (
    DEFAULT_BFS_CAP,
    DEFAULT_K_MAX,
    ConductorReport,
    ResourceCapExceeded,
    check_radical_containment,
    conductor,
    conductor_member_oracle,
    dim_criterion_check,
    valla_check,
    ydeg2_implies_containment_check,
)
from .families import (
    VeroneseParams,
    bounded_veronese,
    graph_conductor_formula,
    graph_presentation,
    parse_graph,
    primitive_walk_relations,
    veronese_conductor_formula,
    veronese_is_linear_type,
)
from .monomial_ideal import MonomialIdeal, ParseError, parse_ideal
from .poly import render_monomial, render_polynomial
from .rees import (
    ReesPresentation,
    dim_rees,
    dim_sym,
    is_fiber_type,
    is_linear_type,
    minimal_rees_generators,
)

EXIT_OK, EXIT_DIFFER, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(ValueError):
    pass


# -- helpers -----------------------------------------------------------------


def emit_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)


def ideal_strings(a: MonomialIdeal) -> list[str]:
    return a.strings() if a.gens else ["0"]


def parse_monomial(text: str, nvars: int) -> tuple[int, ...]:
    try:
        a = parse_ideal(f"vars: {nvars}\n{text}")
    except ParseError as exc:
        raise InputError(f"monomial: {exc}") from None
    if len(a.gens) != 1:
        raise InputError(f"expected a single monomial, got {text!r}")
    return tuple(a.gens[0])


def _read_ideal(args) -> MonomialIdeal:
    if args.inline is not None:
        text = args.inline
    elif args.file is not None:
        try:
            text = Path(args.file).read_text()
        except OSError as exc:
            raise InputError(str(exc)) from None
    else:
        raise InputError("give an ideal with -i TEXT or --file PATH")
    try:
        return parse_ideal(text)
    except ParseError as exc:
        raise InputError(str(exc)) from None


def _presentation(a: MonomialIdeal) -> ReesPresentation:
    if a.is_zero():
        raise InputError("the zero ideal has no Rees algebra")
    return ReesPresentation(a)


def _input_record(a: MonomialIdeal) -> dict:
    return {"ideal": ideal_strings(a), "nvars": a.nvars}


def _conductor_record(P: ReesPresentation | None, a: MonomialIdeal, rep: ConductorReport) -> dict:
    per = []
    for h, col in rep.per_generator:
        per.append({"h": render_polynomial(P.polynomial(h)), "colon": ideal_strings(col)})
    return {
        "input": _input_record(a),
        "conductor": ideal_strings(rep.conductor),
        "linear_type": rep.linear_type,
        "fiber_type": rep.fiber_type,
        "per_generator": per,
    }


class _Timer:
    def __init__(self):
        self.marks: dict[str, float] = {}

    def run(self, name, fn, *a, **kw):
        t = time.perf_counter()
        out = fn(*a, **kw)
        self.marks[name] = round((time.perf_counter() - t) * 1000, 3)
        return out


def _finish(args, record: dict, text: list[str], timer: _Timer, status: int = EXIT_OK) -> int:
    # timings are opt-in so that JSON is byte-stable by default
    record["timings_ms"] = timer.marks if args.timings else {}
    if args.json:
        print(emit_json(record))
    else:
        print("\n".join(text))
        if args.timings:
            print("timings_ms: " + ", ".join(f"{k}={v}" for k, v in timer.marks.items()))
    return status


def _b(x) -> str:
    return "unknown" if x is None else str(x).lower()


# -- commands ----------------------------------------------------------------


def cmd_conductor(args) -> int:
    a = _read_ideal(args)
    timer = _Timer()
    if a.is_zero() or a.is_unit():
        rep = ConductorReport(MonomialIdeal.unit(a.nvars), [], True, True)
        rec = _conductor_record(None, a, rep)
    else:
        P = _presentation(a)
        rep = timer.run("conductor", conductor, P, full=True, with_fiber_type=True, jobs=args.jobs)
        rec = _conductor_record(P, a, rep)
    text = [f"I = {a}", f"C(I) = {rep.conductor}", f"linear_type = {_b(rep.linear_type)}", f"fiber_type = {_b(rep.fiber_type)}"]
    for item in rec["per_generator"]:
        text.append(f"  (L : {item['h']}) ∩ R = ({', '.join(item['colon'])})")
    return _finish(args, rec, text, timer)


def cmd_rees(args) -> int:
    a = _read_ideal(args)
    P = _presentation(a)
    timer = _Timer()
    J = timer.run("J", P.J_basis)
    mins = timer.run("minimal", minimal_rees_generators, P)
    rec = {
        "input": _input_record(a),
        "L": [render_polynomial(P.polynomial(g)) for g in P.taylor_syzygies()],
        "J": [render_polynomial(P.polynomial(g)) for g in J],
        "J_minimal": [render_polynomial(g) for g in mins],
        "dim_sym": dim_sym(P),
        "dim_rees": dim_rees(P),
    }
    text = [f"I = {a}", "L (Taylor syzygies):"] + [f"  {g}" for g in rec["L"]]
    text += ["J (reduced Groebner basis):"] + [f"  {g}" for g in rec["J"]]
    text += ["J minimal generators:"] + [f"  {g}" for g in rec["J_minimal"]]
    text += [f"dim S(I) = {rec['dim_sym']}", f"dim R(I) = {rec['dim_rees']}"]
    return _finish(args, rec, text, timer)


def cmd_fiber(args) -> int:
    a = _read_ideal(args)
    P = _presentation(a)
    timer = _Timer()
    H = timer.run("H", P.H.raw_groebner)
    gens = [render_polynomial(P.polynomial(P.lift_fiber(h))) for h in H]
    rec = {"input": _input_record(a), "H": gens}
    text = [f"I = {a}", "H (reduced Groebner basis):"] + [f"  {g}" for g in gens or ["0"]]
    return _finish(args, rec, text, timer)


def cmd_linear_type(args) -> int:
    a = _read_ideal(args)
    timer = _Timer()
    val = True if a.is_unit() else timer.run("linear_type", is_linear_type, _presentation(a))
    return _finish(args, {"input": _input_record(a), "linear_type": val}, [f"linear_type = {_b(val)}"], timer)


def cmd_fiber_type(args) -> int:
    a = _read_ideal(args)
    timer = _Timer()
    val = True if a.is_unit() else timer.run("fiber_type", is_fiber_type, _presentation(a))
    return _finish(args, {"input": _input_record(a), "fiber_type": val}, [f"fiber_type = {_b(val)}"], timer)


def _engine_conductor(a: MonomialIdeal, jobs: int) -> tuple[MonomialIdeal, bool]:
    if a.is_zero() or a.is_unit():
        return MonomialIdeal.unit(a.nvars), True
    P = ReesPresentation(a)
    rep = conductor(P, full=False, jobs=jobs)
    return rep.conductor, rep.linear_type


def _compare(args, rec: dict, text: list[str], formula, engine, timer) -> int:
    status = EXIT_OK
    if formula is not None:
        rec["formula"] = ideal_strings(formula[0])
        text.append(f"formula: C = {formula[0]}  linear_type = {_b(formula[1])}")
    if engine is not None:
        rec["engine"] = ideal_strings(engine[0])
        text.append(f"engine:  C = {engine[0]}  linear_type = {_b(engine[1])}")
    if formula is not None and engine is not None:
        same = formula == engine
        rec["verdict"] = "EQUAL" if same else "DIFFER"
        text.append(rec["verdict"])
        status = EXIT_OK if same else EXIT_DIFFER
    rec["linear_type"] = (formula or engine)[1]
    return _finish(args, rec, text, timer, status)


def cmd_veronese(args) -> int:
    try:
        p = VeroneseParams(args.n, args.d, args.c)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    a = bounded_veronese(p)
    timer = _Timer()
    rec = {"input": {"n": p.n, "d": p.d, "c": p.c, "ideal": ideal_strings(a)}}
    text = [f"I_{{{p.n},{p.d},{p.c}}} = {a}"]
    formula = engine = None
    if args.mode in ("formula", "both"):
        formula = timer.run("formula", lambda: (veronese_conductor_formula(p), veronese_is_linear_type(p)))
    if args.mode in ("engine", "both"):
        engine = timer.run("engine", _engine_conductor, a, args.jobs)
    return _compare(args, rec, text, formula, engine, timer)


def cmd_graph(args) -> int:
    if args.inline is not None:
        text_in = args.inline.replace(";", "\n")
    elif args.file is not None:
        try:
            text_in = Path(args.file).read_text()
        except OSError as exc:
            raise InputError(str(exc)) from None
    else:
        raise InputError("give a graph with --file PATH or -i TEXT")
    try:
        G = parse_graph(text_in)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if not G.edges:
        raise InputError("graph has no edges")
    P = graph_presentation(G)
    timer = _Timer()
    rec = {"input": {"vertices": G.n, "edges": [list(e) for e in G.edges], "ideal": ideal_strings(P.ideal)}}
    text = [f"I(G) = {P.ideal}"]
    formula = engine = None
    if args.mode in ("formula", "both"):
        walks = timer.run("walks", primitive_walk_relations, G, P)
        rec["walks"] = [
            {"h": render_polynomial(P.polynomial(P.lift_fiber(w.binomial))), "vertices": sorted(w.vertices), "N": ideal_strings(w.neighborhood)}
            for w in walks
        ]
        for w in rec["walks"]:
            text.append(f"  walk {w['h']}  V = {w['vertices']}  N = ({', '.join(w['N'])})")
        formula = timer.run("formula", lambda: (graph_conductor_formula(G, P), not walks))
    if args.mode in ("engine", "both"):
        engine = timer.run("engine", _engine_conductor, P.ideal, args.jobs)
    return _compare(args, rec, text, formula, engine, timer)


def cmd_check(args) -> int:
    a = _read_ideal(args)
    P = _presentation(a)
    timer = _Timer()
    rec: dict = {"input": _input_record(a), "property": args.property}
    prop = args.property
    if prop == "radical":
        ok = timer.run("check", check_radical_containment, P)
        rec.update(holds=ok)
        text = [f"sqrt(I) ⊆ sqrt(C(I)): {_b(ok)}"]
    elif prop == "valla":
        if args.monomial is None:
            # a fresh variable is always a non-zerodivisor
            a = a.extend(a.nvars + 1)
            P = ReesPresentation(a)
            u = tuple(int(i == a.nvars - 1) for i in range(a.nvars))
        else:
            u = parse_monomial(args.monomial, a.nvars)
        try:
            res = timer.run("check", valla_check, P, u, k_max=args.k_max)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        ok = res.upper_ok and res.k_min is not None and res.linear_type_before == res.linear_type_after
        rec.update(
            u=render_monomial(u),
            upper_ok=res.upper_ok,
            k_min=res.k_min if res.k_min is not None else "NotFound",
            linear_type_before=res.linear_type_before,
            linear_type_after=res.linear_type_after,
            holds=ok,
        )
        text = [
            f"u = {rec['u']}",
            f"C((I,u)) ⊆ (C(I),u): {_b(res.upper_ok)}",
            f"k_min = {rec['k_min']} (K_max = {args.k_max})",
            f"linear type: {_b(res.linear_type_before)} -> {_b(res.linear_type_after)}",
        ]
    elif prop == "dim":
        res = timer.run("check", dim_criterion_check, P)
        ok = not res.applicable or res.lhs == res.rhs
        rec.update(applicable=res.applicable, dim_equal=res.lhs, mu_bound=res.rhs, holds=ok)
        text = [f"applicable (C(I) m-primary): {_b(res.applicable)}", f"dim S(I) = dim R(I): {_b(res.lhs)}", f"mu(I) <= n + 1: {_b(res.rhs)}"]
    else:
        res = timer.run("check", ydeg2_implies_containment_check, P)
        ok = not res.applicable or res.holds
        rec.update(applicable=res.applicable, contained=res.holds, holds=ok)
        text = [f"applicable (J in y-degree <= 2): {_b(res.applicable)}", f"I ⊆ C(I): {_b(res.holds)}"]
    text.append("OK" if ok else "VIOLATION")
    return _finish(args, rec, text, timer, EXIT_OK if ok else EXIT_DIFFER)


def cmd_oracle(args) -> int:
    a = _read_ideal(args)
    P = _presentation(a)
    u = parse_monomial(args.monomial, a.nvars)
    timer = _Timer()
    inside = timer.run("oracle", conductor_member_oracle, P, u, cap=args.bfs_cap)
    rec = {"input": _input_record(a), "monomial": render_monomial(u), "in_conductor": inside}
    return _finish(args, rec, [f"{render_monomial(u)} in C(I): {_b(inside)}"], timer)


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--timings", action="store_true", help="report timings (JSON no longer byte-stable)")
    common.add_argument("--k-max", type=int, default=DEFAULT_K_MAX)
    common.add_argument("--bfs-cap", type=int, default=DEFAULT_BFS_CAP)
    common.add_argument("--jobs", type=int, default=1, help="worker processes for independent colons")

    src = argparse.ArgumentParser(add_help=False)
    g = src.add_mutually_exclusive_group()
    g.add_argument("-i", "--input", dest="inline", help="ideal text, e.g. 'x1^2, x1*x2'")
    g.add_argument("--file", help="file holding the ideal")

    parser = argparse.ArgumentParser(prog="reescond", description="Conductor of monomial ideals and their Rees algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, parents=(common, src)):
        p = sub.add_parser(name, parents=list(parents), help=help_)
        p.set_defaults(func=fn)
        return p

    add("conductor", cmd_conductor, "C(I) with per-generator colons")
    add("rees", cmd_rees, "L, J and dimensions")
    add("fiber", cmd_fiber, "fiber ideal H")
    add("linear-type", cmd_linear_type, "is J = L")
    add("fiber-type", cmd_fiber_type, "is J = L + HT")
    p = add("veronese", cmd_veronese, "bounded Veronese ideal I_{n,d,c}", parents=(common,))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--mode", choices=("formula", "engine", "both"), default="both")
    p = sub.add_parser("graph", parents=[common], help="edge ideal of a graph file")
    p.set_defaults(func=cmd_graph)
    gg = p.add_mutually_exclusive_group()
    gg.add_argument("--file", help="'vertices: n' then one 'i j' edge per line")
    gg.add_argument("-i", "--input", dest="inline", help="graph text, lines separated by ';'")
    p.add_argument("--mode", choices=("formula", "engine", "both"), default="both")
    p = add("check", cmd_check, "run a property checker")
    p.add_argument("--property", choices=("radical", "valla", "dim", "ydeg2"), required=True)
    p.add_argument("--monomial", help="u for valla (default: a fresh variable)")
    p = add("oracle", cmd_oracle, "conductor membership without Groebner bases on L")
    p.add_argument("--monomial", required=True)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.jobs < 1 or args.k_max < 1 or args.bfs_cap < 1:
        print("error: --jobs, --k-max and --bfs-cap must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceCapExceeded as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
