"""Command-line interface: ``mixcayley <command> ...``.

Exit status is 0 on success, 1 when two routes disagree (or a golden
example is not reproduced) and 2 on malformed input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources
from typing import Optional, Sequence

from mixcayley import __version__
from mixcayley.abelian import format_element
from mixcayley.census import CATALOG, KINDS, mask_count, run_census
from mixcayley.criteria import applicable_corollaries, check_main, coro_simple_generator
from mixcayley.errors import MixCayleyError, RouteDisagreement
from mixcayley.group import ExtGroup, parse_group_spec, parse_set_expression, split_connection_set
from mixcayley.kernels import BACKEND
from mixcayley.reps import character_table, classify
from mixcayley.spectrum import (adjacency, exact_spectrum, is_integral_numeric,
                                numeric_spectrum, INTEGRALITY_TOL)

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2
EXHAUSTIVE_LIMIT = 1 << 15
SAMPLE_SIZE = 10_000


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, ensure_ascii=False))


def _fmt_set(G: ExtGroup, idxs, offset=0) -> str:
    return "{" + ", ".join(G.format(offset + i) for i in idxs) + "}"


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("CAYLEY_WORKERS", "1")))
    except ValueError:
        return 1


# -- group / reps ----------------------------------------------------------------

def group_info(G: ExtGroup) -> dict:
    A = G.A
    return {
        "group": G.name or str(G),
        "order": G.order,
        "A": list(A.factors),
        "exponent": A.exponent,
        "f": [format_element(im) for im in G.f.images],
        "y": G.format(A.index(G.y)),
        "B": [G.format(i) for i in sorted(A.index(b) for b in G.B)],
        "index_AB": G.index_AB,
        "cyclotomic_order": G.m,
        "family": "dihedral" if G.is_dihedral else "dicyclic" if G.is_dicyclic else "other",
    }


def cmd_group(args) -> int:
    G = parse_group_spec(args.spec)
    info = group_info(G)
    if args.json:
        _emit(info)
        return EXIT_OK
    gen = "a" if G.A.rank == 1 else "(c1,...,ck)"
    print(f"group      {info['group']}")
    print(f"|G|        {info['order']}")
    print(f"A          {' x '.join(f'Z/{n}' for n in info['A'])}   elements written {gen}")
    print(f"f          generator images {', '.join(info['f'])}")
    print(f"y = x^2    {info['y']}")
    print(f"B          {{{', '.join(info['B'])}}}")
    print(f"(A:B)      {info['index_AB']}")
    print(f"exp(A)     {info['exponent']}")
    print(f"ring       Z[zeta_{info['cyclotomic_order']}]")
    return EXIT_OK


def cmd_reps(args) -> int:
    G = parse_group_spec(args.spec)
    reps = classify(G)
    classes, sizes, rows = character_table(G, reps)
    heads = [G.format(c) for c in classes]
    if args.json:
        _emit({"group": G.name, "classes": heads, "class_sizes": sizes,
               "reps": [{"name": r.name, "dim": r.dim, "values": [v.pretty() for v in row]}
                        for r, row in zip(reps, rows)]})
        return EXIT_OK
    cells = [[r.name] + [v.pretty() for v in row] for r, row in zip(reps, rows)]
    table = [["rep \\ class"] + heads, [""] + [f"({s})" for s in sizes]] + cells
    widths = [max(len(row[j]) for row in table) for j in range(len(table[0]))]
    for row in table:
        print("  ".join(c.rjust(w) if j else c.ljust(w) for j, (c, w) in enumerate(zip(row, widths))))
    return EXIT_OK


# -- check / spectrum ------------------------------------------------------------

def _connection_set(args):
    G = parse_group_spec(args.spec)
    if args.set is not None and args.mask is not None:
        raise MixCayleyError("give either --set or --mask, not both")
    if args.mask is not None:
        return G, split_connection_set(G, args.mask)
    return G, parse_set_expression(G, args.set or "")


def _split_dict(G, cs) -> dict:
    na = G.A.order
    return {"S1": _fmt_set(G, cs.s1), "S2": _fmt_set(G, cs.s2, na),
            "T1": _fmt_set(G, cs.t1), "T2": _fmt_set(G, cs.t2, na)}


def cmd_check(args) -> int:
    G, cs = _connection_set(args)
    trace = check_main(G, cs, paranoid=args.paranoid)
    corollaries = [f(G, cs) for f in applicable_corollaries(G, cs)]
    spec = exact_spectrum(G, cs)
    eigs = numeric_spectrum(adjacency(G, cs))
    numeric = is_integral_numeric(eigs)
    verdicts = [trace.overall, spec.integral, numeric] + [c.overall for c in corollaries]
    agree = len(set(verdicts)) == 1
    if args.json:
        _emit({"group": G.name, "set": cs.describe(), "mask": cs.mask, "kind": cs.kind,
               "split": _split_dict(G, cs), "criteria": trace.to_dict(),
               "corollaries": [c.to_dict() for c in corollaries],
               "exact": spec.to_dict(), "numeric": {"eigenvalues": eigs, "integral": numeric},
               "agree": agree, "integral": trace.overall})
        return EXIT_OK if agree else EXIT_MISMATCH
    print(f"group    {G.name}")
    print(f"S        {cs.describe()}   mask {cs.mask}   {cs.kind}")
    print("split    " + "  ".join(f"{k}={v}" for k, v in _split_dict(G, cs).items()))
    print(f"criteria ({trace.route}): {'integral' if trace.overall else 'not integral'}")
    for c in trace.checks:
        mark = "ok" if c.ok else "FAIL"
        if c.condition == "1":
            print(f"  (1) {c.subject:<14} value {c.quantity.pretty():<28} {mark}")
        else:
            d, e = c.extra["delta"].pretty(), c.extra["epsilon"].pretty()
            print(f"  (2) {c.subject:<14} delta {d:<10} epsilon {e:<18} "
                  f"disc {c.quantity.pretty():<14} {mark}")
    if trace.witness is not None:
        print(f"  witness: condition ({trace.witness.condition}) at {trace.witness.subject}")
    for c in corollaries:
        print(f"corollary ({c.route}): {'integral' if c.overall else 'not integral'}")
    shown = spec.eigenvalues if spec.integral else [round(x, 6) for x in spec.eigenvalues]
    print(f"exact    {'integral' if spec.integral else 'not integral'}  {shown}")
    print(f"numeric  {'integral' if numeric else 'not integral'}  "
          f"{[round(x, 6) + 0.0 for x in eigs]}  (tol {INTEGRALITY_TOL:g}, {BACKEND})")
    print("verdict  " + ("integral" if trace.overall else "not integral")
          + ("" if agree else "   ROUTES DISAGREE"))
    return EXIT_OK if agree else EXIT_MISMATCH


def cmd_spectrum(args) -> int:
    G, cs = _connection_set(args)
    spec = exact_spectrum(G, cs)
    eigs = numeric_spectrum(adjacency(G, cs))
    agree = spec.integral == is_integral_numeric(eigs)
    if args.json:
        _emit({"group": G.name, "set": cs.describe(), "mask": cs.mask,
               "exact": spec.to_dict(), "numeric": eigs, "agree": agree})
        return EXIT_OK if agree else EXIT_MISMATCH
    if spec.integral:
        print("spectrum " + " ".join(str(x) for x in spec.eigenvalues))
    else:
        print("spectrum " + " ".join(f"{x:.6f}" for x in eigs) + "   (not integral)")
    for b in spec.per_rep:
        ev = ", ".join(str(x) if isinstance(x, int) else f"{x:.6f}" for x in b.eigenvalues)
        mult = "" if b.dim == 1 else " (x2)"
        print(f"  {b.name:<14} dim {b.dim}  [{ev}]{mult}")
    return EXIT_OK if agree else EXIT_MISMATCH


# -- census / verify ---------------------------------------------------------------

def cmd_census(args) -> int:
    out = open(args.out, "w", encoding="utf-8") if args.out and not args.summary_only else None
    try:
        _, summary = run_census(args.group, args.kind, args.limit, args.workers, args.seed,
                                out=out, keep_records=False, timing=args.timing)
    finally:
        if out is not None:
            out.close()
    _emit(summary.to_dict())
    return EXIT_OK


def cmd_verify(args) -> int:
    failures = 0
    for spec in args.groups or CATALOG:
        G = parse_group_spec(spec)
        if G.order > args.max_order:
            continue
        limit = None if mask_count(G, "all") <= EXHAUSTIVE_LIMIT else SAMPLE_SIZE
        try:
            _, summary = run_census(spec, "all", limit, args.workers, args.seed,
                                    keep_records=False)
        except RouteDisagreement as exc:
            failures += 1
            print(f"{G.name:<22} DISAGREE {json.dumps(exc.record.__dict__)}")
            continue
        n = sum(summary.totals.values())
        k = sum(summary.integral.values())
        print(f"{G.name:<22} |G|={G.order:<3} masks={n:<6} integral={k:<6} agree")
    return EXIT_MISMATCH if failures else EXIT_OK


# -- golden examples ----------------------------------------------------------------

def load_golden() -> dict:
    text = resources.files("mixcayley").joinpath("data/golden_examples.json").read_text("utf-8")
    return json.loads(text)


def run_golden(entry: dict) -> tuple[bool, dict]:
    """Reproduce one golden entry; returns (ok, observed)."""
    G = parse_group_spec(entry["group"])
    if entry["kind"] == "simple":
        sets = list(coro_simple_generator(G, seed=0))
        bad = [cs.describe() for cs in sets
               if not (check_main(G, cs).overall and exact_spectrum(G, cs).integral
                       and is_integral_numeric(numeric_spectrum(adjacency(G, cs))))]
        observed = {"total": len(sets), "not_integral": bad}
        return len(sets) == entry["total"] and not bad, observed
    records, _ = run_census(entry["group"], entry["kind"])
    integral = sorted(r.mask for r in records if r.verdict_exact)
    expected = sorted(parse_set_expression(G, s).mask for s in entry["integral_sets"])
    observed = {"total": len(records),
                "integral_sets": [split_connection_set(G, m).describe() for m in integral]}
    return len(records) == entry["total"] and integral == expected, observed


def cmd_golden(args) -> int:
    data = load_golden()
    results = []
    for entry in data["examples"]:
        ok, observed = run_golden(entry)
        results.append({"label": entry["label"], "ok": ok, "observed": observed})
        if not args.json:
            line = f"{'PASS' if ok else 'FAIL'}  {entry['label']:<28} {entry['group']:<18}"
            print(line + f" {observed['total']} sets")
            if not ok:
                expected = {k: v for k, v in entry.items() if k not in ("label", "group", "kind")}
                print(f"      expected {json.dumps(expected)}")
                print(f"      observed {json.dumps(observed)}")
    if args.json:
        _emit(results)
    return EXIT_OK if all(r["ok"] for r in results) else EXIT_MISMATCH


# -- entry point ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mixcayley",
                                description="Integrality of mixed Cayley graphs over "
                                            "index-2 abelian extensions.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_, description=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("group", cmd_group, "describe a group")
    sp.add_argument("spec")
    sp.add_argument("--json", action="store_true")

    sp = add("reps", cmd_reps, "character table of the irreducible representations")
    sp.add_argument("spec")
    sp.add_argument("--json", action="store_true")

    for name, func, help_ in (("check", cmd_check, "decide integrality by every route"),
                              ("spectrum", cmd_spectrum, "Hermitian adjacency spectrum")):
        sp = add(name, func, help_)
        sp.add_argument("spec")
        sp.add_argument("--set", help="comma list such as 'a,x*a^2' or '(1,0),x*(0,1)'")
        sp.add_argument("--mask", type=int, help="bitmask over G minus the identity")
        sp.add_argument("--json", action="store_true")
        if name == "check":
            sp.add_argument("--paranoid", action="store_true",
                            help="test every character, not one per orbit")

    sp = add("census", cmd_census, "enumerate connection sets and cross-check all routes")
    sp.add_argument("--group", required=True)
    sp.add_argument("--kind", choices=KINDS, default="all")
    sp.add_argument("--limit", type=int)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--workers", type=int, default=_default_workers())
    sp.add_argument("--out")
    sp.add_argument("--summary-only", action="store_true", help="do not write records")
    sp.add_argument("--timing", action="store_true",
                    help="record per-mask wall time (output is then not reproducible)")

    sp = add("paper-examples", cmd_golden, "reproduce the golden worked examples")
    sp.add_argument("--json", action="store_true")

    sp = add("verify", cmd_verify, "three-route equivalence over the group catalog")
    sp.add_argument("--max-order", type=int, default=16)
    sp.add_argument("--groups", nargs="*", help="override the catalog")
    sp.add_argument("--workers", type=int, default=_default_workers())
    sp.add_argument("--seed", type=int, default=0)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RouteDisagreement as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (MixCayleyError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
