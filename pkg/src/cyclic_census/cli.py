"""Command line front end: ``cyclic-census <subcommand> ...``."""
from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path

from . import census, f3geometry, galois_action
from .arith import cubic_exponent, factorize
from .classify import UnsupportedConductor, classify, rank_distribution
from .conductor import InadmissibleConductor, decompose
from .fixtures import FixtureError, load, load_all, verify_fixtures
from .residue_graph import residue_graph, symbol_matrix
from .tower_rules import genus_rule, quartet_rule


class UsageError(Exception):
    pass


def _emit(fmt: str, payload: dict, rows: list[dict], text: str, out) -> None:
    if fmt == "json":
        out.write(census.dumps(payload))
    elif fmt == "csv":
        if rows:
            buf = io.StringIO()
            w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
            out.write(buf.getvalue())
    else:
        out.write(text if text.endswith("\n") else text + "\n")


def _table(header: list[str], rows: list[list]) -> str:
    cells = [header] + [["" if v is None else str(v) for v in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells)


# --- subcommands ------------------------------------------------------------

def cmd_sieve(args, out) -> int:
    rows = [{"c": c, "t": t, "m": (args.ell - 1) ** (t - 1)}
            for c, t in census.admissible_conductors(args.ell, args.max, args.min)]
    _emit(args.format, {"ell": args.ell, "bound": args.max, "conductors": rows}, rows,
          _table(["c", "t", "m"], [[r["c"], r["t"], r["m"]] for r in rows]), out)
    return 0


def _fixture_context(c: int) -> dict:
    try:
        rows = [r for r in load_all() if r.conductor == c]
    except (OSError, FixtureError):
        return {}
    if not rows:
        return {}
    r = rows[0]
    return {"v": r.v, "ati": r.ati or None, "genus_class_group": r.genus_class_group or None}


def cmd_classify(args, out) -> int:
    try:
        cond = decompose(3, args.conductor)
        cg = classify(cond)
    except (InadmissibleConductor, UnsupportedConductor) as exc:
        raise UsageError(str(exc)) from None
    ctx = _fixture_context(cond.c)
    if args.v is not None:
        ctx["v"] = args.v
    if args.ati:
        ctx["ati"] = args.ati
    payload = {"conductor": cond.c, "factorization": str(factorize(cond.c)),
               "primes": list(cond.ramified_primes), "category": cg.category,
               "graph": cg.graph, "symbol": cg.symbol, "ranks": list(rank_distribution(cg))}
    rule = None
    if cond.t >= 2:
        m = symbol_matrix(cond)
        payload["symbol_matrix"] = [list(row) for row in m.a]
        payload["primitive_roots"] = list(m.roots)
        g = residue_graph(cond)
        if cg.category == "Doublet":
            if ctx.get("v") is not None:
                rule = genus_rule(ctx["v"], ctx.get("genus_class_group"))
        else:
            rule = quartet_rule(cg, v=ctx.get("v"), ati=ctx.get("ati"), primes=g.primes,
                                edges=g.edges, conductor=cond.c)
    if rule is not None:
        payload["rule"] = {"status": rule.status, "groups": rule.describe(),
                           "kappa": rule.kappa, "length": rule.length,
                           "principal_factors": list(rule.principal_factors),
                           "note": rule.note, "exception": rule.exception}
    ranks = ",".join(map(str, payload["ranks"]))
    label = (f"Category {cg.category}, Graph {cg.graph}" if cg.category not in
             ("Singlet", "Doublet") else f"{cg.category} graph {cg.graph}")
    text = f"{label}, {cg.symbol}, ranks ({ranks})"
    if rule is not None:
        text += f", rule: {rule.describe()}"
    if args.verbose:
        text = f"c = {payload['factorization']}\n" + text
        if "symbol_matrix" in payload:
            text += f"\nsymbol matrix {payload['symbol_matrix']}"
    row = {k: payload[k] for k in ("conductor", "category", "graph", "symbol")}
    row["rule"] = rule.describe() if rule else ""
    _emit(args.format, payload, [row], text, out)
    return 0


def cmd_symbol(args, out) -> int:
    try:
        ch = cubic_exponent(args.ell, args.modulus, args.residue)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"ell": args.ell, "modulus": ch.modulus, "residue": ch.residue,
               "exponent": ch.exponent, "coarse": ch.coarse}
    _emit(args.format, payload, [payload],
          f"[{ch.residue}/{ch.modulus}]_{args.ell}: exponent {ch.exponent}, coarse {ch.coarse:+d}"
          if ch.coarse else f"[{ch.residue}/{ch.modulus}]_{args.ell}: 0", out)
    return 0


def cmd_census(args, out) -> int:
    if args.by_category:
        if args.ell != 3:
            raise UsageError("--by-category needs --ell 3")
        res = census.quartet_census(args.max, jobs=args.jobs)
        payload = res.to_dict()
        rows = [{"label": k, **v} for k, v in payload["categories"].items()]
        text = _table(["Cat/Gph", "conductors", "fields", "min"],
                      [[r["label"], r["conductors"], r["fields"], r.get("min")] for r in rows])
    elif args.doublets:
        counts = census.doublet_census(args.max, jobs=args.jobs)
        payload = {"bound": args.max, "doublet_graphs": dict(zip(("1", "2", "3"), counts))}
        rows = [{"graph": g, "conductors": n} for g, n in zip((1, 2, 3), counts)]
        text = _table(["graph", "conductors"], [[r["graph"], r["conductors"]] for r in rows])
    else:
        res = census.multiplet_census(args.ell, args.max, jobs=args.jobs)
        payload = res.to_dict()
        rows = [{"t": k, **v} for k, v in payload["multiplets"].items()]
        text = _table(["t", "conductors", "fields", "min"],
                      [[r["t"], r["conductors"], r["fields"], r.get("min")] for r in rows])
    _emit(args.format, payload, rows, text, out)
    return 0


def cmd_fixtures(args, out) -> int:
    try:
        if args.path is None:
            rows = load_all()
        else:
            p = Path(args.path)
            rows = load_all(p) if p.is_dir() else load(p)
    except FixtureError as exc:
        raise UsageError(str(exc)) from None
    except OSError as exc:
        raise UsageError(f"cannot read fixtures: {exc}") from None
    rep = verify_fixtures(rows)
    summary = rep.summary()
    bad = rep.failures
    lines = [f"{k}: {v}" for k, v in summary.items()]
    for r in bad:
        lines.append(f"FAIL {r.source}:{r.line} c={r.conductor} expected {r.expected}, "
                     f"got {r.classified or '-'}; {'; '.join(r.notes)}")
    csv_rows = [{"source": r.source, "line": r.line, "conductor": r.conductor,
                 "expected": r.expected, "classified": r.classified, "passed": r.passed,
                 "tower": r.tower, "tower_ok": r.tower_ok} for r in rep.rows]
    _emit(args.format, rep.to_dict(), csv_rows, "\n".join(lines), out)
    return 1 if bad else 0


def cmd_sigma(args, out) -> int:
    if args.elementary:
        p, rank = args.elementary
        try:
            sc = galois_action.elementary_sigma(p, rank, args.degree)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        name = f"({','.join([str(p)] * rank)})"
    else:
        try:
            G = galois_action.named_group(args.group)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        sc = galois_action.sigma_census(G, args.degree)
        name = G.name
    payload = {"group": name, "degree": args.degree, "aut_order": sc.aut_order,
               "order_d": sc.order3_count, "weak": sc.weak_count, "strong": sc.strong_count}
    c, o, w, s = sc.as_tuple()
    _emit(args.format, payload, [payload], f"{name}: c={c}, o={o}, w={w}, s={s}", out)
    return 0


def cmd_geometry(args, out) -> int:
    ls, ps, bs = f3geometry.lines(), f3geometry.planes(), f3geometry.bundles()
    payload = {
        "lines": [{"index": ln.index, "generator": ln.name, "vector": list(ln.generator)}
                  for ln in ls],
        "planes": [{"index": p.index, "h": p.h, "k": p.k, "lines": list(p.lines)} for p in ps],
        "bundles": [{"index": b.index, "planes": list(b.planes)} for b in bs],
    }
    rows = [{"index": i + 1, "line": ls[i].name, "plane": f"<{ps[i].h},{ps[i].k}>",
             "plane_lines": " ".join(map(str, ps[i].lines)),
             "bundle": " ".join(map(str, bs[i].planes))} for i in range(13)]
    text = _table(["i", "g_i", "P_i", "T_i", "B_i"],
                  [[r["index"], r["line"], r["plane"], r["plane_lines"], r["bundle"]]
                   for r in rows])
    _emit(args.format, payload, rows, text, out)
    return 0


# --- parser -----------------------------------------------------------------

def _pair(text: str) -> tuple[int, int]:
    try:
        p, r = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected P,RANK") from None
    return p, r


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cyclic-census",
                                 description="Conductors, residue graphs and 3-class towers "
                                             "of cyclic fields of prime degree.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sieve", parents=[common], help="list admissible conductors")
    p.add_argument("--ell", type=int, default=3)
    p.add_argument("--max", type=int, required=True, help="exclusive upper bound")
    p.add_argument("--min", type=int, default=1)
    p.set_defaults(fn=cmd_sieve)

    p = sub.add_parser("classify", parents=[common], help="classify one cubic conductor")
    p.add_argument("conductor", type=int)
    p.add_argument("--v", type=int, help="genus valuation of the relevant doublet")
    p.add_argument("--ati", help="genus abelian type invariants, e.g. '[(0)^3;(1^2)^7,(21)^3]'")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("symbol", parents=[common], help="power residue character")
    p.add_argument("ell", type=int)
    p.add_argument("modulus", type=int)
    p.add_argument("residue", type=int)
    p.set_defaults(fn=cmd_symbol)

    p = sub.add_parser("census", parents=[common], help="range statistics")
    p.add_argument("--ell", type=int, default=3)
    p.add_argument("--max", type=int, required=True, help="exclusive upper bound")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--by-category", action="store_true")
    g.add_argument("--doublets", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=cmd_census)

    p = sub.add_parser("fixtures", parents=[common], help="replay reference tables")
    p.add_argument("path", nargs="?",
                   help="CSV file or directory (default: $CYCLIC_CENSUS_FIXTURES or bundled)")
    p.set_defaults(fn=cmd_fixtures)

    p = sub.add_parser("sigma", parents=[common], help="sigma-automorphism census")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--group", help="e.g. '<8,4>', Q8, D4, Heis5, C7")
    g.add_argument("--elementary", type=_pair, metavar="P,RANK")
    p.add_argument("--degree", type=int, default=3)
    p.set_defaults(fn=cmd_sigma)

    p = sub.add_parser("geometry", parents=[common], help="lines, planes and bundles of (3,3,3)")
    p.set_defaults(fn=cmd_geometry)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
