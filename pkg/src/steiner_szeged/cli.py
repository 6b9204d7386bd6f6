"""Command-line interface: ``compute``, ``verify`` and ``orbits``.

Exit codes: 0 success, 1 internal inconsistency (or a counterexample to a
claim the library treats as proven), 2 bad input, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable

from .graph_core import (
    CapError,
    FamilySpec,
    Graph,
    GraphError,
    emit_graph6,
    generate,
    parse_edgelist,
    parse_graph6,
    require_connected,
)
from .steiner import build_table, steiner_wiener
from .symmetry import automorphisms, edge_orbits, rsz_k_via_orbits, sz_k_via_orbits
from .szeged import Quarter, classical_revised_szeged, classical_szeged, classify_all, rsz_k, sz_k
from .verify import CLAIMS, SOUND_CLAIMS, InconsistencyError, conjecture_scan, verify_claim, verify_instance

INDICES = ("sz", "rsz", "sw", "classical-sz", "classical-rsz")
TSV_COLUMNS = ("graph", "n", "m", "k", "index", "method", "value", "quarters", "per_edge")


def _load_graphs(args) -> list[tuple[str, Graph]]:
    if args.family:
        kind = args.family.replace("-", "_")
        params = tuple(int(p) for p in args.params.split(",")) if args.params else ()
        g = generate(FamilySpec(kind, params))
        name = kind if not params else f"{kind}({','.join(map(str, params))})"
        return [(name, g)]
    if not args.input:
        raise GraphError("one of --input or --family is required")
    if args.format == "graph6":
        with open(args.input, "rb") as fh:
            lines = [ln for ln in fh.read().splitlines() if ln.strip()]
        if not lines:
            raise GraphError(f"{args.input}: no graphs found")
        out = []
        for ln in lines:
            g = parse_graph6(ln)
            out.append((emit_graph6(g), g))
        return out
    with open(args.input, encoding="utf-8") as fh:
        g = parse_edgelist(fh.read())
    return [(emit_graph6(g), g)]


def _k_values(args, lo: int, hi: int) -> list[int]:
    if args.k is not None:
        return [args.k]
    if args.k_range:
        try:
            a, b = (int(x) for x in args.k_range.split(".."))
        except ValueError:
            raise GraphError(f"--k-range expects A..B, got {args.k_range!r}") from None
        return list(range(a, b + 1))
    return list(range(lo, hi + 1))


def _value_fields(value) -> dict:
    if isinstance(value, Quarter):
        return {"value": str(value), "quarters": value.quarters}
    return {"value": value, "quarters": None}


def _compute_records(name: str, g: Graph, args) -> Iterable[dict]:
    require_connected(g)
    indices = INDICES if args.index == "all" else (args.index,)
    base = {"graph": name, "n": g.n, "m": g.m}
    if not args.family:
        base["edges"] = [list(e) for e in g.edges]
    for index in indices:
        if index in ("classical-sz", "classical-rsz"):
            value = classical_szeged(g) if index == "classical-sz" else classical_revised_szeged(g)
            yield {**base, "k": None, "index": index, "method": "direct", **_value_fields(value)}
            continue
        hi = g.n if index == "sw" else g.n - 1
        ks = _k_values(args, 2, hi)
        table = None
        orbits = None
        if index != "sw" and ks:
            for k in ks:
                if not 2 <= k <= g.n - 1:
                    raise GraphError(f"subset size k={k} outside 2..{g.n - 1} for n={g.n}")
            table = build_table(g, max(ks))
            if args.method == "orbits":
                orbits = edge_orbits(g, automorphisms(g))
        for k in ks:
            if index == "sw":
                yield {**base, "k": k, "index": index, "method": "direct",
                       **_value_fields(steiner_wiener(g, k))}
                continue
            if index == "sz":
                value = sz_k(g, k, table)
                if orbits is not None:
                    via = sz_k_via_orbits(g, k, table, orbits)
                    if via != value:
                        raise InconsistencyError(f"orbit Sz_{k}={via} but direct {value}")
            else:
                value = rsz_k(g, k, table)
                if orbits is not None:
                    via = rsz_k_via_orbits(g, k, table, orbits)
                    if via != value:
                        raise InconsistencyError(f"orbit rSz_{k}={via} but direct {value}")
            rec = {**base, "k": k, "index": index, "method": args.method, **_value_fields(value)}
            if args.per_edge:
                rec["per_edge"] = [
                    {"edge": list(c.edge), "n_u": c.n_u, "n_v": c.n_v, "n_0": c.n_0}
                    for c in classify_all(g, k, table)
                ]
            yield rec


def _tsv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, list):
        return ";".join(f"{d['edge'][0]}-{d['edge'][1]}:{d['n_u']},{d['n_v']},{d['n_0']}" for d in value)
    return str(value)


def _emit(records: Iterable[dict], fmt: str, out) -> None:
    if fmt == "tsv":
        out.write("\t".join(TSV_COLUMNS) + "\n")
        for rec in records:
            out.write("\t".join(_tsv_cell(rec.get(c)) for c in TSV_COLUMNS) + "\n")
    else:
        for rec in records:
            out.write(json.dumps(rec) + "\n")


def cmd_compute(args, out) -> int:
    records = []
    for name, g in _load_graphs(args):
        records.extend(_compute_records(name, g, args))
    _emit(records, args.output, out)
    return 0


def cmd_verify(args, out) -> int:
    claims = CLAIMS if args.claim == "all" else (args.claim,)
    for c in claims:
        if c not in CLAIMS:
            raise GraphError(f"unknown claim id {c!r}; choose from {', '.join(CLAIMS)} or all")
    k = None if args.k in (None, "all") else int(args.k)
    failed = 0
    counter = 0
    for claim in claims:
        if args.input or args.family:
            findings = []
            for name, g in _load_graphs(args):
                findings.extend(verify_instance(claim, g, k, name))
        else:
            findings = verify_claim(claim, args.max_n, k, args.seed)
        for f in findings:
            rec = f.to_record()
            rec["seed"] = args.seed
            out.write(json.dumps(rec) + "\n")
            if f.status == "counterexample":
                counter += 1
                if claim in SOUND_CLAIMS:
                    failed += 1
        if claim == "conjecture" and not (args.input or args.family):
            for kk in (range(3, args.max_n) if k is None else [k]):
                out.write(json.dumps(conjecture_scan(args.max_n, kk).to_record()) + "\n")
    print(f"verify: {counter} counterexample finding(s), {failed} against proven claims",
          file=sys.stderr)
    return 1 if failed else 0


def cmd_orbits(args, out) -> int:
    records = []
    for name, g in _load_graphs(args):
        require_connected(g)
        group = automorphisms(g)
        orbits = edge_orbits(g, group)
        classes = {}
        if args.k is not None:
            classes = {c.edge: c for c in classify_all(g, args.k)}
        for i, orbit in enumerate(orbits.orbits):
            rec = {"graph": name, "n": g.n, "m": g.m, "group_order": len(group), "orbit": i,
                   "size": len(orbit), "representative": list(orbit[0]),
                   "edges": [list(e) for e in orbit], "k": args.k}
            if args.k is not None:
                c = classes[orbit[0]]
                rec.update(n_u=c.n_u, n_v=c.n_v, n_0=c.n_0)
            records.append(rec)
    _emit(records, "json", out)
    return 0


def _add_graph_source(p: argparse.ArgumentParser, required: bool = True) -> None:
    src = p.add_mutually_exclusive_group(required=required)
    src.add_argument("--input", metavar="FILE", help="graph file")
    src.add_argument("--family", metavar="NAME",
                     help="path | cycle | star | complete | complete_multipartite | paw")
    p.add_argument("--params", metavar="P", help="family parameters, e.g. 5 or 2,3 (star: leaf count)")
    p.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="steiner-szeged",
                                     description="Exact Steiner Szeged and Steiner Wiener indices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute indices of a graph")
    _add_graph_source(p)
    kgroup = p.add_mutually_exclusive_group()
    kgroup.add_argument("--k", type=int)
    kgroup.add_argument("--k-range", metavar="A..B")
    p.add_argument("--index", choices=INDICES + ("all",), default="all")
    p.add_argument("--method", choices=("direct", "orbits"), default="direct")
    p.add_argument("--per-edge", action="store_true")
    p.add_argument("--output", choices=("json", "tsv"), default="json")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="check published claims against the oracle")
    p.add_argument("--claim", required=True, help="claim id or 'all'")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--k", default="all", help="subset size or 'all'")
    p.add_argument("--seed", type=int, default=0)
    _add_graph_source(p, required=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("orbits", help="edge orbits and representative classifications")
    _add_graph_source(p)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_orbits)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except InconsistencyError as exc:
        print(f"error: internal inconsistency: {exc}", file=sys.stderr)
        return 1
    except CapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (GraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
