"""Command-line front end.

Subcommands:
  gen       build a family member and serialize it (graph6 | dot | json)
  classify  parameter-level verdict for one spec
  sweep     enumerate all specs up to a size bound, cross-check formulas
            against oracles, write CSV + JSON reports
  pfaffian  search for a Pfaffian orientation of a graph, or verify one

Exit codes: 0 clean, 1 a sweep disagreement was found, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io as gio
from .families import (Embedding, KLEIN_NONBIPARTITE, PolyhexSpec, SpecError,
                       all_specs, build_polyhex, face_width_class,
                       face_width_witness, is_planar_polyhex, parse_spec)
from .graphs import (INFINITE, cyclic_edge_connectivity,
                     enumerate_perfect_matchings, is_bipartite, is_brace,
                     is_brick)
from .kuratowski import find_k33_subdivision
from .pfaffian import (PFAFFIAN, Orientation, central_cycles,
                       classify_pfaffian, is_pfaffian_orientation,
                       matching_count_by_determinant, pfaffian_search)
from .structure import find_ideal_tri_cut

SWEEP_COLUMNS = [
    "spec", "n", "bipartite", "planar_formula", "planar_oracle",
    "fw_class", "fw_witness", "brace", "brick", "cyclic_edge_connectivity",
    "pfaffian_theorem", "pfaffian_oracle", "matchings_enum", "matchings_det",
    "tricut", "agree_planar", "agree_fw", "agree_pfaffian", "agree_count",
    "agree_tricut", "disagree",
]


def _embedding_json(emb: Embedding) -> dict:
    return {
        "spec": str(emb.spec),
        "surface": emb.surface,
        "n": emb.graph.n,
        "edges": [list(e) for e in emb.graph.edges],
        "faces": [list(f.vertices) for f in emb.faces],
        "crossing_edges": sorted(list(emb.graph.edges[e]) for e in emb.crossing_edges),
        "layers": [list(layer) for layer in emb.layers],
        "coords": {str(v): list(c) for v, c in enumerate(emb.coords)},
    }


def cmd_gen(args) -> int:
    spec = parse_spec(args.spec)
    emb = build_polyhex(spec)
    if args.format == "graph6":
        text = gio.to_graph6(emb.graph) + "\n"
    elif args.format == "dot":
        comments = [f"spec {spec}", f"surface {emb.surface}"]
        comments += [f"face {i}: {list(f.vertices)}" for i, f in enumerate(emb.faces)]
        text = gio.to_dot(emb.graph, comments=comments)
    else:
        text = json.dumps(_embedding_json(emb), sort_keys=True, indent=2) + "\n"
    _emit(text, args.out)
    return 0


def cmd_classify(args) -> int:
    spec = parse_spec(args.spec)
    verdict, reason = classify_pfaffian(spec)
    payload = {
        "spec": str(spec),
        "pfaffian": verdict == PFAFFIAN,
        "reason": reason,
        "planar": is_planar_polyhex(spec),
        "face_width_class": face_width_class(spec),
        "bipartite": spec.family != KLEIN_NONBIPARTITE,
    }
    _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.out)
    return 0


def _sweep_row(spec: PolyhexSpec, with_oracle: bool) -> dict:
    row = {c: None for c in SWEEP_COLUMNS}
    row["spec"] = str(spec)
    row["n"] = spec.n_vertices
    row["bipartite"] = spec.family != KLEIN_NONBIPARTITE
    row["planar_formula"] = is_planar_polyhex(spec)
    row["fw_class"] = face_width_class(spec)
    verdict, reason = classify_pfaffian(spec)
    row["pfaffian_theorem"] = f"{verdict}/{reason}"

    emb = build_polyhex(spec)
    wit = face_width_witness(emb)
    if wit is None:
        row["fw_witness"] = "none"
    else:
        (fa, fb), (e1, e2) = wit
        row["fw_witness"] = f"f{fa}~f{fb}:e{e1}~e{e2}"
    row["agree_fw"] = (row["fw_class"] == "two") == (wit is not None)

    if with_oracle:
        g = emb.graph
        row["planar_oracle"] = find_k33_subdivision(g) is None
        row["agree_planar"] = row["planar_oracle"] == row["planar_formula"]
        row["brace"] = is_brace(g)
        row["brick"] = is_brick(g)
        clam = cyclic_edge_connectivity(g)
        row["cyclic_edge_connectivity"] = "infinite" if clam == INFINITE else clam
        orient = pfaffian_search(g)
        row["pfaffian_oracle"] = orient is not None
        row["agree_pfaffian"] = row["pfaffian_oracle"] == (verdict == PFAFFIAN)
        row["matchings_enum"] = len(enumerate_perfect_matchings(g))
        if orient is not None:
            row["matchings_det"] = matching_count_by_determinant(orient)
            row["agree_count"] = row["matchings_det"] == row["matchings_enum"]
        else:
            row["matchings_det"] = None
            row["agree_count"] = True
        cut = find_ideal_tri_cut(g)
        row["tricut"] = "none" if cut is None else "W=" + "~".join(map(str, cut.vertices))
        if spec.family == KLEIN_NONBIPARTITE:
            row["agree_tricut"] = True  # no absence claim for this family
        else:
            row["agree_tricut"] = cut is None
    else:
        for c in ("agree_planar", "agree_pfaffian", "agree_count", "agree_tricut"):
            row[c] = True
    row["disagree"] = not all(
        row[c] for c in ("agree_planar", "agree_fw", "agree_pfaffian",
                         "agree_count", "agree_tricut"))
    return row


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def cmd_sweep(args) -> int:
    if args.oracle and args.max_vertices > 32:
        print("sweep: --oracle is limited to --max-vertices <= 32", file=sys.stderr)
        return 2
    rows = [_sweep_row(spec, args.oracle) for spec in all_specs(args.max_vertices)]
    disagreements = sum(1 for r in rows if r["disagree"])
    report = {
        "max_vertices": args.max_vertices,
        "oracle": args.oracle,
        "columns": SWEEP_COLUMNS,
        "rows": rows,
        "disagreements": disagreements,
    }
    json_text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    csv_lines = [",".join(SWEEP_COLUMNS)]
    csv_lines += [",".join(_csv_cell(r[c]) for c in SWEEP_COLUMNS) for r in rows]
    csv_text = "\n".join(csv_lines) + "\n"
    if args.out:
        with open(args.out + ".json", "w") as fh:
            fh.write(json_text)
        with open(args.out + ".csv", "w") as fh:
            fh.write(csv_text)
        print(f"sweep: {len(rows)} rows, {disagreements} disagreements "
              f"-> {args.out}.json / {args.out}.csv")
    else:
        sys.stdout.write(csv_text)
        print(f"sweep: {len(rows)} rows, {disagreements} disagreements", file=sys.stderr)
    return 1 if disagreements else 0


def _load_graph(args):
    if args.spec:
        return build_polyhex(parse_spec(args.spec)).graph
    with open(args.graph) as fh:
        text = fh.read()
    if args.graph.endswith(".g6") or not text.lstrip().startswith("{"):
        return gio.from_graph6(text)
    return gio.from_edge_json(text)


def cmd_pfaffian(args) -> int:
    g = _load_graph(args)
    central = central_cycles(g)
    payload = {"n": g.n, "edges": len(g.edges), "central_cycles": len(central)}
    if args.orientation:
        with open(args.orientation) as fh:
            direction = gio.orientation_from_json(fh.read(), g)
        d = Orientation(g, direction)
        ok = is_pfaffian_orientation(d)
        payload["mode"] = "verify"
        payload["pfaffian"] = ok
        if ok:
            payload["matchings_det"] = matching_count_by_determinant(d)
            payload["matchings_enum"] = len(enumerate_perfect_matchings(g))
        else:
            from .pfaffian import is_oddly_oriented
            for c in central:
                if not is_oddly_oriented(c, d):
                    payload["violated_central_cycle"] = list(c.vertices)
                    break
    else:
        payload["mode"] = "search"
        d = pfaffian_search(g)
        payload["pfaffian"] = d is not None
        if d is not None:
            payload["orientation"] = [list(p) for p in d.direction]
            payload["matchings_det"] = matching_count_by_determinant(d)
            payload["matchings_enum"] = len(enumerate_perfect_matchings(g))
    _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.out)
    return 0


def _emit(text: str, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="polyhex", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    def add_spec_args(sp):
        sp.add_argument("spec", nargs="?", help='spec string: "T:k,q,t" | "Ke:k,q" | "Ko:k,q"')
        sp.add_argument("--family", choices=["T", "Ke", "Ko"])
        sp.add_argument("--k", type=int)
        sp.add_argument("--q", type=int)
        sp.add_argument("--t", type=int, default=0)
        sp.add_argument("--out")

    sp = sub.add_parser("gen", help="build and serialize a family member")
    add_spec_args(sp)
    sp.add_argument("--format", choices=["graph6", "dot", "json"], default="json")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("classify", help="parameter-level classification")
    add_spec_args(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("sweep", help="cross-check formulas against oracles")
    sp.add_argument("--max-vertices", type=int, default=20)
    sp.add_argument("--oracle", action="store_true")
    sp.add_argument("--out", help="path prefix for the .json and .csv reports")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("pfaffian", help="search or verify a Pfaffian orientation")
    sp.add_argument("--spec", help='build this family member as the input graph')
    sp.add_argument("--graph", help="path to a graph6 or edge-list JSON file")
    sp.add_argument("--orientation", help="verify this orientation file instead of searching")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_pfaffian)
    return p


def _assemble_spec(args) -> None:
    if getattr(args, "spec", None) is None and getattr(args, "family", None):
        if args.family == "T":
            args.spec = f"T:{args.k},{args.q},{args.t}"
        else:
            args.spec = f"{args.family}:{args.k},{args.q}"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    _assemble_spec(args)
    if args.command in ("gen", "classify") and not args.spec:
        print("error: give a spec string or --family/--k/--q/--t", file=sys.stderr)
        return 2
    if args.command == "pfaffian" and not (args.spec or args.graph):
        print("error: give --spec or --graph", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
