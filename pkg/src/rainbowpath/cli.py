"""Command-line front end.

Subcommands: generate (families to graph6), bounds (threshold tables),
construct (colorful path with trace), lemma1 (graded rainbow-or-witness
procedure with trace), oracle (exact searches), check (single-graph
conjecture sweep), corpus (file sweep to JSONL).

Exit codes: 0 completed, 1 usage or input error, 2 completed with at least
one conjecture violation recorded.
"""

from __future__ import annotations

import argparse
import sys

from .bounds import BoundsError, compute_bounds, guaranteed_length
from .chromatic import chromatic_number
from .colorful import ColorfulResult, colorful_path_from
from .generators import GeneratorSpec
from .graph6 import decode_graph6, encode_graph6
from .graphs import ColoredGraph, Coloring, GraphError, classify_path
from .grading import Grading, GradingOutcome, OutcomeKind, rainbow_or_witness
from .harness import HarnessConfig, check_graph, report_to_json, run_corpus
from .oracle import (
    SearchBudget,
    gallai_roy_rainbow_path,
    longest_induced_path,
    longest_induced_rainbow_path,
)


def _parse_coloring(text: str) -> Coloring:
    try:
        return Coloring(tuple(int(tok) for tok in text.split()))
    except ValueError as exc:
        raise GraphError(f"bad coloring line: {exc}") from exc


def _read_coloring(args) -> Coloring:
    if args.coloring is not None:
        return _parse_coloring(args.coloring)
    if args.coloring_file is not None:
        with open(args.coloring_file, "r", encoding="ascii") as fh:
            for line in fh:
                line = line.strip()
                if line and not line.startswith("#"):
                    return _parse_coloring(line)
        raise GraphError(f"no coloring line found in {args.coloring_file}")
    raise GraphError("provide --coloring or --coloring-file")


def read_grading_file(path: str) -> Grading:
    """Parse a grading file: one line per part listing vertex ids, followed
    by one line per part listing that part's coloring (same order)."""
    lines = []
    with open(path, "r", encoding="ascii") as fh:
        for raw in fh:
            line = raw.strip()
            if line and not line.startswith("#"):
                lines.append(line)
    if len(lines) % 2:
        raise GraphError(f"grading file needs 2 lines per part, got {len(lines)} lines")
    half = len(lines) // 2
    parts = tuple(tuple(int(t) for t in line.split()) for line in lines[:half])
    colorings = tuple(tuple(int(t) for t in line.split()) for line in lines[half:])
    k = max((max(c) for c in colorings if c), default=1)
    return Grading(parts=parts, part_colorings=colorings, k=k)


def render_colorful_trace(result: ColorfulResult) -> list[str]:
    out = []
    for st in result.steps:
        out.append(f"level {st.level}: start={st.start} chi_lb={st.chi_lb} "
                   f"removed_color={st.removed_color}")
        out.append(f"  after removal: {list(st.after_removal)}")
        out.append(f"  chosen component: {list(st.chosen_component)}")
        out.append(f"  approach path: {list(st.approach_path)} pivot={st.pivot}")
        out.append(f"  pivot fan: {list(st.pivot_fan)}")
        out.append(f"  second component: {list(st.second_component)} bridge={st.bridge}")
        if st.recomputed_chi is not None:
            out.append(f"  recursed subgraph chi (audit): {st.recomputed_chi}")
        out.append(f"  sub path: {list(st.sub_path)}")
        out.append(f"  assembled: {list(st.assembled)}")
    return out


def render_grading_trace(outcome: GradingOutcome) -> list[str]:
    tr = outcome.trace
    out = [
        f"class chromatic numbers: {list(tr.class_chromatic_numbers)}",
        f"chosen class {tr.class_index}: {list(tr.class_vertices)}",
        f"orientation arcs (low->high color): {list(tr.arcs)}",
        f"part order: {list(tr.pi_order)}",
        f"forward arcs: {list(tr.forward_arcs)}",
        f"backward arcs: {list(tr.backward_arcs)}",
        f"longest forward path: {list(tr.forward_path)}",
        f"longest backward path: {list(tr.backward_path)}",
    ]
    for att in tr.bfs_attempts:
        line = (f"bfs {att.side} from {att.root}: depth={att.depth}"
                f" extracted={list(att.extracted) if att.extracted else None}")
        if att.verified_induced is not None:
            line += f" induced={att.verified_induced}"
        if att.fallback_used:
            line += " (exhaustive fallback used)"
        out.append(line)
    out.append(f"global witness scan used: {tr.global_witness_scan_used}")
    return out


def _cmd_generate(args) -> int:
    if args.kind == "cycle":
        spec = GeneratorSpec("cycle", (args.n,))
    elif args.kind == "mycielskian-iterate":
        spec = GeneratorSpec("mycielskian-iterate", (args.depth,))
    elif args.kind == "kneser":
        spec = GeneratorSpec("kneser", (args.n, args.k))
    else:
        spec = GeneratorSpec("random-triangle-free", (args.n,), seed=args.seed,
                             p=args.p, count=args.count)
    lines = [encode_graph6(g) for g in spec.graphs()]
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write("\n".join(lines) + "\n")
        print(f"wrote {len(lines)} graphs to {args.out}")
    else:
        for line in lines:
            print(line)
    return 0


def _cmd_bounds(args) -> int:
    if args.chi is not None:
        s = guaranteed_length(args.chi)
        print(f"chi = {args.chi}: guaranteed induced rainbow path order s = {s}")
    rows = [compute_bounds(s) for s in range(3, args.s + 1)] if args.s >= 3 else []
    if rows:
        print(f"{'s':>3} {'r':>24} {'c':>40}")
        for b in rows:
            r_str = str(b.r) if len(str(b.r)) <= 24 else f"~2^{b.r.bit_length() - 1}"
            c_str = str(b.c) if len(str(b.c)) <= 40 else f"~2^{b.c.bit_length() - 1}"
            print(f"{b.s:>3} {r_str:>24} {c_str:>40}")
        if args.verbose:
            for b in rows:
                print(f"s={b.s}: w (w_s..w_1) = {list(b.w)}")
    return 0


def _cmd_construct(args) -> int:
    g = decode_graph6(args.graph6)
    coloring = _read_coloring(args)
    cg = ColoredGraph(g, coloring)
    chi_lb = args.chi_lb if args.chi_lb is not None else chromatic_number(g).chi
    result = colorful_path_from(cg, args.start, chi_lb, strict=args.strict)
    report = classify_path(cg, result.path.vertices)
    print(f"path: {list(result.path.vertices)}")
    print(f"order: {report.order}  induced: {report.is_induced}  "
          f"colors: {report.color_count} (needed >= {-(-chi_lb // 2)})")
    if args.trace:
        for line in render_colorful_trace(result):
            print(line)
    return 0


def _cmd_lemma1(args) -> int:
    g = decode_graph6(args.graph6)
    coloring = _read_coloring(args)
    cg = ColoredGraph(g, coloring)
    grading = read_grading_file(args.grading_file)
    outcome = rainbow_or_witness(cg, grading, args.s)
    print(f"outcome: {outcome.kind.value}")
    if outcome.kind is OutcomeKind.RAINBOW_PATH:
        print(f"rainbow path: {list(outcome.rainbow_path.vertices)}")
    elif outcome.kind is OutcomeKind.WITNESS:
        w = outcome.witness
        print(f"witness vertex: {w.vertex}")
        print(f"later distinct-colored neighbors: {list(w.later_neighbors)}")
    if args.trace:
        for line in render_grading_trace(outcome):
            print(line)
    return 0


def _cmd_oracle(args) -> int:
    g = decode_graph6(args.graph6)
    budget = SearchBudget(max_vertices=max(25, g.n), max_nodes=args.budget,
                          on_exceed="flag")
    lip = longest_induced_path(g, budget)
    print(f"longest induced path: {list(lip.path.vertices)} "
          f"(order {lip.path.order}, exact={lip.exact})")
    if args.coloring is not None or args.coloring_file is not None:
        cg = ColoredGraph(g, _read_coloring(args))
        rainbow = longest_induced_rainbow_path(cg, budget)
        print(f"longest induced rainbow path: {list(rainbow.path.vertices)} "
              f"(order {rainbow.path.order}, exact={rainbow.exact})")
        gallai = gallai_roy_rainbow_path(cg)
        print(f"color-orientation path: {list(gallai.vertices)} (order {gallai.order})")
    return 0


def _make_config(args, thorough: bool = False) -> HarnessConfig:
    return HarnessConfig(
        max_colors_delta=args.delta,
        coloring_cap=args.cap,
        extra_samples=args.samples,
        budget=SearchBudget(max_nodes=args.budget, on_exceed="flag"),
        parallelism=getattr(args, "jobs", 1),
        seed=args.seed,
        thorough=thorough,
        output_path=args.out,
    )


def _cmd_check(args) -> int:
    g = decode_graph6(args.graph6)
    cfg = _make_config(args, args.thorough)
    report = check_graph(g, cfg, graph_id="cli")
    line = report_to_json(report)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(line + "\n")
    print(line)
    return 0 if report.holds_for_all_checked else 2


def _cmd_corpus(args) -> int:
    cfg = _make_config(args, args.thorough)
    summary = run_corpus(args.path, cfg)
    print(f"graphs processed: {summary.graphs_processed}")
    print(f"colorings checked: {summary.checks_run}")
    print(f"violations found: {summary.violations}")
    for reason in summary.skipped:
        print(f"skipped {reason}")
    print(f"wall time: {summary.wall_time:.2f}s")
    return 2 if summary.violations else 0


def _add_coloring_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--coloring", help="whitespace-separated colors in vertex-id order")
    p.add_argument("--coloring-file", help="file whose first data line is the coloring")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbowpath",
        description="Induced rainbow/colorful path workbench for triangle-free graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit graph families as graph6 lines")
    p.add_argument("--kind", required=True,
                   choices=["cycle", "mycielskian-iterate", "kneser", "random-triangle-free"])
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("bounds", help="threshold table r(s), c(s) and guarantee inversion")
    p.add_argument("--s", type=int, default=6, help="largest target order to tabulate")
    p.add_argument("--chi", type=int, help="invert: guaranteed order for this chi")
    p.add_argument("--verbose", action="store_true", help="also print weight sequences")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("construct", help="build a colorful induced path from a vertex")
    p.add_argument("graph6")
    _add_coloring_args(p)
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--chi-lb", type=int, dest="chi_lb",
                   help="chromatic lower bound (default: exact chi)")
    p.add_argument("--strict", action="store_true",
                   help="recompute chi of every recursed subgraph for the trace")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("lemma1", help="graded rainbow-path-or-witness procedure")
    p.add_argument("graph6")
    _add_coloring_args(p)
    p.add_argument("--grading-file", required=True)
    p.add_argument("--s", type=int, required=True, help="target path order (>= 3)")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=_cmd_lemma1)

    p = sub.add_parser("oracle", help="exact search results for one graph")
    p.add_argument("graph6")
    _add_coloring_args(p)
    p.add_argument("--budget", type=int, default=10**8, help="search-node cap")
    p.set_defaults(func=_cmd_oracle)

    for name, help_text in (("check", "conjecture sweep over one graph"),
                            ("corpus", "conjecture sweep over a graph6 corpus file")):
        p = sub.add_parser(name, help=help_text)
        if name == "check":
            p.add_argument("graph6")
        else:
            p.add_argument("path")
            p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--cap", type=int, default=1000, help="colorings per graph")
        p.add_argument("--delta", type=int, default=0, help="extra colors beyond chi")
        p.add_argument("--samples", type=int, default=0,
                       help="random colorings beyond the cap")
        p.add_argument("--budget", type=int, default=10**8, help="search-node cap")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--thorough", action="store_true",
                       help="run the colorful construction from every vertex")
        p.add_argument("--out", help="output path (JSON / JSONL)")
        p.set_defaults(func=_cmd_check if name == "check" else _cmd_corpus)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, BoundsError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
