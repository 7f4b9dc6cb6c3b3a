"""``indepsys`` command-line front end.

Each subcommand loads one instance file, calls one library operation and
renders the result as lines of text or, with ``--json``, as a single JSON
document with canonical ordering.  Exit status: 0 success / found / PASS,
1 well-formed "not found" or FAIL, 2 input or guard error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional, Tuple

from . import auxiliary, core, solvers
from .errors import IndepSysError, InputError
from .families import FAMILIES, family
from .fileformat import parse_instance, parse_label
from .instances import chains, hamiltonian
from .instances.graphs import Digraph, Graph

EXIT_OK, EXIT_NOT_FOUND, EXIT_INPUT = 0, 1, 2


def _ids(text: str) -> Tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated ids, got {text!r}") from None


def _sizes(text: str) -> List[int]:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi if sep else lo)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty size range {text!r}")
    return list(range(a, b + 1))


def _chains(text: str) -> List[Tuple[int, ...]]:
    return [_ids(part) for part in text.split(";") if part.strip()]


def _theorems(text: str) -> List[int]:
    try:
        out = [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected e.g. 1,2,3, got {text!r}") from None
    if any(t not in (1, 2, 3) for t in out):
        raise argparse.ArgumentTypeError("theorems are numbered 1, 2 and 3")
    return out


def fmt_set(s) -> str:
    return "{" + ",".join(str(e) for e in s) + "}"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="indepsys", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def cmd(name, help, file=True, file_help="instance file"):
        sp = sub.add_parser(name, help=help)
        if file:
            sp.add_argument("file", help=file_help)
        sp.add_argument("--json", action="store_true", help="emit one JSON document")
        sp.add_argument("--timing", action="store_true", help="include wall time in the report")
        return sp

    sp = cmd("analyze", "W, S, R, f and support status of one solution")
    sp.add_argument("--solution", type=_ids, required=True, help="comma-separated ids, e.g. 0,2")
    sp = cmd("enumerate", "list all support solutions")
    sp.add_argument("--limit", type=int)
    sp = cmd("greedy", "residual-driven greedy construction")
    sp.add_argument("--sense", choices=solvers.SENSES, required=True)
    sp.add_argument("--tiebreak", choices=solvers.TIEBREAKS, default="lowest-id")
    sp = cmd("target", "find a support solution with a given objective value")
    sp.add_argument("--value", type=int, required=True)
    sp = cmd("extremal", "best support solution by exhaustive scan")
    sp.add_argument("--sense", choices=solvers.SENSES, required=True)
    sp = cmd("frontier", "layer-by-layer extension of all feasible solutions")
    sp.add_argument("--stats-only", action="store_true")
    sp = cmd("profile", "support counts across a generated family", file=False)
    sp.add_argument("--family", choices=FAMILIES, required=True)
    sp.add_argument("--sizes", type=_sizes, required=True, help="size range A..B")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--colors", type=int, default=2, help="colors for the coloring families")
    sp = cmd("lookahead", "extension-call budget of every adjoint set")
    sp.add_argument("--samples", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp = cmd("mcp", "minimum chain partition of a DAG", file_help="digraph file")
    sp.add_argument("--original-arcs-only", action="store_true",
                    help="search for an MCP free of independent nodes")
    sp.add_argument("--all-pairs", action="store_true",
                    help="require every pair inside a chain to be an original arc")
    sp.add_argument("--start", type=_chains, help="start partition, e.g. '0,3,5;1,4;2'")
    cmd("hamiltonian", "minimum cycles/edges partition of a graph", file_help="graph file")
    sp = cmd("check", "exhaustive theorem checks")
    sp.add_argument("--theorems", type=_theorems, required=True)
    return p


def _system(args):
    obj = parse_instance(args.file)
    if isinstance(obj, Digraph):
        label = parse_label(args.file)
        return chains.chain_partition_system(obj, label=label)
    if isinstance(obj, Graph):
        raise InputError(f"{args.file}: graph files are only accepted by 'hamiltonian'")
    return obj


def _stats(spy):
    s = spy.stats()
    return {"full_membership_calls": s.full_membership_calls,
            "extension_predicate_calls": s.extension_predicate_calls}


def _run_analyze(args, inst, spy):
    triple = auxiliary.auxiliary_triple(inst, args.solution)
    support = not triple.residual
    f = core.objective(inst, triple.for_solution)
    result = {"solution": list(triple.for_solution), "W": list(triple.w_set),
              "S": list(triple.adjoint), "R": list(triple.residual),
              "objective": f, "support": support}
    lines = [f"pi={fmt_set(triple.for_solution)} W={fmt_set(triple.w_set)} S={fmt_set(triple.adjoint)} "
             f"R={fmt_set(triple.residual)} f={f} support={str(support).lower()}"]
    return result, lines, EXIT_OK


def _run_enumerate(args, inst, spy):
    b = solvers.enumerate_support(inst, args.limit)
    sols = [{"solution": list(s), "objective": core.objective(inst, s)} for s in b]
    lines = [f"{fmt_set(s['solution'])} f={s['objective']}" for s in sols]
    lines.append(f"Card(B)={b.cardinality}" + (" (truncated)" if b.truncated else ""))
    return {"supports": sols, "cardinality": b.cardinality, "truncated": b.truncated}, lines, EXIT_OK


def _run_greedy(args, inst, spy):
    sol, trace = solvers.greedy_construct(inst, args.sense, args.tiebreak)
    f = core.objective(inst, sol)
    steps = [{"element": s.element, "residual_size": s.residual_size, "predicate_calls": s.predicate_calls}
             for s in trace.steps]
    lines = [f"step {i}: adjoin {s['element']} (residual {s['residual_size']}, calls {s['predicate_calls']})"
             for i, s in enumerate(steps, 1)]
    lines.append(f"result {fmt_set(sol)} f={f} total_calls={trace.total_calls}")
    return {"solution": list(sol), "objective": f, "steps": steps,
            "total_calls": trace.total_calls}, lines, EXIT_OK


def _run_target(args, inst, spy):
    sol = solvers.find_support_with_value(inst, args.value)
    if sol is None:
        return {"target": args.value, "solution": None}, ["none"], EXIT_NOT_FOUND
    return {"target": args.value, "solution": list(sol)}, [fmt_set(sol)], EXIT_OK


def _run_extremal(args, inst, spy):
    sol, f = solvers.extremal_support(inst, args.sense)
    return {"sense": args.sense, "solution": list(sol), "objective": f}, [f"{fmt_set(sol)} f={f}"], EXIT_OK


def _run_frontier(args, inst, spy):
    st = solvers.frontier_run(inst, stats_only=args.stats_only)
    result = {"layers": [{"depth": d, "width": c} for d, c in st.layers],
              "support_count": st.support_count, "max_layer_width": st.max_layer_width,
              "max_support_size": st.max_support_size}
    lines = [f"layer {d}: {c}" for d, c in st.layers]
    lines.append(f"supports={st.support_count} max_width={st.max_layer_width} max_support_size={st.max_support_size}")
    if st.supports is not None:
        result["supports"] = [list(s) for s in st.supports]
        lines.extend(fmt_set(s) for s in st.supports)
    return result, lines, EXIT_OK


def _run_lookahead(args, inst, spy):
    prof = solvers.lookahead_profile(inst, args.samples, args.seed)
    rows = [{"size": k, "solutions": v.solutions, "budget": v.budget, "min_calls": v.min_calls,
             "max_calls": v.max_calls, "full_calls": v.full_calls}
            for k, v in prof.per_size.items()]
    lines = [f"|pi|={r['size']}: {r['solutions']} solutions, calls {r['min_calls']}..{r['max_calls']} "
             f"(budget {r['budget']})" for r in rows]
    lines.append(f"classification: {prof.classification}")
    lines.extend(prof.notes)
    return {"per_size": rows, "classification": prof.classification,
            "solutions_profiled": prof.solutions_profiled, "sampled": prof.sampled,
            "notes": prof.notes}, lines, EXIT_OK


def _run_check(args, inst, spy):
    reports = [auxiliary.check_theorem(inst, t) for t in args.theorems]
    ok = all(reports)
    result = {"theorems": [{"theorem": r.theorem, "passed": r.passed, "checked": r.checked,
                            "counterexample": r.counterexample, "details": r.details} for r in reports]}
    return result, [r.line() for r in reports], EXIT_OK if ok else EXIT_NOT_FOUND


def _run_profile(args):
    rows = solvers.nontriviality_profile(family(args.family, args.seed, args.colors), args.sizes)
    out = [{"size": r.size, "n": r.n, "support_count": r.support_count,
            "max_support_size": r.max_support_size,
            "growth": None if r.growth is None else str(r.growth)} for r in rows]
    lines = ["size,n,card_b,max_support_size,growth"]
    lines += [f"{r['size']},{r['n']},{r['support_count']},{r['max_support_size']},{r['growth'] or ''}"
              for r in out]
    return {"family": args.family, "seed": args.seed, "rows": out}, lines, EXIT_OK


def _run_mcp(args):
    d = parse_instance(args.file)
    if not isinstance(d, Digraph):
        raise InputError(f"{args.file}: mcp needs a digraph file")
    cp = chains.min_chain_partition(d)
    result = {"chains": [list(c) for c in cp.chains], "chain_count": cp.chain_count,
              "matching": [list(a) for a in cp.matching]}
    lines = [f"chain {'-'.join(map(str, c))}" for c in cp.chains]
    lines.append(f"chains={cp.chain_count} matching={len(cp.matching)}")
    code = EXIT_OK
    if args.original_arcs_only or args.all_pairs or args.start:
        start = cp if args.start is None else chains.ChainPartition.from_chains(d.vertex_count, args.start)
        crit = "all-pairs" if args.all_pairs else "consecutive"
        search = chains.alternating_transform_search(d, start, crit)
        res = search.result
        result["search"] = {
            "criterion": crit,
            "start": [list(c) for c in start.chains],
            "found": search.found,
            "visited": search.visited,
            "accepted": search.accepted,
            "result": None if res is None else [list(c) for c in res.chains],
            "components": [{"kind": c.kind, "removed": [list(a) for a in c.removed],
                            "added": [list(a) for a in c.added], "vertices": list(c.vertices)}
                           for c in search.components],
        }
        lines.append(f"search ({crit}) from {';'.join(','.join(map(str, c)) for c in start.chains)}: "
                     f"visited {search.visited} maximum matchings, {search.accepted} acceptable")
        if res is None:
            lines.append("none")
            code = EXIT_NOT_FOUND
        else:
            for c in search.components:
                lines.append(f"alternating {c.kind}: remove {c.removed} add {c.added}")
            lines.extend(f"result chain {'-'.join(map(str, c))}" for c in res.chains)
    return result, lines, code


def _run_hamiltonian(args):
    g = parse_instance(args.file)
    if not isinstance(g, Graph):
        raise InputError(f"{args.file}: hamiltonian needs a graph file")
    part = hamiltonian.hamiltonian_partition_bruteforce(g)
    direct = hamiltonian.hamiltonian_cycle_by_permutation(g)
    if part is None:
        result = {"feasible": False, "parts": None, "part_count": None, "hamiltonian": False}
        lines = ["infeasible: no partition into cycles and edges"]
    else:
        result = {"feasible": True, "part_count": part.part_count,
                  "parts": [{"kind": part.kind(p), "vertices": list(p)} for p in part.parts],
                  "hamiltonian": part.hamiltonian_cycle is not None}
        lines = [f"{part.kind(p)} {'-'.join(map(str, p))}" for p in part.parts]
        lines.append(f"parts={part.part_count}")
    result["permutation_search_cycle"] = None if direct is None else list(direct)
    lines.append(f"hamiltonian={str(result['hamiltonian']).lower()}")
    return result, lines, EXIT_OK if result["hamiltonian"] else EXIT_NOT_FOUND


SYSTEM_COMMANDS = {
    "analyze": _run_analyze, "enumerate": _run_enumerate, "greedy": _run_greedy,
    "target": _run_target, "extremal": _run_extremal, "frontier": _run_frontier,
    "lookahead": _run_lookahead, "check": _run_check,
}
OTHER_COMMANDS = {"profile": _run_profile, "mcp": _run_mcp, "hamiltonian": _run_hamiltonian}


def run_command(argv: List[str]) -> Tuple[dict, int]:
    """Parse ``argv``, run it and return ``(report, exit_code)``.

    Usage errors raise ``SystemExit(2)`` from argparse.
    """
    args = build_parser().parse_args(argv)
    report = {"command": args.command, "argv": list(argv)}
    t0 = time.perf_counter()
    try:
        if args.command in SYSTEM_COMMANDS:
            inst, spy = _system(args).instrumented()
            report["instance"] = inst.label
            result, lines, code = SYSTEM_COMMANDS[args.command](args, inst, spy)
            report["calls"] = _stats(spy)
        else:
            if getattr(args, "file", None):
                report["instance"] = parse_label(args.file)
            result, lines, code = OTHER_COMMANDS[args.command](args)
        report["result"] = result
    except IndepSysError as exc:
        report["error"] = str(exc)
        lines, code = [f"error: {exc}"], EXIT_INPUT
    if args.timing:
        report["wall_time"] = round(time.perf_counter() - t0, 6)
    report["exit_status"] = code
    report["_lines"] = lines
    report["_json"] = args.json
    return report, code


def render(report: dict) -> str:
    if report["_json"]:
        doc = {k: v for k, v in report.items() if not k.startswith("_")}
        return json.dumps(doc, sort_keys=True, indent=2)
    head = [f"# {report['command']}" + (f" [{report['instance']}]" if report.get("instance") else "")]
    tail = []
    if "calls" in report:
        c = report["calls"]
        tail.append(f"# calls: membership={c['full_membership_calls']} extension={c['extension_predicate_calls']}")
    if "wall_time" in report:
        tail.append(f"# wall_time: {report['wall_time']}s")
    return "\n".join(head + report["_lines"] + tail)


def main(argv: Optional[List[str]] = None) -> int:
    report, code = run_command(sys.argv[1:] if argv is None else argv)
    stream = sys.stderr if code == EXIT_INPUT and not report["_json"] else sys.stdout
    print(render(report), file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
