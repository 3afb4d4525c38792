"""Command line front end.

Subcommands: find-subtree, find-cycle, subset-sum, gen, dot, oracle.
Results print as single greppable lines (SUBTREE ..., CYCLE ..., NOTFOUND);
--json switches to one JSON report object.  Exit codes are a stable
contract: 0 found/true, 2 not-found/not-applicable/false, 1 error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import asdict, dataclass

from . import generators
from .errors import InstanceTooLargeError, TreeWindowError
from .euler import find_subtree, verify_subtree
from .planar import (
    CycleResult,
    find_cycle_near,
    find_half_cycle_3conn,
    parse_graph,
    serialize_graph,
    verify_cycle,
)
from .subsetsum import (
    NOT_APPLICABLE,
    Decision,
    SubsetWitness,
    oracle_subset_sum,
    partition_dense,
    subset_sum_dense,
    subset_sum_via_partition,
    verify_witness,
)
from .tree import (
    WeightedTree,
    achievable_subtree_weights,
    check_conditions,
    parse_tree,
    serialize_tree,
    tight_instance,
)

_EXIT = {"found": 0, "not-found": 2, "not-applicable": 2, "error": 1}


@dataclass
class RunReport:
    subcommand: str
    input_digest: str
    outcome: str  # found | not-found | not-applicable | error
    payload: dict | None
    step_count: int | None
    wall_time_ms: float


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:12]


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(report: RunReport, lines: list[str], as_json: bool) -> int:
    if as_json:
        print(json.dumps(asdict(report), sort_keys=True))
    else:
        for line in lines:
            print(line)
    return _EXIT[report.outcome]


def _ids(csv: str) -> list[int]:
    try:
        return [int(tok) for tok in csv.replace(",", " ").split()]
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {csv!r}") from None


def _kind(text: str) -> str:
    """First meaningful token of an instance file: 'tree' or 'graph'."""
    for line in text.splitlines():
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            return stripped.split()[0]
    return ""


# ---------------------------------------------------------------------------
# find-subtree
# ---------------------------------------------------------------------------


def _cmd_find_subtree(args) -> int:
    text = _read(args.file)
    tree = parse_tree(text)
    t0 = time.perf_counter()

    if args.check_only:
        report = check_conditions(tree, args.k, args.g)
        ms = (time.perf_counter() - t0) * 1000
        flags = report.flags()
        lines = [
            "CONDITIONS "
            + " ".join(f"{name}={'ok' if val else 'FAIL'}" for name, val in flags.items())
            + f" overall={'ok' if report.overall else 'FAIL'}"
        ]
        run = RunReport(
            "find-subtree", _digest(text),
            "found" if report.overall else "not-found",
            {"flags": flags, "overall": report.overall,
             "k": args.k, "g": args.g, "n2": report.params.n2, "h": report.params.h},
            None, round(ms, 3),
        )
        return _emit(run, lines, args.json)

    result = find_subtree(tree, args.k, args.g, start=args.start)
    ms = (time.perf_counter() - t0) * 1000

    if args.oracle:
        achievable = achievable_subtree_weights(tree)
        window = set(range(max(1, args.k - args.g + 1), args.k + 1))
        if result is None and window & achievable:
            raise AssertionError(
                f"oracle found achievable weights {sorted(window & achievable)} "
                "in the window but the search returned nothing"
            )
        if result is not None and result.weight not in achievable:
            raise AssertionError(
                f"search weight {result.weight} is not oracle-achievable"
            )

    if result is None:
        run = RunReport("find-subtree", _digest(text), "not-found",
                        None, None, round(ms, 3))
        return _emit(run, ["NOTFOUND"], args.json)

    assert verify_subtree(tree, result, args.k, args.g)
    verts = sorted(result.vertices)
    run = RunReport(
        "find-subtree", _digest(text), "found",
        {"weight": result.weight, "vertices": verts,
         "window": list(result.window)},
        result.steps, round(ms, 3),
    )
    line = f"SUBTREE weight={result.weight} vertices={','.join(map(str, verts))}"
    return _emit(run, [line], args.json)


# ---------------------------------------------------------------------------
# find-cycle
# ---------------------------------------------------------------------------


def _cmd_find_cycle(args) -> int:
    text = _read(args.file)
    graph, ham = parse_graph(text)
    t0 = time.perf_counter()

    if args.half3conn:
        cycle: CycleResult | None = find_half_cycle_3conn(graph, ham)
    else:
        if args.k is None or args.g is None:
            raise ValueError("find-cycle needs k and g unless --half3conn is given")
        cycle = find_cycle_near(graph, ham, args.k, args.g)
    ms = (time.perf_counter() - t0) * 1000

    if cycle is None:
        run = RunReport("find-cycle", _digest(text), "not-found",
                        None, None, round(ms, 3))
        return _emit(run, ["NOTFOUND"], args.json)

    assert verify_cycle(graph, cycle)
    run = RunReport(
        "find-cycle", _digest(text), "found",
        {"length": cycle.length, "vertices": list(cycle.vertices)},
        None, round(ms, 3),
    )
    line = (f"CYCLE length={cycle.length} "
            f"vertices={','.join(map(str, cycle.vertices))}")
    return _emit(run, [line], args.json)


# ---------------------------------------------------------------------------
# subset-sum
# ---------------------------------------------------------------------------


def _solve_subset_sum(values: tuple[int, ...], k: int, fallback: bool):
    """Dense solvers in order of strength, then the DP if allowed.
    Returns (decision: bool | None, witness, method)."""
    res = subset_sum_dense(values, k)
    if res is not NOT_APPLICABLE:
        return True, res, "dense"

    total = sum(values)
    if 2 * k <= total:
        via = subset_sum_via_partition(values, k)
        if via is not NOT_APPLICABLE:
            return via.value, via.witness, "via-partition"
    elif k <= total:
        # A subset sums to k exactly when its complement sums to total - k.
        via = subset_sum_via_partition(values, total - k)
        if via is not NOT_APPLICABLE:
            witness = None
            if via.witness is not None:
                rest = sorted(set(range(len(values))) - set(via.witness.indices))
                witness = SubsetWitness(tuple(rest), k)
            return via.value, witness, "via-partition"

    if fallback:
        wit = oracle_subset_sum(values, k)
        return (wit is not None), wit, "oracle"
    return None, None, None


def _cmd_subset_sum(args) -> int:
    raw = args.values
    if args.values_opt is not None:
        raw = args.values_opt
        # with --values, a lone positional token is the target k
        if args.values is not None:
            if args.k is not None or not args.values.lstrip("-").isdigit():
                raise ValueError("give the multiset exactly once, "
                                 "positionally or with --values")
            args.k = int(args.values)
    if raw is None:
        raise ValueError("subset-sum needs a multiset, positionally "
                         "or with --values")
    if raw == "-":
        raw = sys.stdin.readline()
    values = tuple(_ids(raw))
    digest = _digest(f"{values}|{args.k}|{args.partition}")
    t0 = time.perf_counter()

    if args.partition:
        if args.k is not None:
            raise ValueError("--partition takes no target k")
        res = partition_dense(values)
        if res is NOT_APPLICABLE and args.fallback_oracle:
            total = sum(values)
            wit = (oracle_subset_sum(values, total // 2)
                   if total % 2 == 0 else None)
            res = Decision(wit is not None, wit)
        ms = (time.perf_counter() - t0) * 1000
        if res is NOT_APPLICABLE:
            run = RunReport("subset-sum", digest, "not-applicable",
                            None, None, round(ms, 3))
            return _emit(run, ["NOTAPPLICABLE"], args.json)
        if res.value:
            assert res.witness is not None
            assert verify_witness(values, res.witness, sum(values) // 2)
            idxs = ",".join(map(str, res.witness.indices))
            run = RunReport("subset-sum", digest, "found",
                            {"decision": True, "witness": list(res.witness.indices)},
                            None, round(ms, 3))
            return _emit(run, [f"PARTITION TRUE left={idxs}"], args.json)
        run = RunReport("subset-sum", digest, "not-found",
                        {"decision": False, "witness": None}, None, round(ms, 3))
        return _emit(run, ["PARTITION FALSE"], args.json)

    if args.k is None:
        raise ValueError("subset-sum needs a target k (or --partition)")
    if args.k > sum(values):
        decision, witness, method = False, None, "trivial"
    else:
        decision, witness, method = _solve_subset_sum(
            values, args.k, args.fallback_oracle
        )
    ms = (time.perf_counter() - t0) * 1000

    if decision is None:
        run = RunReport("subset-sum", digest, "not-applicable",
                        None, None, round(ms, 3))
        return _emit(run, ["NOTAPPLICABLE"], args.json)
    if decision:
        assert witness is not None and verify_witness(values, witness, args.k)
        idxs = ",".join(map(str, witness.indices))
        run = RunReport("subset-sum", digest, "found",
                        {"decision": True, "witness": list(witness.indices),
                         "method": method}, None, round(ms, 3))
        return _emit(run, [f"SUBSETSUM TRUE indices={idxs}"], args.json)
    run = RunReport("subset-sum", digest, "not-found",
                    {"decision": False, "witness": None, "method": method},
                    None, round(ms, 3))
    return _emit(run, ["SUBSETSUM FALSE"], args.json)


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------

_TIGHT_BY_CLI = {
    "tight-star": "star_gh",
    "tight-path-lower": "path_lower",
    "tight-path-upper": "path_upper",
    "tight-star-cap": "star_cap",
}

_GRAPH_FAMILIES = {
    "square-cycle": generators.square_cycle,
    "square-cycle-fanned": generators.square_cycle_fanned,
    "small-face-ring": generators.small_face_ring,
    "malkevitch": generators.malkevitch,
}


def _cmd_gen(args) -> int:
    family = args.family
    params = args.params

    def need(count: int, usage: str) -> None:
        if len(params) != count:
            raise ValueError(f"{family} takes {usage}")

    if family in _TIGHT_BY_CLI:
        if family in ("tight-path-lower", "tight-star-cap"):
            need(2, "two parameters: p q")
            inst = tight_instance(_TIGHT_BY_CLI[family], params[0], params[1])
            extra = f" q={params[1]}"
        else:
            need(1, "one parameter: p")
            inst = tight_instance(_TIGHT_BY_CLI[family], params[0])
            extra = ""
        print(f"# family={family} p={params[0]}{extra} "
              f"k={inst.k} g={inst.g} fails={inst.failing_flag}")
        sys.stdout.write(serialize_tree(inst.tree))
        return 0

    if family == "random-tree":
        need(1, "one parameter: n (plus --max-weight, --seed)")
        tree = generators.random_tree(params[0], args.max_weight, args.seed)
        print(f"# family=random-tree n={params[0]} "
              f"max-weight={args.max_weight} seed={args.seed}")
        sys.stdout.write(serialize_tree(tree))
        return 0

    if family in _GRAPH_FAMILIES:
        need(1, "one parameter")
        graph, ham = _GRAPH_FAMILIES[family](params[0])
        print(f"# family={family} n={graph.n_vertices} m={graph.n_edges}")
        sys.stdout.write(serialize_graph(graph, ham))
        return 0

    raise ValueError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# dot
# ---------------------------------------------------------------------------


def _dot_tree(tree: WeightedTree, highlight: set[int]) -> str:
    out = ["graph tree {", "  node [shape=circle];"]
    for v in range(tree.n_vertices):
        style = " style=filled fillcolor=gold" if v in highlight else ""
        out.append(f'  {v} [label="{v}\\nw={tree.weights[v]}"{style}];')
    for v in range(tree.n_vertices):
        for u in tree.adjacency[v]:
            if v < u:
                out.append(f"  {v} -- {u};")
    out.append("}")
    return "\n".join(out) + "\n"


def _dot_graph(graph, ham, cycle: list[int] | None) -> str:
    marked = set()
    if cycle:
        marked = {
            tuple(sorted((cycle[i], cycle[(i + 1) % len(cycle)])))
            for i in range(len(cycle))
        }
    out = ["graph plane {", "  node [shape=circle];", "  layout=circo;"]
    for v in ham.order:
        out.append(f"  {v};")
    for v, u in sorted(graph.edges()):
        style = " [color=red penwidth=2]" if (v, u) in marked else ""
        out.append(f"  {v} -- {u}{style};")
    out.append("}")
    return "\n".join(out) + "\n"


def _cmd_dot(args) -> int:
    text = _read(args.file)
    head = _kind(text)
    highlight = _ids(args.highlight) if args.highlight else []
    if head == "tree":
        tree = parse_tree(text)
        bad = [v for v in highlight if not 0 <= v < tree.n_vertices]
        if bad:
            raise ValueError(f"highlight ids out of range: {bad}")
        sys.stdout.write(_dot_tree(tree, set(highlight)))
        return 0
    graph, ham = parse_graph(text)
    if highlight:
        if not verify_cycle(graph, CycleResult(tuple(highlight))):
            raise ValueError("highlight is not a cycle of the graph")
    sys.stdout.write(_dot_graph(graph, ham, highlight or None))
    return 0


# ---------------------------------------------------------------------------
# oracle
# ---------------------------------------------------------------------------

_ORACLE_GRAPH_LIMIT = 20


def _oracle_cycle_lengths(graph) -> list[int]:
    if graph.n_vertices > _ORACLE_GRAPH_LIMIT:
        raise InstanceTooLargeError(
            f"cycle spectrum oracle is exponential; limit is "
            f"{_ORACLE_GRAPH_LIMIT} vertices, got {graph.n_vertices}"
        )
    lengths: set[int] = set()

    def walk(start: int, v: int, seen: set[int], depth: int) -> None:
        for u in graph.adjacency[v]:
            if u == start and depth >= 3:
                lengths.add(depth)
            elif u > start and u not in seen:
                seen.add(u)
                walk(start, u, seen, depth + 1)
                seen.discard(u)

    for s in range(graph.n_vertices):
        walk(s, s, {s}, 1)
    return sorted(lengths)


def _cmd_oracle(args) -> int:
    text = _read(args.file)
    head = _kind(text)
    t0 = time.perf_counter()
    if head == "tree":
        tree = parse_tree(text)
        found = sorted(achievable_subtree_weights(tree))
        kind, label = "weights", "WEIGHTS"
    else:
        graph, _ = parse_graph(text)
        found = _oracle_cycle_lengths(graph)
        kind, label = "lengths", "LENGTHS"
    ms = (time.perf_counter() - t0) * 1000

    if args.k is not None:
        hit = args.k in found
        run = RunReport("oracle", _digest(text),
                        "found" if hit else "not-found",
                        {kind: found, "k": args.k}, None, round(ms, 3))
        word = "present" if hit else "absent"
        return _emit(run, [f"{label} k={args.k} {word}"], args.json)

    run = RunReport("oracle", _digest(text), "found",
                    {kind: found}, None, round(ms, 3))
    return _emit(run, [f"{label} {','.join(map(str, found))}"], args.json)


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="treewindow",
        description="Weight-window subtree search and its cycle/subset-sum applications.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("find-subtree",
                       help="subtree of weight in [k-g+1, k] in a weighted tree")
    p.add_argument("file", help="tree file, or - for stdin")
    p.add_argument("k", type=int)
    p.add_argument("g", type=int)
    p.add_argument("--start", type=int, default=0,
                   help="stop index to open the window at")
    p.add_argument("--check-only", action="store_true",
                   help="print the sufficient-condition report and stop")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check the outcome against the exact weight set")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_find_subtree)

    p = sub.add_parser("find-cycle",
                       help="cycle of length in [k-g+1, k] in a plane hamiltonian graph")
    p.add_argument("file", help="graph file, or - for stdin")
    p.add_argument("k", type=int, nargs="?")
    p.add_argument("g", type=int, nargs="?")
    p.add_argument("--half3conn", action="store_true",
                   help="cycle of length n/2-1 or n/2-2 (3-connected, min degree 4)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_find_cycle)

    p = sub.add_parser("subset-sum",
                       help="dense subset-sum / partition decision with witness")
    p.add_argument("values", nargs="?",
                   help="the multiset: integers separated by commas or "
                        "spaces, or - to read one line from stdin")
    p.add_argument("k", type=int, nargs="?")
    p.add_argument("--values", dest="values_opt", metavar="VALUES",
                   help="alternative to the positional form")
    p.add_argument("--partition", action="store_true")
    p.add_argument("--fallback-oracle", action="store_true",
                   help="run the exact DP when the dense thresholds do not apply")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_subset_sum)

    p = sub.add_parser("gen", help="write a generated instance to stdout")
    p.add_argument("family", help="tight-star, tight-path-lower, tight-path-upper, "
                                  "tight-star-cap, random-tree, malkevitch, "
                                  "square-cycle, square-cycle-fanned, small-face-ring")
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--max-weight", type=int, default=9)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("dot", help="DOT rendering of a tree or graph file")
    p.add_argument("file")
    p.add_argument("--highlight", help="comma-separated vertex ids "
                                       "(subtree for trees, cycle walk for graphs)")
    p.set_defaults(fn=_cmd_dot)

    p = sub.add_parser("oracle",
                       help="exhaustive reference answers (small instances)")
    p.add_argument("file", help="tree or graph file")
    p.add_argument("--k", type=int, help="report presence of this weight/length")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_oracle)
    return top


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (TreeWindowError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
