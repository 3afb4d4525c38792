"""Independent brute-force reference implementations for cross-checks.

Everything here is deliberately naive: exhaustive enumeration with no
shared code or ideas with the package internals, so agreement between the
two is meaningful evidence.
"""

from __future__ import annotations

from treewindow import WeightedTree


def naive_subtree_weights(tree: WeightedTree) -> set[int]:
    """Weights of all connected vertex subsets, by subset enumeration.
    Exponential; keep n under ~15."""
    n = tree.n_vertices
    found: set[int] = set()
    for mask in range(1, 1 << n):
        first = (mask & -mask).bit_length() - 1
        seen = 1 << first
        stack = [first]
        while stack:
            for u in tree.adjacency[stack.pop()]:
                bit = 1 << u
                if mask & bit and not seen & bit:
                    seen |= bit
                    stack.append(u)
        if seen == mask:
            total = 0
            rest = mask
            while rest:
                v = (rest & -rest).bit_length() - 1
                total += tree.weights[v]
                rest &= rest - 1
            found.add(total)
    return found


def naive_cycle_lengths(adjacency) -> set[int]:
    """Lengths of all simple cycles, by DFS from each minimal vertex.
    Exponential; keep the graph small."""
    lengths: set[int] = set()

    def walk(start: int, v: int, seen: set[int], depth: int) -> None:
        for u in adjacency[v]:
            if u == start and depth >= 3:
                lengths.add(depth)
            elif u > start and u not in seen:
                seen.add(u)
                walk(start, u, seen, depth + 1)
                seen.discard(u)

    for s in range(len(adjacency)):
        walk(s, s, {s}, 1)
    return lengths


def naive_subset_sums(values) -> set[int]:
    """All achievable subset sums including 0."""
    sums = {0}
    for v in values:
        sums |= {s + v for s in sums}
    return sums
