"""Complete-positivity classification via long-odd-cycle detection.

A graph is CP exactly when it contains no odd cycle of length >= 5 as a
subgraph.  Detection is an exhaustive simple-path DFS with two prunings
(bipartite components are skipped; vertices are peeled while their degree
stays below 2), validated against a line-graph perfection cross-check on
small instances.  A biconnected-component fast path sits behind a flag and
must agree with the DFS everywhere it is tested.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from .errors import OrderCapError, ParameterError
from .graphs import Graph, complement, connected_components, line_graph
from .numeric import jacobi_eigenvalues

LONG_ODD_CYCLE_ORDER_CAP = 12
LINE_GRAPH_EDGE_CAP = 10
PSD_TOL = -1e-9


class CpReason(str, Enum):
    BIPARTITE = "bipartite"
    SMALL_ORDER = "small-order"
    NO_LONG_ODD_CYCLE = "no-long-odd-cycle"
    LONG_ODD_CYCLE_FOUND = "long-odd-cycle-found"


@dataclass(frozen=True)
class CpVerdict:
    is_cp: bool
    reason: CpReason
    witness: Optional[tuple[int, ...]] = None

    def to_json(self) -> dict:
        return {
            "is_cp": self.is_cp,
            "reason": self.reason.value,
            "witness": list(self.witness) if self.witness is not None else None,
        }


def is_bipartite(g: Graph) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """A 2-coloring as (side0, side1) if one exists, else None."""
    masks = g.neighbor_masks()
    color = [-1] * g.order
    for s in range(g.order):
        if color[s] != -1:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in range(g.order):
                if (masks[v] >> u) & 1:
                    if color[u] == -1:
                        color[u] = 1 - color[v]
                        stack.append(u)
                    elif color[u] == color[v]:
                        return None
    side0 = tuple(v for v in range(g.order) if color[v] == 0)
    side1 = tuple(v for v in range(g.order) if color[v] == 1)
    return side0, side1


def _component_bipartite(masks: list[int], comp: list[int]) -> bool:
    color = {}
    for s in comp:
        if s in color:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in comp:
                if (masks[v] >> u) & 1:
                    if u not in color:
                        color[u] = 1 - color[v]
                        stack.append(u)
                    elif color[u] == color[v]:
                        return False
    return True


def _peel_low_degree(masks: list[int], active: int) -> int:
    """Iteratively drop vertices with fewer than 2 active neighbors."""
    changed = True
    while changed:
        changed = False
        v = 0
        rest = active
        while rest:
            if rest & 1 and (masks[v] & active).bit_count() < 2:
                active &= ~(1 << v)
                changed = True
            rest >>= 1
            v += 1
    return active


def _dfs_long_odd_cycle(masks: list[int], active: int) -> Optional[list[int]]:
    """Exhaustive anchored simple-path search inside the active vertex set."""
    work = active
    while work:
        work = _peel_low_degree(masks, work)
        if work.bit_count() < 5:
            return None
        anchor = (work & -work).bit_length() - 1  # lowest active vertex
        found = _paths_from(masks, work, anchor)
        if found is not None:
            return found
        work &= ~(1 << anchor)  # remaining cycles avoid this anchor
    return None


def _paths_from(masks: list[int], active: int, anchor: int) -> Optional[list[int]]:
    path = [anchor]
    anchor_mask = masks[anchor]

    def extend(v: int, visited: int) -> Optional[list[int]]:
        candidates = masks[v] & active & ~visited
        while candidates:
            u = (candidates & -candidates).bit_length() - 1
            candidates &= candidates - 1
            path.append(u)
            length = len(path)
            if length >= 5 and length % 2 == 1 and (anchor_mask >> u) & 1:
                return path[:]
            result = extend(u, visited | (1 << u))
            if result is not None:
                return result
            path.pop()
        return None

    return extend(anchor, 1 << anchor)


def _block_vertex_sets(g: Graph) -> list[list[int]]:
    """Vertex sets of the biconnected components (Hopcroft-Tarjan, iterative)."""
    masks = g.neighbor_masks()
    disc = [-1] * g.order
    low = [0] * g.order
    parent = [-1] * g.order
    stack: list[tuple[int, int]] = []
    blocks: list[list[int]] = []
    counter = 0
    for root in range(g.order):
        if disc[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, child = work[-1]
            if child == 0:
                disc[v] = low[v] = counter
                counter += 1
            advanced = False
            for u in range(child, g.order):
                work[-1] = (v, u + 1)
                if not (masks[v] >> u) & 1:
                    continue
                if disc[u] == -1:
                    parent[u] = v
                    stack.append((v, u))
                    work.append((u, 0))
                    advanced = True
                    break
                if u != parent[v] and disc[u] < disc[v]:
                    stack.append((v, u))
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            work.pop()
            if work:
                p = work[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] >= disc[p]:
                    verts = set()
                    while stack and stack[-1] != (p, v):
                        a, b = stack.pop()
                        verts.update((a, b))
                    if stack:
                        a, b = stack.pop()
                        verts.update((a, b))
                    if verts:
                        blocks.append(sorted(verts))
    return blocks


def find_long_odd_cycle(g: Graph, *, use_block_decomposition: bool = False
                        ) -> Optional[list[int]]:
    """A simple odd cycle of length >= 5 given as a vertex list, or None.

    "Contains" means as a subgraph, not induced.  Exhaustive within the order
    cap; the block-decomposition path is the optional fast route and returns
    the same verdict.
    """
    if g.order > LONG_ODD_CYCLE_ORDER_CAP:
        raise OrderCapError(
            f"long-odd-cycle search capped at order {LONG_ODD_CYCLE_ORDER_CAP}")
    masks = g.neighbor_masks()
    if use_block_decomposition:
        for verts in _block_vertex_sets(g):
            if len(verts) < 5:
                continue
            if _component_bipartite(masks, verts):
                continue
            mask = 0
            for v in verts:
                mask |= 1 << v
            found = _dfs_long_odd_cycle(masks, mask)
            if found is not None:
                return found
        return None
    for comp in connected_components(g):
        if len(comp) < 5:
            continue
        if _component_bipartite(masks, comp):
            continue
        mask = 0
        for v in comp:
            mask |= 1 << v
        found = _dfs_long_odd_cycle(masks, mask)
        if found is not None:
            return found
    return None


def check_long_odd_cycle_witness(g: Graph, cycle: Sequence[int]) -> bool:
    """Validate a witness: simple, odd, length >= 5, consecutive edges present."""
    k = len(cycle)
    if k < 5 or k % 2 == 0 or len(set(cycle)) != k:
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k))


def is_cp_graph(g: Graph) -> CpVerdict:
    """CP classification with a reason and, when not CP, a long-odd-cycle witness."""
    if g.order > LONG_ODD_CYCLE_ORDER_CAP:
        raise OrderCapError(
            f"CP classification capped at order {LONG_ODD_CYCLE_ORDER_CAP}")
    if g.order < 5:
        return CpVerdict(True, CpReason.SMALL_ORDER)
    if is_bipartite(g) is not None:
        return CpVerdict(True, CpReason.BIPARTITE)
    cycle = find_long_odd_cycle(g)
    if cycle is None:
        return CpVerdict(True, CpReason.NO_LONG_ODD_CYCLE)
    return CpVerdict(False, CpReason.LONG_ODD_CYCLE_FOUND, tuple(cycle))


def is_doubly_nonnegative(matrix) -> bool:
    """Entrywise nonnegative and positive semidefinite (within -1e-9)."""
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ParameterError("matrix must be square")
    if not np.array_equal(a, a.T):
        raise ParameterError("matrix must be symmetric")
    if (a < 0).any():
        return False
    return min(jacobi_eigenvalues(a)) >= PSD_TOL


def _has_induced_long_odd_cycle(h: Graph) -> bool:
    masks = h.neighbor_masks()
    n = h.order
    for size in range(5, n + 1, 2):
        for subset in combinations(range(n), size):
            sub_mask = 0
            for v in subset:
                sub_mask |= 1 << v
            if any((masks[v] & sub_mask).bit_count() != 2 for v in subset):
                continue
            # 2-regular induced subgraph; a single cycle iff connected
            seen = 1 << subset[0]
            stack = [subset[0]]
            while stack:
                v = stack.pop()
                nxt = masks[v] & sub_mask & ~seen
                while nxt:
                    u = (nxt & -nxt).bit_length() - 1
                    nxt &= nxt - 1
                    seen |= 1 << u
                    stack.append(u)
            if seen == sub_mask:
                return True
    return False


def line_graph_perfection_cross_check(g: Graph) -> bool:
    """True iff the line graph of g is perfect (no odd hole or odd antihole).

    Brute-force search over induced odd cycles in L(g) and its complement;
    independent route to the CP verdict on small graphs.
    """
    if g.edge_count > LINE_GRAPH_EDGE_CAP:
        raise ParameterError(
            f"line-graph cross-check capped at {LINE_GRAPH_EDGE_CAP} edges")
    if g.edge_count == 0:
        return True  # edgeless line graph is trivially perfect
    lg = line_graph(g)
    if _has_induced_long_odd_cycle(lg):
        return False
    return not _has_induced_long_odd_cycle(complement(lg))
