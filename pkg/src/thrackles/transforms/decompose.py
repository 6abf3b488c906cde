"""Recursive decomposition: split to low degree, bisect, recurse.

Each internal node splits its drawing down to maximum degree
ceil(n^(1/5)), bisects the resulting graph (exactly up to 20 vertices,
heuristically beyond), and recurses on the two induced sub-drawings.  The
tree records, per node, the vertex counts before and after splitting, the
cut size against the corresponding closed-form bound, and a conservation
certificate: leaf edge counts plus internal cut sizes add up to the root
edge count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional

from ..bisection import (
    EXACT_VERTEX_CAP,
    bisection_width_exact,
    bisection_width_heuristic,
    graph_of_drawing,
)
from ..drawing import Drawing, Edge
from ..extremal import COR_EQ2, BoundConstants, bound_value
from .splitting import split_vertices


def alpha(t: int) -> float:
    """(1/3)^(1-1/7t) + (2/3)^(1-1/7t); strictly above 1 for every t >= 1."""
    if t < 1:
        raise ValueError("t must be >= 1")
    exponent = 1 - 1 / (7 * t)
    value = (1 / 3) ** exponent + (2 / 3) ** exponent
    assert value > 1
    return value


def _ceil_fifth_root(n: int) -> int:
    d = 1
    while d ** 5 < n:
        d += 1
    return d


@dataclass
class DecompositionNode:
    vertex_ids: List[str]
    n_pre: int
    edge_count: int
    leaf: bool
    depth: int
    forced_leaf: bool = False
    delta: Optional[int] = None
    n_post: Optional[int] = None
    split_count: Optional[int] = None
    cut: Optional[int] = None
    cut_bound: Optional[float] = None
    bisection_mode: Optional[str] = None
    children: List["DecompositionNode"] = field(default_factory=list)

    def conserved(self) -> bool:
        if self.leaf:
            return True
        return self.edge_count == sum(c.edge_count for c in self.children) + self.cut

    def balanced(self) -> bool:
        if self.leaf:
            return True
        lo = -(-self.n_post // 3)
        hi = (2 * self.n_post) // 3
        return all(lo <= len(c.vertex_ids) <= hi for c in self.children)


@dataclass
class DecompositionTree:
    root: DecompositionNode
    t: int
    n0: int

    def nodes(self) -> List[DecompositionNode]:
        out = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            out.append(node)
            stack.extend(node.children)
        return out

    def leaves(self) -> List[DecompositionNode]:
        return [n for n in self.nodes() if n.leaf]

    def internal(self) -> List[DecompositionNode]:
        return [n for n in self.nodes() if not n.leaf]

    def conservation_holds(self) -> bool:
        total = sum(n.edge_count for n in self.leaves()) + sum(
            n.cut for n in self.internal()
        )
        return total == self.root.edge_count and all(n.conserved() for n in self.nodes())

    def balance_holds(self) -> bool:
        return all(n.balanced() for n in self.nodes())

    def to_dict(self) -> dict:
        def conv(node: DecompositionNode) -> dict:
            d = {
                "n": node.n_pre,
                "m": node.edge_count,
                "leaf": node.leaf,
                "depth": node.depth,
            }
            if node.forced_leaf:
                d["forced"] = True
            if not node.leaf:
                d.update(
                    delta=node.delta,
                    n_post=node.n_post,
                    split_count=node.split_count,
                    cut=node.cut,
                    cut_bound=node.cut_bound,
                    bisection_mode=node.bisection_mode,
                    children=[conv(c) for c in node.children],
                )
            return d

        return conv(self.root)


def _induced(d: Drawing, keep: set) -> Drawing:
    vertices = {v: p for v, p in d.vertices.items() if v in keep}
    edges = {
        eid: e for eid, e in d.edges.items() if e.tail in keep and e.head in keep
    }
    bip = None
    if d.bipartition:
        bip = {v: c for v, c in d.bipartition.items() if v in keep}
    return Drawing(vertices, edges, bip)


def recursive_decomposition(
    d: Drawing,
    t: int,
    k: BoundConstants = BoundConstants(),
    seed: int = 0,
    verify_splits: bool = False,
) -> DecompositionTree:
    """Build the decomposition tree for a simple drawing."""
    n0 = int(k.n0)
    max_depth = max(16, 8 + 4 * int(math.log(max(d.n, 2), 1.5)))

    def rec(current: Drawing, depth: int) -> DecompositionNode:
        n, m = current.n, current.m
        vids = sorted(current.vertices)
        if n <= n0 or depth >= max_depth:
            return DecompositionNode(
                vids, n, m, leaf=True, depth=depth, forced_leaf=n > n0
            )
        delta = _ceil_fifth_root(n)
        split, _cert = split_vertices(current, delta, verify=verify_splits)
        graph, order = graph_of_drawing(split)
        if graph.n <= EXACT_VERTEX_CAP:
            bis = bisection_width_exact(graph)
        else:
            bis = bisection_width_heuristic(graph, seed)
        side1 = {order[i] for i in bis.part1}
        side2 = {order[i] for i in bis.part2}
        child1 = rec(_induced(split, side1), depth + 1)
        child2 = rec(_induced(split, side2), depth + 1)
        node = DecompositionNode(
            vids,
            n,
            m,
            leaf=False,
            depth=depth,
            delta=delta,
            n_post=split.n,
            split_count=split.n - n,
            cut=bis.width,
            cut_bound=bound_value(COR_EQ2, max(split.n, 2), t, k),
            bisection_mode=bis.mode,
            children=[child1, child2],
        )
        assert node.conserved(), "edge conservation failed at a node"
        assert node.balanced(), "balance constraint failed at a node"
        return node

    root = rec(d, 0)
    tree = DecompositionTree(root, t, n0)
    assert tree.conservation_holds()
    return tree
