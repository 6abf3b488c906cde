"""Odd-crossing-pair counting and bisection width (exact and heuristic).

Bisection width b(G) is the minimum cut over vertex partitions with both
sides between 1/3 and 2/3 of the vertices (integer reading: ceil(n/3) and
floor(2n/3)).  The exact solver enumerates all balanced partitions with
numpy, which is comfortable up to n = 20; the heuristic is a deterministic
multistart greedy with balance-preserving moves and swaps, and only its
validity (a true cut of a balanced partition) is contractual.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .drawing import Drawing, classify_pair

EXACT_VERTEX_CAP = 20


class TooLarge(ValueError):
    pass


@dataclass(frozen=True)
class AbstractGraph:
    n: int
    edges: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"multi-edge ({u},{v})")
            seen.add(key)

    @staticmethod
    def from_pairs(n: int, pairs) -> "AbstractGraph":
        return AbstractGraph(n, tuple(sorted((min(u, v), max(u, v)) for u, v in pairs)))

    def degrees(self) -> List[int]:
        d = [0] * self.n
        for u, v in self.edges:
            d[u] += 1
            d[v] += 1
        return d


def graph_of_drawing(d: Drawing) -> Tuple[AbstractGraph, List[str]]:
    """Abstract graph of a drawing plus the vertex-id order used for indices."""
    order = sorted(d.vertices)
    idx = {v: i for i, v in enumerate(order)}
    pairs = [(idx[e.tail], idx[e.head]) for e in d.edges.values()]
    return AbstractGraph.from_pairs(len(order), pairs), order


@dataclass
class BisectionResult:
    width: int
    part1: Tuple[int, ...]
    part2: Tuple[int, ...]
    mode: str  # "exact" | "heuristic"


def balance_bounds(n: int) -> Tuple[int, int]:
    return -(-n // 3), (2 * n) // 3


def cut_size(g: AbstractGraph, side: set) -> int:
    return sum(1 for u, v in g.edges if (u in side) != (v in side))


def odd_crossing_pairs(obj) -> int:
    """Independent edge pairs with an odd crossing count in the given drawing.

    Accepts a Drawing or a RedrawnDrawing (anything exposing
    ``independent_pair_crossings()``).  This is a per-drawing count and hence
    an upper bound on the odd-crossing number of the abstract graph.
    """
    if hasattr(obj, "independent_pair_crossings"):
        return sum(1 for _, c in obj.independent_pair_crossings() if c % 2 == 1)
    d: Drawing = obj
    ids = d.edge_ids()
    count = 0
    for i, e1 in enumerate(ids):
        for e2 in ids[i + 1 :]:
            if d.shares_vertex(e1, e2):
                continue
            if classify_pair(d, e1, e2).crossings % 2 == 1:
                count += 1
    return count


def bisection_width_exact(g: AbstractGraph) -> BisectionResult:
    """Minimum balanced cut by exhaustive enumeration (n <= 20).

    Deterministic: among minimizers, the lexicographically least side
    containing vertex 0 is returned as part1.
    """
    n = g.n
    if n > EXACT_VERTEX_CAP:
        raise TooLarge(f"exact bisection handles at most {EXACT_VERTEX_CAP} vertices, got {n}")
    if n < 2:
        raise ValueError("need at least 2 vertices")
    lo, hi = balance_bounds(n)
    best_width = None
    best_mask = None
    # vertex 0 fixed on side 1 kills the complement symmetry
    total = 1 << (n - 1)
    chunk = 1 << 16
    edge_u = np.array([u for u, v in g.edges], dtype=np.int64)
    edge_v = np.array([v for u, v in g.edges], dtype=np.int64)
    shifts = np.arange(n, dtype=np.int64)
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        masks = (np.arange(start, stop, dtype=np.int64) << 1) | 1
        bits = (masks[:, None] >> shifts) & 1
        sizes = bits.sum(axis=1)
        ok = (sizes >= lo) & (sizes <= hi)
        if not ok.any():
            continue
        masks = masks[ok]
        bits = bits[ok]
        if len(g.edges):
            cuts = (bits[:, edge_u] != bits[:, edge_v]).sum(axis=1)
        else:
            cuts = np.zeros(len(masks), dtype=np.int64)
        i = int(cuts.argmin())
        # resolve ties toward the smallest mask in this chunk
        w = int(cuts[i])
        tie = np.flatnonzero(cuts == w)
        m = int(masks[tie].min())
        if best_width is None or w < best_width or (w == best_width and m < best_mask):
            best_width, best_mask = w, m
    part1 = tuple(i for i in range(n) if best_mask >> i & 1)
    part2 = tuple(i for i in range(n) if not best_mask >> i & 1)
    return BisectionResult(best_width, part1, part2, "exact")


def _descend(g: AbstractGraph, side: set) -> set:
    """Best-improvement local search with balance-keeping moves and swaps."""
    n = g.n
    lo, hi = balance_bounds(n)
    adj = [set() for _ in range(n)]
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)

    def gain_move(v):
        # cut reduction when v switches sides
        same = sum(1 for w in adj[v] if (w in side) == (v in side))
        return (len(adj[v]) - same) - same

    improved = True
    while improved:
        improved = False
        best_delta = 0
        best_action = None
        size1 = len(side)
        for v in range(n):
            in1 = v in side
            new1 = size1 - 1 if in1 else size1 + 1
            if not (lo <= new1 <= hi and lo <= n - new1 <= hi):
                continue
            delta = gain_move(v)
            if delta > best_delta:
                best_delta, best_action = delta, ("move", v)
        for u in range(n):
            if u not in side:
                continue
            for v in range(n):
                if v in side:
                    continue
                delta = gain_move(u) + gain_move(v)
                if v in adj[u]:
                    delta -= 2
                if delta > best_delta:
                    best_delta, best_action = delta, ("swap", u, v)
        if best_action:
            improved = True
            if best_action[0] == "move":
                v = best_action[1]
                side ^= {v}
            else:
                _, u, v = best_action
                side.remove(u)
                side.add(v)
    return side


def bisection_width_heuristic(g: AbstractGraph, seed: int, starts: int = 8) -> BisectionResult:
    """Upper bound on the bisection width by deterministic multistart descent."""
    n = g.n
    if n < 3:
        raise ValueError("heuristic needs n >= 3")
    rng = random.Random(seed)
    best = None
    for _ in range(starts):
        verts = list(range(n))
        rng.shuffle(verts)
        side = set(verts[: n // 2])
        side = _descend(g, side)
        w = cut_size(g, side)
        if 0 in side:
            canon = tuple(sorted(side))
        else:
            canon = tuple(sorted(set(range(n)) - side))
        key = (w, canon)
        if best is None or key < best:
            best = key
    w, part1 = best
    part2 = tuple(sorted(set(range(n)) - set(part1)))
    return BisectionResult(w, part1, part2, "heuristic")
