"""Topological-drawing data model: validation, pair classification, flags.

A Drawing holds vertices at exact rational points and edges drawn as simple
polyline arcs.  Validation enforces the nondegeneracy conditions: arcs end at
their declared vertices, no arc passes through a foreign vertex, every pair
of arcs meets in finitely many points, and no point is interior to three or
more arcs.  Tangencies are legal data here (they make tangled thrackles
representable); simplicity is a separate query.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Tuple

from .geometry import (
    DegenerateOverlap,
    IntersectionEvent,
    PROPER_CROSSING,
    Point,
    SHARED_ENDPOINT,
    TOUCH,
    GeometryError,
    arc_intersections,
    point_on_polyline,
    validate_polyline,
)

COMMON_ENDPOINT = "common_endpoint"
CROSSING = "crossing"
TANGENT = "tangent"
DISJOINT = "disjoint"
MIXED = "mixed"


class UnknownEdge(KeyError):
    pass


@dataclass(frozen=True)
class Edge:
    tail: str
    head: str
    arc: Tuple[Point, ...]


@dataclass(frozen=True)
class PairClass:
    relation: str
    crossings: int
    touches: int
    shared_endpoints: int

    @property
    def total(self) -> int:
        return self.crossings + self.touches + self.shared_endpoints


@dataclass
class Violation:
    code: str
    detail: str
    location: Optional[Point] = None

    def __str__(self):
        loc = f" at {self.location}" if self.location is not None else ""
        return f"[{self.code}] {self.detail}{loc}"


class Drawing:
    """Immutable-by-convention drawing; pair events are cached lazily."""

    def __init__(
        self,
        vertices: Dict[str, Point],
        edges: Dict[str, Edge],
        bipartition: Optional[Dict[str, str]] = None,
    ):
        self.vertices = dict(vertices)
        self.edges = dict(edges)
        self.bipartition = dict(bipartition) if bipartition else None
        self._pair_cache: Dict[Tuple[str, str], list] = {}

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_ids(self) -> list:
        return sorted(self.edges)

    def degree(self, v: str) -> int:
        return sum(1 for e in self.edges.values() if v in (e.tail, e.head))

    def degrees(self) -> Dict[str, int]:
        d = {v: 0 for v in self.vertices}
        for e in self.edges.values():
            d[e.tail] += 1
            d[e.head] += 1
        return d

    def pair_events(self, e1: str, e2: str) -> list:
        """Classified common points of the two edge arcs (cached)."""
        if e1 not in self.edges or e2 not in self.edges:
            raise UnknownEdge(e1 if e1 not in self.edges else e2)
        key = (e1, e2) if e1 <= e2 else (e2, e1)
        if key not in self._pair_cache:
            a, b = self.edges[key[0]], self.edges[key[1]]
            self._pair_cache[key] = arc_intersections(a.arc, b.arc)
        return self._pair_cache[key]

    def shares_vertex(self, e1: str, e2: str) -> bool:
        a, b = self.edges[e1], self.edges[e2]
        return len({a.tail, a.head} & {b.tail, b.head}) > 0


def validate(d: Drawing) -> list:
    """Return every violation of the drawing axioms (empty list = valid)."""
    violations = []
    vertex_points = {}
    for vid, p in d.vertices.items():
        if p in vertex_points:
            violations.append(Violation("duplicate-vertex-point", f"{vid} and {vertex_points[p]}", p))
        vertex_points[p] = vid

    endpoint_sets = {}
    for eid, e in sorted(d.edges.items()):
        if e.tail not in d.vertices or e.head not in d.vertices:
            violations.append(Violation("unknown-vertex", f"edge {eid}"))
            continue
        if e.tail == e.head:
            violations.append(Violation("loop", f"edge {eid} is a self-loop"))
            continue
        key = frozenset((e.tail, e.head))
        if key in endpoint_sets:
            violations.append(
                Violation("parallel-edges", f"edges {endpoint_sets[key]} and {eid} join the same vertices")
            )
        endpoint_sets[key] = eid
        try:
            validate_polyline(e.arc)
        except GeometryError as exc:
            violations.append(Violation("bad-arc", f"edge {eid}: {exc}"))
            continue
        if e.arc[0] != d.vertices[e.tail] or e.arc[-1] != d.vertices[e.head]:
            violations.append(Violation("arc-endpoint-mismatch", f"edge {eid}"))
            continue
        for vid, p in d.vertices.items():
            if vid in (e.tail, e.head):
                continue
            if point_on_polyline(p, e.arc):
                violations.append(Violation("arc-through-vertex", f"edge {eid} passes through vertex {vid}", p))

    if violations:
        return violations

    # pairwise interactions and triple interior points
    interior_hits: Dict[Point, set] = {}
    ids = d.edge_ids()
    for i, e1 in enumerate(ids):
        for e2 in ids[i + 1 :]:
            try:
                events = d.pair_events(e1, e2)
            except DegenerateOverlap as exc:
                violations.append(Violation("degenerate-overlap", f"edges {e1},{e2}: {exc}"))
                continue
            for ev in events:
                for eid in (e1, e2):
                    arc = d.edges[eid].arc
                    if ev.location != arc[0] and ev.location != arc[-1]:
                        interior_hits.setdefault(ev.location, set()).add(eid)
    for p, touching in interior_hits.items():
        if len(touching) >= 3:
            violations.append(
                Violation("triple-point", f"edges {sorted(touching)} share an interior point", p)
            )
    return violations


def classify_pair(d: Drawing, e1: str, e2: str) -> PairClass:
    """Exhaustive count of shared endpoints, proper crossings, and touches."""
    if e1 == e2:
        raise ValueError("classify_pair needs two distinct edges")
    events = d.pair_events(e1, e2)
    crossings = sum(1 for ev in events if ev.kind == PROPER_CROSSING)
    touches = sum(1 for ev in events if ev.kind == TOUCH)
    shared = sum(1 for ev in events if ev.kind == SHARED_ENDPOINT)
    kinds_present = sum(1 for c in (crossings, touches, shared) if c > 0)
    if kinds_present == 0:
        relation = DISJOINT
    elif kinds_present > 1:
        relation = MIXED
    elif crossings:
        relation = CROSSING
    elif touches:
        relation = TANGENT
    else:
        relation = COMMON_ENDPOINT
    return PairClass(relation, crossings, touches, shared)


def is_simple(d: Drawing) -> bool:
    """True iff every pair of edges has at most one common point."""
    ids = d.edge_ids()
    for i, e1 in enumerate(ids):
        for e2 in ids[i + 1 :]:
            if classify_pair(d, e1, e2).total > 1:
                return False
    return True


@dataclass
class IntersectionGraph:
    nodes: list
    adjacency: set  # of frozenset pairs

    def adjacent(self, e1: str, e2: str) -> bool:
        return frozenset((e1, e2)) in self.adjacency

    @property
    def edge_count(self) -> int:
        return len(self.adjacency)

    def disjoint_pairs(self) -> list:
        out = []
        for i, e1 in enumerate(self.nodes):
            for e2 in self.nodes[i + 1 :]:
                if not self.adjacent(e1, e2):
                    out.append((e1, e2))
        return out


def intersection_graph(d: Drawing) -> IntersectionGraph:
    """Graph on edges, adjacent iff the two arcs share at least one point."""
    ids = d.edge_ids()
    adjacency = set()
    for i, e1 in enumerate(ids):
        for e2 in ids[i + 1 :]:
            if classify_pair(d, e1, e2).total > 0:
                adjacency.add(frozenset((e1, e2)))
    return IntersectionGraph(ids, adjacency)


@dataclass
class DrawingFlags:
    is_thrackle: bool
    is_tangled_thrackle: bool
    tangency_count: int


def classify_drawing(d: Drawing) -> DrawingFlags:
    """Thrackle / tangled-thrackle flags.

    Thrackle: every pair of edges shares exactly one point, an endpoint or a
    proper crossing.  Tangled thrackle also admits tangencies as the single
    common point.
    """
    ids = d.edge_ids()
    thrackle = True
    tangled = True
    tangencies = 0
    for i, e1 in enumerate(ids):
        for e2 in ids[i + 1 :]:
            pc = classify_pair(d, e1, e2)
            tangencies += pc.touches
            if pc.total != 1:
                thrackle = False
                tangled = False
            elif pc.touches:
                thrackle = False
    return DrawingFlags(thrackle, tangled, tangencies)
