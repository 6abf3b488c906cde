"""Pseudo-segment arrangements: subdivision, faces, tangency graphs.

An arrangement takes a family of polyline arcs in which every pair meets in
at most one point (an endpoint, a proper crossing, or a tangency) and no
three arcs share an interior point.  It computes the induced planar
subdivision: vertices are arc endpoints plus pairwise intersection points,
edges are the maximal arc portions between consecutive vertices, and faces
are found by walking the rotation system (tangency vertices need no special
case: their germ order simply does not alternate).  The Euler relation
V - E + F = 1 + C is asserted on every build.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .geometry import (
    DegenerateOverlap,
    PROPER_CROSSING,
    Point,
    SHARED_ENDPOINT,
    TOUCH,
    arc_intersections,
    point_on_segment,
    segments,
    sort_ccw,
    validate_polyline,
)
from .ds import lambda3_upper


class NotPseudoSegments(ValueError):
    pass


class TriplePoint(ValueError):
    pass


class CrossFamilyCrossing(ValueError):
    pass


class NotSingleFace(ValueError):
    pass


class NotAllTangent(ValueError):
    pass


Param = Tuple[int, Fraction]  # (segment index, parameter within segment)


def _param_of(poly: Sequence[Point], p: Point) -> Param:
    for i, s in enumerate(segments(poly)):
        if point_on_segment(p, s):
            d = s.b - s.a
            if d.x != 0:
                t = (p.x - s.a.x) / d.x
            else:
                t = (p.y - s.a.y) / d.y
            return (i, t)
    raise ValueError(f"{p} not on polyline")


def _point_at(poly: Sequence[Point], param: Param) -> Point:
    i, t = param
    a, b = poly[i], poly[i + 1]
    return a + (b - a).scaled(t)


def _sub_polyline(poly: Sequence[Point], p0: Param, p1: Param) -> Tuple[Point, ...]:
    """Piece of poly between params p0 < p1, keeping interior bends."""
    start = _point_at(poly, p0)
    end = _point_at(poly, p1)
    pts = [start]
    for j in range(p0[0] + 1, p1[0] + 1):
        bend = poly[j]
        if bend != pts[-1] and bend != end:
            pts.append(bend)
    pts.append(end)
    return tuple(pts)


@dataclass
class SubEdge:
    id: int
    arc: int  # input arc index
    along: int  # position among the arc's sub-edges
    points: Tuple[Point, ...]
    v_start: int
    v_end: int


@dataclass
class Face:
    id: int
    bounded: bool
    cycles: List[List[int]] = field(default_factory=list)  # half-edge ids
    edge_ids: Set[int] = field(default_factory=set)
    area: Fraction = Fraction(0)


class Arrangement:
    def __init__(self, arcs, vertices, vertex_index, edges, faces, unbounded_face,
                 components, cycle_faces, positive_cycles):
        self.arcs = arcs
        self.vertices = vertices
        self.vertex_index = vertex_index
        self.edges = edges
        self.faces = faces
        self.unbounded_face = unbounded_face
        self.components = components
        self._cycle_faces = cycle_faces
        self._positive_cycles = positive_cycles
        self._arc_edges: Dict[int, List[Tuple[Param, Param, int]]] = {}
        for e in edges:
            key = e.arc
            p0 = _param_of(arcs[e.arc], e.points[0])
            p1 = _param_of(arcs[e.arc], e.points[-1])
            self._arc_edges.setdefault(key, []).append((p0, p1, e.id))
        for lst in self._arc_edges.values():
            lst.sort()

    @property
    def V(self) -> int:
        return len(self.vertices)

    @property
    def E(self) -> int:
        return len(self.edges)

    @property
    def F(self) -> int:
        return len(self.faces)

    def locate_subedge(self, arc_index: int, p: Point) -> int:
        """Sub-edge of the given input arc containing point p."""
        param = _param_of(self.arcs[arc_index], p)
        for p0, p1, eid in self._arc_edges[arc_index]:
            if p0 <= param <= p1:
                return eid
        raise ValueError(f"{p} outside the subdivided arc")

    def face_of_point(self, p: Point) -> int:
        """Face containing p; p must not lie on any arc."""
        for arc in self.arcs:
            for s in segments(arc):
                if point_on_segment(p, s):
                    raise ValueError(f"{p} lies on an arc")
        best = None
        for cyc_id, (area, polygon) in self._positive_cycles.items():
            if _point_in_polygon(p, polygon):
                if best is None or area < best[0]:
                    best = (area, cyc_id)
        if best is None:
            return self.unbounded_face
        return self._cycle_faces[best[1]]


def _point_in_polygon(p: Point, polygon: Sequence[Point]) -> bool:
    """Exact crossing-parity test; p must not be on the boundary."""
    inside = False
    n = len(polygon)
    for i in range(n):
        a = polygon[i]
        b = polygon[(i + 1) % n]
        if (a.y > p.y) != (b.y > p.y):
            # x coordinate where the edge crosses the horizontal through p
            x = a.x + (b.x - a.x) * (p.y - a.y) / (b.y - a.y)
            if p.x < x:
                inside = not inside
    return inside


def _check_family(arcs: Sequence[Sequence[Point]]) -> Dict[Tuple[int, int], list]:
    """Pseudo-segment preconditions; returns the pairwise events."""
    for arc in arcs:
        validate_polyline(arc)
    events: Dict[Tuple[int, int], list] = {}
    interior_hits: Dict[Point, set] = {}
    for i in range(len(arcs)):
        for j in range(i + 1, len(arcs)):
            evs = arc_intersections(arcs[i], arcs[j])  # raises DegenerateOverlap
            if len(evs) > 1:
                raise NotPseudoSegments(f"arcs {i} and {j} meet in {len(evs)} points")
            events[(i, j)] = evs
            for ev in evs:
                for k in (i, j):
                    arc = arcs[k]
                    if ev.location != arc[0] and ev.location != arc[-1]:
                        interior_hits.setdefault(ev.location, set()).add(k)
    for p, touching in interior_hits.items():
        if len(touching) >= 3:
            raise TriplePoint(f"arcs {sorted(touching)} share interior point {p}")
    return events


def build_arrangement(arcs: Sequence[Sequence[Point]]) -> Arrangement:
    """Full planar subdivision of a pseudo-segment family."""
    arcs = [tuple(a) for a in arcs]
    pair_events = _check_family(arcs)

    # events per arc: endpoints plus intersection points
    arc_points: List[Dict[Param, Point]] = [dict() for _ in arcs]
    for i, arc in enumerate(arcs):
        arc_points[i][(0, Fraction(0))] = arc[0]
        arc_points[i][(len(arc) - 2, Fraction(1))] = arc[-1]
    for (i, j), evs in pair_events.items():
        for ev in evs:
            arc_points[i][_param_of(arcs[i], ev.location)] = ev.location
            arc_points[j][_param_of(arcs[j], ev.location)] = ev.location

    vertices: List[Point] = []
    vertex_index: Dict[Point, int] = {}

    def vid(p: Point) -> int:
        if p not in vertex_index:
            vertex_index[p] = len(vertices)
            vertices.append(p)
        return vertex_index[p]

    edges: List[SubEdge] = []
    for i, arc in enumerate(arcs):
        # distinct points, ordered along the arc
        items = sorted(arc_points[i].items())
        cleaned = [items[0]]
        for param, p in items[1:]:
            if p != cleaned[-1][1]:
                cleaned.append((param, p))
        for k in range(len(cleaned) - 1):
            pts = _sub_polyline(arc, cleaned[k][0], cleaned[k + 1][0])
            edges.append(SubEdge(len(edges), i, k, pts, vid(pts[0]), vid(pts[-1])))

    # rotation system: half-edge h = 2*edge + dir; dir 0 runs start->end
    def origin(h: int) -> int:
        e = edges[h >> 1]
        return e.v_start if h & 1 == 0 else e.v_end

    def germ(h: int) -> Point:
        e = edges[h >> 1]
        pts = e.points if h & 1 == 0 else tuple(reversed(e.points))
        return pts[1] - pts[0]

    def geom(h: int) -> Tuple[Point, ...]:
        e = edges[h >> 1]
        return e.points if h & 1 == 0 else tuple(reversed(e.points))

    outgoing: Dict[int, List[int]] = {}
    for e in edges:
        outgoing.setdefault(e.v_start, []).append(2 * e.id)
        outgoing.setdefault(e.v_end, []).append(2 * e.id + 1)
    rotation: Dict[int, List[int]] = {}
    for v, hs in outgoing.items():
        germs = {h: germ(h) for h in hs}
        ordered_dirs = sort_ccw(list(germs.values()))
        order = []
        used = set()
        for gdir in ordered_dirs:
            for h in hs:
                if h not in used and germs[h] == gdir:
                    order.append(h)
                    used.add(h)
                    break
        rotation[v] = order

    def next_half_edge(h: int) -> int:
        tw = h ^ 1
        v = origin(tw)
        order = rotation[v]
        k = order.index(tw)
        return order[k - 1]  # clockwise predecessor: face stays on the left

    # face boundary cycles = orbits of next_half_edge
    seen = set()
    cycles: List[List[int]] = []
    for e in edges:
        for h in (2 * e.id, 2 * e.id + 1):
            if h in seen:
                continue
            cyc = []
            cur = h
            while cur not in seen:
                seen.add(cur)
                cyc.append(cur)
                cur = next_half_edge(cur)
            cycles.append(cyc)

    def cycle_polygon(cyc: List[int]) -> List[Point]:
        poly: List[Point] = []
        for h in cyc:
            pts = geom(h)
            poly.extend(pts[:-1])
        return poly

    def shoelace(poly: List[Point]) -> Fraction:
        s = Fraction(0)
        for i in range(len(poly)):
            a, b = poly[i], poly[(i + 1) % len(poly)]
            s += a.x * b.y - a.y * b.x
        return s / 2

    polygons = [cycle_polygon(c) for c in cycles]
    areas = [shoelace(p) for p in polygons]

    # connected components over subdivision vertices
    parent = list(range(len(vertices)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in edges:
        ra, rb = find(e.v_start), find(e.v_end)
        if ra != rb:
            parent[ra] = rb
    components = len({find(v) for v in range(len(vertices))})

    def cycle_component(cyc: List[int]) -> int:
        return find(origin(cyc[0]))

    positive = [(k, areas[k]) for k in range(len(cycles)) if areas[k] > 0]
    faces: List[Face] = []
    unbounded = Face(0, bounded=False)
    faces.append(unbounded)
    cycle_face: Dict[int, int] = {}
    positive_cycles: Dict[int, Tuple[Fraction, List[Point]]] = {}
    for k, area in positive:
        f = Face(len(faces), bounded=True, area=area)
        faces.append(f)
        cycle_face[k] = f.id
        positive_cycles[k] = (area, polygons[k])

    # attach each contour (area <= 0 cycle) to the face it bounds from inside
    for k in range(len(cycles)):
        if areas[k] > 0:
            continue
        comp = cycle_component(cycles[k])
        anchor = vertices[origin(cycles[k][0])]
        best = None
        for kp, areap in positive:
            if cycle_component(cycles[kp]) == comp:
                continue
            if _point_in_polygon(anchor, polygons[kp]):
                if best is None or areap < best[1]:
                    best = (kp, areap)
        cycle_face[k] = cycle_face[best[0]] if best else 0

    for k, cyc in enumerate(cycles):
        f = faces[cycle_face[k]]
        f.cycles.append(cyc)
        for h in cyc:
            f.edge_ids.add(h >> 1)

    arr = Arrangement(arcs, vertices, vertex_index, edges, faces, 0,
                      components, cycle_face, positive_cycles)
    if arr.V - arr.E + arr.F != 1 + components:
        raise AssertionError(
            f"Euler relation violated: V={arr.V} E={arr.E} F={arr.F} C={components}"
        )
    return arr


def max_face_incidence(arr: Arrangement) -> Tuple[int, int]:
    """(face id, count) for the face with the most incident edges; an edge
    bordering a face on both sides counts once."""
    best = max(arr.faces, key=lambda f: (len(f.edge_ids), -f.id))
    return best.id, len(best.edge_ids)


def euler_density_check(k: int) -> Tuple[float, bool]:
    """Edge/vertex density ratio k^2 / (2 lambda3(2k)) of the all-tangent
    k x k configuration, and whether it contradicts planarity (> 3)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    ratio = k * k / (2 * lambda3_upper(2 * k))
    return ratio, ratio > 3


def _sample_points_between_events(arc: Sequence[Point], event_points: List[Point]) -> List[Point]:
    """One interior point per maximal event-free interval of the arc."""
    params = sorted({_param_of(arc, p) for p in event_points}
                    | {(0, Fraction(0)), (len(arc) - 2, Fraction(1))})
    cleaned = [params[0]]
    for q in params[1:]:
        if _point_at(arc, q) != _point_at(arc, cleaned[-1]):
            cleaned.append(q)
    samples = []
    for a, b in zip(cleaned, cleaned[1:]):
        piece = _sub_polyline(arc, a, b)
        samples.append(piece[0] + (piece[1] - piece[0]).scaled(Fraction(1, 2)))
    return samples


@dataclass
class TangencyGraph:
    """Plane graph of cross-family tangencies.

    Vertices are subdivision edges incident to the relevant face on each
    side; edges join the sub-edges carrying each tangency.  The rotation
    field orders each vertex's tangencies along its sub-edge, which is the
    embedding the paper draws by following the arcs.
    """

    side1: List[int]  # sub-edge ids of arrangement 1
    side2: List[int]
    links: List[Tuple[int, int, Point]]  # (sub-edge of 1, sub-edge of 2, tangency)
    rotation: Dict[Tuple[int, int], List[int]]
    planar: bool

    @property
    def vertex_count(self) -> int:
        return len(self.side1) + len(self.side2)

    @property
    def edge_count(self) -> int:
        return len(self.links)

    def satisfies_planar_bound(self) -> bool:
        v, e = self.vertex_count, self.edge_count
        if v < 3:
            return True
        return e <= 3 * v - 6


def tangency_graph(family1: Sequence[Sequence[Point]], family2: Sequence[Sequence[Point]]) -> TangencyGraph:
    """Build the tangency graph H of two arc families that touch but never
    cross each other, each family lying in a single face of the other."""
    f1 = [tuple(a) for a in family1]
    f2 = [tuple(a) for a in family2]
    _check_family(list(f1) + list(f2))

    tangencies = []  # (arc index in f1, arc index in f2, point)
    for i, a in enumerate(f1):
        for j, b in enumerate(f2):
            for ev in arc_intersections(a, b):
                if ev.kind == PROPER_CROSSING:
                    raise CrossFamilyCrossing(f"arc {i} of family 1 crosses arc {j} of family 2")
                if ev.kind == TOUCH:
                    tangencies.append((i, j, ev.location))

    arr1 = build_arrangement(f1)
    arr2 = build_arrangement(f2)

    def single_face(arr: Arrangement, other_family, own_family) -> int:
        face = None
        for b in other_family:
            contacts = []
            for a in own_family:
                contacts.extend(ev.location for ev in arc_intersections(a, b))
            for q in _sample_points_between_events(b, contacts):
                f = arr.face_of_point(q)
                if face is None:
                    face = f
                elif f != face:
                    raise NotSingleFace("family does not stay within one face of the other")
        return arr.unbounded_face if face is None else face

    face1 = single_face(arr1, f2, f1)
    face2 = single_face(arr2, f1, f2)

    links = []
    for i, j, p in tangencies:
        e1 = arr1.locate_subedge(i, p)
        e2 = arr2.locate_subedge(j, p)
        if e1 not in arr1.faces[face1].edge_ids:
            raise NotSingleFace(f"tangency sub-edge {e1} not incident to the common face")
        if e2 not in arr2.faces[face2].edge_ids:
            raise NotSingleFace(f"tangency sub-edge {e2} not incident to the common face")
        links.append((e1, e2, p))

    # one H-vertex per sub-edge incident to the common face, on each side
    side1 = sorted(arr1.faces[face1].edge_ids)
    side2 = sorted(arr2.faces[face2].edge_ids)

    rotation: Dict[Tuple[int, int], List[int]] = {}
    for eid in side1:
        ts = [(_param_of(arr1.edges[eid].points, p), k) for k, (a, b, p) in enumerate(links) if a == eid]
        rotation[(1, eid)] = [k for _, k in sorted(ts)]
    for eid in side2:
        ts = [(_param_of(arr2.edges[eid].points, p), k) for k, (a, b, p) in enumerate(links) if b == eid]
        rotation[(2, eid)] = [k for _, k in sorted(ts)]

    import networkx as nx

    g = nx.Graph()
    g.add_nodes_from(("L1", e) for e in side1)
    g.add_nodes_from(("L2", e) for e in side2)
    g.add_edges_from((("L1", a), ("L2", b)) for a, b, _ in links)
    planar, _ = nx.check_planarity(g)

    return TangencyGraph(side1, side2, links, rotation, planar)


def _part_events(part, other_arc, cut_point: Optional[Point], closed: bool):
    evs = arc_intersections(part, other_arc)
    if not closed and cut_point is not None:
        evs = [ev for ev in evs if ev.location != cut_point]
    return evs


def refine_to_single_face(family1, family2):
    """Pigeonhole halving of an all-tangent pair of families (sizes 4q) down
    to q + q subfamilies, each lying in a single face of the other's
    arrangement.  Both properties are verified before returning.
    """
    import warnings

    f1 = [tuple(a) for a in family1]
    f2 = [tuple(a) for a in family2]
    _assert_all_tangent(f1, f2)

    size = min(len(f1), len(f2))
    m = 4 * (size // 4)
    if m == 0:
        raise ValueError("families must contain at least 4 arcs each")
    if m != len(f1) or m != len(f2):
        warnings.warn(f"family sizes rounded down to {m} (largest multiple of 4)")
        f1, f2 = f1[:m], f2[:m]
    q = m // 4

    half1, rest2 = _halving_round(f1, f2, 2 * q)
    sub2, sub1 = _halving_round(rest2, half1, q)
    if len(sub1) > q:
        sub1 = sub1[:q]
    if len(sub2) > q:
        sub2 = sub2[:q]

    _assert_all_tangent(sub1, sub2)
    _verify_single_face(sub1, sub2)
    return sub1, sub2


def _assert_all_tangent(f1, f2) -> None:
    for i, a in enumerate(f1):
        for j, b in enumerate(f2):
            evs = arc_intersections(a, b)
            if len(evs) != 1 or evs[0].kind != TOUCH:
                raise NotAllTangent(f"arc {i} of family 1 is not tangent to arc {j} of family 2")


def _verify_single_face(f1, f2) -> None:
    arr1 = build_arrangement(list(f1))
    arr2 = build_arrangement(list(f2))

    def check(arr, own, other):
        face = None
        for b in other:
            contacts = []
            for a in own:
                contacts.extend(ev.location for ev in arc_intersections(a, b))
            for qpt in _sample_points_between_events(b, contacts):
                f = arr.face_of_point(qpt)
                if face is None:
                    face = f
                elif f != face:
                    raise NotSingleFace("refined family spans several faces")

    check(arr1, f1, f2)
    check(arr2, f2, f1)


def _halving_round(family_a, family_b, target: int):
    """One round of the halving argument: find a piece of some arc of A that
    keeps >= target tangencies into B while at least target arcs of A avoid
    it.  Returns (kept arcs of A, kept arcs of B)."""
    for ell_idx, ell in enumerate(family_a):
        others = [a for k, a in enumerate(family_a) if k != ell_idx]
        cut_points = []
        for other in others:
            for ev in arc_intersections(ell, other):
                cut_points.append(ev.location)
        interior = sorted(
            {_param_of(ell, p) for p in cut_points}
            - {(0, Fraction(0)), (len(ell) - 2, Fraction(1))}
        )
        start = (0, Fraction(0))
        end = (len(ell) - 2, Fraction(1))
        n_edges = len(interior) + 1
        half = (n_edges + 1) // 2
        if interior:
            cut = interior[min(half, len(interior)) - 1] if half <= len(interior) else end
        else:
            cut = end
        pieces = []
        if cut == end:
            pieces.append((tuple(ell), None, True))
        else:
            cut_pt = _point_at(ell, cut)
            pieces.append((_sub_polyline(ell, start, cut), cut_pt, True))   # closed at cut
            pieces.append((_sub_polyline(ell, cut, end), cut_pt, False))    # open at cut
        for piece, cut_pt, closed in pieces:
            kept_b = [
                b for b in family_b
                if any(ev.kind == TOUCH for ev in _part_events(piece, b, cut_pt, closed))
            ]
            if len(kept_b) < target:
                continue
            kept_a = [
                a for k, a in enumerate(family_a)
                if k != ell_idx and not _part_events(piece, a, cut_pt, closed)
            ]
            if len(kept_a) < target:
                continue
            return kept_a[:target], kept_b[:target]
    raise NotSingleFace("halving round found no admissible piece")
