"""Bipartite strip redrawing and its crossing-parity bookkeeping.

The input drawing must have its two vertex classes separated by a horizontal
band.  A thin event-free band is chosen inside the separating gap, so that
within the band every arc piece is a straight transit crossing the whole
band and the transits occupy pairwise disjoint x ranges.  Each transit is
first normalized to a vertical segment inside an inner band (adapter wedges
live in the transit's private slab, so this changes nothing), then the part
of the drawing above the band is reflected about the y-axis and the inner
verticals are replaced by straight reconnectors from (x, bottom) to
(-x, top), slightly bent at a jittered midpoint to avoid the common point
all exact reconnectors would share.  Reconnectors pairwise cross exactly
once, so a pair of edges with k1 and k2 transits gains exactly k1*k2
crossings inside the strip; everything outside the band keeps its original
crossing count.  Both parity consequences are asserted on every run.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..drawing import (
    CROSSING,
    DISJOINT,
    Drawing,
    classify_pair,
    validate,
)
from ..geometry import (
    PROPER_CROSSING,
    Point,
    Segment,
    arc_intersections,
    segment_intersection,
    segments,
)


class NotBipartite(ValueError):
    pass


class NotYSeparated(ValueError):
    pass


class DegenerateAfterPerturbation(RuntimeError):
    pass


def strip_crossing_formula(k1: int, k2: int) -> int:
    """C(k1+k2, 2) - C(k1, 2) - C(k2, 2), asserted equal to k1*k2."""
    if k1 < 0 or k2 < 0:
        raise ValueError("transit counts must be nonnegative")
    value = math.comb(k1 + k2, 2) - math.comb(k1, 2) - math.comb(k2, 2)
    assert value == k1 * k2
    return value


@dataclass
class Transit:
    edge: str
    order: int  # position along the edge among its transits
    x_bottom: Fraction
    x_mid: Fraction
    x_top: Fraction
    upward: bool


@dataclass
class RedrawnDrawing:
    """Concrete polyline realization of the redrawn graph.

    Arcs may self-intersect (each edge's reconnectors pairwise cross); pair
    crossing counts ignore self-crossings, and shared endpoints are not
    crossings.
    """

    arcs: Dict[str, Tuple[Point, ...]]
    k: Dict[str, int]
    pair_inside: Dict[Tuple[str, str], int]
    pair_outside: Dict[Tuple[str, str], int]
    band: Tuple[Fraction, Fraction]
    inner_band: Tuple[Fraction, Fraction]
    shares_vertex: Dict[Tuple[str, str], bool]
    input_relation: Dict[Tuple[str, str], str]

    def pair_total(self, e1: str, e2: str) -> int:
        key = (e1, e2) if e1 <= e2 else (e2, e1)
        return self.pair_inside[key] + self.pair_outside[key]

    def independent_pair_crossings(self):
        out = []
        for key, shared in self.shares_vertex.items():
            if not shared:
                out.append((key, self.pair_inside[key] + self.pair_outside[key]))
        return out

    def parity_report(self) -> List[dict]:
        rows = []
        for key, shared in sorted(self.shares_vertex.items()):
            if shared:
                continue
            total = self.pair_inside[key] + self.pair_outside[key]
            rel = self.input_relation[key]
            even_ok = not (rel == CROSSING and total % 2 == 1)
            odd_ok = not (total % 2 == 1 and rel != DISJOINT)
            rows.append(
                {
                    "pair": key,
                    "relation": rel,
                    "inside": self.pair_inside[key],
                    "outside": self.pair_outside[key],
                    "total": total,
                    "even_ok": even_ok,
                    "odd_implies_disjoint_ok": odd_ok,
                }
            )
        return rows

    def parity_holds(self) -> bool:
        return all(r["even_ok"] and r["odd_implies_disjoint_ok"] for r in self.parity_report())


def _separating_interval(d: Drawing) -> Tuple[str, Fraction, Fraction]:
    """The open y-interval separating the two classes, and which class is on top."""
    if not d.bipartition:
        raise NotBipartite("bipartition labels are required")
    classes = set(d.bipartition.values())
    if classes != {"a", "b"}:
        raise NotBipartite(f"expected labels 'a' and 'b', got {sorted(classes)}")
    for v in d.vertices:
        if v not in d.bipartition:
            raise NotBipartite(f"vertex {v} has no class label")
    for eid, e in d.edges.items():
        if d.bipartition[e.tail] == d.bipartition[e.head]:
            raise NotBipartite(f"edge {eid} joins two '{d.bipartition[e.tail]}' vertices")
    ya = [p.y for v, p in d.vertices.items() if d.bipartition[v] == "a"]
    yb = [p.y for v, p in d.vertices.items() if d.bipartition[v] == "b"]
    if min(ya) > max(yb):
        return "a", max(yb), min(ya)
    if min(yb) > max(ya):
        return "b", max(ya), min(yb)
    raise NotYSeparated("no horizontal line separates the two classes")


def _event_ys(d: Drawing, lo: Fraction, hi: Fraction) -> List[Fraction]:
    ys = set()
    for e in d.edges.values():
        for p in e.arc:
            if lo < p.y < hi:
                ys.add(p.y)
        for s in segments(e.arc):
            if s.a.y == s.b.y and lo < s.a.y < hi:
                ys.add(s.a.y)
    ids = d.edge_ids()
    for i, e1 in enumerate(ids):
        for e2 in ids[i + 1 :]:
            for ev in d.pair_events(e1, e2):
                if lo < ev.location.y < hi:
                    ys.add(ev.location.y)
    return sorted(ys)


def _clip_transits(d: Drawing, l0: Fraction, l1: Fraction):
    """Straight full-band transits per edge, in order along the arc.

    Requires the closed band [l0, l1] to be free of bends, events, and
    horizontal segments, which makes every arc piece inside it a straight
    transit of the whole band.
    """
    transits: Dict[str, List[Transit]] = {}
    mid = (l0 + l1) / 2
    for eid in d.edge_ids():
        arc = d.edges[eid].arc
        lst = []
        for s in segments(arc):
            ya, yb = s.a.y, s.b.y
            if max(ya, yb) <= l0 or min(ya, yb) >= l1:
                continue
            if min(ya, yb) > l0 or max(ya, yb) < l1:
                raise AssertionError("band is not event-free")

            def x_at(y):
                return s.a.x + (s.b.x - s.a.x) * (y - s.a.y) / (s.b.y - s.a.y)

            lst.append(
                Transit(eid, len(lst), x_at(l0), x_at(mid), x_at(l1), upward=yb > ya)
            )
        transits[eid] = lst
    return transits


def _transit_ranges_disjoint(transits) -> bool:
    ranges = []
    for lst in transits.values():
        for t in lst:
            xs = (t.x_bottom, t.x_mid, t.x_top)
            ranges.append((min(xs), max(xs)))
    ranges.sort()
    for (a0, a1), (b0, b1) in zip(ranges, ranges[1:]):
        if b0 <= a1:
            return False
    return True


def strip_redraw(d: Drawing, max_retries: int = 40) -> RedrawnDrawing:
    """Redraw a y-separated bipartite simple drawing across the strip."""
    problems = validate(d)
    if problems:
        raise ValueError(f"invalid drawing: {problems[0]}")
    ids = d.edge_ids()
    relation = {}
    for i, e1 in enumerate(ids):
        for e2 in ids[i + 1 :]:
            pc = classify_pair(d, e1, e2)
            if pc.total > 1:
                raise ValueError("strip_redraw requires a simple drawing")
            if pc.touches:
                raise ValueError("strip_redraw requires a topological graph (no tangencies)")
            relation[(e1, e2)] = pc.relation

    top_class, gap_lo, gap_hi = _separating_interval(d)

    # largest event-free open subinterval of the gap
    events = _event_ys(d, gap_lo, gap_hi)
    cuts = [gap_lo] + events + [gap_hi]
    width, lo = max(((b - a), a) for a, b in zip(cuts, cuts[1:]))
    if width <= 0:
        raise NotYSeparated("separating gap contains no event-free band")
    y_mid = lo + width / 2
    w = width / 4
    for _ in range(80):
        l0, l1 = y_mid - w, y_mid + w
        transits = _clip_transits(d, l0, l1)
        if _transit_ranges_disjoint(transits):
            break
        w /= 2
    else:
        raise AssertionError("transit ranges failed to separate")

    for eid, lst in transits.items():
        if len(lst) % 2 != 1:
            raise AssertionError(f"edge {eid} crosses the strip {len(lst)} times (must be odd)")

    inner0 = y_mid - w / 2
    inner1 = y_mid + w / 2

    all_transits = [t for lst in transits.values() for t in lst]
    all_transits.sort(key=lambda t: t.x_mid)

    jitter = w / (8 * (len(all_transits) + 1))
    reconnectors = None
    for attempt in range(max_retries):
        candidate = {}
        for idx, t in enumerate(all_transits):
            dx = jitter * (idx + 1) / (len(all_transits) + 1)
            dy = jitter * (idx + 1) * (idx + 1) / ((len(all_transits) + 1) ** 2)
            midpoint = Point(dx, y_mid + dy)
            path = (Point(t.x_mid, inner0), midpoint, Point(-t.x_mid, inner1))
            candidate[(t.edge, t.order)] = path
        if _reconnectors_ok(candidate):
            reconnectors = candidate
            break
        jitter /= 3
    if reconnectors is None:
        raise DegenerateAfterPerturbation("reconnector jitter failed to avoid degeneracies")

    arcs = _assemble_arcs(d, top_class, l0, l1, inner0, inner1, transits, reconnectors)

    k = {eid: len(lst) for eid, lst in transits.items()}
    pair_inside = {}
    pair_outside = {}
    shares = {}
    for i, e1 in enumerate(ids):
        for e2 in ids[i + 1 :]:
            key = (e1, e2)
            inside = 0
            for o1 in range(k[e1]):
                for o2 in range(k[e2]):
                    inside += _count_crossings(reconnectors[(e1, o1)], reconnectors[(e2, o2)])
            pc = classify_pair(d, e1, e2)
            pair_inside[key] = inside
            pair_outside[key] = pc.crossings
            shares[key] = d.shares_vertex(e1, e2)
            if inside != k[e1] * k[e2]:
                raise DegenerateAfterPerturbation(
                    f"strip crossings of {key} are {inside}, expected {k[e1]}*{k[e2]}"
                )

    out = RedrawnDrawing(
        arcs, k, pair_inside, pair_outside, (l0, l1), (inner0, inner1), shares, relation
    )

    for key, shared in shares.items():
        if shared:
            continue
        total = out.pair_total(*key)
        if relation[key] == CROSSING and total % 2 == 1:
            raise AssertionError(f"crossing pair {key} has odd redrawn count {total}")
        if total % 2 == 1 and relation[key] != DISJOINT:
            raise AssertionError(f"odd pair {key} is not disjoint in the input")
    return out


def _count_crossings(path_a, path_b) -> int:
    hits = set()
    for sa in segments(path_a):
        for sb in segments(path_b):
            got = segment_intersection(sa, sb)
            if isinstance(got, Point):
                hits.add(got)
            elif got is not None:
                raise DegenerateAfterPerturbation("reconnectors overlap")
    return len(hits)


def _reconnectors_ok(candidate) -> bool:
    items = sorted(candidate.items())
    endpoints = set()
    for _, path in items:
        endpoints.add(path[0])
        endpoints.add(path[-1])
    crossing_points = set()
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            pa, pb = items[i][1], items[j][1]
            pts = set()
            for sa in segments(pa):
                for sb in segments(pb):
                    got = segment_intersection(sa, sb)
                    if got is None:
                        continue
                    if not isinstance(got, Point):
                        return False
                    pts.add(got)
            if len(pts) != 1:
                return False
            p = next(iter(pts))
            if p in endpoints or p in crossing_points:
                return False
            if p in (pa[1], pb[1]):
                return False  # crossing at a midpoint bend would be a touch
            crossing_points.add(p)
    return True


def _assemble_arcs(d, top_class, l0, l1, inner0, inner1, transits, reconnectors):
    """Cut each arc at the band lines, reflect the upper part, and splice in
    adapters plus reconnectors."""

    def reflect(p: Point) -> Point:
        return Point(-p.x, p.y)

    arcs = {}
    for eid in d.edge_ids():
        arc = d.edges[eid].arc
        order = 0
        pieces: List[Point] = []

        def emit(p: Point):
            if not pieces or pieces[-1] != p:
                pieces.append(p)

        def emit_point(p: Point):
            emit(reflect(p) if p.y >= l1 else p)

        i = 0
        pts = list(arc)
        cur = pts[0]
        emit_point(cur)
        for nxt in pts[1:]:
            seg = Segment(cur, nxt)
            ya, yb = cur.y, nxt.y
            lo_y, hi_y = min(ya, yb), max(ya, yb)
            if hi_y <= l0 or lo_y >= l1:
                emit_point(nxt)
            else:
                t = transits[eid][order]
                path = reconnectors[(eid, order)]
                order += 1

                def x_at(y):
                    return cur.x + (nxt.x - cur.x) * (y - cur.y) / (nxt.y - cur.y)

                if yb > ya:  # upward transit
                    emit(Point(x_at(l0), l0))
                    for p in path:
                        emit(p)
                    emit(reflect(Point(x_at(l1), l1)))
                    emit_point(nxt)
                else:  # downward
                    emit(reflect(Point(x_at(l1), l1)))
                    for p in reversed(path):
                        emit(p)
                    emit(Point(x_at(l0), l0))
                    emit_point(nxt)
            cur = nxt
        arcs[eid] = tuple(pieces)
    return arcs
