"""Exact geometric predicates on rational points, segments, and polylines.

All coordinates are `fractions.Fraction`, so every predicate here is decided
exactly; there is no epsilon anywhere.  Jordan arcs are realized as simple
polylines with rational vertices.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

Scalar = Fraction


class GeometryError(Exception):
    pass


class DegenerateOverlap(GeometryError):
    """Two arcs share a sub-segment of positive length."""


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    def __add__(self, other):
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Point(self.x - other.x, self.y - other.y)

    def scaled(self, k) -> "Point":
        return Point(self.x * k, self.y * k)

    def __repr__(self):
        return f"Point({self.x}, {self.y})"


def pt(x, y) -> Point:
    """Build a Point, coercing int/str/Fraction inputs to exact rationals."""
    return Point(Fraction(x), Fraction(y))


Polyline = tuple  # tuple[Point, ...]


class Segment(NamedTuple):
    a: Point
    b: Point


class Overlap(NamedTuple):
    """Collinear overlap of positive length, from a to b."""

    a: Point
    b: Point


PROPER_CROSSING = "crossing"
TOUCH = "touch"
SHARED_ENDPOINT = "shared_endpoint"


class IntersectionEvent(NamedTuple):
    location: Point
    kind: str  # PROPER_CROSSING | TOUCH | SHARED_ENDPOINT
    index_a: int  # smallest segment index of arc a containing the location
    index_b: int


def cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of the cross product (q-p) x (r-p): +1 left turn, -1 right, 0 collinear."""
    c = cross(p, q, r)
    if c > 0:
        return 1
    if c < 0:
        return -1
    return 0


def _on_segment_collinear(p: Point, a: Point, b: Point) -> bool:
    # p assumed collinear with a,b
    return min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)


def point_on_segment(p: Point, s: Segment) -> bool:
    if orientation(s.a, s.b, p) != 0:
        return False
    return _on_segment_collinear(p, s.a, s.b)


def segment_intersection(s1: Segment, s2: Segment) -> Union[None, Point, Overlap]:
    """Exact intersection of two closed segments.

    Returns None when disjoint, a Point for a single common point, or an
    Overlap when the segments are collinear and share positive length.
    """
    p, r = s1.a, s1.b - s1.a
    q, s = s2.a, s2.b - s2.a
    denom = r.x * s.y - r.y * s.x
    qp = q - p
    qp_cross_r = qp.x * r.y - qp.y * r.x
    if denom == 0:
        if qp_cross_r != 0:
            return None  # parallel, not collinear
        # collinear: project onto the dominant axis of r
        rr = r.x * r.x + r.y * r.y
        t0 = (qp.x * r.x + qp.y * r.y) / rr
        t1 = t0 + (s.x * r.x + s.y * r.y) / rr
        lo, hi = min(t0, t1), max(t0, t1)
        lo = max(lo, Fraction(0))
        hi = min(hi, Fraction(1))
        if lo > hi:
            return None
        if lo == hi:
            return p + r.scaled(lo)
        return Overlap(p + r.scaled(lo), p + r.scaled(hi))
    qp_cross_s = qp.x * s.y - qp.y * s.x
    t = qp_cross_s / denom
    u = qp_cross_r / denom
    if 0 <= t <= 1 and 0 <= u <= 1:
        return p + r.scaled(t)
    return None


def segments(poly: Sequence[Point]) -> list:
    return [Segment(poly[i], poly[i + 1]) for i in range(len(poly) - 1)]


def _bbox(poly: Sequence[Point]):
    xs = [p.x for p in poly]
    ys = [p.y for p in poly]
    return min(xs), min(ys), max(xs), max(ys)


def validate_polyline(poly: Sequence[Point]) -> None:
    """Raise GeometryError unless poly is a simple polyline (>=2 points,
    no zero-length segments, no self-intersection)."""
    if len(poly) < 2:
        raise GeometryError("polyline needs at least 2 points")
    segs = segments(poly)
    for s in segs:
        if s.a == s.b:
            raise GeometryError("zero-length segment in polyline")
    n = len(segs)
    for i in range(n):
        for j in range(i + 1, n):
            hit = segment_intersection(segs[i], segs[j])
            if hit is None:
                continue
            if isinstance(hit, Overlap):
                raise GeometryError("self-overlapping polyline")
            if j == i + 1:
                if hit != poly[i + 1]:
                    raise GeometryError("self-intersecting polyline (adjacent)")
            else:
                # closed polylines are not supported in the drawing model
                raise GeometryError("self-intersecting polyline")


def point_on_polyline(p: Point, poly: Sequence[Point]) -> bool:
    return any(point_on_segment(p, s) for s in segments(poly))


def _germs_at(poly: Sequence[Point], p: Point) -> list:
    """Direction vectors of arc-germs leaving p along poly.

    A point interior to a segment or at a bend yields two germs; a polyline
    endpoint yields one.
    """
    germs = []
    pts = list(poly)
    n = len(pts)
    for i in range(n - 1):
        a, b = pts[i], pts[i + 1]
        if p == a:
            germs.append(b - a)
            if i > 0:
                germs.append(pts[i - 1] - a)
        elif p == b:
            if i == n - 2:
                germs.append(a - b)
        elif point_on_segment(p, Segment(a, b)):
            germs.append(b - p)
            germs.append(a - p)
    # dedupe: a bend point appears as endpoint of two consecutive segments
    out = []
    for g in germs:
        if not any(_same_direction(g, h) for h in out):
            out.append(g)
    return out


def _same_direction(u: Point, v: Point) -> bool:
    return u.x * v.y == u.y * v.x and u.x * v.x + u.y * v.y > 0


def _angular_key(v: Point):
    """Sort key for exact ccw angular order starting at direction (1, 0)."""
    if v.y > 0 or (v.y == 0 and v.x > 0):
        half = 0
    else:
        half = 1
    return half, v


def sort_ccw(vectors: Iterable[Point]) -> list:
    """Sort direction vectors counterclockwise, exactly."""

    def cmp(u, v):
        hu, hv = _angular_key(u)[0], _angular_key(v)[0]
        if hu != hv:
            return -1 if hu < hv else 1
        c = u.x * v.y - u.y * v.x
        if c > 0:
            return -1
        if c < 0:
            return 1
        return 0

    return sorted(vectors, key=functools.cmp_to_key(cmp))


def germs_alternate(germs_a: Sequence[Point], germs_b: Sequence[Point]) -> bool:
    """Rotation test: do the germs of the two arcs alternate in cyclic order?

    Alternation (a, b, a, b) is only possible with two germs per arc; it is
    the combinatorial meaning of a proper crossing.
    """
    if len(germs_a) != 2 or len(germs_b) != 2:
        return False
    tagged = [(g, 0) for g in germs_a] + [(g, 1) for g in germs_b]
    ordered = sort_ccw([g for g, _ in tagged])
    owners = []
    for g in ordered:
        for h, tag in tagged:
            if h == g:
                owners.append(tag)
                break
    return owners[0] != owners[1] and owners[1] != owners[2] and owners[2] != owners[3]


def classify_common_point(p: Point, poly_a: Sequence[Point], poly_b: Sequence[Point]) -> str:
    """Classify a common point of two arcs by the local rotation test."""
    end_a = p == poly_a[0] or p == poly_a[-1]
    end_b = p == poly_b[0] or p == poly_b[-1]
    if end_a and end_b:
        return SHARED_ENDPOINT
    ga = _germs_at(poly_a, p)
    gb = _germs_at(poly_b, p)
    for u in ga:
        for v in gb:
            if _same_direction(u, v):
                raise DegenerateOverlap(f"arcs overlap in a sub-segment near {p}")
    return PROPER_CROSSING if germs_alternate(ga, gb) else TOUCH


def _segment_index_of(poly: Sequence[Point], p: Point) -> int:
    for i, s in enumerate(segments(poly)):
        if point_on_segment(p, s):
            return i
    raise GeometryError(f"point {p} not on polyline")


def arc_intersections(poly_a: Sequence[Point], poly_b: Sequence[Point]) -> list:
    """All common points of two simple polylines, classified.

    Raises DegenerateOverlap when the arcs share a sub-segment of positive
    length.  Events are reported sorted by location.
    """
    ax0, ay0, ax1, ay1 = _bbox(poly_a)
    bx0, by0, bx1, by1 = _bbox(poly_b)
    if ax1 < bx0 or bx1 < ax0 or ay1 < by0 or by1 < ay0:
        return []
    locations = set()
    segs_a = segments(poly_a)
    segs_b = segments(poly_b)
    for sa in segs_a:
        for sb in segs_b:
            if max(sa.a.x, sa.b.x) < min(sb.a.x, sb.b.x) or max(sb.a.x, sb.b.x) < min(sa.a.x, sa.b.x):
                continue
            if max(sa.a.y, sa.b.y) < min(sb.a.y, sb.b.y) or max(sb.a.y, sb.b.y) < min(sa.a.y, sa.b.y):
                continue
            hit = segment_intersection(sa, sb)
            if hit is None:
                continue
            if isinstance(hit, Overlap):
                raise DegenerateOverlap(f"arcs overlap between {hit.a} and {hit.b}")
            locations.add(hit)
    events = []
    for p in sorted(locations):
        kind = classify_common_point(p, poly_a, poly_b)
        events.append(
            IntersectionEvent(p, kind, _segment_index_of(poly_a, p), _segment_index_of(poly_b, p))
        )
    return events


def squared_distance_point_segment(p: Point, s: Segment) -> Fraction:
    d = s.b - s.a
    dd = d.x * d.x + d.y * d.y
    w = p - s.a
    t = (w.x * d.x + w.y * d.y) / dd
    if t < 0:
        t = Fraction(0)
    elif t > 1:
        t = Fraction(1)
    c = s.a + d.scaled(t)
    e = p - c
    return e.x * e.x + e.y * e.y


def squared_distance_point_polyline(p: Point, poly: Sequence[Point]) -> Fraction:
    return min(squared_distance_point_segment(p, s) for s in segments(poly))


def squared_norm(v: Point) -> Fraction:
    return v.x * v.x + v.y * v.y
