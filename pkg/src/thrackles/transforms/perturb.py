"""Tangency removal: retract one arc of each tangent pair off the other.

At a tangency the two germs of the retracted arc are cyclically adjacent
among the four germs, so the open cone between them contains no piece of the
other arc.  Cutting the corner with a short polyline that sweeps through
that cone (in steps below ninety degrees, so each chord stays inside the
cone) separates the pair without touching anything else, because the whole
modification lives inside a disk that provably contains only the four germ
segments.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..drawing import Drawing, Edge, TANGENT, classify_pair, validate
from ..geometry import (
    Point,
    Segment,
    TOUCH,
    arc_intersections,
    point_on_segment,
    segments,
    sort_ccw,
    squared_distance_point_polyline,
    squared_distance_point_segment,
    squared_norm,
)
from .splitting import _ccw_strictly_between, _rational_direction, _scale_to_band


class PerturbationCollision(RuntimeError):
    pass


def _tangent_pairs(d: Drawing) -> List[Tuple[str, str, Point]]:
    out = []
    ids = d.edge_ids()
    for i, e1 in enumerate(ids):
        for e2 in ids[i + 1 :]:
            pc = classify_pair(d, e1, e2)
            if pc.total > 1:
                raise ValueError("perturb_tangencies requires pairwise <= 1 common point")
            if pc.relation == TANGENT:
                ev = d.pair_events(e1, e2)[0]
                out.append((e1, e2, ev.location))
    return out


def _safe_radius_squared(d: Drawing, p: Point, keep: str, other: str) -> Fraction:
    """Disk around the tangency containing only the germ segments of the two
    participating arcs."""
    best: Optional[Fraction] = None

    def consider(v: Fraction):
        nonlocal best
        if best is None or v < best:
            best = v

    for q in d.vertices.values():
        consider(squared_norm(q - p))
    for eid, e in d.edges.items():
        if eid in (keep, other):
            for q in e.arc:
                if q != p:
                    consider(squared_norm(q - p))
            for s in segments(e.arc):
                if not point_on_segment(p, s):
                    consider(squared_distance_point_segment(p, s))
        else:
            consider(squared_distance_point_polyline(p, e.arc))
    # other intersection points on the two arcs stay outside the disk
    ids = d.edge_ids()
    for eid in (keep, other):
        for fid in ids:
            if fid == eid:
                continue
            for ev in d.pair_events(eid, fid):
                if ev.location != p:
                    consider(squared_norm(ev.location - p))
    assert best is not None
    return best


def _germ_segments(arc: Tuple[Point, ...], p: Point):
    """(germ vector, far point) pairs for the two germ segments at interior p."""
    out = []
    pts = list(arc)
    for i, s in enumerate(segments(arc)):
        if p == s.a:
            out.append((s.b - p, i))
            if i > 0:
                out.append((pts[i - 1] - p, i - 1))
        elif p == s.b:
            if i == len(pts) - 2:
                out.append((s.a - p, i))
        elif point_on_segment(p, s):
            out.append((s.b - p, i))
            out.append((s.a - p, i))
    dedup = []
    for g, i in out:
        if not any(g == h for h, _ in dedup):
            dedup.append((g, i))
    return dedup


def _sweep_inside_cone(g1: Point, g2: Point) -> List[Point]:
    """Directions from g1 ccw to g2 strictly inside the cone, in sub-pi/2
    steps; endpoints excluded."""
    a1 = math.atan2(float(g1.y), float(g1.x))
    a2 = math.atan2(float(g2.y), float(g2.x))
    sweep = (a2 - a1) % (2 * math.pi)
    steps = max(2, math.ceil(sweep / (math.pi / 3)))
    dirs = []
    denom = 1 << 12
    for k in range(1, steps):
        for _ in range(16):
            u = _rational_direction(a1 + sweep * k / steps, denom)
            if _ccw_strictly_between(g1, u, g2):
                dirs.append(u)
                break
            denom <<= 2
        else:
            raise PerturbationCollision("could not approximate a cone direction")
    return dirs


def _retract(d: Drawing, keep: str, move: str, p: Point, shrink: int) -> Tuple[Point, ...]:
    """New arc for `move` that cuts the corner at p inside the safe disk."""
    arc = d.edges[move].arc
    rr = _safe_radius_squared(d, p, keep, move)
    scale = Fraction(1, 4 * (1 << shrink))
    lo2, hi2 = rr * scale * scale / 4, rr * scale * scale

    germs_move = _germ_segments(arc, p)
    germs_keep = _germ_segments(d.edges[keep].arc, p)
    if len(germs_move) != 2 or len(germs_keep) != 2:
        raise PerturbationCollision(f"unexpected germ count at {p}")
    (g1, i1), (g2, i2) = germs_move
    h1, h2 = germs_keep[0][0], germs_keep[1][0]
    # order the move-germs so the ccw cone from the first to the second
    # avoids both germs of the kept arc
    if _ccw_strictly_between(g1, h1, g2) or _ccw_strictly_between(g1, h2, g2):
        (g1, i1), (g2, i2) = (g2, i2), (g1, i1)
    if _ccw_strictly_between(g1, h1, g2) or _ccw_strictly_between(g1, h2, g2):
        raise PerturbationCollision("kept arc germs are not cyclically adjacent")

    m1 = p + g1.scaled(_scale_to_band(g1, lo2, hi2))
    m2 = p + g2.scaled(_scale_to_band(g2, lo2, hi2))
    detour = [m1]
    for u in _sweep_inside_cone(g1, g2):
        detour.append(p + u.scaled(_scale_to_band(u, lo2, hi2)))
    detour.append(m2)

    # splice the detour between the last point before p and the first after
    seg_first, seg_second = sorted((i1, i2))
    head = list(arc[: seg_first + 1])
    tail = list(arc[seg_second + 1 :])
    if i1 != i2:
        g1_is_backward = i1 < i2
    else:
        g1_is_backward = g1 == arc[i1] - p
    middle = detour if g1_is_backward else list(reversed(detour))
    new_arc = head + middle + tail
    cleaned = [new_arc[0]]
    for q in new_arc[1:]:
        if q != cleaned[-1]:
            cleaned.append(q)
    return tuple(cleaned)


def perturb_tangencies(d: Drawing, max_retries: int = 20) -> Drawing:
    """Make every tangent pair disjoint, leaving all other pair classes and
    the vertex and edge counts unchanged."""
    problems = validate(d)
    if problems:
        raise ValueError(f"invalid drawing: {problems[0]}")

    current = d
    guard = 0
    while True:
        tangents = _tangent_pairs(current)
        if not tangents:
            break
        guard += 1
        if guard > 10 * (d.m * d.m + 1):
            raise PerturbationCollision("tangency removal did not converge")
        e1, e2, p = tangents[0]
        keep, move = (e1, e2) if e2 > e1 else (e2, e1)
        before = {
            fid: current.pair_events(move, fid)
            for fid in current.edge_ids()
            if fid not in (move, keep)
        }
        for shrink in range(max_retries):
            new_arc = _retract(current, keep, move, p, shrink)
            cand_edges = dict(current.edges)
            e = cand_edges[move]
            cand_edges[move] = Edge(e.tail, e.head, new_arc)
            cand = Drawing(current.vertices, cand_edges, current.bipartition)
            if _retraction_ok(cand, keep, move, before):
                current = cand
                break
        else:
            raise PerturbationCollision(f"retraction of {move} at {p} kept colliding")
    return current


def _retraction_ok(cand: Drawing, keep: str, move: str, before) -> bool:
    try:
        if arc_intersections(cand.edges[move].arc, cand.edges[keep].arc):
            return False
        for fid, old_events in before.items():
            new_events = cand.pair_events(move, fid)
            if [(ev.location, ev.kind) for ev in new_events] != [
                (ev.location, ev.kind) for ev in old_events
            ]:
                return False
    except Exception:
        return False
    return True
