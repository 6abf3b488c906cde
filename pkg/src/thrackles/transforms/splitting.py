"""Degree reduction by vertex splitting, preserving the intersection graph.

A vertex v of degree d > Delta is replaced by ceil(d/Delta) new vertices.
All rerouting happens inside a disk around v that is exactly verified to
contain nothing but the straight initial stubs of the incident arcs.  Inside
the disk each incident arc is truncated to a stub and led through three
stages: a chord run inside a private annulus that brings it near a corridor
direction, a straight leg down to a port on a line, and a braid between two
parallel port lines that realizes the block-reversal permutation.  Edges in
the same block then fan into their common new vertex; edges in different
blocks cross exactly once inside the braid.  Consequently any two edges
formerly sharing v still intersect exactly once, so the intersection graph
is unchanged, which is asserted afterwards by full reclassification.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..drawing import (
    COMMON_ENDPOINT,
    CROSSING,
    Drawing,
    Edge,
    classify_pair,
    is_simple,
    validate,
)
from ..geometry import (
    Point,
    Segment,
    cross,
    segment_intersection,
    segments,
    sort_ccw,
    squared_distance_point_polyline,
    squared_distance_point_segment,
    squared_norm,
)


class DeltaTooSmall(ValueError):
    pass


class SplitConstructionError(RuntimeError):
    pass


@dataclass
class SplitCertificate:
    """Witness of the split: the edge bijection is the identity on ids."""

    vertex_map: Dict[str, List[str]]
    edge_bijection: Dict[str, str]


def _ccw_strictly_between(a: Point, u: Point, b: Point) -> bool:
    """Is direction u strictly inside the ccw wedge from a to b?"""
    ab = a.x * b.y - a.y * b.x
    au = a.x * u.y - a.y * u.x
    ub = u.x * b.y - u.y * b.x
    if ab > 0:
        return au > 0 and ub > 0
    if ab < 0:
        return au > 0 or ub > 0
    # a and b parallel: either opposite (wedge = half plane) or equal
    if a.x * b.x + a.y * b.y < 0:
        return au > 0
    return au != 0 or ub != 0


def _rational_direction(angle: float, denom: int = 1 << 12) -> Point:
    x = Fraction(math.cos(angle)).limit_denominator(denom)
    y = Fraction(math.sin(angle)).limit_denominator(denom)
    if x == 0 and y == 0:
        x = Fraction(1)
    return Point(x, y)


def _direction_between(a: Point, b: Point) -> Point:
    """A rational direction strictly inside the ccw wedge from a to b."""
    ang_a = math.atan2(float(a.y), float(a.x))
    ang_b = math.atan2(float(b.y), float(b.x))
    sweep = (ang_b - ang_a) % (2 * math.pi)
    if sweep == 0:
        sweep = 2 * math.pi
    denom = 1 << 12
    for _ in range(20):
        u = _rational_direction(ang_a + sweep / 2, denom)
        if _ccw_strictly_between(a, u, b):
            return u
        denom <<= 4
    raise SplitConstructionError("could not find a corridor direction")


def _scale_to_band(vec: Point, lo2: Fraction, hi2: Fraction) -> Fraction:
    """Rational t > 0 with lo2 < t^2 |vec|^2 < hi2."""
    n2 = squared_norm(vec)
    target = math.sqrt(float((lo2 + hi2) / 2) / float(n2))
    t = Fraction(target).limit_denominator(1 << 16)
    for _ in range(64):
        v2 = t * t * n2
        if v2 <= lo2:
            t = t * Fraction(17, 16)
        elif v2 >= hi2:
            t = t * Fraction(15, 16)
        else:
            return t
    raise SplitConstructionError("could not scale vector into band")


def _cw_sweep_directions(start: Point, end: Point) -> List[Point]:
    """Directions stepping clockwise from start to end in steps < pi/2.

    Both endpoints included; intermediate directions are rational
    approximations verified to keep strictly clockwise sub-pi/2 steps.
    """
    ang_s = math.atan2(float(start.y), float(start.x))
    ang_e = math.atan2(float(end.y), float(end.x))
    sweep = (ang_s - ang_e) % (2 * math.pi)  # cw amount from start down to end
    steps = max(1, math.ceil(sweep / (math.pi / 3)))
    dirs = [start]
    for k in range(1, steps):
        dirs.append(_rational_direction(ang_s - sweep * k / steps))
    dirs.append(end)
    for u, w in zip(dirs, dirs[1:]):
        c = u.x * w.y - u.y * w.x
        dot = u.x * w.x + u.y * w.y
        if not (c < 0 or (c == 0 and dot > 0)):
            raise SplitConstructionError("sweep step not clockwise")
        if dot <= 0 and c >= 0:
            raise SplitConstructionError("sweep step too wide")
    return dirs


def _block_of(j: int, delta: int) -> int:
    return (j - 1) // delta + 1


def _safe_radius_squared(d: Drawing, v: str) -> Fraction:
    """Squared radius of a disk around v meeting only incident first segments."""
    pv = d.vertices[v]
    best: Optional[Fraction] = None

    def consider(val: Fraction):
        nonlocal best
        if best is None or val < best:
            best = val

    for w, pw in d.vertices.items():
        if w != v:
            consider(squared_norm(pw - pv))
    for e in d.edges.values():
        incident = v in (e.tail, e.head)
        if not incident:
            consider(squared_distance_point_polyline(pv, e.arc))
        else:
            arc = e.arc if e.arc[0] == pv else tuple(reversed(e.arc))
            if len(arc) > 2:
                consider(squared_distance_point_polyline(pv, arc[1:]))
    if best is None:
        raise SplitConstructionError("isolated vertex cannot be split")
    return best


def _split_one_vertex(d: Drawing, v: str, delta: int, fresh_ids) -> Tuple[Drawing, List[str]]:
    pv = d.vertices[v]
    incident = []
    for eid in sorted(d.edges):
        e = d.edges[eid]
        if v == e.tail:
            incident.append((eid, e.arc, False))
        elif v == e.head:
            incident.append((eid, tuple(reversed(e.arc)), True))
    dv = len(incident)
    germs = {eid: arc[1] - arc[0] for eid, arc, _ in incident}
    order = sort_ccw(list(germs.values()))
    ordered = []
    used = set()
    for g in order:
        for eid, arc, rev in incident:
            if eid not in used and germs[eid] == g:
                ordered.append((eid, arc, rev))
                used.add(eid)
                break
    g_count = -(-dv // delta)

    rr = _safe_radius_squared(d, v)
    r = Fraction(1)
    while 4 * r * r > rr:
        r /= 2

    first_germ = germs[ordered[0][0]]
    last_germ = germs[ordered[-1][0]]
    corridor = _direction_between(last_germ, first_germ)
    normal = Point(-corridor.y, corridor.x)

    # stub radii r_j = r / 2^(j+1); ports well below the innermost annulus
    port_sigma = _scale_to_band(corridor, (r / (1 << dv + 4)) ** 2, (r / (1 << dv + 3)) ** 2)
    q_top = pv + corridor.scaled(port_sigma)
    q_bot = pv + corridor.scaled(port_sigma / 2)
    q_fan = pv + corridor.scaled(port_sigma / 4)
    mu = _scale_to_band(normal, (r / (1 << dv + 9)) ** 2, (r / (1 << dv + 8)) ** 2)

    # psi directions: tiny ccw angles above the corridor, increasing with j
    psi_dirs = []
    for j in range(1, dv + 1):
        lo = corridor if not psi_dirs else psi_dirs[-1]
        psi_dirs.append(_direction_between(lo, first_germ))

    strands = []
    for j, (eid, arc, rev) in enumerate(ordered, start=1):
        r_j = r / (1 << (j + 1))
        germ = germs[eid]
        lo2, hi2 = (r_j * Fraction(3, 4)) ** 2, (r_j * Fraction(15, 16)) ** 2
        t_stub = _scale_to_band(germ, lo2, hi2)
        if t_stub >= 1:
            raise SplitConstructionError("stub parameter left the first segment")
        stub = pv + germ.scaled(t_stub)
        run = [stub]
        for u in _cw_sweep_directions(germ, psi_dirs[j - 1])[1:]:
            run.append(pv + u.scaled(_scale_to_band(u, lo2, hi2)))
        # annulus containment: waypoints and chords stay in (r_j/2, r_j)
        inner2 = (r_j / 2) ** 2
        for p in run:
            if not inner2 < squared_norm(p - pv) < r_j * r_j:
                raise SplitConstructionError("waypoint left its annulus")
        for a, b in zip(run, run[1:]):
            if a != b and squared_distance_point_segment(pv, Segment(a, b)) <= inner2:
                raise SplitConstructionError("chord dipped below its annulus")
        run = [p for k, p in enumerate(run) if k == 0 or p != run[k - 1]]
        blk = _block_of(j, delta)
        rest = _arc_after(arc, stub, t_stub)
        strands.append({"edge": eid, "rev": rev, "j": j, "block": blk, "run": run, "rest": rest})

    offset0 = Fraction(dv + 1, 2)
    positions = {}
    for s in strands:
        j, blk = s["j"], s["block"]
        size_after = dv - min(delta * blk, dv)
        rho = j - delta * (blk - 1)
        positions[j] = size_after + rho

    jitter_scale = Fraction(1, 8)
    for attempt in range(40):
        ok = True
        tops = {}
        bots = {}
        for s in strands:
            j = s["j"]
            tops[j] = q_top + normal.scaled((Fraction(j) - offset0) * mu)
            jit = jitter_scale * Fraction(j * j, (dv + 1) * (dv + 1))
            bots[j] = q_bot + normal.scaled((Fraction(positions[j]) - offset0 + jit) * mu)
        # braid verification: same block never crosses, different blocks cross once,
        # all crossing points distinct and interior
        points = {}
        for a in strands:
            for b in strands:
                if a["j"] >= b["j"]:
                    continue
                seg_a = Segment(tops[a["j"]], bots[a["j"]])
                seg_b = Segment(tops[b["j"]], bots[b["j"]])
                hit = segment_intersection(seg_a, seg_b)
                same_block = a["block"] == b["block"]
                if same_block:
                    if hit is not None:
                        ok = False
                        break
                else:
                    if not isinstance(hit, Point):
                        ok = False
                        break
                    if hit in (seg_a.a, seg_a.b, seg_b.a, seg_b.b):
                        ok = False
                        break
                    if hit in points:
                        ok = False
                        break
                    points[hit] = (a["j"], b["j"])
            if not ok:
                break
        if ok:
            break
        jitter_scale /= 3
    else:
        raise SplitConstructionError("braid jitter failed to separate crossings")

    block_ids = {}
    fan_points = {}
    for blk in range(1, g_count + 1):
        members = [s["j"] for s in strands if s["block"] == blk]
        mean_pos = sum(Fraction(positions[j]) for j in members) / len(members)
        fan_points[blk] = q_fan + normal.scaled((mean_pos - offset0) * mu)
        block_ids[blk] = fresh_ids(v, blk)

    new_vertices = dict(d.vertices)
    del new_vertices[v]
    for blk, vid in block_ids.items():
        new_vertices[vid] = fan_points[blk]

    new_edges = dict(d.edges)
    for s in strands:
        eid = s["edge"]
        e = d.edges[eid]
        vid = block_ids[s["block"]]
        inner = [fan_points[s["block"]], bots[s["j"]], tops[s["j"]]]
        run_back = list(reversed(s["run"]))
        pts = inner + run_back + list(s["rest"])
        cleaned = [pts[0]]
        for p in pts[1:]:
            if p != cleaned[-1]:
                cleaned.append(p)
        arc = tuple(cleaned)
        if s["rev"]:
            new_edges[eid] = Edge(e.tail, vid, tuple(reversed(arc)))
        else:
            new_edges[eid] = Edge(vid, e.head, arc)

    out = Drawing(new_vertices, new_edges, d.bipartition and dict(d.bipartition))
    if d.bipartition and v in d.bipartition:
        for vid in block_ids.values():
            out.bipartition[vid] = d.bipartition[v]
        del out.bipartition[v]
    return out, [block_ids[b] for b in sorted(block_ids)]


def _arc_after(arc: Tuple[Point, ...], stub: Point, t_stub: Fraction) -> Tuple[Point, ...]:
    """The arc from the stub point outward (stub lies on the first segment)."""
    return (stub,) + tuple(arc[1:])


def split_vertices(d: Drawing, delta: int, verify: bool = True) -> Tuple[Drawing, SplitCertificate]:
    """Split every vertex of degree > delta; the output has max degree <=
    delta, at most n + 2m/delta vertices, the same m edges, and an
    intersection graph isomorphic to the input's under the identity edge map.
    """
    if delta < 2:
        raise DeltaTooSmall("delta must be at least 2")
    if d.n and Fraction(delta) < Fraction(2 * d.m, d.n):
        raise DeltaTooSmall(f"delta {delta} below average degree {2 * d.m}/{d.n}")

    before = None
    if verify:
        ids = d.edge_ids()
        before = {}
        for i, e1 in enumerate(ids):
            for e2 in ids[i + 1 :]:
                pc = classify_pair(d, e1, e2)
                if pc.total > 1:
                    raise ValueError("split_vertices requires a simple drawing")
                before[(e1, e2)] = pc

    counter = [0]
    taken = set(d.vertices)

    def fresh_ids(v: str, blk: int) -> str:
        base = f"{v}.{blk}"
        name = base
        while name in taken:
            counter[0] += 1
            name = f"{base}.{counter[0]}"
        taken.add(name)
        return name

    current = d
    vertex_map = {v: [v] for v in d.vertices}
    while True:
        degs = current.degrees()
        over = sorted(v for v, deg in degs.items() if deg > delta)
        if not over:
            break
        v = over[0]
        current, new_ids = _split_one_vertex(current, v, delta, fresh_ids)
        # v may itself be a piece of an earlier split
        for orig, pieces in vertex_map.items():
            if v in pieces:
                k = pieces.index(v)
                vertex_map[orig] = pieces[:k] + new_ids + pieces[k + 1 :]
                break

    cert = SplitCertificate(vertex_map, {e: e for e in d.edges})

    if verify:
        _verify_split(d, current, delta, before)
    return current, cert


def _verify_split(original: Drawing, result: Drawing, delta: int, before) -> None:
    if validate(result):
        raise SplitConstructionError("split output fails validation")
    if result.m != original.m:
        raise SplitConstructionError("edge count changed")
    bound = Fraction(original.n) + Fraction(2 * original.m, delta)
    if result.n > bound:
        raise SplitConstructionError(f"vertex count {result.n} exceeds n + 2m/delta = {bound}")
    if any(deg > delta for deg in result.degrees().values()):
        raise SplitConstructionError("a vertex still exceeds delta")
    ids = result.edge_ids()
    for i, e1 in enumerate(ids):
        for e2 in ids[i + 1 :]:
            pc_before = before[(e1, e2)]
            pc_after = classify_pair(result, e1, e2)
            if pc_after.total > 1:
                raise SplitConstructionError(f"pair {e1},{e2} not simple after split")
            if (pc_before.total > 0) != (pc_after.total > 0):
                raise SplitConstructionError(f"adjacency of {e1},{e2} changed")
