"""Deterministic instance generators.

Every generator is a pure function of (family, params, seed); randomized
families draw from ``random.Random(seed)`` (the Mersenne Twister, which is
stable across platforms) and rejection-sample until the instance passes
validation, so generator bugs surface here rather than downstream.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .drawing import Drawing, Edge, classify_drawing, is_simple, validate
from .geometry import Point, arc_intersections, pt


class BadParams(ValueError):
    pass


FAMILIES = (
    "star-thrackle",
    "plane-matching",
    "two-cluster",
    "random-bipartite",
    "star",
    "tangled-fixture",
)


def generate(family: str, params: Optional[dict] = None, seed: int = 0):
    params = dict(params or {})
    if family == "star-thrackle":
        return star_thrackle(params.get("n", 5), seed)
    if family == "plane-matching":
        return plane_matching(params.get("k", 3))
    if family == "two-cluster":
        return two_cluster(params.get("t", 2), seed)
    if family == "random-bipartite":
        return random_bipartite(params.get("n", 8), seed, params.get("m"))
    if family == "star":
        return star(params.get("k", 5), seed)
    if family == "tangled-fixture":
        from . import fixtures

        which = params.get("which", "triple")
        if which == "pair":
            return fixtures.touch_pair()
        if which == "triple":
            return fixtures.tangled_triple()
        raise BadParams(f"unknown tangled fixture {which!r}")
    raise BadParams(f"unknown family {family!r}")


def _circle_point(index: int, count: int, radius: int, jitter: Fraction) -> Point:
    angle = 2 * math.pi * index / count
    x = Fraction(radius * math.cos(angle)).limit_denominator(64) + jitter
    y = Fraction(radius * math.sin(angle)).limit_denominator(64) - jitter
    return Point(x, y)


def star_thrackle(n: int, seed: int = 0) -> Drawing:
    """Odd cycle drawn as a star polygon: edge i joins circle positions i and
    i + (n-1)/2, so every two edges meet at an endpoint or a crossing."""
    if n < 3 or n % 2 == 0:
        raise BadParams("star-thrackle needs odd n >= 3")
    rng = random.Random(seed)
    step = (n - 1) // 2
    for _ in range(60):
        jit = [Fraction(rng.randint(-6, 6), 256) for _ in range(n)]
        vertices = {f"v{i}": _circle_point(i, n, 8, jit[i]) for i in range(n)}
        edges = {}
        for i in range(n):
            a, b = f"v{i}", f"v{(i + step) % n}"
            edges[f"e{i}"] = Edge(a, b, (vertices[a], vertices[b]))
        d = Drawing(vertices, edges)
        if not validate(d) and classify_drawing(d).is_thrackle:
            return d
    raise BadParams(f"could not realize a star thrackle on {n} vertices")


def plane_matching(k: int) -> Drawing:
    if k < 1:
        raise BadParams("plane-matching needs k >= 1")
    vertices = {}
    edges = {}
    for i in range(k):
        vertices[f"a{i}"] = pt(0, 2 * i)
        vertices[f"b{i}"] = pt(3, 2 * i)
        edges[f"e{i}"] = Edge(f"a{i}", f"b{i}", (pt(0, 2 * i), pt(3, 2 * i)))
    return Drawing(vertices, edges)


def star(k: int, seed: int = 0) -> Drawing:
    """K_{1,k} with straight spokes."""
    if k < 1:
        raise BadParams("star needs k >= 1")
    rng = random.Random(seed)
    for _ in range(60):
        jit = [Fraction(rng.randint(-6, 6), 256) for _ in range(k)]
        vertices = {"c": pt(0, 0)}
        edges = {}
        for i in range(k):
            vertices[f"u{i}"] = _circle_point(i, k, 9, jit[i])
            edges[f"e{i}"] = Edge("c", f"u{i}", (vertices["c"], vertices[f"u{i}"]))
        d = Drawing(vertices, edges)
        if not validate(d):
            return d
    raise BadParams(f"could not realize K(1,{k})")


def two_cluster(t: int, seed: int = 0) -> Drawing:
    """Two far-apart clusters of t mutually crossing segments: every
    cross-cluster pair is disjoint, so the drawing holds a disjoint t x t
    biclique."""
    if t < 1:
        raise BadParams("two-cluster needs t >= 1")
    rng = random.Random(seed)
    for _ in range(80):
        vertices = {}
        edges = {}
        for c, x_off in enumerate((Fraction(0), Fraction(1000))):
            for i in range(t):
                slope = i
                b = Fraction(rng.randint(-20, 20), 97)
                xa, xb = Fraction(-6), Fraction(6)
                pa = Point(x_off + xa, slope * xa + b)
                pb = Point(x_off + xb, slope * xb + b)
                vertices[f"c{c}p{i}"] = pa
                vertices[f"c{c}q{i}"] = pb
                edges[f"c{c}e{i}"] = Edge(f"c{c}p{i}", f"c{c}q{i}", (pa, pb))
        d = Drawing(vertices, edges)
        if validate(d):
            continue
        ok = True
        for c in range(2):
            for i in range(t):
                for j in range(i + 1, t):
                    evs = arc_intersections(edges[f"c{c}e{i}"].arc, edges[f"c{c}e{j}"].arc)
                    if len(evs) != 1 or evs[0].kind != "crossing":
                        ok = False
        if ok:
            return d
    raise BadParams(f"could not realize two clusters of {t} crossing segments")


def random_bipartite(n: int, seed: int = 0, m: Optional[int] = None) -> Drawing:
    """Random simple bipartite drawing, vertex classes in two horizontal
    bands, edges straight or with up to two bends through the middle band."""
    if n < 4:
        raise BadParams("random-bipartite needs n >= 4")
    rng = random.Random(seed)
    na = n // 2
    nb = n - na
    if m is None:
        m = min(na * nb, max(n - 2, 3))
    if m > na * nb:
        raise BadParams(f"m={m} exceeds {na}*{nb}")

    for _ in range(40):
        vertices: Dict[str, Point] = {}
        bipartition = {}
        used_pts = set()

        def fresh_point(y_lo: int) -> Point:
            while True:
                p = Point(Fraction(rng.randint(0, 8 * n), 8), Fraction(rng.randint(8 * y_lo, 8 * y_lo + 24), 8))
                if p not in used_pts:
                    used_pts.add(p)
                    return p

        for i in range(na):
            vertices[f"a{i}"] = fresh_point(10)
            bipartition[f"a{i}"] = "a"
        for i in range(nb):
            vertices[f"b{i}"] = fresh_point(0)
            bipartition[f"b{i}"] = "b"

        pairs = [(i, j) for i in range(na) for j in range(nb)]
        rng.shuffle(pairs)
        edges: Dict[str, Edge] = {}
        count = 0
        for i, j in pairs:
            if count >= m:
                break
            a, b = f"a{i}", f"b{j}"
            placed = False
            for _attempt in range(12):
                arc = _random_arc(rng, vertices[a], vertices[b])
                eid = f"e{count}"
                cand = dict(edges)
                cand[eid] = Edge(a, b, arc)
                trial = Drawing(vertices, cand, bipartition)
                if not validate(trial) and is_simple(trial):
                    edges = cand
                    placed = True
                    break
            if placed:
                count += 1
        if count == m:
            d = Drawing(vertices, edges, bipartition)
            if not validate(d) and is_simple(d):
                return d
    raise BadParams(f"could not realize a random bipartite drawing n={n}, m={m}")


def _random_arc(rng: random.Random, pa: Point, pb: Point) -> Tuple[Point, ...]:
    """Straight segment, or a descending polyline with bends in the middle band."""
    bends = rng.choice((0, 0, 0, 1, 1, 2))
    if bends == 0:
        return (pa, pb)
    lo_x = min(pa.x, pb.x) - 2
    hi_x = max(pa.x, pb.x) + 2
    span = int((hi_x - lo_x) * 8)
    ys = sorted((Fraction(rng.randint(40, 76), 8) for _ in range(bends)), reverse=True)
    pts = [pa]
    for y in ys:
        pts.append(Point(lo_x + Fraction(rng.randint(0, span), 8), y))
    pts.append(pb)
    return tuple(pts)
