"""Small handcrafted drawings used by tests and the tangled suite."""

from __future__ import annotations

from fractions import Fraction

from .drawing import Drawing, Edge
from .geometry import pt


def convex_k4() -> Drawing:
    """K4 on a square: four sides plus the two crossing diagonals."""
    v = {"p": pt(0, 0), "q": pt(2, 0), "r": pt(2, 2), "s": pt(0, 2)}
    e = {
        "pq": Edge("p", "q", (v["p"], v["q"])),
        "qr": Edge("q", "r", (v["q"], v["r"])),
        "rs": Edge("r", "s", (v["r"], v["s"])),
        "sp": Edge("s", "p", (v["s"], v["p"])),
        "pr": Edge("p", "r", (v["p"], v["r"])),
        "qs": Edge("q", "s", (v["q"], v["s"])),
    }
    return Drawing(v, e)


def touch_pair() -> Drawing:
    """Two bent edges sharing exactly one point, a tangency at (1, 1)."""
    v = {"a": pt(0, 0), "b": pt(2, 0), "c": pt(0, 2), "d": pt(2, 2)}
    e = {
        "low": Edge("a", "b", (pt(0, 0), pt(1, 1), pt(2, 0))),
        "high": Edge("c", "d", (pt(0, 2), pt(1, 1), pt(2, 2))),
    }
    return Drawing(v, e)


def tangled_triple() -> Drawing:
    """Three edges, every pair sharing exactly one point: two tangencies onto
    a baseline edge plus one common endpoint, so the drawing is a tangled
    thrackle but not a thrackle."""
    v = {
        "w": pt(-4, 0),
        "e": pt(4, 0),
        "p": pt(-2, 2),
        "q": pt(0, 2),
        "r": pt(2, 2),
    }
    e = {
        "base": Edge("w", "e", (pt(-4, 0), pt(4, 0))),
        "left": Edge("p", "q", (pt(-2, 2), pt(-1, 0), pt(0, 2))),
        "right": Edge("q", "r", (pt(0, 2), pt(1, 0), pt(2, 2))),
    }
    return Drawing(v, e)


def s_curve_pair() -> Drawing:
    """Two edges crossing twice; valid but not simple."""
    v = {"a": pt(0, 0), "b": pt(6, 0), "c": pt(0, 1), "d": pt(6, 1)}
    e = {
        "flat": Edge("a", "b", (pt(0, 0), pt(6, 0))),
        "wave": Edge("c", "d", (pt(0, 1), pt(3, -1), pt(6, 1))),
    }
    return Drawing(v, e)


def triple_point() -> Drawing:
    """Three segments through the origin, all interior: violates the
    no-three-edges condition."""
    v = {
        "a1": pt(-2, 0), "a2": pt(2, 0),
        "b1": pt(-1, -2), "b2": pt(1, 2),
        "c1": pt(1, -2), "c2": pt(-1, 2),
    }
    e = {
        "a": Edge("a1", "a2", (v["a1"], v["a2"])),
        "b": Edge("b1", "b2", (v["b1"], v["b2"])),
        "c": Edge("c1", "c2", (v["c1"], v["c2"])),
    }
    return Drawing(v, e)


def collinear_overlap() -> Drawing:
    """Two edges whose arcs share a sub-segment of positive length."""
    v = {"a": pt(0, 0), "b": pt(4, 0), "c": pt(1, 2), "d": pt(3, 2)}
    e = {
        "flat": Edge("a", "b", (v["a"], v["b"])),
        "dip": Edge(
            "c", "d",
            (pt(1, 2), pt(Fraction(3, 2), 0), pt(Fraction(5, 2), 0), pt(3, 2)),
        ),
    }
    return Drawing(v, e)


def crossing_at_shared_vertex() -> Drawing:
    """Drawing whose only crossings are between edges sharing a vertex, so
    the independent odd-crossing count is zero."""
    v = {"o": pt(0, 0), "a": pt(4, 1), "b": pt(4, -1)}
    e = {
        # both edges leave o; they cross once away from o
        "up": Edge("o", "a", (pt(0, 0), pt(2, -2), pt(4, 1))),
        "down": Edge("o", "b", (pt(0, 0), pt(2, 2), pt(4, -1))),
    }
    return Drawing(v, e)
