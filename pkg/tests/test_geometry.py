import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from thrackles.geometry import (
    DegenerateOverlap,
    Overlap,
    PROPER_CROSSING,
    Point,
    SHARED_ENDPOINT,
    Segment,
    TOUCH,
    arc_intersections,
    orientation,
    pt,
    segment_intersection,
    segments,
    validate_polyline,
)


def test_orientation_examples():
    assert orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == 1
    assert orientation(pt(0, 0), pt(1, 1), pt(2, 2)) == 0
    assert orientation(pt(0, 0), pt(0, 1), pt(1, 0)) == -1


rationals = st.fractions(min_value=-8, max_value=8, max_denominator=16)
points = st.builds(Point, rationals, rationals)


@given(points, points, points)
def test_orientation_antisymmetric_in_qr(p, q, r):
    assert orientation(p, q, r) == -orientation(p, r, q)


@given(points, points, points, points)
def test_orientation_translation_invariant(p, q, r, d):
    assert orientation(p, q, r) == orientation(p + d, q + d, r + d)


def test_segment_intersection_examples():
    assert segment_intersection(Segment(pt(0, 0), pt(2, 2)), Segment(pt(0, 2), pt(2, 0))) == pt(1, 1)
    assert segment_intersection(Segment(pt(0, 0), pt(1, 0)), Segment(pt(0, 1), pt(1, 1))) is None
    got = segment_intersection(Segment(pt(0, 0), pt(2, 0)), Segment(pt(1, 0), pt(3, 0)))
    assert isinstance(got, Overlap)
    assert (got.a, got.b) == (pt(1, 0), pt(2, 0))


def test_segment_intersection_endpoint_contact():
    got = segment_intersection(Segment(pt(0, 0), pt(1, 0)), Segment(pt(1, 0), pt(1, 5)))
    assert got == pt(1, 0)


def test_arc_intersections_touch_at_bend():
    a = (pt(0, 0), pt(1, 1), pt(2, 0))
    b = (pt(0, 2), pt(1, 1), pt(2, 2))
    events = arc_intersections(a, b)
    assert len(events) == 1
    assert events[0].kind == TOUCH
    assert events[0].location == pt(1, 1)


def test_arc_intersections_crossing():
    events = arc_intersections((pt(0, 0), pt(2, 2)), (pt(0, 2), pt(2, 0)))
    assert [e.kind for e in events] == [PROPER_CROSSING]


def test_arc_intersections_disjoint():
    assert arc_intersections((pt(0, 0), pt(1, 0)), (pt(2, 0), pt(3, 0))) == []


def test_arc_intersections_shared_endpoint():
    events = arc_intersections((pt(0, 0), pt(1, 1)), (pt(0, 0), pt(1, -1)))
    assert [e.kind for e in events] == [SHARED_ENDPOINT]


def test_arc_intersections_overlap_raises():
    with pytest.raises(DegenerateOverlap):
        arc_intersections((pt(0, 0), pt(2, 0)), (pt(1, 0), pt(3, 0)))


def test_crossing_at_bend_of_one_arc():
    # b crosses a exactly at a's bend, coming through transversally
    a = (pt(0, 0), pt(1, 1), pt(2, 0))
    b = (pt(1, 0), pt(1, 2))
    events = arc_intersections(a, b)
    assert [e.kind for e in events] == [PROPER_CROSSING]


def test_t_junction_is_touch():
    # b terminates on the interior of a: three germs never alternate
    a = (pt(0, 0), pt(2, 0))
    b = (pt(1, 0), pt(1, 2))
    events = arc_intersections(a, b)
    assert [e.kind for e in events] == [TOUCH]


def test_symmetry_of_arc_intersections():
    a = (pt(0, 0), pt(1, 1), pt(2, 0), pt(3, 3))
    b = (pt(0, 2), pt(1, 0), pt(2, 2), pt(3, 0))
    ab = arc_intersections(a, b)
    ba = arc_intersections(b, a)
    assert [(e.location, e.kind) for e in ab] == [(e.location, e.kind) for e in ba]


def test_validate_polyline_rejects_bad_input():
    with pytest.raises(Exception):
        validate_polyline((pt(0, 0),))
    with pytest.raises(Exception):
        validate_polyline((pt(0, 0), pt(0, 0)))
    with pytest.raises(Exception):
        validate_polyline((pt(0, 0), pt(2, 0), pt(1, 1), pt(1, -1)))  # self-crossing


def _random_polyline(rng, max_bends=6):
    while True:
        count = rng.randint(2, max_bends + 2)
        pts = []
        for _ in range(count):
            p = Point(
                Fraction(rng.randint(-64, 64), rng.randint(1, 16)),
                Fraction(rng.randint(-64, 64), rng.randint(1, 16)),
            )
            if not pts or p != pts[-1]:
                pts.append(p)
        if len(pts) < 2:
            continue
        try:
            validate_polyline(tuple(pts))
        except Exception:
            continue
        return tuple(pts)


def test_events_match_brute_force_segment_scan():
    rng = random.Random(7)
    for _ in range(30):
        a = _random_polyline(rng)
        b = _random_polyline(rng)
        try:
            events = arc_intersections(a, b)
        except DegenerateOverlap:
            continue
        brute = set()
        for sa in segments(a):
            for sb in segments(b):
                got = segment_intersection(sa, sb)
                if isinstance(got, Point):
                    brute.add(got)
        assert {e.location for e in events} == brute


def test_event_kinds_stable_under_reclassification():
    from thrackles.geometry import classify_common_point

    rng = random.Random(11)
    for _ in range(30):
        a = _random_polyline(rng)
        b = _random_polyline(rng)
        try:
            events = arc_intersections(a, b)
        except DegenerateOverlap:
            continue
        for e in events:
            assert classify_common_point(e.location, a, b) == e.kind
