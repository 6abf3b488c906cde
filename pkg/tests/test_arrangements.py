import random
from fractions import Fraction

import pytest

from thrackles.arrangements import (
    NotPseudoSegments,
    TriplePoint,
    build_arrangement,
    euler_density_check,
    max_face_incidence,
)
from thrackles.ds import lambda3_upper
from thrackles.geometry import DegenerateOverlap, Point, pt


def test_single_segment():
    arr = build_arrangement([(pt(0, 0), pt(1, 0))])
    assert (arr.V, arr.E, arr.F) == (2, 1, 1)
    _, count = max_face_incidence(arr)
    assert count == 1 <= lambda3_upper(2)


def test_two_crossing_segments():
    arr = build_arrangement([(pt(0, 0), pt(2, 2)), (pt(0, 2), pt(2, 0))])
    assert (arr.V, arr.E, arr.F) == (5, 4, 1)
    _, count = max_face_incidence(arr)
    assert count == 4 <= lambda3_upper(4)


def test_triangle_of_three_segments():
    arcs = [
        (pt(0, 0), pt(10, 0)),
        (pt(1, -3), pt(7, 9)),
        (pt(9, -3), pt(3, 9)),
    ]
    arr = build_arrangement(arcs)
    assert (arr.V, arr.E, arr.F) == (9, 9, 2)
    assert sum(1 for f in arr.faces if f.bounded) == 1
    _, count = max_face_incidence(arr)
    assert count == 9 <= lambda3_upper(6)


def test_disconnected_components_euler():
    arcs = [
        (pt(0, 0), pt(1, 0)),
        (pt(5, 5), pt(6, 5), pt(6, 6)),
    ]
    arr = build_arrangement(arcs)
    assert arr.components == 2
    assert arr.V - arr.E + arr.F == 1 + arr.components


def test_nested_component_shares_outer_face():
    # a crossing X far away plus a tiny segment inside the X's bounded... the
    # X of two segments has no bounded face, so use a triangle with a segment
    # floating inside its bounded face
    arcs = [
        (pt(0, 0), pt(10, 0)),
        (pt(1, -3), pt(7, 9)),
        (pt(9, -3), pt(3, 9)),
        (pt(4, 2), pt(5, 2)),
    ]
    arr = build_arrangement(arcs)
    assert arr.components == 2
    assert arr.V - arr.E + arr.F == 1 + arr.components
    inner = arr.face_of_point(pt(Fraction(9, 2), Fraction(5, 2)))
    assert arr.faces[inner].bounded


def test_tangency_vertex_in_subdivision():
    arcs = [
        (pt(0, 0), pt(4, 0)),
        (pt(0, 2), pt(2, 0), pt(4, 2)),
    ]
    arr = build_arrangement(arcs)
    # touch point is a subdivision vertex of degree 4
    assert pt(2, 0) in arr.vertex_index
    assert arr.V == 5 and arr.E == 4
    assert arr.V - arr.E + arr.F == 1 + arr.components


def test_not_pseudo_segments():
    with pytest.raises(NotPseudoSegments):
        build_arrangement([
            (pt(0, 0), pt(6, 0)),
            (pt(0, 1), pt(3, -1), pt(6, 1)),
        ])


def test_triple_point_rejected():
    with pytest.raises(TriplePoint):
        build_arrangement([
            (pt(-2, 0), pt(2, 0)),
            (pt(-1, -2), pt(1, 2)),
            (pt(1, -2), pt(-1, 2)),
        ])


def test_overlap_rejected():
    with pytest.raises(DegenerateOverlap):
        build_arrangement([
            (pt(0, 0), pt(2, 0)),
            (pt(1, 0), pt(3, 0)),
        ])


def _random_segments(rng, m):
    while True:
        arcs = []
        for _ in range(m):
            while True:
                a = Point(Fraction(rng.randint(0, 64), 4), Fraction(rng.randint(0, 64), 4))
                b = Point(Fraction(rng.randint(0, 64), 4), Fraction(rng.randint(0, 64), 4))
                if a != b:
                    break
            arcs.append((a, b))
        try:
            return arcs, build_arrangement(arcs)
        except Exception:
            continue


def test_random_arrangements_respect_face_bound_and_euler():
    rng = random.Random(42)
    for _ in range(25):
        m = rng.randint(1, 8)
        arcs, arr = _random_segments(rng, m)
        assert arr.V - arr.E + arr.F == 1 + arr.components
        _, count = max_face_incidence(arr)
        assert count <= lambda3_upper(2 * m)


def test_euler_density_check():
    ratio, contradiction = euler_density_check(200)
    assert 3.3 < ratio < 3.4
    assert contradiction

    ratio10, c10 = euler_density_check(10)
    assert ratio10 == pytest.approx(0.278, abs=0.001)
    assert not c10

    ratio1, c1 = euler_density_check(1)
    assert ratio1 == pytest.approx(0.057, abs=0.001)
    assert not c1


def test_euler_density_threshold_brackets():
    values = [euler_density_check(k)[1] for k in range(10, 201)]
    # monotone flip somewhere between 10 and 200
    assert values[0] is False and values[-1] is True
    flips = sum(1 for a, b in zip(values, values[1:]) if a != b)
    assert flips == 1
