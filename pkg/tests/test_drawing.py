import pytest

from thrackles import fixtures
from thrackles.drawing import (
    COMMON_ENDPOINT,
    CROSSING,
    DISJOINT,
    MIXED,
    TANGENT,
    Drawing,
    Edge,
    classify_drawing,
    classify_pair,
    intersection_graph,
    is_simple,
    validate,
)
from thrackles.generators import plane_matching, star_thrackle
from thrackles.geometry import pt


def test_convex_k4_is_valid():
    assert validate(fixtures.convex_k4()) == []


def test_triple_point_is_reported():
    problems = validate(fixtures.triple_point())
    assert any(v.code == "triple-point" for v in problems)


def test_collinear_overlap_is_reported():
    problems = validate(fixtures.collinear_overlap())
    assert any(v.code == "degenerate-overlap" for v in problems)


def test_parallel_edges_rejected():
    v = {"a": pt(0, 0), "b": pt(2, 0)}
    e = {
        "e1": Edge("a", "b", (pt(0, 0), pt(2, 0))),
        "e2": Edge("a", "b", (pt(0, 0), pt(1, 1), pt(2, 0))),
    }
    problems = validate(Drawing(v, e))
    assert any(v.code == "parallel-edges" for v in problems)


def test_arc_through_vertex_rejected():
    v = {"a": pt(0, 0), "b": pt(4, 0), "c": pt(2, 0), "d": pt(2, 2)}
    e = {
        "long": Edge("a", "b", (pt(0, 0), pt(4, 0))),
        "up": Edge("c", "d", (pt(2, 0), pt(2, 2))),
    }
    problems = validate(Drawing(v, e))
    assert any(v.code == "arc-through-vertex" for v in problems)


def test_classify_pair_square_diagonals():
    d = fixtures.convex_k4()
    pc = classify_pair(d, "pr", "qs")
    assert pc.relation == CROSSING and pc.crossings == 1


def test_classify_pair_common_endpoint():
    d = fixtures.convex_k4()
    pc = classify_pair(d, "pq", "qr")
    assert pc.relation == COMMON_ENDPOINT and pc.shared_endpoints == 1


def test_classify_pair_touch_fixture():
    d = fixtures.touch_pair()
    pc = classify_pair(d, "low", "high")
    assert pc.relation == TANGENT and pc.touches == 1


def test_classify_pair_disjoint():
    d = plane_matching(2)
    pc = classify_pair(d, "e0", "e1")
    assert pc.relation == DISJOINT and pc.total == 0


def test_classify_pair_mixed():
    d = fixtures.crossing_at_shared_vertex()
    pc = classify_pair(d, "up", "down")
    assert pc.relation == MIXED


def test_is_simple():
    assert is_simple(fixtures.convex_k4())
    assert not is_simple(fixtures.s_curve_pair())
    single = Drawing({"a": pt(0, 0), "b": pt(1, 0)}, {"e": Edge("a", "b", (pt(0, 0), pt(1, 0)))})
    assert is_simple(single)


def test_intersection_graph_star_thrackle_complete():
    d = star_thrackle(5)
    g = intersection_graph(d)
    assert g.edge_count == 10  # complete on 5 edges
    assert g.disjoint_pairs() == []


def test_intersection_graph_matching_empty():
    g = intersection_graph(plane_matching(3))
    assert g.edge_count == 0
    assert len(g.disjoint_pairs()) == 3


def test_intersection_graph_k4():
    d = fixtures.convex_k4()
    g = intersection_graph(d)
    # 15 pairs, two opposite-side pairs are disjoint
    assert g.edge_count == 13
    disjoint = {frozenset(p) for p in g.disjoint_pairs()}
    assert disjoint == {frozenset(("pq", "rs")), frozenset(("qr", "sp"))}


def test_pair_count_identity():
    for d in (fixtures.convex_k4(), star_thrackle(7), plane_matching(4)):
        g = intersection_graph(d)
        m = d.m
        assert len(g.disjoint_pairs()) + g.edge_count == m * (m - 1) // 2


def test_classify_drawing_flags():
    flags = classify_drawing(star_thrackle(5))
    assert flags.is_thrackle and flags.is_tangled_thrackle

    flags = classify_drawing(plane_matching(2))
    assert not flags.is_thrackle and not flags.is_tangled_thrackle

    flags = classify_drawing(fixtures.touch_pair())
    assert flags.is_tangled_thrackle and not flags.is_thrackle

    flags = classify_drawing(fixtures.tangled_triple())
    assert flags.is_tangled_thrackle and not flags.is_thrackle
    assert flags.tangency_count == 2


def test_classify_pair_symmetric():
    d = fixtures.convex_k4()
    for e1 in d.edge_ids():
        for e2 in d.edge_ids():
            if e1 < e2:
                assert classify_pair(d, e1, e2) == classify_pair(d, e2, e1)
