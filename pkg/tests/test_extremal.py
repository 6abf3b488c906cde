import itertools

import pytest

from thrackles import fixtures
from thrackles.drawing import DISJOINT, classify_pair
from thrackles.extremal import (
    BoundConstants,
    COR_EQ2,
    KST,
    LEM_EQ1,
    BISECT,
    PT_LOG,
    MissingDegrees,
    TooLarge,
    bound_value,
    density_report,
    has_disjoint_biclique,
    max_pairwise_disjoint,
)
from thrackles.generators import plane_matching, star_thrackle, two_cluster


def test_max_disjoint_matching():
    assert max_pairwise_disjoint(plane_matching(5)) == 5


def test_max_disjoint_thrackle():
    assert max_pairwise_disjoint(star_thrackle(7)) == 1


def test_max_disjoint_k4():
    assert max_pairwise_disjoint(fixtures.convex_k4()) == 2


def _brute_max_disjoint(d):
    ids = d.edge_ids()
    disjoint = {
        frozenset((a, b))
        for a, b in itertools.combinations(ids, 2)
        if classify_pair(d, a, b).relation == DISJOINT
    }
    best = 1 if ids else 0
    for r in range(2, len(ids) + 1):
        for combo in itertools.combinations(ids, r):
            if all(frozenset(p) in disjoint for p in itertools.combinations(combo, 2)):
                best = max(best, r)
    return best


def test_max_disjoint_matches_brute_force():
    for d in (fixtures.convex_k4(), plane_matching(4), star_thrackle(5), two_cluster(2)):
        assert max_pairwise_disjoint(d) == _brute_max_disjoint(d)


def test_biclique_basic():
    ok, witness = has_disjoint_biclique(plane_matching(2), 1)
    assert ok and witness is not None
    s, t = witness
    assert len(s) == len(t) == 1 and not set(s) & set(t)

    for t_param in (1, 2, 3):
        ok, _ = has_disjoint_biclique(star_thrackle(7), t_param)
        assert not ok


def test_biclique_two_cluster():
    d = two_cluster(2)
    ok, witness = has_disjoint_biclique(d, 2)
    assert ok
    s, t = witness
    for a in s:
        for b in t:
            assert classify_pair(d, a, b).relation == DISJOINT


def test_biclique_monotone():
    d = plane_matching(6)
    results = [has_disjoint_biclique(d, t)[0] for t in range(1, 5)]
    assert results == sorted(results, reverse=True)


def test_biclique_t1_iff_two_disjoint():
    for d in (fixtures.convex_k4(), star_thrackle(5), plane_matching(3)):
        ok, _ = has_disjoint_biclique(d, 1)
        assert ok == (max_pairwise_disjoint(d) >= 2)


def _brute_biclique(d, t):
    ids = d.edge_ids()
    disjoint = {
        frozenset((a, b))
        for a, b in itertools.combinations(ids, 2)
        if classify_pair(d, a, b).relation == DISJOINT
    }
    for s in itertools.combinations(ids, t):
        for tt in itertools.combinations(ids, t):
            if set(s) & set(tt):
                continue
            if all(frozenset((a, b)) in disjoint for a in s for b in tt):
                return True
    return False


def test_biclique_matches_brute_force():
    drawings = [fixtures.convex_k4(), plane_matching(4), two_cluster(2), star_thrackle(5)]
    for d in drawings:
        if d.m > 10:
            continue
        for t in (1, 2, 3):
            if d.m < 2 * t:
                continue
            assert has_disjoint_biclique(d, t)[0] == _brute_biclique(d, t)


def test_bound_value_examples():
    assert bound_value(KST, 100, 2) == pytest.approx(1000.0)
    assert bound_value(PT_LOG, 1024, 2) == pytest.approx(1024.0)
    assert bound_value(COR_EQ2, 2 ** 20, 1) == pytest.approx(32768.0)


def test_bound_value_kst_tolerance():
    for n in (10, 1000, 10 ** 6):
        for t in (1, 2, 5):
            assert bound_value(KST, n, t) == pytest.approx(n ** (2 - 1 / t), rel=1e-9)


def test_bound_value_degrees_required():
    with pytest.raises(MissingDegrees):
        bound_value(BISECT, 10, 2)
    with pytest.raises(MissingDegrees):
        bound_value(LEM_EQ1, 10, 2)
    assert bound_value(BISECT, 16, 2, degrees=[2, 2], odd_crossings=0) == pytest.approx(
        4 * (8 ** 0.5)
    )


def test_density_report_matching():
    rep = density_report(plane_matching(5), t=2)
    assert rep.n == 10 and rep.m == 5
    assert rep.ratio == pytest.approx(0.5)
    assert rep.max_disjoint == 5
    assert not rep.exact_skipped


def test_density_report_thrackle():
    rep = density_report(star_thrackle(5), t=1)
    assert rep.ratio == pytest.approx(1.0)
    assert rep.biclique_t == 0  # no disjoint pair at all


def test_density_report_k4():
    rep = density_report(fixtures.convex_k4(), t=2)
    assert rep.ratio == pytest.approx(1.5)
    assert rep.max_disjoint == 2
    assert set(rep.bounds) == {KST, PT_LOG, COR_EQ2, BISECT, LEM_EQ1}


def test_exact_cap():
    with pytest.raises(TooLarge):
        max_pairwise_disjoint(plane_matching(25))


def test_bad_constants():
    with pytest.raises(ValueError):
        BoundConstants(c1=0)
