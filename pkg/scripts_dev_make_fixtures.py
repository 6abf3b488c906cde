"""Dev helper: build the all-tangent k x k fixtures, verify, write data files."""

import sys
from fractions import Fraction

sys.path.insert(0, "src")

from thrackles.geometry import Point, pt, arc_intersections
from thrackles.arrangements import tangency_graph, refine_to_single_face, build_arrangement
from thrackles.io import save_arcs


def verticals(k):
    return [ (pt(1000*(j+1), 0), pt(1000*(j+1), 2100)) for j in range(k) ]


def comb_k1():
    L1 = [(pt(500, 400), pt(1000, 400))]
    return L1, verticals(1)


def comb_k2():
    L1 = [
        (pt(1000, 400), pt(2000, 400)),
        (pt(1000, 800), pt(2000, 800)),
    ]
    return L1, verticals(2)


def comb_k3():
    # start T on V1, bend-touch V2, T-end on V3 approached from the west
    k = 3
    arcs = []
    for i in range(1, k + 1):
        a = 400 * i
        r1x = 1000 + 20 * i
        t1 = 2280 - 8 * i            # T1 DESC in i
        theta = 50 + 10 * i          # theta ASC in i (reverse of T1 order)
        dend = 400 * (k + 1 - i)     # V3 end heights DESC in i (reverse of theta)
        arc = (
            pt(1000, a),             # T-start on V1
            pt(2000, a),             # bend-touch V2
            pt(r1x, a + 40),         # retreat
            pt(r1x, t1),             # rise1
            pt(3000 - theta, t1),    # top1 east
            pt(3000 - theta, dend),  # descend west of V3
            pt(3000, dend),          # T-end on V3
        )
        arcs.append(arc)
    return arcs, verticals(k)


def comb_k4():
    k = 4
    arcs = []
    for i in range(1, k + 1):
        a = 400 * i
        r1x = 1000 + 20 * i
        t1 = 2280 - 8 * i                  # T1 DESC in i
        D = 420 - 10 * i                   # descent offsets DESC in i
        c = 1500 + 5 * i                   # V3 touch heights, clustered
        R = 560 - 10 * i                   # rise2 offsets DESC in i
        B = 2400 + 8 * i                   # band-2 tops ASC in i
        theta = 90 - 10 * i                # V4 cluster: theta DESC in i (B ASC)
        dend = 400 * i                     # V4 end heights ASC in i
        arc = (
            pt(1000, a),                               # T-start on V1
            pt(2000, a),                               # bend-touch V2
            pt(r1x, a + 40),
            pt(r1x, t1),
            pt(3000 + D, t1),                          # top1 east, over V2 & V3
            Point(Fraction(3000 + D), Fraction(c) + Fraction(D, 10)),   # descent
            pt(3000, c),                               # bend-touch V3 (from east)
            Point(Fraction(3000 + R), Fraction(c) + Fraction(R, 20)),   # retreat diag
            pt(3000 + R, B),                           # rise2
            pt(4000 - theta, B),                       # top2 east
            pt(4000 - theta, dend),                    # descend west of V4
            pt(4000, dend),                            # T-end on V4
        )
        arcs.append(arc)
    return arcs, verticals(k)


def verify(k, L1, L2):
    # pairwise: exactly one touch per cross pair
    for i, a in enumerate(L1):
        for j, b in enumerate(L2):
            evs = arc_intersections(a, b)
            assert len(evs) == 1 and evs[0].kind == "touch", (k, "cross", i, j, evs)
    for fam, name in ((L1, "L1"), (L2, "L2")):
        for i in range(len(fam)):
            for j in range(i + 1, len(fam)):
                evs = arc_intersections(fam[i], fam[j])
                assert len(evs) <= 1, (k, name, i, j, evs)
                for ev in evs:
                    assert ev.kind == "crossing", (k, name, i, j, ev)
    h = tangency_graph(L1, L2)
    assert h.edge_count == k * k, (k, h.edge_count)
    assert h.planar, k
    assert h.satisfies_planar_bound(), (k, h.vertex_count, h.edge_count)
    print(f"k={k}: |V(H)|={h.vertex_count} |E(H)|={h.edge_count} planar={h.planar}")
    if k == 4:
        s1, s2 = refine_to_single_face(L1, L2)
        assert len(s1) == 1 and len(s2) == 1
        print(f"k=4 refine -> {len(s1)}+{len(s2)} verified")


def main():
    builders = {1: comb_k1, 2: comb_k2, 3: comb_k3, 4: comb_k4}
    for k, build in builders.items():
        L1, L2 = build()
        verify(k, L1, L2)
        save_arcs([L1, L2], f"src/thrackles/data/tangency_k{k}.json")
        print(f"wrote tangency_k{k}.json")


if __name__ == "__main__":
    main()
