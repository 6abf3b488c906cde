"""Disjointness structure of a drawing and the closed-form bound evaluators.

The exhaustive searches run over bitmask representations of the edge set and
are capped at 24 edges so worst cases stay interactive.  Bound formulas are
evaluated in double precision: they are report-only quantities (the absolute
constants are never fixed), while everything correctness-critical elsewhere
stays exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .drawing import DISJOINT, Drawing, classify_pair

EXACT_EDGE_CAP = 24

KST = "kst"
PT_LOG = "pt-log"
BISECT = "bisect"
LEM_EQ1 = "lem-eq1"
COR_EQ2 = "cor-eq2"

FORMULAS = (KST, PT_LOG, BISECT, LEM_EQ1, COR_EQ2)


class TooLarge(ValueError):
    pass


class MissingDegrees(ValueError):
    pass


@dataclass(frozen=True)
class BoundConstants:
    """The paper-style absolute constants; never valued, default 1."""

    c1: Fraction = Fraction(1)
    c2: Fraction = Fraction(1)
    c3: Fraction = Fraction(1)
    c4: Fraction = Fraction(1)
    c5: Fraction = Fraction(1)
    c6: Fraction = Fraction(1)
    n0: Fraction = Fraction(10)

    def __post_init__(self):
        for name in ("c1", "c2", "c3", "c4", "c5", "c6", "n0"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


def _disjoint_masks(d: Drawing) -> Tuple[list, list]:
    """Edge ids plus, per edge, the bitmask of edges disjoint from it."""
    ids = d.edge_ids()
    idx = {e: i for i, e in enumerate(ids)}
    masks = [0] * len(ids)
    for i, e1 in enumerate(ids):
        for e2 in ids[i + 1 :]:
            if classify_pair(d, e1, e2).relation == DISJOINT:
                masks[i] |= 1 << idx[e2]
                masks[idx[e2]] |= 1 << i
    return ids, masks


def max_pairwise_disjoint(d: Drawing) -> int:
    """Largest set of pairwise disjoint edges (= max clique in the complement
    of the intersection graph), by exhaustive branch and bound."""
    if d.m > EXACT_EDGE_CAP:
        raise TooLarge(f"exact mode handles at most {EXACT_EDGE_CAP} edges, got {d.m}")
    if d.m == 0:
        return 0
    ids, masks = _disjoint_masks(d)
    n = len(ids)
    best = 1

    def expand(candidates: int, size: int):
        nonlocal best
        if candidates == 0:
            best = max(best, size)
            return
        if size + candidates.bit_count() <= best:
            return
        while candidates:
            v = (candidates & -candidates).bit_length() - 1
            if size + candidates.bit_count() <= best:
                return
            candidates &= ~(1 << v)
            expand(candidates & masks[v], size + 1)

    expand((1 << n) - 1, 0)
    return best


def has_disjoint_biclique(d: Drawing, t: int) -> Tuple[bool, Optional[Tuple[list, list]]]:
    """Is there a pair of disjoint edge sets S, T with |S| = |T| = t and every
    edge of S disjoint from every edge of T?  Returns witness sets when true."""
    if t < 1:
        raise ValueError("t must be >= 1")
    if d.m > EXACT_EDGE_CAP:
        raise TooLarge(f"exact mode handles at most {EXACT_EDGE_CAP} edges, got {d.m}")
    ids, masks = _disjoint_masks(d)
    n = len(ids)
    if n < 2 * t:
        return False, None

    def unpack(mask: int) -> list:
        return [ids[i] for i in range(n) if mask >> i & 1]

    def search(start: int, chosen: int, common: int, k: int):
        if k == t:
            avail = common & ~chosen  # T must be disjoint from S as a set
            if avail.bit_count() >= t:
                partner = 0
                for _ in range(t):
                    bit = avail & -avail
                    partner |= bit
                    avail &= ~bit
                return chosen, partner
            return None
        for v in range(start, n):
            new_chosen = chosen | (1 << v)
            new_common = common & masks[v] if k else masks[v]
            if (new_common & ~new_chosen).bit_count() < t:
                continue
            got = search(v + 1, new_chosen, new_common, k + 1)
            if got:
                return got
        return None

    found = search(0, 0, 0, 0)
    if not found:
        return False, None
    s_mask, t_mask = found
    return True, (unpack(s_mask), unpack(t_mask))


def bound_value(
    formula: str,
    n: int,
    t: int,
    k: BoundConstants = BoundConstants(),
    degrees: Optional[Sequence[int]] = None,
    odd_crossings: int = 0,
) -> float:
    """Evaluate one of the closed-form bounds at the given constants.

    Logs are base 2.  `degrees` is required for the bisection-style formulas
    (the sqrt(sum d_i^2) term); `odd_crossings` feeds the odd-crossing term of
    the bisection bound.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if t < 1:
        raise ValueError("t must be >= 1")
    log_n = math.log2(n)
    if formula == KST:
        return float(k.c1) * n ** (2 - 1 / t)
    if formula == PT_LOG:
        return float(k.c3) * n * log_n ** (4 * t - 8)
    if formula == COR_EQ2:
        return float(k.c5) * n ** (1 - 1 / (4 * t))
    if formula in (BISECT, LEM_EQ1):
        if degrees is None:
            raise MissingDegrees(f"formula {formula} needs the degree sequence")
        deg2 = sum(d * d for d in degrees)
        if formula == BISECT:
            return float(k.c2) * log_n * math.sqrt(odd_crossings + deg2)
        return float(k.c4) * n ** (1 - 1 / (2 * t)) * log_n ** (8 * t - 3) + float(
            k.c4
        ) * log_n * math.sqrt(deg2)
    raise ValueError(f"unknown formula {formula!r}")


@dataclass
class DensityReport:
    n: int
    m: int
    ratio: float
    max_disjoint: Optional[int]
    biclique_t: Optional[int]
    exact_skipped: bool
    bounds: Dict[str, float] = field(default_factory=dict)


def density_report(d: Drawing, t: int, k: BoundConstants = BoundConstants()) -> DensityReport:
    """Measured disjointness quantities plus every bound formula's value.

    The exhaustive sub-operations are skipped (with a flag) when the drawing
    exceeds the exact-mode cap.  Bound values are reported, never asserted:
    the constants are unknown.
    """
    n, m = d.n, d.m
    ratio = m / n if n else float("nan")
    max_disjoint = None
    biclique_t = None
    skipped = m > EXACT_EDGE_CAP
    if not skipped:
        max_disjoint = max_pairwise_disjoint(d) if m else 0
        biclique_t = 0
        while m >= 2 * (biclique_t + 1):
            ok, _ = has_disjoint_biclique(d, biclique_t + 1)
            if not ok:
                break
            biclique_t += 1
    degrees = list(d.degrees().values())
    from .bisection import odd_crossing_pairs

    oddcr = odd_crossing_pairs(d)
    bounds = {}
    if n >= 2:
        bounds[KST] = bound_value(KST, n, t, k)
        bounds[PT_LOG] = bound_value(PT_LOG, n, t, k)
        bounds[COR_EQ2] = bound_value(COR_EQ2, n, t, k)
        bounds[BISECT] = bound_value(BISECT, n, t, k, degrees=degrees, odd_crossings=oddcr)
        bounds[LEM_EQ1] = bound_value(LEM_EQ1, n, t, k, degrees=degrees)
    return DensityReport(n, m, ratio, max_disjoint, biclique_t, skipped, bounds)
