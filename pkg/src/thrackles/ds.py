"""Davenport-Schinzel sequence tooling: validity and brute-force lambda_s(n).

A sequence of order s has no two equal consecutive symbols and no two-symbol
alternating subsequence (a, b, a, ..., b, a) of length s + 2.  The maximum
length over an alphabet of n symbols is lambda_s(n); the brute-forcer finds
it exactly for tiny n, s by a memoized search over the pair-alternation
state, which is the only part of the past that constrains the future.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

BRUTE_ALPHABET_CAP = 4
BRUTE_ORDER_CAP = 4

LAMBDA3_SLACK = 1e-9


class TooLarge(ValueError):
    pass


@dataclass(frozen=True)
class DSSequence:
    symbols: Tuple
    order: int

    def is_valid(self) -> bool:
        return is_ds_sequence(self.symbols, self.order)


def _longest_alternation(seq: Sequence, a, b) -> int:
    """Length of the longest subsequence alternating between a and b
    (= number of runs in the restriction of seq to {a, b})."""
    length = 0
    last = None
    for x in seq:
        if x != a and x != b:
            continue
        if x != last:
            length += 1
            last = x
    return length


def is_ds_sequence(symbols: Sequence, s: int) -> bool:
    """Check the order-s Davenport-Schinzel conditions."""
    if s < 1:
        raise ValueError("order must be >= 1")
    for i in range(len(symbols) - 1):
        if symbols[i] == symbols[i + 1]:
            return False
    alphabet = sorted(set(symbols), key=repr)
    for i, a in enumerate(alphabet):
        for b in alphabet[i + 1 :]:
            if _longest_alternation(symbols, a, b) >= s + 2:
                return False
    return True


def lambda_brute(n: int, s: int) -> int:
    """Exact lambda_s(n) for n <= 4, s <= 4.

    State per unordered symbol pair: (alternation length so far, which symbol
    ended it).  Appending symbol c bumps every pair (c, x) whose alternation
    did not already end with c; the sequence dies when a pair reaches s + 2.
    The longest continuation depends only on (last symbol, pair states), so
    memoization makes the search exact and fast.
    """
    if n < 1 or s < 1:
        raise ValueError("need n >= 1 and s >= 1")
    if n > BRUTE_ALPHABET_CAP or s > BRUTE_ORDER_CAP:
        raise TooLarge(f"brute force capped at n <= {BRUTE_ALPHABET_CAP}, s <= {BRUTE_ORDER_CAP}")
    if n == 1:
        return 1
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    pair_index = {p: k for k, p in enumerate(pairs)}
    limit = s + 1  # alternation length s+2 is forbidden

    @lru_cache(maxsize=None)
    def extend(last: int, states: Tuple) -> int:
        best = 0
        for c in range(n):
            if c == last:
                continue
            new_states = list(states)
            ok = True
            for x in range(n):
                if x == c:
                    continue
                k = pair_index[(min(c, x), max(c, x))]
                length, ender = new_states[k]
                if ender != c:
                    length += 1
                    if length > limit:
                        ok = False
                        break
                    new_states[k] = (length, c)
            if not ok:
                continue
            best = max(best, 1 + extend(c, tuple(new_states)))
        return best

    empty = tuple((0, -1) for _ in pairs)
    return extend(-1, empty)


def lambda3_upper(n: int) -> float:
    """Explicit upper bound 2n ln n + 3n for lambda_3(n), inflated by a tiny
    relative slack so integer counts can be compared with <= safely."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return (2 * n * math.log(n) + 3 * n) * (1 + LAMBDA3_SLACK)
