"""Exhaustive generators for trees, Tamari intervals, and their statistics.

The interval engine enumerates, for every binary tree t, the set of trees
below t in the Tamari order.  It processes trees in a linear extension of
the order (sorted by the sum of the bracket vector, which strictly
decreases along covers) and accumulates down-sets as bitmasks:

    down(t)  =  {t}  ∪  union of down(c) over the trees c covered by t.

This touches every interval once through integer bit operations, which is
what makes the million-interval sizes reachable; the independent
rotation-BFS route (rotation_down_set) is kept as the ground truth the
bitmask engine is tested against.

Every exhaustive operation takes an element/interval budget and raises
BudgetExceeded rather than running unbounded.  The default budget comes
from the TAMARI_BUDGET environment variable (fallback 2_000_000).
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping

from .formulas import catalan
from .trees import (
    BinaryTree,
    bracket_vector,
    _des,
    ell,
    rotations_down,
    serialize,
)

FALLBACK_BUDGET = 2_000_000
BUDGET_ENV_VAR = "TAMARI_BUDGET"


class BudgetExceeded(RuntimeError):
    """An enumeration would overrun its element/interval budget."""

    def __init__(self, what: str, required, budget: int):
        super().__init__(
            f"{what} needs {required} > budget {budget}"
            f" (raise the budget argument or {BUDGET_ENV_VAR})")
        self.what = what
        self.required = required
        self.budget = budget


def resolve_budget(budget=None) -> int:
    """Explicit argument, else TAMARI_BUDGET, else the built-in fallback."""
    if budget is None:
        budget = int(os.environ.get(BUDGET_ENV_VAR, FALLBACK_BUDGET))
    budget = int(budget)
    if budget <= 0:
        raise ValueError("budget must be positive")
    return budget


# ===================================================================
# generators
# ===================================================================

def all_trees(n: int, budget=None) -> list:
    """All binary trees with n nodes, deterministic order, Catalan(n) many."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    bud = resolve_budget(budget)
    count = catalan(n)
    if count > bud:
        raise BudgetExceeded(f"all_trees({n})", count, bud)
    by_size: list = [[None]]
    for m in range(1, n + 1):
        by_size.append([(left, right)
                        for i in range(m)
                        for left in by_size[i]
                        for right in by_size[m - 1 - i]])
    return by_size[n]


def schroeder_count(nleaves: int) -> int:
    """Number of Schröder trees with the given number of leaves."""
    if nleaves < 1:
        raise ValueError("a tree has at least one leaf")
    counts = [0, 1]
    for size in range(2, nleaves + 1):
        # forests[j] = ordered sequences of >= 1 trees with j leaves total,
        # restricted to trees of size < `size` (enough: children are smaller)
        forests = [0] * (size + 1)
        forests[0] = 1
        for j in range(1, size + 1):
            forests[j] = sum(counts[i] * forests[j - i]
                             for i in range(1, min(j, size - 1) + 1))
        # parts are capped below `size`, so every counted forest has >= 2
        # trees and concatenating them under a new root is a bijection
        counts.append(forests[size])
    return counts[nleaves]


def all_schroeder_trees(nleaves: int, budget=None) -> list:
    """All Schröder trees with the given number of leaves."""
    bud = resolve_budget(budget)
    count = schroeder_count(nleaves)
    if count > bud:
        raise BudgetExceeded(f"all_schroeder_trees({nleaves})", count, bud)
    by_leaves: list = [None, [None]]
    for size in range(2, nleaves + 1):
        # ordered forests with `size` leaves, every part of size < `size`
        forests: list = [[()]] + [[] for _ in range(size)]
        for j in range(1, size + 1):
            for i in range(1, min(j, size - 1) + 1):
                for tree in by_leaves[i]:
                    for rest in forests[j - i]:
                        forests[j].append((tree,) + rest)
        by_leaves.append([f for f in forests[size] if len(f) >= 2])
    return by_leaves[nleaves]


def rotation_down_set(t: BinaryTree) -> frozenset:
    """All trees below t, by BFS over left rotations (oracle route)."""
    seen = {t}
    stack = [t]
    while stack:
        x = stack.pop()
        for y in rotations_down(x):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return frozenset(seen)


# ===================================================================
# interval engine (bitmask down-set accumulation)
# ===================================================================

@lru_cache(maxsize=4)
def _engine(n: int, budget: int):
    """(trees in linear-extension order, per-tree statistics, down masks)."""
    trees = all_trees(n, budget)
    trees.sort(key=lambda t: (sum(bracket_vector(t)), serialize(t)))
    index = {t: i for i, t in enumerate(trees)}
    dlist = tuple(_des(t) for t in trees)
    elist = tuple(ell(t) for t in trees)
    down: list = []
    total = 0
    for i, t in enumerate(trees):
        mask = 1 << i
        for c in rotations_down(t):
            mask |= down[index[c]]
        down.append(mask)
        total += mask.bit_count()
        if total > budget:
            raise BudgetExceeded(f"intervals({n})", f"more than {total}",
                                 budget)
    return tuple(trees), dlist, elist, tuple(down), total


def intervals(n: int, budget=None) -> Iterator[tuple]:
    """Every Tamari interval once, as (s, t, des(s), asc(t))."""
    if n < 1:
        raise ValueError("intervals() requires n >= 1")
    trees, dlist, _, down, _ = _engine(n, resolve_budget(budget))
    for ti, t in enumerate(trees):
        asc_t = n - 1 - dlist[ti]
        mask = down[ti]
        while mask:
            low = mask & -mask
            si = low.bit_length() - 1
            mask ^= low
            yield (trees[si], t, dlist[si], asc_t)


def interval_count(n: int, budget=None) -> int:
    if n < 1:
        raise ValueError("interval_count() requires n >= 1")
    return _engine(n, resolve_budget(budget))[4]


def interval_histogram(n: int, budget=None) -> list:
    """Number of intervals with des(s) + asc(t) = k, for k = 0..n-1."""
    if n < 1:
        raise ValueError("interval_histogram() requires n >= 1")
    trees, dlist, _, down, _ = _engine(n, resolve_budget(budget))
    des_mask = [0] * n
    for i in range(len(trees)):
        des_mask[dlist[i]] |= 1 << i
    hist = [0] * n
    for ti in range(len(trees)):
        asc_t = n - 1 - dlist[ti]
        for d in range(n - asc_t):
            c = (down[ti] & des_mask[d]).bit_count()
            if c:
                hist[d + asc_t] += c
    return hist


# ===================================================================
# statistics tables
# ===================================================================

@dataclass(frozen=True)
class StatTable:
    """Counts indexed by a tuple of named statistics."""

    n: int
    axes: tuple
    cells: Mapping

    @property
    def total(self) -> int:
        return sum(self.cells.values())

    def value(self, *key) -> int:
        return self.cells.get(tuple(key), 0)

    def axis_range(self, axis: int) -> range:
        """0..max observed value of the given axis, inclusive."""
        if not self.cells:
            return range(0)
        return range(max(key[axis] for key in self.cells) + 1)

    def marginal(self, axis: int) -> dict:
        out: dict = {}
        for key, count in self.cells.items():
            out[key[axis]] = out.get(key[axis], 0) + count
        return out


def interval_stats_refined(n: int, budget=None) -> tuple:
    """Two refinements of the interval count.

    Returns (by_ell, by_des_asc):
      * by_ell: StatTable over (ell(s), des(s) + asc(t)),
      * by_des_asc: StatTable over (des(s), asc(t)).
    """
    if n < 1:
        raise ValueError("interval_stats_refined() requires n >= 1")
    trees, dlist, elist, down, _ = _engine(n, resolve_budget(budget))
    class_mask: dict = {}
    des_mask = [0] * n
    for i in range(len(trees)):
        key = (elist[i], dlist[i])
        class_mask[key] = class_mask.get(key, 0) | (1 << i)
        des_mask[dlist[i]] |= 1 << i
    by_ell: dict = {}
    by_pq: dict = {}
    for ti in range(len(trees)):
        asc_t = n - 1 - dlist[ti]
        for (i, d), mask in class_mask.items():
            c = (down[ti] & mask).bit_count()
            if c:
                key = (i, d + asc_t)
                by_ell[key] = by_ell.get(key, 0) + c
        for d in range(n - asc_t):
            c = (down[ti] & des_mask[d]).bit_count()
            if c:
                key = (d, asc_t)
                by_pq[key] = by_pq.get(key, 0) + c
    return (StatTable(n, ("ell_lower", "cover_statistic"), by_ell),
            StatTable(n, ("des_lower", "asc_upper"), by_pq))
