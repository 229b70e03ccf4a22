"""Dyck paths, the tree bijection, and m-ballot lattices.

Claims implemented here, all cross-checked by the test suite:

  * the recursive bijection trees -> Dyck words sends the tree statistics
    (asc, des, ell) to (valleys, double falls, interior contacts);
  * it transports Tamari covers to the path cover move: an EN factor is
    swapped with the shortest following balanced factor;
  * the same cover move with up-steps of slope m defines a lattice on
    m-ballot words whose m = 1 case is the Tamari lattice again.

Paths are plain strings: 'U'/'D' for Dyck words, 'N'/'E' for m-ballot
words (an N gains m units of height, an E loses one).
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .formulas import fuss_catalan
from .lattice import BudgetExceeded, StatTable, resolve_budget
from .trees import BinaryTree


# ===================================================================
# Dyck words and the tree bijection
# ===================================================================

def tree_to_dyck(t: BinaryTree) -> str:
    """Recursive bijection: node(l, r) -> word(l) U word(r) D."""
    if t is None:
        return ""
    return tree_to_dyck(t[0]) + "U" + tree_to_dyck(t[1]) + "D"


def _check_dyck(word: str) -> None:
    height = 0
    for step in word:
        if step == "U":
            height += 1
        elif step == "D":
            height -= 1
            if height < 0:
                raise ValueError("not a Dyck word: negative height")
        else:
            raise ValueError(f"not a Dyck word: bad letter {step!r}")
    if height != 0:
        raise ValueError("not a Dyck word: unbalanced")


def dyck_to_tree(word: str) -> BinaryTree:
    """Inverse bijection; rejects words that are not Dyck words."""
    _check_dyck(word)

    def build(w: str) -> BinaryTree:
        if not w:
            return None
        # w = A U B D with A, B Dyck: the final D closes the root U,
        # found by scanning backwards for the first height deficit
        inner = w[:-1]
        height = 0
        for i in range(len(inner) - 1, -1, -1):
            height += 1 if inner[i] == "D" else -1
            if height < 0:
                return (build(inner[:i]), build(inner[i + 1:]))
        raise ValueError("not a Dyck word")

    return build(word)


def valleys(word: str) -> int:
    """Positions where a D step is followed by a U (matches asc)."""
    return sum(1 for a, b in zip(word, word[1:]) if a == "D" and b == "U")


def double_falls(word: str) -> int:
    """Positions where a D step is followed by a D (matches des).

    Counted pairwise, not with str.count: occurrences overlap inside
    runs (DDD holds two double falls).
    """
    return sum(1 for a, b in zip(word, word[1:]) if a == "D" and b == "D")


def contacts(word: str) -> int:
    """Returns to height zero strictly inside the word (matches ell)."""
    height = 0
    hits = 0
    for step in word[:-1]:
        height += 1 if step == "U" else -1
        if height == 0:
            hits += 1
    return hits


# ===================================================================
# m-ballot words and their cover move
# ===================================================================

def _ballot_slope(word: str) -> int:
    """Validate an m-ballot word and return its slope m."""
    if not word:
        raise ValueError("empty word")
    ups = word.count("N")
    downs = word.count("E")
    if ups + downs != len(word):
        raise ValueError("an m-ballot word uses only the letters N and E")
    if ups == 0 or downs % ups:
        raise ValueError("letter counts do not fit any slope")
    m = downs // ups
    height = 0
    for step in word:
        height += m if step == "N" else -1
        if height < 0:
            raise ValueError("not an m-ballot word: negative height")
    return m


def m_tamari_elements(m: int, n: int, budget=None) -> list:
    """All ballot words with n up-steps of slope m, deterministic order."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    bud = resolve_budget(budget)
    count = fuss_catalan(m, n)
    if count > bud:
        raise BudgetExceeded(f"m_tamari_elements({m}, {n})", count, bud)
    words: list = []

    def extend(prefix: str, ups: int, downs: int, height: int) -> None:
        if not ups and not downs:
            words.append(prefix)
            return
        if ups:
            extend(prefix + "N", ups - 1, downs, height + m)
        if downs and height:
            extend(prefix + "E", ups, downs - 1, height - 1)

    extend("", n, m * n, 0)
    return words


def m_tamari_covers(word: str) -> frozenset:
    """Elements covering the given ballot word (slope read off the word).

    Each EN factor yields one cover: the E is swapped with the shortest
    nonempty factor after it whose total height change is zero.
    """
    m = _ballot_slope(word)
    out = set()
    for i in range(len(word) - 1):
        if word[i] == "E" and word[i + 1] == "N":
            height = 0
            for j in range(i + 1, len(word)):
                height += m if word[j] == "N" else -1
                if height == 0:
                    out.add(word[:i] + word[i + 1:j + 1] + "E" + word[j + 1:])
                    break
    return frozenset(out)


# ===================================================================
# interval engine over ballot words
# ===================================================================

@lru_cache(maxsize=8)
def _m_engine(m: int, n: int, budget: int):
    words = m_tamari_elements(m, n, budget)
    # sum of E positions strictly increases along covers: a linear extension
    words.sort(key=lambda w: (sum(i for i, c in enumerate(w) if c == "E"), w))
    index = {w: i for i, w in enumerate(words)}
    up_degree = [0] * len(words)
    down_lists: list = [[] for _ in words]
    for i, w in enumerate(words):
        above = m_tamari_covers(w)
        up_degree[i] = len(above)
        for y in above:
            down_lists[index[y]].append(i)
    down_masks: list = []
    total = 0
    for i in range(len(words)):
        mask = 1 << i
        for j in down_lists[i]:
            mask |= down_masks[j]
        down_masks.append(mask)
        total += mask.bit_count()
        if total > budget:
            raise BudgetExceeded(f"m_tamari intervals({m}, {n})",
                                 f"more than {total}", budget)
    down_degree = tuple(len(lst) for lst in down_lists)
    return tuple(words), tuple(up_degree), down_degree, tuple(down_masks), total


def m_tamari_interval_count(m: int, n: int, budget=None) -> int:
    return _m_engine(m, n, resolve_budget(budget))[4]


def m_tamari_intervals(m: int, n: int, budget=None) -> Iterator[tuple]:
    """Every interval once, as (lower, upper) ballot words."""
    words, _, _, down_masks, _ = _m_engine(m, n, resolve_budget(budget))
    for ti, upper in enumerate(words):
        mask = down_masks[ti]
        while mask:
            low = mask & -mask
            mask ^= low
            yield (words[low.bit_length() - 1], upper)


def m_tamari_interval_stats(m: int, n: int, budget=None) -> StatTable:
    """Intervals counted by (covers below the lower) + (covers above the upper).

    At slope 1 this is the des(s) + asc(t) statistic on tree intervals.
    """
    words, up_degree, down_degree, down_masks, _ = _m_engine(
        m, n, resolve_budget(budget))
    degree_mask: dict = {}
    for i in range(len(words)):
        d = down_degree[i]
        degree_mask[d] = degree_mask.get(d, 0) | (1 << i)
    cells: dict = {}
    for ti in range(len(words)):
        for d, mask in degree_mask.items():
            c = (down_masks[ti] & mask).bit_count()
            if c:
                key = (d + up_degree[ti],)
                cells[key] = cells.get(key, 0) + c
    return StatTable(n, ("cover_statistic",), cells)
