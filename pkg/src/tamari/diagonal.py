"""Faces of the cellular diagonal, their counts, and vertex decompositions.

A face of the diagonal on n+1 leaves is a pair (f, g) of Schröder trees
with max_tree(f) <= min_tree(g) in the Tamari order.  Faces are generated
through interval fibers — for every interval (s, t), contract any subset
of descent edges of s to get f and any subset of ascent edges of t to get
g — never by filtering all pairs of Schröder trees, which is quadratically
infeasible past small n.

Internality is computed two independent ways that the tests compare:

  * the per-interval edge classification (free/tied/constrained) feeding
    the closed summation formula, and
  * the direct criterion: (f, g) touches the boundary iff f and g share a
    common two-node contraction.  The direct route tests only facet-level
    contractions: a face lies in a proper face of the associahedron iff it
    lies in a facet, and facets are exactly the two-node Schröder trees.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator

from .lattice import BudgetExceeded, StatTable, interval_histogram, \
    intervals, resolve_budget
from .trees import (
    SchroederTree,
    ascent_spans,
    contract_spans,
    descent_spans,
    max_tree,
    min_tree,
    serialize,
    two_node_contractions,
)


@dataclass(frozen=True)
class DiagonalFace:
    """A face (f, g) of the diagonal; dim = dim(f) + dim(g)."""

    f: SchroederTree
    g: SchroederTree
    dim: int


@dataclass(frozen=True)
class EdgeClassification:
    """Counts of edge roles for one interval (s, t).

    The relevant edges are the descent edges of s and the ascent edges of
    t.  An s-descent is tied if its leaf span is also a descent span of t,
    constrained if it is an ascent span of t, free otherwise; symmetrically
    for t-ascents against s.  Constrained edges come in matched pairs and
    are counted once per pair, so free + tied + 2·constrained equals
    des(s) + asc(t).
    """

    free: int
    tied: int
    constrained: int


# ===================================================================
# face generation through interval fibers
# ===================================================================

def _face_budget(n: int, budget) -> int:
    bud = resolve_budget(budget)
    histogram = interval_histogram(n, bud)
    total = sum(count << k for k, count in enumerate(histogram))
    if total > bud:
        raise BudgetExceeded(f"diagonal_faces({n})", total, bud)
    return bud


def diagonal_faces(n: int, budget=None) -> Iterator[DiagonalFace]:
    """Every face of the diagonal exactly once.

    The fiber over an interval (s, t) has size 2^(des(s)+asc(t)).
    """
    if n < 1:
        raise ValueError("diagonal_faces() requires n >= 1")
    bud = _face_budget(n, budget)
    for s, t, des_s, asc_t in intervals(n, bud):
        down_spans = sorted(descent_spans(s))
        up_spans = sorted(ascent_spans(t))
        for d_mask in range(1 << des_s):
            chosen_d = frozenset(span for b, span in enumerate(down_spans)
                                 if d_mask >> b & 1)
            f = contract_spans(s, chosen_d) if chosen_d else s
            f_dim = len(chosen_d)
            for a_mask in range(1 << asc_t):
                chosen_a = frozenset(span for b, span in enumerate(up_spans)
                                     if a_mask >> b & 1)
                g = contract_spans(t, chosen_a) if chosen_a else t
                yield DiagonalFace(f, g, f_dim + len(chosen_a))


def diagonal_fvector(n: int, budget=None) -> list:
    """Face counts by dimension: entry k = sum over intervals of C(k', k)
    with k' = des(s)+asc(t) — the binomial transform of the interval
    histogram."""
    if n < 1:
        raise ValueError("diagonal_fvector() requires n >= 1")
    histogram = interval_histogram(n, budget)
    return [sum(count * comb(j, k) for j, count in enumerate(histogram))
            for k in range(n)]


def diagonal_fvector_direct(n: int, budget=None) -> list:
    """Face counts by dimension, tallied face by face (slow cross-check)."""
    out = [0] * n
    for face in diagonal_faces(n, budget):
        out[face.dim] += 1
    return out


def diagonal_fvector_by_dims(n: int, budget=None) -> StatTable:
    """Faces counted by the pair (dim f, dim g)."""
    if n < 1:
        raise ValueError("diagonal_fvector_by_dims() requires n >= 1")
    pair_counts: dict = {}
    for _, _, des_s, asc_t in intervals(n, budget):
        key = (des_s, asc_t)
        pair_counts[key] = pair_counts.get(key, 0) + 1
    cells: dict = {}
    for (d, a), count in pair_counts.items():
        for p in range(d + 1):
            c_p = comb(d, p)
            for q in range(a + 1):
                key = (p, q)
                cells[key] = cells.get(key, 0) + count * c_p * comb(a, q)
    return StatTable(n, ("dim_f", "dim_g"), cells)


# ===================================================================
# internal faces
# ===================================================================

def classify_edges(s, t) -> EdgeClassification:
    """Free/tied/constrained edge counts for an interval (s, t)."""
    s_descents = descent_spans(s)
    s_ascents = ascent_spans(s)
    t_descents = descent_spans(t)
    t_ascents = ascent_spans(t)
    if s_ascents & t_descents:
        raise ValueError("not an interval: an ascent span of the lower tree "
                         "reappears as a descent span of the upper tree")
    constrained_pairs = s_descents & t_ascents
    tied = len(s_descents & t_descents) + len(t_ascents & s_ascents)
    constrained = len(constrained_pairs)
    free = (len(s_descents) + len(t_ascents) - tied - 2 * constrained)
    return EdgeClassification(free=free, tied=tied, constrained=constrained)


def internal_fvector(n: int, budget=None) -> list:
    """Internal face counts by dimension, by the classification formula:

    the interval (s, t) contributes sum_i 2^i C(cons, i) C(free, j) to
    dimension tied + 2·cons - i + j.
    """
    if n < 1:
        raise ValueError("internal_fvector() requires n >= 1")
    out = [0] * n
    for s, t, _, _ in intervals(n, budget):
        classes = classify_edges(s, t)
        base = classes.tied + 2 * classes.constrained
        for i in range(classes.constrained + 1):
            weight = (1 << i) * comb(classes.constrained, i)
            for j in range(classes.free + 1):
                out[base - i + j] += weight * comb(classes.free, j)
    return out


def is_internal_face(f: SchroederTree, g: SchroederTree) -> bool:
    """Direct criterion: no common two-node contraction."""
    return two_node_contractions(f).isdisjoint(two_node_contractions(g))


def internal_fvector_direct(n: int, budget=None) -> list:
    """Internal face counts by dimension, tested face by face."""
    out = [0] * n
    for face in diagonal_faces(n, budget):
        if is_internal_face(face.f, face.g):
            out[face.dim] += 1
    return out


# ===================================================================
# vertex-assignment decompositions
# ===================================================================

DECOMPOSITION_MODES = ("min-min", "max-min", "min-max", "max-max")


def _assign_vertices(face: DiagonalFace, mode: str) -> tuple:
    f_vertex = min_tree(face.f) if mode.startswith("min") else max_tree(face.f)
    g_vertex = min_tree(face.g) if mode.endswith("min") else max_tree(face.g)
    return (f_vertex, g_vertex)


def _is_boolean_fiber(dims: list) -> bool:
    """True iff the dimension multiset is d0, d0+1, ... with C(r, i) counts."""
    base = min(dims)
    rank = max(dims) - base
    expected = sorted(base + i for i in range(rank + 1)
                      for _ in range(comb(rank, i)))
    return sorted(dims) == expected


def decomposition_report(n: int, mode: str, budget=None) -> dict:
    """Group faces by their assigned vertex pair and analyze each fiber.

    For the three modes min-min, max-min, max-max every fiber is boolean:
    its dimension-generating polynomial is x^d0 (1+x)^r.  The min-max mode
    has non-boolean fibers (reported, not asserted against).
    """
    if mode not in DECOMPOSITION_MODES:
        raise ValueError(f"unknown mode {mode!r}; "
                         f"expected one of {DECOMPOSITION_MODES}")
    fibers: dict = {}
    fvector = [0] * n
    for face in diagonal_faces(n, budget):
        key = tuple(serialize(v) for v in _assign_vertices(face, mode))
        fibers.setdefault(key, []).append(face.dim)
        fvector[face.dim] += 1
    non_boolean = []
    for key in sorted(fibers):
        dims = fibers[key]
        if not _is_boolean_fiber(dims):
            histogram: dict = {}
            for d in dims:
                histogram[d] = histogram.get(d, 0) + 1
            non_boolean.append({"vertices": list(key),
                                "dims": {str(d): histogram[d]
                                         for d in sorted(histogram)}})
    return {
        "n": n,
        "mode": mode,
        "fvector": fvector,
        "fiber_count": len(fibers),
        "all_boolean": not non_boolean,
        "non_boolean_fibers": non_boolean,
    }


def face_records(n: int, budget=None) -> Iterator[dict]:
    """JSON-ready face records with per-mode vertex assignments."""
    for face in diagonal_faces(n, budget):
        record = {
            "f": serialize(face.f),
            "g": serialize(face.g),
            "dim": face.dim,
            "internal": is_internal_face(face.f, face.g),
        }
        for mode in DECOMPOSITION_MODES:
            record[mode.replace("-", "_")] = [
                serialize(v) for v in _assign_vertices(face, mode)]
        yield record
