"""Binary trees, Schröder trees, the Tamari order, and tree statistics.

Trees are immutable nested tuples.  ``None`` is a leaf (empty subtree); a
binary node is a pair ``(left, right)``; a Schröder node is a tuple of at
least two children.  Binary trees are therefore exactly the Schröder trees
all of whose nodes have two children, and one serializer covers both.

Claims implemented here (each one is exercised by the test suite):

* des(t) + asc(t) = n - 1 for every binary tree with n nodes: every
  internal edge points either to a left child (ascent) or a right child
  (descent).
* tamari_leq is the Tamari order: the reflexive-transitive closure of the
  right-rotation relation.  It is computed via bracket vectors (node i
  maps to i + size of its right subtree, inorder labels) and agrees with
  breadth-first reachability in the rotation digraph.
* The canopy of a tree with n nodes is the word in {-,+}^(n-1) whose jth
  letter is '-' exactly when the jth node (inorder) has an empty right
  subtree.  It has asc(t) minus signs and des(t) plus signs, and is
  monotone along the Tamari order.
* Grafting at the leftmost leaf decomposes every Tamari interval (s, t)
  into ell(t) + 1 componentwise-comparable intervals whose upper trees
  have empty left branches.
* A Schröder tree f stands for a face of the associahedron of dimension
  leaves(f) - 1 - internal_nodes(f); min_tree/max_tree (left/right comb
  expansions) are the Tamari-minimal/maximal binary refinements of f.
* Contracting internal edges of a Schröder tree merges a child's children
  into its parent's child list; the faces strictly containing f correspond
  to its nonempty edge contractions, and the facet-level ones (exactly two
  internal nodes) are in bijection with the internal edges of f.
"""
from __future__ import annotations

from typing import Iterator, Optional

BinaryTree = Optional[tuple]
SchroederTree = Optional[tuple]

LEAF: BinaryTree = None
SINGLE_NODE: BinaryTree = (None, None)


# ===================================================================
# shape predicates and sizes
# ===================================================================

def is_binary_tree(t: BinaryTree) -> bool:
    """True iff t is None or a nested pair structure."""
    if t is None:
        return True
    return (isinstance(t, tuple) and len(t) == 2
            and is_binary_tree(t[0]) and is_binary_tree(t[1]))


def is_schroeder_tree(f: SchroederTree) -> bool:
    """True iff t is None or every node has at least two children."""
    if f is None:
        return True
    return (isinstance(f, tuple) and len(f) >= 2
            and all(is_schroeder_tree(c) for c in f))


def node_count(t: BinaryTree) -> int:
    """Number of internal nodes of a binary tree."""
    if t is None:
        return 0
    return 1 + node_count(t[0]) + node_count(t[1])


def leaf_count(f: SchroederTree) -> int:
    """Number of leaves (binary or Schröder)."""
    if f is None:
        return 1
    return sum(leaf_count(c) for c in f)


def internal_node_count(f: SchroederTree) -> int:
    if f is None:
        return 0
    return 1 + sum(internal_node_count(c) for c in f)


def dimension(f: SchroederTree) -> int:
    """Dimension of the associahedron face labeled by f.

    A Schröder tree with L leaves labels a face of the (L-2)-dimensional
    associahedron; its dimension is L - 1 - #internal nodes, so binary
    trees are vertices and the corolla is the full polytope.
    """
    if f is None:
        raise ValueError("empty tree has no face dimension")
    return leaf_count(f) - 1 - internal_node_count(f)


def left_comb(n: int) -> BinaryTree:
    """The Tamari minimum: every node is a left child."""
    t: BinaryTree = None
    for _ in range(n):
        t = (t, None)
    return t


def right_comb(n: int) -> BinaryTree:
    """The Tamari maximum: every node is a right child."""
    t: BinaryTree = None
    for _ in range(n):
        t = (None, t)
    return t


def corolla(n: int) -> SchroederTree:
    """The Schröder tree with a single internal node and n+1 leaves."""
    if n == 0:
        return None
    return tuple([None] * (n + 1))


# ===================================================================
# descent / ascent statistics and rotations
# ===================================================================

def des(t: BinaryTree) -> int:
    """Number of right-child edges = number of trees covered by t."""
    if t is None:
        raise ValueError("des() requires a nonempty binary tree")
    return _des(t)


def _des(t: BinaryTree) -> int:
    if t is None:
        return 0
    left, right = t
    return _des(left) + _des(right) + (right is not None)


def asc(t: BinaryTree) -> int:
    """Number of left-child edges = number of trees covering t."""
    if t is None:
        raise ValueError("asc() requires a nonempty binary tree")
    return _asc(t)


def _asc(t: BinaryTree) -> int:
    if t is None:
        return 0
    left, right = t
    return _asc(left) + _asc(right) + (left is not None)


def rotations_up(t: BinaryTree) -> frozenset:
    """Trees covering t: one right rotation (l, m)·r -> l·(m, r) per ascent."""
    out = []
    _rotations(t, True, out)
    return frozenset(out)


def rotations_down(t: BinaryTree) -> frozenset:
    """Trees covered by t: one left rotation l·(m, r) -> (l, m)·r per descent."""
    out = []
    _rotations(t, False, out)
    return frozenset(out)


def _rotations(t: BinaryTree, up: bool, out: list) -> None:
    if t is None:
        return
    left, right = t
    if up and left is not None:
        a, b = left
        out.append((a, (b, right)))
    if not up and right is not None:
        rl, rr = right
        out.append(((left, rl), rr))
    for sub in _rotations_sub(left, up):
        out.append((sub, right))
    for sub in _rotations_sub(right, up):
        out.append((left, sub))


def _rotations_sub(t: BinaryTree, up: bool) -> list:
    out: list = []
    _rotations(t, up, out)
    return out


# ===================================================================
# the Tamari order
# ===================================================================

def bracket_vector(t: BinaryTree) -> tuple:
    """Vector whose ith entry is i + size of the right subtree of node i.

    Nodes are labeled 1..n in inorder.  A tree s is below t in the Tamari
    order exactly when its vector is componentwise at most that of t.
    """
    out: list = []

    def walk(t: BinaryTree, base: int) -> int:
        if t is None:
            return 0
        left, right = t
        nl = walk(left, base)
        i = base + nl + 1
        nr = walk(right, i)
        out.append((i, i + nr))
        return nl + 1 + nr

    walk(t, 0)
    out.sort()
    return tuple(v for _, v in out)


def tamari_leq(s: BinaryTree, t: BinaryTree) -> bool:
    """True iff s <= t in the Tamari order (componentwise bracket vectors)."""
    vs, vt = bracket_vector(s), bracket_vector(t)
    if len(vs) != len(vt):
        raise ValueError(
            f"tree sizes differ: {len(vs)} vs {len(vt)} nodes")
    return all(a <= b for a, b in zip(vs, vt))


def rotation_reachable(s: BinaryTree, t: BinaryTree) -> bool:
    """Authoritative order test: BFS over right rotations from s up to t.

    Exponentially slower than tamari_leq; kept as the ground-truth oracle
    that pins the bracket-vector criterion.
    """
    if node_count(s) != node_count(t):
        raise ValueError("tree sizes differ")
    seen = {s}
    frontier = [s]
    while frontier:
        if t in seen:
            return True
        nxt = []
        for x in frontier:
            for y in rotations_up(x):
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return t in seen


# ===================================================================
# canopy
# ===================================================================

def canopy(t: BinaryTree) -> str:
    """Word in {-,+}^(n-1): jth letter '-' iff node j has empty right subtree.

    The trailing node (the last one in inorder, whose right subtree is
    always empty) carries no letter.
    """
    if t is None:
        raise ValueError("canopy() requires a nonempty binary tree")
    flags: list = []

    def walk(t: BinaryTree) -> None:
        if t is None:
            return
        left, right = t
        walk(left)
        flags.append(right is None)
        walk(right)

    walk(t)
    return "".join("-" if empty else "+" for empty in flags[:-1])


def canopy_leq(cs: str, ct: str) -> bool:
    """Componentwise comparison under the sign order - <= +."""
    if len(cs) != len(ct):
        raise ValueError("canopy lengths differ")
    return all(not (a == "+" and b == "-") for a, b in zip(cs, ct))


def agree(s: BinaryTree, t: BinaryTree) -> int:
    """Number of positions where the canopies of s and t coincide.

    For s <= t this equals des(s) + asc(t): agreements split into both-plus
    positions (the descents of s) and both-minus positions (the ascents
    of t).
    """
    cs, ct = canopy(s), canopy(t)
    if len(cs) != len(ct):
        raise ValueError("tree sizes differ")
    return sum(a == b for a, b in zip(cs, ct))


# ===================================================================
# left branch, grafting, and interval decomposition
# ===================================================================

def ell(t: BinaryTree) -> int:
    """Number of edges on the path from the root to the leftmost leaf."""
    if t is None:
        raise ValueError("ell() requires a nonempty binary tree")
    k = 0
    while t[0] is not None:
        t = t[0]
        k += 1
    return k


def graft_left(s: BinaryTree, s2: BinaryTree) -> BinaryTree:
    """Graft the root of s onto the leftmost leaf of s2."""
    if s is None or s2 is None:
        raise ValueError("graft_left() requires nonempty operands")
    return _graft_left(s, s2)


def _graft_left(s: BinaryTree, s2: BinaryTree) -> BinaryTree:
    if s2 is None:
        return s
    left, right = s2
    return (_graft_left(s, left), right)


def graft_right(s: BinaryTree, s2: BinaryTree) -> BinaryTree:
    """Graft the root of s onto the rightmost leaf of s2."""
    if s is None or s2 is None:
        raise ValueError("graft_right() requires nonempty operands")
    return _graft_right(s, s2)


def _graft_right(s: BinaryTree, s2: BinaryTree) -> BinaryTree:
    if s2 is None:
        return s
    left, right = s2
    return (left, _graft_right(s, right))


def left_branch_pieces(t: BinaryTree) -> list:
    """Cut every edge of the left branch; pieces bottom-up.

    Each piece has an empty left subtree, and grafting them back in order
    (piece 0 into piece 1 into ...) reconstructs t.  The list has
    ell(t) + 1 entries.
    """
    if t is None:
        raise ValueError("left_branch_pieces() requires a nonempty tree")
    pieces = []
    while t is not None:
        left, right = t
        pieces.append((None, right))
        t = left
    pieces.reverse()
    return pieces


def decompose_interval(s: BinaryTree, t: BinaryTree) -> list:
    """Split a Tamari interval s <= t into its maximal grafting components.

    Returns pairs (s_i, t_i), i = 0..ell(t), bottom piece first, where the
    t_i are the left-branch pieces of t and each s_i regroups consecutive
    left-branch pieces of s of total size n(t_i).  Each pair is itself a
    Tamari interval, and ell(t_i) = 0 for all i.
    """
    if not tamari_leq(s, t):
        raise ValueError("not a Tamari interval: s is not below t")
    t_pieces = left_branch_pieces(t)
    s_pieces = left_branch_pieces(s)
    components = []
    idx = 0
    for t_piece in t_pieces:
        want = node_count(t_piece)
        acc: BinaryTree = None
        got = 0
        while got < want and idx < len(s_pieces):
            piece = s_pieces[idx]
            acc = piece if acc is None else _graft_left(acc, piece)
            got += node_count(piece)
            idx += 1
        if got != want:
            raise ValueError("interval does not decompose; order test broken")
        components.append((acc, t_piece))
    if idx != len(s_pieces):
        raise ValueError("interval does not decompose; order test broken")
    return components


# ===================================================================
# Schröder trees as faces: comb refinements and contractions
# ===================================================================

def min_tree(f: SchroederTree) -> BinaryTree:
    """Tamari-minimal binary refinement: left-comb each node's children."""
    if f is None:
        return None
    kids = [min_tree(c) for c in f]
    acc = kids[0]
    for c in kids[1:]:
        acc = (acc, c)
    return acc


def max_tree(f: SchroederTree) -> BinaryTree:
    """Tamari-maximal binary refinement: right-comb each node's children."""
    if f is None:
        return None
    kids = [max_tree(c) for c in f]
    acc = kids[-1]
    for c in reversed(kids[:-1]):
        acc = (c, acc)
    return acc


def edge_spans(t: BinaryTree) -> list:
    """[(span, kind)] per internal edge of a binary tree, inorder of child.

    The span of an edge is the leaf interval (first, last) covered by the
    child subtree, with leaves numbered 0..n from the left.  kind is '+'
    for a right child (descent edge) and '-' for a left child (ascent
    edge).  Spans identify edges unambiguously: contracting every edge but
    one yields the two-internal-node Schröder tree determined by the span.
    """
    out: list = []

    def walk(t: BinaryTree, a: int) -> int:
        if t is None:
            return 1
        left, right = t
        lw = walk(left, a)
        rw = walk(right, a + lw)
        if left is not None:
            out.append(((a, a + lw - 1), "-"))
        if right is not None:
            out.append(((a + lw, a + lw + rw - 1), "+"))
        return lw + rw

    walk(t, 0)
    return out


def descent_spans(t: BinaryTree) -> frozenset:
    return frozenset(sp for sp, kind in edge_spans(t) if kind == "+")


def ascent_spans(t: BinaryTree) -> frozenset:
    return frozenset(sp for sp, kind in edge_spans(t) if kind == "-")


def contract_spans(f: SchroederTree, spans) -> SchroederTree:
    """Contract the internal edges of f whose child spans lie in `spans`.

    Contracting an edge merges the child's children into the parent's
    child list in place of the child.  Spans are leaf intervals as in
    edge_spans; edges not listed are kept.
    """
    spans = frozenset(spans)

    def walk(f: SchroederTree, a: int):
        if f is None:
            return None, 1
        kids: list = []
        width = 0
        for child in f:
            sub, w = walk(child, a + width)
            if sub is None:
                kids.append(None)
            elif (a + width, a + width + w - 1) in spans:
                kids.extend(sub)
            else:
                kids.append(sub)
            width += w
        return tuple(kids), width

    node, _ = walk(f, 0)
    return node


def internal_edge_spans(f: SchroederTree) -> frozenset:
    """Leaf spans of the non-root internal nodes of a Schröder tree."""
    spans: list = []

    def walk(f: SchroederTree, a: int, is_root: bool) -> int:
        if f is None:
            return 1
        width = 0
        for child in f:
            width += walk(child, a + width, False)
        if not is_root:
            spans.append((a, a + width - 1))
        return width

    walk(f, 0, True)
    return frozenset(spans)


def two_node_contraction(span: tuple, nleaves: int) -> SchroederTree:
    """The Schröder tree with two internal nodes whose inner node covers span."""
    a, b = span
    if not (0 <= a <= b < nleaves) or (a, b) == (0, nleaves - 1) or a == b:
        raise ValueError(f"invalid inner-node span {span} on {nleaves} leaves")
    inner = tuple([None] * (b - a + 1))
    return tuple([None] * a + [inner] + [None] * (nleaves - 1 - b))


def two_node_contractions(f: SchroederTree) -> frozenset:
    """All contractions of f with exactly two internal nodes.

    One per internal edge (contract every other internal edge); the
    corolla and the single-node tree yield the empty set.  Two Schröder
    trees lie in a common proper face of the associahedron exactly when
    these sets intersect.
    """
    nleaves = leaf_count(f)
    return frozenset(two_node_contraction(span, nleaves)
                     for span in internal_edge_spans(f))


# ===================================================================
# serialization and canonical order
# ===================================================================

def serialize(t: SchroederTree) -> str:
    """Canonical string form: empty tree '·', node '(c1,...,cp)'.

    Empty children are rendered as empty strings, so the single binary
    node is '(,)' and the corolla on 3 leaves is '(,,)'.
    """
    if t is None:
        return "·"
    return _serialize(t)


def _serialize(t: SchroederTree) -> str:
    if t is None:
        return ""
    return "(" + ",".join(_serialize(c) for c in t) + ")"


def parse_tree(text: str) -> SchroederTree:
    """Inverse of serialize; accepts '.' as an ASCII alias for '·'."""
    s = text.strip()
    if s in ("·", "."):
        return None
    pos = 0

    def node() -> tuple:
        nonlocal pos
        if pos >= len(s) or s[pos] != "(":
            raise ValueError(f"expected '(' at position {pos} in {text!r}")
        pos += 1
        kids: list = []
        while True:
            if pos < len(s) and s[pos] == "(":
                kids.append(node())
            else:
                kids.append(None)
            if pos < len(s) and s[pos] == ",":
                pos += 1
                continue
            if pos < len(s) and s[pos] == ")":
                pos += 1
                break
            raise ValueError(f"expected ',' or ')' at position {pos} in {text!r}")
        if len(kids) < 2:
            raise ValueError("every internal node needs at least 2 children")
        return tuple(kids)

    out = node()
    if pos != len(s):
        raise ValueError(f"trailing characters at position {pos} in {text!r}")
    return out


def sort_key(t: SchroederTree) -> tuple:
    """Deterministic total order: by leaf count, then serialized form."""
    return (leaf_count(t), serialize(t))
