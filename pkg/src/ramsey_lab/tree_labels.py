"""Descendant colourings, path-product labellings, and the rainbow
binary-tree host.

A descendant colouring orders the children of every vertex by
descending subtree size and colours the child edges 1..k in that
order.  Such colourings never put three equal colours at one vertex,
and a rainbow copy of a tree H inside a descendant-coloured host T
forces v(T) to be at least the optimal path-product value of H: labels
multiply along root-to-leaf paths, so the best injective labelling of
H bounds the host size from below.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import BudgetError, DomainError
from .graphs import (
    Edge,
    Graph,
    as_colour_fn,
    norm_edge,
    rooted_code,
    star,
)
from .trees import LayeredTree, RootedTree
from .constructions import Witness, verify_witness


def descendant_counts(tree: RootedTree) -> dict[int, int]:
    """Subtree sizes: each vertex counts itself plus all descendants."""
    counts = {v: 1 for v in tree.vertices()}
    order = sorted(tree.vertices(), key=lambda v: -tree.depth_of(v))
    for v in order:
        p = tree.parent_of(v)
        if p >= 0:
            counts[p] += counts[v]
    return counts


def descendant_colouring(tree: RootedTree) -> dict[Edge, int]:
    """Labels 1..k on each vertex's child edges, larger subtrees first.

    Ties are broken by least child index.  The labels are meaningful
    integers (they multiply along paths), so the raw map is returned
    rather than a canonicalised partition; it is accepted anywhere a
    colouring is.
    """
    counts = descendant_counts(tree)
    labels: dict[Edge, int] = {}
    for v in tree.vertices():
        kids = sorted(tree.child_list(v), key=lambda w: (-counts[w], w))
        for i, w in enumerate(kids, start=1):
            labels[norm_edge(v, w)] = i
    return labels


def lazy_descendant_colouring(tree) -> Callable[[int, int], int]:
    """Descendant colouring of a lazily navigated layered tree.

    All siblings in such a tree carry equal subtree sizes, so the tie
    rule alone decides: the i-th child edge gets label i.
    """
    def fn(u: int, v: int) -> int:
        child = max(u, v)
        parent = tree.parent_of(child)
        if parent != min(u, v):
            raise DomainError(f"({u},{v}) is not a tree edge")
        return child - tree.child_list(parent)[0] + 1

    return fn


@dataclass(frozen=True)
class OptimalLabelling:
    """Minimiser of the worst root-to-leaf label product of a tree."""

    value: int
    root: int
    labels: dict[Edge, int]


def min_max_path_product(h: Graph, edge_budget: int = 10) -> OptimalLabelling:
    """Minimum over roots and injective edge labellings of the maximum
    product of labels along a root-to-leaf path.

    Labels range over {1..e(H)}: rank-compressing any injective
    positive labelling into that set never increases a path product.
    Zero-length paths are excluded, so a root that is itself a leaf
    only competes through its genuine paths.  Exact branch-and-bound:
    edges are filled in breadth-first order from the candidate root and
    a partial labelling is pruned as soon as some partial path product
    reaches the incumbent.
    """
    if h.n == 0 or not h.is_forest or len(h.components) != 1:
        raise DomainError("path-product labelling is defined on trees")
    m = h.e
    if m == 0:
        raise DomainError("the single-vertex tree has no root-to-leaf path")
    if m > edge_budget:
        raise BudgetError(
            f"{m} edges exceeds the labelling budget of {edge_budget};"
            " raise edge_budget for an exact (but factorial) search"
        )

    leaves = {v for v in range(h.n) if h.degree(v) == 1}
    best_value = None
    best_root = None
    best_labels: dict[Edge, int] | None = None
    seen_codes: set[str] = set()

    for root in range(h.n):
        code = rooted_code(h, root)
        if code in seen_codes:
            continue
        seen_codes.add(code)
        tree = RootedTree.from_graph(h, root)
        order = sorted(range(h.n), key=lambda v: (tree.depth_of(v), v))
        edges = [norm_edge(tree.parent_of(v), v) for v in order if v != root]
        child_of = [v for v in order if v != root]

        prod = {root: 1}
        assignment: dict[Edge, int] = {}
        used = [False] * (m + 1)

        def fill(i: int, cur_max: int):
            nonlocal best_value, best_root, best_labels
            if best_value is not None and cur_max >= best_value:
                return
            if i == m:
                if best_value is None or cur_max < best_value:
                    best_value = cur_max
                    best_root = root
                    best_labels = dict(assignment)
                return
            e, v = edges[i], child_of[i]
            for lab in range(1, m + 1):
                if used[lab]:
                    continue
                p = prod[tree.parent_of(v)] * lab
                if best_value is not None and p >= best_value:
                    continue
                used[lab] = True
                prod[v] = p
                assignment[e] = lab
                fill(i + 1, max(cur_max, p) if v in leaves else cur_max)
                used[lab] = False
                del prod[v]
                del assignment[e]

        fill(0, 1)

    assert best_value is not None and best_labels is not None
    return OptimalLabelling(best_value, best_root, best_labels)


def path_product_at_least(h: Graph, bound: int, edge_budget: int = 20) -> bool:
    """Certify min_max_path_product(h) >= bound without computing it.

    Runs the same branch-and-bound with the incumbent pinned at the
    bound; the certificate holds iff no labelling beats it.
    """
    if h.n == 0 or not h.is_forest or len(h.components) != 1 or h.e == 0:
        raise DomainError("bound check is defined on trees with an edge")
    m = h.e
    if m > edge_budget:
        raise BudgetError(f"{m} edges exceeds the budget of {edge_budget}")
    leaves = {v for v in range(h.n) if h.degree(v) == 1}
    seen_codes: set[str] = set()
    for root in range(h.n):
        code = rooted_code(h, root)
        if code in seen_codes:
            continue
        seen_codes.add(code)
        tree = RootedTree.from_graph(h, root)
        order = sorted(range(h.n), key=lambda v: (tree.depth_of(v), v))
        child_of = [v for v in order if v != root]
        prod = {root: 1}
        used = [False] * (m + 1)

        def beats(i: int) -> bool:
            if i == m:
                return True
            v = child_of[i]
            for lab in range(1, m + 1):
                if used[lab]:
                    continue
                p = prod[tree.parent_of(v)] * lab
                if p >= bound:
                    continue
                used[lab] = True
                prod[v] = p
                if beats(i + 1):
                    used[lab] = False
                    del prod[v]
                    return True
                used[lab] = False
                del prod[v]
            return False

        if beats(0):
            return False
    return True


# ---------------------------------------------------------------------------
# the geometric-arity host and the rainbow binary-tree embedding


def rainbow_binary_host(h: int) -> LayeredTree:
    """The height-h host whose depth-i vertices have 2^(i+3) children.

    Its leaf count is 2^(h(h-1)/2 + 3h), and any colouring of it free
    of monochromatic three-edge stars admits a rainbow complete binary
    tree of height h.
    """
    if h < 1:
        raise DomainError("host height must be >= 1")
    return LayeredTree(tuple(2 ** (i + 3) for i in range(h)))


def embed_rainbow_binary(host, chi, h: int) -> Witness:
    """A rainbow complete binary tree of height h inside the host.

    Proceeds level by level from the root, always extending along
    fresh-coloured child edges; every depth-i host vertex offers at
    least 2^(i+2) colours when no three incident edges share one.  If
    the colouring does contain a monochromatic three-edge star, that
    witness is returned instead.
    """
    if host.height < h:
        raise DomainError("host is shorter than the requested binary tree")
    fn = as_colour_fn(chi)
    binary = LayeredTree((2,) * h)
    mapping = [-1] * binary.n
    mapping[0] = host.root
    used: set[int] = set()
    for v in range(binary.n):
        kids = binary.child_list(v)
        if not kids:
            continue
        w = mapping[v]
        fresh: dict[int, int] = {}
        for c_host in host.child_list(w):
            c = fn(*norm_edge(w, c_host))
            if c not in used and c not in fresh:
                fresh[c] = c_host
        if len(fresh) < len(kids):
            mono = _find_mono_cherry_star(host, fn)
            if mono is None:
                raise AssertionError(
                    "embedding stalled although the host has no monochromatic"
                    " three-edge star"
                )
            verify_witness(host, chi, mono)
            return mono
        for (c, c_host), k in zip(sorted(fresh.items())[: len(kids)], kids):
            mapping[k] = c_host
            used.add(c)
    witness = Witness("rainbow", binary.to_graph(), tuple(mapping))
    verify_witness(host, chi, witness)
    return witness


def _find_mono_cherry_star(host, fn) -> Witness | None:
    """Scan the host for a vertex with three equal-coloured incident edges."""
    for v in host.vertices():
        groups: dict[int, list[int]] = {}
        p = host.parent_of(v)
        if p >= 0:
            groups.setdefault(fn(*norm_edge(p, v)), []).append(p)
        if not host.is_leaf(v):
            for w in host.child_list(v):
                groups.setdefault(fn(*norm_edge(v, w)), []).append(w)
        for c, members in sorted(groups.items()):
            if len(members) >= 3:
                return Witness("monochromatic", star(3), tuple([v] + sorted(members)[:3]))
    return None
