"""Exact graph density parameters and pattern-family classification.

Both density maxima range over subgraphs but are attained at induced
subgraphs (dropping edges from a fixed vertex set can only lower the
ratios), so the enumeration runs over vertex subsets only.  All values
are exact rationals; floating point never enters a density result.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .graphs import Graph


def _subset_edge_counts(g: Graph):
    """Yield (popcount, edge count) over all non-empty vertex subsets."""
    n = g.n
    adj_mask = [0] * n
    for u, v in g.edges:
        adj_mask[u] |= 1 << v
        adj_mask[v] |= 1 << u
    for s in range(1, 1 << n):
        edges = 0
        rest = s
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            edges += (adj_mask[v] & rest).bit_count()
        yield s.bit_count(), edges


def max_density(h: Graph) -> Fraction:
    """max e(J)/v(J) over non-empty subgraphs J of h."""
    if h.n == 0:
        raise DomainError("maximum density needs at least one vertex")
    best_e, best_v = 0, 1
    for v, e in _subset_edge_counts(h):
        if e * best_v > best_e * v:
            best_e, best_v = e, v
    return Fraction(best_e, best_v)


def max_2_density(h: Graph) -> Fraction:
    """max (e(J)-1)/(v(J)-2) over subgraphs on >= 3 vertices.

    Graphs on at most two vertices take the conventional values 0
    (edgeless) and 1/2 (a single edge).
    """
    if h.n == 0:
        raise DomainError("maximum 2-density needs at least one vertex")
    if h.n <= 2:
        return Fraction(1, 2) if h.e == 1 else Fraction(0)
    best_num, best_den = None, None
    for v, e in _subset_edge_counts(h):
        if v < 3:
            continue
        num, den = e - 1, v - 2
        if best_num is None or num * best_den > best_num * den:
            best_num, best_den = num, den
    return Fraction(best_num, best_den)


@dataclass(frozen=True)
class GraphClass:
    """Family flags driving the threshold case analysis.

    Isolated vertices are ignored by every flag except the separately
    exposed non-isolated vertex count.
    """

    is_forest: bool
    is_star: bool
    is_matching: bool
    is_star_forest: bool
    is_constellation: bool
    is_short_forest: bool
    is_cherry: bool
    k_nonisolated: int


def _is_star_component(g: Graph, comp: tuple[int, ...]) -> bool:
    size = len(comp)
    degs = sorted(g.degree(v) for v in comp)
    if size == 2:
        return degs == [1, 1]
    return degs[-1] == size - 1 and all(d == 1 for d in degs[:-1])


def classify(h: Graph) -> GraphClass:
    nontrivial = [c for c in h.components if len(c) > 1]
    k = sum(len(c) for c in nontrivial)
    forest = h.is_forest
    has_edges = h.e > 0
    stars = has_edges and all(_is_star_component(h, c) for c in nontrivial)
    short = has_edges and all(
        len(c) == 2 or (len(c) == 3 and _is_star_component(h, c)) for c in nontrivial
    )
    return GraphClass(
        is_forest=forest,
        is_star=stars and len(nontrivial) == 1,
        is_matching=has_edges and all(len(c) == 2 for c in nontrivial),
        is_star_forest=stars,
        is_constellation=stars and len(nontrivial) >= 2,
        is_short_forest=short,
        is_cherry=len(nontrivial) == 1 and len(nontrivial[0]) == 3 and h.e == 2,
        k_nonisolated=k,
    )


def bridge_join(g1: Graph, g2: Graph, u: int, v: int) -> Graph:
    """Disjoint union of g1 and g2 plus the single bridge u--v."""
    if not (0 <= u < g1.n and 0 <= v < g2.n):
        raise DomainError("bridge endpoints out of range")
    return g1.disjoint_union(g2).add_edges([(u, g1.n + v)])
