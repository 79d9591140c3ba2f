"""Exact decision of the arrowing property by exhaustive colouring search.

A graph G arrows the pair (H1, H2) when every edge colouring of G,
with any number of colours, contains a monochromatic copy of H1 or a
rainbow copy of H2.  Deciding over canonical set partitions of E(G)
(restricted-growth strings over the fixed edge order) is exhaustive,
because both pattern predicates are invariant under colour renaming.

The search prunes every extension of a partial colouring that already
contains one of the patterns: assigned colours never change when the
prefix is extended, so such copies persist.  Pruned subtrees are
accounted into the examined count by the number of canonical
colourings they cover.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .errors import BudgetError, DomainError
from .graphs import (
    Colouring,
    Graph,
    colour_degree,
    complete_graph,
    contains,
    find_monochromatic_copy,
    find_rainbow_copy,
)

DEFAULT_EDGE_BUDGET = 16


def enumerate_colourings(g: Graph) -> Iterator[Colouring]:
    """Every set partition of E(G), once each, as canonical colourings."""
    m = g.e
    if m == 0:
        yield Colouring.from_values(g, [])
        return
    values = [0] * m

    def rec(i: int, blocks: int):
        if i == m:
            yield Colouring.from_values(g, values)
            return
        for c in range(blocks + 1):
            values[i] = c
            yield from rec(i + 1, max(blocks, c + 1))

    yield from rec(0, 0)


@lru_cache(maxsize=None)
def _completions(blocks: int, remaining: int) -> int:
    """Number of restricted-growth completions from a prefix state."""
    if remaining == 0:
        return 1
    return blocks * _completions(blocks, remaining - 1) + _completions(blocks + 1, remaining - 1)


def bell_number(m: int) -> int:
    return _completions(0, m)


@dataclass(frozen=True)
class ArrowVerdict:
    """Outcome of an arrowing decision.

    ``counterexample`` is present exactly when the graph does not
    arrow; replaying it through the copy finders yields neither
    pattern.  ``colourings_examined`` counts the canonical colourings
    settled by the search (the full Bell number when it ran to
    completion).
    """

    arrows: bool
    counterexample: Colouring | None
    colourings_examined: int

    def __post_init__(self):
        if self.arrows == (self.counterexample is not None):
            raise DomainError("counterexample present iff the verdict is NotArrows")


def _prefix_host(g: Graph, count: int) -> Graph:
    return Graph(g.n, frozenset(g.sorted_edges[:count]))


def _verified_not_arrows(g: Graph, chi: Colouring, h1: Graph, h2: Graph, examined: int) -> ArrowVerdict:
    if find_monochromatic_copy(g, chi, h1) is not None:
        raise AssertionError("claimed counterexample contains a monochromatic copy")
    if find_rainbow_copy(g, chi, h2) is not None:
        raise AssertionError("claimed counterexample contains a rainbow copy")
    return ArrowVerdict(False, chi, examined)


def arrows(g: Graph, h1: Graph, h2: Graph, edge_budget: int | None = DEFAULT_EDGE_BUDGET) -> ArrowVerdict:
    """Decide whether g arrows (h1, h2), exactly.

    Refuses graphs with more edges than ``edge_budget`` (pass None to
    lift the cap) rather than ever answering heuristically.  The
    counterexample returned for NotArrows is the lexicographically
    least canonical colouring avoiding both patterns.
    """
    if edge_budget is not None and g.e > edge_budget:
        raise BudgetError(
            f"{g.e} edges exceeds the colouring search budget of {edge_budget};"
            " raise edge_budget to force the search"
        )

    # A pattern that cannot embed at all settles the decision with a
    # one-colouring certificate, replay-verified like any other.
    if not contains(g, h1):
        if h2.e >= 2 or not contains(g, h2):
            return _verified_not_arrows(g, Colouring.constant(g), h1, h2, 1)
        return ArrowVerdict(True, None, 0)  # every copy of h2 is rainbow
    if not contains(g, h2):
        if h1.e >= 2:
            return _verified_not_arrows(g, Colouring.rainbow(g), h1, h2, 1)
        return ArrowVerdict(True, None, 0)  # every copy of h1 is monochromatic

    m = g.e
    values = [0] * m
    examined = 0

    def settled(count: int) -> bool:
        """Does the prefix of ``count`` coloured edges contain a pattern?"""
        host = _prefix_host(g, count)
        chi = Colouring.from_values(host, values[:count])
        if find_monochromatic_copy(host, chi, h1) is not None:
            return True
        return find_rainbow_copy(host, chi, h2) is not None

    def rec(i: int, blocks: int) -> Colouring | None:
        nonlocal examined
        if settled(i):
            # every extension keeps the copy: assigned colours are final
            examined += _completions(blocks, m - i)
            return None
        if i == m:
            examined += 1
            return Colouring.from_values(g, values)
        for c in range(blocks + 1):
            values[i] = c
            bad = rec(i + 1, max(blocks, c + 1))
            if bad is not None:
                return bad
        return None

    counterexample = rec(0, 0)
    if counterexample is None:
        return ArrowVerdict(True, None, examined)
    return _verified_not_arrows(g, counterexample, h1, h2, examined)


def constrained_ramsey_number(
    h1: Graph, h2: Graph, n_max: int, edge_budget: int | None = DEFAULT_EDGE_BUDGET
) -> int | None:
    """Least n <= n_max with K_n arrowing (h1, h2), or None."""
    for n in range(1, n_max + 1):
        verdict = arrows(complete_graph(n), h1, h2, edge_budget=edge_budget)
        if verdict.arrows:
            return n
    return None


@dataclass(frozen=True)
class ColourDegreeParams:
    """Parameters of the colour-degree spread property.

    A graph satisfies the property for (b, r, pattern) when every edge
    colouring without a monochromatic copy of the pattern leaves, in
    every vertex subset of density at least b, some vertex whose
    colour-degree into the subset exceeds r.
    """

    b: Fraction
    r: int
    pattern: Graph

    def __post_init__(self):
        if not 0 < self.b <= 1:
            raise DomainError("density parameter b must lie in (0, 1]")
        if self.r < 2:
            raise DomainError("colour-degree bound r must be >= 2")


@dataclass(frozen=True)
class ColourDegreeVerdict:
    holds: bool
    witness_colouring: Colouring | None
    witness_set: tuple[int, ...] | None


def check_colour_degree_property(
    g: Graph, params: ColourDegreeParams, edge_budget: int | None = 12
) -> ColourDegreeVerdict:
    """Exhaustively check the colour-degree spread property on g.

    Doubly exponential (all canonical colourings times all vertex
    subsets); intended for tiny graphs only.  A failing pair
    (colouring, subset) is returned as the witness.
    """
    if edge_budget is not None and g.e > edge_budget:
        raise BudgetError(f"{g.e} edges exceeds the property-check budget of {edge_budget}")
    n = g.n
    threshold = params.b * n
    subsets = [
        tuple(v for v in range(n) if s >> v & 1)
        for s in range(1, 1 << n)
        if s.bit_count() >= threshold
    ]
    for chi in enumerate_colourings(g):
        if find_monochromatic_copy(g, chi, params.pattern) is not None:
            continue
        for xs in subsets:
            if not any(colour_degree(g, chi, v, xs) > params.r for v in xs):
                return ColourDegreeVerdict(False, chi, xs)
    return ColourDegreeVerdict(True, None, None)
