"""Containment order of the wildcard arguments over a subtyping graph.

Given a subtyping order with distinguished extremes, the argument graph has
three copies of the input: an upper-bounded copy (`? <: T`) ordered like the
input, a lower-bounded copy (`? :> T`) ordered opposite to it, and a plain
(invariant) copy that forms an antichain, each plain argument linked to its
two bounded forms.  Corner spellings name the same argument and collapse to
one canonical vertex: the upper-bounded top and the lower-bounded bottom are
both the default argument `?`, the lower-bounded top is the top itself, and
the upper-bounded bottom is the bottom itself.  An edge `u -> v` means the
argument `u` is contained in the argument `v`.
"""

from __future__ import annotations

from .digraph import BipointedGraph, EdgeTag, LabeledDigraph, _coalesce, transitive_reduction
from .errors import GraphError
from .labels import WILDCARD, lower_bounded_label, upper_bounded_label


def wildcards_size(n: int) -> int:
    """Vertex count of the argument graph over an n-vertex input: 3(n - 1)."""
    if n < 2:
        raise GraphError("input graph must contain distinct top and bottom vertices")
    return 3 * (n - 1)


def wildcards_graph(g: BipointedGraph) -> LabeledDigraph:
    """Hasse form of the containment order over all arguments drawn from `g`.

    The input must be in Hasse form already.  The result has exactly
    3(|V| - 1) vertices and a unique sink `?`.
    """
    if g.top == g.bottom:
        raise GraphError("input graph must contain distinct top and bottom vertices")
    top, bottom = g.top, g.bottom

    def upper(t: str) -> str:
        # The whole upper-bounded copy of `top` is the default argument, and
        # nothing lies strictly below `bottom`, so both corners coalesce.
        if t == top:
            return WILDCARD
        if t == bottom:
            return bottom
        return upper_bounded_label(t)

    def lower(t: str) -> str:
        if t == bottom:
            return WILDCARD
        if t == top:
            return top
        return lower_bounded_label(t)

    names = set(g.vertices)
    names.update(upper(t) for t in g.vertices)
    names.update(lower(t) for t in g.vertices)

    candidates: list[tuple[str, str, EdgeTag]] = []
    for edge in g.graph.sorted_edges:
        candidates.append((upper(edge.src), upper(edge.dst), EdgeTag.COVARIANT))
    for edge in g.graph.sorted_edges:
        candidates.append((lower(edge.dst), lower(edge.src), EdgeTag.CONTRAVARIANT))
    for t in sorted(g.vertices):
        if t not in (top, bottom):
            candidates.append((t, upper(t), EdgeTag.INV_LINK))
            candidates.append((t, lower(t), EdgeTag.INV_LINK))

    graph = LabeledDigraph(frozenset(names), frozenset(_coalesce(candidates)))
    return transitive_reduction(graph)
