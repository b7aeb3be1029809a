"""Edge-minimal reduction that keeps the minimum color degree fixed."""
from __future__ import annotations

from collections import Counter

from .graph import EdgeColoredGraph, min_color_degree


def edge_minimal_reduce(g: EdgeColoredGraph) -> EdgeColoredGraph:
    """Drop edges greedily, in ``(u, v)`` order, while the minimum color degree is unchanged.

    Removing ``{u, v}`` can only lower the color degrees of ``u`` and ``v``, so
    an edge is removable iff at each endpoint its color repeats or the
    endpoint's color degree exceeds the minimum. Counts only shrink as edges
    go, so an edge that is kept once stays unremovable; the confirming pass
    therefore never removes anything, but it is run as stated.
    """
    if g.n == 0 or g.num_edges == 0:
        return g
    delta = min_color_degree(g)
    counts = [Counter(g.adjacency(v).values()) for v in range(g.n)]
    cdeg = [len(cv) for cv in counts]
    alive = [True] * g.num_edges
    edges = g.colored_edges()

    removed_any = True
    while removed_any:
        removed_any = False
        for i, (u, v, c) in enumerate(edges):
            if not alive[i]:
                continue
            cu, cv = counts[u], counts[v]
            if (cu[c] > 1 or cdeg[u] > delta) and (cv[c] > 1 or cdeg[v] > delta):
                alive[i] = False
                removed_any = True
                for w, cw in ((u, cu), (v, cv)):
                    cw[c] -= 1
                    if cw[c] == 0:
                        del cw[c]
                        cdeg[w] -= 1
    if all(alive):
        return g
    return EdgeColoredGraph._trusted(g.n, [e for e, keep in zip(edges, alive) if keep])


def check_no_mono_3path(g: EdgeColoredGraph) -> bool:
    """True iff no three edges of one color form a path ``u-v-w-x`` (``x = u`` allowed).

    Within a color class this happens exactly when some edge has another
    edge of its color at both of its endpoints.
    """
    for u, v, c in g.colored_edges():
        if g.color_counts(u)[c] > 1 and g.color_counts(v)[c] > 1:
            return False
    return True


def is_edge_minimal(g: EdgeColoredGraph) -> bool:
    """Definition check: deleting any single edge lowers the minimum color degree."""
    if g.num_edges == 0:
        return True
    delta = min_color_degree(g)
    edges = g.colored_edges()
    for i in range(len(edges)):
        rest = EdgeColoredGraph._trusted(g.n, edges[:i] + edges[i + 1:])
        if min_color_degree(rest) >= delta:
            return False
    return True
