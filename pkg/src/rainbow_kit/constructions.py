"""Instance generators: the balanced rainbow bipartite construction, seeded
random colorings, and a color-degree booster."""
from __future__ import annotations

import numpy as np

from .graph import EdgeColoredGraph, GraphError, color_degrees


def rainbow_complete_bipartite(a: int, b: int) -> EdgeColoredGraph:
    """``K_{a,b}`` on parts ``0..a-1`` and ``a..a+b-1`` with every edge its own color."""
    if a < 1 or b < 1:
        raise ValueError("both parts need at least one vertex")
    return EdgeColoredGraph(a + b, ((i, a + j, i * b + j) for i in range(a) for j in range(b)))


def balanced_rainbow_bipartite(n: int) -> EdgeColoredGraph:
    return rainbow_complete_bipartite(n // 2, n - n // 2)


def random_colored_graph(n: int, edge_prob: float, palette_size: int, seed: int,
                         distinct: bool = False) -> EdgeColoredGraph:
    """Each pair is an edge independently with probability ``edge_prob``; colors are
    uniform over ``0..palette_size-1``, or, with ``distinct``, a random injective
    assignment from that range."""
    if not 0.0 <= edge_prob <= 1.0:
        raise ValueError(f"edge_prob must lie in [0, 1], got {edge_prob}")
    if palette_size < 1:
        raise ValueError("palette_size must be at least 1")
    rng = np.random.default_rng(seed)
    us, vs = np.triu_indices(n, k=1)
    keep = rng.random(us.size) < edge_prob
    us, vs = us[keep], vs[keep]
    if distinct:
        if palette_size < us.size:
            raise ValueError(f"distinct coloring needs palette_size >= {us.size} edges")
        colors = rng.permutation(palette_size)[: us.size]
    else:
        colors = rng.integers(0, palette_size, size=us.size)
    return EdgeColoredGraph._trusted(n, list(zip(us.tolist(), vs.tolist(), colors.tolist())))


def boost_min_color_degree(g: EdgeColoredGraph, target: int, seed: int) -> EdgeColoredGraph:
    """Add edges with fresh colors at deficient vertices until every color degree is
    at least ``target``.

    Existing edges keep their colors. For each deficient vertex (visited in a
    seeded order) new partners are drawn from its non-neighbors, deficient ones
    first. Raises ``GraphError`` when ``target > n - 1`` or a vertex runs out of
    non-neighbors.
    """
    n = g.n
    if target > n - 1:
        raise GraphError(f"target {target} exceeds n - 1 = {n - 1}")
    cdeg = color_degrees(g)
    if min(cdeg, default=target) >= target:
        return g
    rng = np.random.default_rng(seed)
    cdeg = np.asarray(cdeg)
    adjm = np.zeros((n, n), dtype=bool)
    for u, v, _ in g.colored_edges():
        adjm[u, v] = adjm[v, u] = True
    np.fill_diagonal(adjm, True)
    fresh = max(g.palette, default=-1) + 1
    added = []
    for v in rng.permutation(n).tolist():
        need = target - int(cdeg[v])
        if need <= 0:
            continue
        order = rng.permutation(n)
        others = order[~adjm[v, order]]
        others = others[np.argsort(cdeg[others] >= target, kind="stable")]
        if others.size < need:
            raise GraphError(f"vertex {v} cannot reach color degree {target} by adding edges")
        chosen = others[:need]
        adjm[v, chosen] = adjm[chosen, v] = True
        cdeg[v] += need
        cdeg[chosen] += 1
        for w in chosen.tolist():
            added.append((v, w, fresh) if v < w else (w, v, fresh))
            fresh += 1
    return EdgeColoredGraph._trusted(n, sorted(list(g.colored_edges()) + added))
