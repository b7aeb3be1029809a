"""Brute-force reference implementations, written from the definitions and
sharing no code with the package. Graphs are plain ``(n, edges)`` pairs where
``edges`` maps ``frozenset({u, v})`` to a color."""
from __future__ import annotations

from itertools import combinations, permutations


def edge_map(g) -> dict:
    return {frozenset((u, v)): c for u, v, c in g.colored_edges()}


def nbrs(n, edges, v):
    return [w for w in range(n) if w != v and frozenset((v, w)) in edges]


def color_degree(n, edges, v):
    return len({edges[frozenset((v, w))] for w in nbrs(n, edges, v)})


def min_color_degree(n, edges):
    return min(color_degree(n, edges, v) for v in range(n))


def rainbow_cycles(n, edges, ell):
    """Every rainbow ell-cycle as a canonical vertex tuple: choose the vertex
    set, fix its minimum first and try every order of the rest."""
    out = set()
    for S in combinations(range(n), ell):
        for rest in permutations(S[1:]):
            if rest[0] > rest[-1]:
                continue
            cyc = (S[0],) + rest
            cols = []
            for i in range(ell):
                e = frozenset((cyc[i], cyc[(i + 1) % ell]))
                if e not in edges:
                    break
                cols.append(edges[e])
            else:
                if len(set(cols)) == ell:
                    out.add(cyc)
    return out


def rainbow_paths(n, edges, v, k, forbidden=frozenset(), avoid=frozenset()):
    """End vertices of rainbow paths on k vertices starting at v."""
    ends = set()

    def grow(path, cols):
        if len(path) == k:
            ends.add(path[-1])
            return
        for w in range(n):
            e = frozenset((path[-1], w))
            if w in path or w in avoid or e not in edges:
                continue
            c = edges[e]
            if c in cols or c in forbidden:
                continue
            grow(path + [w], cols | {c})

    grow([v], frozenset())
    return ends


def has_mono_3path(n, edges):
    """Three equally colored edges {a,b}, {b,c}, {c,d} with a, b, c distinct
    and b, c, d distinct (a = d gives a monochromatic triangle)."""
    for a, b, c, d in permutations(range(n), 4) if n >= 4 else ():
        es = [frozenset((a, b)), frozenset((b, c)), frozenset((c, d))]
        if all(e in edges for e in es) and len({edges[e] for e in es}) == 1:
            return True
    for a, b, c in permutations(range(n), 3):
        es = [frozenset((a, b)), frozenset((b, c)), frozenset((a, c))]
        if all(e in edges for e in es) and len({edges[e] for e in es}) == 1:
            return True
    return False


def is_edge_minimal(n, edges):
    delta = min_color_degree(n, edges)
    for e in edges:
        rest = {f: c for f, c in edges.items() if f != e}
        if min_color_degree(n, rest) == delta:
            return False
    return True


def separating(n, edges, v, X, y):
    out = set()
    for alpha in set(edges.values()):
        for x in X:
            exy, evx = frozenset((x, y)), frozenset((v, x))
            if exy in edges and edges[exy] == alpha and edges[evx] != alpha:
                out.add(alpha)
    return out


def restricted(n, edges, v, X, y):
    sep = separating(n, edges, v, X, y)
    outside = {edges[frozenset((w, y))] for w in nbrs(n, edges, y) if w not in X}
    return {a for a in sep if a not in outside}


def replication(n, edges):
    best = None
    for v in range(n):
        for alpha in sorted(set(edges.values())):
            size = sum(1 for w in nbrs(n, edges, v) if edges[frozenset((v, w))] == alpha)
            if size and (best is None or size > best[0]):
                best = (size, (v, alpha))
    return best


def unique_nbhd(n, edges, v):
    out = set()
    for w in nbrs(n, edges, v):
        c = edges[frozenset((v, w))]
        if sum(1 for u in nbrs(n, edges, v) if edges[frozenset((v, u))] == c) == 1:
            out.add(w)
    return out


def digraph_D(n, edges, v, X, Y):
    return {(x, y) for x in X for y in Y
            if frozenset((x, y)) in edges and edges[frozenset((x, y))] == edges[frozenset((v, x))]}


def digraph_F(n, edges, z, X_plus):
    return {(x, y) for x in X_plus for y in range(n)
            if frozenset((x, y)) in edges and edges[frozenset((x, y))] != edges[frozenset((x, z))]}
