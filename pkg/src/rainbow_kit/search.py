"""Exact rainbow-cycle search and layered rainbow-path reachability.

The exact oracle roots every cycle at its smallest vertex ``s`` and only
walks through vertices larger than ``s``; the direction is fixed by asking
the second vertex to be smaller than the last one, so each cycle is met
exactly once. Branches are cut with walk-length sets: a partial path whose
end cannot return to ``s`` by a walk of exactly the remaining length (inside
the allowed vertices) cannot be completed. This is what makes bipartite
hosts, where no odd closed walk exists, fail fast.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .graph import EdgeColoredGraph, GraphError, RainbowWitness

EXACT_REACH_CAP = 16


def _check_length(ell: int) -> None:
    if ell < 3:
        raise ValueError(f"cycle length must be at least 3, got {ell}")


def _adjacency_bits(g: EdgeColoredGraph) -> list[int]:
    bits = g._cache.get("adjbits")
    if bits is None:
        bits = []
        for v in range(g.n):
            b = 0
            for w in g.adjacency(v):
                b |= 1 << w
            bits.append(b)
        g._cache["adjbits"] = bits
    return bits


def _walk_sets(adjbits: list[int], s: int, n: int, length: int) -> list[int]:
    """``out[k]`` has bit ``w`` iff a walk of exactly ``k`` edges joins ``s`` and ``w``
    using only vertices ``>= s``."""
    allowed = ((1 << n) - 1) ^ ((1 << s) - 1)
    out = [1 << s]
    cur = out[0]
    for _ in range(length):
        nxt = 0
        rest = cur
        while rest:
            low = rest & -rest
            nxt |= adjbits[low.bit_length() - 1]
            rest ^= low
        cur = nxt & allowed
        out.append(cur)
    return out


def _search_anchor(g: EdgeColoredGraph, s: int, ell: int, first_only: bool):
    """Rainbow ``ell``-cycles whose minimum vertex is ``s``.

    Returns the first cycle's vertex tuple (or None) when ``first_only``,
    otherwise the number of cycles.
    """
    adjbits = _adjacency_bits(g)
    walks = _walk_sets(adjbits, s, g.n, ell)
    if not (walks[ell] >> s) & 1:
        return None if first_only else 0
    adj = [g.adjacency(v) for v in range(g.n)]
    adj_s = adj[s]
    path = [s]
    on_path = {s}
    used: set[int] = set()
    found = 0

    def extend(u: int) -> tuple[int, ...] | None:
        nonlocal found
        d = len(path)
        if d == ell:
            c = adj_s[u]
            if c not in used and u > path[1]:
                if first_only:
                    return tuple(path)
                found += 1
            return None
        need = walks[ell - d]
        last = d + 1 == ell
        for w, c in adj[u].items():
            if w <= s or w in on_path or c in used or not (need >> w) & 1:
                continue
            if last and w < path[1]:
                continue
            path.append(w)
            on_path.add(w)
            used.add(c)
            hit = extend(w)
            path.pop()
            on_path.discard(w)
            used.discard(c)
            if hit is not None:
                return hit
        return None

    hit = extend(s)
    return hit if first_only else found


def _anchor_chunk(args):
    g, anchors, ell, first_only = args
    if first_only:
        for s in anchors:
            hit = _search_anchor(g, s, ell, True)
            if hit is not None:
                return hit
        return None
    return sum(_search_anchor(g, s, ell, False) for s in anchors)


def _chunks(n: int, threads: int) -> list[list[int]]:
    size = max(1, -(-n // (threads * 8)))
    return [list(range(i, min(n, i + size))) for i in range(0, n, size)]


def find_rainbow_cycle_exact(g: EdgeColoredGraph, ell: int, threads: int = 1) -> RainbowWitness | None:
    """A rainbow cycle on ``ell`` vertices, or None if there is none.

    Complete: returns None only when no rainbow ``ell``-cycle exists. With
    ``threads > 1`` anchors are split across worker processes; results are
    still taken in anchor order, so the answer does not depend on timing.
    """
    _check_length(ell)
    key = ("exact", ell)
    if key in g._cache:
        return g._cache[key]
    hit = None
    if g.n >= ell and g.palette_size >= ell:
        if threads > 1:
            chunks = _chunks(g.n, threads)
            with ProcessPoolExecutor(max_workers=threads) as pool:
                futures = [pool.submit(_anchor_chunk, (g, c, ell, True)) for c in chunks]
                for fut in futures:
                    hit = fut.result()
                    if hit is not None:
                        pool.shutdown(cancel_futures=True)
                        break
        else:
            for s in range(g.n - ell + 1):
                hit = _search_anchor(g, s, ell, True)
                if hit is not None:
                    break
    witness = RainbowWitness.from_vertices(g, "cycle", hit) if hit is not None else None
    g._cache[key] = witness
    return witness


def count_rainbow_cycles(g: EdgeColoredGraph, ell: int, threads: int = 1) -> int:
    """Number of rainbow ``ell``-cycles, each counted once up to rotation and reflection."""
    _check_length(ell)
    if g.n < ell or g.palette_size < ell:
        return 0
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return sum(pool.map(_anchor_chunk, [(g, c, ell, False) for c in _chunks(g.n, threads)]))
    return sum(_search_anchor(g, s, ell, False) for s in range(g.n - ell + 1))


# -- layered reach ---------------------------------------------------------

@dataclass
class LayeredReach:
    """For each layer ``i``, vertices ``y`` joined to ``anchor`` by an ``i``-vertex
    rainbow path that avoids ``forbidden`` colors and (apart from the anchor)
    the ``avoid`` vertices, each with one such path as witness."""

    anchor: int
    forbidden: frozenset[int]
    mode: str
    avoid: frozenset[int] = frozenset()
    layers: dict[int, dict[int, RainbowWitness]] = field(default_factory=dict)

    @property
    def max_layer(self) -> int:
        return max(self.layers)

    def layer(self, i: int) -> Mapping[int, RainbowWitness]:
        return self.layers.get(i, {})

    def members(self, i: int) -> set[int]:
        return set(self.layers.get(i, ()))

    def validate(self, g: EdgeColoredGraph) -> None:
        for i, layer in self.layers.items():
            for y, w in layer.items():
                w.validate(g)
                vs = w.vertices
                if w.kind != "path" or len(vs) != i or vs[0] != self.anchor or vs[-1] != y:
                    raise GraphError(f"layer {i}: bad witness {vs} for {y}")
                if self.forbidden.intersection(w.colors):
                    raise GraphError(f"layer {i}: witness {vs} uses a forbidden color")
                if self.avoid.intersection(vs[1:]):
                    raise GraphError(f"layer {i}: witness {vs} meets an avoided vertex")


def layered_reach(g: EdgeColoredGraph, v: int, forbidden: Iterable[int] = (),
                  max_layer: int = 2, avoid: Iterable[int] = (), mode: str = "greedy",
                  exact_cap: int = EXACT_REACH_CAP) -> LayeredReach:
    """Build reach layers ``1..max_layer`` from ``v``.

    ``exact`` enumerates every rainbow path, so layer membership is exact;
    it is refused above ``exact_cap`` vertices. ``greedy`` extends only the
    single stored witness of each member, scanning neighbors in id order, so
    its layers are subsets of the exact ones.
    """
    avoid = frozenset(avoid)
    forbidden = frozenset(forbidden)
    if v in avoid:
        raise ValueError(f"anchor {v} is in the avoid set")
    if max_layer < 1:
        raise ValueError("max_layer must be at least 1")
    if mode == "exact":
        if g.n > exact_cap:
            raise ValueError(
                f"exact reach enumerates all paths and is capped at n <= {exact_cap} "
                f"(graph has n = {g.n}); use mode='greedy' or raise exact_cap explicitly")
        layers = _exact_layers(g, v, forbidden, max_layer, avoid)
    elif mode == "greedy":
        layers = _greedy_layers(g, v, forbidden, max_layer, avoid)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return LayeredReach(v, forbidden, mode, avoid, layers)


def _greedy_layers(g, v, forbidden, max_layer, avoid):
    layers = {1: {v: RainbowWitness("path", (v,), ())}}
    full = g.n - 1 - len(avoid)
    for i in range(1, max_layer):
        nxt: dict[int, RainbowWitness] = {}
        for y, wit in layers[i].items():
            if len(nxt) == full:
                break
            vs, cs = wit.vertices, wit.colors
            for w, c in g.adjacency(y).items():
                if w in nxt or w in vs or c in cs or c in forbidden or w in avoid:
                    continue
                nxt[w] = RainbowWitness("path", vs + (w,), cs + (c,))
        layers[i + 1] = nxt
    return layers


def _exact_layers(g, v, forbidden, max_layer, avoid):
    layers: dict[int, dict[int, RainbowWitness]] = {i: {} for i in range(1, max_layer + 1)}
    layers[1][v] = RainbowWitness("path", (v,), ())
    path = [v]
    colors: list[int] = []

    def grow(u: int) -> None:
        d = len(path)
        if d == max_layer:
            return
        for w, c in g.adjacency(u).items():
            if w in path or c in colors or c in forbidden or w in avoid:
                continue
            path.append(w)
            colors.append(c)
            layers[d + 1].setdefault(w, RainbowWitness("path", tuple(path), tuple(colors)))
            grow(w)
            path.pop()
            colors.pop()

    grow(v)
    return layers


def repeated_colors(g: EdgeColoredGraph, v: int, X: Iterable[int]) -> frozenset[int]:
    """Colors ``c({v, x})`` that occur for at least two ``x`` in ``X``."""
    adj = g.adjacency(v)
    seen: set[int] = set()
    rep: set[int] = set()
    for x in X:
        c = adj[x]
        (rep if c in seen else seen).add(c)
    return frozenset(rep)


def closing_failures(g: EdgeColoredGraph, v: int, x: int, path: RainbowWitness) -> str:
    """Which of the obstructions A-D stop ``path + {x, y} + {v, x}`` from being a rainbow cycle.

    A: x lies on the path; B: c(x,y) already on the path; C: c(v,x) already on
    the path; D: c(x,y) == c(v,x). Empty string means the cycle is rainbow.
    """
    y = path.vertices[-1]
    cxy = g.color(x, y)
    cvx = g.color(v, x)
    out = ""
    if x in path.vertices:
        out += "A"
    if cxy in path.colors:
        out += "B"
    if cvx in path.colors:
        out += "C"
    if cxy == cvx:
        out += "D"
    return out


def close_cycle_from_reach(g: EdgeColoredGraph, v: int, X: Iterable[int], reach: LayeredReach,
                           ell: int, c_rep: Iterable[int] | None = None) -> RainbowWitness | None:
    """Close some stored ``(ell-1)``-vertex path ``v..y`` through an ``x`` in ``N(y) & X``."""
    _check_length(ell)
    X = set(X)
    adj_v = g.adjacency(v)
    if not X <= adj_v.keys():
        raise ValueError("X must be a subset of N(v)")
    if reach.anchor != v:
        raise ValueError(f"reach is anchored at {reach.anchor}, not {v}")
    if ell - 1 not in reach.layers:
        raise ValueError(f"reach has no layer {ell - 1}")
    c_rep = repeated_colors(g, v, X) if c_rep is None else frozenset(c_rep)
    if not c_rep <= reach.forbidden:
        raise ValueError("reach must forbid every repeated color of C_rep")
    for y, path in reach.layer(ell - 1).items():
        vs, cs = path.vertices, path.colors
        adj_y = g.adjacency(y)
        cands = (x for x in adj_y if x in X) if len(adj_y) <= len(X) else (x for x in sorted(X) if x in adj_y)
        for x in cands:
            cxy = adj_y[x]
            cvx = adj_v[x]
            if x in vs or cxy in cs or cvx in cs or cxy == cvx:
                continue
            return RainbowWitness("cycle", vs + (x,), cs + (cxy, cvx))
    return None
