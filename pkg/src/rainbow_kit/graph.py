"""Edge-colored simple graphs, per-vertex color statistics and rainbow witnesses."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence


class GraphError(ValueError):
    """Raised when a graph cannot be constructed or a query is out of range."""


class WitnessError(ValueError):
    """Raised when a vertex sequence does not certify what it claims to."""


class EdgeColoredGraph:
    """An immutable simple graph on vertices ``0..n-1`` with one color per edge.

    Neighbors of each vertex are kept in increasing id order. The grouping of
    a vertex's neighbors by color, used for ``N_alpha(v)``, is built the first
    time that vertex is asked for it.
    """

    __slots__ = ("n", "origin", "_adj", "_by_color", "_counts", "_edges", "_palette", "_cache")

    def __init__(self, n: int, colored_edges: Iterable[tuple[int, int, int]] = (),
                 origin: Sequence[int] | None = None):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        normalized = []
        for u, v, c in colored_edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}, {c}): vertex out of range 0..{n - 1}")
            if u == v:
                raise GraphError(f"edge ({u}, {v}, {c}): loop")
            if c < 0:
                raise GraphError(f"edge ({u}, {v}, {c}): color ids must be non-negative")
            normalized.append((u, v, c) if u < v else (v, u, c))
        normalized.sort()
        for a, b in zip(normalized, normalized[1:]):
            if a[0] == b[0] and a[1] == b[1]:
                raise GraphError(f"edge ({b[0]}, {b[1]}, {b[2]}): duplicate edge")
        self._setup(n, tuple(normalized), origin)

    @classmethod
    def _trusted(cls, n: int, edges: Sequence[tuple[int, int, int]],
                 origin: Sequence[int] | None = None) -> EdgeColoredGraph:
        """Build from edges already validated, normalized (``u < v``) and sorted."""
        g = cls.__new__(cls)
        g._setup(n, tuple(edges), origin)
        return g

    def _setup(self, n, edges, origin):
        self.n = n
        adj: list[dict[int, int]] = [{} for _ in range(n)]
        for u, v, c in edges:
            adj[u][v] = c
            adj[v][u] = c
        self._adj = adj
        # grouped-by-color views and color counts are built per vertex on first use
        self._by_color: list[dict[int, tuple[int, ...]] | None] = [None] * n
        self._counts: list[Counter | None] = [None] * n
        self._edges = edges
        self._palette = frozenset(c for _, _, c in edges)
        self._cache: dict = {}
        self.origin = tuple(origin) if origin is not None else None

    # -- basic structure -------------------------------------------------

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range 0..{self.n - 1}")

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    @property
    def palette(self) -> frozenset[int]:
        return self._palette

    @property
    def palette_size(self) -> int:
        return len(self._palette)

    def colored_edges(self) -> tuple[tuple[int, int, int], ...]:
        """All edges as ``(u, v, color)`` with ``u < v``, sorted by ``(u, v)``."""
        return self._edges

    def edges(self) -> Iterator[tuple[int, int]]:
        return ((u, v) for u, v, _ in self._edges)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self._adj[u]

    def color(self, u: int, v: int) -> int:
        try:
            return self._adj[u][v]
        except (KeyError, IndexError):
            raise GraphError(f"({u}, {v}) is not an edge") from None

    def adjacency(self, v: int) -> Mapping[int, int]:
        """Neighbor -> edge color, in increasing neighbor order."""
        self._check(v)
        return self._adj[v]

    def neighbors(self, v: int) -> Iterable[int]:
        self._check(v)
        return self._adj[v].keys()

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._adj[v])

    def color_classes(self, v: int) -> Mapping[int, tuple[int, ...]]:
        """Color -> neighbors of ``v`` joined by that color (the sets ``N_alpha(v)``)."""
        self._check(v)
        groups = self._by_color[v]
        if groups is None:
            lists: dict[int, list[int]] = {}
            for w, c in self._adj[v].items():
                lists.setdefault(c, []).append(w)
            groups = self._by_color[v] = {c: tuple(ws) for c, ws in lists.items()}
        return groups

    def color_counts(self, v: int) -> Counter:
        """Color -> ``|N_alpha(v)|``. Treat as read-only."""
        self._check(v)
        counts = self._counts[v]
        if counts is None:
            counts = self._counts[v] = Counter(self._adj[v].values())
        return counts

    def color_degree(self, v: int) -> int:
        return len(self.color_counts(v))

    def alpha_neighborhood(self, v: int, alpha: int) -> tuple[int, ...]:
        return self.color_classes(v).get(alpha, ())

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoredGraph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"EdgeColoredGraph(n={self.n}, m={self.num_edges}, palette={self.palette_size})"


def build_graph(n: int, colored_edges: Iterable[tuple[int, int, int]]) -> EdgeColoredGraph:
    return EdgeColoredGraph(n, colored_edges)


# -- color statistics ------------------------------------------------------

def color_degree(g: EdgeColoredGraph, v: int) -> int:
    return g.color_degree(v)


def color_degree_within(g: EdgeColoredGraph, v: int, U: Iterable[int]) -> int:
    adj = g.adjacency(v)
    return len({adj[u] for u in U if u in adj})


def color_degrees(g: EdgeColoredGraph) -> list[int]:
    cached = g._cache.get("cdeg")
    if cached is None:
        cached = g._cache["cdeg"] = tuple(len(set(g.adjacency(v).values())) for v in range(g.n))
    return list(cached)


def min_color_degree(g: EdgeColoredGraph) -> int:
    if g.n < 1:
        raise GraphError("min color degree of the empty graph is undefined")
    return min(color_degrees(g))


def unique_neighborhood(g: EdgeColoredGraph, v: int) -> frozenset[int]:
    """Neighbors ``u`` of ``v`` whose edge color appears only once at ``v``."""
    return frozenset(ws[0] for ws in g.color_classes(v).values() if len(ws) == 1)


def replication(g: EdgeColoredGraph) -> tuple[int, tuple[int, int]]:
    """Largest single-color neighborhood size ``R`` and a witness ``(z, zeta)``.

    Ties go to the smallest vertex, then the smallest color.
    """
    if g.num_edges == 0:
        raise GraphError("no colors present")
    cached = g._cache.get("replication")
    if cached is not None:
        return cached
    best = (0, (0, 0))
    for v in range(g.n):
        counts = g.color_counts(v)
        top = max(counts.values(), default=0)
        if top > best[0]:
            best = (top, (v, min(c for c, k in counts.items() if k == top)))
    g._cache["replication"] = best
    return best


@dataclass(frozen=True)
class ColorStats:
    color_degree: tuple[int, ...]
    unique_nbhd: tuple[frozenset[int], ...]
    replication: int
    witness: tuple[int, int] | None
    graph: EdgeColoredGraph

    def alpha_nbhd(self, v: int, alpha: int) -> tuple[int, ...]:
        return self.graph.alpha_neighborhood(v, alpha)

    @property
    def min_color_degree(self) -> int:
        return min(self.color_degree)


def color_stats(g: EdgeColoredGraph) -> ColorStats:
    R, witness = replication(g) if g.num_edges else (0, None)
    return ColorStats(
        color_degree=tuple(color_degrees(g)),
        unique_nbhd=tuple(unique_neighborhood(g, v) for v in range(g.n)),
        replication=R,
        witness=witness,
        graph=g,
    )


def induced_subgraph(g: EdgeColoredGraph, A: Iterable[int]) -> EdgeColoredGraph:
    """Subgraph induced on ``A``, relabeled ``0..|A|-1`` in increasing id order.

    The original id of new vertex ``i`` is ``result.origin[i]``.
    """
    keep = sorted(set(A))
    for v in keep:
        g._check(v)
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v], c) for u, v, c in g.colored_edges()
             if u in index and v in index]
    return EdgeColoredGraph._trusted(len(keep), edges, origin=keep)


# -- rainbow witnesses -----------------------------------------------------

@dataclass(frozen=True)
class RainbowWitness:
    """A rainbow path or cycle given as its vertex sequence and edge colors."""

    kind: str
    vertices: tuple[int, ...]
    colors: tuple[int, ...]

    @classmethod
    def from_vertices(cls, g: EdgeColoredGraph, kind: str, vertices: Sequence[int]) -> RainbowWitness:
        vs = tuple(vertices)
        pairs = list(zip(vs, vs[1:]))
        if kind == "cycle" and len(vs) > 2:
            pairs.append((vs[-1], vs[0]))
        colors = []
        for a, b in pairs:
            if not g.has_edge(a, b):
                raise WitnessError(f"{kind} {list(vs)}: ({a}, {b}) is not an edge")
            colors.append(g.color(a, b))
        w = cls(kind, vs, tuple(colors))
        w.validate(g)
        return w

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        pairs = list(zip(vs, vs[1:]))
        if self.kind == "cycle":
            pairs.append((vs[-1], vs[0]))
        return pairs

    def validate(self, g: EdgeColoredGraph) -> None:
        if self.kind not in ("path", "cycle"):
            raise WitnessError(f"unknown witness kind {self.kind!r}")
        vs = self.vertices
        if not vs:
            raise WitnessError("empty witness")
        if len(set(vs)) != len(vs):
            raise WitnessError(f"{self.kind} {list(vs)} repeats a vertex")
        if self.kind == "cycle" and len(vs) < 3:
            raise WitnessError(f"cycle {list(vs)} has fewer than 3 vertices")
        pairs = self.edges()
        if len(pairs) != len(self.colors):
            raise WitnessError(f"{self.kind} {list(vs)}: expected {len(pairs)} colors, got {len(self.colors)}")
        for (a, b), c in zip(pairs, self.colors):
            if not g.has_edge(a, b):
                raise WitnessError(f"{self.kind} {list(vs)}: ({a}, {b}) is not an edge")
            if g.color(a, b) != c:
                raise WitnessError(f"{self.kind} {list(vs)}: edge ({a}, {b}) has color {g.color(a, b)}, not {c}")
        if len(set(self.colors)) != len(self.colors):
            raise WitnessError(f"{self.kind} {list(vs)} is not rainbow: colors {list(self.colors)}")

    def is_valid(self, g: EdgeColoredGraph) -> bool:
        try:
            self.validate(g)
        except WitnessError:
            return False
        return True

    def to_dict(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices), "colors": list(self.colors)}
