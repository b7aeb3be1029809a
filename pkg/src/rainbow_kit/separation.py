"""Separation and restriction counts, the auxiliary digraphs, and exact checks
of the counting inequalities built on them.

Every inequality here is compared with integers (cross-multiplied where an
average is involved); averages are reported as ``Fraction`` for display only.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .graph import (EdgeColoredGraph, RainbowWitness, WitnessError, color_degree, color_degree_within,
                    min_color_degree, replication, unique_neighborhood)
from .minimality import check_no_mono_3path
from .search import find_rainbow_cycle_exact, repeated_colors

log = logging.getLogger(__name__)


class PreconditionError(ValueError):
    """An operation was called on inputs outside its hypotheses."""


def _require_subset_of_nbhd(g: EdgeColoredGraph, v: int, X: Iterable[int]) -> frozenset[int]:
    X = frozenset(X)
    missing = X - g.adjacency(v).keys()
    if missing:
        raise PreconditionError(f"X must lie in N({v}); {sorted(missing)} do not")
    return X


def _require_edge_minimal(g: EdgeColoredGraph) -> None:
    if not check_no_mono_3path(g):
        raise PreconditionError("graph is not edge-minimal (it has a monochromatic 3-edge path); reduce it first")


def separating_colors(g: EdgeColoredGraph, v: int, X: Iterable[int], y: int) -> frozenset[int]:
    """Colors ``c({x, y})`` with ``x`` in ``N(y) & X`` and ``c({x, y}) != c({v, x})``."""
    X = _require_subset_of_nbhd(g, v, X)
    if y == v:
        raise PreconditionError("y must differ from v")
    adj_v = g.adjacency(v)
    return frozenset(c for x, c in g.adjacency(y).items() if x in X and c != adj_v[x])


def restricted_colors(g: EdgeColoredGraph, v: int, X: Iterable[int], y: int) -> frozenset[int]:
    """Separating colors that ``y`` sees on no edge leaving ``X``."""
    X = frozenset(X)
    sep = separating_colors(g, v, X, y)
    outside = {c for w, c in g.adjacency(y).items() if w not in X}
    return sep - outside


def sigma(g, v, X, y) -> int:
    return len(separating_colors(g, v, X, y))


def rho(g, v, X, y) -> int:
    return len(restricted_colors(g, v, X, y))


# -- digraphs --------------------------------------------------------------

@dataclass(frozen=True)
class Digraph:
    vertices: frozenset[int]
    arcs: frozenset[tuple[int, int]]
    out_nbrs: dict[int, frozenset[int]] = field(compare=False, repr=False)
    in_nbrs: dict[int, frozenset[int]] = field(compare=False, repr=False)

    @classmethod
    def from_arcs(cls, vertices: Iterable[int], arcs: Iterable[tuple[int, int]]) -> Digraph:
        vertices = frozenset(vertices)
        arcs = frozenset(arcs)
        out: dict[int, set[int]] = {}
        inn: dict[int, set[int]] = {}
        for a, b in arcs:
            if a not in vertices or b not in vertices:
                raise ValueError(f"arc ({a}, {b}) leaves the vertex set")
            out.setdefault(a, set()).add(b)
            inn.setdefault(b, set()).add(a)
        return cls(vertices, arcs,
                   {k: frozenset(s) for k, s in out.items()},
                   {k: frozenset(s) for k, s in inn.items()})

    def out_degree(self, x: int) -> int:
        return len(self.out_nbrs.get(x, ()))

    def in_degree(self, y: int) -> int:
        return len(self.in_nbrs.get(y, ()))

    def __len__(self) -> int:
        return len(self.arcs)


def build_digraph_D(g: EdgeColoredGraph, v: int, X: Iterable[int], Y: Iterable[int]) -> Digraph:
    """Arcs ``(x, y)``, ``x`` in X, ``y`` in Y, for edges with ``c({x, y}) == c({v, x})``."""
    X = _require_subset_of_nbhd(g, v, X)
    Y = frozenset(Y)
    if not Y:
        raise PreconditionError("Y must be nonempty")
    if v in Y:
        raise PreconditionError("Y must not contain v")
    adj_v = g.adjacency(v)
    arcs = [(x, y) for x in X for y, c in g.adjacency(x).items() if y in Y and c == adj_v[x]]
    return Digraph.from_arcs(X | Y, arcs)


def build_neighborhood_digraph(g: EdgeColoredGraph, z: int) -> Digraph:
    """Digraph on ``N(z)``: arc ``(x, y)`` for an edge inside ``N(z)`` when ``y`` is in
    ``N_1(z)`` and ``c({x, z}) == c({x, y})``."""
    adj_z = g.adjacency(z)
    uniq = unique_neighborhood(g, z)
    arcs = [(x, y) for x in adj_z for y, c in g.adjacency(x).items()
            if y in uniq and c == adj_z[x]]
    return Digraph.from_arcs(adj_z.keys(), arcs)


def build_digraph_F(g: EdgeColoredGraph, z: int, X_plus: Iterable[int]) -> Digraph:
    """Arcs ``(x, y)``, ``x`` in ``X_plus``, for every edge with ``c({x, y}) != c({x, z})``."""
    X_plus = _require_subset_of_nbhd(g, z, X_plus)
    adj_z = g.adjacency(z)
    arcs = [(x, y) for x in X_plus for y, c in g.adjacency(x).items() if c != adj_z[x]]
    return Digraph.from_arcs(range(g.n), arcs)


# -- averaging bound -------------------------------------------------------

@dataclass(frozen=True)
class SeparationRecord:
    y: int
    sigma: int
    rho: int
    separating: frozenset[int]
    restricted: frozenset[int]
    in_degree: int


@dataclass(frozen=True)
class SeparationReport:
    v: int
    X: tuple[int, ...]
    Y: tuple[int, ...]
    records: tuple[SeparationRecord, ...]
    delta: int
    R: int
    n: int
    unique_in_X: int
    sigma_total: int
    rho_total: int
    holds: bool

    @property
    def sigma_avg(self) -> Fraction:
        return Fraction(self.sigma_total, len(self.Y))

    @property
    def rho_avg(self) -> Fraction:
        return Fraction(self.rho_total, len(self.Y))

    @property
    def rhs(self) -> Fraction:
        return (self.delta + len(self.X) - self.n
                - Fraction((self.R - 1) * self.unique_in_X, len(self.Y)))

    def to_dict(self) -> dict:
        def frac(f: Fraction) -> dict:
            return {"num": f.numerator, "den": f.denominator}
        return {
            "v": self.v,
            "X": list(self.X),
            "Y": list(self.Y),
            "delta": self.delta,
            "R": self.R,
            "n": self.n,
            "unique_in_X": self.unique_in_X,
            "records": [{"y": r.y, "sigma": r.sigma, "rho": r.rho,
                         "separating": sorted(r.separating), "restricted": sorted(r.restricted),
                         "in_degree": r.in_degree} for r in self.records],
            "sigma_avg": frac(self.sigma_avg),
            "rho_avg": frac(self.rho_avg),
            "rhs": frac(self.rhs),
            "holds": self.holds,
        }


def separation_report(g: EdgeColoredGraph, v: int, X: Iterable[int], Y: Iterable[int]) -> SeparationReport:
    """Per-vertex separation data and the averaging comparison, without hypothesis checks."""
    X = _require_subset_of_nbhd(g, v, X)
    Y = tuple(sorted(set(Y)))
    if not Y:
        raise PreconditionError("Y must be nonempty")
    if v in Y:
        raise PreconditionError("Y must not contain v")
    D = build_digraph_D(g, v, X, Y)
    records = []
    for y in Y:
        sep = separating_colors(g, v, X, y)
        res = restricted_colors(g, v, X, y)
        records.append(SeparationRecord(y, len(sep), len(res), sep, res, D.in_degree(y)))
    delta = min_color_degree(g)
    R = replication(g)[0] if g.num_edges else 1
    unique_in_X = len(X & unique_neighborhood(g, v))
    s_tot = sum(r.sigma for r in records)
    r_tot = sum(r.rho for r in records)
    holds = s_tot >= r_tot and r_tot >= len(Y) * (delta + len(X) - g.n) - (R - 1) * unique_in_X
    return SeparationReport(v, tuple(sorted(X)), Y, tuple(records), delta, R, g.n,
                            unique_in_X, s_tot, r_tot, holds)


def check_averaging_bound(g: EdgeColoredGraph, v: int, X: Iterable[int], Y: Iterable[int]) -> SeparationReport:
    """Average separation/restriction over ``Y`` against
    ``delta + |X| - n - (R - 1) |X & N_1(v)| / |Y|``; needs an edge-minimal graph."""
    _require_edge_minimal(g)
    return separation_report(g, v, X, Y)


# -- separation cap --------------------------------------------------------

def _certify_no_rainbow_cycle(g: EdgeColoredGraph, ell: int) -> None:
    hit = find_rainbow_cycle_exact(g, ell)
    if hit is not None:
        raise PreconditionError(f"graph has a rainbow {ell}-cycle {list(hit.vertices)}")


def check_sigma_cap(g: EdgeColoredGraph, ell: int, v: int, X: Iterable[int],
                    c_rep: Iterable[int] | None,
                    Y: Sequence[tuple[int, RainbowWitness | Sequence[int]]]) -> dict[int, bool]:
    """For each ``(y, path)``: is ``sigma_{v,X}(y) <= 3 ell``?

    ``path`` must be an ``(ell-1)``-vertex rainbow ``v..y`` path avoiding the
    colors repeated on ``v``-``X`` edges. Hypotheses (edge-minimal, no
    rainbow ``ell``-cycle) are certified here, not trusted.
    """
    X = _require_subset_of_nbhd(g, v, X)
    _require_edge_minimal(g)
    _certify_no_rainbow_cycle(g, ell)
    need = repeated_colors(g, v, X)
    c_rep = need if c_rep is None else frozenset(c_rep)
    if not need <= c_rep:
        raise PreconditionError(f"C_rep must contain the repeated colors {sorted(need)}")
    out = {}
    for y, path in Y:
        if not isinstance(path, RainbowWitness):
            path = RainbowWitness.from_vertices(g, "path", path)
        path.validate(g)
        vs = path.vertices
        if path.kind != "path" or len(vs) != ell - 1 or vs[0] != v or vs[-1] != y:
            raise WitnessError(f"witness for y={y} must be an {ell - 1}-vertex path from {v} to {y}, got {list(vs)}")
        if c_rep.intersection(path.colors):
            raise WitnessError(f"witness for y={y} uses a color of C_rep: {list(path.colors)}")
        out[y] = sigma(g, v, X, y) <= 3 * ell
    return out


def check_maxdeg_bound(g: EdgeColoredGraph, ell: int) -> bool | None:
    """``delta < n/2`` or ``Delta < delta + 4R + 3 ell``; None when the hypotheses fail
    (not edge-minimal, has a rainbow ``ell``-cycle, or ``delta < 5R + 27 ell``)."""
    if g.num_edges == 0 or not check_no_mono_3path(g):
        log.info("maxdeg bound skipped: graph is empty or not edge-minimal")
        return None
    delta = min_color_degree(g)
    R = replication(g)[0]
    if delta < 5 * R + 27 * ell:
        log.info("maxdeg bound skipped: delta=%d < 5R + 27 ell = %d", delta, 5 * R + 27 * ell)
        return None
    if find_rainbow_cycle_exact(g, ell) is not None:
        log.info("maxdeg bound skipped: rainbow %d-cycle present", ell)
        return None
    ok = 2 * delta < g.n or g.max_degree() < delta + 4 * R + 3 * ell
    log.info("maxdeg bound: delta=%d R=%d Delta=%d -> %s", delta, R, g.max_degree(), ok)
    return ok


def check_triangle_reach_bound(g: EdgeColoredGraph, ell: int, triangle: Sequence[int], v: int,
                               c_T: Iterable[int], reach_size: int) -> bool:
    """``2 |Y| >= 3 (delta - |C_T| - 4 ell)`` for the reach set ``Y`` of a triangle vertex.

    The caller supplies ``|Y|``; hypotheses (edge-minimal, no rainbow
    ``ell``-cycle, ``C_T`` disjoint from the triangle's colors) are certified.
    """
    _require_edge_minimal(g)
    _certify_no_rainbow_cycle(g, ell)
    a, b, c = triangle
    if v not in triangle:
        raise PreconditionError("v must be a triangle vertex")
    tri_colors = {g.color(a, b), g.color(b, c), g.color(a, c)}
    c_T = frozenset(c_T)
    if c_T & tri_colors:
        raise PreconditionError("C_T must avoid the triangle's colors")
    return 2 * reach_size >= 3 * (min_color_degree(g) - len(c_T) - 4 * ell)


def neighborhood_digraph_facts(g: EdgeColoredGraph, z: int) -> dict[str, bool]:
    """The three structural facts about the ``N(z)`` digraph on an edge-minimal graph.

    (iii) is only asserted when the graph has no rainbow triangle.
    """
    D = build_neighborhood_digraph(g, z)
    uniq = unique_neighborhood(g, z)
    R = replication(g)[0]
    closed = set(g.adjacency(z)) | {z}
    # |N(z)| >= deg^c(z) + (largest color class at z) - 1; this is R - 1 at the replication witness
    top_z = max(g.color_counts(z).values(), default=1)
    obs_i = all(x in uniq for x, _ in D.arcs)
    obs_ii = all(D.out_degree(x) <= R - 1 for x in uniq)
    if find_rainbow_cycle_exact(g, 3) is None:
        obs_iii = all(color_degree_within(g, y, closed) <= 1 + D.in_degree(y) for y in uniq)
    else:
        obs_iii = True
    sums = sum(D.in_degree(y) for y in uniq) == len(D) == sum(D.out_degree(x) for x in D.vertices)
    return {"i": obs_i, "ii": obs_ii, "iii": obs_iii, "arc_sums": sums,
            "vertex_count": len(D.vertices) >= color_degree(g, z) + top_z - 1}
