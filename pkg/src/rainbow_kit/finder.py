"""Constructive extraction of a rainbow cycle along the two-case argument.

Pipeline, on the edge-minimal reduction ``h`` of the input:

* fix ``(z, zeta)`` with ``|N_zeta(z)| = R`` and a set ``X`` of ``delta - 1``
  neighbors of ``z`` whose edges to ``z`` carry distinct colors other than zeta;
* Case 1 (some edge inside ``X`` is not colored zeta): grow greedy rainbow
  reach layers from ``z`` avoiding the repeated colors of ``X+ = X | N_zeta(z)``
  and close a layer-``(ell-1)`` path through ``X+``;
* Case 2 (every edge inside ``X`` is colored zeta): split ``Y = V - z - X`` into
  the low-color part ``Y_H``, the double-D part ``Y_D`` and the rest ``Y_0``,
  then walk a rainbow path alternating between ``Y_0`` and ``X`` and close it
  back to ``z``;
* if the chosen case runs dry, optionally fall back to the exact oracle.

Neither case backtracks; under ``2 delta >= n + 1`` and ``n > 432 ell`` the
counting argument says they cannot run dry.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable

from .graph import EdgeColoredGraph, RainbowWitness, min_color_degree, replication
from .minimality import edge_minimal_reduce
from .search import (EXACT_REACH_CAP, close_cycle_from_reach, find_rainbow_cycle_exact,
                     layered_reach, repeated_colors)

log = logging.getLogger(__name__)

FALLBACK_CAP = EXACT_REACH_CAP


@dataclass
class ExtensionStep:
    side: str
    chosen: int | None
    feasible_vertices: int
    feasible_colors: int
    lower_bound: int

    @property
    def bound_ok(self) -> bool:
        return self.feasible_colors >= self.lower_bound

    def to_dict(self) -> dict:
        return {"side": self.side, "chosen": self.chosen, "feasible_vertices": self.feasible_vertices,
                "feasible_colors": self.feasible_colors, "lower_bound": self.lower_bound}


@dataclass
class FinderTrace:
    ell: int
    n: int
    delta: int = 0
    R: int = 0
    z: int | None = None
    zeta: int | None = None
    X: tuple[int, ...] = ()
    case: str | None = None
    outcome: str = "exhausted"
    fallback_used: bool = False
    sizes: dict[str, int] = field(default_factory=dict)
    sets: dict[str, list[int]] = field(default_factory=dict)
    steps: list[ExtensionStep] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    witness: RainbowWitness | None = None

    @property
    def hypotheses_hold(self) -> bool:
        return 2 * self.delta >= self.n + 1 and self.n >= 432 * self.ell + 1

    def to_dict(self) -> dict:
        return {
            "ell": self.ell, "n": self.n, "delta": self.delta, "R": self.R,
            "z": self.z, "zeta": self.zeta, "X_size": len(self.X),
            "case": self.case, "outcome": self.outcome, "fallback_used": self.fallback_used,
            "hypotheses_hold": self.hypotheses_hold,
            "sizes": dict(self.sizes),
            "sets": {k: list(v) for k, v in self.sets.items()},
            "steps": [s.to_dict() for s in self.steps],
            "notes": list(self.notes),
            "witness": self.witness.to_dict() if self.witness else None,
        }


def choose_X(h: EdgeColoredGraph, z: int, zeta: int, size: int) -> tuple[int, ...]:
    """First neighbor of ``z`` (by id) for each color other than ``zeta``, ``size`` of them."""
    picked = []
    seen = {zeta}
    for x, c in h.adjacency(z).items():
        if len(picked) == size:
            break
        if c not in seen:
            seen.add(c)
            picked.append(x)
    return tuple(picked)


def _case1_edge(h: EdgeColoredGraph, X: Iterable[int], zeta: int) -> tuple[int, int] | None:
    Xs = set(X)
    for x in sorted(Xs):
        for y, c in h.adjacency(x).items():
            if y > x and y in Xs and c != zeta:
                return (x, y)
    return None


# -- Case 2 ------------------------------------------------------------------

@dataclass
class Case2Partition:
    z: int
    X: frozenset[int]
    Y: frozenset[int]
    Y_H: frozenset[int]
    Y_D: frozenset[int]
    Y0: frozenset[int]
    d_edges: frozenset[tuple[int, int]]
    h0: dict[int, dict[int, int]]

    def h0_color_degree(self, v: int) -> int:
        return len(set(self.h0.get(v, {}).values()))

    def describe_h0(self) -> dict:
        return {"vertices": len(self.X) + len(self.Y0),
                "edges": sum(len(a) for a in self.h0.values()) // 2}


def case2_partition(h: EdgeColoredGraph, z: int, zeta: int, X: Iterable[int], ell: int) -> Case2Partition:
    """``Y_H``: vertices of ``Y`` with at most ``5 ell / 2`` colors into ``X``;
    ``Y_D``: vertices of ``Y`` with two or more D-edges (``c({x, y}) == c({x, z})``);
    ``Y_0`` the rest; ``H_0`` the ``X``-``Y_0`` edges that are not D-edges."""
    X = frozenset(X)
    e0 = _case1_edge(h, X, zeta)
    if e0 is not None:
        raise ValueError(f"edge {e0} inside X is not colored zeta; this is Case 1")
    adj_z = h.adjacency(z)
    Y = frozenset(range(h.n)) - X - {z}
    d_edges = set()
    h_colors: dict[int, set[int]] = {y: set() for y in Y}
    d_deg = dict.fromkeys(Y, 0)
    for x in X:
        cz = adj_z[x]
        for y, c in h.adjacency(x).items():
            if y in Y:
                h_colors[y].add(c)
                if c == cz:
                    d_edges.add((x, y))
                    d_deg[y] += 1
    Y_H = frozenset(y for y in Y if 2 * len(h_colors[y]) <= 5 * ell)
    Y_D = frozenset(y for y in Y if d_deg[y] >= 2)
    Y0 = Y - Y_H - Y_D
    h0: dict[int, dict[int, int]] = {}
    for x in sorted(X):
        for y, c in h.adjacency(x).items():
            if y in Y0 and (x, y) not in d_edges:
                h0.setdefault(x, {})[y] = c
                h0.setdefault(y, {})[x] = c
    return Case2Partition(z, X, Y, Y_H, Y_D, Y0, frozenset(d_edges), h0)


@dataclass(frozen=True)
class PathState:
    vertices: tuple[int, ...]
    colors: tuple[int, ...]


def greedy_extend(h: EdgeColoredGraph, state: PathState, side: str,
                  part: Case2Partition) -> tuple[PathState | None, ExtensionStep]:
    """Append the smallest feasible vertex on ``side`` (``"Y0"`` or ``"X"``) along an ``H_0`` edge.

    Into ``X`` the new vertex must also have its ``z``-edge color off the path,
    so that it can close the cycle. The step record carries the number of
    feasible vertices and colors, and the counting lower bound on the latter.
    """
    last = state.vertices[-1]
    on_path = set(state.vertices)
    used = set(state.colors)
    nbrs = part.h0.get(last, {})
    adj_z = h.adjacency(part.z)
    feasible = []
    for w in sorted(nbrs):
        c = nbrs[w]
        if w in on_path or c in used:
            continue
        if side == "X" and adj_z[w] in used:
            continue
        feasible.append((w, c))
    deg = part.h0_color_degree(last)
    m = len(state.colors)
    if side == "Y0":
        bound = deg - m - len(on_path & part.Y0)
    else:
        bound = deg - 2 * m - len(on_path & part.X)
    step = ExtensionStep(side, feasible[0][0] if feasible else None, len(feasible),
                         len({c for _, c in feasible}), bound)
    if not feasible:
        return None, step
    w, c = feasible[0]
    return PathState(state.vertices + (w,), state.colors + (c,)), step


def _case2_start(h: EdgeColoredGraph, part: Case2Partition, zeta: int, ell: int,
                 trace: FinderTrace) -> PathState | None:
    z = part.z
    adj_z = h.adjacency(z)
    if ell % 2 == 1:
        for y0 in h.alpha_neighborhood(z, zeta):
            for x1, c in h.adjacency(y0).items():
                if x1 in part.X and c != zeta and c != adj_z[x1]:
                    trace.sets["start"] = [z, y0, x1]
                    return PathState((z, y0, x1), (zeta, c))
        trace.notes.append("no feasible (y0, x1) start")
        return None
    if not part.X:
        trace.notes.append("X is empty")
        return None
    x1 = min(part.X)
    trace.sets["start"] = [z, x1]
    return PathState((z, x1), (adj_z[x1],))


def _run_case2(h, z, zeta, X, ell, trace, record_sets):
    part = case2_partition(h, z, zeta, X, ell)
    trace.case = "Case2A" if ell % 2 == 1 else "Case2B"
    trace.sizes.update(Y=len(part.Y), Y_H=len(part.Y_H), Y_D=len(part.Y_D), Y0=len(part.Y0),
                       D_edges=len(part.d_edges), **{f"H0_{k}": v for k, v in part.describe_h0().items()})
    if record_sets:
        trace.sets.update(Y_H=sorted(part.Y_H), Y_D=sorted(part.Y_D), Y0=sorted(part.Y0))
    state = _case2_start(h, part, zeta, ell, trace)
    if state is None:
        return None
    while len(state.vertices) < ell:
        side = "Y0" if state.vertices[-1] in part.X else "X"
        state, step = greedy_extend(h, state, side, part)
        trace.steps.append(step)
        if state is None:
            trace.notes.append(f"greedy extension into {side} exhausted")
            return None
    return RainbowWitness.from_vertices(h, "cycle", state.vertices)


def _run_case1(h, z, zeta, X, ell, e0, trace, record_sets):
    trace.case = "Case1"
    X_plus = sorted(set(X) | set(h.alpha_neighborhood(z, zeta)))
    c_rep = repeated_colors(h, z, X_plus)
    reach = layered_reach(h, z, forbidden=c_rep, max_layer=ell - 1, mode="greedy")
    adj_z = h.adjacency(z)
    f_arcs = sum(len(h.adjacency(x)) - h.color_counts(x)[adj_z[x]] for x in X_plus)
    trace.sizes.update(X_plus=len(X_plus), C_rep=len(c_rep), Y=len(reach.layer(ell - 1)), F_arcs=f_arcs,
                       F_lower=len(X_plus) * (trace.delta - 1))
    trace.sizes.update({f"layer_{i}": len(reach.layer(i)) for i in reach.layers})
    trace.sets["e0"] = list(e0)
    if record_sets:
        trace.sets.update(X_plus=X_plus, C_rep=sorted(c_rep), Y=sorted(reach.layer(ell - 1)))
    hit = close_cycle_from_reach(h, z, X_plus, reach, ell, c_rep)
    if hit is None:
        trace.notes.append("no reach-layer path closes through X+")
    return hit


def find_rainbow_cycle(g: EdgeColoredGraph, ell: int, fallback: bool = True,
                       fallback_cap: int = FALLBACK_CAP,
                       record_sets: bool = False) -> tuple[RainbowWitness | None, FinderTrace]:
    """Look for a rainbow ``ell``-cycle by following the case analysis.

    Returns the witness (valid in ``g``) or None, and the trace. The exact
    oracle is consulted, on ``g`` itself, only when the case procedure runs
    dry, ``fallback`` is set and ``g.n <= fallback_cap``.
    """
    if ell < 3:
        raise ValueError(f"cycle length must be at least 3, got {ell}")
    trace = FinderTrace(ell=ell, n=g.n)
    hit = None
    h = edge_minimal_reduce(g)
    if h.num_edges == 0:
        trace.notes.append("graph has no edges")
    else:
        trace.delta = min_color_degree(h)
        trace.R, (z, zeta) = replication(h)
        trace.z, trace.zeta = z, zeta
        X = choose_X(h, z, zeta, max(trace.delta - 1, 0))
        trace.X = X
        trace.sizes["X"] = len(X)
        if record_sets:
            trace.sets["X"] = list(X)
        if len(X) < trace.delta - 1:
            trace.notes.append(f"hypothesis violation: only {len(X)} zeta-free colors at z, need {trace.delta - 1}")
        else:
            e0 = _case1_edge(h, X, zeta)
            if e0 is not None:
                hit = _run_case1(h, z, zeta, X, ell, e0, trace, record_sets)
            else:
                hit = _run_case2(h, z, zeta, X, ell, trace, record_sets)
    if hit is not None:
        trace.outcome = "found"
    elif fallback and g.n <= fallback_cap:
        trace.fallback_used = True
        hit = find_rainbow_cycle_exact(g, ell)
        trace.outcome = "fallback-found" if hit is not None else "none"
    if hit is not None:
        hit.validate(g)
    trace.witness = hit
    log.info("finder ell=%d n=%d case=%s outcome=%s", ell, g.n, trace.case, trace.outcome)
    return hit, trace
