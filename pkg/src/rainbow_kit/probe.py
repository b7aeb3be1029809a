"""Simulated-annealing search for colorings with large minimum color degree
and no rainbow ``ell``-cycle.

The host is the vertex pair set of ``K_n``. A state assigns each pair either
a color or ``ABSENT`` (no edge), so the search ranges over all spanning
subgraphs and their colorings. States are compared feasibility first: fewer
rainbow ``ell``-cycles wins, then larger minimum color degree. A worse move is
accepted with probability ``exp(-gap / T)``, where ``gap`` is measured on the
first component in which the two states differ.
"""
from __future__ import annotations

import math
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .graph import EdgeColoredGraph
from .search import count_rainbow_cycles

ABSENT = -1
LOCAL_RECOUNT_MAX_ELL = 7
CROSSCHECK_EVERY = 1000


@dataclass
class ProbeConfig:
    fresh_prob: float = 0.05
    absent_prob: float = 0.15
    t_start: float = 2.0
    t_end: float = 0.02
    stagnation: int = 20000
    crosscheck_every: int = CROSSCHECK_EVERY


@dataclass
class ProbeState:
    ell: int
    n: int
    seed: int
    coloring: dict[tuple[int, int], int]
    count: int = 0
    delta: int = 0
    temperature: float = 0.0
    step: int = 0
    accepted: int = 0
    restarts: int = 0
    best_delta: int | None = None
    best_coloring: dict[tuple[int, int], int] | None = None
    best_step: int | None = None
    crosschecks: int = 0

    @property
    def objective(self) -> tuple[int, int]:
        """Current state's rank key; larger is better (fewer cycles first, then larger delta)."""
        return (-self.count, self.delta)

    @property
    def feasible(self) -> bool:
        """Whether a zero-cycle coloring has been seen (the best-so-far is feasible)."""
        return self.best_coloring is not None

    def graph(self) -> EdgeColoredGraph:
        return _to_graph(self.n, self.coloring)

    def best_graph(self) -> EdgeColoredGraph | None:
        return None if self.best_coloring is None else _to_graph(self.n, self.best_coloring)

    def to_dict(self) -> dict:
        best = self.best_graph()
        return {
            "ell": self.ell, "n": self.n, "seed": self.seed, "steps": self.step,
            "accepted": self.accepted, "restarts": self.restarts, "crosschecks": self.crosschecks,
            "feasible": self.feasible, "best_delta": self.best_delta, "best_step": self.best_step,
            "final": {"delta": self.delta, "rainbow_cycles": self.count},
            "best_edges": [list(e) for e in best.colored_edges()] if best is not None else None,
        }


def _to_graph(n: int, coloring: dict[tuple[int, int], int]) -> EdgeColoredGraph:
    return EdgeColoredGraph(n, ((u, v, c) for (u, v), c in coloring.items() if c != ABSENT))


class _Chain:
    """Mutable adjacency plus per-vertex color counters for one annealing chain."""

    def __init__(self, n: int, ell: int, coloring: dict[tuple[int, int], int]):
        self.n = n
        self.ell = ell
        self.coloring = dict(coloring)
        self.adj: list[dict[int, int]] = [{} for _ in range(n)]
        self.counts = [Counter() for _ in range(n)]
        for (u, v), c in self.coloring.items():
            if c != ABSENT:
                self._add(u, v, c)
        self.count = self.full_count()

    def _add(self, u, v, c):
        self.adj[u][v] = c
        self.adj[v][u] = c
        self.counts[u][c] += 1
        self.counts[v][c] += 1

    def _remove(self, u, v, c):
        del self.adj[u][v]
        del self.adj[v][u]
        for w in (u, v):
            cw = self.counts[w]
            cw[c] -= 1
            if not cw[c]:
                del cw[c]

    def delta(self) -> int:
        return min(len(c) for c in self.counts)

    def full_count(self) -> int:
        return count_rainbow_cycles(_to_graph(self.n, self.coloring), self.ell)

    def through(self, u: int, v: int, c: int) -> int:
        """Rainbow ``ell``-cycles that use the edge ``{u, v}`` colored ``c``
        (with ``{u, v}`` itself not in the adjacency)."""
        if c == ABSENT:
            return 0
        adj = self.adj
        if self.ell == 3:
            au, av = adj[u], adj[v]
            if len(au) > len(av):
                au, av = av, au
            total = 0
            for w, cu in au.items():
                cv = av.get(w)
                if cv is not None and cu != cv and cu != c and cv != c:
                    total += 1
            return total
        # rainbow u..v paths with ell - 1 edges avoiding color c
        target = self.ell - 1
        path = {u}
        used = {c}
        total = 0

        def grow(x: int, depth: int) -> None:
            nonlocal total
            for w, cw in adj[x].items():
                if cw in used:
                    continue
                if depth + 1 == target:
                    if w == v:
                        total += 1
                    continue
                if w in path or w == v:
                    continue
                path.add(w)
                used.add(cw)
                grow(w, depth + 1)
                path.discard(w)
                used.discard(cw)

        grow(u, 0)
        return total

    def recolor(self, pair: tuple[int, int], new: int) -> int:
        """Apply ``pair -> new`` and return the new rainbow-cycle count."""
        u, v = pair
        old = self.coloring[pair]
        if old != ABSENT:
            self._remove(u, v, old)
        if self.ell <= LOCAL_RECOUNT_MAX_ELL:
            self.count += self.through(u, v, new) - self.through(u, v, old)
        if new != ABSENT:
            self._add(u, v, new)
        self.coloring[pair] = new
        if self.ell > LOCAL_RECOUNT_MAX_ELL:
            self.count = self.full_count()
        return self.count


def initial_coloring(n: int, ell: int, init: str, rng: random.Random) -> dict[tuple[int, int], int]:
    pairs = list(combinations(range(n), 2))
    if init == "bipartite":
        a = n // 2
        coloring = {}
        color = 0
        for u, v in pairs:
            if u < a <= v:
                coloring[(u, v)] = color
                color += 1
            else:
                coloring[(u, v)] = ABSENT
        return coloring
    if init == "random":
        return {p: (rng.randrange(n) if rng.random() < 0.5 else ABSENT) for p in pairs}
    raise ValueError(f"unknown init {init!r}")


def run_chain(ell: int, n: int, budget: int, seed: int, init: str = "bipartite",
              config: ProbeConfig | None = None) -> ProbeState:
    """One annealing chain of ``budget`` recoloring moves."""
    if n < ell:
        raise ValueError(f"n = {n} is smaller than ell = {ell}")
    cfg = config or ProbeConfig()
    rng = random.Random(seed)
    chain = _Chain(n, ell, initial_coloring(n, ell, init, rng))
    pairs = list(chain.coloring)
    next_color = max(chain.coloring.values()) + 1
    state = ProbeState(ell, n, seed, chain.coloring)
    state.count, state.delta = chain.count, chain.delta()
    cooling = (cfg.t_end / cfg.t_start) ** (1.0 / max(budget, 1))
    temp = cfg.t_start
    last_gain = 0

    def record_best(step: int) -> None:
        if chain.count == 0 and (state.best_delta is None or chain_delta > state.best_delta):
            state.best_delta = chain_delta
            state.best_coloring = dict(chain.coloring)
            state.best_step = step

    chain_delta = state.delta
    record_best(0)
    for step in range(1, budget + 1):
        pair = pairs[rng.randrange(len(pairs))]
        old = chain.coloring[pair]
        r = rng.random()
        if r < cfg.absent_prob:
            new = ABSENT
        elif r < cfg.absent_prob + cfg.fresh_prob:
            new = next_color
        else:
            new = rng.randrange(next_color)
        if new != old:
            before = (chain.count, chain_delta)
            count = chain.recolor(pair, new)
            delta = chain.delta()
            if count != before[0]:
                gap = count - before[0]
            else:
                gap = before[1] - delta
            if gap <= 0 or rng.random() < math.exp(-gap / temp):
                chain_delta = delta
                state.accepted += 1
                if new == next_color:
                    next_color += 1
                prev_best = state.best_delta
                record_best(step)
                if state.best_delta != prev_best:
                    last_gain = step
            else:
                chain.recolor(pair, old)
        temp *= cooling
        if cfg.crosscheck_every and step % cfg.crosscheck_every == 0:
            full = chain.full_count()
            if full != chain.count:
                raise RuntimeError(f"incremental cycle count {chain.count} != recount {full} at step {step}")
            state.crosschecks += 1
        if cfg.stagnation and step - last_gain >= cfg.stagnation and state.best_coloring is not None:
            chain = _Chain(n, ell, state.best_coloring)
            chain_delta = chain.delta()
            temp = cfg.t_start * cooling ** step
            last_gain = step
            state.restarts += 1
    state.coloring = chain.coloring
    state.count = chain.count
    state.delta = chain_delta
    state.temperature = temp
    state.step = budget
    if state.best_coloring is not None:
        best_count = count_rainbow_cycles(state.best_graph(), ell)
        if best_count != 0:
            raise RuntimeError(f"best coloring has {best_count} rainbow {ell}-cycles")
    return state


def _chain_job(args):
    return run_chain(*args)


def probe_counterexample(ell: int, n: int, budget: int, seed: int, init: str = "bipartite",
                         chains: int = 1, threads: int = 1,
                         config: ProbeConfig | None = None) -> ProbeState:
    """Run independent chains (seeds ``seed, seed+1, ...``) and keep the best feasible one.

    Ties go to the lowest chain index, so the result is the same for any
    ``threads``.
    """
    jobs = [(ell, n, budget, seed + i, init, config) for i in range(chains)]
    if threads > 1 and chains > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            states = list(pool.map(_chain_job, jobs))
    else:
        states = [run_chain(*job) for job in jobs]
    best = states[0]
    for s in states[1:]:
        if s.best_delta is not None and (best.best_delta is None or s.best_delta > best.best_delta):
            best = s
    return best
