"""Verification suites: the color-degree theorems at desk scale and every
counting inequality over generated corpora, with hypotheses certified per
instance and vacuous cases tallied separately."""
from __future__ import annotations

import random
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import combinations

from . import ecgio
from .constructions import boost_min_color_degree, random_colored_graph, rainbow_complete_bipartite
from .finder import _case1_edge, case2_partition, choose_X
from .graph import EdgeColoredGraph, GraphError, min_color_degree, replication
from .minimality import check_no_mono_3path, edge_minimal_reduce
from .search import find_rainbow_cycle_exact, layered_reach, repeated_colors
from .separation import (build_digraph_F, check_averaging_bound, check_maxdeg_bound, check_sigma_cap,
                         check_triangle_reach_bound, neighborhood_digraph_facts)

SCHEMA_VERSION = 1


def _instance_rng(seed: int, *tags) -> random.Random:
    return random.Random("/".join(str(t) for t in (seed,) + tags))


def sample_boosted(n: int, target: int, rng: random.Random, max_tries: int = 20) -> EdgeColoredGraph:
    """A random coloring of a random graph, boosted to minimum color degree ``target``.

    Edge density and palette size are drawn per instance. A draw whose boost is
    impossible (some vertex saturated with repeated colors) is replaced by a
    sparser one; the last resort is the empty graph, which always boosts.
    """
    for attempt in range(max_tries):
        p = rng.uniform(0.2, 1.0) * 0.5 ** attempt
        palette = rng.randint(1, max(1, n * (n - 1) // 2))
        g = random_colored_graph(n, p, palette, rng.getrandbits(32))
        try:
            return boost_min_color_degree(g, target, rng.getrandbits(32))
        except GraphError:
            continue
    return boost_min_color_degree(EdgeColoredGraph(n), target, rng.getrandbits(32))


def _map(fn, jobs, threads: int) -> list:
    """Ordered map, across worker processes when ``threads > 1``."""
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, jobs))
    return [fn(job) for job in jobs]


def _theorem_row(job) -> dict:
    ell, n, samples, seed = job
    rng = _instance_rng(seed, "theorem", ell, n)
    target = (n + 2) // 2
    hits = 0
    failures = []
    for _ in range(samples):
        g = sample_boosted(n, target, rng)
        if find_rainbow_cycle_exact(g, ell) is not None:
            hits += 1
        elif len(failures) < 3:
            failures.append(ecgio.dumps(g))
    return {"n": n, "samples": samples, "with_cycle": hits,
            "fraction": hits / samples if samples else None,
            "claimed": ell == 3 or n >= 432 * ell + 1, "counterexamples": failures}


def verify_theorem_small(ell: int, n_range, samples: int, seed: int, threads: int = 1) -> dict:
    """Share of boosted instances (``2 delta >= n + 1``) holding a rainbow ``ell``-cycle.

    A row is ``claimed`` when the theorem covers it; only claimed rows can
    fail the report, the rest are informational.
    """
    if ell < 3:
        raise ValueError(f"cycle length must be at least 3, got {ell}")
    n_range = list(n_range)
    rows = _map(_theorem_row, [(ell, n, samples, seed) for n in n_range], threads)
    ok = all(r["with_cycle"] == r["samples"] for r in rows if r["claimed"])
    return {"schema": f"rainbow-kit/verify-theorem@{SCHEMA_VERSION}",
            "invocation": {"ell": ell, "n_range": n_range, "samples": samples, "seed": seed},
            "rows": rows, "ok": ok}


def _deltabound_row(job) -> dict:
    ell, n, samples, seed = job
    rng = _instance_rng(seed, "deltabound", ell, n)
    floor = n // 2 + 3 * ell + 1  # smallest delta with 2 delta > n + 6 ell
    checked = vacuous = 0
    violations = []
    if floor > n - 1:
        vacuous = samples
    else:
        for _ in range(samples):
            g = sample_boosted(n, rng.randint(floor, n - 1), rng)
            checked += 1
            if find_rainbow_cycle_exact(g, ell) is None:
                violations.append(ecgio.dumps(g))
    return {"n": n, "checked": checked, "vacuous": vacuous, "violations": len(violations),
            "reproducers": violations[:3]}


def verify_delta_bound(ell: int, n_max: int, samples: int, seed: int, n_min: int | None = None,
                       threads: int = 1) -> dict:
    """Any sampled graph with ``delta > n/2 + 3 ell`` must hold a rainbow ``ell``-cycle.

    When ``n/2 + 3 ell`` already reaches ``n - 1`` no such graph exists and the
    row is counted as vacuous rather than passed.
    """
    jobs = [(ell, n, samples, seed) for n in range(n_min or ell, n_max + 1)]
    rows = _map(_deltabound_row, jobs, threads)
    return {"schema": f"rainbow-kit/verify-deltabound@{SCHEMA_VERSION}",
            "invocation": {"ell": ell, "n_min": n_min or ell, "n_max": n_max, "samples": samples,
                           "seed": seed},
            "rows": rows, "checked": sum(r["checked"] for r in rows),
            "vacuous": sum(r["vacuous"] for r in rows),
            "ok": all(r["violations"] == 0 for r in rows)}


# -- property suite ----------------------------------------------------------

class _Tally:
    def __init__(self):
        self.counts = defaultdict(lambda: {"pass": 0, "fail": 0, "vacuous": 0})
        self.failures = []

    def add(self, name: str, verdict: bool | None, g: EdgeColoredGraph | None = None, **params) -> None:
        key = "vacuous" if verdict is None else ("pass" if verdict else "fail")
        self.counts[name][key] += 1
        if verdict is False:
            self.failures.append({"check": name, "graph": ecgio.dumps(g) if g is not None else None,
                                  "params": params})

    def report(self) -> dict:
        return {name: dict(c) for name, c in sorted(self.counts.items())}


def property_corpus(seed: int, size: int, n_min: int = 5, n_max: int = 11) -> list[EdgeColoredGraph]:
    """Edge-minimal instances: reduced random colorings plus rainbow bipartite graphs."""
    rng = _instance_rng(seed, "corpus")
    out = [rainbow_complete_bipartite(m, m) for m in range(2, 7)]
    out += [rainbow_complete_bipartite(m, m + 1) for m in range(2, 6)]
    while len(out) < size:
        n = rng.randint(n_min, n_max)
        p = rng.uniform(0.3, 0.9)
        palette = rng.choice([2, 3, 4, n, n * n])
        g = edge_minimal_reduce(random_colored_graph(n, p, palette, rng.getrandbits(32)))
        if g.num_edges:
            out.append(g)
    return out


def _random_subset(rng: random.Random, items) -> list[int]:
    items = sorted(items)
    return [x for x in items if rng.random() < 0.5]


def check_instance(g: EdgeColoredGraph, tally: _Tally, rng: random.Random, ells=(3, 4, 5)) -> None:
    """Run every inequality check on one edge-minimal instance."""
    if not check_no_mono_3path(g):
        raise ValueError("property checks need an edge-minimal instance")
    n = g.n
    delta = min_color_degree(g)
    R, (z, zeta) = replication(g)

    # averaging bound on a random (v, X, Y)
    v = rng.randrange(n)
    X = _random_subset(rng, g.adjacency(v))
    Y = _random_subset(rng, set(range(n)) - {v}) or [next(w for w in range(n) if w != v)]
    rep = check_averaging_bound(g, v, X, Y)
    tally.add("averaging_bound", rep.holds, g, v=v, X=X, Y=Y)

    obs = neighborhood_digraph_facts(g, z)
    tally.add("neighborhood_digraph", all(obs.values()), g, z=z)

    X_plus = sorted(g.adjacency(z))
    F = build_digraph_F(g, z, X_plus)
    tally.add("F_arc_count", len(F) >= len(X_plus) * (delta - 1), g, z=z)

    for ell in ells:
        if find_rainbow_cycle_exact(g, ell) is not None:
            for name in ("sigma_cap", "delta_bound", "replication_bound", "triangle_reach", "case2_claim",
                         "maxdeg_bound"):
                tally.add(name, None)
            continue
        # delta <= n/2 + 3 ell
        tally.add("delta_bound", 2 * delta <= n + 6 * ell, g, ell=ell)

        # sigma cap over the exact reach set of a random (v, X)
        v = rng.randrange(n)
        X = _random_subset(rng, g.adjacency(v))
        c_rep = repeated_colors(g, v, X)
        reach = layered_reach(g, v, c_rep, ell - 1, mode="exact")
        Y = list(reach.layer(ell - 1).items())
        if X and Y:
            caps = check_sigma_cap(g, ell, v, X, c_rep, Y)
            tally.add("sigma_cap", all(caps.values()), g, ell=ell, v=v, X=X)
        else:
            tally.add("sigma_cap", None)

        # delta <= n/2 + max(0, 3 ell + (R - 1)((n + 1) / (2|Y|) - 1)) with Y = Y(z, zeta)
        Yz = layered_reach(g, z, {zeta}, ell - 1, mode="exact").layer(ell - 1)
        if Yz:
            slack = max(Fraction(0), 3 * ell + (R - 1) * (Fraction(n + 1, 2 * len(Yz)) - 1))
            tally.add("replication_bound", delta <= Fraction(n, 2) + slack, g, ell=ell)
        else:
            tally.add("replication_bound", None)

        # |Y(v, C_T)| >= 3/2 (delta - |C_T| - 4 ell) for a triangle through v
        tri = next(((a, b, c) for a, b in combinations(range(n), 2) if g.has_edge(a, b)
                    for c in range(b + 1, n) if g.has_edge(a, c) and g.has_edge(b, c)), None)
        if tri is None or 3 * (delta - 4 * ell) <= 0:
            tally.add("triangle_reach", None)
        else:
            ys = layered_reach(g, tri[0], (), ell - 1, mode="exact").layer(ell - 1)
            tally.add("triangle_reach", check_triangle_reach_bound(g, ell, tri, tri[0], (), len(ys)),
                      g, ell=ell, triangle=tri)

        # Case 2 claim under 2 delta >= n + 1
        Xc = choose_X(g, z, zeta, max(delta - 1, 0))
        if 2 * delta >= n + 1 and len(Xc) == delta - 1 and _case1_edge(g, Xc, zeta) is None:
            part = case2_partition(g, z, zeta, Xc, ell)
            tally.add("case2_claim", len(part.Y_H) <= 11 * ell and 2 * len(part.Y_D) <= len(Xc),
                      g, ell=ell)
        else:
            tally.add("case2_claim", None)

        tally.add("maxdeg_bound", check_maxdeg_bound(g, ell), g, ell=ell)


def _suite_chunk(job) -> tuple[dict, list]:
    seed, indexed = job
    tally = _Tally()
    for i, g in indexed:
        check_instance(g, tally, _instance_rng(seed, "suite", i))
    return {k: dict(v) for k, v in tally.counts.items()}, tally.failures


def run_property_suite(seed: int, size: int = 200, threads: int = 1) -> dict:
    """Every inequality checker over a seeded corpus; pass/fail/vacuous per check.

    Each instance draws its parameters from its own seeded stream, so the
    tallies do not depend on ``threads``.
    """
    corpus = list(enumerate(property_corpus(seed, size)))
    parts = max(1, threads)
    jobs = [(seed, corpus[k::parts]) for k in range(parts)]
    tally = _Tally()
    for counts, failures in _map(_suite_chunk, jobs, threads):
        for name, c in counts.items():
            for key, val in c.items():
                tally.counts[name][key] += val
        tally.failures.extend(failures)
    return {"schema": f"rainbow-kit/verify-properties@{SCHEMA_VERSION}",
            "invocation": {"seed": seed, "size": size},
            "tallies": tally.report(), "failures": tally.failures, "ok": not tally.failures}
