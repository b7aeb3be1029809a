import random

import pytest

from rainbow_kit import ProbeConfig, count_rainbow_cycles, min_color_degree, probe_counterexample, run_chain
from rainbow_kit.probe import ABSENT, initial_coloring


def test_bipartite_start_is_feasible():
    s = run_chain(3, 10, 0, seed=0)
    assert s.feasible and s.best_delta == 5
    assert count_rainbow_cycles(s.best_graph(), 3) == 0


def test_initial_colorings():
    col = initial_coloring(6, 3, "bipartite", random.Random(0))
    assert sum(c != ABSENT for c in col.values()) == 9
    with pytest.raises(ValueError):
        initial_coloring(6, 3, "star", random.Random(0))


def test_chain_is_deterministic():
    a = run_chain(3, 12, 3000, seed=4, init="random")
    b = run_chain(3, 12, 3000, seed=4, init="random")
    assert a.to_dict() == b.to_dict()


@pytest.mark.parametrize("ell, init", [(3, "random"), (4, "random"), (5, "bipartite"), (8, "random")])
def test_best_state_has_no_rainbow_cycle(ell, init):
    cfg = ProbeConfig(crosscheck_every=100)
    s = run_chain(ell, 9, 1500, seed=1, init=init, config=cfg)
    assert s.crosschecks == 15
    if s.feasible:
        g = s.best_graph()
        assert count_rainbow_cycles(g, ell) == 0
        assert min_color_degree(g) == s.best_delta


def test_chains_pick_best_and_ignore_threads():
    one = probe_counterexample(3, 12, 2000, seed=2, init="random", chains=3)
    many = probe_counterexample(3, 12, 2000, seed=2, init="random", chains=3, threads=2)
    assert one.to_dict() == many.to_dict()
    singles = [run_chain(3, 12, 2000, seed=2 + i, init="random") for i in range(3)]
    assert one.best_delta == max(s.best_delta for s in singles if s.best_delta is not None)
    assert one.seed == min(s.seed for s in singles if s.best_delta == one.best_delta)


def test_n_below_ell():
    with pytest.raises(ValueError):
        run_chain(5, 4, 10, 0)


def test_report_fields():
    d = run_chain(3, 8, 500, seed=0).to_dict()
    assert {"best_delta", "feasible", "best_edges", "restarts", "final"} <= d.keys()
