from math import comb

import pytest

from oddspan import (
    ConstructionSpec,
    balanced_cycle_blowup,
    bc_graph,
    complete_bipartite,
    cycle_graph,
    cycle_spectrum,
    haggkvist_graph,
    has_cycle_of_length,
    is_bipartite,
    min_degree,
    odd_girth,
    turan_graph,
)
from oddspan.constructions import bc_graph_on, cycle_blowup_on, turan_part_sizes
from oddspan.graph import GraphError

from oracles import cycle_lengths_nx, has_cycle_brute


def test_turan_examples():
    g = turan_graph(4, 2)
    assert g == complete_bipartite(2, 2) and g.edge_count() == 4
    assert turan_graph(5, 5).edge_count() == 10
    assert sorted(turan_part_sizes(7, 3), reverse=True) == [3, 2, 2]
    assert turan_graph(7, 3).edge_count() == 16


def test_turan_edge_formula():
    for n in range(1, 13):
        for r in range(1, n + 1):
            sizes = turan_part_sizes(n, r)
            assert max(sizes) - min(sizes) <= 1
            assert turan_graph(n, r).edge_count() == comb(n, 2) - sum(comb(s, 2) for s in sizes)


def test_turan_errors():
    with pytest.raises(GraphError):
        turan_graph(3, 4)


def test_small_named_graphs():
    assert complete_bipartite(1, 1).edge_count() == 1
    assert cycle_graph(3).degrees() == [2, 2, 2]
    assert odd_girth(cycle_graph(7)) == 7
    with pytest.raises(GraphError):
        cycle_graph(2)


def test_cycle_blowup_examples():
    g = balanced_cycle_blowup(7, 3)
    assert (g.n, min_degree(g)) == (21, 6)
    assert balanced_cycle_blowup(5, 1) == cycle_graph(5)
    g = balanced_cycle_blowup(9, 2)
    assert has_cycle_of_length(g, 9) and has_cycle_of_length(g, 4)
    assert has_cycle_of_length(g, 3) is None


@pytest.mark.parametrize("m", [5, 7, 9])
@pytest.mark.parametrize("t", [1, 2, 3])
def test_cycle_blowup_invariants(m, t):
    g = balanced_cycle_blowup(m, t)
    assert g.n == m * t
    assert set(g.degrees()) == {2 * t}
    assert odd_girth(g) == m


def test_bc_examples():
    g = bc_graph(2, 3)
    assert (g.n, min_degree(g)) == (30, 3)
    assert cycle_spectrum(g, 30).odd == {5}
    g = bc_graph(2, 1)
    assert g.n == 10 and sorted(g.degrees()) == [1] * 5 + [3] * 5
    g = bc_graph(3, 2)
    assert (g.n, min_degree(g)) == (28, 2) and is_bipartite(g) is None


@pytest.mark.parametrize("ell", [1, 2, 3, 4])
@pytest.mark.parametrize("t", [1, 2, 3, 4])
def test_bc_invariants(ell, t):
    g = bc_graph(ell, t)
    s = 2 * ell + 1
    assert g.n == 2 * s * t
    assert min_degree(g) == t
    # spine vertices come first and carry degree t + 2
    assert g.degrees()[:s] == [t + 2] * s
    assert cycle_spectrum(g, g.n).odd == {s}


def test_bc_spectrum_against_brute_force():
    g = bc_graph(1, 1)
    for length in range(3, g.n + 1):
        assert (has_cycle_of_length(g, length) is not None) == has_cycle_brute(g, length)
    g = bc_graph(2, 2)
    assert cycle_lengths_nx(g) == cycle_spectrum(g, 20).present


def test_blowup_spectrum_against_networkx():
    g = balanced_cycle_blowup(9, 2)
    assert cycle_lengths_nx(g) == cycle_spectrum(g, 18).present


def test_haggkvist():
    g = haggkvist_graph(3)
    assert (g.n, min_degree(g)) == (18, 3)
    assert has_cycle_of_length(g, 3)
    g = haggkvist_graph(1)
    assert g.n == 6 and sorted(g.degrees()) == [1, 1, 1, 3, 3, 3]
    for t in (1, 2, 3):
        g = haggkvist_graph(t)
        assert cycle_spectrum(g, g.n).odd == {3}
        assert min_degree(g) == t


def test_haggkvist_small_spectrum_against_networkx():
    g = haggkvist_graph(2)
    assert cycle_lengths_nx(g) == cycle_spectrum(g, 12).present
    assert cycle_spectrum(g, 12).odd == {3}


def test_wrappers_by_n():
    assert bc_graph_on(30, 2) == bc_graph(2, 3)
    assert cycle_blowup_on(45, 9) == balanced_cycle_blowup(9, 5)
    with pytest.raises(GraphError):
        bc_graph_on(31, 2)
    with pytest.raises(GraphError):
        cycle_blowup_on(44, 9)


def test_construction_spec():
    assert ConstructionSpec("bc", {"ell": 2, "t": 3}).build() == bc_graph(2, 3)
    assert ConstructionSpec("bc", {"ell": 2, "n": 30}).build() == bc_graph(2, 3)
    assert ConstructionSpec("haggkvist", {"n": 12}).build() == haggkvist_graph(2)
    assert ConstructionSpec("turan", {"n": 7, "r": 3}).build() == turan_graph(7, 3)
    with pytest.raises(GraphError):
        ConstructionSpec("petersen", {})
    with pytest.raises(GraphError):
        ConstructionSpec("bc", {"ell": 2}).build()
