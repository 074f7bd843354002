import networkx as nx
import pytest
from hypothesis import given, strategies as st

from helpers import brute_chi, brute_omega, graphs, to_nx
from paraglider import atlas
from paraglider.errors import CapacityError, InputError
from paraglider.graph import Graph, bits, induced_subgraph, is_clique, is_stable, relabel
from paraglider.oracle import (
    Coloring,
    chromatic_number,
    clique_number,
    independence_number,
    induced_tables,
    iter_cliques,
    maximal_cliques,
    maximum_cliques,
    oracle_report,
    verify_coloring,
)
from paraglider.patterns import is_perfect


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_gk_parameters(k):
    G = atlas.make_gk(k)
    assert clique_number(G)[0] == k + 1
    assert independence_number(G)[0] == 2


def test_frozen_named_values():
    H = atlas.clebsch_complement()
    assert clique_number(H)[0] == 5
    assert chromatic_number(H)[0] == 8
    assert independence_number(H)[0] == 2
    assert chromatic_number(atlas.make_gk(5))[0] == 8
    assert chromatic_number(atlas.cycle(5))[0] == 3
    assert clique_number(atlas.cycle(5))[0] == 2 and independence_number(atlas.cycle(5))[0] == 2
    assert independence_number(Graph.complete(5))[0] == 1
    P = atlas.petersen_complement()
    assert (clique_number(P)[0], chromatic_number(P)[0]) == (4, 5)


def test_verify_coloring_examples():
    assert verify_coloring(atlas.cycle(5), (0, 1, 0, 1, 2))
    assert not verify_coloring(Graph.complete(2), (0, 0))
    # a1 a2 b1 b2 s1 s2 with the explicit three-colour scheme
    assert verify_coloring(atlas.make_gk(2), (2, 1, 0, 2, 0, 1))
    with pytest.raises(InputError):
        verify_coloring(atlas.cycle(5), {0: 0, 1: 1})
    with pytest.raises(InputError):
        verify_coloring(atlas.cycle(5), (0, 1))


def test_capacity():
    with pytest.raises(CapacityError):
        chromatic_number(Graph.empty(41))
    with pytest.raises(CapacityError):
        induced_tables(Graph.empty(21))


@given(graphs(max_n=8))
def test_against_brute_force(G):
    w, K = clique_number(G)
    assert w == brute_omega(G) and len(K) == w and is_clique(G, K)
    a, I = independence_number(G)
    assert len(I) == a and is_stable(G, I)
    chi, col = chromatic_number(G)
    assert chi == brute_chi(G)
    assert verify_coloring(G, col) and col.k == chi
    assert sorted(set(col.colors)) == list(range(chi))


@given(graphs(max_n=14))
def test_report_invariants(G):
    r = oracle_report(G)
    assert r.omega <= r.chi <= G.n
    assert r.alpha * r.chi >= G.n
    assert r.omega == max((len(c) for c in nx.find_cliques(to_nx(G))), default=0)
    assert verify_coloring(G, r.witness_coloring)


@given(graphs(max_n=10), st.randoms())
def test_chi_relabel_invariant(G, rnd):
    perm = list(range(G.n))
    rnd.shuffle(perm)
    assert chromatic_number(relabel(G, perm))[0] == chromatic_number(G)[0]


@given(graphs(max_n=12))
def test_perfect_means_chi_equals_omega(G):
    if is_perfect(G)[0]:
        assert chromatic_number(G)[0] == clique_number(G)[0]


@given(graphs(max_n=10))
def test_clique_enumerators(G):
    want = {frozenset(c) for c in nx.find_cliques(to_nx(G))} if G.n else set()
    got = {frozenset(bits(m)) for m in maximal_cliques(G)}
    assert got == want
    allc = list(iter_cliques(G))
    assert len(allc) == len(set(allc))
    assert all(is_clique(G, bits(m)) for m in allc)
    w = clique_number(G)[0]
    assert all(m.bit_count() == w for m in maximum_cliques(G))


@given(graphs(max_n=7))
def test_induced_tables_match_direct_oracle(G):
    omega, chi = induced_tables(G)
    for S in range(1 << G.n):
        H, _ = induced_subgraph(G, bits(S))
        assert omega[S] == clique_number(H)[0]
        assert chi[S] == chromatic_number(H)[0]


def test_coloring_normalization():
    c = Coloring.normalized([5, 3, 5, 9])
    assert c.colors == (0, 1, 0, 2) and c.k == 3
    assert c.classes() == [frozenset({0, 2}), frozenset({1}), frozenset({3})]
