import pytest
from hypothesis import given, settings, strategies as st

from helpers import isomorphic
from paraglider import atlas
from paraglider.errors import GenerationError, InputError
from paraglider.graph import complement, induced_subgraph, is_connected, to_graph6
from paraglider.oracle import chromatic_number, clique_number, independence_number
from paraglider.patterns import find_c5, is_p5_paraglider_free
from paraglider.structure import (
    embed_into_base,
    find_comparable_pair,
    find_universal,
    is_atom,
    recognize_c5_expansion,
    replay_trace,
)


def test_named_graph_sizes():
    want = {"C5": (5, 5), "P5": (5, 4), "paraglider": (5, 7), "bull": (5, 5), "K2+K1": (3, 1),
            "C6_complement": (6, 9), "F1": (6, 8), "F1prime": (7, 11), "F2": (7, 12), "F3": (7, 13),
            "clebsch_complement": (16, 80), "clebsch_complement_minus_vertex": (15, 70),
            "petersen_complement": (10, 30), "clebsch": (16, 40)}
    for tag, (n, m) in want.items():
        G = atlas.make_named(tag)
        assert (G.n, G.edge_count()) == (n, m), tag


def test_named_tags_and_errors():
    assert atlas.make_named("G_4") == atlas.make_gk(4)
    assert atlas.make_named("prism") == atlas.c6_complement()
    for bad in ("nope", "G_x"):
        with pytest.raises(InputError):
            atlas.make_named(bad)
    with pytest.raises(atlas.UnsupportedConstruction):
        atlas.make_named("Gstar_placeholder")


def test_clebsch_complement_is_complement_of_clebsch():
    H = atlas.clebsch_complement()
    assert complement(atlas.clebsch()) == H
    assert all(len(H.neighbors(v)) == 10 for v in range(16))
    assert independence_number(H)[0] == 2 and clique_number(H)[0] == 5


def test_petersen_complement_is_a_neighbourhood():
    H = atlas.clebsch_complement()
    assert isomorphic(induced_subgraph(H, H.neighbors(0))[0], atlas.petersen_complement())


@pytest.mark.parametrize("k", [2, 3, 4, 7])
def test_gk_layout(k):
    G = atlas.make_gk(k)
    assert G.n == 3 * k and is_p5_paraglider_free(G)[0]
    a, b, s = range(k), range(k, 2 * k), range(2 * k, 3 * k)
    for i in range(k):
        assert G.adjacent(a[i], b[i])
        for j in range(k):
            if i != j:
                assert G.adjacent(a[i], a[j]) and G.adjacent(s[i], s[j])
                assert G.adjacent(s[i], a[j]) and G.adjacent(s[i], b[j])
                assert not G.adjacent(a[i], b[j])
        assert not G.adjacent(s[i], a[i]) and not G.adjacent(s[i], b[i])
    with pytest.raises(InputError):
        atlas.make_gk(1)


def test_gk_small_cases():
    assert isomorphic(atlas.make_gk(2), atlas.c6_complement())
    assert chromatic_number(atlas.make_gk(3))[0] == 5


@given(st.lists(st.integers(1, 4), min_size=5, max_size=5))
def test_clique_expansion_parameters(sizes):
    G = atlas.make_clique_expansion_c5(sizes)
    assert G.n == sum(sizes)
    assert clique_number(G)[0] == max(sizes[i] + sizes[(i + 1) % 5] for i in range(5))
    assert is_p5_paraglider_free(G)[0]
    assert recognize_c5_expansion(G).flavor == "clique"


def test_expansion_rejects():
    with pytest.raises(InputError):
        atlas.make_clique_expansion_c5((1, 1, 1, 1))
    with pytest.raises(InputError):
        atlas.sample_c5_expansion((1, 1, 1, 1, 0))


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=20)
def test_samplers_deterministic(seed):
    assert atlas.sample_c5_expansion((2, 2, 1, 3, 1), seed) == atlas.sample_c5_expansion((2, 2, 1, 3, 1), seed)
    a = atlas.sample_h_member(3, 2, 1, 2, seed)
    b = atlas.sample_h_member(3, 2, 1, 2, seed)
    assert a.graph == b.graph and a.decomposition == b.decomposition
    assert atlas.sample_clebsch_subgraph(seed, 9) == atlas.sample_clebsch_subgraph(seed, 9)


@given(st.integers(0, 2**32 - 1), st.integers(1, 16))
@settings(max_examples=20)
def test_clebsch_subgraphs_embed(seed, size):
    G = atlas.sample_clebsch_subgraph(seed, size)
    assert G.n == size and embed_into_base(G, atlas.clebsch_complement()) is not None


@pytest.mark.parametrize("n", [6, 9, 12])
def test_sample_free_graph(n):
    G = atlas.sample_free_graph(n, seed=n)
    # forbidden embeddings are destroyed by deletion, so only half the vertices are promised
    assert -(-n // 2) <= G.n <= n and is_p5_paraglider_free(G)[0]
    assert G == atlas.sample_free_graph(n, seed=n)


def test_sample_atom():
    sizes = []
    for seed in range(10):
        for G in (atlas.sample_free_graph(12, seed=seed), atlas.sample_h_member(3, 2, 2, 2, seed).graph):
            A = atlas.sample_atom(G)
            sizes.append(A.n)
            if A.n:
                assert is_connected(A) and is_atom(A)
                assert find_universal(A) is None and find_comparable_pair(A) is None
    assert sum(1 for n in sizes if n) >= 10
    A = atlas.sample_atom(atlas.clebsch_complement())
    assert A == atlas.clebsch_complement()


def test_gstar_candidates_frozen():
    assert [to_graph6(G) for G in atlas.gstar_candidates()] == ["GL~Cjk"]
    (G,) = atlas.gstar_candidates()
    assert find_c5(G) and find_universal(G) is None and find_comparable_pair(G) is None


def test_grow_family_base_outputs():
    for tag in ("clebsch_complement", "clebsch_complement_minus_vertex"):
        for seed in range(3):
            G, tr = atlas.grow_g_family(tag, 0, seed)
            assert G == atlas.make_named(tag) and tr.steps == () and replay_trace(tr, G.n) == G


def test_grow_family_cannot_extend():
    with pytest.raises(GenerationError):
        atlas.grow_g_family("clebsch_complement", 1)
    with pytest.raises(InputError):
        atlas.grow_g_family("C5", 0)
    with pytest.raises(InputError):
        atlas.grow_g_family("clebsch_complement", -1)


def test_smaller_vertex_extensions_on_small_graph():
    # a C5 can take a vertex copying the closed neighbourhood of a cycle vertex minus itself
    ext = atlas.smaller_vertex_extensions(atlas.cycle(5))
    assert ext
    for v, N in ext:
        assert set(N) <= set(atlas.cycle(5).neighbors(v)) | {v}
