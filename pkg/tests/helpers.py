"""Shared oracles and strategies for the test suite (independent of the package internals)."""

import itertools
from functools import lru_cache
from pathlib import Path

import networkx as nx
from hypothesis import strategies as st

from paraglider.graph import Graph, from_graph6
from paraglider.patterns import is_p5_paraglider_free

CORPUS = Path(__file__).parent / "fixtures" / "corpus"


def to_nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def from_nx(H: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(H.nodes()))}
    return Graph.from_edges(len(idx), [(idx[u], idx[v]) for u, v in H.edges()])


def isomorphic(G: Graph, H: Graph) -> bool:
    return nx.is_isomorphic(to_nx(G), to_nx(H))


def brute_omega(G: Graph) -> int:
    best = 0
    for r in range(1, G.n + 1):
        if any(all(G.adjacent(u, v) for u, v in itertools.combinations(S, 2)) for S in itertools.combinations(range(G.n), r)):
            best = r
        else:
            break
    return best


def brute_chi(G: Graph) -> int:
    """Smallest k with a proper colouring, by trying every assignment (n <= 8)."""
    if G.n == 0:
        return 0
    edges = G.edges()
    for k in range(1, G.n + 1):
        for col in itertools.product(range(k), repeat=G.n - 1):
            c = (0,) + col
            if all(c[u] != c[v] for u, v in edges):
                return k
    return G.n


def brute_induced(G: Graph, P: Graph) -> bool:
    for S in itertools.permutations(range(G.n), P.n):
        if all(G.adjacent(S[i], S[j]) == P.adjacent(i, j) for i in range(P.n) for j in range(i + 1, P.n)):
            return True
    return False


@lru_cache(maxsize=None)
def corpus(n: int) -> tuple[Graph, ...]:
    return tuple(from_graph6(ln) for ln in (CORPUS / f"graphs{n}.g6").read_text().split())


@lru_cache(maxsize=None)
def free_corpus(n_max: int) -> tuple[Graph, ...]:
    return tuple(G for n in range(1, n_max + 1) for G in corpus(n) if is_p5_paraglider_free(G)[0])


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, b in zip(pairs, mask) if b])


@st.composite
def free_graphs(draw, max_n=9):
    """Free graphs drawn from the exhaustive corpus."""
    pool = free_corpus(min(max_n, 8))
    return pool[draw(st.integers(0, len(pool) - 1))]
