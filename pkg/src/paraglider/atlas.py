"""Named graphs and seeded generators of (P5, paraglider)-free graphs.

Vertex numbering conventions (0-based throughout):

* ``C5``: cycle ``0-1-2-3-4-0``; vertex ``i`` plays ``v_{i+1}``.
* F-graphs: the base cycle is ``0..4`` as above, extra vertices follow.
  Only the adjacencies forced by the case analysis are present.
* ``G_k``: ``a_i = i``, ``b_i = k + i``, ``s_i = 2k + i`` with ``s_i`` missing
  exactly ``a_i`` and ``b_i``.
* Clebsch complement: vertex ``x`` is the 4-bit string ``x``; ``x ~ y`` iff
  their Hamming distance is 2 or 3.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import GenerationError, InputError
from .graph import Graph, complement, delete_vertices, induced_subgraph

# base cycle neighbourhoods, indices of v_1..v_5 are 0..4
_V = {i: i - 1 for i in range(1, 6)}


def _cycle_edges(k: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % k) for i in range(k)]


def cycle(k: int) -> Graph:
    if k < 3:
        raise InputError("cycles need at least 3 vertices")
    return Graph.from_edges(k, _cycle_edges(k))


def path(k: int) -> Graph:
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def clique(k: int) -> Graph:
    return Graph.complete(k)


def _with_extras(extras: list[tuple[int, ...]], extra_edges=()) -> Graph:
    """Base C5 plus one vertex per entry of ``extras`` (its v-indices, 1-based)."""
    edges = _cycle_edges(5)
    for j, nbrs in enumerate(extras):
        edges.extend((5 + j, _V[i]) for i in nbrs)
    edges.extend(extra_edges)
    return Graph.from_edges(5 + len(extras), edges)


def paraglider() -> Graph:
    # C4 0-1-2-3 plus apex 4 on 0, 1, 2
    return Graph.from_edges(5, _cycle_edges(4) + [(4, 0), (4, 1), (4, 2)])


def bull() -> Graph:
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 1), (4, 2)])


def k2_plus_k1() -> Graph:
    return Graph.from_edges(3, [(0, 1)])


def f1() -> Graph:
    # t1 sees v1, v2, v4
    return _with_extras([(1, 2, 4)])


def f1_prime() -> Graph:
    # t1 sees v1, v2, v4; t3 sees v3, v4, v1; T is stable
    return _with_extras([(1, 2, 4), (3, 4, 1)])


def f2() -> Graph:
    # y2 sees v1, v2, v3; y5 sees v4, v5, v1; y2 ~ y5
    return _with_extras([(1, 2, 3), (4, 5, 1)], [(5, 6)])


def f3() -> Graph:
    # y1 sees v5, v1, v2; z1 sees all but v1; y1 ~ z1
    return _with_extras([(5, 1, 2), (2, 3, 4, 5)], [(5, 6)])


def c6_complement() -> Graph:
    return complement(cycle(6))


def clebsch_complement() -> Graph:
    """Complement of the folded 5-cube: 16 vertices, 10-regular."""
    edges = [(x, y) for x in range(16) for y in range(x + 1, 16) if (x ^ y).bit_count() in (2, 3)]
    return Graph.from_edges(16, edges)


def clebsch() -> Graph:
    return complement(clebsch_complement())


def petersen_complement() -> Graph:
    """Line graph of K5: 2-subsets of {0..4}, adjacent iff they intersect."""
    pairs = list(itertools.combinations(range(5), 2))
    edges = [(i, j) for i, j in itertools.combinations(range(10), 2) if set(pairs[i]) & set(pairs[j])]
    return Graph.from_edges(10, edges)


def make_gk(k: int) -> Graph:
    """The 3k-vertex tightness graph: three matched/twin cliques."""
    if k < 2:
        raise InputError("G_k needs k >= 2")
    a = list(range(k))
    b = [k + i for i in range(k)]
    s = [2 * k + i for i in range(k)]
    edges = []
    for part in (a, b, s):
        edges.extend(itertools.combinations(part, 2))
    edges.extend(zip(a, b))
    for i in range(k):
        for j in range(k):
            if i != j:
                edges.append((s[i], a[j]))
                edges.append((s[i], b[j]))
    return Graph.from_edges(3 * k, edges)


def make_clique_expansion_c5(sizes: tuple[int, ...] | list[int]) -> Graph:
    """Clique expansion of C5; bag ``i`` occupies a consecutive block of vertices."""
    if len(sizes) != 5 or any(q < 1 for q in sizes):
        raise InputError("need five positive bag sizes")
    return make_expansion(cycle(5), [clique(q) for q in sizes])


def make_expansion(base: Graph, bags: list[Graph]) -> Graph:
    """Expansion of ``base``: vertex ``v`` replaced by ``bags[v]`` (consecutive block)."""
    if len(bags) != base.n:
        raise InputError("one bag per base vertex")
    offsets = list(itertools.accumulate([0] + [B.n for B in bags]))
    edges = []
    for v, B in enumerate(bags):
        edges.extend((u + offsets[v], w + offsets[v]) for u, w in B.edges())
    for u, v in base.edges():
        for x in range(offsets[u], offsets[u + 1]):
            for y in range(offsets[v], offsets[v + 1]):
                edges.append((x, y))
    return Graph.from_edges(offsets[-1], edges)


def complete_multipartite(parts: list[int]) -> Graph:
    """Complete multipartite graph; these are exactly the (K2+K1)-free graphs."""
    owner = [i for i, p in enumerate(parts) for _ in range(p)]
    n = len(owner)
    return Graph.from_edges(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if owner[u] != owner[v]])


class UnsupportedConstruction(InputError):
    pass


_NAMED = {
    "C5": lambda: cycle(5),
    "C4": lambda: cycle(4),
    "P5": lambda: path(5),
    "paraglider": paraglider,
    "bull": bull,
    "K2+K1": k2_plus_k1,
    "C6_complement": c6_complement,
    "F1": f1,
    "F1prime": f1_prime,
    "F2": f2,
    "F3": f3,
    "clebsch_complement": clebsch_complement,
    "clebsch_complement_minus_vertex": lambda: delete_vertices(clebsch_complement(), [0])[0],
    "petersen_complement": petersen_complement,
    "clebsch": clebsch,
    "prism": c6_complement,
}

NAMED_TAGS = tuple(_NAMED) + ("Gstar_placeholder", "G_k")


def make_named(tag: str) -> Graph:
    """Construct a named graph.  ``G_<k>`` (for example ``G_5``) builds the tightness graph."""
    if tag == "Gstar_placeholder":
        raise UnsupportedConstruction(
            "G* is not constructible from its description alone; "
            "gstar_candidates() lists the enumerated graphs matching every stated property"
        )
    if tag in _NAMED:
        return _NAMED[tag]()
    if tag.startswith("G_"):
        try:
            k = int(tag[2:])
        except ValueError:
            raise InputError(f"bad G_k tag {tag!r}") from None
        return make_gk(k)
    raise InputError(f"unknown graph tag {tag!r}")


# G* ----------------------------------------------------------------------------------

# Unique 8-vertex graph (found by exhaustive search over all 8-vertex graphs) that is
# a (P5, paraglider)-free atom with a C5, no universal or comparable vertices, and a
# stable pair whose removal leaves the complement of C6.
_GSTAR_G6 = ("GL~Cjk",)


def gstar_candidates() -> list[Graph]:
    from .graph import from_graph6

    return [from_graph6(s) for s in _GSTAR_G6]


# generators --------------------------------------------------------------------------

def _rng(seed) -> np.random.Generator:
    return np.random.default_rng(seed)


def _random_perfect(n: int, rng: np.random.Generator, kind: str | None = None) -> Graph:
    """Clique, random bipartite graph or random cograph on ``n`` vertices."""
    if n == 0:
        return Graph.empty(0)
    kind = kind or rng.choice(["clique", "bipartite", "cograph"])
    if kind == "clique":
        return clique(n)
    if kind == "bipartite":
        side = rng.integers(0, 2, size=n)
        edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if side[u] != side[v] and rng.random() < 0.6]
        return Graph.from_edges(n, edges)
    return _random_cograph(list(range(n)), rng, n)


def _random_cograph(vs: list[int], rng: np.random.Generator, n: int) -> Graph:
    edges: list[tuple[int, int]] = []

    def build(part: list[int]):
        if len(part) == 1:
            return
        cut = int(rng.integers(1, len(part)))
        left, right = part[:cut], part[cut:]
        if rng.random() < 0.5:
            edges.extend((u, v) for u in left for v in right)
        build(left)
        build(right)

    build(vs)
    return Graph.from_edges(n, edges)


@dataclass(frozen=True)
class HSample:
    graph: Graph
    decomposition: "object"


def sample_h_member(k: int, sizes_R1: int = 0, sizes_R2: int = 0, s_count: int = 0,
                    seed: int = 0, relabel: bool = True) -> HSample:
    """A member of class H with its decomposition.

    ``sizes_R1`` and ``sizes_R2`` are the numbers of vertices of the perfect
    sides (each drawn as a clique, bipartite graph or cograph); the injection
    ``f`` is random.  With ``relabel`` the vertex labels are shuffled.
    """
    from .structure.classes import HDecomposition

    if k < 2 or not 0 <= s_count <= k or sizes_R1 < 0 or sizes_R2 < 0:
        raise InputError("need k >= 2, 0 <= s_count <= k and non-negative R sizes")
    rng = _rng(seed)
    q1 = list(range(k))
    q2 = list(range(k, 2 * k))
    s = list(range(2 * k, 2 * k + s_count))
    r1 = list(range(2 * k + s_count, 2 * k + s_count + sizes_R1))
    n = 2 * k + s_count + sizes_R1 + sizes_R2
    r2 = list(range(n - sizes_R2, n))
    f = [int(i) for i in rng.permutation(k)[:s_count]]
    edges = []
    for part in (q1, q2, s):
        edges.extend(itertools.combinations(part, 2))
    edges.extend(zip(q1, q2))
    for R, Q in ((r1, q1), (r2, q2)):
        inner = _random_perfect(len(R), rng)
        edges.extend((R[u], R[v]) for u, v in inner.edges())
        edges.extend((x, y) for x in R for y in Q)
        edges.extend((x, y) for x in R for y in s)
    for x, i in zip(s, f):
        edges.extend((x, y) for j in range(k) if j != i for y in (q1[j], q2[j]))
    perm = [int(p) for p in rng.permutation(n)] if relabel else list(range(n))
    G = Graph.from_edges(n, [(perm[u], perm[v]) for u, v in edges])
    mp = lambda vs: tuple(perm[v] for v in vs)
    D = HDecomposition(mp(q1), mp(q2), frozenset(mp(r1)), frozenset(mp(r2)), mp(s), tuple(f))
    return HSample(G, D)


def sample_c5_expansion(sizes, seed: int = 0, flavor: str = "K2+K1-free") -> Graph:
    """Expansion of C5 whose bags are cliques or random complete multipartite graphs."""
    if len(sizes) != 5 or any(q < 1 for q in sizes):
        raise InputError("need five positive bag sizes")
    rng = _rng(seed)
    bags = []
    for q in sizes:
        if flavor == "clique":
            bags.append(clique(q))
        else:
            parts = []
            left = q
            while left:
                p = int(rng.integers(1, left + 1))
                parts.append(p)
                left -= p
            bags.append(complete_multipartite(parts))
    return make_expansion(cycle(5), bags)


def sample_free_graph(n: int, edge_bias: float = 0.5, seed: int = 0, max_tries: int = 200) -> Graph:
    """Random (P5, paraglider)-free graph: draw G(n, p) and delete a vertex of every
    forbidden embedding found until none is left.  Outputs with fewer than
    ``max(3, n/2)`` vertices (capped at n) are redrawn."""
    from .patterns import is_p5_paraglider_free

    if not 1 <= n <= 32:
        raise InputError("sample_free_graph supports 1 <= n <= 32")
    rng = _rng(seed)
    floor = min(n, max(3, math.ceil(n / 2)))
    best = None
    for _ in range(max_tries):
        upper = rng.random((n, n)) < edge_bias
        G = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if upper[u, v]])
        while True:
            ok, emb = is_p5_paraglider_free(G)
            if ok:
                break
            drop = emb.vertices[int(rng.integers(len(emb.vertices)))]
            G, _ = delete_vertices(G, [drop])
        if G.n >= floor:
            return G
        if best is None or G.n > best.n:
            best = G
    return best


def sample_atom(G: Graph) -> Graph:
    """Strip universal and dominated vertices and descend into the largest
    clique-cutset block until none of these reductions applies."""
    from .structure.decomposition import find_clique_cutset_mask, find_comparable_pair, find_universal
    from .graph import component_masks, subgraph_mask

    while G.n:
        comps = component_masks(G)
        if len(comps) > 1:
            G, _ = subgraph_mask(G, max(comps, key=lambda m: (m.bit_count(), -m)))
            continue
        u = find_universal(G)
        if u is None:
            pair = find_comparable_pair(G)
            u = None if pair is None else pair[0]
        if u is not None:
            G, _ = delete_vertices(G, [u])
            continue
        cut = find_clique_cutset_mask(G)
        if cut is None:
            return G
        G, _ = subgraph_mask(G, max(cut[1], key=lambda m: (m.bit_count(), -m)))
    return G


def sample_clebsch_subgraph(seed: int = 0, size: int | None = None) -> Graph:
    rng = _rng(seed)
    H = clebsch_complement()
    size = int(rng.integers(5, 17)) if size is None else size
    keep = sorted(int(v) for v in rng.choice(16, size=size, replace=False))
    return induced_subgraph(H, keep)[0]


# the grown family ------------------------------------------------------------------

@lru_cache(maxsize=64)
def smaller_vertex_extensions(G: Graph) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Every way ``(v, N)`` of adding a vertex with neighbourhood ``N``, a non-empty
    subset of ``N(v)``, that keeps the graph (P5, paraglider)-free.  Exhaustive."""
    from .patterns import is_p5_paraglider_free

    out = []
    seen = set()
    for v in range(G.n):
        nbrs = sorted(G.neighbors(v))
        for sub in range(1, 1 << len(nbrs)):
            N = tuple(nbrs[i] for i in range(len(nbrs)) if sub >> i & 1)
            if N in seen:
                continue
            H = Graph.from_edges(G.n + 1, G.edges() + [(G.n, u) for u in N])
            if is_p5_paraglider_free(H)[0]:
                seen.add(N)
                out.append((v, N))
    return tuple(out)


def grow_g_family(base_tag: str = "clebsch_complement", steps: int = 0, seed: int = 0):
    """Add ``steps`` smaller vertices to a base graph, each chosen uniformly among the
    extensions that keep the graph (P5, paraglider)-free.

    Returns the graph and the reduction trace (deletion order, last added first).
    Raises GenerationError when some step has no valid extension.
    """
    from .structure.classes import BASE_TAGS, GReductionTrace, GStep

    if base_tag not in BASE_TAGS:
        raise InputError(f"base must be one of {BASE_TAGS}")
    if steps < 0:
        raise InputError("steps must be non-negative")
    rng = _rng(seed)
    G = make_named(base_tag)
    n0 = G.n
    added: list = []
    for step in range(steps):
        options = smaller_vertex_extensions(G)
        if not options:
            raise GenerationError(
                f"no smaller vertex can be added at step {step + 1}: every candidate "
                f"creates an induced P5 or paraglider"
            )
        v, N = options[int(rng.integers(len(options)))]
        added.append(GStep(G.n, v, frozenset(N)))
        G = Graph.from_edges(G.n + 1, G.edges() + [(G.n, u) for u in N])
    trace = GReductionTrace(tuple(reversed(added)), base_tag, tuple(range(n0)))
    return G, trace
