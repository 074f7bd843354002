"""Recognizers for the structured classes: C5 expansions, the class H, base
graph embeddings, good stable sets, awesome graphs and the class of graphs
grown from the Clebsch base by adding smaller vertices."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .. import atlas
from ..errors import CapacityError, InputError
from ..graph import (
    Graph,
    bits,
    complement,
    component_masks,
    induced_subgraph_ordered,
    is_clique_mask,
    is_stable_mask,
    lowest,
    mask_of,
    subgraph_mask,
)
from ..oracle import CHROMATIC_CAP, chromatic_number, clique_number, iter_cliques, maximum_cliques
from ..patterns import Embedding, Pattern, find_c5, find_odd_hole, is_p5_paraglider_free, iter_induced
from .decomposition import maximal_strong_modules

SEARCH_CAP = 64


# expansions --------------------------------------------------------------------

@dataclass(frozen=True)
class ExpansionMap:
    base: Graph
    bags: tuple[frozenset, ...]
    flavor: str = "K2+K1-free"

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.bags)

    def to_json(self) -> dict:
        return {"base_n": self.base.n, "bags": [sorted(b) for b in self.bags], "flavor": self.flavor}


def bag_flavor(G: Graph, bag) -> str:
    m = mask_of(bag)
    if is_clique_mask(G, m):
        return "clique"
    if _k2k1_free(G, m):
        return "K2+K1-free"
    return "other"


def _k2k1_free(G: Graph, m: int) -> bool:
    # K2+K1-free iff non-adjacency is transitive (complete multipartite)
    rows = G.rows
    for v in bits(m):
        non = m & ~rows[v] & ~(1 << v)
        for u in bits(non):
            if non & ~(1 << u) & rows[u]:
                return False
    return True


def validate_expansion(G: Graph, E: ExpansionMap) -> list[str]:
    out = []
    if len(E.bags) != E.base.n:
        return ["one bag per base vertex required"]
    masks = [mask_of(b) for b in E.bags]
    seen = 0
    for i, m in enumerate(masks):
        if not m:
            out.append(f"bag {i} empty")
        if seen & m:
            out.append(f"bag {i} overlaps an earlier bag")
        seen |= m
    if seen != G.full_mask:
        out.append("bags do not cover V(G)")
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            want = E.base.adjacent(i, j)
            for x in bits(masks[i]):
                hit = G.rows[x] & masks[j]
                if hit != (masks[j] if want else 0):
                    out.append(f"bags {i},{j} not {'complete' if want else 'anticomplete'}")
                    break
    for i, b in enumerate(E.bags):
        fl = bag_flavor(G, b)
        if E.flavor == "clique" and fl != "clique" or E.flavor == "K2+K1-free" and fl == "other":
            out.append(f"bag {i} is not {E.flavor}")
    return out


def recognize_c5_expansion(G: Graph) -> ExpansionMap | None:
    """Bags are the maximal strong modules; the quotient must be C5 and every
    bag (K2+K1)-free.  Bags are listed in cycle order."""
    if G.n < 5:
        return None
    mods = maximal_strong_modules(G)
    if len(mods) != 5:
        return None
    reps = [lowest(m) for m in mods]
    Q, _ = induced_subgraph_ordered(G, reps)
    cyc = find_c5(Q)
    if cyc is None:
        return None
    bags = tuple(frozenset(bits(mods[i])) for i in cyc)
    if any(not _k2k1_free(G, mask_of(b)) for b in bags):
        return None
    flavor = "clique" if all(is_clique_mask(G, mask_of(b)) for b in bags) else "K2+K1-free"
    return ExpansionMap(atlas.cycle(5), bags, flavor)


# class H -------------------------------------------------------------------------

@dataclass(frozen=True)
class HDecomposition:
    """``Q1[i]`` is matched to ``Q2[i]``; ``S[j]`` misses exactly ``Q1[f[j]]`` and ``Q2[f[j]]``."""

    Q1: tuple[int, ...]
    Q2: tuple[int, ...]
    R1: frozenset
    R2: frozenset
    S: tuple[int, ...]
    f: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.Q1)

    def to_json(self) -> dict:
        return {
            "Q1": list(self.Q1), "Q2": list(self.Q2),
            "R1": sorted(self.R1), "R2": sorted(self.R2),
            "S": list(self.S), "f": list(self.f),
        }


def validate_h_decomposition(G: Graph, D: HDecomposition) -> list[str]:
    """All definitional constraints, checked directly; empty list iff valid."""
    out: list[str] = []
    rows = G.rows
    q1, q2, s = mask_of(D.Q1), mask_of(D.Q2), mask_of(D.S)
    r1, r2 = mask_of(D.R1), mask_of(D.R2)
    parts = [q1, q2, r1, r2, s]
    total = 0
    for p in parts:
        if total & p:
            out.append("parts overlap")
        total |= p
    if total != G.full_mask or sum(p.bit_count() for p in parts) != G.n:
        out.append("parts do not partition V(G)")
    k = len(D.Q1)
    if k < 2 or len(D.Q2) != k or len(set(D.Q1)) != k or len(set(D.Q2)) != k:
        out.append("Q1, Q2 must be equal-size lists of k >= 2 distinct vertices")
        return out
    for name, m in (("Q1", q1), ("Q2", q2), ("S", s)):
        if not is_clique_mask(G, m):
            out.append(f"{name} is not a clique")
    if len(D.S) > k:
        out.append("|S| > k")
    for i, a in enumerate(D.Q1):
        if rows[a] & q2 != 1 << D.Q2[i]:
            out.append(f"[Q1, Q2] is not the matching at index {i}")
    for name, m in (("R1", r1), ("R2", r2)):
        sub, _ = subgraph_mask(G, m)
        if sub.n and (sub.n > 64 or find_odd_hole(sub) or find_odd_hole(complement(sub), 7)):
            out.append(f"G[{name}] is not perfect")
    for x in bits(q1):
        if r1 & ~rows[x]:
            out.append("[Q1, R1] not complete")
            break
    for x in bits(q2):
        if r2 & ~rows[x]:
            out.append("[Q2, R2] not complete")
            break
    for x in bits(q1 | r1):
        if rows[x] & r2:
            out.append("[Q1+R1, R2] not empty")
            break
    for x in bits(q2 | r2):
        if rows[x] & r1:
            out.append("[Q2+R2, R1] not empty")
            break
    for x in bits(s):
        if (r1 | r2) & ~rows[x]:
            out.append("[S, R1+R2] not complete")
            break
    if len(D.f) != len(D.S) or len(set(D.f)) != len(D.f) or any(not 0 <= i < k for i in D.f):
        out.append("f is not an injection S -> {0..k-1}")
        return out
    for x, i in zip(D.S, D.f):
        miss = (1 << D.Q1[i]) | (1 << D.Q2[i])
        if rows[x] & (q1 | q2) != (q1 | q2) & ~miss:
            out.append(f"S vertex {x} does not miss exactly pair {i}")
    return out


def recognize_h_member(G: Graph) -> HDecomposition | None:
    """Try every edge ``ab`` as the first matching edge.

    Given ``a = a_1`` and ``b = b_1`` everything else is forced: S is the
    common neighbours plus the (at most one) common non-neighbour, the two
    sides are the private neighbourhoods, and a side vertex lies in Q iff it
    has a neighbour across.  The candidate is then checked against the
    definition, so the search is both sound and complete.
    """
    rows = G.rows
    full = G.full_mask
    for a, b in G.edges():
        na, nb = rows[a], rows[b]
        common = na & nb
        common_non = full & ~(na | nb) & ~((1 << a) | (1 << b))
        if common_non.bit_count() > 1:
            continue
        s = common | common_non
        side1 = (1 << a) | (na & ~nb & ~(1 << b))
        side2 = (1 << b) | (nb & ~na & ~(1 << a))
        q1 = [x for x in bits(side1) if rows[x] & side2]
        if any((rows[x] & side2).bit_count() != 1 for x in q1):
            continue
        q1.sort(key=lambda x: (x != a, x))
        q2 = [lowest(rows[x] & side2) for x in q1]
        if len(q1) < 2:
            continue
        r1 = side1 & ~mask_of(q1)
        r2 = side2 & ~mask_of(q2)
        S, f = [], []
        ok = True
        for x in bits(s):
            missing = [i for i, y in enumerate(q1) if not rows[x] >> y & 1]
            if len(missing) != 1:
                ok = False
                break
            S.append(x)
            f.append(missing[0])
        if not ok:
            continue
        D = HDecomposition(tuple(q1), tuple(q2), frozenset(bits(r1)), frozenset(bits(r2)), tuple(S), tuple(f))
        if not validate_h_decomposition(G, D):
            return D
    return None


# base embeddings -----------------------------------------------------------------

def _bfs_order(G: Graph) -> list[int]:
    order, seen = [], 0
    for start in range(G.n):
        if seen >> start & 1:
            continue
        queue = [start]
        seen |= 1 << start
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in bits(G.rows[v] & ~seen):
                seen |= 1 << u
                queue.append(u)
    return order


def embed_into_base(G: Graph, base: Graph) -> Embedding | None:
    """Induced copy of ``G`` inside ``base``; ``vertices[v]`` is the image of ``v``."""
    if G.n > base.n:
        return None
    order = _bfs_order(G)
    P, _ = induced_subgraph_ordered(G, order)
    if G.n == base.n and sorted(P.degrees()) != sorted(base.degrees()):
        return None
    for emb in iter_induced(base, Pattern("G", P)):
        image = [0] * G.n
        for i, v in enumerate(order):
            image[v] = emb.vertices[i]
        return Embedding("base", tuple(image))
    return None


@lru_cache(maxsize=None)
def _clebsch_complement() -> Graph:
    return atlas.clebsch_complement()


@lru_cache(maxsize=None)
def _clebsch_minus() -> Graph:
    return atlas.make_named("clebsch_complement_minus_vertex")


def clebsch_embedding(G: Graph) -> Embedding | None:
    return embed_into_base(G, _clebsch_complement()) if G.n <= 16 else None


# stable sets -----------------------------------------------------------------------

def _hits_all(S: int, cliques: list[int]) -> bool:
    return all(S & c for c in cliques)


def is_good_stable_set(G: Graph, S) -> bool:
    m = mask_of(S)
    return is_stable_mask(G, m) and _hits_all(m, maximum_cliques(G))


def find_good_stable_set(G: Graph, cap: int = SEARCH_CAP) -> frozenset | None:
    """A stable set meeting every maximum clique, or None if none exists.

    Colour classes of an optimal colouring are tried first; then an exact
    hitting-set search branches on the vertices of the first missed clique.
    """
    if G.n > cap:
        raise CapacityError(f"good stable set search is capped at {cap} vertices (got {G.n})")
    if G.n == 0:
        return frozenset()
    cliques = maximum_cliques(G)
    if G.n <= CHROMATIC_CAP:
        _, col = chromatic_number(G)
        for cls in col.classes():
            if _hits_all(mask_of(cls), cliques):
                return cls
    rows = G.rows
    failed: set[int] = set()

    def rec(S: int, blocked: int) -> int | None:
        for c in cliques:
            if not S & c:
                break
        else:
            return S
        if S in failed:
            return None
        for v in bits(c & ~blocked):
            res = rec(S | (1 << v), blocked | rows[v] | (1 << v))
            if res is not None:
                return res
        failed.add(S)
        return None

    found = rec(0, 0)
    return None if found is None else frozenset(bits(found))


def _perfect_mask(G: Graph, m: int) -> tuple[int, ...] | None:
    """An odd hole or antihole of ``G[m]`` in original labels, else None."""
    sub, back = subgraph_mask(G, m)
    hole = find_odd_hole(sub)
    if hole is None:
        hole = find_odd_hole(complement(sub), 7)
    return None if hole is None else tuple(back[v] for v in hole)


def find_stable_with_perfect_rest(G: Graph, cap: int = SEARCH_CAP) -> frozenset | None:
    """Stable ``S`` with ``G - S`` perfect; the empty set exactly when ``G`` is perfect.

    Any such ``S`` meets every odd hole and antihole, so branch on the vertices
    of the first obstruction found in ``G - S``.
    """
    if G.n > cap:
        raise CapacityError(f"perfect-rest search is capped at {cap} vertices (got {G.n})")
    rows = G.rows
    full = G.full_mask
    failed: set[int] = set()

    def rec(S: int, blocked: int) -> int | None:
        obstruction = _perfect_mask(G, full & ~S)
        if obstruction is None:
            return S
        if S in failed:
            return None
        for v in obstruction:
            if not blocked >> v & 1:
                res = rec(S | (1 << v), blocked | rows[v] | (1 << v))
                if res is not None:
                    return res
        failed.add(S)
        return None

    found = rec(0, 0)
    return None if found is None else frozenset(bits(found))


# awesome graphs ---------------------------------------------------------------------

def p4_starts(G: Graph) -> list[int]:
    """``out[v]``: mask of every ``x`` beginning an induced P4 ``v-x-y-z``."""
    rows = G.rows
    out = [0] * G.n
    for v in range(G.n):
        nv = rows[v] | (1 << v)
        for x in bits(rows[v]):
            nx = rows[x] | (1 << x)
            for y in bits(rows[x] & ~nv):
                if rows[y] & ~nx & ~nv:
                    out[v] |= 1 << x
                    break
    return out


def is_awesome(G: Graph) -> tuple[bool, frozenset | None]:
    """Every non-empty clique ``K`` has an induced P4 ``v-x-y-z`` with ``v`` in K
    and ``x, y, z`` outside.  Since y and z miss ``v`` they are never in K, so
    ``K`` fails iff each of its vertices has all its P4 successors inside K."""
    starts = p4_starts(G)
    for K in iter_cliques(G):
        if all(starts[v] & ~K == 0 for v in bits(K)):
            return False, frozenset(bits(K))
    return True, None


# graphs grown from the base ------------------------------------------------------------

@dataclass(frozen=True)
class GStep:
    u: int
    dominator: int
    neighbours: frozenset


@dataclass(frozen=True)
class GReductionTrace:
    """``steps`` in deletion order (original labels).  ``embedding[i]`` is the
    vertex of G playing base vertex ``i``."""

    steps: tuple[GStep, ...]
    terminal: str
    embedding: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "terminal": self.terminal,
            "embedding": list(self.embedding),
            "steps": [{"u": s.u, "dominator": s.dominator, "neighbours": sorted(s.neighbours)} for s in self.steps],
        }


BASE_TAGS = ("clebsch_complement", "clebsch_complement_minus_vertex")


def _base(tag: str) -> Graph:
    return _clebsch_complement() if tag == BASE_TAGS[0] else _clebsch_minus()


def g_membership(G: Graph) -> GReductionTrace | None:
    """Search for a deletion sequence of dominated vertices ending in a base graph."""
    ok, emb = is_p5_paraglider_free(G)
    if not ok:
        raise InputError(f"g_membership needs a (P5, paraglider)-free graph; found {emb}")
    if G.n < 15 or len(component_masks(G)) != 1 or clique_number(G)[0] != 5:
        return None
    rows = G.rows
    failed: set[int] = set()
    base_degrees = {16: sorted(_clebsch_complement().degrees()), 15: sorted(_clebsch_minus().degrees())}

    def terminal(mask: int):
        size = mask.bit_count()
        sub, back = subgraph_mask(G, mask)
        if sorted(sub.degrees()) != base_degrees[size]:
            return None
        tag = BASE_TAGS[0] if size == 16 else BASE_TAGS[1]
        emb = embed_into_base(_base(tag), sub)
        if emb is None:
            return None
        return tag, tuple(back[v] for v in emb.vertices)

    def rec(mask: int):
        size = mask.bit_count()
        if size in (15, 16):
            t = terminal(mask)
            if t is not None:
                return [], t
            if size == 15:
                return None
        if mask in failed:
            return None
        for u in bits(mask):
            nu = rows[u] & mask
            if not nu:
                continue
            for v in bits(mask & ~nu & ~(1 << u)):
                if nu & ~rows[v] == 0:
                    res = rec(mask & ~(1 << u))
                    if res is not None:
                        steps, t = res
                        return [GStep(u, v, frozenset(bits(nu)))] + steps, t
                    break
        failed.add(mask)
        return None

    found = rec(G.full_mask)
    if found is None:
        return None
    steps, (tag, emb) = found
    return GReductionTrace(tuple(steps), tag, emb)


def replay_trace(trace: GReductionTrace, n: int) -> Graph:
    """Rebuild the graph from the base and the recorded steps, checking each
    added vertex is smaller than its dominator at the time it is added."""
    base = _base(trace.terminal)
    if len(trace.embedding) != base.n:
        raise InputError("embedding size does not match the terminal base graph")
    rows = [0] * n
    present = 0
    for i, j in base.edges():
        a, b = trace.embedding[i], trace.embedding[j]
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    for v in trace.embedding:
        present |= 1 << v
    for step in reversed(trace.steps):
        nu = mask_of(step.neighbours)
        if not nu or nu & ~present or present >> step.u & 1:
            raise InputError(f"step adding {step.u} is not a valid addition")
        if nu & ~rows[step.dominator] or not present >> step.dominator & 1:
            raise InputError(f"N({step.u}) is not inside N({step.dominator})")
        for w in bits(nu):
            rows[w] |= 1 << step.u
        rows[step.u] = nu
        present |= 1 << step.u
    if present != (1 << n) - 1:
        raise InputError("trace does not cover every vertex")
    return Graph(n, tuple(rows))
