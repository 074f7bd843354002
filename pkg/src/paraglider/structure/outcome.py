"""Case dispatch for connected (P5, paraglider)-free graphs.

Reductions come first (dominated vertex, universal vertex, clique cutset);
atoms are then either small enough for the exact oracle, perfect, or contain
a C5 and fall into one of four families keyed by the first of F1, F2, F3
present.  Each family tries the constructive stable sets of its case
analysis, then exact searches as a fallback, so every witness is checked
before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InputError, StructureViolation
from ..graph import Graph, bits, component_masks, is_stable_mask, mask_of, subgraph_mask
from ..oracle import maximum_cliques
from ..patterns import Embedding, find_c5, find_induced, is_p5_paraglider_free
from .classes import (
    ExpansionMap,
    HDecomposition,
    clebsch_embedding,
    find_good_stable_set,
    find_stable_with_perfect_rest,
    recognize_c5_expansion,
    recognize_h_member,
    validate_expansion,
    validate_h_decomposition,
)
from .decomposition import find_clique_cutset_mask, find_comparable_pair, find_universal
from .partition import C5Partition, c5_partition

SMALL_ATOM_CUTOFF = 16


@dataclass(frozen=True)
class Outcome:
    tag = "Outcome"

    def to_json(self) -> dict:
        return {"tag": self.tag}

    def validate(self, G: Graph) -> list[str]:
        return []


@dataclass(frozen=True)
class ComparablePair(Outcome):
    u: int
    v: int
    tag = "ComparablePair"

    def to_json(self):
        return {"tag": self.tag, "u": self.u, "v": self.v}

    def validate(self, G):
        ok = not G.adjacent(self.u, self.v) and G.rows[self.u] & ~G.rows[self.v] == 0
        return [] if ok else [f"N({self.u}) is not inside N({self.v})"]


@dataclass(frozen=True)
class Universal(Outcome):
    u: int
    tag = "Universal"

    def to_json(self):
        return {"tag": self.tag, "u": self.u}

    def validate(self, G):
        return [] if G.degree(self.u) == G.n - 1 else [f"{self.u} is not universal"]


@dataclass(frozen=True)
class CliqueCutset(Outcome):
    K: frozenset
    parts: tuple[frozenset, ...]
    tag = "CliqueCutset"

    def to_json(self):
        return {"tag": self.tag, "K": sorted(self.K), "parts": [sorted(p) for p in self.parts]}

    def validate(self, G):
        return validate_cutset(G, self.K, self.parts)


@dataclass(frozen=True)
class SmallAtom(Outcome):
    n: int
    tag = "SmallAtom"

    def to_json(self):
        return {"tag": self.tag, "n": self.n}


@dataclass(frozen=True)
class Perfect(Outcome):
    tag = "Perfect"

    def validate(self, G):
        # in this class an imperfect graph always has an induced C5
        return [] if find_c5(G) is None else ["graph has an induced C5"]


@dataclass(frozen=True)
class ClebschSubgraph(Outcome):
    embedding: tuple[int, ...]
    tag = "ClebschSubgraph"

    def to_json(self):
        return {"tag": self.tag, "embedding": list(self.embedding)}

    def validate(self, G):
        from .classes import _clebsch_complement

        host = _clebsch_complement()
        vs = self.embedding
        if len(set(vs)) != G.n:
            return ["embedding is not injective"]
        for u in range(G.n):
            for v in range(u + 1, G.n):
                if G.adjacent(u, v) != host.adjacent(vs[u], vs[v]):
                    return [f"pair {u},{v} not preserved"]
        return []


@dataclass(frozen=True)
class C5ExpansionCase(Outcome):
    expansion: ExpansionMap
    tag = "C5ExpansionCase"

    def to_json(self):
        return {"tag": self.tag, **self.expansion.to_json()}

    def validate(self, G):
        return validate_expansion(G, self.expansion)


@dataclass(frozen=True)
class GoodStableSet(Outcome):
    S: frozenset
    source: str = "search"
    tag = "GoodStableSet"

    def to_json(self):
        return {"tag": self.tag, "S": sorted(self.S), "source": self.source}

    def validate(self, G):
        m = mask_of(self.S)
        if not m or not is_stable_mask(G, m):
            return ["S is empty or not stable"]
        missed = [c for c in maximum_cliques(G) if not c & m]
        return [f"misses maximum clique {sorted(bits(missed[0]))}"] if missed else []


@dataclass(frozen=True)
class StablePerfectRest(Outcome):
    S: frozenset
    source: str = "search"
    tag = "StablePerfectRest"

    def to_json(self):
        return {"tag": self.tag, "S": sorted(self.S), "source": self.source}

    def validate(self, G):
        m = mask_of(self.S)
        if not m or not is_stable_mask(G, m):
            return ["S is empty or not stable"]
        rest, _ = subgraph_mask(G, G.full_mask & ~m)
        return [] if find_c5(rest) is None else ["G - S has an induced C5"]


@dataclass(frozen=True)
class HMember(Outcome):
    decomposition: HDecomposition
    tag = "HMember"

    def to_json(self):
        return {"tag": self.tag, **self.decomposition.to_json()}

    def validate(self, G):
        return validate_h_decomposition(G, self.decomposition)


def validate_cutset(G: Graph, K, parts) -> list[str]:
    km = mask_of(K)
    out = []
    for x in bits(km):
        if km & ~G.rows[x] & ~(1 << x):
            out.append("K is not a clique")
            break
    comps = component_masks(G, G.full_mask & ~km)
    if len(comps) < 2:
        out.append("G - K is connected")
    if sorted(mask_of(p) for p in parts) != sorted(km | c for c in comps):
        out.append("parts are not K plus the components of G - K")
    for x in bits(km):
        smaller = km & ~(1 << x)
        if smaller and len(component_masks(G, G.full_mask & ~smaller)) > 1:
            out.append("K is not inclusion-minimal")
            break
    return out


# dispatch --------------------------------------------------------------------------

def structure_outcome(G: Graph, small_atom_cutoff: int = SMALL_ATOM_CUTOFF, check: bool = True) -> Outcome:
    """First applicable case: ComparablePair, Universal, CliqueCutset,
    SmallAtom (n <= cutoff), Perfect, then the C5 case analysis.

    ``small_atom_cutoff=0`` disables the oracle shortcut so every atom goes
    through the full case analysis.
    """
    if G.n == 0 or len(component_masks(G)) != 1:
        raise InputError("structure_outcome needs a connected non-empty graph")
    if check:
        ok, emb = is_p5_paraglider_free(G)
        if not ok:
            raise InputError(f"graph is not (P5, paraglider)-free: {emb}")
    pair = find_comparable_pair(G)
    if pair is not None:
        return ComparablePair(*pair)
    u = find_universal(G)
    if u is not None:
        return Universal(u)
    cut = find_clique_cutset_mask(G)
    if cut is not None:
        K, parts = cut
        return CliqueCutset(frozenset(bits(K)), tuple(frozenset(bits(p)) for p in parts))
    if G.n <= small_atom_cutoff:
        return SmallAtom(G.n)
    C = find_c5(G)
    if C is None:
        return Perfect()
    out = _atom_with_c5(G, C)
    problems = out.validate(G)
    if problems:
        raise StructureViolation(f"structure theorem violated: {out.tag} witness invalid ({problems[0]})", G)
    return out


def _first_valid(G: Graph, candidates, kind) -> Outcome | None:
    seen = set()
    for S, source in candidates:
        S = frozenset(S)
        if not S or S in seen:
            continue
        seen.add(S)
        out = kind(S, source)
        if not out.validate(G):
            return out
    return None


def _anti_sets(G: Graph, P: C5Partition):
    """``{x} + (non-neighbours of x in Y_j)`` for ``x`` in A."""
    for x in sorted(P.A):
        for j in range(5):
            yield {x} | {y for y in P.Y[j] if not G.adjacent(x, y)}, "A-anti"


def _atom_with_c5(G: Graph, C: tuple[int, ...]) -> Outcome:
    emb = find_induced(G, "F1")
    if emb is not None:
        return _case_f1(G, emb)
    emb = find_induced(G, "F2")
    if emb is not None:
        return _case_f2(G, emb)
    emb = find_induced(G, "F3")
    if emb is not None:
        return _case_f3(G, emb)
    return _case_c5(G, C)


def _fallback(G: Graph, prefer_good: bool) -> Outcome:
    order = (find_good_stable_set, find_stable_with_perfect_rest)
    if not prefer_good:
        order = order[::-1]
    for finder in order:
        S = finder(G)
        if S:
            out = (GoodStableSet if finder is find_good_stable_set else StablePerfectRest)(S, "search")
            if not out.validate(G):
                return out
    D = recognize_h_member(G)
    if D is not None:
        return HMember(D)
    E = recognize_c5_expansion(G)
    if E is not None:
        return C5ExpansionCase(E)
    emb = clebsch_embedding(G)
    if emb is not None:
        return ClebschSubgraph(emb.vertices)
    raise StructureViolation("structure theorem violated: no case applies", G)


def _case_f1(G: Graph, emb: Embedding) -> Outcome:
    prime = find_induced(G, "F1prime")
    cands = []
    if prime is not None:
        C, (t1, t3) = prime.vertices[:5], prime.vertices[5:]
        P = c5_partition(G, C)
        cands.append(({t1, t3, C[4]} | P.X[4], "F1prime"))
    C, t1 = emb.vertices[:5], emb.vertices[5]
    P = c5_partition(G, C)
    if not P.Z[3]:
        cands.append(({t1, C[2], C[4]} | P.X[2] | P.X[4], "F1"))
    else:
        cands.append((set(P.Z[3]) | {C[3]} | P.X[3], "F1-Z"))
    return _first_valid(G, cands, StablePerfectRest) or _fallback(G, prefer_good=False)


def _case_f2(G: Graph, emb: Embedding) -> Outcome:
    if G.n <= 16:
        e = clebsch_embedding(G)
        if e is not None:
            return ClebschSubgraph(e.vertices)
    D = recognize_h_member(G)
    if D is not None:
        return HMember(D)
    C = emb.vertices[:5]
    P = c5_partition(G, C)
    cands = list(_anti_sets(G, P))
    cands += [({v}, "F2-v") for v in C]
    for i in range(5):
        cands += [({z, C[i]}, "F2-z") for z in P.Z[i]]
        for y in P.Y[i]:
            cands += [({y, v}, "F2-y") for v in C if not G.adjacent(y, v)]
    return _first_valid(G, cands, GoodStableSet) or _fallback(G, prefer_good=True)


def _case_f3(G: Graph, emb: Embedding) -> Outcome:
    C = emb.vertices[:5]
    P = c5_partition(G, C)
    out = _first_valid(G, _anti_sets(G, P), GoodStableSet)
    if out is not None:
        return out
    cands = [({C[i], C[(i + 2) % 5]}, "F3-pair") for i in range(5)]
    cands += [({v}, "F3-v") for v in C]
    return _first_valid(G, cands, StablePerfectRest) or _fallback(G, prefer_good=False)


def _case_c5(G: Graph, C: tuple[int, ...]) -> Outcome:
    E = recognize_c5_expansion(G)
    if E is not None:
        return C5ExpansionCase(E)
    if G.n <= 10:
        e = clebsch_embedding(G)
        if e is not None:
            return ClebschSubgraph(e.vertices)
    cands = [({v}, "C5-v") for v in C]
    cands += [({C[i], C[(i + 2) % 5]}, "C5-pair") for i in range(5)]
    return _first_valid(G, cands, StablePerfectRest) or _fallback(G, prefer_good=False)
