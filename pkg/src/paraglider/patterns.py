"""Induced-subgraph search with certificates, and perfection via odd holes.

Search maps pattern vertices in index order onto host vertices in increasing
order, so the first embedding found is the lexicographically least one.
Candidate sets are computed with mask intersections: a host vertex is allowed
for pattern vertex ``i`` iff it agrees with every earlier pattern vertex on
adjacency *and* non-adjacency.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import atlas
from .errors import CapacityError, InputError
from .graph import Graph, bits, complement

PERFECT_CAP = 24


@dataclass(frozen=True)
class Pattern:
    name: str
    graph: Graph


@dataclass(frozen=True)
class Embedding:
    pattern: str
    vertices: tuple[int, ...]

    def __str__(self) -> str:
        return f"PATTERN {self.pattern}: " + " ".join(str(v) for v in self.vertices)

    def to_json(self) -> dict:
        return {"pattern": self.pattern, "vertices": list(self.vertices)}


@lru_cache(maxsize=None)
def pattern(name: str) -> Pattern:
    """Look up a pattern by name; ``C<k>`` and ``C<k>-complement`` are accepted for k >= 3."""
    if name.startswith("C") and name[1:].split("-")[0].isdigit():
        k = int(name[1:].split("-")[0])
        G = atlas.cycle(k)
        if name.endswith("-complement"):
            G = complement(G)
        return Pattern(name, G)
    try:
        return Pattern(name, atlas.make_named(name))
    except InputError:
        raise InputError(f"unknown pattern {name!r}") from None


P5 = "P5"
PARAGLIDER = "paraglider"


def _as_pattern(P: Pattern | str) -> Pattern:
    return pattern(P) if isinstance(P, str) else P


def iter_induced(G: Graph, P: Pattern | str):
    """Yield every induced embedding of ``P`` in ``G`` in lexicographic order."""
    P = _as_pattern(P)
    k = P.graph.n
    if k > G.n:
        return
    prow = P.graph.rows
    full = G.full_mask
    rows = G.rows
    # non-neighbourhoods without the vertex itself
    nrows = [full & ~r & ~(1 << v) for v, r in enumerate(rows)]
    chosen = [0] * k

    def rec(i: int, used: int, cand_masks: list[int]):
        if i == k:
            yield Embedding(P.name, tuple(chosen))
            return
        cand = cand_masks[i] & ~used
        while cand:
            low = cand & -cand
            h = low.bit_length() - 1
            cand ^= low
            chosen[i] = h
            nxt = cand_masks[:]
            for j in range(i + 1, k):
                nxt[j] &= rows[h] if prow[j] >> i & 1 else nrows[h]
                if not nxt[j]:
                    break
            else:
                yield from rec(i + 1, used | low, nxt)

    yield from rec(0, 0, [full] * k)


def find_induced(G: Graph, P: Pattern | str) -> Embedding | None:
    return next(iter_induced(G, P), None)


def verify_embedding(G: Graph, P: Pattern | str, emb: Embedding | tuple[int, ...]) -> bool:
    """Independent check that ``emb`` is an induced copy of ``P`` in ``G``."""
    P = _as_pattern(P)
    vs = emb.vertices if isinstance(emb, Embedding) else tuple(emb)
    if len(vs) != P.graph.n or len(set(vs)) != len(vs):
        return False
    if any(not 0 <= v < G.n for v in vs):
        return False
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            if P.graph.adjacent(i, j) != G.adjacent(vs[i], vs[j]):
                return False
    return True


def is_p5_paraglider_free(G: Graph) -> tuple[bool, Embedding | None]:
    for name in (P5, PARAGLIDER):
        emb = find_induced(G, name)
        if emb is not None:
            return False, emb
    return True, None


def find_c5(G: Graph) -> tuple[int, ...] | None:
    emb = find_induced(G, "C5")
    return None if emb is None else emb.vertices


def iter_c5(G: Graph):
    """Every induced C5 once, as a cycle-ordered tuple starting at its least vertex."""
    for emb in iter_induced(G, "C5"):
        v = emb.vertices
        # lexicographic search already starts at the minimum; keep one orientation
        if v[0] == min(v) and v[1] < v[4]:
            yield v


def find_odd_hole(G: Graph, min_length: int = 5) -> tuple[int, ...] | None:
    """Induced odd cycle of length >= ``min_length`` in cycle order, or None.

    Depth-first over induced paths whose first vertex is the least vertex of
    the cycle; a path closes when its new end is adjacent to the start.
    """
    rows = G.rows
    for s in range(G.n):
        above = G.full_mask & ~((1 << (s + 1)) - 1)
        for p1 in bits(rows[s] & above):
            found = _extend_hole(rows, s, [s, p1], above, (1 << s) | (1 << p1), min_length)
            if found:
                return found
    return None


def _extend_hole(rows, s, path_, allowed, inner, min_length):
    # inner: path vertices plus neighbours of p1..p_{m-1}; touching it makes a chord
    last = path_[-1]
    for w in bits(rows[last] & allowed & ~inner):
        if rows[w] >> s & 1:
            length = len(path_) + 1
            if length >= min_length and length % 2:
                return tuple(path_ + [w])
            continue
        res = _extend_hole(rows, s, path_ + [w], allowed, inner | rows[last] | (1 << w), min_length)
        if res:
            return res
    return None


def is_perfect(G: Graph, cap: int = PERFECT_CAP) -> tuple[bool, Embedding | None]:
    """Perfection test: no odd hole and no odd antihole (length >= 5)."""
    if G.n > cap:
        raise CapacityError(f"is_perfect is capped at {cap} vertices (got {G.n})")
    hole = find_odd_hole(G)
    if hole is not None:
        return False, Embedding(f"C{len(hole)}", hole)
    anti = find_odd_hole(complement(G), min_length=7)
    if anti is not None:
        return False, Embedding(f"C{len(anti)}-complement", anti)
    return True, None
