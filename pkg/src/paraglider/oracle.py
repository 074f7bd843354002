"""Exact ground truth at desk scale: clique, independence and chromatic numbers.

``clique_number`` is a bitset branch and bound with a greedy-colouring bound.
``chromatic_number`` deepens ``k`` from a lower bound and decides
k-colourability by DSATUR-ordered backtracking with forward checking; the
first maximum clique is precoloured and a new colour may only be opened in
order, which removes colour-permutation symmetry.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

import numpy as np

from .errors import CapacityError, InputError
from .graph import Graph, bits, complement, lowest

CHROMATIC_CAP = 40


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(set(self.colors))

    def classes(self) -> list[frozenset[int]]:
        out: dict[int, set[int]] = {}
        for v, c in enumerate(self.colors):
            out.setdefault(c, set()).add(v)
        return [frozenset(out[c]) for c in sorted(out)]

    def as_dict(self) -> dict[int, int]:
        return dict(enumerate(self.colors))

    @classmethod
    def normalized(cls, colors: Sequence[int]) -> "Coloring":
        """Renumber colours to 0..k-1 in order of first appearance."""
        remap: dict[int, int] = {}
        return cls(tuple(remap.setdefault(c, len(remap)) for c in colors))


@dataclass(frozen=True)
class OracleReport:
    omega: int
    alpha: int
    chi: int
    witness_clique: frozenset
    witness_coloring: Coloring

    def to_json(self) -> dict:
        return {
            "omega": self.omega,
            "alpha": self.alpha,
            "chi": self.chi,
            "witness_clique": sorted(self.witness_clique),
            "witness_coloring": list(self.witness_coloring.colors),
        }


# cliques -------------------------------------------------------------------

def _greedy_bound(rows: Sequence[int], cand: int) -> list[tuple[int, int]]:
    """Greedy colour classes over ``cand``; returns (vertex, colour number) pairs
    in increasing colour order, the standard MCQ ordering."""
    order = []
    color = 0
    todo = cand
    while todo:
        color += 1
        q = todo
        while q:
            v = lowest(q)
            q &= ~rows[v] & ~(1 << v)
            todo &= ~(1 << v)
            order.append((v, color))
    return order


def _max_clique_mask(rows: Sequence[int], cand: int) -> int:
    best = 0
    best_size = 0

    def expand(current: int, size: int, cand: int):
        nonlocal best, best_size
        for v, col in reversed(_greedy_bound(rows, cand)):
            if size + col <= best_size:
                return
            nxt = cand & rows[v]
            if nxt:
                expand(current | (1 << v), size + 1, nxt)
            elif size + 1 > best_size:
                best, best_size = current | (1 << v), size + 1
            cand &= ~(1 << v)

    if cand:
        expand(0, 0, cand)
    return best


def clique_number(G: Graph) -> tuple[int, frozenset[int]]:
    m = _max_clique_mask(G.rows, G.full_mask)
    return m.bit_count(), frozenset(bits(m))


def clique_number_mask(G: Graph, within: int) -> int:
    return _max_clique_mask(G.rows, within).bit_count()


def independence_number(G: Graph) -> tuple[int, frozenset[int]]:
    return clique_number(complement(G))


def iter_cliques(G: Graph, within: int | None = None) -> Iterator[int]:
    """Every non-empty clique of ``G[within]`` as a mask, each exactly once."""
    rows = G.rows

    def rec(current: int, cand: int):
        while cand:
            v = lowest(cand)
            cand &= cand - 1
            c = current | (1 << v)
            yield c
            yield from rec(c, cand & rows[v])

    yield from rec(0, G.full_mask if within is None else within)


def maximal_cliques(G: Graph, within: int | None = None) -> Iterator[int]:
    """Bron-Kerbosch with pivoting; yields maximal cliques as masks."""
    rows = G.rows

    def bk(r: int, p: int, x: int):
        if not p and not x:
            yield r
            return
        pivot = max(bits(p | x), key=lambda u: (rows[u] & p).bit_count())
        for v in bits(p & ~rows[pivot]):
            yield from bk(r | (1 << v), p & rows[v], x & rows[v])
            p &= ~(1 << v)
            x |= 1 << v

    p = G.full_mask if within is None else within
    if p:
        yield from bk(0, p, 0)


def maximum_cliques(G: Graph, within: int | None = None) -> list[int]:
    cl = list(maximal_cliques(G, within))
    if not cl:
        return []
    w = max(c.bit_count() for c in cl)
    return sorted(c for c in cl if c.bit_count() == w)


# colouring -------------------------------------------------------------------

def _k_colorable(rows: Sequence[int], n: int, k: int, seed_clique: list[int]) -> list[int] | None:
    """Return a colouring with colours < k or None.  DSATUR branching."""
    if k <= 0:
        return [] if n == 0 else None
    full_colors = (1 << k) - 1
    color = [-1] * n
    avail = [full_colors] * n
    if len(seed_clique) > k:
        return None
    for c, v in enumerate(seed_clique):
        color[v] = c
    for v in seed_clique:
        for u in bits(rows[v]):
            avail[u] &= ~(1 << color[v])
    for v in range(n):
        if color[v] < 0 and not avail[v]:
            return None
    uncolored = set(v for v in range(n) if color[v] < 0)
    used = len(seed_clique)
    deg = [r.bit_count() for r in rows]

    def rec(used: int) -> bool:
        if not uncolored:
            return True
        v = min(uncolored, key=lambda u: (avail[u].bit_count(), -deg[u]))
        choices = avail[v] & ((1 << min(used + 1, k)) - 1)
        uncolored.discard(v)
        nbrs = [u for u in bits(rows[v]) if color[u] < 0]
        for c in bits(choices):
            bit = 1 << c
            color[v] = c
            touched = []
            ok = True
            for u in nbrs:
                if avail[u] & bit:
                    avail[u] &= ~bit
                    touched.append(u)
                    if not avail[u]:
                        ok = False
                        break
            if ok and rec(max(used, c + 1)):
                return True
            for u in touched:
                avail[u] |= bit
        color[v] = -1
        uncolored.add(v)
        return False

    return color if rec(used) else None


def chromatic_number(G: Graph, cap: int = CHROMATIC_CAP, lower: int = 0) -> tuple[int, Coloring]:
    """Exact chi with an optimal colouring.

    The search starts at ``max(omega, ceil(n/alpha), lower)``; every bound used
    is a valid lower bound, so the first feasible ``k`` is optimal.
    """
    if G.n > cap:
        raise CapacityError(f"chromatic_number is capped at {cap} vertices (got {G.n})")
    if G.n == 0:
        return 0, Coloring(())
    w, K = clique_number(G)
    a, _ = independence_number(G)
    k = max(w, -(-G.n // a), lower)
    seed = sorted(K, key=lambda v: -G.degree(v))
    while True:
        col = _k_colorable(G.rows, G.n, k, seed)
        if col is not None:
            return k, Coloring.normalized(col)
        k += 1


def verify_coloring(G: Graph, c: Coloring | Sequence[int] | Mapping[int, int]) -> bool:
    """True iff no edge is monochromatic.  A colour map missing a vertex is an input error."""
    if isinstance(c, Coloring):
        colors = c.colors
    elif isinstance(c, Mapping):
        missing = [v for v in range(G.n) if v not in c]
        if missing:
            raise InputError(f"colouring is partial: vertex {missing[0]} has no colour")
        colors = tuple(c[v] for v in range(G.n))
    else:
        colors = tuple(c)
    if len(colors) != G.n:
        raise InputError(f"colouring covers {len(colors)} vertices, graph has {G.n}")
    return all(colors[u] != colors[v] for u, v in G.edges())


def oracle_report(G: Graph, cap: int = CHROMATIC_CAP) -> OracleReport:
    w, K = clique_number(G)
    a, _ = independence_number(G)
    chi, col = chromatic_number(G, cap=cap)
    return OracleReport(w, a, chi, K, col)


# whole-lattice tables ----------------------------------------------------------

def induced_tables(G: Graph, cap: int = 20) -> tuple[np.ndarray, np.ndarray]:
    """omega and chi of ``G[S]`` for every vertex subset ``S`` (indexed by mask).

    Memoised recursion over the subset lattice:
    ``omega(S) = max(omega(S - v), 1 + omega(S & N(v)))`` and
    ``chi(S) = 1 + min chi(S - I)`` over stable ``I`` containing ``v``, where
    ``v`` is the least vertex of ``S``.  Every subset of ``S`` is numerically
    smaller than ``S``, so a single increasing sweep suffices.
    """
    n = G.n
    if n > cap:
        raise CapacityError(f"induced_tables is capped at {cap} vertices (got {n})")
    size = 1 << n
    omega = np.zeros(size, dtype=np.int8)
    chi = np.zeros(size, dtype=np.int8)
    rows = G.rows
    full = G.full_mask
    non = [full & ~r & ~(1 << v) for v, r in enumerate(rows)]
    om = [0] * size
    ch = [0] * size
    for S in range(1, size):
        v = lowest(S)
        rest = S & ~(1 << v)
        om[S] = max(om[rest], 1 + om[S & rows[v]])
        best = n
        # stable sets containing v: v plus any stable subset of its non-neighbours in S
        stack = [(rest, S & non[v])]
        while stack:
            remaining, cand = stack.pop()
            if ch[remaining] < best:
                best = ch[remaining]
            while cand:
                u = lowest(cand)
                cand &= cand - 1
                stack.append((remaining & ~(1 << u), cand & non[u]))
        ch[S] = 1 + best
    omega[:] = om
    chi[:] = ch
    return omega, chi
