"""Decomposition primitives: dominated vertices, clique cutsets, modules."""

from __future__ import annotations

from ..errors import InputError
from ..graph import Graph, bits, complement, component_masks, is_clique_mask, lowest


def find_comparable_pair(G: Graph) -> tuple[int, int] | None:
    """Least pair ``(u, v)`` of non-adjacent vertices with ``N(u) <= N(v)``."""
    rows = G.rows
    for u in range(G.n):
        for v in range(G.n):
            if u != v and not rows[u] >> v & 1 and rows[u] & ~rows[v] == 0:
                return u, v
    return None


def find_universal(G: Graph) -> int | None:
    full = G.full_mask
    for v in range(G.n):
        if G.rows[v] | (1 << v) == full:
            return v
    return None


def _neighbourhood_of(G: Graph, mask: int) -> int:
    out = 0
    for v in bits(mask):
        out |= G.rows[v]
    return out & ~mask


def minimal_separators(G: Graph):
    """Yield the minimal separators of a connected graph (Berry-Bordat-Cogis).

    Each separator is yielded once, in the order discovered.
    """
    seen: set[int] = set()
    queue: list[int] = []
    full = G.full_mask

    def push_from(removed: int):
        for comp in component_masks(G, full & ~removed):
            sep = _neighbourhood_of(G, comp)
            if sep and sep not in seen:
                seen.add(sep)
                queue.append(sep)

    for v in range(G.n):
        push_from(G.rows[v] | (1 << v))
    head = 0
    while head < len(queue):
        S = queue[head]
        head += 1
        yield S
        for x in bits(S):
            push_from(S | G.rows[x])


def _shrink_cutset(G: Graph, K: int) -> int:
    full = G.full_mask
    changed = True
    while changed:
        changed = False
        for x in bits(K):
            smaller = K & ~(1 << x)
            if smaller and len(component_masks(G, full & ~smaller)) > 1:
                K = smaller
                changed = True
                break
    return K


def find_clique_cutset_mask(G: Graph) -> tuple[int, list[int]] | None:
    if G.n == 0 or len(component_masks(G)) != 1:
        raise InputError("find_clique_cutset needs a connected graph")
    for S in minimal_separators(G):
        if is_clique_mask(G, S):
            K = _shrink_cutset(G, S)
            parts = [K | comp for comp in component_masks(G, G.full_mask & ~K)]
            return K, parts
    return None


def find_clique_cutset(G: Graph) -> tuple[frozenset[int], list[frozenset[int]]] | None:
    """An inclusion-minimal clique cutset ``K`` and the blocks ``K + V(H_i)``,
    one per component ``H_i`` of ``G - K``; None when ``G`` is an atom."""
    found = find_clique_cutset_mask(G)
    if found is None:
        return None
    K, parts = found
    return frozenset(bits(K)), [frozenset(bits(p)) for p in parts]


def is_atom(G: Graph) -> bool:
    return G.n > 0 and len(component_masks(G)) == 1 and find_clique_cutset_mask(G) is None


# modules -----------------------------------------------------------------------

def module_closure(G: Graph, seed: int) -> int:
    """Smallest module containing ``seed``: keep absorbing splitters."""
    M = seed
    rows = G.rows
    outside = G.full_mask & ~M
    changed = True
    while changed:
        changed = False
        for x in bits(outside):
            hit = rows[x] & M
            if hit and hit != M:
                M |= 1 << x
                outside &= ~(1 << x)
                changed = True
    return M


def is_module_mask(G: Graph, M: int) -> bool:
    for x in bits(G.full_mask & ~M):
        hit = G.rows[x] & M
        if hit and hit != M:
            return False
    return True


def find_homogeneous_set_mask(G: Graph) -> int | None:
    strong = [M for M in maximal_strong_modules(G) if 1 < M.bit_count() < G.n]
    if strong:
        return max(strong, key=lambda M: (M.bit_count(), -M))
    best = None
    for u in range(G.n):
        for v in range(u + 1, G.n):
            M = module_closure(G, (1 << u) | (1 << v))
            if M != G.full_mask:
                if best is None or M.bit_count() > best.bit_count():
                    best = M
    return best


def find_homogeneous_set(G: Graph) -> frozenset[int] | None:
    """A largest proper homogeneous set, or None when ``G`` is prime."""
    M = find_homogeneous_set_mask(G)
    return None if M is None else frozenset(bits(M))


def maximal_strong_modules(G: Graph) -> list[int]:
    """Top level of the modular decomposition as masks (sorted by least vertex)."""
    if G.n <= 1:
        return [G.full_mask] if G.n else []
    comps = component_masks(G)
    if len(comps) > 1:
        return comps
    cocomps = component_masks(complement(G))
    if len(cocomps) > 1:
        return cocomps
    # prime quotient: u ~ v iff the smallest module holding both is proper
    out = []
    todo = G.full_mask
    while todo:
        u = lowest(todo)
        cls = 1 << u
        for v in bits(todo & ~(1 << u)):
            if module_closure(G, (1 << u) | (1 << v)) != G.full_mask:
                cls |= 1 << v
        out.append(cls)
        todo &= ~cls
    return out
