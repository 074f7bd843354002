"""Partition of a graph around an induced C5 and checks of its properties.

With ``C = (v_0, ..., v_4)`` in cycle order (indices mod 5) every other vertex
is sorted by its neighbourhood on ``C``:

=====  ===============================
T[i]   {v_i, v_{i+1}, v_{i+3}}
X[i]   {v_{i-1}, v_{i+1}}
Y[i]   {v_{i-1}, v_i, v_{i+1}}
Z[i]   C minus v_i
A      all of C
=====  ===============================

Anything else lands in ``unclassified``.  Property names R1..R11 follow the
usual numbering of this partition's lemma; each violation carries the
indices and witness vertices that break it.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InputError
from ..graph import Graph, bits, is_clique_mask, is_stable_mask, mask_of
from ..patterns import find_induced, verify_embedding


@dataclass(frozen=True)
class C5Partition:
    C: tuple[int, ...]
    T: tuple[frozenset, ...]
    X: tuple[frozenset, ...]
    Y: tuple[frozenset, ...]
    Z: tuple[frozenset, ...]
    A: frozenset
    unclassified: frozenset = frozenset()

    def union(self, family: str) -> frozenset:
        return frozenset().union(*getattr(self, family))

    def to_json(self) -> dict:
        return {
            "C": list(self.C),
            **{k: [sorted(s) for s in getattr(self, k)] for k in "TXYZ"},
            "A": sorted(self.A),
            "unclassified": sorted(self.unclassified),
        }


@dataclass(frozen=True)
class Violation:
    prop: str
    index: int | None
    witness: tuple[int, ...]
    detail: str = ""

    def __str__(self) -> str:
        at = "" if self.index is None else f" i={self.index}"
        return f"{self.prop}{at}: {self.detail} witness={list(self.witness)}"


def _signature_table() -> dict[int, tuple[str, int]]:
    table: dict[int, tuple[str, int]] = {}
    for i in range(5):
        table[mask_of({i, (i + 1) % 5, (i + 3) % 5})] = ("T", i)
        table[mask_of({(i - 1) % 5, (i + 1) % 5})] = ("X", i)
        table[mask_of({(i - 1) % 5, i, (i + 1) % 5})] = ("Y", i)
        table[0b11111 & ~(1 << i)] = ("Z", i)
    table[0b11111] = ("A", 0)
    return table


_SIGNATURES = _signature_table()


def c5_partition(G: Graph, C: tuple[int, ...] | list[int]) -> C5Partition:
    """Classify every vertex outside ``C`` by its neighbourhood on ``C``."""
    C = tuple(C)
    if len(C) != 5 or not verify_embedding(G, "C5", C):
        raise InputError(f"{C} is not an induced C5 in cycle order")
    sets = {f: [set() for _ in range(5)] for f in "TXYZ"}
    A, rest = set(), set()
    cmask = mask_of(C)
    for x in range(G.n):
        if cmask >> x & 1:
            continue
        sig = 0
        for i, v in enumerate(C):
            if G.rows[x] >> v & 1:
                sig |= 1 << i
        kind = _SIGNATURES.get(sig)
        if kind is None:
            rest.add(x)
        elif kind[0] == "A":
            A.add(x)
        else:
            sets[kind[0]][kind[1]].add(x)
    fz = lambda fam: tuple(frozenset(s) for s in sets[fam])
    return C5Partition(C, fz("T"), fz("X"), fz("Y"), fz("Z"), frozenset(A), frozenset(rest))


def is_dominating(G: Graph, S) -> bool:
    m = mask_of(S)
    reach = m
    for v in bits(m):
        reach |= G.rows[v]
    return reach == G.full_mask


class _Checker:
    def __init__(self, G: Graph, P: C5Partition):
        self.G = G
        self.P = P
        self.out: list[Violation] = []
        m = lambda fam: [mask_of(s) for s in getattr(P, fam)]
        self.T, self.X, self.Y, self.Z = m("T"), m("X"), m("Y"), m("Z")
        self.A = mask_of(P.A)
        self.all = lambda fam: _or(getattr(self, fam))

    def add(self, prop, i, witness, detail):
        self.out.append(Violation(prop, i, tuple(witness), detail))

    def complete(self, prop, i, X, Y, what):
        for x in bits(X):
            miss = Y & ~self.G.rows[x] & ~(1 << x)
            if miss:
                self.add(prop, i, (x, _low(miss)), f"{what} not complete")
                return

    def empty(self, prop, i, X, Y, what):
        for x in bits(X):
            hit = Y & self.G.rows[x]
            if hit:
                self.add(prop, i, (x, _low(hit)), f"{what} not empty")
                return

    def edges_between(self, X, Y) -> list[tuple[int, int]]:
        return [(x, y) for x in bits(X) for y in bits(Y & self.G.rows[x])]


def _or(masks) -> int:
    out = 0
    for m in masks:
        out |= m
    return out


def _low(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def validate_partition_properties(G: Graph, P: C5Partition) -> list[Violation]:
    """Check R1..R11 on ``P``; empty list iff every applicable property holds."""
    ch = _Checker(G, P)
    rows = G.rows
    T, X, Y, Z, A = ch.T, ch.X, ch.Y, ch.Z, ch.A
    Tall, Xall, Yall, Zall = _or(T), _or(X), _or(Y), _or(Z)
    C = P.C
    cmask = mask_of(C)
    r = lambda i: i % 5

    # R1: C dominates and the classes cover V
    for x in range(G.n):
        if not cmask >> x & 1 and not rows[x] & cmask:
            ch.add("R1", None, (x,), "vertex with no neighbour on C")
            break
    if P.unclassified:
        ch.add("R1", None, (min(P.unclassified),), "vertex outside C, A, T, X, Y, Z")

    for i in range(5):
        # R2
        if T[i].bit_count() > 1:
            ch.add("R2a", i, tuple(bits(T[i])), "|T_i| > 1")
        for x in bits(T[i]):
            hit = rows[x] & Tall
            if hit:
                ch.add("R2b", i, (x, _low(hit)), "T not independent")
        ch.complete("R2c", i, T[i], X[r(i + 3)], "[T_i, X_{i+3}]")
        ch.empty("R2c", i, T[i], Xall & ~X[r(i + 3)], "[T_i, X_j], j != i+3")
        # R3
        if not is_stable_mask(G, X[i]):
            ch.add("R3a", i, tuple(bits(X[i])), "X_i not independent")
        ch.complete("R3b", i, X[i], X[r(i + 1)], "[X_i, X_{i+1}]")
        e = ch.edges_between(X[i], X[r(i + 2)])
        if len(e) > 1:
            ch.add("R3c", i, e[0] + e[1], "|[X_i, X_{i+2}]| > 1")
        if X[r(i + 1)] and e:
            ch.add("R3d", i, e[0], "X_{i+1} non-empty but [X_i, X_{i+2}] has an edge")
        # R4
        k2k1 = _find_k2k1(G, Y[i])
        if k2k1:
            ch.add("R4a", i, k2k1, "G[Y_i] contains K2+K1")
        ch.complete("R4b", i, Y[i], Y[r(i + 1)], "[Y_i, Y_{i+1}]")
        e = ch.edges_between(Y[i], Y[r(i + 2)])
        if e:
            for x in bits(Y[i]):
                if (rows[x] & Y[r(i + 2)]).bit_count() > 1:
                    ch.add("R4c", i, (x,), "[Y_i, Y_{i+2}] not a matching")
            for y in bits(Y[r(i + 2)]):
                if (rows[y] & Y[i]).bit_count() > 1:
                    ch.add("R4c", i, (y,), "[Y_i, Y_{i+2}] not a matching")
        if Y[i]:
            for j in (r(i - 1), r(i + 1)):
                if not is_clique_mask(G, Y[j]):
                    ch.add("R4d", i, tuple(bits(Y[j])), f"Y_{j} not a clique while Y_i non-empty")
        if Y[r(i + 2)]:
            for y in bits(Y[i]):
                if Y[r(i + 2)] & ~rows[y] == 0 and Y[r(i + 2)].bit_count() > 1:
                    ch.add("R4e", i, (y,), "y complete to Y_{i+2} but |Y_{i+2}| > 1")
            if Y[i] and all(Y[r(i + 2)] & ~rows[y] == 0 for y in bits(Y[i])):
                if Y[i].bit_count() > 1 or Y[r(i + 2)].bit_count() > 1:
                    ch.add("R4e", i, tuple(bits(Y[i] | Y[r(i + 2)])), "[Y_i, Y_{i+2}] complete but a side has > 1 vertex")
        # R5
        if Z[i].bit_count() > 1:
            ch.add("R5a", i, tuple(bits(Z[i])), "|Z_i| > 1")
        ch.empty("R5b", i, Z[i], Z[r(i + 1)], "[Z_i, Z_{i+1}]")
        ch.complete("R5c", i, Z[i], Z[r(i + 2)], "[Z_i, Z_{i+2}]")
        # R6
        ch.complete("R6a", i, X[i], Y[i] | Y[r(i + 1)] | Y[r(i - 1)] | (Zall & ~Z[i]), "[X_i, Y_i+Y_{i+-1}+(Z-Z_i)]")
        ch.empty("R6b", i, X[i], Y[r(i - 2)] | Y[r(i + 2)] | Z[i], "[X_i, Y_{i+-2}+Z_i]")
        # R7
        ch.complete("R7a", i, Z[i], Y[i] | Y[r(i - 2)] | Y[r(i + 2)], "[Z_i, Y_i+Y_{i+-2}]")
        ch.empty("R7b", i, Z[i], Y[r(i - 1)] | Y[r(i + 1)], "[Z_i, Y_{i+-1}]")

    # R8
    if not is_clique_mask(G, A):
        ch.add("R8a", None, tuple(bits(A)), "A not a clique")
    ch.complete("R8b", None, A, G.full_mask & ~(A | Yall), "[A, V-(A+Y)]")

    # R9: only when T_i is non-empty
    for i in range(5):
        if not T[i]:
            continue
        bad = (T[r(i - 1)] | T[r(i + 1)] | Yall | (Zall & ~Z[r(i + 3)]))
        if bad:
            ch.add("R9a", i, (_low(bad),), "T_{i+-1}, Y or Z - Z_{i+3} non-empty")
        ch.empty("R9b", i, X[i], X[r(i + 2)], "[X_i, X_{i+2}]")
        ch.empty("R9b", i, X[r(i + 1)], X[r(i - 1)], "[X_{i+1}, X_{i-1}]")
        ch.empty("R9b", i, T[i], Z[r(i + 3)], "[T_i, Z_{i+3}]")

    # R10
    for q in bits(A):
        for i in range(5):
            for x in bits(Y[i]):
                for j in (r(i + 1), r(i + 2)):
                    for y in bits(Y[j]):
                        qx, qy = rows[q] >> x & 1, rows[q] >> y & 1
                        if rows[x] >> y & 1 and qx != qy:
                            ch.add("R10a", i, (q, x, y), "q splits an adjacent Y_i-Y_{i+1,2} pair")
                        if j == r(i + 2) and not rows[x] >> y & 1 and not (qx or qy):
                            ch.add("R10b", i, (q, x, y), "q misses a non-adjacent Y_i-Y_{i+2} pair")
                for y in bits(Y[i] & rows[x]):
                    if y > x and not (rows[q] >> x & 1 or rows[q] >> y & 1):
                        ch.add("R10c", i, (q, x, y), "q misses an adjacent pair in Y_i")
            if not is_stable_mask(G, Y[i] & ~rows[q]):
                ch.add("R10d", i, (q,), "non-neighbourhood of q in Y_i not stable")

    # R11: only when G is F1-free
    if find_induced(G, "F1") is None:
        for i in range(5):
            ch.empty("R11", i, X[i], X[r(i + 2)] | X[r(i - 2)] | Y[r(i + 2)] | Y[r(i - 2)], "[X_i, X_{i+-2}+Y_{i+-2}]")
        if Xall:
            ch.add("R11", None, (_low(Xall),), "X non-empty in an F1-free graph")
    return ch.out


def _find_k2k1(G: Graph, mask: int) -> tuple[int, ...] | None:
    vs = list(bits(mask))
    rows = G.rows
    for a in vs:
        for b in vs:
            if b > a and rows[a] >> b & 1:
                for c in vs:
                    if c not in (a, b) and not rows[c] >> a & 1 and not rows[c] >> b & 1:
                        return (a, b, c)
    return None
