"""Immutable simple graphs stored as bit rows, plus graph6/DOT/JSON codecs.

Vertices are the integers ``0..n-1``.  Row ``v`` is a Python int whose bit
``u`` is set iff ``uv`` is an edge, so neighbourhood algebra is plain integer
arithmetic and there is no separate representation above 64 vertices.

Vertex sets appear in two forms: public functions take any iterable of ints
and return ``frozenset``; the ``*_mask`` helpers take and return bit masks and
are what the search code uses internally.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import Graph6Error, InputError

VertexSet = frozenset


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return mask.bit_count()


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise InputError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise InputError(f"row {v} mentions a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise InputError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.rows[u] >> v & 1:
                    raise InputError(f"adjacency not symmetric at ({v}, {u})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.rows[v]))

    def non_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.full_mask & ~self.rows[v] & ~(1 << v)))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def content_hash(self) -> str:
        """Stable hash of the labelled graph (not an isomorphism invariant)."""
        return hashlib.sha256(to_graph6(self).encode()).hexdigest()[:16]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def _check_range(G: Graph, vertices: Iterable[int]) -> list[int]:
    out = sorted(set(vertices))
    for v in out:
        if not isinstance(v, int) or not 0 <= v < G.n:
            raise InputError(f"vertex {v!r} outside 0..{G.n - 1}")
    return out


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Return ``G[S]`` relabelled to ``0..|S|-1`` (order preserved) and the old->new map."""
    keep = _check_range(G, S)
    return induced_subgraph_ordered(G, keep)


def induced_subgraph_ordered(G: Graph, order: list[int]) -> tuple[Graph, dict[int, int]]:
    """Like :func:`induced_subgraph` but vertex ``order[i]`` becomes ``i``."""
    new = {old: i for i, old in enumerate(order)}
    if len(new) != len(order):
        raise InputError("repeated vertex in ordering")
    rows = []
    for old in order:
        row = 0
        r = G.rows[old]
        for i, other in enumerate(order):
            if r >> other & 1:
                row |= 1 << i
        rows.append(row)
    return Graph(len(order), tuple(rows)), new


def subgraph_mask(G: Graph, mask: int) -> tuple[Graph, list[int]]:
    """Induced subgraph on a bit mask; returns the graph and the new->old list."""
    order = list(bits(mask))
    H, _ = induced_subgraph_ordered(G, order)
    return H, order


def delete_vertices(G: Graph, S: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    drop = set(_check_range(G, S))
    return induced_subgraph_ordered(G, [v for v in range(G.n) if v not in drop])


def complement(G: Graph) -> Graph:
    full = G.full_mask
    return Graph(G.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(G.rows)))


def relabel(G: Graph, perm: list[int]) -> Graph:
    """Graph in which old vertex ``v`` is renamed ``perm[v]``."""
    if sorted(perm) != list(range(G.n)):
        raise InputError("relabel needs a permutation of 0..n-1")
    return Graph.from_edges(G.n, ((perm[u], perm[v]) for u, v in G.edges()))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for H in graphs:
        edges.extend((u + offset, v + offset) for u, v in H.edges())
        offset += H.n
    return Graph.from_edges(offset, edges)


def component_masks(G: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``G[within]`` as masks, sorted by least vertex."""
    todo = G.full_mask if within is None else within
    out = []
    while todo:
        frontier = todo & -todo
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for v in bits(frontier):
                nxt |= G.rows[v]
            frontier = nxt & todo & ~comp
        out.append(comp)
        todo &= ~comp
    return out


def components(G: Graph) -> list[frozenset[int]]:
    return [frozenset(bits(m)) for m in component_masks(G)]


def is_connected(G: Graph) -> bool:
    return G.n > 0 and len(component_masks(G)) == 1


def is_clique_mask(G: Graph, mask: int) -> bool:
    return all((G.rows[v] | (1 << v)) & mask == mask for v in bits(mask))


def is_stable_mask(G: Graph, mask: int) -> bool:
    return all(not G.rows[v] & mask for v in bits(mask))


def is_clique(G: Graph, S: Iterable[int]) -> bool:
    return is_clique_mask(G, mask_of(_check_range(G, S)))


def is_stable(G: Graph, S: Iterable[int]) -> bool:
    return is_stable_mask(G, mask_of(_check_range(G, S)))


class CutClass(NamedTuple):
    kind: str  # "complete" | "empty" | "mixed"
    missing: tuple[int, int] | None  # least non-adjacent pair (x, y), x in X
    present: tuple[int, int] | None  # least edge (x, y), x in X


def cut_edges(G: Graph, X: Iterable[int], Y: Iterable[int]) -> CutClass:
    """Classify the edge set ``[X, Y]`` as complete, empty or mixed."""
    xs = _check_range(G, X)
    ys = _check_range(G, Y)
    if set(xs) & set(ys):
        raise InputError("cut_edges needs disjoint vertex sets")
    ymask = mask_of(ys)
    missing = present = None
    for x in xs:
        hit = G.rows[x] & ymask
        miss = ymask & ~hit
        if hit and present is None:
            present = (x, lowest(hit))
        if miss and missing is None:
            missing = (x, lowest(miss))
    if missing is None:
        kind = "complete"
    elif present is None:
        kind = "empty"
    else:
        kind = "mixed"
    return CutClass(kind, missing, present)


# graph6 --------------------------------------------------------------------

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 0:
        raise InputError("negative vertex count")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return chr(126) * 2 + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise InputError("graph too large for graph6")


def to_graph6(G: Graph) -> str:
    out = [_encode_n(G.n)]
    acc = 0
    nbits = 0
    for j in range(1, G.n):
        row = G.rows[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str | bytes, line: int | None = None) -> Graph:
    """Decode one graph6 record (optional ``>>graph6<<`` header, trailing newline ok)."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6Error("non-ASCII byte", exc.start, line) from None
    s = text.rstrip("\r\n")
    base = 0
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
        base = len(_HEADER)
    if not s:
        raise Graph6Error("empty record", base, line)
    if s[0] in ":;&":
        raise Graph6Error(f"not graph6 (leading {s[0]!r}: sparse6/digraph6)", base, line)
    vals = []
    for i, ch in enumerate(s):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c} outside 63..126", base + i, line)
        vals.append(c - 63)
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise Graph6Error("truncated vertex-count header", base + len(vals), line)
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    else:
        if len(vals) < 8:
            raise Graph6Error("truncated vertex-count header", base + len(vals), line)
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    have = len(vals) - pos
    if have != need:
        off = base + min(len(vals), pos + need)
        raise Graph6Error(f"expected {need} data bytes for n={n}, found {have}", off, line)
    rows = [0] * n
    k = 0
    i, j = 0, 1
    for idx in range(need):
        byte = vals[pos + idx]
        for shift in range(5, -1, -1):
            if k >= nbits:
                if byte >> shift & 1:
                    raise Graph6Error("non-zero padding bits", base + pos + idx, line)
                continue
            if byte >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, tuple(rows))


def read_graph6_stream(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Parse newline-delimited graph6, skipping blank lines; yields (line number, graph)."""
    for lineno, raw in enumerate(lines, start=1):
        s = raw.strip()
        if not s:
            continue
        yield lineno, from_graph6(s, line=lineno)


# reporting formats ------------------------------------------------------------

def to_json_dict(G: Graph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.edges()]}


def from_json_dict(data: dict) -> Graph:
    try:
        return Graph.from_edges(int(data["n"]), (tuple(e) for e in data["edges"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad JSON graph: {exc}") from None


def to_dot(G: Graph, name: str = "G", colors: dict[int, int] | None = None) -> str:
    lines = [f"graph {name} {{"]
    for v in range(G.n):
        attr = f' [label="{v}:{colors[v]}"]' if colors else ""
        lines.append(f"  {v}{attr};")
    for u, v in G.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
