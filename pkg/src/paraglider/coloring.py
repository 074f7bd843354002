"""Certified colouring of (P5, paraglider)-free graphs with at most ceil(3w/2) colours.

``color_master`` recurses on the case returned by ``structure_outcome`` and
records one trace step per case, with the witness in the caller's vertex
labels, so ``validate_trace`` can re-check every step without searching.
The explicit schemes (clique expansions of C5, the tightness graphs G_k and
the class H*) and the homogeneous-set reductions live here as well.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import atlas
from .errors import BoundExceeded, CertificateError, InputError, StructureViolation
from .graph import (
    Graph,
    bits,
    complement,
    component_masks,
    delete_vertices,
    induced_subgraph,
    is_clique_mask,
    mask_of,
    subgraph_mask,
)
from .oracle import Coloring, chromatic_number, clique_number, clique_number_mask, verify_coloring
from .patterns import find_odd_hole, is_p5_paraglider_free
from .structure.classes import ExpansionMap, GReductionTrace, GStep, HDecomposition, g_membership
from .structure.decomposition import is_module_mask
from .structure.outcome import (
    C5ExpansionCase,
    ClebschSubgraph,
    CliqueCutset,
    ComparablePair,
    GoodStableSet,
    HMember,
    Perfect,
    SmallAtom,
    StablePerfectRest,
    Universal,
    structure_outcome,
    SMALL_ATOM_CUTOFF,
)


def ceil_3w_2(omega: int) -> int:
    return (3 * omega + 1) // 2


# homogeneous-set reductions ----------------------------------------------------------

@dataclass(frozen=True)
class LiftContext:
    """``outside[i]`` is the old vertex kept as new vertex ``i``; the clique
    replacing ``X`` occupies new vertices ``q``; ``x_class[j]`` is the colour
    class (0..|q|-1) of ``X[j]`` in an optimal colouring of ``G[X]``."""

    n: int
    outside: tuple[int, ...]
    X: tuple[int, ...]
    q: tuple[int, ...]
    x_class: tuple[int, ...]

    def lift(self, colors) -> list[int]:
        out = [0] * self.n
        for i, v in enumerate(self.outside):
            out[v] = colors[i]
        for x, j in zip(self.X, self.x_class):
            out[x] = colors[self.q[j]]
        return out


def _is_perfect_mask(G: Graph, m: int) -> bool:
    sub, _ = subgraph_mask(G, m)
    return find_odd_hole(sub) is None and find_odd_hole(complement(sub), 7) is None


def reduce_homogeneous(G: Graph, X) -> tuple[Graph, LiftContext]:
    """``G/X``: replace the proper homogeneous set ``X`` (with ``G[X]`` perfect)
    by a clique of size ``omega(G[X])`` appended after the other vertices."""
    xm = mask_of(X)
    if xm & ~G.full_mask:
        raise InputError("X has vertices outside the graph")
    if not 1 < xm.bit_count() < G.n or not is_module_mask(G, xm):
        raise InputError("X is not a proper homogeneous set")
    if not _is_perfect_mask(G, xm):
        raise InputError("G[X] is not perfect")
    sub, back = subgraph_mask(G, xm)
    w, col = chromatic_number(sub)
    outside = [v for v in range(G.n) if not xm >> v & 1]
    new_index = {v: i for i, v in enumerate(outside)}
    q = tuple(range(len(outside), len(outside) + w))
    attach = 0
    for v in outside:
        if G.rows[v] & xm:
            attach |= 1 << new_index[v]
    edges = [(new_index[u], new_index[v]) for u, v in G.edges() if u in new_index and v in new_index]
    edges += [(a, b) for i, a in enumerate(q) for b in q[i + 1:]]
    edges += [(a, b) for a in q for b in bits(attach)]
    H = Graph.from_edges(len(outside) + w, edges)
    ctx = LiftContext(G.n, tuple(outside), tuple(back), q, col.colors)
    return H, ctx


def lift_all(contexts: list[LiftContext], colors) -> list[int]:
    for ctx in reversed(contexts):
        colors = ctx.lift(colors)
    return list(colors)


def _reduce_parts(G: Graph, parts: list[list[int]], which: list[int]):
    """Reduce ``parts[i]`` for ``i`` in ``which``; returns the graph, relabelled parts and contexts."""
    contexts = []
    parts = [list(p) for p in parts]
    for i in which:
        m = mask_of(parts[i])
        if len(parts[i]) <= 1 or is_clique_mask(G, m):
            continue
        G, ctx = reduce_homogeneous(G, parts[i])
        contexts.append(ctx)
        new_index = {v: j for j, v in enumerate(ctx.outside)}
        parts = [list(ctx.q) if j == i else [new_index[v] for v in p] for j, p in enumerate(parts)]
    return G, parts, contexts


def reduce_to_clique_expansion(G: Graph, E: ExpansionMap) -> tuple[Graph, ExpansionMap, list[LiftContext]]:
    """Replace every bag by a clique of its clique number."""
    for b in E.bags:
        m = mask_of(b)
        if not _is_perfect_mask(G, m):
            raise InputError("bag is not perfect")
    H, parts, ctxs = _reduce_parts(G, [sorted(b) for b in E.bags], list(range(len(E.bags))))
    return H, ExpansionMap(E.base, tuple(frozenset(p) for p in parts), "clique"), ctxs


def reduce_h_member(G: Graph, D: HDecomposition) -> tuple[Graph, HDecomposition, list[LiftContext]]:
    """Replace R1 and R2 by cliques of their clique numbers (membership in H*)."""
    parts = [list(D.Q1), list(D.Q2), list(D.S), sorted(D.R1), sorted(D.R2)]
    H, parts, ctxs = _reduce_parts(G, parts, [3, 4])
    q1, q2, s, r1, r2 = parts
    return H, HDecomposition(tuple(q1), tuple(q2), frozenset(r1), frozenset(r2), tuple(s), D.f), ctxs


# explicit schemes ------------------------------------------------------------------------

def color_clique_expansion_c5(sizes) -> Coloring:
    """Colour the clique expansion of C5 with bag sizes ``sizes`` (vertex layout of
    ``atlas.make_clique_expansion_c5``) using ``max(omega, ceil(n/2))`` colours.

    Colour classes are pairs from non-adjacent bags ``(j, j+2)`` plus singletons.
    The non-adjacent bags form a 5-cycle of pair slots; fixing the number of
    pairs on one slot leaves a path, on which taking as many pairs as possible
    from one end is optimal, so trying every value on the first slot gives
    the maximum number of pairs.
    """
    q = [int(x) for x in sizes]
    if len(q) != 5 or any(x < 1 for x in q):
        raise InputError("need five positive bag sizes")
    n = sum(q)
    omega = max(q[i] + q[(i + 1) % 5] for i in range(5))
    target = max(omega, -(-n // 2))
    # slot j pairs bag j with bag j+2; walk 0 -> 2 -> 4 -> 1 -> 3 around the slot cycle
    best = None
    for p0 in range(min(q[0], q[2]) + 1):
        p = [0] * 5
        p[0] = p0
        p[2] = min(q[2] - p[0], q[4])
        p[4] = min(q[4] - p[2], q[1])
        p[1] = min(q[1] - p[4], q[3])
        p[3] = min(q[3] - p[1], q[0] - p[0])
        if best is None or sum(p) > sum(best):
            best = p
    offsets = [sum(q[:i]) for i in range(5)]
    used = [0] * 5
    colors = [-1] * n
    c = 0
    for j in range(5):
        a, b = j, (j + 2) % 5
        for _ in range(best[j]):
            colors[offsets[a] + used[a]] = c
            colors[offsets[b] + used[b]] = c
            used[a] += 1
            used[b] += 1
            c += 1
    for v in range(n):
        if colors[v] < 0:
            colors[v] = c
            c += 1
    if c != target or c > -(-5 * omega // 4):
        raise BoundExceeded(f"clique expansion {q}: {c} colours, expected {target}")
    return Coloring(tuple(colors))


def color_gk(k: int) -> Coloring:
    """Explicit ceil(3k/2)-colouring of G_k (layout of ``atlas.make_gk``)."""
    if k < 2:
        raise InputError("G_k needs k >= 2")
    t = k // 2
    colors = [0] * (3 * k)
    a = lambda i: i - 1
    b = lambda i: k + i - 1
    s = lambda i: 2 * k + i - 1
    for i in range(1, t + 1):
        colors[s(i)] = i
        colors[s(t + i)] = t + i
        colors[a(i)] = 2 * t + i
        colors[a(t + i)] = t + i
        colors[b(i)] = i
        colors[b(t + i)] = 2 * t + i
    if k % 2:
        colors[s(k)] = colors[a(k)] = 3 * t + 1
        colors[b(k)] = 3 * t + 2
    return Coloring(tuple(c - 1 for c in colors))


def color_h_star(G: Graph, D: HDecomposition) -> Coloring:
    """Colour a member of H* (R1, R2 cliques) with at most floor(3w/2) colours."""
    from .structure.classes import validate_h_decomposition

    problems = validate_h_decomposition(G, D)
    if problems:
        raise InputError(f"invalid decomposition: {problems[0]}")
    if not (is_clique_mask(G, mask_of(D.R1)) and is_clique_mask(G, mask_of(D.R2))):
        raise InputError("R1 and R2 must be cliques")
    k, t = D.k, len(D.S)
    colors = [-1] * G.n
    r = max(len(D.R1), len(D.R2))
    if r >= 1:
        gk = color_gk(k).colors
        for i in range(k):
            colors[D.Q1[i]] = gk[i]
            colors[D.Q2[i]] = gk[k + i]
        for x, i in zip(D.S, D.f):
            colors[x] = gk[2 * k + i]
        base = -(-3 * k // 2)
        for R in (D.R1, D.R2):
            for j, x in enumerate(sorted(R)):
                colors[x] = base + j
        return Coloring(tuple(colors))
    # r = 0: the pairs met by S span a copy of G_t, the others two matched cliques
    off = 0
    if t == 1:
        i = D.f[0]
        colors[D.Q1[i]], colors[D.Q2[i]], colors[D.S[0]] = 0, 1, 0
        off = 2
    elif t >= 2:
        gt = color_gk(t).colors
        for j, (x, i) in enumerate(zip(D.S, D.f)):
            colors[D.Q1[i]] = gt[j]
            colors[D.Q2[i]] = gt[t + j]
            colors[x] = gt[2 * t + j]
        off = max(gt) + 1
    rest = [i for i in range(k) if i not in set(D.f)]
    m = len(rest)
    for l, i in enumerate(rest):
        colors[D.Q1[i]] = off + l
        colors[D.Q2[i]] = off + ((l + 1) % m if m >= 2 else 1)
    return Coloring(tuple(colors))


@lru_cache(maxsize=None)
def _host_coloring() -> tuple[int, ...]:
    _, col = chromatic_number(atlas.clebsch_complement())
    return col.colors


# the master recursion ------------------------------------------------------------------------

@dataclass
class CertifiedColoring:
    coloring: Coloring
    bound: int
    omega: int
    trace: list = field(default_factory=list)

    @property
    def k(self) -> int:
        return self.coloring.k

    def to_json(self) -> dict:
        return {"colors": list(self.coloring.colors), "k": self.k, "bound": self.bound, "trace": self.trace}


def _labels_out(o, lab) -> dict:
    """Witness of outcome ``o`` in the caller's labels."""
    L = lambda vs: sorted(lab[v] for v in vs)
    if isinstance(o, ComparablePair):
        return {"u": lab[o.u], "v": lab[o.v]}
    if isinstance(o, Universal):
        return {"u": lab[o.u]}
    if isinstance(o, CliqueCutset):
        return {"K": L(o.K), "parts": [L(p) for p in o.parts]}
    if isinstance(o, (GoodStableSet, StablePerfectRest)):
        return {"S": L(o.S), "source": o.source}
    if isinstance(o, C5ExpansionCase):
        return {"bags": [L(b) for b in o.expansion.bags], "flavor": o.expansion.flavor}
    if isinstance(o, HMember):
        d = o.decomposition
        return {"Q1": [lab[v] for v in d.Q1], "Q2": [lab[v] for v in d.Q2], "R1": L(d.R1),
                "R2": L(d.R2), "S": [lab[v] for v in d.S], "f": list(d.f)}
    if isinstance(o, ClebschSubgraph):
        return {"embedding": [[lab[v], h] for v, h in enumerate(o.embedding)]}
    return {}


def _outcome_in(rule: str, w: dict, index: dict):
    """Rebuild the outcome of a trace step in the step's local labels."""
    I = lambda vs: frozenset(index[v] for v in vs)
    if rule == "ComparablePair":
        return ComparablePair(index[w["u"]], index[w["v"]])
    if rule == "Universal":
        return Universal(index[w["u"]])
    if rule == "CliqueCutset":
        return CliqueCutset(I(w["K"]), tuple(I(p) for p in w["parts"]))
    if rule == "GoodStableSet":
        return GoodStableSet(I(w["S"]), w.get("source", ""))
    if rule == "StablePerfectRest":
        return StablePerfectRest(I(w["S"]), w.get("source", ""))
    if rule == "C5ExpansionCase":
        return C5ExpansionCase(ExpansionMap(atlas.cycle(5), tuple(I(b) for b in w["bags"]), w["flavor"]))
    if rule == "HMember":
        return HMember(HDecomposition(tuple(index[v] for v in w["Q1"]), tuple(index[v] for v in w["Q2"]),
                                      I(w["R1"]), I(w["R2"]), tuple(index[v] for v in w["S"]), tuple(w["f"])))
    if rule == "ClebschSubgraph":
        emb = [0] * len(index)
        for v, h in w["embedding"]:
            emb[index[v]] = h
        return ClebschSubgraph(tuple(emb))
    if rule == "Perfect":
        return Perfect()
    return None


class _Engine:
    def __init__(self, cutoff: int):
        self.cutoff = cutoff
        self.trace: list[dict] = []

    def step(self, rule, lab, witness, omega):
        entry = {"rule": rule, "vertices": sorted(lab), "witness": witness, "omega": omega, "k": None}
        self.trace.append(entry)
        return entry

    def color(self, G: Graph, lab: list[int]) -> list[int]:
        if G.n == 0:
            return []
        omega = clique_number(G)[0]
        comps = component_masks(G)
        if len(comps) > 1:
            entry = self.step("Components", lab, {"parts": [sorted(lab[v] for v in bits(c)) for c in comps]}, omega)
            colors = [0] * G.n
            for c in comps:
                sub, back = subgraph_mask(G, c)
                for i, x in enumerate(self.color(sub, [lab[v] for v in back])):
                    colors[back[i]] = x
        else:
            o = structure_outcome(G, self.cutoff, check=False)
            entry = self.step(o.tag, lab, _labels_out(o, lab), omega)
            colors = self.apply(G, lab, o, omega)
        k = len(set(colors))
        entry["k"] = k
        if k > ceil_3w_2(omega):
            raise BoundExceeded(f"{entry['rule']} step used {k} colours with omega {omega}", self.trace)
        return colors

    def recurse_without(self, G, lab, drop):
        sub, mp = delete_vertices(G, drop)
        back = {j: v for v, j in mp.items()}
        sub_colors = self.color(sub, [lab[back[j]] for j in range(sub.n)])
        colors = [-1] * G.n
        for v, j in mp.items():
            colors[v] = sub_colors[j]
        return colors

    def apply(self, G: Graph, lab, o, omega) -> list[int]:
        if isinstance(o, ComparablePair):
            colors = self.recurse_without(G, lab, [o.u])
            colors[o.u] = colors[o.v]
            return colors
        if isinstance(o, Universal):
            colors = self.recurse_without(G, lab, [o.u])
            colors[o.u] = max(colors, default=-1) + 1
            return colors
        if isinstance(o, CliqueCutset):
            return self.cutset(G, lab, o)
        if isinstance(o, (SmallAtom, Perfect)):
            _, col = chromatic_number(G, lower=omega if isinstance(o, Perfect) else 0)
            return list(col.colors)
        if isinstance(o, GoodStableSet):
            sm = mask_of(o.S)
            for c in component_masks(G, G.full_mask & ~sm):
                if clique_number_mask(G, c) > omega - 1:
                    raise BoundExceeded("good stable set leaves a component with full clique number", self.trace)
            colors = self.recurse_without(G, lab, sorted(o.S))
            fresh = max((c for c in colors if c >= 0), default=-1) + 1
            for v in o.S:
                colors[v] = fresh
            return colors
        if isinstance(o, StablePerfectRest):
            rest, mp = delete_vertices(G, sorted(o.S))
            w = clique_number(rest)[0]
            _, col = chromatic_number(rest, lower=w)
            colors = [-1] * G.n
            for v, j in mp.items():
                colors[v] = col.colors[j]
            for v in o.S:
                colors[v] = col.k
            return colors
        if isinstance(o, C5ExpansionCase):
            H, E, ctxs = reduce_to_clique_expansion(G, o.expansion)
            layout = [v for b in E.bags for v in sorted(b)]
            scheme = color_clique_expansion_c5(E.sizes()).colors
            colors = [0] * H.n
            for pos, v in enumerate(layout):
                colors[v] = scheme[pos]
            return lift_all(ctxs, colors)
        if isinstance(o, HMember):
            H, D, ctxs = reduce_h_member(G, o.decomposition)
            return lift_all(ctxs, list(color_h_star(H, D).colors))
        if isinstance(o, ClebschSubgraph):
            host = _host_coloring()
            colors = [host[h] for h in o.embedding]
            if len(set(colors)) > ceil_3w_2(omega):
                _, col = chromatic_number(G)
                colors = list(col.colors)
            return colors
        raise StructureViolation(f"no colouring rule for {o.tag}", G)

    def cutset(self, G: Graph, lab, o: CliqueCutset) -> list[int]:
        K = sorted(o.K)
        colors = [-1] * G.n
        first = True
        for part in o.parts:
            sub, back = subgraph_mask(G, mask_of(part))
            sub_colors = self.color(sub, [lab[v] for v in back])
            local = {v: sub_colors[i] for i, v in enumerate(back)}
            if first:
                for v, c in local.items():
                    colors[v] = c
                first = False
                continue
            # align on K, then send the remaining colours to the smallest unused ones
            perm = {local[x]: colors[x] for x in K}
            taken = set(perm.values())
            free = (c for c in range(G.n + 1) if c not in taken)
            for c in sorted(set(local.values()) - set(perm)):
                perm[c] = next(free)
            for v, c in local.items():
                if v not in o.K:
                    colors[v] = perm[c]
        return colors


def color_master(G: Graph, small_atom_cutoff: int = SMALL_ATOM_CUTOFF) -> CertifiedColoring:
    """Proper colouring with at most ceil(3w/2) colours, with a checkable trace."""
    ok, emb = is_p5_paraglider_free(G)
    if not ok:
        raise CertificateError(f"graph is not (P5, paraglider)-free: {emb}", emb)
    omega = clique_number(G)[0]
    bound = ceil_3w_2(omega)
    eng = _Engine(small_atom_cutoff)
    colors = eng.color(G, list(range(G.n)))
    col = Coloring.normalized(colors)
    if not verify_coloring(G, col) or col.k > bound:
        raise BoundExceeded(f"final colouring invalid or over bound ({col.k} > {bound})", eng.trace)
    return CertifiedColoring(col, bound, omega, eng.trace)


def validate_trace(G: Graph, cc: CertifiedColoring) -> list[str]:
    """Re-check the colouring and every recorded witness against ``G``."""
    out = []
    if not verify_coloring(G, cc.coloring):
        out.append("colouring is not proper")
    if cc.k > cc.bound or cc.bound != ceil_3w_2(clique_number(G)[0]):
        out.append("colour count or bound wrong")
    for n_step, step in enumerate(cc.trace):
        vs = step["vertices"]
        sub, index = induced_subgraph(G, vs)
        if step["k"] is None or step["k"] > ceil_3w_2(step["omega"]) or clique_number(sub)[0] != step["omega"]:
            out.append(f"step {n_step}: colour count over the step bound")
        rule = step["rule"]
        if rule == "Components":
            got = sorted(tuple(p) for p in step["witness"]["parts"])
            want = sorted(tuple(sorted(vs[i] for i in bits(c))) for c in component_masks(sub))
            if got != want:
                out.append(f"step {n_step}: components wrong")
            continue
        if rule == "SmallAtom":
            continue
        o = _outcome_in(rule, step["witness"], index)
        if o is None:
            out.append(f"step {n_step}: unknown rule {rule}")
            continue
        problems = o.validate(sub)
        if problems:
            out.append(f"step {n_step} ({rule}): {problems[0]}")
    return out


# excess over 3w/2 ----------------------------------------------------------------------------

def _relabel_trace(tr: GReductionTrace, back) -> GReductionTrace:
    steps = tuple(GStep(back[s.u], back[s.dominator], frozenset(back[v] for v in s.neighbours)) for s in tr.steps)
    return GReductionTrace(steps, tr.terminal, tuple(back[v] for v in tr.embedding))


def characterize_excess(G: Graph) -> tuple[bool, GReductionTrace | None]:
    """Whether chi > 3w/2, with a membership trace for the responsible component.

    Raises StructureViolation if the oracle and the membership search disagree.
    """
    omega = clique_number(G)[0]
    chi, _ = chromatic_number(G)
    excess = 2 * chi > 3 * omega
    found = None
    for c in component_masks(G):
        if c.bit_count() < 15:
            continue
        sub, back = subgraph_mask(G, c)
        tr = g_membership(sub)
        if tr is not None:
            found = _relabel_trace(tr, back)
            break
    if excess:
        if found is None or omega > 5:
            raise StructureViolation("chi > 3w/2 without a component in the grown family", G)
        return True, found
    if found is not None and omega <= 5:
        raise StructureViolation("component in the grown family but chi <= 3w/2", G)
    return False, None
