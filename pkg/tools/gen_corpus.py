"""Write every graph on 1..8 vertices (one per isomorphism class) as graph6.

Graphs on up to 7 vertices come from the networkx atlas.  Every 8-vertex
graph has a 7-vertex induced subgraph, so extending each 7-vertex class by one
vertex in all 2^7 ways reaches every 8-vertex class; duplicates are removed by
Weisfeiler-Lehman hash buckets followed by exact isomorphism tests.

usage: python tools/gen_corpus.py [outdir]
"""

import sys
from pathlib import Path

import networkx as nx

EXPECTED = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def atlas_by_order():
    out = {n: [] for n in range(1, 8)}
    for g in nx.graph_atlas_g():
        if 1 <= g.number_of_nodes() <= 7:
            out[g.number_of_nodes()].append(nx.convert_node_labels_to_integers(g))
    return out


def extend(graphs):
    buckets = {}
    for g in graphs:
        n = g.number_of_nodes()
        for subset in range(1 << n):
            h = g.copy()
            h.add_node(n)
            h.add_edges_from((n, v) for v in range(n) if subset >> v & 1)
            key = (tuple(sorted(d for _, d in h.degree())), nx.weisfeiler_lehman_graph_hash(h, iterations=3))
            reps = buckets.setdefault(key, [])
            if not any(nx.is_isomorphic(h, r) for r in reps):
                reps.append(h)
    return [g for reps in buckets.values() for g in reps]


def main(outdir: str = "tests/fixtures/corpus") -> None:
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    by_n = atlas_by_order()
    by_n[8] = extend(by_n[7])
    for n, graphs in sorted(by_n.items()):
        if len(graphs) != EXPECTED[n]:
            raise SystemExit(f"n={n}: got {len(graphs)} classes, expected {EXPECTED[n]}")
        lines = sorted(nx.to_graph6_bytes(g, header=False).decode().strip() for g in graphs)
        (out / f"graphs{n}.g6").write_text("\n".join(lines) + "\n")
        print(f"n={n}: {len(lines)} graphs")


if __name__ == "__main__":
    main(*sys.argv[1:])
