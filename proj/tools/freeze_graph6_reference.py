#!/usr/bin/env python3
"""Freezes graph6 cross-check fixtures produced by networkx.

Writes data/g6_reference.tsv with one graph per line:

    <graph6>\t<n>\t<m>\t<space-separated u,v edge pairs>

The C++ graph6 codec tests decode each line and compare the vertex count and
edge set, then re-encode and compare byte-for-byte against networkx's output.
Run once; the output is committed.
"""

import sys

import networkx as nx


def g6(graph: nx.Graph) -> str:
    return nx.to_graph6_bytes(graph, header=False).decode().strip()


def main() -> int:
    out = sys.argv[1] if len(sys.argv) > 1 else "data/g6_reference.tsv"

    graphs: list[nx.Graph] = []
    graphs.append(nx.empty_graph(0))
    graphs.append(nx.empty_graph(1))
    for n in range(2, 12):
        graphs.append(nx.complete_graph(n))
        graphs.append(nx.cycle_graph(n))
        graphs.append(nx.path_graph(n))
        graphs.append(nx.empty_graph(n))
    for a in range(1, 6):
        for b in range(a, 6):
            graphs.append(nx.complete_bipartite_graph(a, b))
    graphs.append(nx.petersen_graph())
    # Orders straddling the graph6 size-encoding breakpoints at n = 63 and
    # (representable but long) a couple hundred vertices.
    for n in (62, 63, 64, 100, 200):
        graphs.append(nx.gnp_random_graph(n, 0.1, seed=n))
        graphs.append(nx.gnp_random_graph(n, 0.5, seed=1000 + n))
    for n in range(2, 33):
        graphs.append(nx.gnp_random_graph(n, 0.3, seed=7 * n))

    with open(out, "w", encoding="ascii") as fh:
        for graph in graphs:
            relabeled = nx.convert_node_labels_to_integers(graph)
            edges = " ".join(
                f"{min(u, v)},{max(u, v)}" for u, v in sorted(
                    (min(u, v), max(u, v)) for u, v in relabeled.edges()))
            fh.write(f"{g6(relabeled)}\t{relabeled.number_of_nodes()}\t"
                     f"{relabeled.number_of_edges()}\t{edges}\n")
    print(f"{out}: {len(graphs)} fixtures")
    return 0


if __name__ == "__main__":
    sys.exit(main())
