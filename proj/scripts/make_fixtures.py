#!/usr/bin/env python3
"""Generate the graph6 fixture corpora under tests/fixtures/.

- connected_n{1..7}.g6: all connected simple graphs on n vertices, from the
  networkx graph atlas, re-emitted in canonical-label graph6.
- cubic3ec_n{4,6,8,10}.g6: all connected cubic graphs that are 3-edge-connected,
  by labeled backtracking with isomorphism dedupe.

Counts are asserted against published values.
"""

import itertools
import os

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

OUT = os.path.join(os.path.dirname(__file__), "..", "tests", "fixtures")

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
CONNECTED_CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19}


def g6(graph):
    return nx.to_graph6_bytes(graph, header=False).decode().strip()


def write(name, graphs):
    path = os.path.join(OUT, name)
    with open(path, "w") as f:
        for g in graphs:
            f.write(g6(nx.convert_node_labels_to_integers(g)) + "\n")
    print(f"{name}: {len(graphs)} graphs")


def connected_corpora():
    atlas = graph_atlas_g()[1:]  # drop the 0-vertex placeholder
    for n in range(1, 8):
        graphs = [g for g in atlas
                  if g.number_of_nodes() == n and nx.is_connected(g)]
        assert len(graphs) == CONNECTED_COUNTS[n], (n, len(graphs))
        write(f"connected_n{n}.g6", graphs)


def cubic_graphs(n):
    """Canonical backtracking: complete the whole remaining neighborhood of
    the smallest deficient vertex at each step (each labeled graph is reached
    exactly once), then dedupe by isomorphism within hash buckets."""
    buckets = {}
    reps = []

    def bt(edges, deg, adj):
        deficient = [v for v in range(n) if deg[v] < 3]
        if not deficient:
            g = nx.Graph(edges)
            if not nx.is_connected(g):
                return
            h = nx.weisfeiler_lehman_graph_hash(g, iterations=3)
            bucket = buckets.setdefault(h, [])
            if not any(nx.is_isomorphic(g, r) for r in bucket):
                bucket.append(g)
                reps.append(g)
            return
        u = deficient[0]
        need = 3 - deg[u]
        candidates = [v for v in deficient if v > u and v not in adj[u]]
        for group in itertools.combinations(candidates, need):
            for v in group:
                edges.append((u, v))
                deg[u] += 1
                deg[v] += 1
                adj[u].add(v)
                adj[v].add(u)
            bt(edges, deg, adj)
            for v in group:
                edges.pop()
                deg[u] -= 1
                deg[v] -= 1
                adj[u].remove(v)
                adj[v].remove(u)

    # Every cubic graph has an automorphic copy with N(0) = {1,2,3}: seeding
    # those three edges cuts the labeled space by C(n-1,3) while still
    # reaching every isomorphism class.
    edges = [(0, 1), (0, 2), (0, 3)]
    deg = [0] * n
    adj = [set() for _ in range(n)]
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        adj[u].add(v)
        adj[v].add(u)
    bt(edges, deg, adj)
    return reps


def three_edge_connected(g):
    n = g.number_of_nodes()
    return all(nx.edge_connectivity(g, u, v) >= 3
               for u, v in itertools.combinations(range(n), 2))


def cubic_corpora():
    for n in (4, 6, 8, 10):
        reps = cubic_graphs(n)
        assert len(reps) == CONNECTED_CUBIC_COUNTS[n], (n, len(reps))
        keep = [g for g in reps if three_edge_connected(g)]
        write(f"cubic3ec_n{n}.g6", keep)


if __name__ == "__main__":
    os.makedirs(OUT, exist_ok=True)
    connected_corpora()
    cubic_corpora()
