#!/usr/bin/env python3
"""Regenerate the three stand-in networks in data/mini/.

dolphins.edges, football.edges and polbooks.edges are NOT the original
datasets (those are easy to fetch but are not redistributed here). They are
deterministic planted-partition graphs matched to the originals' node count,
edge count, community count and mixing, so the pipeline sees networks with
the same coarse structure. Drop in the real files (same "u v" edge-list
format) to run against the originals.

Running this script rewrites the three files byte-identically.
"""

import numpy as np
import networkx as nx

SPECS = {
    # name: (block sizes, target m, inter-community edge fraction, degree spread, seed)
    "dolphins": ([21, 17, 13, 11], 159, 0.13, 0.55, 7),
    "football": ([10, 10, 10, 10, 10, 10, 10, 9, 9, 9, 9, 9], 613, 0.35, 0.10, 1),
    "polbooks": ([43, 49, 13], 441, 0.14, 0.60, 3),
}

HEADERS = {
    "dolphins": "stand-in for the Lusseau bottlenose dolphin network (62 nodes, 159 edges)",
    "football": "stand-in for the Girvan-Newman college football network (115 nodes, 613 edges)",
    "polbooks": "stand-in for the Krebs political books network (105 nodes, 441 edges)",
}


def planted_partition(blocks, m, mu, sigma, seed):
    n = sum(blocks)
    block_of = np.repeat(np.arange(len(blocks)), blocks)
    for attempt in range(seed, seed + 100):
        rng = np.random.default_rng(attempt)
        w = rng.lognormal(0.0, sigma, size=n)
        intra, inter = [], []
        for i in range(n):
            for j in range(i + 1, n):
                (intra if block_of[i] == block_of[j] else inter).append((i, j))
        m_inter = round(m * mu)
        m_intra = m - m_inter
        edges = []
        for pool, k in ((intra, m_intra), (inter, m_inter)):
            p = np.array([w[i] * w[j] for i, j in pool])
            p /= p.sum()
            idx = rng.choice(len(pool), size=k, replace=False, p=p)
            edges.extend(pool[i] for i in idx)
        g = nx.Graph(edges)
        if g.number_of_nodes() == n and nx.is_connected(g):
            return attempt, sorted((u + 1, v + 1) for u, v in edges)
    raise RuntimeError("no connected sample found")


def main():
    for name, (blocks, m, mu, sigma, seed) in SPECS.items():
        used, edges = planted_partition(blocks, m, mu, sigma, seed)
        path = f"mini/{name}.edges"
        with open(path, "w") as f:
            f.write(f"# {HEADERS[name]}\n")
            f.write(f"# generated by gen_standins.py (planted partition, seed {used}); not the original data\n")
            for u, v in edges:
                f.write(f"{u} {v}\n")
        g = nx.Graph(edges)
        print(name, "seed", used, "n", g.number_of_nodes(), "m", g.number_of_edges())


if __name__ == "__main__":
    main()
