"""
Demo graph generator for testing the k-clique toolkit
This creates small named graphs and seeded random graphs for demonstration purposes
"""

import os
from itertools import combinations

import numpy as np

from config import DATA_DIR
from graph_core import Graph, save_edge_list


def complete_graph(n):
    return Graph.from_edges(n, combinations(range(n), 2))


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves):
    """Center 0 joined to vertices 1..leaves"""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def random_tree(n, seed=0):
    rng = np.random.default_rng(seed)
    return Graph.from_edges(n, [(int(rng.integers(0, v)), v) for v in range(1, n)])


def gnp_graph(n, p, seed=0):
    """Erdos-Renyi G(n, p) with a seeded generator"""
    rng = np.random.default_rng(seed)
    pairs = np.array(list(combinations(range(n), 2)), dtype=np.int64).reshape(-1, 2)
    keep = rng.random(len(pairs)) < p
    return Graph.from_edges(n, pairs[keep])


def disjoint_union(*graphs):
    edges, shift = [], 0
    for g in graphs:
        edges.extend((u + shift, v + shift) for u, v in g.edges())
        shift += g.n
    return Graph.from_edges(shift, edges)


def complete_with_pendant(n):
    """K_n plus one extra vertex hanging off vertex 0"""
    edges = list(combinations(range(n), 2)) + [(0, n)]
    return Graph.from_edges(n + 1, edges)


def random_graph_suite(count, max_n, seed=0, densities=(0.2, 0.4, 0.6)):
    """`count` seeded G(n, p) graphs with 2 <= n <= max_n, cycling through densities"""
    rng = np.random.default_rng(seed)
    suite = []
    for i in range(count):
        n = int(rng.integers(2, max_n + 1))
        p = densities[i % len(densities)]
        suite.append(gnp_graph(n, p, seed=seed * 1000 + i))
    return suite


DEMO_GRAPHS = {
    "triangle": lambda: complete_graph(3),
    "k4": lambda: complete_graph(4),
    "k5": lambda: complete_graph(5),
    "k6": lambda: complete_graph(6),
    "k8": lambda: complete_graph(8),
    "two_triangles": lambda: disjoint_union(complete_graph(3), complete_graph(3)),
    "k4_pendant": lambda: complete_with_pendant(4),
    "path5": lambda: path_graph(5),
    "star9": lambda: star_graph(9),
    "tree10": lambda: random_tree(10, seed=1),
    "gnp30": lambda: gnp_graph(30, 0.4, seed=7),
}


def create_demo_files(directory=DATA_DIR, verbose=True):
    """Write every demo graph as an edge list under `directory`"""
    os.makedirs(directory, exist_ok=True)
    paths = {}
    for name, build in DEMO_GRAPHS.items():
        path = os.path.join(directory, f"{name}.txt")
        save_edge_list(build(), path)
        paths[name] = path
        if verbose:
            print(f"✅ {name} saved to {path}")
    return paths


if __name__ == "__main__":
    create_demo_files()
    print("\n🎉 Demo graphs created successfully!")
    print("Try: python run.py count --input data/k6.txt --k 4")
