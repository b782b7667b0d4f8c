"""
Brute-force references for tests and acceptance runs.

Everything here is single-threaded, exhaustive and size-limited; nothing
in the production path calls it.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from config import ORACLE_MAX_N_ENUM, ORACLE_MAX_N_SUBSETS
from counting import CliqueCounts, check_clique_size
from errors import OracleRefusal


@dataclass(frozen=True)
class OracleLimits:
    max_n_subsets: int = ORACLE_MAX_N_SUBSETS
    max_n_enum: int = ORACLE_MAX_N_ENUM


LIMITS = OracleLimits()


def _require(g, limit, what):
    if g.n > limit:
        raise OracleRefusal(f"{what} refuses graphs with more than {limit} vertices (n={g.n})")


def brute_force_cliques(g, k):
    """All k-cliques as ascending vertex tuples, in lexicographic order"""
    _require(g, LIMITS.max_n_enum, "clique enumeration")
    check_clique_size(k)
    adjacency = [set(row) for row in g.adjacency_lists]
    found = []

    def extend(clique, cands):
        if len(clique) == k:
            found.append(tuple(clique))
            return
        for i, u in enumerate(cands):
            if len(clique) + len(cands) - i < k:
                break
            extend(clique + [u], [w for w in cands[i + 1:] if w in adjacency[u]])

    extend([], list(range(g.n)))
    return found


def brute_force_count(g, k):
    cliques = brute_force_cliques(g, k)
    per_vertex = np.zeros(g.n, dtype=np.uint64)
    for clique in cliques:
        per_vertex[list(clique)] += 1
    return CliqueCounts(k, len(cliques), per_vertex)


def _subset_tables(g):
    """All 2^n vertex masks, their sizes, and per-vertex neighbor masks"""
    masks = np.arange(1 << g.n, dtype=np.int64)
    popcount = np.zeros(1 << g.n, dtype=np.int64)
    for bit in range(g.n):
        popcount += (masks >> bit) & 1
    neighbor_masks = [sum(1 << u for u in row) for row in g.adjacency_lists]
    return masks, popcount, neighbor_masks


def exact_arboricity(g):
    """Nash-Williams: max over |U| >= 2 of ceil(|E(U)| / (|U| - 1))"""
    _require(g, LIMITS.max_n_subsets, "exact arboricity")
    if g.m == 0:
        return 0
    masks, popcount, neighbor_masks = _subset_tables(g)
    doubled_edges = np.zeros_like(masks)
    for v, nbrs in enumerate(neighbor_masks):
        doubled_edges += ((masks >> v) & 1) * popcount[masks & nbrs]
    edges = doubled_edges // 2
    big = popcount >= 2
    ratio = -(-edges[big] // (popcount[big] - 1))
    return max(1, int(ratio.max()))


def exact_densest(g, k):
    """Densest vertex set by k-clique density; ties go to smaller, then lexicographically first sets"""
    _require(g, LIMITS.max_n_subsets, "exact densest subgraph")
    check_clique_size(k)
    if g.n == 0:
        return 0.0, []
    masks, popcount, _ = _subset_tables(g)
    induced = np.zeros_like(masks)
    for clique in brute_force_cliques(g, k):
        cm = sum(1 << v for v in clique)
        induced += (masks & cm) == cm

    best = Fraction(0)
    best_key = None
    best_set = []
    for mask in range(1, 1 << g.n):
        density = Fraction(int(induced[mask]), int(popcount[mask]))
        if density < best:
            continue
        members = [v for v in range(g.n) if mask >> v & 1]
        key = (len(members), members)
        if density > best or best_key is None or key < best_key:
            best, best_key, best_set = density, key, members
    return float(best), best_set


def shared_pairs(g, k):
    """s[z] = unordered clique pairs sharing exactly z vertices, z in [2, k-1]"""
    _require(g, LIMITS.max_n_subsets, "shared pair counting")
    cliques = [frozenset(c) for c in brute_force_cliques(g, k)]
    s = [0] * k
    for a, b in combinations(cliques, 2):
        z = len(a & b)
        if 2 <= z <= k - 1:
            s[z] += 1
    return s


def sequential_peel_cores(g, k):
    """Remove one minimum-count vertex at a time (ties by id), recounting from scratch"""
    _require(g, LIMITS.max_n_enum, "sequential peeling")
    cliques = [set(c) for c in brute_force_cliques(g, k)]
    alive = set(range(g.n))
    core = np.zeros(g.n, dtype=np.int64)
    level = 0
    while alive:
        counts = {v: 0 for v in alive}
        for clique in cliques:
            for v in clique:
                counts[v] += 1
        v = min(alive, key=lambda u: (counts[u], u))
        level = max(level, counts[v])
        core[v] = level
        alive.remove(v)
        cliques = [c for c in cliques if v not in c]
    return core


def reference_degeneracy(g):
    """Largest minimum degree met while deleting minimum-degree vertices one by one"""
    adjacency = {v: set(row) for v, row in enumerate(g.adjacency_lists)}
    best = 0
    while adjacency:
        v = min(adjacency, key=lambda u: (len(adjacency[u]), u))
        best = max(best, len(adjacency[v]))
        for u in adjacency.pop(v):
            adjacency[u].discard(v)
    return best
