"""
Low out-degree vertex rankings.

Two peeling algorithms with provable (2+eps)*alpha out-degree bounds
(Goodrich-Pszona, Barenboim-Elkin), three heuristic orders (degree, k-core,
original), and an arboricity estimate from approximate densest-subgraph
peeling. Within a peeled batch, vertices are always ordered by id.
"""

import heapq
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from config import DEFAULT_EPSILON, ORIENTATION_STRATEGIES
from errors import InvalidArgumentError
from graph_core import Ranking, direct_by_ranking


@dataclass
class OrientConfig:
    strategy: str = "degree"
    epsilon: float = DEFAULT_EPSILON
    alpha_hat: Optional[int] = None

    def __post_init__(self):
        if self.strategy not in ORIENTATION_STRATEGIES:
            raise InvalidArgumentError(f"unknown orientation strategy {self.strategy!r}")
        if not self.epsilon > 0:
            raise InvalidArgumentError("epsilon must be positive")
        if self.alpha_hat is not None and self.alpha_hat < 1:
            raise InvalidArgumentError("alpha_hat must be at least 1")


def _check_epsilon(epsilon):
    if not epsilon > 0:
        raise InvalidArgumentError("epsilon must be positive")


class BatchPeeler:
    """Induced degrees of the remaining vertices, updated one removed batch at a time"""

    def __init__(self, g):
        self.g = g
        self.degree = g.degrees.astype(np.int64)
        self.alive = np.ones(g.n, dtype=bool)
        self.order = []
        self.rounds = 0

    @property
    def remaining(self):
        return np.flatnonzero(self.alive)

    def remove(self, batch):
        """Append `batch` (already in id order) to the ranking and drop it"""
        batch = np.asarray(batch, dtype=np.int64)
        self.alive[batch] = False
        self.order.extend(batch.tolist())
        self.rounds += 1
        if len(batch):
            starts, ends = self.g.offsets[batch], self.g.offsets[batch + 1]
            touched = np.concatenate([self.g.neighbors[s:e] for s, e in zip(starts, ends)])
            np.subtract.at(self.degree, touched, 1)

    def ranking(self):
        return Ranking.from_order(self.order, rounds=self.rounds)


def rank_goodrich_pszona(g, epsilon=DEFAULT_EPSILON):
    """Each round peels the max(1, floor(eps*n'/(2+eps))) lowest-degree vertices"""
    _check_epsilon(epsilon)
    peeler = BatchPeeler(g)
    while True:
        remaining = peeler.remaining
        if len(remaining) == 0:
            break
        take = max(1, int(math.floor(epsilon * len(remaining) / (2.0 + epsilon))))
        by_degree = remaining[np.lexsort((remaining, peeler.degree[remaining]))]
        peeler.remove(by_degree[:take])
    return peeler.ranking()


def rank_barenboim_elkin(g, epsilon=DEFAULT_EPSILON, alpha_hat=None):
    """Each round peels every vertex with induced degree < (2+eps)*alpha_hat.

    A round that removes nothing means alpha_hat was too small; the
    threshold then doubles for the following rounds.
    """
    _check_epsilon(epsilon)
    if alpha_hat is None:
        alpha_hat = estimate_arboricity(g, epsilon)
    if alpha_hat < 1:
        raise InvalidArgumentError("alpha_hat must be at least 1")
    threshold = (2.0 + epsilon) * alpha_hat
    peeler = BatchPeeler(g)
    while True:
        remaining = peeler.remaining
        if len(remaining) == 0:
            break
        batch = remaining[peeler.degree[remaining] < threshold]
        if len(batch) == 0:
            threshold *= 2
            continue
        peeler.remove(batch)
    return peeler.ranking()


def rank_by_degree(g):
    ids = np.arange(g.n, dtype=np.int64)
    return Ranking.from_order(np.lexsort((ids, g.degrees)))


def rank_by_kcore(g):
    """Degeneracy order: repeatedly remove a minimum-degree vertex, ties by id"""
    degree = g.degrees.astype(np.int64).tolist()
    adjacency = g.adjacency_lists
    removed = [False] * g.n
    heap = [(d, v) for v, d in enumerate(degree)]
    heapq.heapify(heap)
    order = []
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != degree[v]:
            continue
        removed[v] = True
        order.append(v)
        for u in adjacency[v]:
            if not removed[u]:
                degree[u] -= 1
                heapq.heappush(heap, (degree[u], u))
    return Ranking.from_order(order, rounds=len(order))


def rank_original(g):
    return Ranking(np.arange(g.n, dtype=np.int64))


def degeneracy(g):
    """Largest induced degree seen at removal time along the k-core order"""
    if g.n == 0:
        return 0
    return direct_by_ranking(g, rank_by_kcore(g)).max_out_degree


def estimate_arboricity(g, epsilon=DEFAULT_EPSILON):
    """Ceiling of the peak density |E'|/|V'| seen while threshold-peeling.

    Each round drops every vertex with induced degree <= 2(1+eps) times the
    current density, so the loop ends after O(log n) rounds. Never below 1.
    """
    _check_epsilon(epsilon)
    peeler = BatchPeeler(g)
    edges = g.m
    best = 0.0
    while True:
        remaining = peeler.remaining
        if len(remaining) == 0:
            break
        density = edges / len(remaining)
        best = max(best, density)
        degree = peeler.degree[remaining]
        batch = remaining[degree <= 2.0 * (1.0 + epsilon) * density]
        if len(batch) == 0:
            batch = remaining[degree == degree.min()]
        # edges leaving with the batch: sum of their degrees minus internal edges counted twice
        inside = np.zeros(g.n, dtype=bool)
        inside[batch] = True
        internal = sum(int(inside[g.neighbors_of(v)].sum()) for v in batch.tolist()) // 2
        edges -= int(peeler.degree[batch].sum()) - internal
        peeler.remove(batch)
    return max(1, int(math.ceil(best)))


def orient(g, cfg=None):
    """Main function to rank a graph with the strategy named in `cfg`"""
    cfg = cfg or OrientConfig()
    if cfg.strategy == "degree":
        return rank_by_degree(g)
    if cfg.strategy == "original":
        return rank_original(g)
    if cfg.strategy == "kcore":
        return rank_by_kcore(g)
    if cfg.strategy == "goodrich_pszona":
        return rank_goodrich_pszona(g, cfg.epsilon)
    return rank_barenboim_elkin(g, cfg.epsilon, cfg.alpha_hat)


def save_ranking(r, path, ids=None):
    """One vertex id per line, in rank order; `ids` maps to original vertex ids"""
    order = r.order if ids is None else np.asarray(ids)[r.order]
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.writelines(f"{v}\n" for v in order.tolist())
    return path


def load_ranking(path):
    with open(path, "r", encoding="utf-8") as f:
        order = [int(line) for line in f if line.strip()]
    return Ranking.from_order(order)
