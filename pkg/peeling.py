"""
k-clique densest subgraph approximation by vertex peeling.

peel_exact removes every vertex of minimum k-clique count per round and
yields k-clique core numbers and a 1/k-approximate densest subgraph.
peel_approx removes every vertex whose count is at most k(1+eps) times the
current density, giving a 1/(k(1+eps))-approximation in O(log n) rounds.
"""

from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np
import pandas as pd

from bucketing import BucketQueue
from config import DEFAULT_PEEL_EPSILON
from counting import CliqueCounter, CountConfig, check_clique_size, count_per_vertex
from errors import ContractViolation, InvalidArgumentError


@dataclass(eq=False)
class PeelOutcome:
    k: int
    core: Optional[np.ndarray]
    rho: int
    best_density: float
    best_round: int
    dense_vertices: np.ndarray
    total_cliques: int
    removed_per_round: List[int] = field(default_factory=list)
    batch_sizes: List[int] = field(default_factory=list)

    def summary(self):
        return {
            "k": self.k,
            "rho": self.rho,
            "total_cliques": self.total_cliques,
            "best_density": self.best_density,
            "best_round": self.best_round,
            "dense_vertex_count": int(len(self.dense_vertices)),
        }


def update(g, dg, counts, batch, peeled, k, threads=None):
    """Remove the k-cliques touching `batch` from `counts`.

    A clique with several members in the batch is counted by the member
    whose out-neighbors hold all the others, i.e. its lowest-ranked batch
    member. Returns (cliques removed, sorted surviving vertices whose count
    changed). `peeled` is read, not written.
    """
    batch = sorted(set(int(v) for v in batch))
    if not batch:
        raise InvalidArgumentError("peel batch is empty")
    if peeled[batch].any():
        raise ContractViolation("peel batch contains an already peeled vertex")

    in_batch = set(batch)
    adjacency = g.adjacency_lists
    out_sets = dg.out_sets
    tasks = []
    for v in batch:
        outs = out_sets[v]
        cands = [u for u in adjacency[v]
                 if not peeled[u] and (u not in in_batch or u in outs)]
        tasks.append(([v], cands, k - 1))

    counter = CliqueCounter(dg, k, CountConfig(parallelism="node"), threads)
    removed, credits = counter.count_seeds(tasks)

    changed = sorted(u for u in credits if u not in in_batch and not peeled[u])
    if changed:
        idx = np.asarray(changed, dtype=np.int64)
        counts[idx] -= np.asarray([credits[u] for u in changed], dtype=np.int64)
        if (counts[idx] < 0).any():
            raise ContractViolation("k-clique count went negative during peeling")
    return removed, changed


class _PeelState:
    """Bookkeeping shared by both peelers"""

    def __init__(self, g, dg, k, threads):
        check_clique_size(k)
        self.g, self.dg, self.k, self.threads = g, dg, int(k), threads
        initial = count_per_vertex(dg, k, threads=threads)
        self.total = initial.total
        self.counts = initial.per_vertex.astype(np.int64)
        self.peeled = np.zeros(g.n, dtype=bool)
        self.peel_round = np.zeros(g.n, dtype=np.int64)
        self.remaining_cliques = self.total
        self.finished = 0
        self.rounds = 0
        self.best_density = self.total / g.n if g.n else 0.0
        self.best_round = 0
        self.removed_per_round = []
        self.batch_sizes = []

    def peel(self, batch):
        removed, changed = update(self.g, self.dg, self.counts, batch,
                                  self.peeled, self.k, self.threads)
        self.peeled[batch] = True
        self.rounds += 1
        self.peel_round[batch] = self.rounds
        self.finished += len(batch)
        self.remaining_cliques -= removed
        self.removed_per_round.append(removed)
        self.batch_sizes.append(len(batch))

        left = self.g.n - self.finished
        if left > 0:
            density = self.remaining_cliques / left
            if density > self.best_density:
                self.best_density = density
                self.best_round = self.rounds
        return changed

    def outcome(self, core):
        return PeelOutcome(
            k=self.k,
            core=core,
            rho=self.rounds,
            best_density=float(self.best_density),
            best_round=self.best_round,
            dense_vertices=np.flatnonzero(self.peel_round > self.best_round),
            total_cliques=self.total,
            removed_per_round=self.removed_per_round,
            batch_sizes=self.batch_sizes,
        )


def peel_exact(g, dg, k, threads=None):
    """Main function for exact batch peeling (all minimum-count vertices per round)"""
    state = _PeelState(g, dg, k, threads)
    queue = BucketQueue(state.counts.tolist())
    core = np.zeros(g.n, dtype=np.int64)
    level = 0
    while len(queue):
        value, batch = queue.extract_min()
        level = max(level, value)
        core[batch] = level
        for u in state.peel(batch):
            queue.update(u, state.counts[u])
    return state.outcome(core)


def peel_approx(g, dg, k, epsilon=DEFAULT_PEEL_EPSILON, threads=None):
    """Threshold peeling: drop every vertex with count <= k(1+eps) * density"""
    if not epsilon > 0:
        raise InvalidArgumentError("epsilon must be positive")
    state = _PeelState(g, dg, k, threads)
    factor = state.k * (1.0 + epsilon)
    while state.finished < g.n:
        alive = np.flatnonzero(~state.peeled)
        counts = state.counts[alive]
        threshold = factor * (state.remaining_cliques / len(alive))
        batch = alive[counts <= threshold]
        if len(batch) == 0:
            # only reachable through rounding when counts exceed 2**53
            batch = alive[counts == counts.min()]
        state.peel(batch.tolist())
    return state.outcome(None)


def write_cores_tsv(outcome, g, path):
    if outcome.core is None:
        raise InvalidArgumentError("approximate peeling does not produce core numbers")
    frame = pd.DataFrame({"vertex": g.original_ids, "core": outcome.core})
    frame.to_csv(path, sep="\t", header=False, index=False, lineterminator="\n")
    return path


def write_dense_vertices(outcome, g, path):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.writelines(f"{v}\n" for v in g.original_ids[outcome.dense_vertices].tolist())
    return path
