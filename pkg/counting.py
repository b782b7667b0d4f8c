"""
Exact k-clique counting, per-vertex counting and listing over an acyclic
orientation.

Every clique is found exactly once, from its lowest-ranked vertex: the
candidate set starts as that vertex's out-neighbors and is intersected
with the out-neighbors of each vertex added to the clique, until one
vertex is missing and every remaining candidate closes a clique.

Parallel tasks are seeded either per vertex (node parallelism) or per
directed edge (edge parallelism). Below the seed, a task builds the
subgraph induced on its candidate set, relabels it into [0, |I|), and
runs the rest of the recursion sequentially with one mark array stamped
by recursion level.
"""

import math
from collections import Counter
from dataclasses import dataclass
from typing import Optional

import numpy as np
from joblib import Parallel, delayed

from config import EDGE_PARALLELISM_CUTOFF, PARALLELISM_MODES, resolve_threads
from errors import InvalidArgumentError
from graph_core import direct_by_ranking

TASKS_PER_THREAD = 4
GALLOP_RATIO = 16


@dataclass
class CountConfig:
    parallelism: str = "auto"
    build_induced: bool = True

    def __post_init__(self):
        if self.parallelism not in PARALLELISM_MODES:
            raise InvalidArgumentError(f"unknown parallelism {self.parallelism!r}")

    def resolve(self, k):
        """Concrete mode for clique size k; auto switches to edge at the cutoff"""
        if self.parallelism != "auto":
            return self.parallelism
        return "node" if k < EDGE_PARALLELISM_CUTOFF else "edge"


@dataclass(eq=False)
class CliqueCounts:
    k: int
    total: int
    per_vertex: Optional[np.ndarray] = None


def check_clique_size(k):
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or k < 2:
        raise InvalidArgumentError(f"clique size must be an integer >= 2, got {k!r}")


def intersect_sorted(a, b):
    """Intersection of two ascending id arrays (merge, or galloping when skewed)"""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if len(a) > len(b):
        a, b = b, a
    if len(a) == 0:
        return a
    if len(a) * GALLOP_RATIO < len(b):
        idx = np.searchsorted(b, a)
        hit = idx < len(b)
        hit[hit] = b[idx[hit]] == a[hit]
        return a[hit]
    return np.intersect1d(a, b, assume_unique=True)


def _chunk(items, parts):
    if not items:
        return []
    parts = max(1, min(parts, len(items)))
    size = math.ceil(len(items) / parts)
    return [items[i:i + size] for i in range(0, len(items), size)]


class _CliqueWalker:
    """Private scratch of one task; accumulates the total, credits and emissions"""

    def __init__(self, dg, per_vertex, emit, build_induced):
        self.dg = dg
        self.out_lists = dg.out_lists
        self.credits = Counter() if per_vertex else None
        self.emit = emit
        self.build_induced = build_induced

    def walk(self, path, cands, level):
        """Cliques made of `path` plus `level` vertices drawn from `cands`"""
        if level == 0:
            return self._finish(path, None)
        if len(cands) < level:
            return 0
        if level == 1:
            return self._finish(path, list(cands))
        if self.build_induced:
            return self._walk_induced(list(path), list(cands), level)
        return self._walk_sorted(list(path), np.asarray(cands, dtype=np.int64), level)

    def _finish(self, stack, finals):
        if finals is None:
            if self.credits is not None:
                self.credits.update(stack)
            if self.emit is not None:
                self.emit(tuple(stack))
            return 1

        found = len(finals)
        if self.credits is not None:
            for u in stack:
                self.credits[u] += found
            self.credits.update(finals)
        if self.emit is not None:
            prefix = tuple(stack)
            for w in finals:
                self.emit(prefix + (w,))
        return found

    def _walk_induced(self, stack, verts, level):
        local = {u: i for i, u in enumerate(verts)}
        adj = [[local[w] for w in self.out_lists[u] if w in local] for u in verts]
        marks = [level] * len(verts)
        return self._recurse(adj, verts, marks, range(len(verts)), level, stack)

    def _recurse(self, adj, verts, marks, cands, level, stack):
        # members of the current candidate set are exactly those marked `level`
        if level == 1:
            return self._finish(stack, [verts[c] for c in cands])
        total = 0
        for c in cands:
            nxt = [w for w in adj[c] if marks[w] == level]
            if len(nxt) < level - 1:
                continue
            for w in nxt:
                marks[w] = level - 1
            stack.append(verts[c])
            total += self._recurse(adj, verts, marks, nxt, level - 1, stack)
            stack.pop()
            for w in nxt:
                marks[w] = level
        return total

    def _walk_sorted(self, stack, cands, level):
        if level == 1:
            return self._finish(stack, cands.tolist())
        total = 0
        for c in cands.tolist():
            nxt = intersect_sorted(cands, self.dg.out_of(c))
            if len(nxt) < level - 1:
                continue
            stack.append(c)
            total += self._walk_sorted(stack, nxt, level - 1)
            stack.pop()
        return total


class CliqueCounter:
    def __init__(self, dg, k, config=None, threads=None):
        check_clique_size(k)
        self.dg = dg
        self.k = int(k)
        self.config = config or CountConfig()
        self.mode = self.config.resolve(self.k)
        self.threads = resolve_threads(threads)

    def count_total(self):
        total, _ = self._run(self._seeds(), self._expand_seed)
        return CliqueCounts(self.k, total)

    def count_per_vertex(self):
        total, credits = self._run(self._seeds(), self._expand_seed, per_vertex=True)
        return CliqueCounts(self.k, total, self._credits_to_array(credits))

    def list_cliques(self, emit):
        """Call emit(clique) once per clique, vertices in ascending rank; returns the total"""
        total, _ = self._run(self._seeds(), self._expand_seed, emit=emit)
        return CliqueCounts(self.k, total)

    def count_seeds(self, tasks, per_vertex=True):
        """Run explicit (path, candidates, level) tasks; returns (total, Counter of credits)"""
        return self._run(tasks, tuple, per_vertex=per_vertex)

    def _seeds(self):
        out_degrees = self.dg.out_degrees
        starts = np.flatnonzero(out_degrees >= self.k - 1).tolist()
        if self.mode == "node":
            return [(v,) for v in starts]
        out_lists = self.dg.out_lists
        need = self.k - 2
        return [(v, u) for v in starts for u in out_lists[v] if out_degrees[u] >= need]

    def _expand_seed(self, seed):
        if len(seed) == 1:
            v = seed[0]
            return [v], self.dg.out_lists[v], self.k - 1
        v, u = seed
        if self.config.build_induced:
            # mark N(v) and probe the out-neighbors of u against it
            marked = self.dg.out_sets[v]
            cands = [w for w in self.dg.out_lists[u] if w in marked]
        else:
            cands = intersect_sorted(self.dg.out_of(v), self.dg.out_of(u)).tolist()
        return [v, u], cands, self.k - 2

    def _run(self, items, expand, per_vertex=False, emit=None):
        chunks = _chunk(items, self.threads * TASKS_PER_THREAD)

        def work(chunk):
            walker = _CliqueWalker(self.dg, per_vertex, emit, self.config.build_induced)
            total = 0
            for item in chunk:
                path, cands, level = expand(item)
                total += walker.walk(path, cands, level)
            return total, walker.credits

        if self.threads == 1 or len(chunks) <= 1:
            results = [work(chunk) for chunk in chunks]
        else:
            results = Parallel(n_jobs=self.threads, prefer="threads")(
                delayed(work)(chunk) for chunk in chunks
            )

        total = sum(part for part, _ in results)
        credits = Counter()
        for _, part in results:
            if part:
                credits.update(part)
        return total, credits

    def _credits_to_array(self, credits):
        per_vertex = np.zeros(self.dg.n, dtype=np.uint64)
        if credits:
            idx = np.fromiter(credits.keys(), dtype=np.int64, count=len(credits))
            per_vertex[idx] = np.array(list(credits.values()), dtype=np.uint64)
        return per_vertex


def count_total(dg, k, cfg=None, threads=None):
    """Main function to count k-cliques of an oriented graph"""
    return CliqueCounter(dg, k, cfg, threads).count_total()


def count_per_vertex(dg, k, cfg=None, threads=None):
    return CliqueCounter(dg, k, cfg, threads).count_per_vertex()


def list_cliques(dg, k, cfg=None, emit=None, threads=None):
    if emit is None:
        raise InvalidArgumentError("list_cliques needs an emit callback")
    return CliqueCounter(dg, k, cfg, threads).list_cliques(emit)


def count_graph(g, k, ranking, cfg=None, threads=None):
    """Orient `g` by `ranking` and count its k-cliques"""
    return count_total(direct_by_ranking(g, ranking), k, cfg, threads)
