"""
Undirected graphs in compressed-sparse-row form, their acyclic orientations,
and the SNAP-style edge-list reader/writer.
"""

import re
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
import pandas as pd

from errors import GraphParseError, InvalidArgumentError

ASCII_WHITESPACE = " \t\n\r\f\v"
MAX_VERTEX_ID = 2**63 - 1
_TOKEN_SEPARATOR = re.compile(r"[ \t\n\r\f\v]+")


def _build_csr(n, src, dst):
    """Symmetrize, drop self-loops and duplicates; returns (offsets, neighbors, m)"""
    src = np.asarray(src, dtype=np.int64)
    dst = np.asarray(dst, dtype=np.int64)
    keep = src != dst
    src, dst = src[keep], dst[keep]
    both_src = np.concatenate([src, dst])
    both_dst = np.concatenate([dst, src])
    # unique keys come back sorted by (src, dst), so every slice is ascending
    keys = np.unique(both_src * max(n, 1) + both_dst)
    rows = keys // max(n, 1)
    cols = keys % max(n, 1)
    offsets = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(rows, minlength=n), out=offsets[1:])
    return offsets, cols.astype(np.int64), len(keys) // 2


@dataclass(eq=False)
class Graph:
    """Undirected simple graph; `neighbors[offsets[v]:offsets[v+1]]` is N(v), sorted"""
    n: int
    m: int
    offsets: np.ndarray
    neighbors: np.ndarray
    original_ids: np.ndarray = field(default=None, repr=False)

    def __post_init__(self):
        if self.original_ids is None:
            self.original_ids = np.arange(self.n, dtype=np.int64)

    @classmethod
    def from_edges(cls, n, edges, original_ids=None):
        """Build a normalized graph on vertices [0, n) from (u, v) pairs"""
        edges = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
        if len(edges) and (edges.min() < 0 or edges.max() >= n):
            raise InvalidArgumentError(f"edge endpoint outside [0, {n})")
        offsets, neighbors, m = _build_csr(n, edges[:, 0], edges[:, 1])
        return cls(n, m, offsets, neighbors, original_ids)

    @classmethod
    def empty(cls):
        return cls(0, 0, np.zeros(1, dtype=np.int64), np.zeros(0, dtype=np.int64))

    @property
    def degrees(self):
        return np.diff(self.offsets)

    def degree(self, v):
        return int(self.offsets[v + 1] - self.offsets[v])

    def neighbors_of(self, v):
        return self.neighbors[self.offsets[v]:self.offsets[v + 1]]

    @cached_property
    def adjacency_lists(self):
        return [self.neighbors_of(v).tolist() for v in range(self.n)]

    def edge_arrays(self):
        """Each undirected edge once as parallel (u, v) arrays with u < v"""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)
        mask = src < self.neighbors
        return src[mask], self.neighbors[mask]

    def edges(self):
        src, dst = self.edge_arrays()
        return list(zip(src.tolist(), dst.tolist()))

    def has_edge(self, u, v):
        row = self.neighbors_of(u)
        i = np.searchsorted(row, v)
        return bool(i < len(row) and row[i] == v)

    def validate(self):
        """Raise ValueError if any CSR invariant is broken"""
        offsets, nbrs = self.offsets, self.neighbors
        if len(offsets) != self.n + 1 or offsets[0] != 0 or offsets[-1] != 2 * self.m:
            raise ValueError("offsets do not span 2m adjacency entries")
        if np.any(np.diff(offsets) < 0):
            raise ValueError("offsets must be non-decreasing")
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)
        if np.any(src == nbrs):
            raise ValueError("self-loop in adjacency")
        same_row = src[1:] == src[:-1]
        if np.any(nbrs[1:][same_row] <= nbrs[:-1][same_row]):
            raise ValueError("adjacency slice not strictly increasing")
        forward = set(zip(src.tolist(), nbrs.tolist()))
        if any((v, u) not in forward for u, v in forward):
            raise ValueError("adjacency is not symmetric")
        return True


@dataclass(eq=False)
class Ranking:
    """Total order on vertices: rank[v] is the position of v"""
    rank: np.ndarray
    rounds: int = 0

    def __post_init__(self):
        self.rank = np.asarray(self.rank, dtype=np.int64)
        n = len(self.rank)
        seen = np.zeros(n, dtype=bool)
        if n and (self.rank.min() < 0 or self.rank.max() >= n):
            raise InvalidArgumentError("ranking is not a permutation of [0, n)")
        seen[self.rank] = True
        if not seen.all():
            raise InvalidArgumentError("ranking is not a permutation of [0, n)")

    @classmethod
    def from_order(cls, order, rounds=0):
        """Build from the vertex sequence in rank order"""
        order = np.asarray(order, dtype=np.int64)
        rank = np.empty(len(order), dtype=np.int64)
        rank[order] = np.arange(len(order), dtype=np.int64)
        return cls(rank, rounds)

    @property
    def order(self):
        return np.argsort(self.rank, kind="stable")

    def __len__(self):
        return len(self.rank)


@dataclass(eq=False)
class DirectedGraph:
    """Acyclic orientation: out-neighbors of v all have higher rank than v"""
    n: int
    m: int
    out_offsets: np.ndarray
    out_neighbors: np.ndarray
    ranking: Ranking

    @property
    def out_degrees(self):
        return np.diff(self.out_offsets)

    @property
    def max_out_degree(self):
        return int(self.out_degrees.max()) if self.n else 0

    def out_of(self, v):
        return self.out_neighbors[self.out_offsets[v]:self.out_offsets[v + 1]]

    @cached_property
    def out_lists(self):
        return [self.out_of(v).tolist() for v in range(self.n)]

    @cached_property
    def out_sets(self):
        return [frozenset(row) for row in self.out_lists]


def direct_by_ranking(g, r):
    """Keep (u, v) for every edge with rank(v) > rank(u)"""
    if len(r) != g.n:
        raise InvalidArgumentError(f"ranking has {len(r)} entries, graph has {g.n} vertices")
    src = np.repeat(np.arange(g.n, dtype=np.int64), g.degrees)
    mask = r.rank[g.neighbors] > r.rank[src]
    out_neighbors = g.neighbors[mask]
    out_offsets = np.zeros(g.n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src[mask], minlength=g.n), out=out_offsets[1:])
    return DirectedGraph(g.n, g.m, out_offsets, out_neighbors, r)


def symmetrize(dg, original_ids=None):
    src = np.repeat(np.arange(dg.n, dtype=np.int64), dg.out_degrees)
    offsets, neighbors, m = _build_csr(dg.n, src, dg.out_neighbors)
    return Graph(dg.n, m, offsets, neighbors, original_ids)


def induced_subgraph(g, vertices):
    """Subgraph on `vertices`, relabeled to [0, len) in ascending id order"""
    vertices = np.unique(np.asarray(vertices, dtype=np.int64))
    local = np.full(g.n, -1, dtype=np.int64)
    local[vertices] = np.arange(len(vertices), dtype=np.int64)
    src, dst = g.edge_arrays()
    keep = (local[src] >= 0) & (local[dst] >= 0)
    offsets, neighbors, m = _build_csr(len(vertices), local[src[keep]], local[dst[keep]])
    return Graph(len(vertices), m, offsets, neighbors, g.original_ids[vertices])


class EdgeListParser:
    """Reads whitespace edge lists with '#' comments, compacting ids by first appearance"""

    def __init__(self):
        self.id_map = {}

    def parse_stream(self, stream):
        """Lines may be str or undecoded bytes; bytes must be valid UTF-8"""
        src, dst = [], []
        lines = iter(stream)
        line_number = 0
        while True:
            try:
                line = next(lines)
                if isinstance(line, bytes):
                    line = line.decode("utf-8", errors="strict")
            except StopIteration:
                break
            except UnicodeDecodeError as e:
                raise GraphParseError(f"invalid UTF-8 ({e.reason})", line_number + 1) from None
            line_number += 1
            edge = self._parse_line(line, line_number)
            if edge is None:
                continue
            u, v = (self._compact(x) for x in edge)
            src.append(u)
            dst.append(v)

        n = len(self.id_map)
        if n == 0:
            return Graph.empty()
        original_ids = np.fromiter(self.id_map.keys(), dtype=np.int64, count=n)
        offsets, neighbors, m = _build_csr(n, src, dst)
        return Graph(n, m, offsets, neighbors, original_ids)

    def parse_file(self, path):
        # binary mode so a decoding error is reported on its own line
        with open(path, "rb") as f:
            return self.parse_stream(f)

    def _parse_line(self, line, line_number):
        """Return (u, v) original ids, or None for blank/comment lines"""
        stripped = line.strip(ASCII_WHITESPACE)
        if not stripped or stripped.startswith("#"):
            return None
        tokens = _TOKEN_SEPARATOR.split(stripped)
        if len(tokens) != 2:
            raise GraphParseError(f"expected 2 vertex ids, found {len(tokens)} tokens", line_number)
        ids = []
        for token in tokens:
            if not (token.isascii() and token.isdigit()):
                raise GraphParseError(f"vertex id {token!r} is not a non-negative decimal integer",
                                      line_number)
            value = int(token)
            if value > MAX_VERTEX_ID:
                raise GraphParseError(f"vertex id {token} exceeds {MAX_VERTEX_ID}", line_number)
            ids.append(value)
        return ids[0], ids[1]

    def _compact(self, original):
        dense = self.id_map.get(original)
        if dense is None:
            dense = len(self.id_map)
            self.id_map[original] = dense
        return dense


def _edge_frame(g):
    src, dst = g.edge_arrays()
    u, v = g.original_ids[src], g.original_ids[dst]
    lo, hi = np.minimum(u, v), np.maximum(u, v)
    return pd.DataFrame({"u": lo, "v": hi}).sort_values(["u", "v"], kind="stable")


def serialize_edge_list(g):
    """Canonical text: original ids, each edge once with u < v, sorted"""
    if g.m == 0:
        return ""
    return _edge_frame(g).to_csv(sep=" ", header=False, index=False, lineterminator="\n")


def save_edge_list(g, path):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(serialize_edge_list(g))
    return path


def save_id_map(g, path):
    frame = pd.DataFrame({"vertex": np.arange(g.n), "original_id": g.original_ids})
    frame.to_csv(path, sep="\t", header=False, index=False, lineterminator="\n")
    return path


def parse_edge_list(stream):
    """Main function to parse an edge list from any iterable of lines"""
    if isinstance(stream, str):
        # only "\n" ends a line, as when reading a file
        stream = stream.split("\n")
    return EdgeListParser().parse_stream(stream)


def load_graph(path):
    return EdgeListParser().parse_file(path)
