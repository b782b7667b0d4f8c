"""
Approximate k-clique counting by colorful sparsification.

Every vertex gets one of c colors; only monochromatic edges survive, so an
edge is kept with probability p = 1/c and a k-clique with probability
p^(k-1). Counting on the sparsified graph and scaling by p^-(k-1) gives an
unbiased estimate of the global count.
"""

from dataclasses import dataclass
from typing import Mapping, Sequence, Union

import numpy as np
import pandas as pd

from counting import count_total
from errors import InvalidArgumentError
from graph_core import Graph, direct_by_ranking
from orientation import OrientConfig, orient


@dataclass
class SampleEstimate:
    k: int
    colors: int
    p: float
    sub_count: int
    estimate: float
    seed: int

    def to_dict(self):
        return {
            "k": self.k,
            "colors": self.colors,
            "p": self.p,
            "sub_count": self.sub_count,
            "estimate": self.estimate,
            "seed": self.seed,
        }


MAX_COLORS = 2**32


def _check_colors(c):
    if isinstance(c, bool) or not isinstance(c, (int, np.integer)) or c < 1:
        raise InvalidArgumentError(f"number of colors must be an integer >= 1, got {c!r}")
    if c > MAX_COLORS:
        raise InvalidArgumentError(f"number of colors must be at most {MAX_COLORS}, got {c}")


def color_vertices(n, c, seed):
    """Uniform colors in [1, c].

    The color of vertex v is taken from the v-th 64-bit word of the Philox
    keystream for `seed`, so it depends only on (seed, v) and not on n.
    """
    _check_colors(c)
    raw = np.random.Philox(key=int(seed) & (2**64 - 1)).random_raw(int(n))
    # multiply-shift maps the high 32 bits onto [0, c)
    scaled = ((np.asarray(raw, dtype=np.uint64) >> np.uint64(32)) * np.uint64(c)) >> np.uint64(32)
    return scaled.astype(np.int64) + 1


def colorful_sparsify(g, c, seed):
    """Keep exactly the edges whose endpoints share a color"""
    colors = color_vertices(g.n, c, seed)
    src = np.repeat(np.arange(g.n, dtype=np.int64), g.degrees)
    keep = colors[src] == colors[g.neighbors]
    offsets = np.zeros(g.n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src[keep], minlength=g.n), out=offsets[1:])
    neighbors = g.neighbors[keep]
    return Graph(g.n, len(neighbors) // 2, offsets, neighbors, g.original_ids)


def approx_count(g, k, c, seed, orient_cfg=None, count_cfg=None, threads=None):
    """Main function for one sparsified estimate"""
    _check_colors(c)
    sparse = colorful_sparsify(g, c, seed)
    dg = direct_by_ranking(sparse, orient(sparse, orient_cfg or OrientConfig()))
    sub_count = count_total(dg, k, count_cfg, threads).total
    return SampleEstimate(
        k=int(k),
        colors=int(c),
        p=1.0 / c,
        sub_count=sub_count,
        estimate=float(sub_count * int(c) ** (int(k) - 1)),
        seed=int(seed),
    )


def approx_count_trials(g, k, c, seed, trials, orient_cfg=None, count_cfg=None, threads=None):
    """Estimates on seeds seed, seed+1, ...; returns (frame of trials, summary dict)"""
    if trials < 1:
        raise InvalidArgumentError("trials must be at least 1")
    rows = [approx_count(g, k, c, seed + i, orient_cfg, count_cfg, threads).to_dict()
            for i in range(trials)]
    frame = pd.DataFrame(rows)
    estimates = frame["estimate"]
    std = float(estimates.std(ddof=1)) if trials > 1 else 0.0
    summary = {
        "trials": trials,
        "mean": float(estimates.mean()),
        "std": std,
        "standard_error": std / np.sqrt(trials),
    }
    return frame, summary


def analytic_variance(X, p, k, s: Union[Mapping[int, int], Sequence[int]]):
    """Variance of the sparsified estimate.

    X is the exact count and s[z] the number of unordered clique pairs
    sharing z vertices, z in [2, k-1]; pairs sharing fewer vertices are
    independent under colorful sparsification and add nothing. The
    covariance sum runs over ordered pairs, so each s[z] enters twice.
    """
    if not 0 < p <= 1:
        raise InvalidArgumentError("p must lie in (0, 1]")
    keep = p ** (k - 1)
    keep_both = p ** (2 * (k - 1))
    variance = X * (keep - keep_both)
    for z in range(2, k):
        if isinstance(s, Mapping):
            pairs = s.get(z, 0)
        else:
            pairs = s[z] if z < len(s) else 0
        variance += 2 * pairs * (p ** (2 * (k - 1) - z + 1) - keep_both)
    return variance / keep_both
