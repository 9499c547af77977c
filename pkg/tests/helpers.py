"""Shared test utilities: random instances and independent oracles.

The oracles here deliberately avoid the library's optimized paths so the
tests check two independent routes: the distance oracle enumerates every
valid correspondence by bitmask, and the Hausdorff oracle is a plain
double loop.
"""

from __future__ import annotations

import math

import numpy as np

from netmet import (
    Correspondence,
    Network,
    directed_circle_reversible,
    distortion,
    from_function_pair,
    validate,
)


def rand_net(rng: np.random.Generator, n: int, low: float = -1.0, high: float = 1.0) -> Network:
    return Network.from_weights(rng.uniform(low, high, size=(n, n)))


def rand_permutation(rng: np.random.Generator, n: int) -> list[int]:
    return [int(i) for i in rng.permutation(n)]


def rand_correspondence(rng: np.random.Generator, n_left: int, n_right: int,
                        extra_prob: float = 0.3) -> Correspondence:
    """A random valid correspondence: a random function pair plus random extras."""
    f = tuple(int(j) for j in rng.integers(0, n_right, n_left))
    g = tuple(int(i) for i in rng.integers(0, n_left, n_right))
    base = set(from_function_pair(f, g).pairs)
    for i in range(n_left):
        for j in range(n_right):
            if rng.random() < extra_prob:
                base.add((i, j))
    return Correspondence(n_left, n_right, tuple(base))


def all_correspondence_pairlists(n_left: int, n_right: int) -> list[list[tuple[int, int]]]:
    """Every subset of the index grid whose projections cover both sides."""
    cells = [(i, j) for i in range(n_left) for j in range(n_right)]
    out = []
    for bits in range(1, 1 << len(cells)):
        pairs = [cells[k] for k in range(len(cells)) if bits >> k & 1]
        if len({i for i, _ in pairs}) == n_left and len({j for _, j in pairs}) == n_right:
            out.append(pairs)
    return out


class CorrespondenceOracle:
    """Naive network distance: minimize distortion over ALL valid correspondences.

    Independent of the branch-and-bound solver; the per-size index tables
    are precomputed once so exhaustive sweeps stay fast.
    """

    def __init__(self):
        self._tables: dict[tuple[int, int], tuple[np.ndarray, np.ndarray, np.ndarray]] = {}

    def _table(self, n_left: int, n_right: int):
        key = (n_left, n_right)
        if key not in self._tables:
            seg_ii, seg_jj, starts = [], [], [0]
            for pairs in all_correspondence_pairlists(n_left, n_right):
                li = np.array([p[0] for p in pairs])
                ri = np.array([p[1] for p in pairs])
                seg_ii.append((li[:, None] * n_left + li[None, :]).ravel())
                seg_jj.append((ri[:, None] * n_right + ri[None, :]).ravel())
                starts.append(starts[-1] + seg_ii[-1].size)
            self._tables[key] = (np.concatenate(seg_ii), np.concatenate(seg_jj),
                                 np.array(starts[:-1]))
        return self._tables[key]

    def distance(self, left: Network, right: Network) -> float:
        ii, jj, starts = self._table(left.n, right.n)
        diffs = np.abs(left.weights.ravel()[ii] - right.weights.ravel()[jj])
        per_relation = np.maximum.reduceat(diffs, starts)
        return 0.5 * float(per_relation.min())


def nearest_node_circle_bound(n: int, rho: float) -> float:
    """Certified distance bound between circle discretizations at n and 2n points.

    Matches each fine node with the angularly nearest coarse node (ties
    toward the lower index) and returns half the distortion of that
    correspondence.
    """
    coarse = directed_circle_reversible(n, rho)
    fine = directed_circle_reversible(2 * n, rho)
    pairs = []
    for k in range(2 * n):
        theta = math.pi * k / n
        best_j, best_gap = 0, None
        for j in range(n):
            gap = abs(theta - 2 * math.pi * j / n)
            gap = min(gap, 2 * math.pi - gap)
            if best_gap is None or gap < best_gap - 1e-12:
                best_j, best_gap = j, gap
        pairs.append((best_j, k))
    rel = Correspondence(n, 2 * n, tuple(pairs))
    assert validate(rel, coarse, fine)
    return 0.5 * distortion(rel, coarse, fine)
