"""Motif sets: the weight matrices realized by node tuples of a network.

The order-n motif set collects every n-by-n matrix obtained by reading
the weights off an n-tuple of nodes (repetition allowed), deduplicated
exactly and ordered canonically.  Motif sets are compared with the
Hausdorff distance under the entrywise-max matrix metric; that distance
is stable: it never exceeds twice the network distance.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product
from typing import Sequence

import numpy as np

from .errors import BudgetError
from .isomorphism import Bijection, strong_isomorphic
from .network import Network, is_generic

_HAUSDORFF_CHUNK = 256


@dataclass(frozen=True, eq=False)
class MotifSet:
    """Deduplicated order-n weight matrices, sorted lexicographically row-major."""

    order: int
    matrices: np.ndarray  # shape (count, order, order), read-only

    def __post_init__(self):
        m = np.asarray(self.matrices, dtype=float)
        m.setflags(write=False)
        object.__setattr__(self, "matrices", m)

    def __len__(self) -> int:
        return self.matrices.shape[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MotifSet):
            return NotImplemented
        return self.order == other.order and np.array_equal(self.matrices, other.matrices)

    def __hash__(self) -> int:
        return hash((self.order, self.matrices.tobytes()))

    def __contains__(self, matrix) -> bool:
        target = np.asarray(matrix, dtype=float)
        return any(np.array_equal(m, target) for m in self.matrices)


def tuple_weight_matrix(net: Network, nodes: Sequence[int]) -> np.ndarray:
    """The weight matrix read off a node tuple: entry (i, j) = weight(nodes[i], nodes[j])."""
    idx = np.asarray(list(nodes), dtype=int)
    if idx.size == 0:
        raise ValueError("node tuple must be nonempty")
    if idx.min() < 0 or idx.max() >= net.n:
        raise ValueError("node index out of range")
    return net.weights[np.ix_(idx, idx)]


def motif_set(net: Network, order: int, tuple_budget: int = 10**6) -> MotifSet:
    """Enumerate all n^order node tuples and collect their weight matrices.

    Deduplication uses exact float equality: quantize noisy data first.
    Refuses when the tuple count exceeds ``tuple_budget``.
    """
    if order < 1:
        raise ValueError("motif order must be at least 1")
    count = net.n**order
    if count > tuple_budget:
        raise BudgetError(
            f"motif enumeration needs {net.n}^{order} = {count} tuples, over the budget of {tuple_budget}"
        )
    idx = np.array(list(iter_product(range(net.n), repeat=order)), dtype=int)
    mats = net.weights[idx[:, :, None], idx[:, None, :]]
    unique_flat = np.unique(mats.reshape(count, order * order), axis=0)
    return MotifSet(order, unique_flat.reshape(-1, order, order))


def hausdorff_linf(a: MotifSet, b: MotifSet) -> float:
    """Hausdorff distance between motif sets under the entrywise-max matrix metric."""
    if a.order != b.order:
        raise ValueError(f"motif orders disagree: {a.order} vs {b.order}")
    flat_a = a.matrices.reshape(len(a), -1)
    flat_b = b.matrices.reshape(len(b), -1)
    forward = 0.0  # sup over a of inf over b
    nearest_to_b = np.full(len(b), np.inf)
    for start in range(0, len(a), _HAUSDORFF_CHUNK):
        block = flat_a[start : start + _HAUSDORFF_CHUNK]
        dist = np.max(np.abs(block[:, None, :] - flat_b[None, :, :]), axis=2)
        forward = max(forward, float(np.max(np.min(dist, axis=1))))
        nearest_to_b = np.minimum(nearest_to_b, np.min(dist, axis=0))
    return max(forward, float(np.max(nearest_to_b)))


def reconstruct_generic(left: Network, right: Network) -> Bijection | None:
    """Recover a weight-preserving bijection between generic networks, if one exists.

    For generic networks (all weights pairwise distinct) the duplicate-free
    full-length tuples pin the structure completely: a matching tuple of
    the other network yields the bijection, and no match means the motif
    sets differ.  Raises on non-generic input.
    """
    if not is_generic(left) or not is_generic(right):
        raise ValueError("reconstruction requires both networks to be generic")
    if left.n != right.n:
        return None
    return strong_isomorphic(left, right)
