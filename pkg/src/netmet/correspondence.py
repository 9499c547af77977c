"""Correspondences between node sets, their distortion, and composition.

A correspondence is a relation between two index sets whose projections
cover both sides; its distortion is the worst absolute disagreement of
weights over matched pairs.  Half the minimal distortion over all
correspondences is the network distance, so this module is the carrier
of everything the solver optimizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

import numpy as np

if TYPE_CHECKING:
    from .network import Network


@dataclass(frozen=True)
class Correspondence:
    """A relation between left indices [0, n_left) and right indices [0, n_right).

    Pairs are deduplicated and stored sorted lexicographically, so equal
    relations compare and iterate identically.  Construction checks index
    ranges only; surjectivity of the projections is the job of
    :func:`validate`.
    """

    n_left: int
    n_right: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n_left < 1 or self.n_right < 1:
            raise ValueError("both node counts must be at least 1")
        cleaned = sorted({(int(i), int(j)) for i, j in self.pairs})
        if not cleaned:
            raise ValueError("a correspondence needs at least one pair")
        for i, j in cleaned:
            if not (0 <= i < self.n_left and 0 <= j < self.n_right):
                raise ValueError(f"pair ({i}, {j}) out of range for sizes ({self.n_left}, {self.n_right})")
        object.__setattr__(self, "pairs", tuple(cleaned))

    def __len__(self) -> int:
        return len(self.pairs)

    def left_indices(self) -> np.ndarray:
        return np.fromiter((p[0] for p in self.pairs), dtype=int, count=len(self.pairs))

    def right_indices(self) -> np.ndarray:
        return np.fromiter((p[1] for p in self.pairs), dtype=int, count=len(self.pairs))

    def transposed(self) -> "Correspondence":
        """The same relation read from right to left."""
        return Correspondence(self.n_right, self.n_left, tuple((j, i) for i, j in self.pairs))

    def covers_both_sides(self) -> bool:
        return (len({i for i, _ in self.pairs}) == self.n_left
                and len({j for _, j in self.pairs}) == self.n_right)


def diagonal(n: int) -> Correspondence:
    """The identity matching between two enumerations of the same size."""
    return Correspondence(n, n, tuple((i, i) for i in range(n)))


def product(n_left: int, n_right: int) -> Correspondence:
    """The full relation; always a valid correspondence."""
    return Correspondence(n_left, n_right, tuple((i, j) for i in range(n_left) for j in range(n_right)))


def from_function_pair(f: Sequence[int], g: Sequence[int]) -> Correspondence:
    """Correspondence built from maps ``f``: left->right and ``g``: right->left.

    The pair set is the graph of ``f`` united with the transposed graph
    of ``g``; both projections are covered by construction.  This family
    parametrizes the exact solver's search space.
    """
    n_left, n_right = len(f), len(g)
    pairs = [(i, int(f[i])) for i in range(n_left)]
    pairs.extend((int(g[j]), j) for j in range(n_right))
    return Correspondence(n_left, n_right, tuple(pairs))


def validate(rel: Correspondence, left: "Network", right: "Network") -> bool:
    """True iff sizes match the two networks and both projections are surjective."""
    return rel.n_left == left.n and rel.n_right == right.n and rel.covers_both_sides()


def distortion(rel: Correspondence, left: "Network", right: "Network") -> float:
    """Worst absolute weight disagreement over all ordered pairs of matched pairs.

    Reference implementation: the full |R|^2 comparison with no early
    exit, kept deliberately simple to serve as the oracle for the
    optimized solver.
    """
    if not validate(rel, left, right):
        raise ValueError("relation is not a valid correspondence between these networks")
    li = rel.left_indices()
    ri = rel.right_indices()
    block_left = left.weights[np.ix_(li, li)]
    block_right = right.weights[np.ix_(ri, ri)]
    return float(np.max(np.abs(block_left - block_right)))


def compose(first: Correspondence, second: Correspondence) -> Correspondence:
    """Relational composition; distortion is subadditive along the chain."""
    if first.n_right != second.n_left:
        raise ValueError(f"inner sizes disagree: {first.n_right} vs {second.n_left}")
    by_middle: dict[int, list[int]] = {}
    for y, z in second.pairs:
        by_middle.setdefault(y, []).append(z)
    pairs = {(x, z) for x, y in first.pairs for z in by_middle.get(y, ())}
    return Correspondence(first.n_left, second.n_right, tuple(pairs))
