"""Finite weighted directed networks and their intrinsic constructions.

A network is a finite node set with an arbitrary real weight attached to
every ordered node pair, self-loops included.  Weights need not be
symmetric, nonnegative, or zero on the diagonal.  This module holds the
immutable value type plus every construction that stays inside a single
network: diameter, genericity, blow-ups, the skeleton quotient, the
canonical pseudometric of weight profiles, grid quantization, and greedy
covering-subnetwork extraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .correspondence import Correspondence, distortion


def _check_label(label: str) -> str:
    if not isinstance(label, str):
        raise TypeError(f"node label must be a string, got {type(label).__name__}")
    if not label or label != label.strip() or "\n" in label:
        raise ValueError(f"node label {label!r} must be nonempty with no surrounding whitespace or newlines")
    return label


@dataclass(frozen=True, eq=False)
class Network:
    """Immutable finite network: node labels plus a dense weight matrix.

    ``weights[i, j]`` is the weight of the ordered pair
    ``(labels[i], labels[j])``.  The matrix is stored as a read-only
    float64 array; every entry must be finite.
    """

    labels: tuple[str, ...]
    weights: np.ndarray

    def __post_init__(self):
        labels = tuple(_check_label(lab) for lab in self.labels)
        if not labels:
            raise ValueError("a network needs at least one node")
        if len(set(labels)) != len(labels):
            raise ValueError("node labels must be pairwise distinct")
        w = np.array(self.weights, dtype=float)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise ValueError(f"weights must be a square matrix, got shape {w.shape}")
        if w.shape[0] != len(labels):
            raise ValueError(f"{len(labels)} labels but a {w.shape[0]}x{w.shape[1]} weight matrix")
        if not np.all(np.isfinite(w)):
            raise ValueError("weights must be finite (no NaN or infinity)")
        w.setflags(write=False)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "weights", w)

    @classmethod
    def from_weights(cls, weights, labels: Sequence[str] | None = None) -> "Network":
        """Build a network from a matrix, defaulting labels to n0, n1, ..."""
        w = np.array(weights, dtype=float)
        if labels is None:
            n = w.shape[0] if w.ndim == 2 else 0
            labels = tuple(f"n{i}" for i in range(n))
        return cls(tuple(labels), w)

    @property
    def n(self) -> int:
        return len(self.labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Network):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.weights, other.weights)

    def __hash__(self) -> int:
        return hash((self.labels, self.weights.tobytes()))

    def __repr__(self) -> str:
        return f"Network(n={self.n}, labels={self.labels!r})"

    def permuted(self, order: Sequence[int]) -> "Network":
        """Relabelled copy: node ``order[k]`` of self becomes node ``k``."""
        idx = list(order)
        if sorted(idx) != list(range(self.n)):
            raise ValueError("order must be a permutation of all node indices")
        labels = tuple(self.labels[i] for i in idx)
        return Network(labels, self.weights[np.ix_(idx, idx)])

    def restricted(self, indices: Sequence[int]) -> "Network":
        """Subnetwork induced by ``indices`` (kept in the given order)."""
        idx = list(indices)
        if len(set(idx)) != len(idx):
            raise ValueError("restriction indices must be distinct")
        labels = tuple(self.labels[i] for i in idx)
        return Network(labels, self.weights[np.ix_(idx, idx)])


@dataclass(frozen=True)
class SkeletonResult:
    """A skeleton network plus the node-to-class projection.

    ``class_of[i]`` is the skeleton node index that original node ``i``
    collapses to; it is surjective onto the skeleton's node indices.
    """

    skeleton: Network
    class_of: tuple[int, ...]


def diameter(net: Network) -> float:
    """Largest absolute weight over all ordered node pairs."""
    return float(np.max(np.abs(net.weights)))


def is_generic(net: Network) -> bool:
    """True iff all n^2 weight entries are pairwise distinct (exact comparison)."""
    return int(np.unique(net.weights).size) == net.n * net.n


def blow_up(net: Network, multiplicities: Sequence[int]) -> Network:
    """Replace node x by ``multiplicities[x]`` copies carrying x's weights.

    Copies of x are labelled "(x,1)", "(x,2)", ... in original node order;
    the weight between (x,i) and (x',i') equals the weight between x and
    x', so the result is weakly isomorphic to the input (network distance
    zero).
    """
    mult = [int(k) for k in multiplicities]
    if len(mult) != net.n:
        raise ValueError(f"need one multiplicity per node: got {len(mult)} for {net.n} nodes")
    if any(k < 1 for k in mult):
        raise ValueError("multiplicities must be positive integers")
    labels = tuple(f"({lab},{i})" for lab, k in zip(net.labels, mult) for i in range(1, k + 1))
    weights = np.repeat(np.repeat(net.weights, mult, axis=0), mult, axis=1)
    return Network(labels, weights)


def canonical_pseudometric(net: Network, subset: Sequence[int] | None = None) -> np.ndarray:
    """Pseudometric comparing weight profiles against a reference node subset.

    Entry (x, x') is the larger of the sup-differences of the outgoing
    profiles ``weights[x, a]`` vs ``weights[x', a]`` and the incoming
    profiles ``weights[a, x]`` vs ``weights[a, x']`` over reference nodes
    ``a``.  With the full node set it vanishes exactly on pairs that the
    skeleton quotient identifies.
    """
    if subset is None:
        ref = np.arange(net.n)
    else:
        ref = np.asarray(list(subset), dtype=int)
        if ref.size == 0:
            raise ValueError("reference subset must be nonempty")
        if ref.min() < 0 or ref.max() >= net.n:
            raise ValueError("reference subset contains out-of-range node indices")
    w = net.weights
    out_prof = w[:, ref]
    in_prof = w[ref, :].T
    gamma_out = np.max(np.abs(out_prof[:, None, :] - out_prof[None, :, :]), axis=2)
    gamma_in = np.max(np.abs(in_prof[:, None, :] - in_prof[None, :, :]), axis=2)
    return np.maximum(gamma_out, gamma_in)


def skeletonize(net: Network, tolerance: float = 0.0) -> SkeletonResult:
    """Quotient by the relation identifying nodes with matching weight rows and columns.

    With ``tolerance`` 0 (the default) two nodes share a class iff their
    full weight row and column agree exactly; the result has no two
    distinct nodes with identical row and column.  With a positive
    tolerance, nodes are linked whenever their profile pseudometric is at
    most ``tolerance`` and classes are the connected components of that
    graph — an extension for noisy data, since chained links may join
    nodes farther apart than the tolerance.

    Class weights are taken from each class's representative (the member
    with the lexicographically least label), which also names the class.
    """
    if tolerance < 0:
        raise ValueError("tolerance must be nonnegative")
    gamma = canonical_pseudometric(net)
    linked = gamma <= tolerance
    class_of = [-1] * net.n
    classes: list[list[int]] = []
    for start in range(net.n):
        if class_of[start] >= 0:
            continue
        cid = len(classes)
        stack = [start]
        members = []
        class_of[start] = cid
        while stack:
            i = stack.pop()
            members.append(i)
            for j in np.flatnonzero(linked[i]):
                j = int(j)
                if class_of[j] < 0:
                    class_of[j] = cid
                    stack.append(j)
        classes.append(sorted(members))
    reps = [min(members, key=lambda i: net.labels[i]) for members in classes]
    skel_weights = net.weights[np.ix_(reps, reps)]
    skel_labels = tuple(net.labels[r] for r in reps)
    return SkeletonResult(Network(skel_labels, skel_weights), tuple(class_of))


def quantize(net: Network, grid_step: float) -> Network:
    """Snap every weight to the nearest multiple of ``grid_step`` (ties toward +inf).

    The diagonal correspondence witnesses a network distance of at most
    half the step between input and output.
    """
    if not grid_step > 0:
        raise ValueError("grid_step must be positive")
    snapped = np.floor(net.weights / grid_step + 0.5) * grid_step
    return Network(net.labels, snapped)


def extract_net(net: Network, radius: float) -> tuple[Network, float]:
    """Greedy covering subnetwork plus a certified distance bound.

    Selects nodes by farthest-point traversal in the full-profile
    pseudometric, seeded at node 0, until every node lies within
    ``radius`` of a kept node.  Returns the induced subnetwork and half
    the distortion of the covering relation (every node matched to each
    kept node within ``radius``, kept nodes matched to themselves); the
    bound never exceeds ``radius``.
    """
    if not radius > 0:
        raise ValueError("radius must be positive")
    gamma = canonical_pseudometric(net)
    kept = [0]
    nearest = gamma[0].copy()
    while len(kept) < net.n:
        far = int(np.argmax(nearest))
        if nearest[far] <= radius:
            break
        kept.append(far)
        nearest = np.minimum(nearest, gamma[far])
    sub = net.restricted(kept)
    pairs = [(x, pos) for x in range(net.n) for pos, s in enumerate(kept) if gamma[x, s] <= radius]
    pairs.extend((s, pos) for pos, s in enumerate(kept))
    rel = Correspondence(net.n, len(kept), tuple(pairs))
    return sub, 0.5 * distortion(rel, net, sub)
