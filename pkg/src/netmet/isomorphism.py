"""Strong and weak isomorphism decisions and automorphism enumeration.

Strong isomorphism is a weight-preserving bijection; the search is
backtracking over node assignments, pruned by an iterated refinement of
per-node weight profiles (the real-weight analogue of color refinement:
equal profiles are a necessary condition for matching, so refinement is
exact as a filter).  Weak isomorphism — distance zero — is decided by
comparing skeleta, which identify weakly isomorphic networks up to a
weight-preserving bijection.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BudgetError


@dataclass(frozen=True)
class Bijection:
    """A bijection between node index sets, stored as the forward tuple."""

    forward: tuple[int, ...]

    def __post_init__(self):
        fw = tuple(int(i) for i in self.forward)
        if sorted(fw) != list(range(len(fw))):
            raise ValueError("forward map must be a permutation of 0..n-1")
        object.__setattr__(self, "forward", fw)

    def __call__(self, i: int) -> int:
        return self.forward[i]

    def inverse(self) -> "Bijection":
        inv = [0] * len(self.forward)
        for i, j in enumerate(self.forward):
            inv[j] = i
        return Bijection(tuple(inv))

    def compose(self, other: "Bijection") -> "Bijection":
        """self after other: the map i -> self(other(i))."""
        if len(self.forward) != len(other.forward):
            raise ValueError("cannot compose bijections of different sizes")
        return Bijection(tuple(self.forward[j] for j in other.forward))


def _refine_profiles(matrices: list[np.ndarray]) -> list[list[int]]:
    """Joint profile refinement across several weight matrices.

    Nodes start in one shared class; each round a node's signature is its
    current class together with the multisets of (weight, class) pairs it
    sends and receives.  Class ids are shared across matrices, so equal
    ids mean indistinguishable profiles.  Stops at a fixed point.
    """
    ws = [w.tolist() for w in matrices]
    colors = [[0] * len(w) for w in ws]
    total = sum(len(w) for w in ws)
    n_colors = 1
    while True:
        table: dict[tuple, int] = {}
        new_colors = []
        for w, cols in zip(ws, colors):
            n = len(w)
            fresh = []
            for i in range(n):
                sig = (
                    cols[i],
                    w[i][i],
                    tuple(sorted((w[i][j], cols[j]) for j in range(n))),
                    tuple(sorted((w[j][i], cols[j]) for j in range(n))),
                )
                fresh.append(table.setdefault(sig, len(table)))
            new_colors.append(fresh)
        colors = new_colors
        if len(table) == n_colors or len(table) == total:
            return colors
        n_colors = len(table)


def _search_bijections(wx: np.ndarray, wy: np.ndarray, tolerance: float, find_all: bool) -> list[tuple[int, ...]]:
    """Backtracking search for weight-preserving bijections between two matrices.

    With ``tolerance`` 0 the candidate sets are pruned by joint profile
    refinement; a positive tolerance skips refinement (a non-transitive
    tolerance would make it unsound) and compares weights directly.
    """
    n = wx.shape[0]
    if wy.shape[0] != n:
        return []
    if tolerance == 0.0:
        cx, cy = _refine_profiles([wx, wy])
        from collections import Counter

        if Counter(cx) != Counter(cy):
            return []
    else:
        cx = [0] * n
        cy = [0] * n
    ax = wx.tolist()
    ay = wy.tolist()
    # most-constrained first: smallest candidate class, ties by index
    class_size = {c: cy.count(c) for c in set(cx)}
    order = sorted(range(n), key=lambda i: (class_size[cx[i]], i))
    image = [-1] * n
    used = [False] * n
    assigned: list[int] = []
    found: list[tuple[int, ...]] = []

    def ok(i: int, j: int) -> bool:
        if abs(ax[i][i] - ay[j][j]) > tolerance:
            return False
        for k in assigned:
            m = image[k]
            if abs(ax[i][k] - ay[j][m]) > tolerance or abs(ax[k][i] - ay[m][j]) > tolerance:
                return False
        return True

    def descend(pos: int) -> bool:
        if pos == n:
            found.append(tuple(image))
            return not find_all
        i = order[pos]
        want = cx[i]
        for j in range(n):
            if used[j] or cy[j] != want:
                continue
            if ok(i, j):
                image[i] = j
                used[j] = True
                assigned.append(i)
                if descend(pos + 1):
                    return True
                assigned.pop()
                used[j] = False
                image[i] = -1
        return False

    descend(0)
    return found


def strong_isomorphic(left, right, tolerance: float = 0.0) -> Bijection | None:
    """A weight-preserving bijection between the networks, or None.

    ``tolerance`` > 0 relaxes weight equality to |a - b| <= tolerance for
    noisy data; this is a heuristic, not an equivalence relation.
    """
    if tolerance < 0:
        raise ValueError("tolerance must be nonnegative")
    if left.n != right.n:
        return None
    hits = _search_bijections(left.weights, right.weights, tolerance, find_all=False)
    return Bijection(hits[0]) if hits else None


def weak_isomorphic(left, right, tolerance: float = 0.0) -> tuple[bool, Bijection | None]:
    """Decide distance-zero equivalence via the skeleta.

    Two finite networks are at network distance zero exactly when their
    skeleta are related by a weight-preserving bijection; the witness
    returned maps skeleton classes of ``left`` onto skeleton classes of
    ``right``.
    """
    from .network import skeletonize

    sk_left = skeletonize(left, tolerance).skeleton
    sk_right = skeletonize(right, tolerance).skeleton
    witness = strong_isomorphic(sk_left, sk_right, tolerance)
    return witness is not None, witness


def enumerate_automorphisms(net, size_budget: int = 8) -> list[Bijection]:
    """All weight-preserving self-bijections, in lexicographic order.

    The result is a group under composition.  Refuses above
    ``size_budget`` nodes: the list can be as large as n!.
    """
    if net.n > size_budget:
        raise BudgetError(f"automorphism enumeration limited to {size_budget} nodes, got {net.n}")
    hits = _search_bijections(net.weights, net.weights, 0.0, find_all=True)
    return [Bijection(fw) for fw in sorted(hits)]
