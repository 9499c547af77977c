"""Exact network distance and certified lower/upper bounds.

The network distance is half the minimal distortion over all
correspondences.  Every correspondence contains a sub-correspondence
built from a pair of maps (f: X->Y, g: Y->X), and distortion only grows
under inclusion, so the minimum over that function-pair family equals
the minimum over all correspondences.  The solver runs branch-and-bound
over the family: nodes are assigned in decreasing order of weight-profile
variance, a partial assignment is pruned as soon as its partial
distortion reaches the incumbent, and the incumbent starts from the
product and greedy-match upper bounds so the search begins tight.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .correspondence import Correspondence, distortion, from_function_pair, product
from .errors import BudgetError
from .motifs import hausdorff_linf, motif_set
from .network import Network, diameter

DEFAULT_NODE_BUDGET = 7
DEFAULT_TUPLE_BUDGET = 10**6


@dataclass(frozen=True)
class BoundEntry:
    """One certified bound: the method that produced it, its value, and
    (for upper bounds) the witnessing correspondence."""

    method: str
    value: float
    witness: Correspondence | None = None


@dataclass(frozen=True)
class DistanceReport:
    """Everything a distance query produced: bounds, the exact value when
    feasible, methods skipped over budget, and per-method timings."""

    lower_bounds: tuple[BoundEntry, ...]
    upper_bounds: tuple[BoundEntry, ...]
    exact: tuple[float, Correspondence] | None
    skipped: tuple[tuple[str, str], ...] = ()
    timings: tuple[tuple[str, float], ...] = ()

    @property
    def best_lower(self) -> float:
        return max((b.value for b in self.lower_bounds), default=0.0)

    @property
    def best_upper(self) -> float:
        return min(b.value for b in self.upper_bounds)


def lower_bound_diameter(left: Network, right: Network) -> float:
    """Half the diameter gap; never exceeds the network distance."""
    return 0.5 * abs(diameter(left) - diameter(right))


def upper_bound_product(left: Network, right: Network) -> tuple[float, Correspondence]:
    """Half the distortion of the full relation, with the relation as witness."""
    witness = product(left.n, right.n)
    return 0.5 * distortion(witness, left, right), witness


def upper_bound_greedy(left: Network, right: Network) -> tuple[float, Correspondence]:
    """Match nodes by nearest weight-profile summary; half the resulting distortion."""
    witness = _greedy_function_pair(left, right)
    return 0.5 * distortion(witness, left, right), witness


def lower_bound_motif(left: Network, right: Network, order: int,
                      tuple_budget: int = DEFAULT_TUPLE_BUDGET) -> float:
    """Half the Hausdorff distance between order-n motif sets.

    Motif sets move by at most twice the network distance, so this is a
    certified lower bound.  Refuses when either enumeration exceeds
    ``tuple_budget`` tuples.
    """
    if order < 1:
        raise ValueError("motif order must be at least 1")
    a = motif_set(left, order, tuple_budget)
    b = motif_set(right, order, tuple_budget)
    return 0.5 * hausdorff_linf(a, b)


def _profile_variances(net: Network) -> np.ndarray:
    stacked = np.concatenate([net.weights, net.weights.T], axis=1)
    return np.var(stacked, axis=1)


def _greedy_function_pair(left: Network, right: Network) -> Correspondence:
    def summary(w: np.ndarray) -> np.ndarray:
        return np.stack([np.diag(w), w.mean(axis=1), w.mean(axis=0)], axis=1)

    cost = np.max(np.abs(summary(left.weights)[:, None, :] - summary(right.weights)[None, :, :]), axis=2)
    f = tuple(int(j) for j in np.argmin(cost, axis=1))
    g = tuple(int(i) for i in np.argmin(cost, axis=0))
    return from_function_pair(f, g)


def exact_distance(left: Network, right: Network,
                   node_budget: int = DEFAULT_NODE_BUDGET) -> tuple[float, Correspondence]:
    """Exact network distance and an optimal correspondence.

    Branch-and-bound over function pairs; exact because the family
    contains a minimizer (see module docstring).  Refuses when either
    network exceeds ``node_budget`` nodes — the raw search space is
    |Y|^|X| * |X|^|Y| — in which case callers can fall back to bounds.
    """
    nx, ny = left.n, right.n
    if nx > node_budget or ny > node_budget:
        raise BudgetError(
            f"exact solver limited to node_budget={node_budget} nodes per network (got {nx} and {ny}); "
            "raise the budget or use the certified bounds"
        )
    prod_val, prod_wit = upper_bound_product(left, right)
    greedy_val, greedy_wit = upper_bound_greedy(left, right)
    if greedy_val <= prod_val:
        best_dis, best_pairs = 2.0 * greedy_val, greedy_wit.pairs
    else:
        best_dis, best_pairs = 2.0 * prod_val, prod_wit.pairs
    if best_dis > 0.0:
        best_dis, best_pairs = _branch_and_bound(left, right, best_dis, best_pairs)
    return 0.5 * best_dis, Correspondence(nx, ny, best_pairs)


def _branch_and_bound(left: Network, right: Network, incumbent_dis: float,
                      incumbent_pairs: tuple[tuple[int, int], ...]):
    nx, ny = left.n, right.n
    wx = left.weights.tolist()
    wy = right.weights.tolist()
    var_x = _profile_variances(left)
    var_y = _profile_variances(right)
    order_x = sorted(range(nx), key=lambda i: (-var_x[i], i))

    best_dis = incumbent_dis
    best_pairs = incumbent_pairs
    f = [-1] * nx
    ax: list[int] = []  # left index of each assigned pair, in assignment order
    ay: list[int] = []

    def try_pair(cur: float, i: int, j: int) -> float | None:
        # partial distortion after adding pair (i, j), or None once it
        # reaches the incumbent
        m = abs(wx[i][i] - wy[j][j])
        if m < cur:
            m = cur
        if m >= best_dis:
            return None
        wxi = wx[i]
        wyj = wy[j]
        for k in range(len(ax)):
            a = ax[k]
            b = ay[k]
            d = wxi[a] - wyj[b]
            if d < 0.0:
                d = -d
            if d > m:
                if d >= best_dis:
                    return None
                m = d
            d = wx[a][i] - wy[b][j]
            if d < 0.0:
                d = -d
            if d > m:
                if d >= best_dis:
                    return None
                m = d
        return m

    def assign_g(pos: int, cur: float, uncovered: list[int]) -> None:
        nonlocal best_dis, best_pairs
        if pos == len(uncovered):
            # strict improvement: every partial along the way was < best_dis
            best_dis = cur
            best_pairs = tuple(zip(ax, ay))
            return
        j = uncovered[pos]
        for i in range(nx):
            m = try_pair(cur, i, j)
            if m is None:
                continue
            ax.append(i)
            ay.append(j)
            assign_g(pos + 1, m, uncovered)
            ax.pop()
            ay.pop()

    def assign_f(pos: int, cur: float) -> None:
        if pos == nx:
            covered = set(f)
            uncovered = sorted((j for j in range(ny) if j not in covered),
                               key=lambda j: (-var_y[j], j))
            assign_g(0, cur, uncovered)
            return
        i = order_x[pos]
        for j in range(ny):
            m = try_pair(cur, i, j)
            if m is None:
                continue
            f[i] = j
            ax.append(i)
            ay.append(j)
            assign_f(pos + 1, m)
            ax.pop()
            ay.pop()
            f[i] = -1

    assign_f(0, 0.0)
    return best_dis, best_pairs


def distance_report(left: Network, right: Network, *,
                    node_budget: int = DEFAULT_NODE_BUDGET,
                    motif_orders: Sequence[int] = (1, 2),
                    tuple_budget: int = DEFAULT_TUPLE_BUDGET) -> DistanceReport:
    """Run every bound within budget plus the exact solver when feasible.

    Never raises for budget reasons: over-budget methods are recorded in
    ``skipped`` with the reason.  The assembled report satisfies
    lower <= exact <= upper throughout.
    """
    lowers: list[BoundEntry] = []
    uppers: list[BoundEntry] = []
    skipped: list[tuple[str, str]] = []
    timings: list[tuple[str, float]] = []

    def timed(method: str, fn):
        start = time.perf_counter()
        result = fn()
        timings.append((method, time.perf_counter() - start))
        return result

    lowers.append(BoundEntry("diameter", timed("diameter", lambda: lower_bound_diameter(left, right))))
    for order in motif_orders:
        method = f"motif-{order}"
        try:
            value = timed(method, lambda: lower_bound_motif(left, right, order, tuple_budget))
        except BudgetError as exc:
            skipped.append((method, str(exc)))
            continue
        lowers.append(BoundEntry(method, value))
    val, wit = timed("product", lambda: upper_bound_product(left, right))
    uppers.append(BoundEntry("product", val, wit))
    val, wit = timed("greedy", lambda: upper_bound_greedy(left, right))
    uppers.append(BoundEntry("greedy", val, wit))
    exact: tuple[float, Correspondence] | None
    try:
        exact = timed("exact", lambda: exact_distance(left, right, node_budget))
    except BudgetError as exc:
        skipped.append(("exact", str(exc)))
        exact = None
    return DistanceReport(tuple(lowers), tuple(uppers), exact, tuple(skipped), tuple(timings))
