"""Straight-line geodesics and midpoints between finite networks.

Given an optimal correspondence R between two networks, the network on
R's pair set with weights (1-t)*w_left + t*w_right traces a geodesic:
the distance between parameters s and t is exactly |t-s| times the
endpoint distance.  Endpoints are returned on R's pair set as well (a
blow-up of each input, at distance zero from it), so the node set stays
constant along the curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .correspondence import Correspondence, validate
from .distance import DEFAULT_NODE_BUDGET, exact_distance
from .network import Network


@dataclass(frozen=True)
class GeodesicPoint:
    """One sampled point of a geodesic: the parameter and its network."""

    t: float
    network: Network


def geodesic_point(left: Network, right: Network, rel: Correspondence, t: float) -> GeodesicPoint:
    """The network at parameter ``t`` on the curve determined by ``rel``.

    Nodes are ``rel``'s pairs, labelled "(x|y)"; the weight between two
    pairs is the affine combination of the endpoint weights.  At t = 0
    and t = 1 the result is a blow-up of the respective endpoint.
    """
    if not validate(rel, left, right):
        raise ValueError("relation is not a valid correspondence between these networks")
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"geodesic parameter must lie in [0, 1], got {t}")
    li = rel.left_indices()
    ri = rel.right_indices()
    labels = tuple(f"({left.labels[i]}|{right.labels[j]})" for i, j in rel.pairs)
    weights = (1.0 - t) * left.weights[np.ix_(li, li)] + t * right.weights[np.ix_(ri, ri)]
    return GeodesicPoint(float(t), Network(labels, weights))


def sample_geodesic(left: Network, right: Network, ts: Sequence[float],
                    node_budget: int = DEFAULT_NODE_BUDGET) -> list[GeodesicPoint]:
    """Solve for one optimal correspondence, then sample every parameter on it.

    All points share the single correspondence, so distances between the
    samples scale linearly with the parameter gap.
    """
    params = [float(t) for t in ts]
    for t in params:
        if not 0.0 <= t <= 1.0:
            raise ValueError(f"geodesic parameter must lie in [0, 1], got {t}")
    _, rel = exact_distance(left, right, node_budget)
    return [geodesic_point(left, right, rel, t) for t in params]


def midpoint(left: Network, right: Network, node_budget: int = DEFAULT_NODE_BUDGET) -> Network:
    """The halfway network: equidistant from both inputs at half their distance."""
    return sample_geodesic(left, right, [0.5], node_budget)[0].network
