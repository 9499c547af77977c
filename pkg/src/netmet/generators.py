"""Example-network families and seeded random instances.

The circle generators discretize a unit circle whose weight is the
counterclockwise angular distance; the reversible variant also allows
clockwise travel at a penalty factor.  The finite samples approximate
the continuum families: properties only the infinite objects have are
out of scope here.  Random networks come from a pinned PRNG (numpy's
PCG64 via ``default_rng``) so the same seed yields a bit-identical
matrix everywhere.
"""

from __future__ import annotations

import math

import numpy as np

from .network import Network


def constant_network(n: int, value: float, labels=None) -> Network:
    """All weights equal to ``value``; collapses to a single node under the skeleton."""
    if n < 1:
        raise ValueError("node count must be at least 1")
    return Network.from_weights(np.full((n, n), float(value)), labels)


def directed_circle(n: int) -> Network:
    """n equally spaced circle points with counterclockwise angular distance as weight.

    Node k sits at angle 2*pi*k/n; the weight from j to k is the
    counterclockwise arc (theta_k - theta_j) mod 2*pi, in [0, 2*pi).
    Asymmetric for n >= 3.
    """
    if n < 1:
        raise ValueError("node count must be at least 1")
    step = 2.0 * math.pi / n
    k = np.arange(n)
    weights = ((k[None, :] - k[:, None]) % n) * step
    return Network.from_weights(weights)


def directed_circle_reversible(n: int, rho: float) -> Network:
    """Circle samples where clockwise travel is allowed at penalty factor ``rho`` >= 1.

    The weight from j to k is min(counterclockwise arc, rho * clockwise
    arc); rho = 1 recovers the symmetric geodesic circle metric.
    """
    if n < 1:
        raise ValueError("node count must be at least 1")
    if rho < 1:
        raise ValueError("reversibility penalty must be at least 1")
    step = 2.0 * math.pi / n
    k = np.arange(n)
    forward = ((k[None, :] - k[:, None]) % n) * step
    backward = ((k[:, None] - k[None, :]) % n) * step
    return Network.from_weights(np.minimum(forward, rho * backward))


def random_network(n: int, low: float = 0.0, high: float = 1.0, seed: int = 0) -> Network:
    """Entries drawn i.i.d. uniform on [low, high) from PCG64 seeded with ``seed``."""
    if n < 1:
        raise ValueError("node count must be at least 1")
    if not low < high:
        raise ValueError(f"need low < high, got [{low}, {high})")
    rng = np.random.default_rng(seed)
    return Network.from_weights(rng.uniform(low, high, size=(n, n)))
