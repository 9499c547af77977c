"""Network distance for finite weighted directed networks.

Computes the correspondence-distortion distance between networks with
arbitrary real edge weights, together with the machinery around it:
motif sets and their stability bounds, skeleton quotients and blow-ups,
strong/weak isomorphism decision, explicit geodesics, and example
generators.  All value types are immutable and every operation is a
pure function, so concurrent use needs no locking.
"""

from .correspondence import Correspondence, compose, diagonal, distortion, from_function_pair, product, validate
from .distance import (
    BoundEntry,
    DistanceReport,
    distance_report,
    exact_distance,
    lower_bound_diameter,
    lower_bound_motif,
    upper_bound_greedy,
    upper_bound_product,
)
from .errors import BudgetError, ParseError
from .fileformat import parse_network, render_distance_report, render_motif_set, serialize_network
from .generators import constant_network, directed_circle, directed_circle_reversible, random_network
from .geodesics import GeodesicPoint, geodesic_point, midpoint, sample_geodesic
from .isomorphism import Bijection, enumerate_automorphisms, strong_isomorphic, weak_isomorphic
from .motifs import MotifSet, hausdorff_linf, motif_set, reconstruct_generic, tuple_weight_matrix
from .network import (
    Network,
    SkeletonResult,
    blow_up,
    canonical_pseudometric,
    diameter,
    extract_net,
    is_generic,
    quantize,
    skeletonize,
)

__version__ = "0.1.0"

__all__ = [
    "Network", "SkeletonResult", "diameter", "is_generic", "blow_up", "skeletonize",
    "canonical_pseudometric", "quantize", "extract_net",
    "Correspondence", "diagonal", "product", "from_function_pair", "validate", "distortion", "compose",
    "BoundEntry", "DistanceReport", "exact_distance", "distance_report",
    "lower_bound_diameter", "lower_bound_motif", "upper_bound_product", "upper_bound_greedy",
    "MotifSet", "tuple_weight_matrix", "motif_set", "hausdorff_linf", "reconstruct_generic",
    "Bijection", "strong_isomorphic", "weak_isomorphic", "enumerate_automorphisms",
    "GeodesicPoint", "geodesic_point", "sample_geodesic", "midpoint",
    "directed_circle", "directed_circle_reversible", "constant_network", "random_network",
    "parse_network", "serialize_network", "render_distance_report", "render_motif_set",
    "BudgetError", "ParseError",
    "__version__",
]
