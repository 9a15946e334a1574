"""Spectral upper bounds on the independence number of a graph.

Core objects: Graph (graphs module), Spectrum (spectral), BoundInputs and
BoundReport (bounds), ExactResult (exact), FieldSpec and orthogonality
graphs (finite_geometry).
"""

from .bounds import (BOUND_NAMES, BoundInputs, BoundReport, ProductBounds,
                     TraceLevel, average_degree_check, basic_bound,
                     bound_report, certified_floor, gain_form, gn_explicit,
                     hoffman_type, product_bounds, recursive_relative,
                     relative_bound, srg_hoffman, vizing_lower)
from .errors import (AlphaBoundError, BadDimension, BadInputs, BadParams,
                     EmptyGraph, Infeasible, LengthMismatch, NoConvergence,
                     NoEdges, NotIndependent, NotPrime, OutOfRange, Overflow,
                     SelfLoop, TooLarge, UnknownFamily)
from .exact import (DEFAULT_NODE_BUDGET, ExactResult, is_independent,
                    max_independent_set)
from .finite_geometry import (FieldSpec, SrgParams, er_graph, field_for_order,
                              gaussian_count, is_prime, make_field,
                              measure_srg, orthogonality_graph,
                              predicted_derived_srg, projective_points)
from .graphs import (DegreeProfile, Graph, cartesian_product, cone,
                     connected_components, degrees, derived_graph,
                     format_edge_list, generate_family, induced_subgraph,
                     new_graph, parse_edge_list)
from .spectral import (Spectrum, lambda_max, lambda_max_upper,
                       laplacian_matrix, laplacian_spectrum, quadratic_form)

__version__ = "0.1.0"

__all__ = [
    "AlphaBoundError", "BadDimension", "BadInputs", "BadParams",
    "BOUND_NAMES", "BoundInputs", "BoundReport", "DEFAULT_NODE_BUDGET",
    "DegreeProfile", "EmptyGraph", "ExactResult", "FieldSpec", "Graph",
    "Infeasible", "LengthMismatch", "NoConvergence", "NoEdges",
    "NotIndependent", "NotPrime", "OutOfRange", "Overflow", "ProductBounds",
    "SelfLoop", "Spectrum", "SrgParams", "TooLarge", "TraceLevel",
    "UnknownFamily", "average_degree_check", "basic_bound", "bound_report",
    "cartesian_product", "certified_floor", "cone", "connected_components",
    "degrees", "derived_graph", "er_graph", "field_for_order",
    "format_edge_list", "gain_form", "gaussian_count", "generate_family",
    "gn_explicit", "hoffman_type", "induced_subgraph", "is_independent",
    "is_prime", "lambda_max", "lambda_max_upper", "laplacian_matrix",
    "laplacian_spectrum", "make_field", "max_independent_set", "measure_srg",
    "new_graph", "orthogonality_graph", "parse_edge_list",
    "predicted_derived_srg", "product_bounds", "projective_points",
    "quadratic_form", "recursive_relative", "relative_bound", "srg_hoffman",
    "vizing_lower",
]
