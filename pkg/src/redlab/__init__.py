"""Exact computation of discrepancies, redundant blow-ups and Zariski
decompositions for dual graphs of normal surface singularities."""

from .dualgraph import (DiscrepancyVector, DualGraph, GraphError, Multigraph,
                        NegativeDiscrepancy, NotConnected,
                        NotNegativeDefinite, Other, SingularityClass, TypeA,
                        TypeBracket, TypeD, WeightTooSmall, bracket_graph,
                        build_graph, chain_graph, classify, d_graph,
                        d_type_closed_form, discrepancies, graph_from_json,
                        graph_to_json, intersection_matrix, recognize_shape)
from .hjcf import (BadFraction, HJData, HJString, hj_eval, hj_expand,
                   minor_det, uv_sequences)
from .lattice import (BadParameters, DivisorClass, NotPseudoEffective,
                      PicardLattice, ZariskiDecomp, fixture_hirzebruch,
                      fixture_two_lines, is_big, lattice_blow_up,
                      lattice_from_json, lattice_to_json, pull_back,
                      zariski_decompose)
from .linalg import (Matrix, NotSymmetric, Rational, SingularMatrix, det,
                     format_rational, is_negative_definite, parse_rational,
                     solve_linear)
from .redundancy import (Curve, CurveConfig, GenericPoint, IndexOutOfRange,
                         IntersectionPoint, NotRedundant, RedundantPoint,
                         SequenceNode, SequenceReport, UnboundedAtPoint,
                         blow_up, blowup_depth_bound, chain_redundant_at,
                         enumerate_sequences, is_redundancy_free,
                         negative_part, point_multiplicity, redundant_points)
from .verify import (CheckResult, ClassificationReport,
                     check_bracket_families, check_chain_tables,
                     check_d_closed_forms, verify_classification)

__version__ = "0.1.0"
