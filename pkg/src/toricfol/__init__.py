"""Exact computations for marked simplicial fans, their face rings and foliations."""

from .complexes import SimplicialComplex, boundary_of_simplex, cycle
from .cplx import ExactComplex
from .dga import DGAModel, DolbeaultTable, build_model, frolicher_check, model_cohomology
from .facering import (RingPresentation, build_presentation, hodge_diamond, poincare_pairing,
                       quotient_basis, ring_report)
from .fan import (FanError, MarkedFan, PolytopalityCertificate, coordinate_fan, is_polytopal,
                  locate_cone, projected_fan, validate_fan)
from .foliation import (HSubspace, gamma_rank, leaf_census, leaf_type, maximal_action_reduce,
                        validate_h)
from .pipeline import PipelineError, chow_pipeline, polytopalize, refine_by_stellar
from .scalar import QuadScalar, format_scalar, parse_scalar, sqrt_of
from .subdivision import (SubdivisionStep, blowdown_eval, kernel_update,
                          rational_stellar_subdivision, refines)

__all__ = [
    "SimplicialComplex", "boundary_of_simplex", "cycle", "ExactComplex",
    "DGAModel", "DolbeaultTable", "build_model", "frolicher_check", "model_cohomology",
    "RingPresentation", "build_presentation", "hodge_diamond", "poincare_pairing",
    "quotient_basis", "ring_report",
    "FanError", "MarkedFan", "PolytopalityCertificate", "coordinate_fan", "is_polytopal",
    "locate_cone", "projected_fan", "validate_fan",
    "HSubspace", "gamma_rank", "leaf_census", "leaf_type", "maximal_action_reduce", "validate_h",
    "PipelineError", "chow_pipeline", "polytopalize", "refine_by_stellar",
    "QuadScalar", "format_scalar", "parse_scalar", "sqrt_of",
    "SubdivisionStep", "blowdown_eval", "kernel_update", "rational_stellar_subdivision",
    "refines",
]
