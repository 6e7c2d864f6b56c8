"""Scrollar invariants of branched covers of the projective line, in exact arithmetic."""

from .bundle import (
    BundleLattice, InflationDatum, NoDrop, SplittingType, cohomology, end_h1, global_sections,
    inflate, predicted_inflation, select_effective_quotient, splitting_type,
)
from .cover import (
    CoverAlgebra, MaximalityNotCertified, PinchSpec, branch_and_genus, from_binary_cubic,
    from_plane_model, kummer_cover, normalize_affine_embedding, pinch, pinch_tower, split_cover,
    tschirnhausen,
)
from .field import GF, QQ, field_for
from .invariants import (
    HurwitzParams, filtration_degrees, hurwitz_dimension, maroni_expected, miranda_construct,
    miranda_realizable, rees_degeneration_target,
)
from .poly import Poly, RationalFunction, poly_gcd, squarefree
from .polymat import PolyMatrix, constrained_kernel_basis, solve_in_lattice, weak_popov
from .rnc import RncData, lingen_oracle, lingen_rank, lingen_values, rnc_parametrize

__version__ = "0.1.0"
