"""Spectral analysis of weighted and signed graphs: Laplacians, spectral
drawings, and K-way clustering by normalized / signed / ratio cuts."""

from .graph import (
    Graph,
    IncidenceMatrix,
    NodeSubset,
    OrientedGraph,
    adjacency_matrix,
    connected_components,
    cut,
    degree_vector,
    incidence_matrix,
    links,
    orient,
    symmetrize,
    volume,
)
from .laplacian import (
    BalanceReport,
    LaplacianMatrix,
    is_balanced,
    kernel_dimension,
    laplacian,
    quadratic_form,
    unsign_conjugation,
)
from .eigen import SVDResult, SymmetricEigen, rayleigh, smallest_k, svd, sym_eigen
from .drawing import DrawingMatrix, emit_csv, emit_svg, energy, signed_drawing, spectral_drawing
from .ncut2 import TwoWayIndicator, TwoWayResult, ncut2_value, orient_sign, round_2way, solve_relaxed_2way
from .kway import (
    ContinuousSolution,
    IndicatorMatrix,
    KWayResult,
    TransformQ,
    cluster,
    first_column_rotation,
    flip_columns,
    init_rotation_R1,
    init_rotation_R2,
    objective,
    podr,
    podx,
    projective_distance,
    rayleigh_sum,
    rescale_variant,
    solve_relaxed,
)

__version__ = "0.1.0"
