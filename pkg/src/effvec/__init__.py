"""Efficient priority vectors for reciprocal pairwise-comparison matrices.

Decide whether a weight vector is efficient for a reciprocal matrix, grow
families of efficient vectors by inductive extension, take geometric means of
column subsets, and benchmark them against the Perron eigenvector.
"""

__version__ = "0.1.0"

from .column_means import (
    ColumnSubset,
    SweepRow,
    geometric_mean_columns,
    index_of,
    subset_from_index,
    subset_gm_table,
    subset_norms,
    sweep_all_subsets,
)
from .construction import (
    EfficientFamily,
    ExtensionInterval,
    FamilyProvenance,
    SamplingStrategy,
    extend,
    extension_interval,
    inductive_enumerate,
)
from .efficiency import (
    ConnectivityResult,
    DominanceDigraph,
    EfficiencyCertificate,
    build_digraph,
    equal_deviation_magnitudes,
    is_efficient,
    is_strongly_connected,
    proportional,
    strongly_connected_matrix_power,
    z_efficient,
)
from .errors import (
    BadDimension,
    BadRange,
    BadSeedSize,
    DimensionMismatch,
    DimensionTooLarge,
    EffvecError,
    EmptyIndexSet,
    IndexOutOfRange,
    InvalidTransform,
    NoConvergence,
    NonPositiveEntry,
    NonUnitDiagonal,
    NotSquare,
    OutOfInterval,
    ParseError,
    ReciprocityViolation,
    SeedNotEfficient,
)
from .experiments import (
    BestWorstSummary,
    CompareRecord,
    ExperimentConfig,
    NormComparison,
    NormExtremes,
    SubsetStats,
    batch_compare,
    best_worst_summary,
    compare_matrix,
    generate_matrices,
    generate_matrix,
    matrix_rng,
    random_pc_hadamard_quotient,
    random_pc_uniform_upper,
    subset_statistics,
)
from .pcm import (
    DeviationMatrix,
    MonomialTransform,
    PCMatrix,
    PriorityVector,
    consistent_from_vector,
    deviation,
    is_consistent,
    load_matrix,
    load_vector,
    matrix_to_csv,
    matrix_to_json,
    monomial_similarity,
    parse_matrix_csv,
    parse_matrix_json,
    parse_number,
    parse_vector,
    principal_submatrix,
    transform_vector,
    validate_pc,
    vector_to_json,
    z_matrix,
)
from .spectral import PerronResult, norm1, norm_frobenius, perron_vector

__all__ = [name for name in dir() if not name.startswith("_")]
