"""Group-decodable erasure codes: construction, verification, codec, simulation.

The pipeline in one line::

    code = gdcode.build_code(alpha=2, beta=3, k=3, t=2, seed=0)

which designs the incidence matrix, sizes the field, synthesizes a
generator and verifies both group decodability and the exact minimum
distance before returning.
"""

from .artifact import CodeArtifact, load_artifact, save_artifact
from .codec import (
    Codeword,
    GdcCode,
    build_code,
    decode_global,
    encode,
    group_decode,
    min_distance,
    project,
    repair_symbol,
)
from .design import (
    BoundReport,
    CodeDesign,
    balance_columns,
    bound_report,
    build_design,
    complete_design,
    construct_m0,
    delta0_closed_form,
    delta0_exhaustive,
    gdc_bound,
    greedy_cover_partition,
    indicator_matrix,
    lrc_bound,
    singleton_bound,
    validate_params,
)
from .errors import (
    ArtifactError,
    ConstructionError,
    GdcError,
    InsufficientSymbolsError,
    ParameterError,
    RankDeficientError,
    SingularSystemError,
    SizeGuardError,
    StallError,
    StructuralInfeasibilityError,
    SynthesisError,
)
from .galois import BinaryField, field_for_params, is_irreducible
from .matrices import (
    BinaryMatrix,
    FieldMatrix,
    MatchingResult,
    MatrixProfile,
    hall_matching,
    matrix_profile,
    rank_of_columns,
    solve_square,
    xi_profile,
)
from .simulator import (
    Layout,
    RepairStats,
    build_layout,
    hot_read_options,
    inject_and_repair,
)
from .synthesis import (
    GeneratorMatrix,
    SynthesisConfig,
    check_condition2,
    check_condition3,
    full_rank_witness,
    synthesize_generator,
    verify_distance_exact,
    verify_gdc,
    verify_group_decodable,
)

__version__ = "0.1.0"

__all__ = [
    "ArtifactError",
    "BinaryField",
    "BinaryMatrix",
    "BoundReport",
    "CodeArtifact",
    "CodeDesign",
    "Codeword",
    "ConstructionError",
    "FieldMatrix",
    "GdcCode",
    "GdcError",
    "GeneratorMatrix",
    "InsufficientSymbolsError",
    "Layout",
    "MatchingResult",
    "MatrixProfile",
    "ParameterError",
    "RankDeficientError",
    "RepairStats",
    "SingularSystemError",
    "SizeGuardError",
    "StallError",
    "StructuralInfeasibilityError",
    "SynthesisConfig",
    "SynthesisError",
    "balance_columns",
    "bound_report",
    "build_code",
    "build_design",
    "build_layout",
    "check_condition2",
    "check_condition3",
    "complete_design",
    "construct_m0",
    "decode_global",
    "delta0_closed_form",
    "delta0_exhaustive",
    "encode",
    "field_for_params",
    "full_rank_witness",
    "gdc_bound",
    "greedy_cover_partition",
    "group_decode",
    "hall_matching",
    "hot_read_options",
    "indicator_matrix",
    "inject_and_repair",
    "is_irreducible",
    "load_artifact",
    "lrc_bound",
    "matrix_profile",
    "min_distance",
    "project",
    "rank_of_columns",
    "repair_symbol",
    "save_artifact",
    "singleton_bound",
    "solve_square",
    "synthesize_generator",
    "validate_params",
    "verify_distance_exact",
    "verify_gdc",
    "verify_group_decodable",
    "xi_profile",
]
