"""quivercalc: stability analysis of quiver dimension vectors, the double
framing construction and its reduction, dimension formulas for endomorphism
algebras / vector fields / first Hochschild cohomology of path algebras, and
exhaustive finite-field verification of stability characterizations."""

from .core import (
    AcyclicityCertificate,
    Character,
    DimensionVector,
    Path,
    PathCountMatrix,
    Quiver,
    StabilityParameter,
    canonical_stability,
    connected_components,
    enumerate_paths,
    euler_form,
    is_acyclic,
    is_connected,
    path_count_matrix,
    slope,
    weight_one_character,
)
from .cohomology import (
    ConsistencyCheck,
    HomExtResult,
    RationalRepresentation,
    TangentPresentation,
    UnverifiedAssumptionWarning,
    consistency_hh1_vs_vector_fields,
    endomorphism_dimensions,
    hochschild1_dim,
    hom_ext,
    moduli_dimension,
    projective_representation,
    tangent_presentation,
    vector_fields_dim,
)
from .errors import (
    AssumptionViolatedError,
    BudgetExceededError,
    CyclicQuiverError,
    DisconnectedQuiverError,
    DivisibleDimensionVectorError,
    NotThinAtEndpointsError,
    PairingNonzeroError,
    QuiverCalcError,
    QuiverMismatchError,
    SpecFileError,
    UnknownVertexError,
    UnsupportedDimensionVectorError,
    VertexSetMismatchError,
)
from .ff_oracle import (
    EquivalenceReport,
    FiniteFieldRepresentation,
    StabilityVerdict,
    WeightLawReport,
    enumerate_representations,
    enumerate_subrepresentations,
    gaussian_binomial,
    has_cyclic_destabilizer,
    king_stability,
    path_semiinvariant,
    subspace_count,
    subspaces_of,
    verify_double_framing_equivalence,
    verify_semiinvariant_weight,
    weight_law_trials,
)
from .framing import (
    FramingResult,
    ReductionCase,
    ReductionResult,
    double_frame,
    framed_ample_stability,
    framed_assumptions_report,
    minimal_framing_scale,
    reduce,
    reduction_path_map,
    verify_framed_sign_partition,
    verify_reduction_pairing,
)
from .specfile import QuiverSpec, load_spec, parse_spec, spec_to_dict
from .stability import (
    AssumptionsReport,
    SignPartition,
    ThreeValued,
    assumptions_report,
    is_strongly_amply_stable,
    is_theta_coprime,
    sign_partition,
    subdimension_vectors,
)

__version__ = "0.1.0"
