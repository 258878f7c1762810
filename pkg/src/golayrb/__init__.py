"""Low-PMEPR OFDMA preamble sequences from quadratic Boolean constructions.

The package builds complementary-pair sequence families, verifies their
per-resource-block correlation guarantees, and reports PMEPR under every
contiguous and non-contiguous block selection.
"""
from .cli_report import (
    RunConfig,
    TableArtifact,
    build_table,
    diff_against_reference,
    load_reference_tables,
    main,
)
from .correlation import (
    AcpReport,
    CorrelationVector,
    CssReport,
    MatePreconditionError,
    autocorr_vector,
    crosscorr_vector,
    default_tolerance,
    detect_acp,
    is_css,
    is_gcp,
    is_golay_mate,
    xcorr,
)
from .dsa import (
    ALL_MASKS,
    CONTIGUOUS_MASKS,
    NONCONTIGUOUS_MASKS,
    DsaPmeprReport,
    MaskClass,
    RbMask,
    apply_mask,
    classify_mask,
    dsa_report,
    mask_weights,
)
from .envelope import (
    PmeprResult,
    average_power,
    convergence_delta,
    css_pmepr_bound,
    imepr_trace,
    instantaneous_power,
    pmepr,
    power_grid,
    sampled_pmepr,
)
from .families import (
    FamilyInstance,
    Relation,
    TheoremVerdict,
    build_family,
    companion_functions,
    enumerate_families,
    extend_minus_one,
    m_sequence,
    verify_instance,
    verify_theorem_1,
    verify_theorem_2,
    verify_theorem_3,
    verify_theorem_4,
    zadoff_chu,
)
from .seqcore import (
    BooleanFunction,
    ComplexSequence,
    Family,
    FamilyDescriptor,
    PhaseSequence,
    bits_of,
    boolean_to_phases,
    eval_boolean,
    gdj_mates,
    gdj_quadratic,
    index_of,
    psi,
)

__version__ = "0.1.0"

__all__ = [
    "AcpReport",
    "ALL_MASKS",
    "BooleanFunction",
    "ComplexSequence",
    "CONTIGUOUS_MASKS",
    "CorrelationVector",
    "CssReport",
    "DsaPmeprReport",
    "Family",
    "FamilyDescriptor",
    "FamilyInstance",
    "MaskClass",
    "MatePreconditionError",
    "NONCONTIGUOUS_MASKS",
    "PhaseSequence",
    "PmeprResult",
    "RbMask",
    "Relation",
    "RunConfig",
    "TableArtifact",
    "TheoremVerdict",
    "apply_mask",
    "autocorr_vector",
    "average_power",
    "bits_of",
    "boolean_to_phases",
    "build_family",
    "build_table",
    "classify_mask",
    "companion_functions",
    "convergence_delta",
    "crosscorr_vector",
    "css_pmepr_bound",
    "default_tolerance",
    "detect_acp",
    "diff_against_reference",
    "dsa_report",
    "enumerate_families",
    "eval_boolean",
    "extend_minus_one",
    "gdj_mates",
    "gdj_quadratic",
    "imepr_trace",
    "index_of",
    "instantaneous_power",
    "is_css",
    "is_gcp",
    "is_golay_mate",
    "load_reference_tables",
    "m_sequence",
    "main",
    "mask_weights",
    "pmepr",
    "power_grid",
    "psi",
    "sampled_pmepr",
    "verify_instance",
    "verify_theorem_1",
    "verify_theorem_2",
    "verify_theorem_3",
    "verify_theorem_4",
    "xcorr",
    "zadoff_chu",
]
