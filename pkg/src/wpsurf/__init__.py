"""Quasi-smooth amplitude-one hypersurfaces in weighted projective 3-space.

Classification of the four families, their Hodge and moduli invariants via
Jacobian rings, quotient-singularity resolutions with surface invariants,
Picard/transcendental lattice genus data, and projective normal forms.
"""

from .errors import (
    CapacityError,
    InvalidInput,
    NotQuasismooth,
    NotReducible,
    RootRequired,
    SubstitutionError,
    UnsupportedConfiguration,
    WpsurfError,
)
from .families import (
    CASES,
    FamilyRecord,
    all_family_records,
    case_c_rejected_transcendental,
    family_record,
)
from .hodge import (
    HodgeVector,
    PoincareSeries,
    hodge_numbers,
    milnor_number,
    moduli_count,
    poincare_series,
)
from .jacobian import (
    GradedPiece,
    KernelReport,
    graded_piece,
    multiplication_kernel,
    torelli_test,
)
from .lattice import (
    DiscriminantForm,
    FiberType,
    GramLattice,
    direct_sum,
    disc_form_isomorphic,
    discriminant_form,
    dynkin_graph_lattice,
    fiber_config_euler,
    from_gram,
    genus_equal,
    genus_fingerprint,
    hyperbolic_U,
    invariant_factors,
    kodaira_dimension,
    kodaira_fiber,
    picard_from_configuration,
    root,
    scale,
    smith_normal_form,
    unit,
    verify_transcendental,
)
from .normalform import (
    NormalFormTemplate,
    NormalFormTransform,
    TorusElement,
    is_normal_form,
    normal_form_moduli_dim,
    normal_form_template,
    random_normal_form,
    random_torus_element,
    reduce_to_normal_form,
    scalar_field,
    torus_equivalent,
)
from .poly import (
    FamilySymbol,
    WPolynomial,
    amplitude,
    enumerate_monomials,
    format_poly,
    monomial,
    parse_poly,
    partial_derivative,
    substitute,
    symbol,
    weights,
)
from .quasismooth import (
    QuasiSmoothCertificate,
    cycle_decomposition,
    division_witness_check,
    enumerate_amplitude_one,
    is_quasismooth,
    subset_smoothness_advisory,
)
from .reports import FamilyReport, ReproduceSummary, report_family, reproduce_paper
from .resolution import (
    HJChain,
    QuotientSingularity,
    SurfaceInvariantReport,
    detect_singularities,
    discrepancy,
    hj_chain,
    invariant_report,
)

__version__ = "1.0.0"

__all__ = [
    "CASES",
    "CapacityError",
    "DiscriminantForm",
    "FamilyRecord",
    "FamilySymbol",
    "FamilyReport",
    "FiberType",
    "GradedPiece",
    "GramLattice",
    "HJChain",
    "HodgeVector",
    "InvalidInput",
    "KernelReport",
    "NormalFormTemplate",
    "NormalFormTransform",
    "NotQuasismooth",
    "NotReducible",
    "PoincareSeries",
    "QuasiSmoothCertificate",
    "QuotientSingularity",
    "ReproduceSummary",
    "RootRequired",
    "SubstitutionError",
    "SurfaceInvariantReport",
    "TorusElement",
    "UnsupportedConfiguration",
    "WPolynomial",
    "WpsurfError",
    "all_family_records",
    "amplitude",
    "case_c_rejected_transcendental",
    "cycle_decomposition",
    "detect_singularities",
    "direct_sum",
    "disc_form_isomorphic",
    "discrepancy",
    "discriminant_form",
    "division_witness_check",
    "dynkin_graph_lattice",
    "enumerate_amplitude_one",
    "enumerate_monomials",
    "family_record",
    "fiber_config_euler",
    "format_poly",
    "from_gram",
    "genus_equal",
    "genus_fingerprint",
    "graded_piece",
    "hj_chain",
    "hodge_numbers",
    "hyperbolic_U",
    "invariant_factors",
    "invariant_report",
    "is_normal_form",
    "is_quasismooth",
    "kodaira_dimension",
    "kodaira_fiber",
    "milnor_number",
    "moduli_count",
    "monomial",
    "multiplication_kernel",
    "normal_form_moduli_dim",
    "normal_form_template",
    "parse_poly",
    "partial_derivative",
    "picard_from_configuration",
    "poincare_series",
    "random_normal_form",
    "random_torus_element",
    "reduce_to_normal_form",
    "report_family",
    "reproduce_paper",
    "root",
    "scale",
    "scalar_field",
    "smith_normal_form",
    "subset_smoothness_advisory",
    "substitute",
    "symbol",
    "torelli_test",
    "torus_equivalent",
    "unit",
    "verify_transcendental",
    "weights",
]
