"""Boundary-zero analysis of stable polynomials on the ball and the
Siegel upper half-space.

The package studies polynomials with no zeros on the open unit ball of
C^d, or equivalently (after a Cayley-type transport) on the Siegel domain
Im w > |z|^2, near a zero sitting on the boundary.  It expands the zero
set in Puiseux branches, classifies each branch, builds the ideal of
numerators q for which q/p stays bounded, constructs the standard example
families, and cross-checks everything numerically.
"""

from .classify import (
    BranchClass,
    SmoothReport,
    angular_critical_G,
    build_L,
    classify_branch,
    classify_simple_zero,
    curve_witness,
    decompose_L,
    simple_criterion,
)
from .constructors import (
    AlgebraicLReport,
    ParamCurve,
    RowContraction,
    RudinAnalysis,
    TakagiReport,
    check_algebraic_L,
    family_Pc,
    family_Qc,
    make_param,
    one_variable_lift,
    planted_rowdet,
    quadratic_form_poly,
    rowdet_factor,
    rowdet_poly,
    rudin_analysis,
    rudin_coefficients,
    rudin_poly,
    takagi,
)
from .errors import (
    BadConstantTerm,
    BoundViolated,
    DegenerateFit,
    DimMismatch,
    InputError,
    InsufficientOrder,
    NoBranchThroughOne,
    NotInjective,
    NotRowContraction,
    NumericalDegeneracy,
    StablePolyError,
    UnsettledCase,
    WitnessSearchFailed,
    ZeroPolynomial,
)
from .ideals import (
    AdmissibleIdeal,
    WitnessCurve,
    ideal_for,
    ideal_from_classified,
    is_member,
    unboundedness_witness,
)
from .multipoly import (
    MultiPoly,
    Point,
    transport_ball_to_siegel,
    transport_siegel_to_ball,
)
from .parsing import parse_poly, parse_series, parse_sy_poly
from .puiseux import PuiseuxBranch, expand_branches, normalize_branch
from .scalars import QI, Unimodular
from .series import TruncSeries
from .verify import (
    GFitReport,
    ProbeReport,
    SampleConfig,
    ScanReport,
    TraceReport,
    boundedness_probe,
    curve_from_branch,
    g_exponent_fit,
    lemniscate_closed_form,
    sample_ball,
    sample_siegel,
    stability_scan,
    trace_boundary_curve,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibleIdeal",
    "AlgebraicLReport",
    "BadConstantTerm",
    "BoundViolated",
    "BranchClass",
    "DegenerateFit",
    "DimMismatch",
    "GFitReport",
    "InputError",
    "InsufficientOrder",
    "MultiPoly",
    "NoBranchThroughOne",
    "NotInjective",
    "NotRowContraction",
    "NumericalDegeneracy",
    "ParamCurve",
    "Point",
    "ProbeReport",
    "PuiseuxBranch",
    "QI",
    "RowContraction",
    "RudinAnalysis",
    "SampleConfig",
    "ScanReport",
    "SmoothReport",
    "StablePolyError",
    "TakagiReport",
    "TraceReport",
    "TruncSeries",
    "Unimodular",
    "UnsettledCase",
    "WitnessCurve",
    "WitnessSearchFailed",
    "ZeroPolynomial",
    "angular_critical_G",
    "boundedness_probe",
    "build_L",
    "check_algebraic_L",
    "classify_branch",
    "classify_simple_zero",
    "curve_from_branch",
    "curve_witness",
    "decompose_L",
    "expand_branches",
    "family_Pc",
    "family_Qc",
    "g_exponent_fit",
    "ideal_for",
    "ideal_from_classified",
    "is_member",
    "lemniscate_closed_form",
    "make_param",
    "normalize_branch",
    "one_variable_lift",
    "parse_poly",
    "parse_series",
    "parse_sy_poly",
    "planted_rowdet",
    "quadratic_form_poly",
    "rowdet_factor",
    "rowdet_poly",
    "rudin_analysis",
    "rudin_coefficients",
    "rudin_poly",
    "sample_ball",
    "sample_siegel",
    "simple_criterion",
    "stability_scan",
    "takagi",
    "trace_boundary_curve",
    "transport_ball_to_siegel",
    "transport_siegel_to_ball",
    "unboundedness_witness",
]
