"""Exact invariants and negativity bounds for transversal curve arrangements
on geometrically ruled surfaces.

Everything is exact arithmetic (arbitrary-precision integers and rationals);
all public values are immutable and all operations pure, so they are safe to
share across threads without synchronization.
"""

from .arrangement import (
    ArrangementProfile,
    ProfileStats,
    ValidationReport,
    generic_profile,
    harbourne_constant,
    profile_from_json,
    profile_to_json,
    stats,
    validate_four_curve,
    validate_profile,
)
from .ballquotient import (
    BallQuotientVerdict,
    ScanGrid,
    ScanReport,
    T2T6Solution,
    feasibility,
    proportionality_exceptional,
    proportionality_strict_transform,
    scan,
    solve_t2_t6,
)
from .bounds import (
    BoundReport,
    MValue,
    MValueKind,
    adjoint_degree_exceptional,
    adjoint_degree_strict_transform,
    bound_report,
    c0_disjoint_lower_bound,
    c0_hirzebruch_inequality,
    chern_form_residual,
    corollary_f0_floor,
    global_lower_bound,
    harbourne_lower_bound,
    hirzebruch_inequality,
    m_value_minus_two,
    m_value_rational_curve,
    strict_transform_bound,
)
from .covering import (
    CanonicalPositivity,
    CoverInvariants,
    ExceptionalCurveInvariants,
    canonical_positivity_hint,
    cover_invariants,
    exceptional_curve_invariants,
    hirzebruch_polynomial,
)
from .errors import (
    AuditFailed,
    BNotAE,
    C0DisjointRequired,
    EmptySingularLocus,
    HarbourneError,
    InconsistentCurveStats,
    InputFormatError,
    MultiplicityProfileNotBinary26,
    NonIntegralCount,
    NonNegativeEOnly,
    ParameterRange,
    ValidationFailed,
)
from .incidence import (
    AuditReport,
    CurveStats,
    IncidenceStructure,
    audit,
    check_four_curve,
    curve_stats,
    incidence_from_json,
    incidence_rank,
    incidence_to_json,
    profile_of,
    realize_generic,
)
from .pullback import (
    LineArrangement,
    klein,
    plane_harbourne_constant,
    pullback,
    wiman,
)
from .surface import NumClass, RuledSurface

__version__ = "0.1.0"
