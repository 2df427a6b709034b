"""Monodromy calculus for allowable Lefschetz fibrations over bounded surfaces.

Everything is exact integer arithmetic over a fixed homology basis; see
:mod:`lefschetz.homology` for the conventions.
"""

from .curves import (
    Curve,
    CurveClass,
    class_count,
    enumerate_classes,
    nonseparating_curve,
    separating_curve,
)
from .errors import CapacityError, InputError, NotApplicable, Unsupported
from .fibration import (
    ANNULUS,
    DISK,
    BaseSurface,
    ImmersionWitness,
    InvariantReport,
    LefschetzFibration,
    MeridianPlan,
    PlanEntry,
    ReduceResult,
    SignedCycle,
    UniversalityReport,
    build,
    destabilize,
    global_conjugate,
    hurwitz_move,
    identity_plan,
    p_g,
    pullback,
    reduce,
    stabilize,
    substitution_witness,
    total_space_invariants,
    twist_product,
    u_10,
    u_11,
    u_g1,
    universality_report,
)
from .homology import (
    SmithDecomposition,
    SurfaceSpec,
    cokernel_invariants,
    is_essential,
    pairing,
    pairing_matrix,
    smith_normal_form,
)
from .mapping import (
    BundleGen,
    HomPermRep,
    Letter,
    MCWord,
    SurjectivityVerdict,
    TwistGen,
    act_on_curve,
    boundary_permutation_gen,
    evaluate,
    mcg_surjectivity_oracle,
    perm_group_surjective,
    twist_catalog,
    twist_matrix,
    twist_word,
)

__version__ = "0.1.0"

__all__ = [
    "ANNULUS",
    "BaseSurface",
    "BundleGen",
    "CapacityError",
    "Curve",
    "CurveClass",
    "DISK",
    "HomPermRep",
    "ImmersionWitness",
    "InputError",
    "InvariantReport",
    "LefschetzFibration",
    "Letter",
    "MCWord",
    "MeridianPlan",
    "NotApplicable",
    "PlanEntry",
    "ReduceResult",
    "SignedCycle",
    "SmithDecomposition",
    "SurfaceSpec",
    "SurjectivityVerdict",
    "TwistGen",
    "UniversalityReport",
    "Unsupported",
    "act_on_curve",
    "boundary_permutation_gen",
    "build",
    "class_count",
    "cokernel_invariants",
    "destabilize",
    "enumerate_classes",
    "evaluate",
    "global_conjugate",
    "hurwitz_move",
    "identity_plan",
    "is_essential",
    "mcg_surjectivity_oracle",
    "nonseparating_curve",
    "p_g",
    "pairing",
    "pairing_matrix",
    "perm_group_surjective",
    "pullback",
    "reduce",
    "separating_curve",
    "smith_normal_form",
    "stabilize",
    "substitution_witness",
    "total_space_invariants",
    "twist_catalog",
    "twist_matrix",
    "twist_product",
    "twist_word",
    "u_10",
    "u_11",
    "u_g1",
    "universality_report",
]
