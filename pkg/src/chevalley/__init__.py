"""Exact-arithmetic Chevalley-basis structure constants.

Pipeline: build a root system in regular ordering, collect the
special/extraspecial pair dictionary, seed the extraspecial constants,
fill the full antisymmetric constant matrix by the quartet recursion,
extend it to signed pairs, and certify everything against the classical
identities (magnitude p + 1, triple ratios, the quadruple identity and
the full Jacobi identity).
"""

from .constants import (
    ConstantMatrix,
    SignedRoot,
    compute_all_positive,
    n_any,
    n_pos_neg,
    n_positive,
)
from .errors import CartanBracketError, InternalConsistencyError
from .pairs import (
    ExtraspecialAssignment,
    SpecialPair,
    SumDictionary,
    assign_extraspecial_constants,
    build_sum_dictionary,
    extraspecial_constant,
)
from .quartets import (
    Quartet,
    QuartetClass,
    QuartetSummary,
    classify_quartet,
    enumerate_quartets,
    quartet_report,
)
from .roots import (
    Diagram,
    RootSystem,
    bilinear_form,
    build_root_system,
    positive_root_count,
)
from .verify import (
    CheckResult,
    VerificationReport,
    check_antisymmetry,
    check_carter_quadruples,
    check_chevalley_magnitude,
    check_jacobi,
    check_tits_triples,
    cross_check_formulas,
    verify_all,
)

__all__ = [
    "CartanBracketError",
    "CheckResult",
    "ConstantMatrix",
    "Diagram",
    "ExtraspecialAssignment",
    "InternalConsistencyError",
    "Quartet",
    "QuartetClass",
    "QuartetSummary",
    "RootSystem",
    "SignedRoot",
    "SpecialPair",
    "SumDictionary",
    "VerificationReport",
    "assign_extraspecial_constants",
    "bilinear_form",
    "build_root_system",
    "build_sum_dictionary",
    "check_antisymmetry",
    "check_carter_quadruples",
    "check_chevalley_magnitude",
    "check_jacobi",
    "check_tits_triples",
    "classify_quartet",
    "compute_all_positive",
    "cross_check_formulas",
    "enumerate_quartets",
    "extraspecial_constant",
    "n_any",
    "n_pos_neg",
    "n_positive",
    "positive_root_count",
    "quartet_report",
    "verify_all",
]

__version__ = "0.1.0"
