"""Ideals of vertex covers for edge ideals of graphs with loops.

Core objects: exact monomial/ideal arithmetic, loop graphs and their
complete-core-plus-stars block specs, three independent routes to the ideal
of vertex covers, linear-quotient analysis with resolution shifts, graded
invariants with Cohen-Macaulay verdicts, and minimum-patrol cover selection.
"""

from .covers import (
    BRUTE_FORCE_LIMIT,
    Cover,
    PatrolSolution,
    cover_ideal_by_intersection,
    cover_ideal_from_covers,
    kprime_candidate_covers,
    kprime_cover_ideal,
    min_patrols,
    minimal_covers_bruteforce,
)
from .errors import (
    CoverIdealsError,
    DimensionMismatchError,
    InconclusiveError,
    NoLinearQuotientsError,
    OracleDisagreementError,
    SizeGuardError,
    ValidationError,
)
from .graphs import KPrimeSpec, LoopGraph, edge_ideal, expand_kprime
from .invariants import (
    HITTING_SET_LIMIT,
    CmSaturationVerdict,
    InvariantReport,
    cm_by_loop_saturation,
    h_of,
    invariants,
    is_cohen_macaulay,
    reg_bounds_kprime,
)
from .monomials import Monomial, MonomialIdeal, colon, divides, intersect, minimalize
from .quotients import (
    BACKTRACK_GENERATOR_LIMIT,
    QuotientCertificate,
    ResolutionShifts,
    canonical_order,
    check_linear_quotients,
    find_linear_order,
    q_of,
    resolution_shifts,
)

__version__ = "0.1.0"

__all__ = [
    "BACKTRACK_GENERATOR_LIMIT",
    "BRUTE_FORCE_LIMIT",
    "HITTING_SET_LIMIT",
    "CmSaturationVerdict",
    "Cover",
    "CoverIdealsError",
    "DimensionMismatchError",
    "InconclusiveError",
    "InvariantReport",
    "KPrimeSpec",
    "LoopGraph",
    "Monomial",
    "MonomialIdeal",
    "NoLinearQuotientsError",
    "OracleDisagreementError",
    "PatrolSolution",
    "QuotientCertificate",
    "ResolutionShifts",
    "SizeGuardError",
    "ValidationError",
    "canonical_order",
    "check_linear_quotients",
    "cm_by_loop_saturation",
    "colon",
    "cover_ideal_by_intersection",
    "cover_ideal_from_covers",
    "divides",
    "edge_ideal",
    "expand_kprime",
    "find_linear_order",
    "h_of",
    "intersect",
    "invariants",
    "is_cohen_macaulay",
    "kprime_candidate_covers",
    "kprime_cover_ideal",
    "min_patrols",
    "minimal_covers_bruteforce",
    "minimalize",
    "q_of",
    "reg_bounds_kprime",
    "resolution_shifts",
]
