"""Graded invariants of R/I for cover ideals: h, projective dimension, depth,
Krull dimension, regularity, and Cohen-Macaulay verdicts.

Depth is always derived as n - pd (Auslander-Buchsbaum); dim as n - h(I).
pd comes from q + 1 on the linear-quotients route and is 1 for principal
ideals; without either route only dim and regularity bounds are reported and
the Cohen-Macaulay verdict stays inconclusive rather than guessed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .covers import kprime_cover_ideal
from .errors import InconclusiveError, SizeGuardError, ValidationError
from .graphs import KPrimeSpec
from .monomials import Monomial, MonomialIdeal
from .quotients import find_linear_order

__all__ = [
    "HITTING_SET_LIMIT",
    "InvariantReport",
    "CmSaturationVerdict",
    "h_of",
    "invariants",
    "is_cohen_macaulay",
    "cm_by_loop_saturation",
    "reg_bounds_kprime",
]

HITTING_SET_LIMIT = 25


@dataclass(frozen=True)
class InvariantReport:
    """Invariants of R/I with the route that determined them.

    ``reg`` is exact where the route pins it (max generator degree - 1);
    ``reg_bounds`` carries the interval known independently of that value.
    ``cm`` is None when depth could not be determined.
    """

    n: int
    h: int
    dim: int
    route: str  # "principal" | "linear-quotients" | "bounds-only"
    q: int | None = None
    pd: int | None = None
    depth: int | None = None
    reg: int | None = None
    reg_bounds: tuple[int, int] | None = None
    cm: bool | None = None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "h": self.h,
            "dim": self.dim,
            "route": self.route,
            "q": self.q,
            "pd": self.pd,
            "depth": self.depth,
            "reg": self.reg,
            "reg_bounds": list(self.reg_bounds) if self.reg_bounds else None,
            "cm": self.cm,
        }


@dataclass(frozen=True)
class CmSaturationVerdict:
    """Whether the loop set swallows some generator of the base cover ideal."""

    satisfied: bool
    witness: Monomial | None

    def to_json_dict(self) -> dict:
        return {
            "satisfied": self.satisfied,
            "witness": list(self.witness.index_seq) if self.witness else None,
        }


def h_of(ideal: MonomialIdeal, limit: int = HITTING_SET_LIMIT) -> int:
    """Minimum size of a variable set meeting every minimal generator."""
    if ideal.is_zero:
        raise ValidationError("the zero ideal has no vertex covers")
    supports = [set(g.support) for g in ideal.gens]
    if any(not s for s in supports):
        raise ValidationError("the unit ideal has no vertex cover")
    if set.intersection(*supports):
        return 1
    if ideal.n > limit:
        raise SizeGuardError(
            f"hitting-set search refused for n={ideal.n} > {limit} without a shared variable"
        )
    universe = sorted(set().union(*supports))
    for k in range(2, len(universe) + 1):
        for combo in combinations(universe, k):
            chosen = set(combo)
            if all(s & chosen for s in supports):
                return k
    raise AssertionError("the union of all supports always hits every generator")


def _context_reg_bounds(context: KPrimeSpec | None) -> tuple[int, int] | None:
    if context is None:
        return None
    return ((context.m - 1) + (context.sigma - 2), context.n - 2)


def invariants(ideal: MonomialIdeal, context: KPrimeSpec | None = None) -> InvariantReport:
    """Full invariant report for R/I, routed by the ideal's structure.

    A principal ideal resolves in one step (pd 1, reg exact). With two or
    more generators a linear-quotient certificate gives pd = q + 1 and reg
    exact; otherwise only dim is exact, with regularity bounds from the
    block-spec context when one is supplied.
    """
    if ideal.is_zero:
        raise ValidationError("invariants are undefined for the zero ideal")
    n = ideal.n
    h = h_of(ideal)
    dim = n - h
    maxdeg = ideal.max_degree
    if ideal.is_principal:
        depth = n - 1
        return InvariantReport(
            n=n, h=h, dim=dim, route="principal",
            q=0, pd=1, depth=depth, reg=maxdeg - 1, reg_bounds=(0, n - 1),
            cm=depth == dim,
        )
    try:
        cert = find_linear_order(ideal)
    except InconclusiveError:
        cert = None
    if cert is not None and cert.linear:
        pd = cert.q + 1
        depth = n - pd
        return InvariantReport(
            n=n, h=h, dim=dim, route="linear-quotients",
            q=cert.q, pd=pd, depth=depth, reg=maxdeg - 1,
            reg_bounds=_context_reg_bounds(context),
            cm=depth == dim,
        )
    return InvariantReport(
        n=n, h=h, dim=dim, route="bounds-only",
        reg_bounds=_context_reg_bounds(context),
    )


def is_cohen_macaulay(ideal: MonomialIdeal) -> bool:
    """depth(R/I) == dim(R/I), when a route determines depth."""
    report = invariants(ideal)
    if report.cm is None:
        raise InconclusiveError("depth is undetermined on the bounds-only route")
    return report.cm


def cm_by_loop_saturation(base_cover_ideal: MonomialIdeal, loops) -> CmSaturationVerdict:
    """Check whether the loop set contains the support of some generator of
    the loopless base graph's cover ideal. When it does, the loop vertices
    alone form the unique minimal cover of the looped graph, so its cover
    ideal is principal and Cohen-Macaulay."""
    loopset = {int(k) for k in loops}
    for g in base_cover_ideal.gens:
        if set(g.support) <= loopset:
            return CmSaturationVerdict(True, g)
    return CmSaturationVerdict(False, None)


def reg_bounds_kprime(spec: KPrimeSpec) -> tuple[int, int]:
    """Regularity interval [(m-1)+(sigma-2), n-2] for a multi-generator
    cover ideal of a block spec, sigma the largest star size."""
    ideal = kprime_cover_ideal(spec)
    if len(ideal.gens) < 2:
        raise ValidationError(
            "regularity bounds apply to cover ideals with at least two generators"
        )
    return _context_reg_bounds(spec)
