"""Linear-quotient detection, canonical generator orders, and the graded
shifts of the resulting minimal free resolution.

An ideal has linear quotients when its generators can be ordered so that each
prefix colon ideal (u_1..u_{j-1}) : (u_j) is generated by variables. The
canonical order (degree ascending, lexicographic tie-break on index
sequences) is tried first; a pruned backtracking search covers orders the
canonical one misses.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import InconclusiveError, NoLinearQuotientsError, ValidationError
from .monomials import Monomial, MonomialIdeal

__all__ = [
    "BACKTRACK_GENERATOR_LIMIT",
    "QuotientCertificate",
    "ResolutionShifts",
    "canonical_order",
    "check_linear_quotients",
    "find_linear_order",
    "q_of",
    "resolution_shifts",
]

# The structured cover ideals here never exceed m+1 generators; past this the
# permutation search only serves order-independence experiments.
BACKTRACK_GENERATOR_LIMIT = 12


@dataclass(frozen=True)
class QuotientCertificate:
    """One generator ordering with its prefix colon ideals.

    ``steps[j-2]`` is (u_1..u_{j-1}) : (u_j) for the order u_1, ..., u_t;
    ``q`` is the largest step generator count (0 for at most one generator);
    ``linear`` records whether every step is generated by single variables.
    """

    order: tuple[Monomial, ...]
    steps: tuple[MonomialIdeal, ...]
    q: int
    linear: bool

    def to_json_dict(self) -> dict:
        data = {
            "order": [list(u.index_seq) for u in self.order],
            "q": self.q,
            "linear": self.linear,
        }
        if self.linear:
            data["steps"] = [[g.support[0] for g in s.gens] for s in self.steps]
        else:
            data["steps"] = [[list(g.index_seq) for g in s.gens] for s in self.steps]
        return data


@dataclass(frozen=True)
class ResolutionShifts:
    """Multisets of graded shifts per homological degree, generators first."""

    levels: tuple[tuple[int, ...], ...]

    @property
    def length(self) -> int:
        return len(self.levels)

    def betti(self, i: int) -> int:
        return len(self.levels[i])

    def to_json_dict(self) -> dict:
        return {"shifts": [list(level) for level in self.levels]}


def canonical_order(ideal: MonomialIdeal) -> list[Monomial]:
    """Generators sorted by degree, ties broken by ascending index sequences."""
    if not ideal.is_squarefree:
        raise ValidationError("the canonical ordering is defined for squarefree ideals")
    return sorted(ideal.gens)


def check_linear_quotients(ideal: MonomialIdeal, order) -> QuotientCertificate:
    """Evaluate one ordering: all prefix colon ideals, q, and the linear flag."""
    order = tuple(order)
    if sorted(order) != list(ideal.gens):
        raise ValidationError("order is not a permutation of the minimal generators")
    steps = []
    for j in range(1, len(order)):
        u = order[j]
        steps.append(MonomialIdeal(ideal.n, (v.div_by_gcd(u) for v in order[:j])))
    q = max((len(s.gens) for s in steps), default=0)
    linear = all(g.degree == 1 for s in steps for g in s.gens)
    return QuotientCertificate(order, tuple(steps), q, linear)


def find_linear_order(
    ideal: MonomialIdeal, limit: int = BACKTRACK_GENERATOR_LIMIT
) -> QuotientCertificate | None:
    """A linear-quotient certificate, or None when provably none exists.

    The canonical order is tried first. When it fails, generator orders are
    searched with backtracking, pruning any prefix whose next colon step is
    not variable-generated; feasibility from a prefix depends only on the
    prefix as a set, so exhausted sets are memoized. Candidates are taken in
    canonical rank, which makes the returned order deterministic. Beyond
    ``limit`` generators the search is refused with InconclusiveError, which
    is distinct from a definitive absence.
    """
    t = len(ideal.gens)
    if t <= 1:
        return QuotientCertificate(ideal.gens, (), 0, True)
    if ideal.is_squarefree:
        cert = check_linear_quotients(ideal, canonical_order(ideal))
        if cert.linear:
            return cert
    if t > limit:
        raise InconclusiveError(
            f"{t} generators exceed the search limit {limit}; linear quotients undecided"
        )
    gens = list(ideal.gens)
    chosen: list[Monomial] = []
    dead: set[frozenset[Monomial]] = set()

    def step_is_linear(u: Monomial) -> bool:
        step = MonomialIdeal(ideal.n, (v.div_by_gcd(u) for v in chosen))
        return all(g.degree == 1 for g in step.gens)

    def search() -> bool:
        if len(chosen) == t:
            return True
        key = frozenset(chosen)
        if key in dead:
            return False
        for u in gens:
            if u in chosen:
                continue
            if chosen and not step_is_linear(u):
                continue
            chosen.append(u)
            if search():
                return True
            chosen.pop()
        dead.add(key)
        return False

    if search():
        return check_linear_quotients(ideal, chosen)
    return None


def q_of(ideal: MonomialIdeal) -> int:
    """Largest colon-step size over a linear order; order-independent."""
    cert = find_linear_order(ideal)
    if cert is None:
        raise NoLinearQuotientsError("q(I) is undefined: no linear-quotient order exists")
    return cert.q


def resolution_shifts(
    cert: QuotientCertificate, ideal: MonomialIdeal | None = None
) -> ResolutionShifts:
    """Graded shifts of the minimal free resolution built by iterated mapping
    cones over a linear order: a generator of degree d whose colon step has
    r variables contributes C(r, i) copies of shift d + i in homological
    degree i, for 0 <= i <= r."""
    if not cert.linear:
        raise ValidationError("resolution shifts require a linear-quotient certificate")
    if ideal is not None and sorted(cert.order) != list(ideal.gens):
        raise ValidationError("certificate does not belong to this ideal")
    if not cert.order:
        return ResolutionShifts(())
    ranks = [0] + [len(s.gens) for s in cert.steps]
    levels: list[list[int]] = [[] for _ in range(max(ranks) + 1)]
    for u, r in zip(cert.order, ranks):
        for i in range(r + 1):
            levels[i].extend([u.degree + i] * comb(r, i))
    return ResolutionShifts(tuple(tuple(sorted(level)) for level in levels))
