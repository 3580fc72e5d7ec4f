"""Minimal vertex covers and the ideal of vertex covers, by three routes.

The routes are deliberately independent so that each can serve as an oracle
for the others: exhaustive subset enumeration, prime-by-prime intersection of
the edge primes (X_i, X_j) and loop primes (X_k), and a closed-form candidate
construction for complete-core-plus-stars graphs that never enumerates
subsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import SizeGuardError, ValidationError
from .graphs import KPrimeSpec, LoopGraph
from .monomials import Monomial, MonomialIdeal

__all__ = [
    "BRUTE_FORCE_LIMIT",
    "Cover",
    "PatrolSolution",
    "minimal_covers_bruteforce",
    "cover_ideal_from_covers",
    "cover_ideal_by_intersection",
    "kprime_candidate_covers",
    "kprime_cover_ideal",
    "min_patrols",
]

# Exactness over scalability: instances beyond this go through the closed form.
BRUTE_FORCE_LIMIT = 25


@dataclass(frozen=True)
class Cover:
    """A vertex set meant to meet every edge and contain every loop vertex."""

    vertices: tuple[int, ...]

    def __init__(self, vertices):
        object.__setattr__(self, "vertices", tuple(sorted({int(v) for v in vertices})))

    @property
    def size(self) -> int:
        return len(self.vertices)

    def covers(self, g: LoopGraph) -> bool:
        s = set(self.vertices)
        if not set(g.loops) <= s:
            return False
        return all(i in s or j in s for i, j in g.edges)

    def is_minimal(self, g: LoopGraph) -> bool:
        """True iff this covers g and no loop-respecting proper subset does."""
        if not self.covers(g):
            return False
        loops = set(g.loops)
        s = set(self.vertices)
        for v in self.vertices:
            if v in loops:
                continue
            t = s - {v}
            if all(i in t or j in t for i, j in g.edges):
                return False
        return True

    def monomial(self, n: int) -> Monomial:
        return Monomial.from_indices(self.vertices, n)


@dataclass(frozen=True)
class PatrolSolution:
    """All minimum-cardinality minimal covers, i.e. the optimal patrol layouts."""

    covering_number: int
    optimal_covers: tuple[Cover, ...]

    def to_json_dict(self) -> dict:
        return {
            "covering_number": self.covering_number,
            "optimal_covers": [list(c.vertices) for c in self.optimal_covers],
        }


def minimal_covers_bruteforce(g: LoopGraph, limit: int = BRUTE_FORCE_LIMIT) -> list[Cover]:
    """Every minimal vertex cover, by subset enumeration in ascending size.

    Loop vertices are mandatory, so only vertices incident to an edge not
    already covered by a loop are enumerated. A candidate is minimal exactly
    when no previously accepted (hence smaller) cover is contained in it.
    """
    if g.n > limit:
        raise SizeGuardError(
            f"brute force refused for n={g.n} > {limit}; use the structured closed form"
        )
    loops = set(g.loops)
    open_edges = [e for e in g.edges if e[0] not in loops and e[1] not in loops]
    free = sorted({v for e in open_edges for v in e})
    accepted: list[frozenset[int]] = []
    out: list[Cover] = []
    for k in range(len(free) + 1):
        for combo in combinations(free, k):
            extra = set(combo)
            if not all(i in extra or j in extra for i, j in open_edges):
                continue
            if any(a <= extra for a in accepted):
                continue
            accepted.append(frozenset(extra))
            out.append(Cover(loops | extra))
    return sorted(out, key=lambda c: (c.size, c.vertices))


def cover_ideal_from_covers(covers, n: int) -> MonomialIdeal:
    """Transcribe covers to squarefree generators (one product per cover)."""
    return MonomialIdeal(n, (c.monomial(n) for c in covers))


def cover_ideal_by_intersection(g: LoopGraph, limit: int = BRUTE_FORCE_LIMIT) -> MonomialIdeal:
    """The ideal of vertex covers as the intersection of one prime per edge
    and one principal ideal per loop, minimalizing after every step."""
    if g.n > limit:
        raise SizeGuardError(
            f"prime intersection refused for n={g.n} > {limit}; use the structured closed form"
        )
    result = MonomialIdeal(g.n, [Monomial.unit(g.n)])
    for k in g.loops:
        result = result.intersect(MonomialIdeal(g.n, [Monomial.variable(k, g.n)]))
    for i, j in g.edges:
        prime = MonomialIdeal(g.n, [Monomial.variable(i, g.n), Monomial.variable(j, g.n)])
        result = result.intersect(prime)
    return result


def kprime_candidate_covers(spec: KPrimeSpec) -> list[Cover]:
    """Candidate minimal covers of a complete-core-plus-stars graph.

    The core forces all centers but one into any cover, and a skipped center
    forces its whole block in. That leaves exactly these candidates:

    * all centers, plus every looped leaf;
    * per unlooped center a, all other centers, all of a's block except a,
      and the looped leaves of the other blocks.

    Divisible candidates (an all-centers set swallowing an omit-one set)
    are discarded downstream by ideal minimalization.
    """
    centers = set(spec.alphas)
    loops = set(spec.loops)
    looped_leaves = loops - centers
    cands = [Cover(centers | looped_leaves)]
    for center, members in spec.blocks():
        if center in loops:
            continue
        block = set(members)
        body = (centers - {center}) | (block - {center}) | (looped_leaves - block)
        cands.append(Cover(body))
    return cands


def kprime_cover_ideal(spec: KPrimeSpec) -> MonomialIdeal:
    """Closed-form ideal of vertex covers for a block spec; no enumeration."""
    n = spec.n
    return MonomialIdeal(n, (c.monomial(n) for c in kprime_candidate_covers(spec)))


def min_patrols(source) -> PatrolSolution:
    """Minimum-size minimal covers: the supports of the lowest-degree
    generators of the ideal of vertex covers.

    Accepts a LoopGraph, a KPrimeSpec, or a squarefree MonomialIdeal that
    already is an ideal of vertex covers. A graph with nothing to cover
    yields covering number 0 with the empty cover.
    """
    if isinstance(source, KPrimeSpec):
        ideal = kprime_cover_ideal(source)
    elif isinstance(source, LoopGraph):
        ideal = cover_ideal_by_intersection(source)
    elif isinstance(source, MonomialIdeal):
        ideal = source
    else:
        raise ValidationError(f"cannot compute patrols for {type(source).__name__}")
    if ideal.is_zero:
        raise ValidationError("the zero ideal covers nothing")
    if not ideal.is_squarefree:
        raise ValidationError("patrol selection needs a squarefree (vertex-cover) ideal")
    best = min(g.degree for g in ideal.gens)
    covers = sorted(
        (Cover(g.support) for g in ideal.gens if g.degree == best),
        key=lambda c: c.vertices,
    )
    return PatrolSolution(best, tuple(covers))
