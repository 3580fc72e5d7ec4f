"""Shared test data and independent oracles.

The oracles here deliberately avoid the library's own code paths: membership
is enumerated from divisibility alone, colon steps are recomputed with plain
set arithmetic on supports, and K-polynomials come from inclusion-exclusion
over generator subsets.
"""

from __future__ import annotations

from collections import Counter
from functools import reduce
from itertools import combinations, permutations, product

from coverideals import KPrimeSpec, LoopGraph, Monomial, MonomialIdeal

# ---------------------------------------------------------------------------
# construction shorthands

def mono(indices, n):
    return Monomial.from_indices(indices, n)


def ideal_of(n, *index_lists):
    return MonomialIdeal(n, [mono(ix, n) for ix in index_lists])


# ---------------------------------------------------------------------------
# golden inputs (block specs and generator lists used across the suite)

THREE_CENTER_ALPHAS = (4, 8, 11)
THREE_CENTER_LOOPS = (2, 5, 7, 11)
THREE_CENTER_GENS = (
    (2, 4, 5, 6, 7, 11),
    (2, 4, 5, 7, 8, 11),
    (1, 2, 3, 5, 7, 8, 11),
)

FIVE_CENTER_ALPHAS = (3, 6, 8, 9, 12)
FIVE_CENTER_LOOPS = (5, 8, 12)
FIVE_CENTER_GENS = (
    (3, 5, 6, 8, 12),
    (3, 4, 5, 8, 9, 12),
    (1, 2, 5, 6, 8, 9, 12),
)

SATURATED_LOOPS = (2, 3, 4, 5, 8, 9, 10, 12)
SATURATED_GEN = (2, 3, 4, 5, 8, 9, 10, 12)
SATURATION_WITNESS = (3, 4, 5, 8, 9, 12)
BASE_COVER_GENS = (
    (1, 2, 6, 8, 9, 12),
    (3, 4, 5, 8, 9, 12),
    (3, 6, 7, 9, 12),
    (3, 6, 8, 9, 10, 11),
    (3, 6, 8, 12),
)

CITY_N = 33
CITY_GENS = (
    (1, 2, 3, 7, 9, 10, 12, 14, 15, 16, 17, 19, 20, 23, 25, 26, 27, 28, 29, 30, 32, 33),
    (2, 3, 4, 7, 9, 10, 11, 12, 13, 15, 16, 17, 19, 20, 23, 25, 26, 27, 28, 29, 30, 32, 33),
    (2, 3, 4, 7, 9, 10, 12, 14, 15, 16, 17, 18, 20, 21, 22, 25, 26, 27, 28, 29, 30, 32, 33),
    (2, 3, 4, 7, 9, 10, 12, 14, 15, 16, 17, 18, 20, 23, 25, 26, 27, 28, 29, 30, 32, 33),
    (2, 3, 4, 7, 9, 10, 12, 14, 15, 16, 17, 19, 20, 21, 22, 25, 26, 27, 28, 29, 30, 32, 33),
    (2, 3, 4, 7, 9, 10, 12, 14, 15, 16, 17, 19, 20, 23, 25, 26, 27, 28, 29, 32, 33),
)
CITY_OPTIMUM = (2, 3, 4, 7, 9, 10, 12, 14, 15, 16, 17, 19, 20, 23, 25, 26, 27, 28, 29, 32, 33)


def three_center_spec():
    return KPrimeSpec(THREE_CENTER_ALPHAS, THREE_CENTER_LOOPS)


def five_center_spec(loops=FIVE_CENTER_LOOPS):
    return KPrimeSpec(FIVE_CENTER_ALPHAS, loops)


def city_ideal():
    return ideal_of(CITY_N, *CITY_GENS)


# ---------------------------------------------------------------------------
# enumeration oracles

def all_monomials(n, max_degree):
    """Every monomial in n variables of degree at most max_degree."""
    for exps in product(range(max_degree + 1), repeat=n):
        if sum(exps) <= max_degree:
            yield Monomial(exps)


def members_up_to(ideal, max_degree):
    """Bounded-degree membership set, straight from divisibility."""
    return {
        m for m in all_monomials(ideal.n, max_degree)
        if any(g.divides(m) for g in ideal.gens)
    }


def brute_minimal_covers(n, edges, loops=()):
    """Inclusion-minimal vertex sets containing all loops and meeting all
    edges, by checking every subset of 1..n independently of the library."""
    loops = set(loops)
    qualifying = []
    for r in range(n + 1):
        for combo in combinations(range(1, n + 1), r):
            s = set(combo)
            if not loops <= s:
                continue
            if all(i in s or j in s for i, j in edges):
                qualifying.append(frozenset(s))
    return sorted(
        (s for s in qualifying if not any(t < s for t in qualifying)),
        key=lambda s: (len(s), tuple(sorted(s))),
    )


# ---------------------------------------------------------------------------
# linear-quotient oracle on supports (squarefree ideals only)

def _minimal_sets(sets):
    uniq = set(map(frozenset, sets))
    return {s for s in uniq if not any(t < s for t in uniq)}


def exhaustive_linear_qs(ideal):
    """q of every linear order, found by scanning all generator permutations.

    Colon steps are recomputed as support differences, so this path shares
    nothing with the library's colon implementation.
    """
    assert ideal.is_squarefree
    supports = [frozenset(g.support) for g in ideal.gens]
    qs = []
    for perm in permutations(range(len(supports))):
        q = 0
        for j in range(1, len(perm)):
            step = _minimal_sets(
                supports[perm[l]] - supports[perm[j]] for l in range(j)
            )
            if any(len(s) != 1 for s in step):
                q = None
                break
            q = max(q, len(step))
        if q is not None:
            qs.append(q)
    return qs


# ---------------------------------------------------------------------------
# K-polynomial oracles (numerator of the Hilbert series of R/I)

def kpoly_inclusion_exclusion(ideal):
    """Alternating sum over generator subsets of t^(deg lcm), as a Counter."""
    coeffs = Counter({0: 1})
    gens = ideal.gens
    for r in range(1, len(gens) + 1):
        for subset in combinations(gens, r):
            deg = reduce(Monomial.lcm, subset).degree
            coeffs[deg] += (-1) ** r
    return +Counter({d: c for d, c in coeffs.items() if c})


def kpoly_from_shifts(shifts):
    """The same polynomial read off a resolution's graded shifts."""
    coeffs = Counter({0: 1})
    for i, level in enumerate(shifts.levels):
        for s in level:
            coeffs[s] += (-1) ** (i + 1)
    return +Counter({d: c for d, c in coeffs.items() if c})


# ---------------------------------------------------------------------------
# random instances (plain seeded RNG so counts and runtime stay fixed)

def random_loop_graph(rng, n_lo=1, n_hi=10, edge_p=0.35, loop_p=0.25):
    n = rng.randint(n_lo, n_hi)
    edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < edge_p]
    loops = [v for v in range(1, n + 1) if rng.random() < loop_p]
    return LoopGraph(n, edges, loops)


def random_kprime(
    rng,
    n_lo=4,
    n_hi=12,
    loop_p=0.3,
    require_loop=False,
    allow_center_loops=True,
):
    n = rng.randint(n_lo, n_hi)
    m = rng.randint(2, min(n, 8))
    alphas = sorted(rng.sample(range(1, n), m - 1)) + [n]
    eligible = [
        v for v in range(1, n + 1) if allow_center_loops or v not in set(alphas)
    ]
    loops = [v for v in eligible if rng.random() < loop_p]
    if require_loop and not loops and eligible:
        loops = [rng.choice(eligible)]
    return KPrimeSpec(alphas, loops)
