"""Graphs with loops, their edge ideals, and the complete-core-plus-stars family."""

from __future__ import annotations

from collections.abc import Iterable
from itertools import combinations

from .errors import ValidationError
from .monomials import Monomial, MonomialIdeal

__all__ = ["LoopGraph", "KPrimeSpec", "expand_kprime", "edge_ideal"]


class LoopGraph:
    """An undirected graph on vertices 1..n with an optional loop at any vertex.

    Edges are unordered pairs of distinct vertices; loops are listed apart.
    Values are immutable, with edges and loops stored sorted and deduplicated.
    """

    __slots__ = ("n", "edges", "loops")

    def __init__(self, n: int, edges: Iterable = (), loops: Iterable[int] = ()):
        n = int(n)
        if n < 1:
            raise ValidationError("vertex count must be positive")
        es = set()
        for e in edges:
            pair = tuple(int(v) for v in e)
            if len(pair) != 2:
                raise ValidationError(f"edge {pair} is not a pair of vertices")
            i, j = pair
            if i == j:
                raise ValidationError(f"edge {{{i},{j}}} is a loop; loops are listed separately")
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValidationError(f"edge {{{i},{j}}} leaves the vertex range 1..{n}")
            es.add((min(i, j), max(i, j)))
        ls = set()
        for k in loops:
            k = int(k)
            if not 1 <= k <= n:
                raise ValidationError(f"loop at {k} leaves the vertex range 1..{n}")
            ls.add(k)
        self.n = n
        self.edges = tuple(sorted(es))
        self.loops = tuple(sorted(ls))

    def to_json_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges], "loops": list(self.loops)}

    @classmethod
    def from_json_dict(cls, data: dict) -> LoopGraph:
        if not isinstance(data, dict) or "n" not in data:
            raise ValidationError('graph JSON needs the key "n"')
        return cls(int(data["n"]), data.get("edges", ()), data.get("loops", ()))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LoopGraph)
            and (self.n, self.edges, self.loops) == (other.n, other.edges, other.loops)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges, self.loops))

    def __repr__(self) -> str:
        return f"LoopGraph(n={self.n}, edges={list(self.edges)}, loops={list(self.loops)})"


class KPrimeSpec:
    """Block description of a complete core with a star hung on each core vertex.

    ``alphas`` lists the core ("center") vertices in increasing order, the last
    one equal to the total vertex count n. Block i is the vertex interval
    (alpha_{i-1}, alpha_i], so every non-center vertex is a leaf of the star
    whose center is its block's alpha; a block of size one is a bare center.
    Loops may sit on any vertex.
    """

    __slots__ = ("alphas", "loops")

    def __init__(self, alphas: Iterable[int], loops: Iterable[int] = ()):
        al = tuple(int(a) for a in alphas)
        if len(al) < 2:
            raise ValidationError("at least two centers are required (m >= 2)")
        if al[0] < 1:
            raise ValidationError("centers must be positive vertex indices")
        if any(b <= a for a, b in zip(al, al[1:])):
            raise ValidationError(f"centers must be strictly increasing, got {al}")
        n = al[-1]
        ls = set()
        for k in loops:
            k = int(k)
            if not 1 <= k <= n:
                raise ValidationError(f"loop at {k} leaves the vertex range 1..{n}")
            ls.add(k)
        self.alphas = al
        self.loops = tuple(sorted(ls))

    @property
    def n(self) -> int:
        return self.alphas[-1]

    @property
    def m(self) -> int:
        return len(self.alphas)

    def blocks(self) -> list[tuple[int, tuple[int, ...]]]:
        """(center, block vertices) per block; the center is the block maximum."""
        out = []
        prev = 0
        for a in self.alphas:
            out.append((a, tuple(range(prev + 1, a + 1))))
            prev = a
        return out

    @property
    def sigma(self) -> int:
        """Largest block size (vertices of the biggest star, center included)."""
        return max(a - prev for prev, a in zip((0,) + self.alphas, self.alphas))

    @property
    def looped_centers(self) -> tuple[int, ...]:
        loopset = set(self.loops)
        return tuple(a for a in self.alphas if a in loopset)

    def to_json_dict(self) -> dict:
        return {"alphas": list(self.alphas), "loops": list(self.loops)}

    @classmethod
    def from_json_dict(cls, data: dict) -> KPrimeSpec:
        if not isinstance(data, dict) or "alphas" not in data:
            raise ValidationError('block-spec JSON needs the key "alphas"')
        return cls(data["alphas"], data.get("loops", ()))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, KPrimeSpec)
            and (self.alphas, self.loops) == (other.alphas, other.loops)
        )

    def __hash__(self) -> int:
        return hash((self.alphas, self.loops))

    def __repr__(self) -> str:
        return f"KPrimeSpec(alphas={list(self.alphas)}, loops={list(self.loops)})"


def expand_kprime(spec: KPrimeSpec) -> LoopGraph:
    """Materialize the block spec: a complete graph on the centers plus one
    star edge per non-center vertex to its block's center, loops verbatim."""
    edges = list(combinations(spec.alphas, 2))
    for center, members in spec.blocks():
        edges.extend((v, center) for v in members if v != center)
    return LoopGraph(spec.n, edges, spec.loops)


def edge_ideal(g: LoopGraph) -> MonomialIdeal:
    """The edge ideal: X_i*X_j per edge and X_k^2 per loop."""
    gens = [Monomial.from_indices(e, g.n) for e in g.edges]
    gens.extend(Monomial.from_indices((k, k), g.n) for k in g.loops)
    return MonomialIdeal(g.n, gens)
