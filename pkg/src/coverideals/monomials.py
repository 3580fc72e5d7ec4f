"""Exact arithmetic on monomials and monomial ideals.

Monomials are exponent vectors over a fixed ambient ring K[X1..Xn]; ideals are
held as their unique minimal generating set. Coefficients never appear: edge
ideals and ideals of vertex covers only need divisibility arithmetic, so
everything here is a pure function over immutable values.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable

from .errors import DimensionMismatchError, ValidationError

__all__ = ["Monomial", "MonomialIdeal", "divides", "minimalize", "intersect", "colon"]


class Monomial:
    """A power product X1^e1 * ... * Xn^en stored as its exponent tuple.

    The unit monomial (all exponents zero) is a valid value; a zero monomial
    has no representation. Instances are immutable and hashable.
    """

    __slots__ = ("exponents", "_key")

    def __init__(self, exponents: Iterable[int]):
        exps = tuple(int(e) for e in exponents)
        if not exps:
            raise ValidationError("monomial needs a positive ambient variable count")
        if any(e < 0 for e in exps):
            raise ValidationError(f"monomial exponents must be nonnegative, got {exps}")
        self.exponents = exps
        seq = tuple(i for i, e in enumerate(exps, start=1) for _ in range(e))
        # canonical sort key: degree ascending, then lexicographic index sequence
        self._key = (len(seq), seq)

    @classmethod
    def unit(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def variable(cls, index: int, n: int) -> Monomial:
        if not 1 <= index <= n:
            raise ValidationError(f"variable index {index} outside 1..{n}")
        return cls(tuple(1 if i == index else 0 for i in range(1, n + 1)))

    @classmethod
    def from_indices(cls, indices: Iterable[int], n: int) -> Monomial:
        """Build from 1-based variable indices; a repeated index raises the exponent."""
        counts = Counter(int(i) for i in indices)
        for i in counts:
            if not 1 <= i <= n:
                raise ValidationError(f"variable index {i} outside 1..{n}")
        return cls(tuple(counts.get(i, 0) for i in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return self._key[0]

    @property
    def index_seq(self) -> tuple[int, ...]:
        """Variable indices with multiplicity, ascending (X3^2*X5 -> (3, 3, 5))."""
        return self._key[1]

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents, start=1) if e > 0)

    @property
    def is_unit(self) -> bool:
        return self.degree == 0

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def _check_same_ring(self, other: Monomial) -> None:
        if self.n != other.n:
            raise DimensionMismatchError(
                f"monomials in {self.n} and {other.n} variables cannot be combined"
            )

    def divides(self, other: Monomial) -> bool:
        self._check_same_ring(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def gcd(self, other: Monomial) -> Monomial:
        self._check_same_ring(other)
        return Monomial(min(a, b) for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: Monomial) -> Monomial:
        self._check_same_ring(other)
        return Monomial(max(a, b) for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: Monomial) -> Monomial:
        self._check_same_ring(other)
        return Monomial(a + b for a, b in zip(self.exponents, other.exponents))

    def div_by_gcd(self, other: Monomial) -> Monomial:
        """self / gcd(self, other): the colon reduction of one generator."""
        self._check_same_ring(other)
        return Monomial(max(a - b, 0) for a, b in zip(self.exponents, other.exponents))

    def text(self) -> str:
        """Starred form, e.g. X3*X5^2*X12; the unit monomial prints as 1."""
        if self.is_unit:
            return "1"
        parts = []
        for i, e in enumerate(self.exponents, start=1):
            if e == 1:
                parts.append(f"X{i}")
            elif e >= 2:
                parts.append(f"X{i}^{e}")
        return "*".join(parts)

    def compact(self) -> str:
        """Compressed form without separators, e.g. X3X5X12."""
        return self.text().replace("*", "")

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self) -> int:
        return hash(self.exponents)

    def __lt__(self, other: Monomial) -> bool:
        return self._key < other._key

    def __le__(self, other: Monomial) -> bool:
        return self._key <= other._key

    def __repr__(self) -> str:
        return f"Monomial({self.text()!r}, n={self.n})"


class MonomialIdeal:
    """A monomial ideal held as its unique minimal generating set.

    Construction minimalizes: duplicates and generators divisible by another
    are dropped, and the survivors are stored in canonical order (degree
    ascending, then lexicographic on the index sequence). An empty generating
    set is the zero ideal; the unit monomial generates the whole ring.
    """

    __slots__ = ("n", "gens")

    def __init__(self, n: int, gens: Iterable[Monomial] = ()):
        n = int(n)
        if n < 1:
            raise ValidationError("ambient variable count must be positive")
        pool = []
        for g in gens:
            if g.n != n:
                raise DimensionMismatchError(
                    f"generator in {g.n} variables placed in a {n}-variable ring"
                )
            pool.append(g)
        kept: list[Monomial] = []
        for m in sorted(set(pool)):
            if not any(a.divides(m) for a in kept):
                kept.append(m)
        self.n = n
        self.gens = tuple(kept)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_principal(self) -> bool:
        return len(self.gens) == 1

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.gens)

    @property
    def max_degree(self) -> int:
        if self.is_zero:
            raise ValidationError("the zero ideal has no generator degrees")
        return max(g.degree for g in self.gens)

    def _check_same_ring(self, other: MonomialIdeal) -> None:
        if self.n != other.n:
            raise DimensionMismatchError(
                f"ideals in {self.n} and {other.n} variables cannot be combined"
            )

    def contains(self, m: Monomial) -> bool:
        """Membership test: some minimal generator divides m."""
        if m.n != self.n:
            raise DimensionMismatchError(
                f"monomial in {m.n} variables tested against a {self.n}-variable ideal"
            )
        return any(g.divides(m) for g in self.gens)

    def intersect(self, other: MonomialIdeal) -> MonomialIdeal:
        """Ideal intersection via pairwise lcms of the generators."""
        self._check_same_ring(other)
        pairs = {u.lcm(v) for u in self.gens for v in other.gens}
        return MonomialIdeal(self.n, pairs)

    def colon(self, f: Monomial) -> MonomialIdeal:
        """The colon ideal (self : f), all g with g*f in self."""
        if f.n != self.n:
            raise DimensionMismatchError(
                f"monomial in {f.n} variables cannot divide into a {self.n}-variable ideal"
            )
        return MonomialIdeal(self.n, (u.div_by_gcd(f) for u in self.gens))

    def text(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(g.text() for g in self.gens) + ")"

    def compact(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(g.compact() for g in self.gens) + ")"

    def to_json_dict(self) -> dict:
        return {"n": self.n, "gens": [list(g.index_seq) for g in self.gens]}

    @classmethod
    def from_json_dict(cls, data: dict) -> MonomialIdeal:
        if not isinstance(data, dict) or "n" not in data or "gens" not in data:
            raise ValidationError('ideal JSON needs the keys "n" and "gens"')
        n = int(data["n"])
        gens = [Monomial.from_indices(ix, n) for ix in data["gens"]]
        return cls(n, gens)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonomialIdeal)
            and self.n == other.n
            and self.gens == other.gens
        )

    def __hash__(self) -> int:
        return hash((self.n, self.gens))

    def __repr__(self) -> str:
        return f"MonomialIdeal(n={self.n}, gens={self.text()})"


def divides(a: Monomial, b: Monomial) -> bool:
    return a.divides(b)


def minimalize(monomials: Iterable[Monomial], n: int | None = None) -> MonomialIdeal:
    """Divisibility-minimal elements of a generator set, as an ideal."""
    pool = list(monomials)
    if n is None:
        if not pool:
            raise ValidationError("cannot infer the variable count from an empty set")
        n = pool[0].n
    return MonomialIdeal(n, pool)


def intersect(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    return first.intersect(second)


def colon(ideal: MonomialIdeal, f: Monomial) -> MonomialIdeal:
    return ideal.colon(f)
