"""Core semigroup types.

Numerical semigroups (co-finite submonoids of N) are stored by their unique
minimal generating set together with the Apery set of the multiplicity, which
makes membership O(1) and the Frobenius number and genus immediate.  Affine
semigroups (finitely generated submonoids of N^d) are stored by their
generator list plus a flag recording whether that list is minimal.

All values are immutable after construction and safe to share between tasks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import (
    DimensionMismatch,
    DuplicateGenerator,
    EmptyInput,
    NegativeCoordinate,
    NonCoprimeGenerators,
    NotAMember,
    ZeroGenerator,
    ZeroVectorGenerator,
    check_magnitude,
)

Vector = tuple[int, ...]


def _closure_bits(gens: Sequence[int], limit: int) -> int:
    """Bitmask of the submonoid generated by `gens`, restricted to [0, limit].

    Bit n is set iff n is a nonnegative integer combination of the generators.
    Processing one generator to its fixpoint before the next is enough: the
    partial sums of any combination, taken generator by generator, never
    exceed the total.
    """
    mask = (1 << (limit + 1)) - 1
    bits = 1
    for g in gens:
        if g > limit:
            continue
        while True:
            grown = (bits | (bits << g)) & mask
            if grown == bits:
                break
            bits = grown
    return bits


def _member_of_generated(gens: Sequence[int], n: int) -> bool:
    if n == 0:
        return True
    if not gens:
        return False
    return bool((_closure_bits(gens, n) >> n) & 1)


def _apery_of_multiplicity(gens: Sequence[int], m: int) -> list[int]:
    """Least member of each residue class mod m, by a rising scan.

    The scan limit grows geometrically; gcd(gens) = 1 guarantees every class
    is eventually hit.
    """
    limit = max(4 * max(gens), 2 * m, 8)
    while True:
        bits = _closure_bits(gens, limit)
        raw = bits.to_bytes(limit // 8 + 1, "little")
        apery = [-1] * m
        found = 0
        for n in range(limit + 1):
            if (raw[n >> 3] >> (n & 7)) & 1 and apery[n % m] < 0:
                apery[n % m] = n
                found += 1
                if found == m:
                    return apery
        limit *= 2


@dataclass(frozen=True)
class NumericalInvariants:
    multiplicity: int
    embedding_dimension: int
    frobenius: int
    genus: int


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup held by its minimal generators.

    `frobenius` is the largest integer not in S (-1 when S = N).  The Apery
    cache is filled at construction with the Apery set of the multiplicity;
    no state is mutated afterwards.
    """

    minimal_generators: tuple[int, ...]
    frobenius: int
    apery_cache: Mapping[int, tuple[int, ...]] = field(compare=False, repr=False)

    @property
    def multiplicity(self) -> int:
        return self.minimal_generators[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.minimal_generators)

    def contains(self, n: int) -> bool:
        """n is a member iff it is at least the Apery element of its class."""
        if n < 0:
            return False
        m = self.multiplicity
        return n >= self.apery_cache[m][n % m]

    def apery_set(self, m: int) -> list[int]:
        """The m least members of S, one per residue class mod m (m must be in S)."""
        if m < 1 or not self.contains(m):
            raise NotAMember(f"{m} is not a nonzero element of the semigroup")
        cached = self.apery_cache.get(m)
        if cached is not None:
            return list(cached)
        apery = []
        for i in range(m):
            s = i
            while not self.contains(s):
                s += m
            apery.append(s)
        return apery

    def genus(self) -> int:
        m = self.multiplicity
        return sum((w - i) // m for i, w in enumerate(self.apery_cache[m]))

    def invariants(self) -> NumericalInvariants:
        return NumericalInvariants(
            multiplicity=self.multiplicity,
            embedding_dimension=self.embedding_dimension,
            frobenius=self.frobenius,
            genus=self.genus(),
        )

    def gaps(self) -> list[int]:
        return [n for n in range(self.frobenius + 1) if not self.contains(n)]

    def is_symmetric(self) -> bool:
        """For every gap x, frobenius - x must be a member."""
        f = self.frobenius
        return all(self.contains(f - x) for x in self.gaps())

    def is_med(self) -> bool:
        return self.multiplicity == self.embedding_dimension

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.minimal_generators)) + ">"


def _from_minimal_generators(gens: Sequence[int]) -> NumericalSemigroup:
    """Trusted constructor: `gens` is already the sorted minimal system."""
    gens = tuple(gens)
    m = gens[0]
    apery = _apery_of_multiplicity(gens, m)
    frobenius = max(apery) - m
    return NumericalSemigroup(
        minimal_generators=gens,
        frobenius=frobenius,
        apery_cache=MappingProxyType({m: tuple(apery)}),
    )


def numerical_from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """Build the numerical semigroup generated by `gens`.

    The input is deduplicated, sorted, and reduced to the unique minimal
    generating set (a generator is dropped iff the others generate it).
    """
    gens = list(gens)
    if not gens:
        raise EmptyInput("at least one generator is required")
    for g in gens:
        if g < 1:
            raise ZeroGenerator(f"generator {g} is not a positive integer")
    check_magnitude(*gens)
    uniq = sorted(set(gens))
    if math.gcd(*uniq) != 1:
        raise NonCoprimeGenerators(f"gcd({', '.join(map(str, uniq))}) != 1")
    minimal = []
    for g in uniq:
        others = [h for h in uniq if h != g]
        if not _member_of_generated(others, g):
            minimal.append(g)
    return _from_minimal_generators(minimal)


@dataclass(frozen=True)
class AffineSemigroup:
    """A finitely generated submonoid of N^d, reduced and cancellative.

    `minimal` records whether the generator list is the minimal generating
    set (no generator lies in the submonoid spanned by the others).
    """

    dimension: int
    generators: tuple[Vector, ...]
    minimal: bool

    def contains(self, v: Sequence[int]) -> bool:
        """True iff v is a nonnegative integer combination of the generators.

        Vectors with a negative coordinate are never members; callers doing
        signed tests (d - a and a - d) rely on that.
        """
        if len(v) != self.dimension:
            raise DimensionMismatch(
                f"vector has length {len(v)}, semigroup dimension is {self.dimension}"
            )
        if any(c < 0 for c in v):
            return False
        return _affine_member(self.generators, tuple(v))

    def __str__(self) -> str:
        return "<" + "; ".join(" ".join(map(str, g)) for g in self.generators) + ">"


def _affine_member(atoms: Sequence[Vector], target: Vector) -> bool:
    """Bounded depth-first search, generators in input order, memo on remainders."""
    if not any(target):
        return True
    if not atoms:
        return False
    d = len(target)
    memo: dict[tuple[int, Vector], bool] = {}

    def reach(i: int, rem: Vector) -> bool:
        if not any(rem):
            return True
        if i == len(atoms):
            return False
        key = (i, rem)
        hit = memo.get(key)
        if hit is not None:
            return hit
        a = atoms[i]
        hi = min(rem[j] // a[j] for j in range(d) if a[j])
        ok = False
        for k in range(hi, -1, -1):
            nxt = tuple(rem[j] - k * a[j] for j in range(d)) if k else rem
            if reach(i + 1, nxt):
                ok = True
                break
        memo[key] = ok
        return ok

    return reach(0, target)


def affine_from_generators(dimension: int, gens: Iterable[Sequence[int]]) -> AffineSemigroup:
    """Build an affine semigroup in N^dimension from the given vectors.

    Generators must be distinct nonzero vectors of N^dimension; the minimal
    flag is set by testing each one for membership in the span of the others.
    """
    if dimension < 1:
        raise DimensionMismatch("dimension must be a positive integer")
    rows = [tuple(g) for g in gens]
    if not rows:
        raise EmptyInput("at least one generator is required")
    for g in rows:
        if len(g) != dimension:
            raise DimensionMismatch(f"generator {g} does not have length {dimension}")
        for c in g:
            if c < 0:
                raise NegativeCoordinate(f"generator {g} leaves N^{dimension}")
        if not any(g):
            raise ZeroVectorGenerator("the zero vector cannot be a generator")
        check_magnitude(*g)
    if len(set(rows)) != len(rows):
        raise DuplicateGenerator("generators must be pairwise distinct")
    minimal = True
    for i, g in enumerate(rows):
        others = rows[:i] + rows[i + 1 :]
        if others and _affine_member(others, g):
            minimal = False
            break
    return AffineSemigroup(dimension=dimension, generators=tuple(rows), minimal=minimal)


def as_affine(sg: NumericalSemigroup) -> AffineSemigroup:
    """View a numerical semigroup as dimension-1 affine data."""
    return AffineSemigroup(
        dimension=1,
        generators=tuple((g,) for g in sg.minimal_generators),
        minimal=True,
    )
