"""Fibers of the factorization homomorphism and their R-class partitions.

A factorization of an element a over atoms (a_1, ..., a_r) is an exponent
vector u in N^r with sum(u_i * a_i) = a.  The complete fiber is finite
because the monoids in scope are reduced; enumeration is a bounded
depth-first search over generator indices in input order (the numerical case
is the d = 1 specialization).

Two factorizations are R-related when a chain connects them in which
consecutive exponent vectors have nonzero dot product, i.e. share support.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .errors import (
    DimensionMismatch,
    EmptyInput,
    NegativeCoordinate,
    ZeroGenerator,
    ZeroVectorGenerator,
    check_magnitude,
)
from .semigroups import Vector

Factorization = tuple[int, ...]
Element = Union[int, Vector]


class UnionFind:
    """Array union-find with path compression; tracks component count."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.count = size

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while i != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        self.count -= 1
        return True


def support_mask(u: Factorization) -> int:
    """Bitmask of the indices where u is nonzero; masks intersect iff u.v != 0."""
    mask = 0
    for i, c in enumerate(u):
        if c:
            mask |= 1 << i
    return mask


def _int_fiber(atoms: Sequence[int], target: int) -> list[Factorization]:
    """All exponent vectors over integer atoms, lexicographically descending."""
    r = len(atoms)
    out: list[Factorization] = []

    def walk(i: int, rem: int, prefix: tuple[int, ...]) -> None:
        if i == r - 1:
            q, leftover = divmod(rem, atoms[i])
            if leftover == 0:
                out.append(prefix + (q,))
            return
        a = atoms[i]
        for k in range(rem // a, -1, -1):
            walk(i + 1, rem - k * a, prefix + (k,))

    walk(0, target, ())
    return out


def _vector_fiber(atoms: Sequence[Vector], target: Vector) -> list[Factorization]:
    """All exponent vectors over vector atoms, lexicographically descending."""
    r = len(atoms)
    d = len(target)
    out: list[Factorization] = []

    def walk(i: int, rem: Vector, prefix: tuple[int, ...]) -> None:
        if i == r:
            if not any(rem):
                out.append(prefix)
            return
        a = atoms[i]
        hi = min(rem[j] // a[j] for j in range(d) if a[j])
        for k in range(hi, -1, -1):
            nxt = tuple(rem[j] - k * a[j] for j in range(d)) if k else rem
            walk(i + 1, nxt, prefix + (k,))

    walk(0, target, ())
    return out


def _validate_atoms(atoms: Sequence[Element]) -> bool:
    """Check the atom list; returns True when atoms are vectors."""
    if not atoms:
        raise EmptyInput("at least one atom is required")
    vectorial = not isinstance(atoms[0], int)
    for a in atoms:
        if vectorial != (not isinstance(a, int)):
            raise DimensionMismatch("atoms mix integers and vectors")
        if vectorial:
            if len(a) != len(atoms[0]):
                raise DimensionMismatch("atom vectors have differing lengths")
            if any(c < 0 for c in a):
                raise NegativeCoordinate(f"atom {a} leaves N^d")
            if not any(a):
                raise ZeroVectorGenerator("the zero vector cannot be an atom")
            check_magnitude(*a)
        else:
            if a < 1:
                raise ZeroGenerator(f"atom {a} is not a positive integer")
            check_magnitude(a)
    return vectorial


@dataclass(frozen=True)
class FactorizationSet:
    """The complete fiber of one element, sorted lexicographically descending."""

    element: Element
    atoms: tuple[Element, ...]
    factorizations: tuple[Factorization, ...]

    def __post_init__(self):
        vectorial = not isinstance(self.element, int)
        for u in self.factorizations:
            if len(u) != len(self.atoms):
                raise DimensionMismatch("exponent vector length != number of atoms")
            if vectorial:
                d = len(self.element)
                image = tuple(
                    sum(u[i] * self.atoms[i][j] for i in range(len(u))) for j in range(d)
                )
            else:
                image = sum(c * a for c, a in zip(u, self.atoms))
            if image != self.element:
                raise ValueError(f"{u} is not a factorization of {self.element}")
        if list(self.factorizations) != sorted(set(self.factorizations), reverse=True):
            raise ValueError("factorizations must be distinct and sorted descending")

    def __len__(self) -> int:
        return len(self.factorizations)

    def __iter__(self) -> Iterator[Factorization]:
        return iter(self.factorizations)


def enumerate_factorizations(
    atoms: Sequence[Element], target: Element
) -> FactorizationSet:
    """Enumerate the full fiber of `target` over `atoms`.

    Atoms are positive integers or nonzero vectors of N^d; the target must be
    of the same kind and nonnegative.  The result lists every solution of
    sum(u_i * atoms_i) = target exactly once, in descending lexicographic
    order.
    """
    vectorial = _validate_atoms(atoms)
    if vectorial:
        target = tuple(target)
        if len(target) != len(atoms[0]):
            raise DimensionMismatch("target length differs from atom dimension")
        if any(c < 0 for c in target):
            raise NegativeCoordinate(f"target {target} leaves N^d")
        check_magnitude(*target)
        fiber = _vector_fiber(atoms, target)
    else:
        if target < 0:
            raise NegativeCoordinate(f"target {target} is negative")
        check_magnitude(target)
        fiber = _int_fiber(atoms, target)
    return FactorizationSet(
        element=target, atoms=tuple(atoms), factorizations=tuple(fiber)
    )


def count_factorizations(atoms: Sequence[Element], target: Element) -> int:
    """Cardinality of the fiber of `target` over `atoms`."""
    return len(enumerate_factorizations(atoms, target))


@dataclass(frozen=True)
class RClassPartition:
    """Connected components of a fiber under "supports intersect".

    Classes are ordered by their lexicographically largest member, descending,
    and each carries a spanning tree of support-sharing pairs as connectivity
    witness.
    """

    classes: tuple[tuple[Factorization, ...], ...]
    spanning_edges: tuple[tuple[tuple[Factorization, Factorization], ...], ...]

    def __len__(self) -> int:
        return len(self.classes)


def _component_labels(masks: Sequence[int]) -> tuple[UnionFind, list[tuple[int, int]]]:
    """Union-find over support masks; returns the structure and merge edges."""
    uf = UnionFind(len(masks))
    edges = []
    for i in range(len(masks)):
        mi = masks[i]
        for j in range(i + 1, len(masks)):
            if mi & masks[j] and uf.union(i, j):
                edges.append((i, j))
    return uf, edges


def r_class_count(fiber: Sequence[Factorization]) -> int:
    """Number of R-classes of a fiber, without materializing the partition."""
    uf, _ = _component_labels([support_mask(u) for u in fiber])
    return uf.count


def r_classes(fs: FactorizationSet) -> RClassPartition:
    """Partition a fiber into its R-classes."""
    fiber = list(fs.factorizations)
    uf, edges = _component_labels([support_mask(u) for u in fiber])
    groups: dict[int, list[int]] = {}
    for i in range(len(fiber)):
        groups.setdefault(uf.find(i), []).append(i)
    keyed = []
    for members in groups.values():
        member_set = set(members)
        vecs = tuple(sorted((fiber[i] for i in members), reverse=True))
        witness = tuple((fiber[i], fiber[j]) for (i, j) in edges if i in member_set)
        keyed.append((vecs, witness))
    keyed.sort(key=lambda pair: pair[0][0], reverse=True)
    return RClassPartition(
        classes=tuple(vecs for vecs, _ in keyed),
        spanning_edges=tuple(witness for _, witness in keyed),
    )


def iter_fiber_window(
    atoms: Sequence[int], bound: int
) -> Iterator[tuple[int, list[Factorization]]]:
    """Yield (t, fiber) for every t in [0, bound] with a nonempty fiber, ascending.

    Integer atoms only.  Each solution is produced exactly once: a nonzero
    exponent vector is built from the predecessor obtained by decrementing its
    lowest-support index, so no deduplication pass is needed.  Laziness lets
    scanning callers stop early.
    """
    r = len(atoms)
    zero = (0,) * r
    fibers: dict[int, list[tuple[int, Factorization]]] = {0: [(r, zero)]}
    yield 0, [zero]
    for t in range(1, bound + 1):
        grown: list[tuple[int, Factorization]] = []
        for j in range(r):
            prev = fibers.get(t - atoms[j])
            if prev:
                for low, u in prev:
                    if low >= j:
                        grown.append((j, u[:j] + (u[j] + 1,) + u[j + 1 :]))
        if grown:
            fibers[t] = grown
            yield t, [u for _, u in grown]

