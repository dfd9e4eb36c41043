"""Integer-lattice arithmetic and gluings of affine semigroups.

S is a gluing of the subsemigroups generated by a partition (A_1, A_2) of its
generators when the groups they span meet in a rank-1 lattice dZ whose
positive generator d lies in both parts.  Gluings propagate structure: the
Betti elements of S are those of the parts plus d, and S is uniquely
presented iff both parts are and neither d - a nor a - d lies in S for any
part Betti element a.

All lattice work is exact integer row reduction with extended-gcd pivoting;
no floating point is used anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .errors import (
    DimensionMismatch,
    EmptyInput,
    InvalidGluing,
    TooManyGenerators,
    check_magnitude,
)
from .factorizations import Element, Factorization, _vector_fiber
from .semigroups import (
    AffineSemigroup,
    NumericalSemigroup,
    Vector,
    _affine_member,
    as_affine,
    numerical_from_generators,
)

MAX_PARTITION_GENERATORS = 14


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def _hnf_with_transform(
    rows: Sequence[Sequence[int]], ncols: int
) -> tuple[list[list[int]], list[list[int]]]:
    """Row-reduce to Hermite normal form, tracking a unimodular transform.

    Returns (H, U) with U * rows = H; H has its nonzero rows on top in
    echelon order with positive pivots and entries above each pivot reduced
    into [0, pivot).  Rows of U aligned with zero rows of H span the left
    integer kernel of the input.
    """
    n = len(rows)
    a = [list(r) for r in rows]
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    top = 0
    for c in range(ncols):
        piv = None
        for i in range(top, n):
            if a[i][c] == 0:
                continue
            if piv is None:
                piv = i
                continue
            p, q = a[piv][c], a[i][c]
            g, x, y = _xgcd(p, q)
            pg, qg = p // g, q // g
            for k in range(ncols):
                a[piv][k], a[i][k] = x * a[piv][k] + y * a[i][k], -qg * a[piv][k] + pg * a[i][k]
            for k in range(n):
                u[piv][k], u[i][k] = x * u[piv][k] + y * u[i][k], -qg * u[piv][k] + pg * u[i][k]
        if piv is None:
            continue
        a[top], a[piv] = a[piv], a[top]
        u[top], u[piv] = u[piv], u[top]
        if a[top][c] < 0:
            a[top] = [-x for x in a[top]]
            u[top] = [-x for x in u[top]]
        for i in range(top):
            q = a[i][c] // a[top][c]
            if q:
                for k in range(ncols):
                    a[i][k] -= q * a[top][k]
                for k in range(n):
                    u[i][k] -= q * u[top][k]
        top += 1
    return a, u


def _pivot_column(row: Sequence[int]) -> int:
    for j, x in enumerate(row):
        if x:
            return j
    return -1


@dataclass(frozen=True)
class IntegerLattice:
    """A sublattice of Z^dimension held by a Hermite-normal-form row basis."""

    dimension: int
    basis: tuple[Vector, ...]

    def __post_init__(self):
        last = -1
        for row in self.basis:
            pc = _pivot_column(row)
            if pc <= last or row[pc] <= 0:
                raise ValueError("basis rows are not in Hermite normal form")
            last = pc

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence[int]) -> bool:
        """Exact divisibility reduction against the echelon basis."""
        if len(v) != self.dimension:
            raise DimensionMismatch("vector length differs from lattice dimension")
        w = list(v)
        for row in self.basis:
            pc = _pivot_column(row)
            if w[pc]:
                q, rem = divmod(w[pc], row[pc])
                if rem:
                    return False
                for j in range(pc, self.dimension):
                    w[j] -= q * row[j]
        return not any(w)


def hnf(rows: Iterable[Sequence[int]], dimension: Optional[int] = None) -> IntegerLattice:
    """Hermite normal form of the lattice spanned by the given rows.

    Zero rows are dropped.  `dimension` is inferred from the rows and only
    needed when none are given.
    """
    mat = [list(r) for r in rows]
    if dimension is None:
        if not mat:
            raise EmptyInput("dimension is required for an empty row list")
        dimension = len(mat[0])
    for r in mat:
        if len(r) != dimension:
            raise DimensionMismatch("rows have differing lengths")
        check_magnitude(*r)
    reduced, _ = _hnf_with_transform(mat, dimension)
    basis = tuple(tuple(r) for r in reduced if any(r))
    return IntegerLattice(dimension=dimension, basis=basis)


def lattice_intersection(lat1: IntegerLattice, lat2: IntegerLattice) -> IntegerLattice:
    """The lattice of vectors lying in both inputs.

    Solves x*B1 = y*B2 over the integers by computing the left kernel of the
    stacked matrix [B1; -B2] and projecting the solutions through B1.
    """
    if lat1.dimension != lat2.dimension:
        raise DimensionMismatch("lattices live in different ambient spaces")
    d = lat1.dimension
    if lat1.rank == 0 or lat2.rank == 0:
        return IntegerLattice(dimension=d, basis=())
    stacked = [list(r) for r in lat1.basis] + [[-x for x in r] for r in lat2.basis]
    reduced, transform = _hnf_with_transform(stacked, d)
    k1 = lat1.rank
    gens = []
    for i, row in enumerate(reduced):
        if any(row):
            continue
        coeffs = transform[i][:k1]
        v = [
            sum(coeffs[j] * lat1.basis[j][t] for j in range(k1))
            for t in range(d)
        ]
        if any(v):
            gens.append(v)
    if not gens:
        return IntegerLattice(dimension=d, basis=())
    return hnf(gens, dimension=d)


@dataclass(frozen=True)
class GluingDecomposition:
    """A verified gluing: generator partition, witness element, factorizations.

    `u` factors d over the A_1 atoms (in index order) and `v` over the A_2
    atoms; the lattice evidence is that the groups of the parts meet in dZ.
    """

    a1_indices: tuple[int, ...]
    a2_indices: tuple[int, ...]
    d: Element
    u: Factorization
    v: Factorization


def check_gluing(
    sg: AffineSemigroup, a1_indices: Sequence[int]
) -> Optional[GluingDecomposition]:
    """Decide whether the given generator split is a gluing.

    Returns the decomposition when the groups spanned by the two parts meet
    in a rank-1 lattice whose N^d generator d belongs to both parts; returns
    None otherwise.
    """
    r = len(sg.generators)
    a1 = tuple(sorted(set(a1_indices)))
    if not a1 or len(a1) >= r:
        raise InvalidGluing("A1 must be a nonempty proper subset of the generators")
    if a1[0] < 0 or a1[-1] >= r:
        raise InvalidGluing(f"generator indices must lie in [0, {r - 1}]")
    a2 = tuple(i for i in range(r) if i not in set(a1))
    atoms1 = [sg.generators[i] for i in a1]
    atoms2 = [sg.generators[i] for i in a2]
    meet = lattice_intersection(hnf(atoms1), hnf(atoms2))
    if meet.rank != 1:
        return None
    d = meet.basis[0]
    if any(c < 0 for c in d):
        # HNF makes the leading entry positive, so -d is not in N^d either.
        return None
    if not (_affine_member(atoms1, d) and _affine_member(atoms2, d)):
        return None
    u = _vector_fiber(atoms1, d)[0]
    v = _vector_fiber(atoms2, d)[0]
    return GluingDecomposition(a1_indices=a1, a2_indices=a2, d=d, u=u, v=v)


def find_gluings(sg: AffineSemigroup) -> list[GluingDecomposition]:
    """All gluing decompositions over the unordered proper generator splits.

    Generator 0 is fixed in A_1 to skip mirror duplicates; the search covers
    2^(r-1) - 1 partitions and is guarded against large r.
    """
    r = len(sg.generators)
    if r > MAX_PARTITION_GENERATORS:
        raise TooManyGenerators(
            f"{r} generators exceed the partition search limit {MAX_PARTITION_GENERATORS}"
        )
    found = []
    for mask in range(2 ** (r - 1) - 1):
        a1 = [0] + [i + 1 for i in range(r - 1) if (mask >> i) & 1]
        dec = check_gluing(sg, a1)
        if dec is not None:
            found.append(dec)
    return found


def _subtract(x: Element, y: Element):
    if isinstance(x, int):
        return x - y
    return tuple(a - b for a, b in zip(x, y))


def _member(sg: Union[NumericalSemigroup, AffineSemigroup], x) -> bool:
    return sg.contains(x)


def betti_via_gluing(
    sg: Union[NumericalSemigroup, AffineSemigroup],
    dec: GluingDecomposition,
    betti1: Iterable[Element],
    betti2: Iterable[Element],
) -> list[Element]:
    """Betti(S) = Betti(S_1) union Betti(S_2) union {d}.

    `betti1` and `betti2` must be the complete Betti sets of the parts,
    embedded in the ambient space of S.
    """
    return sorted(set(betti1) | set(betti2) | {dec.d})


def d_has_unique_presentation(
    sg: Union[NumericalSemigroup, AffineSemigroup],
    dec: GluingDecomposition,
    betti1: Iterable[Element],
    betti2: Iterable[Element],
) -> bool:
    """d has unique presentation iff d - a is never in S for part Betti a."""
    return all(
        not _member(sg, _subtract(dec.d, a)) for a in set(betti1) | set(betti2)
    )


@dataclass(frozen=True)
class PartReport:
    """What a gluing part contributes: its uniqueness answer and Betti set."""

    uniquely_presented: bool
    betti: tuple[Element, ...]


def uniquely_presented_via_gluing(
    sg: Union[NumericalSemigroup, AffineSemigroup],
    dec: GluingDecomposition,
    report1: PartReport,
    report2: PartReport,
) -> bool:
    """S is uniquely presented iff both parts are and +-(d - a) stays out of S."""
    if not (report1.uniquely_presented and report2.uniquely_presented):
        return False
    for a in set(report1.betti) | set(report2.betti):
        if _member(sg, _subtract(dec.d, a)) or _member(sg, _subtract(a, dec.d)):
            return False
    return True


def glue_numerical(
    sg1: NumericalSemigroup, lam: int, mu: int
) -> tuple[NumericalSemigroup, GluingDecomposition]:
    """Glue lam*S1 with <mu> at d = lam*mu.

    Requires lam >= 2, mu in S1 but not a minimal generator, and
    gcd(lam, mu) = 1; then lam*gens(S1) together with mu minimally generate
    the glued semigroup.  The decomposition is re-verified through the
    lattice oracle before being returned.
    """
    if lam < 2:
        raise InvalidGluing(f"lambda must be at least 2, got {lam}")
    if mu < 1 or not sg1.contains(mu):
        raise InvalidGluing(f"mu = {mu} is not an element of {sg1}")
    if mu in sg1.minimal_generators:
        raise InvalidGluing(f"mu = {mu} is a minimal generator of {sg1}")
    if math.gcd(lam, mu) != 1:
        raise InvalidGluing(f"gcd({lam}, {mu}) != 1")
    scaled = [lam * a for a in sg1.minimal_generators]
    check_magnitude(*scaled, lam * mu)
    gens = sorted(scaled + [mu])
    glued = numerical_from_generators(gens)
    if glued.minimal_generators != tuple(gens):
        raise InvalidGluing(
            f"{gens} is not a minimal generating set; the gluing is degenerate"
        )
    a1 = tuple(i for i, g in enumerate(gens) if g != mu)
    dec = check_gluing(as_affine(glued), a1)
    if dec is None or dec.d != (lam * mu,):
        raise InvalidGluing(
            f"lattice verification failed: expected intersection {lam * mu}Z"
        )
    return glued, GluingDecomposition(
        a1_indices=dec.a1_indices,
        a2_indices=dec.a2_indices,
        d=lam * mu,
        u=dec.u,
        v=dec.v,
    )
