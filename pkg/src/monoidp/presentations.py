"""Betti elements, minimal presentations, and unique-presentation certificates.

An element is Betti when its fiber has at least two R-classes.  Every Betti
element b of a numerical semigroup satisfies b <= F + 2 * max(generators):
take u, v in distinct R-classes of b and indices i in supp(u), j in supp(v);
if b - a_i - a_j were in the semigroup, some factorization w + e_i + e_j of b
would share support with both classes, collapsing them.  Hence
b - a_i - a_j > F, and the definitional scan below that bound is complete.

A minimal presentation collects, for each Betti element with k R-classes, a
set of k - 1 pairs connecting one chosen representative per class.  Both
shapes used in practice are implemented: a star rooted at the class of the
overall lexicographic maximum, and a path through the representatives in
descending order.  A pair is indispensable (appears in every minimal
presentation up to orientation) exactly when its Betti element has two
factorizations, and the whole semigroup is uniquely presented exactly when
every Betti element has two factorizations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from .errors import BoundTooSmall, InvalidParams, NotAMember
from .factorizations import (
    Element,
    Factorization,
    UnionFind,
    _int_fiber,
    _vector_fiber,
    iter_fiber_window,
    support_mask,
)
from .semigroups import AffineSemigroup, NumericalSemigroup, Vector


@dataclass(frozen=True)
class BettiReport:
    """Summary of one Betti element's fiber."""

    element: Element
    factorization_count: int
    r_class_count: int
    is_betti_minimal: bool
    has_unique_presentation: bool


@dataclass(frozen=True)
class PresentationPair:
    """One relation; `left` is the lexicographically larger factorization."""

    left: Factorization
    right: Factorization
    element: Element
    indispensable: bool


@dataclass(frozen=True)
class Presentation:
    pairs: tuple[PresentationPair, ...]

    def __len__(self) -> int:
        return len(self.pairs)

    def betti_elements(self) -> list[Element]:
        return sorted({p.element for p in self.pairs})


@dataclass(frozen=True)
class UniquePresentation:
    """Answer of the uniqueness test; `witness` is the smallest offender."""

    answer: bool
    witness: BettiReport | None


def betti_scan_bound(sg: NumericalSemigroup) -> int:
    return sg.frobenius + 2 * max(sg.minimal_generators)


def _class_groups(fiber: Sequence[Factorization]) -> list[list[int]]:
    """Indices of the fiber grouped into R-classes (merge via support masks)."""
    masks = [support_mask(u) for u in fiber]
    uf = UnionFind(len(fiber))
    for i in range(len(masks)):
        mi = masks[i]
        for j in range(i + 1, len(masks)):
            if mi & masks[j]:
                uf.union(i, j)
    groups: dict[int, list[int]] = {}
    for i in range(len(fiber)):
        groups.setdefault(uf.find(i), []).append(i)
    return list(groups.values())


def _iter_betti_fibers(
    atoms: Sequence[int], bound: int
) -> Iterator[tuple[int, list[Factorization], list[list[int]]]]:
    """Yield (element, fiber, class index groups) for Betti elements, ascending."""
    for t, fiber in iter_fiber_window(atoms, bound):
        if len(fiber) < 2:
            continue
        groups = _class_groups(fiber)
        if len(groups) >= 2:
            yield t, fiber, groups


def _report(element: Element, fiber: Sequence[Factorization], n_classes: int) -> BettiReport:
    return BettiReport(
        element=element,
        factorization_count=len(fiber),
        r_class_count=n_classes,
        is_betti_minimal=n_classes == len(fiber),
        has_unique_presentation=len(fiber) == 2,
    )


def betti_elements(sg: NumericalSemigroup) -> list[int]:
    """All Betti elements, by the definitional scan up to F + 2*max(gens)."""
    atoms = sg.minimal_generators
    return [t for t, _, _ in _iter_betti_fibers(atoms, betti_scan_bound(sg))]


def betti_minimal_elements(sg: NumericalSemigroup) -> list[int]:
    """Betti elements b with no smaller Betti element b' such that b - b' in S."""
    betti = betti_elements(sg)
    return [
        b
        for b in betti
        if not any(b2 != b and sg.contains(b - b2) for b2 in betti if b2 < b)
    ]


def betti_report(sg: NumericalSemigroup, a: int) -> BettiReport | None:
    """Report for element a, or None when a is not a Betti element."""
    if not sg.contains(a):
        raise NotAMember(f"{a} is not in {sg}")
    fiber = _int_fiber(sg.minimal_generators, a)
    if len(fiber) < 2:
        return None
    groups = _class_groups(fiber)
    if len(groups) < 2:
        return None
    return _report(a, fiber, len(groups))


def is_betti_minimal_by_classes(sg: NumericalSemigroup, a: int) -> bool:
    """True iff the fiber of a has at least two R-classes, all singletons."""
    if not sg.contains(a):
        raise NotAMember(f"{a} is not in {sg}")
    fiber = _int_fiber(sg.minimal_generators, a)
    if len(fiber) < 2:
        return False
    masks = [support_mask(u) for u in fiber]
    return all(
        not (masks[i] & masks[j])
        for i in range(len(masks))
        for j in range(i + 1, len(masks))
    )


def is_minimal_multi_element(sg: NumericalSemigroup, a: int) -> bool:
    """True iff the fiber of a has >= 2 R-classes and at least one singleton."""
    if not sg.contains(a):
        raise NotAMember(f"{a} is not in {sg}")
    fiber = _int_fiber(sg.minimal_generators, a)
    if len(fiber) < 2:
        return False
    groups = _class_groups(fiber)
    return len(groups) >= 2 and any(len(g) == 1 for g in groups)


def _pairs_for_element(
    element: Element,
    fiber: Sequence[Factorization],
    groups: Sequence[Sequence[int]],
    topology: str,
) -> list[PresentationPair]:
    indispensable = len(fiber) == 2
    reps = sorted((max(fiber[i] for i in g) for g in groups), reverse=True)
    pairs = []
    if topology == "star":
        for other in reps[1:]:
            pairs.append(PresentationPair(reps[0], other, element, indispensable))
    else:
        for left, right in zip(reps, reps[1:]):
            pairs.append(PresentationPair(left, right, element, indispensable))
    return pairs


def minimal_presentation(sg: NumericalSemigroup, topology: str = "star") -> Presentation:
    """A minimal presentation with deterministic representative choices.

    Per R-class the representative is its lexicographically largest
    factorization; the star is rooted at the class of the overall maximum.
    """
    if topology not in ("star", "path"):
        raise InvalidParams(f"topology must be 'star' or 'path', got {topology!r}")
    atoms = sg.minimal_generators
    pairs: list[PresentationPair] = []
    for t, fiber, groups in _iter_betti_fibers(atoms, betti_scan_bound(sg)):
        pairs.extend(_pairs_for_element(t, fiber, groups, topology))
    return Presentation(pairs=tuple(pairs))


def is_uniquely_presented(sg: NumericalSemigroup) -> UniquePresentation:
    """True iff Betti(S) is empty or every Betti element has two factorizations.

    On failure the witness is the smallest offending Betti element.
    """
    atoms = sg.minimal_generators
    for t, fiber, groups in _iter_betti_fibers(atoms, betti_scan_bound(sg)):
        if len(fiber) != 2:
            return UniquePresentation(False, _report(t, fiber, len(groups)))
    return UniquePresentation(True, None)


def element_has_unique_presentation(sg: NumericalSemigroup, a: int) -> bool:
    """True iff a is a Betti element with exactly two factorizations."""
    if not sg.contains(a):
        raise NotAMember(f"{a} is not in {sg}")
    fiber = _int_fiber(sg.minimal_generators, a)
    return len(fiber) == 2 and not (support_mask(fiber[0]) & support_mask(fiber[1]))


PairLike = Union[PresentationPair, tuple[Factorization, Factorization]]


def _as_raw_pairs(pres: Union[Presentation, Iterable[PairLike]]) -> list[tuple[Factorization, Factorization]]:
    if isinstance(pres, Presentation):
        items: Iterable[PairLike] = pres.pairs
    else:
        items = pres
    raw = []
    for p in items:
        if isinstance(p, PresentationPair):
            raw.append((tuple(p.left), tuple(p.right)))
        else:
            u, v = p
            raw.append((tuple(u), tuple(v)))
    return raw


def verify_presentation(
    sg: NumericalSemigroup,
    pres: Union[Presentation, Iterable[PairLike]],
    bound: int,
) -> bool:
    """Check that `pres` generates the kernel congruence on a finite window.

    For every s in S with s <= bound and at least two factorizations, the
    rewriting steps u -> u - p + q (for pairs (p, q) or their reverses with
    u >= p componentwise) must connect the whole fiber.  `bound` must be at
    least F + 2*max(gens) so the window sees every Betti element.
    """
    needed = betti_scan_bound(sg)
    if bound < needed:
        raise BoundTooSmall(f"bound {bound} is below the Betti bound {needed}")
    raw = _as_raw_pairs(pres)
    atoms = sg.minimal_generators
    for p, q in raw:
        if len(p) != len(atoms) or len(q) != len(atoms):
            raise InvalidParams(f"pair ({p}, {q}) does not match {len(atoms)} generators")
        if sum(c * a for c, a in zip(p, atoms)) != sum(c * a for c, a in zip(q, atoms)):
            raise InvalidParams(f"pair ({p}, {q}) relates different elements")
    rules = raw + [(q, p) for (p, q) in raw]
    r = sg.embedding_dimension
    for _, fiber in iter_fiber_window(sg.minimal_generators, bound):
        if len(fiber) < 2:
            continue
        index = {u: i for i, u in enumerate(fiber)}
        uf = UnionFind(len(fiber))
        for u in fiber:
            iu = index[u]
            for p, q in rules:
                if all(u[k] >= p[k] for k in range(r)):
                    w = tuple(u[k] - p[k] + q[k] for k in range(r))
                    uf.union(iu, index[w])
        if uf.count > 1:
            return False
    return True


def affine_betti_up_to(sg: AffineSemigroup, degree_bound: int) -> list[Vector]:
    """Betti elements with coordinate sum <= degree_bound, ascending.

    This is an explicit truncation: completeness is only guaranteed when the
    caller supplies a bound proved sufficient, e.g. from a gluing
    decomposition.
    """
    if degree_bound < 0:
        raise InvalidParams("degree bound must be nonnegative")
    gens = sg.generators
    if sg.dimension == 1:
        atoms = [g[0] for g in gens]
        return [
            (t,) for t, _, _ in _iter_betti_fibers(atoms, degree_bound)
        ]
    zero = (0,) * sg.dimension
    seen = {zero}
    frontier = [zero]
    while frontier:
        grown = []
        for v in frontier:
            for a in gens:
                w = tuple(x + y for x, y in zip(v, a))
                if sum(w) <= degree_bound and w not in seen:
                    seen.add(w)
                    grown.append(w)
        frontier = grown
    out = []
    for v in sorted(seen):
        fiber = _vector_fiber(gens, v)
        if len(fiber) >= 2 and len(_class_groups(fiber)) >= 2:
            out.append(v)
    return out


def is_complete_intersection_cardinality(sg: NumericalSemigroup) -> bool:
    """True iff the minimal presentation has embedding_dimension - 1 pairs."""
    return len(minimal_presentation(sg)) == sg.embedding_dimension - 1
