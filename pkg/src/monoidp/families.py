"""Closed forms for three classical families, plus the telescopic doubling chain.

Interval-generated semigroups <a, a+1, ..., a+x> are uniquely presented
exactly for x in {1, 2} or x = 3 with (a - 1) not divisible by 3, and for
x in {2, 3} their Betti sets have explicit case-by-case formulas (the x = 3,
r = 0 subcase only pins two Betti elements, so that closed form is returned
flagged as a lower bound).

Symmetric embedding-dimension-3 semigroups are parametrized as
<a*m1, a*m2, b*m1 + c*m2>; they are uniquely presented iff 0 < b < m2 and
0 < c < m1, with Betti set {a*m1*m2, a*(b*m1 + c*m2)}.

Maximal-embedding-dimension semigroups are uniquely presented iff their
multiplicity is 3, and their Betti set is the pairwise sums of the
non-multiplicity generators.  Both closed forms are stated for multiplicity
at least 3 only; smaller cases must use the general algorithm.

The doubling rule S -> <2a_1, a_1 + a_2, 2a_2, ..., 2a_k> glues 2S with
<a_1 + a_2> at d = 2a_1 + 2a_2 and generates an infinite chain of uniquely
presented complete intersections starting from <2, 3>.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .errors import (
    InvalidParams,
    NotEmbeddingDimension3,
    NotInTheoremScope,
    NotMED,
    UnsupportedX,
    check_magnitude,
)
from .presentations import Presentation, minimal_presentation
from .semigroups import NumericalSemigroup, numerical_from_generators


@dataclass(frozen=True)
class IntervalParams:
    """Parameters of <a, a+1, ..., a+x>; x < a keeps the interval minimal."""

    a: int
    x: int

    def __post_init__(self):
        if self.a < 2:
            raise InvalidParams(f"a must be at least 2, got {self.a}")
        if not 1 <= self.x < self.a:
            raise InvalidParams(f"x must satisfy 1 <= x < a, got x={self.x}, a={self.a}")

    @property
    def q(self) -> int:
        # a = x*q + r + 1 with 0 <= r <= x-1; x < a forces q >= 1
        return (self.a - 1) // self.x

    @property
    def r(self) -> int:
        return (self.a - 1) % self.x


def interval_semigroup(p: IntervalParams) -> NumericalSemigroup:
    sg = numerical_from_generators(range(p.a, p.a + p.x + 1))
    assert sg.embedding_dimension == p.x + 1
    return sg


def interval_uniquely_presented(p: IntervalParams) -> bool:
    if p.x in (1, 2):
        return True
    if p.x == 3:
        return (p.a - 1) % 3 != 0
    return False


@dataclass(frozen=True)
class ClosedFormBetti:
    """A closed-form Betti set; `lower_bound_only` marks a partial answer."""

    elements: tuple[int, ...]
    lower_bound_only: bool


def interval_betti_closed_form(p: IntervalParams) -> ClosedFormBetti:
    """Betti set of <a, ..., a+x> for x in {2, 3}, by the case split on r.

    The top-degree elements use the quotient Q = q + 1: the difference
    identities behind the case split (e.g. Qa + 2(Q-1) + 1 - 2(a+1) =
    (q-1)a + 2q - 1 for x = 2, and (q+1)(a+3) - 2(a+1) = qa for x = 3,
    r = 0) hold with that shift, and the resulting sets match the general
    algorithm; with Q = q they do not.
    """
    a, q, r = p.a, p.q, p.r
    big = q + 1
    if p.x == 2:
        if r == 0:
            elems = [2 * (a + 1), big * a + 2 * (big - 1) + 1, big * a + 2 * (big - 1) + 2]
        else:
            elems = [2 * (a + 1), big * a + 2 * (big - 1) + 2]
        return ClosedFormBetti(tuple(sorted(set(elems))), lower_bound_only=False)
    if p.x == 3:
        if r == 0:
            # only these two members are pinned down in this subcase
            elems = [2 * (a + 1), big * (a + 3)]
            return ClosedFormBetti(tuple(sorted(set(elems))), lower_bound_only=True)
        elems = [2 * (a + 1), (a + 1) + (a + 2), 2 * (a + 2), big * a + 3 * (big - 1) + 3]
        if r == 1:
            elems.append(big * a + 3 * (big - 1) + 2)
        return ClosedFormBetti(tuple(sorted(set(elems))), lower_bound_only=False)
    raise UnsupportedX(f"closed form requires x in {{2, 3}}, got {p.x}")


@dataclass(frozen=True)
class ED3SymmetricParams:
    """Parameters of the symmetric embedding-dimension-3 shape
    <a*m1, a*m2, b*m1 + c*m2>."""

    m1: int
    m2: int
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.m1 <= 1 or self.m2 <= 1:
            raise InvalidParams("m1 and m2 must be greater than 1")
        if math.gcd(self.m1, self.m2) != 1:
            raise InvalidParams(f"gcd({self.m1}, {self.m2}) != 1")
        if self.a < 2:
            raise InvalidParams(f"a must be at least 2, got {self.a}")
        if self.b < 0 or self.c < 0 or self.b + self.c < 2:
            raise InvalidParams("b and c must be nonnegative with b + c >= 2")
        if math.gcd(self.a, self.third_generator) != 1:
            raise InvalidParams(f"gcd(a, b*m1 + c*m2) != 1")

    @property
    def third_generator(self) -> int:
        return self.b * self.m1 + self.c * self.m2


def ed3_symmetric(p: ED3SymmetricParams) -> NumericalSemigroup:
    """Construct <a*m1, a*m2, b*m1 + c*m2>; it must come out with three
    minimal generators, and is then automatically symmetric."""
    gens = (p.a * p.m1, p.a * p.m2, p.third_generator)
    check_magnitude(*gens)
    sg = numerical_from_generators(gens)
    if sg.minimal_generators != tuple(sorted(gens)):
        raise NotEmbeddingDimension3(
            f"parameters collapse {sorted(gens)} to {list(sg.minimal_generators)}"
        )
    assert sg.is_symmetric()
    return sg


def ed3_symmetric_uniquely_presented(p: ED3SymmetricParams) -> bool:
    return 0 < p.b < p.m2 and 0 < p.c < p.m1


def ed3_symmetric_betti(p: ED3SymmetricParams) -> list[int]:
    """Betti set {a*m1*m2, a*(b*m1 + c*m2)} (one element when they coincide)."""
    ed3_symmetric(p)
    return sorted({p.a * p.m1 * p.m2, p.a * p.third_generator})


def med_uniquely_presented(sg: NumericalSemigroup) -> bool:
    """MED semigroups with multiplicity >= 3 are uniquely presented iff
    the multiplicity is exactly 3."""
    if not sg.is_med():
        raise NotMED(f"{sg} does not have maximal embedding dimension")
    if sg.multiplicity < 3:
        raise NotInTheoremScope(
            "the MED criterion is stated for multiplicity >= 3; "
            "use the general algorithm below that"
        )
    return sg.multiplicity == 3


def med_betti_closed_form(sg: NumericalSemigroup) -> list[int]:
    """Betti set {a_i + a_j : i, j >= 2} of an MED semigroup."""
    if not sg.is_med():
        raise NotMED(f"{sg} does not have maximal embedding dimension")
    if sg.embedding_dimension < 3:
        raise NotInTheoremScope(
            "the MED Betti formula is stated for multiplicity >= 3"
        )
    rest = sg.minimal_generators[1:]
    return sorted({u + v for u, v in combinations_with_replacement(rest, 2)})


@dataclass(frozen=True)
class TelescopicStep:
    """One member of the doubling chain with its predicted data."""

    semigroup: NumericalSemigroup
    predicted_betti: tuple[int, ...]
    presentation: Presentation


def telescopic_sequence(i: int) -> TelescopicStep:
    """The i-th semigroup of the doubling chain starting at <2, 3>.

    Predicted Betti set: twice each non-multiplicity generator (equivalently
    {2a_1 + 2a_2} union 2*Betti of the previous step).  The presentation is
    computed by the general algorithm rather than read off the displayed
    index pattern.
    """
    if i < 1:
        raise InvalidParams(f"the chain starts at i = 1, got {i}")
    gens = (2, 3)
    for _ in range(i - 1):
        doubled = [2 * gens[0], gens[0] + gens[1]] + [2 * g for g in gens[1:]]
        check_magnitude(*doubled)
        gens = tuple(sorted(doubled))
    sg = numerical_from_generators(gens)
    assert sg.minimal_generators == gens
    predicted = tuple(sorted(2 * g for g in gens[1:]))
    return TelescopicStep(
        semigroup=sg,
        predicted_betti=predicted,
        presentation=minimal_presentation(sg),
    )
