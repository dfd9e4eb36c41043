import random

import pytest

import oracles
from monoidp import (
    InvalidGluing,
    PartReport,
    TooManyGenerators,
    affine_from_generators,
    as_affine,
    betti_elements,
    betti_via_gluing,
    check_gluing,
    d_has_unique_presentation,
    enumerate_factorizations,
    find_gluings,
    glue_numerical,
    hnf,
    is_uniquely_presented,
    lattice_intersection,
    numerical_from_generators,
    uniquely_presented_via_gluing,
)
from monoidp.errors import DimensionMismatch, EmptyInput


def sg(*gens):
    return numerical_from_generators(gens)


AFFINE_EXAMPLE = [(2, 0), (0, 3), (2, 1), (1, 2)]


class TestHNF:
    def test_examples(self):
        assert hnf([(2, 0), (0, 3), (2, 1)]).basis == ((2, 0), (0, 1))
        assert hnf([(1, 2)]).basis == ((1, 2),)
        assert hnf([(2, 4), (1, 2)]).basis == ((1, 2),)

    def test_zero_rows_dropped(self):
        assert hnf([(0, 0), (3, 1)]).basis == ((3, 1),)
        assert hnf([(0, 0)], dimension=2).basis == ()
        with pytest.raises(EmptyInput):
            hnf([])

    def test_canonicity(self):
        rng = random.Random(99)
        for _ in range(50):
            rows = [
                tuple(rng.randint(-10, 10) for _ in range(3))
                for _ in range(rng.randint(1, 4))
            ]
            lat = hnf(rows, dimension=3)
            again = hnf(lat.basis, dimension=3)
            assert again.basis == lat.basis

    def test_membership_against_cramer_oracle(self):
        rng = random.Random(4242)
        for _ in range(40):
            rows = [
                (rng.randint(-10, 10), rng.randint(-10, 10))
                for _ in range(rng.randint(1, 3))
            ]
            if not any(any(r) for r in rows):
                continue
            lat = hnf(rows, dimension=2)
            for _ in range(60):
                v = (rng.randint(-50, 50), rng.randint(-50, 50))
                assert lat.contains(v) == oracles.lattice_member_2d(rows, v), (rows, v)

    def test_input_rows_stay_members(self):
        rows = [(6, 4), (2, 8), (-4, 2)]
        lat = hnf(rows)
        assert all(lat.contains(r) for r in rows)


class TestIntersection:
    def test_paper_examples(self):
        l1 = hnf([(2, 0), (0, 3), (2, 1)])
        l2 = hnf([(1, 2)])
        assert lattice_intersection(l1, l2).basis == ((2, 4),)
        l11 = hnf([(2, 0), (0, 3)])
        l12 = hnf([(2, 1)])
        assert lattice_intersection(l11, l12).basis == ((6, 3),)
        assert lattice_intersection(hnf([(2,)]), hnf([(21,)])).basis == ((42,),)

    def test_commutative_and_contained(self):
        rng = random.Random(314)
        for _ in range(30):
            l1 = hnf([(rng.randint(-10, 10), rng.randint(-10, 10)) for _ in range(2)], dimension=2)
            l2 = hnf([(rng.randint(-10, 10), rng.randint(-10, 10)) for _ in range(2)], dimension=2)
            meet = lattice_intersection(l1, l2)
            assert meet.basis == lattice_intersection(l2, l1).basis
            for row in meet.basis:
                assert l1.contains(row) and l2.contains(row)

    def test_membership_box_property(self):
        rng = random.Random(2718)
        for _ in range(8):
            l1 = hnf([(rng.randint(-10, 10), rng.randint(-10, 10)) for _ in range(2)], dimension=2)
            l2 = hnf([(rng.randint(-10, 10), rng.randint(-10, 10)) for _ in range(2)], dimension=2)
            meet = lattice_intersection(l1, l2)
            for x in range(-50, 51, 7):
                for y in range(-50, 51, 7):
                    both = l1.contains((x, y)) and l2.contains((x, y))
                    assert meet.contains((x, y)) == both

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            lattice_intersection(hnf([(2,)]), hnf([(2, 1)]))


class TestCheckGluing:
    def test_affine_paper_example(self):
        s = affine_from_generators(2, AFFINE_EXAMPLE)
        dec = check_gluing(s, [0, 1, 2])
        assert dec is not None
        assert dec.d == (2, 4)
        assert dec.v == (2,)  # d = 2*(1,2) over A2
        image = tuple(
            sum(dec.u[i] * AFFINE_EXAMPLE[idx][j] for i, idx in enumerate(dec.a1_indices))
            for j in range(2)
        )
        assert image == (2, 4)

    def test_numerical_4_6_21(self):
        dec = check_gluing(as_affine(sg(4, 6, 21)), [0, 1])
        assert dec is not None
        assert dec.d == (42,)

    def test_free_monoid_has_no_gluing(self):
        s = affine_from_generators(2, [(1, 0), (0, 1)])
        assert check_gluing(s, [0]) is None

    def test_bad_indices(self):
        s = affine_from_generators(2, [(1, 0), (0, 1)])
        with pytest.raises(InvalidGluing):
            check_gluing(s, [])
        with pytest.raises(InvalidGluing):
            check_gluing(s, [0, 1])
        with pytest.raises(InvalidGluing):
            check_gluing(s, [5])


class TestFindGluings:
    def test_ed2(self):
        decs = find_gluings(as_affine(sg(2, 3)))
        assert len(decs) == 1
        assert decs[0].d == (6,)
        assert decs[0].a1_indices == (0,) and decs[0].a2_indices == (1,)

    def test_6_10_15_all_three_splits_glue(self):
        # every split satisfies the definition (intersection 30Z, 30 in both
        # parts), and the Betti recursion reproduces Betti(S) = {30} for each
        s = sg(6, 10, 15)
        decs = find_gluings(as_affine(s))
        assert len(decs) == 3
        assert all(dec.d == (30,) for dec in decs)
        for dec in decs:
            atoms1 = [s.minimal_generators[i] for i in dec.a1_indices]
            atoms2 = [s.minimal_generators[i] for i in dec.a2_indices]
            betti1 = part_betti(atoms1)
            betti2 = part_betti(atoms2)
            assert betti_via_gluing(s, _as_int_dec(dec), betti1, betti2) == [30]

    def test_affine_example_contains_paper_partition(self):
        decs = find_gluings(affine_from_generators(2, AFFINE_EXAMPLE))
        assert any(d.a1_indices == (0, 1, 2) and d.d == (2, 4) for d in decs)

    def test_generator_guard(self):
        dim = 15
        gens = [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]
        with pytest.raises(TooManyGenerators):
            find_gluings(affine_from_generators(dim, gens))


def part_betti(atoms):
    """Betti set of the monoid generated by an integer atom list (any gcd)."""
    from math import gcd

    g = 0
    for a in atoms:
        g = gcd(g, a)
    reduced = [a // g for a in atoms]
    if len(reduced) == 1:
        return []
    base = numerical_from_generators(reduced)
    return [g * b for b in betti_elements(base)]


def _as_int_dec(dec):
    from monoidp import GluingDecomposition

    return GluingDecomposition(
        a1_indices=dec.a1_indices,
        a2_indices=dec.a2_indices,
        d=dec.d[0],
        u=dec.u,
        v=dec.v,
    )


class TestLemmaGlue1:
    def test_factorizations_of_d_split_by_part(self):
        s = sg(4, 6, 21)
        dec = check_gluing(as_affine(s), [0, 1])
        fiber = enumerate_factorizations(s.minimal_generators, 42).factorizations
        a1, a2 = set(dec.a1_indices), set(dec.a2_indices)
        for u in fiber:
            support = {i for i, c in enumerate(u) if c}
            assert support <= a1 or support <= a2
        assert any({i for i, c in enumerate(u) if c} <= a1 for u in fiber)
        assert any({i for i, c in enumerate(u) if c} <= a2 for u in fiber)


class TestTheorems:
    def test_betti_via_gluing_examples(self):
        s = sg(4, 6, 21)
        dec = _as_int_dec(check_gluing(as_affine(s), [0, 1]))
        assert betti_via_gluing(s, dec, [12], []) == [12, 42]
        assert betti_via_gluing(s, dec, [12], []) == betti_elements(s)

        aff = affine_from_generators(2, AFFINE_EXAMPLE)
        dec = check_gluing(aff, [0, 1, 2])
        assert betti_via_gluing(aff, dec, [(6, 3)], []) == [(2, 4), (6, 3)]

    def test_d_unique_presentation(self):
        s = sg(4, 6, 21)
        dec = _as_int_dec(check_gluing(as_affine(s), [0, 1]))
        assert not d_has_unique_presentation(s, dec, [12], [])  # 42-12=30 in S

        aff = affine_from_generators(2, AFFINE_EXAMPLE)
        adec = check_gluing(aff, [0, 1, 2])
        assert d_has_unique_presentation(aff, adec, [(6, 3)], [])
        assert d_has_unique_presentation(s, dec, [], [])

    def test_uniquely_presented_via_gluing_examples(self):
        aff = affine_from_generators(2, AFFINE_EXAMPLE)
        adec = check_gluing(aff, [0, 1, 2])
        ok = uniquely_presented_via_gluing(
            aff, adec, PartReport(True, ((6, 3),)), PartReport(True, ())
        )
        assert ok

        s = sg(4, 6, 21)
        dec = _as_int_dec(check_gluing(as_affine(s), [0, 1]))
        assert not uniquely_presented_via_gluing(
            s, dec, PartReport(True, (12,)), PartReport(True, ())
        )

        ed2 = sg(2, 3)
        dec2 = _as_int_dec(check_gluing(as_affine(ed2), [0]))
        assert uniquely_presented_via_gluing(
            ed2, dec2, PartReport(True, ()), PartReport(True, ())
        )


class TestGlueNumerical:
    def test_example(self):
        glued, dec = glue_numerical(sg(2, 3), 2, 5)
        assert glued.minimal_generators == (4, 5, 6)
        assert dec.d == 10
        assert dec.a2_indices == (1,)  # mu = 5 sits between 4 and 6

    def test_invalid(self):
        with pytest.raises(InvalidGluing):
            glue_numerical(sg(2, 3), 2, 2)  # gcd != 1 and mu is a generator
        with pytest.raises(InvalidGluing):
            glue_numerical(sg(2, 3), 2, 3)  # mu is a minimal generator
        with pytest.raises(InvalidGluing):
            glue_numerical(sg(2, 3), 1, 5)  # lambda too small
        with pytest.raises(InvalidGluing):
            glue_numerical(sg(2, 3), 2, 1)  # mu not in S1

    def test_glue_grid_cross_checks(self):
        from math import gcd

        parts = [(2, 3), (2, 5), (3, 4), (3, 5, 7), (4, 6, 21), (3, 4, 5), (5, 7, 9, 11)]
        checked = 0
        for gens in parts:
            s1 = numerical_from_generators(gens)
            for lam in (2, 3):
                mu = None
                for cand in range(2, 4 * max(gens)):
                    if (
                        s1.contains(cand)
                        and cand not in s1.minimal_generators
                        and gcd(lam, cand) == 1
                    ):
                        mu = cand
                        break
                if mu is None:
                    continue
                glued, dec = glue_numerical(s1, lam, mu)
                betti1 = [lam * b for b in betti_elements(s1)]
                assert betti_via_gluing(glued, dec, betti1, []) == betti_elements(glued)
                # every factorization of d lives entirely in one part
                a1, a2 = set(dec.a1_indices), set(dec.a2_indices)
                for u in enumerate_factorizations(glued.minimal_generators, dec.d):
                    support = {i for i, c in enumerate(u) if c}
                    assert support <= a1 or support <= a2
                expected_up = uniquely_presented_via_gluing(
                    glued,
                    dec,
                    PartReport(is_uniquely_presented(s1).answer, tuple(betti1)),
                    PartReport(True, ()),
                )
                assert expected_up == is_uniquely_presented(glued).answer
                checked += 1
        assert checked >= 10
