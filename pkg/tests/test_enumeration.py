import pytest

import oracles
from monoidp import (
    children,
    count_by_frobenius,
    numerical_from_generators,
    semigroups_with_frobenius,
    tree_node,
    tree_root,
)
from monoidp.errors import InvalidParams

# heads of the two sequences; the full length-20 run lives in the acceptance suite
TOTALS_12 = [1, 1, 2, 2, 5, 4, 11, 10, 21, 22, 51, 40]
UNIQUE_12 = [1, 1, 1, 1, 3, 1, 5, 2, 5, 4, 8, 2]


class TestChildren:
    def test_root(self):
        root = tree_root()
        assert root.semigroup.minimal_generators == (1,)
        assert root.semigroup.frobenius == -1
        kids = children(root)
        assert [k.semigroup.minimal_generators for k in kids] == [(2, 3)]
        assert kids[0].semigroup.frobenius == 1

    def test_two_three(self):
        node = tree_node(numerical_from_generators([2, 3]))
        kids = children(node)
        assert sorted(k.semigroup.minimal_generators for k in kids) == [(2, 5), (3, 4, 5)]
        for k in kids:
            assert k.semigroup.frobenius in (2, 3)

    def test_two_five(self):
        node = tree_node(numerical_from_generators([2, 5]))
        assert node.removable == (5,)  # 2 < frobenius 3 is not removable
        kids = children(node)
        assert [k.semigroup.minimal_generators for k in kids] == [(2, 7)]
        assert kids[0].semigroup.frobenius == 5

    def test_frobenius_strictly_increases(self):
        frontier = [tree_root()]
        for _ in range(5):
            nxt = []
            for node in frontier:
                for kid in children(node):
                    assert kid.semigroup.frobenius > node.semigroup.frobenius
                    nxt.append(kid)
            frontier = nxt


class TestSemigroupsWithFrobenius:
    def test_examples(self):
        got = semigroups_with_frobenius(1)
        assert [s.minimal_generators for s in got] == [(2, 3)]
        assert len(semigroups_with_frobenius(4)) == 2
        assert len(semigroups_with_frobenius(7)) == 11

    def test_every_result_has_the_right_frobenius(self):
        for f in (3, 6, 9):
            for s in semigroups_with_frobenius(f):
                assert s.frobenius == f

    @pytest.mark.parametrize("f", range(1, 9))
    def test_complete_against_gap_set_oracle(self, f):
        got = {s.minimal_generators for s in semigroups_with_frobenius(f)}
        assert got == oracles.gap_set_semigroups_with_frobenius(f)

    def test_no_duplicates_and_sorted(self):
        out = [s.minimal_generators for s in semigroups_with_frobenius(9)]
        assert out == sorted(set(out))

    def test_invalid(self):
        with pytest.raises(InvalidParams):
            semigroups_with_frobenius(0)


class TestCountByFrobenius:
    def test_head(self):
        assert count_by_frobenius(1) == ([1], [1])

    def test_first_twelve(self):
        totals, unique = count_by_frobenius(12)
        assert totals == TOTALS_12
        assert unique == UNIQUE_12

    def test_workers_agree_with_sequential(self):
        assert count_by_frobenius(9, workers=3) == count_by_frobenius(9)
        seq = [s.minimal_generators for s in semigroups_with_frobenius(8)]
        par = [s.minimal_generators for s in semigroups_with_frobenius(8, workers=2)]
        assert seq == par
