"""Enumeration of numerical semigroups by Frobenius number.

The semigroup tree is rooted at N; the children of S are the sets S \\ {g}
for each minimal generator g greater than the Frobenius number of S.  Every
such child is again a numerical semigroup with Frobenius number g, so
Frobenius numbers strictly increase along every root-to-leaf path and a
branch can be pruned as soon as it reaches the target.

Internally each node is a membership bitmask (bit n set iff n is a member),
which makes removing a generator a single bit clear and recovers the minimal
generators as members that are not sums of two members.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass

from .errors import InvalidParams
from .presentations import is_uniquely_presented
from .semigroups import (
    NumericalSemigroup,
    _closure_bits,
    _from_minimal_generators,
)


@dataclass(frozen=True)
class TreeNode:
    """A tree position: the semigroup plus its removable minimal generators."""

    semigroup: NumericalSemigroup
    removable: tuple[int, ...]


def tree_node(sg: NumericalSemigroup) -> TreeNode:
    return TreeNode(
        semigroup=sg,
        removable=tuple(g for g in sg.minimal_generators if g > sg.frobenius),
    )


def tree_root() -> TreeNode:
    return tree_node(_from_minimal_generators((1,)))


def _minimal_generators_from_bits(bits: int, upto: int) -> tuple[int, ...]:
    """Members n <= upto that are not sums of two nonzero members.

    `bits` must be a faithful membership mask at least up to 2*upto so the
    sum mask is complete on [0, upto].
    """
    positive = bits & ~1
    sums = 0
    probe = positive
    while probe:
        low = probe & -probe
        s = low.bit_length() - 1
        if s > upto:
            break
        sums |= positive << s
        probe &= probe - 1
    cand = positive & ~sums
    out = []
    while cand:
        low = cand & -cand
        g = low.bit_length() - 1
        if g > upto:
            break
        out.append(g)
        cand &= cand - 1
    return tuple(out)


def children(node: TreeNode) -> list[TreeNode]:
    """One child per removable generator g: the semigroup S \\ {g} (Frobenius g)."""
    sg = node.semigroup
    out = []
    for g in node.removable:
        limit = 4 * g + 4
        bits = _closure_bits(sg.minimal_generators, limit) & ~(1 << g)
        gens = _minimal_generators_from_bits(bits, 2 * g + 1)
        child = _from_minimal_generators(gens)
        assert child.frobenius == g > sg.frobenius
        out.append(tree_node(child))
    return out


def _walk(stack: list[tuple[int, int]], f_max: int, buckets: dict[int, list]) -> None:
    """Depth-first bitmask walk; collects minimal generator tuples per Frobenius."""
    upto = 2 * f_max + 1
    while stack:
        bits, frob = stack.pop()
        gens = _minimal_generators_from_bits(bits, max(upto, 1))
        if frob >= 1:
            buckets[frob].append(gens)
        if frob < f_max:
            for g in gens:
                if frob < g <= f_max:
                    assert g > frob  # Frobenius numbers strictly increase downward
                    stack.append((bits & ~(1 << g), g))


def _collect_buckets(f_max: int, workers: int) -> dict[int, list[tuple[int, ...]]]:
    limit = 4 * f_max + 6
    root = ((1 << (limit + 1)) - 1, -1)
    buckets: dict[int, list] = {f: [] for f in range(1, f_max + 1)}
    if workers <= 1:
        _walk([root], f_max, buckets)
    else:
        # expand breadth-first until there are enough independent subtrees
        frontier = [root]
        upto = 2 * f_max + 1
        while frontier and len(frontier) < 4 * workers:
            grown = []
            for bits, frob in frontier:
                gens = _minimal_generators_from_bits(bits, max(upto, 1))
                if frob >= 1:
                    buckets[frob].append(gens)
                if frob < f_max:
                    for g in gens:
                        if frob < g <= f_max:
                            grown.append((bits & ~(1 << g), g))
            if not grown:
                frontier = []
                break
            frontier = grown

        def subtree(node):
            part: dict[int, list] = {f: [] for f in range(1, f_max + 1)}
            _walk([node], f_max, part)
            return part

        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(subtree, frontier):
                for f, items in part.items():
                    buckets[f].extend(items)
    for f in buckets:
        buckets[f].sort()
    return buckets


def semigroups_with_frobenius(f: int, workers: int = 1) -> list[NumericalSemigroup]:
    """All numerical semigroups with Frobenius number exactly f, each once,
    sorted by minimal generator tuple."""
    if f < 1:
        raise InvalidParams(f"the Frobenius number must be at least 1, got {f}")
    buckets = _collect_buckets(f, workers)
    return [_from_minimal_generators(gens) for gens in buckets[f]]


def count_by_frobenius(f_max: int, workers: int = 1) -> tuple[list[int], list[int]]:
    """(total count, uniquely presented count) for each Frobenius number 1..f_max."""
    if f_max < 1:
        raise InvalidParams(f"f_max must be at least 1, got {f_max}")
    buckets = _collect_buckets(f_max, workers)
    totals = []
    unique = []
    seen: dict[tuple[int, ...], bool] = {}
    for f in range(1, f_max + 1):
        totals.append(len(buckets[f]))
        hits = 0
        for gens in buckets[f]:
            answer = seen.get(gens)
            if answer is None:
                answer = is_uniquely_presented(_from_minimal_generators(gens)).answer
                seen[gens] = answer
            hits += answer
        unique.append(hits)
    return totals, unique
