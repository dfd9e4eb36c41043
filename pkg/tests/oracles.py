"""Independent brute-force oracles used to freeze expected values.

Nothing here imports algorithmic code from the package under test (only the
exception-free data access needed to read results).  Each oracle goes the
dumbest correct way: dynamic-programming membership, literal nested loops per
arity, breadth-first connectivity, Cramer-style divisibility for lattices.
"""

from itertools import combinations
from math import gcd


def members_upto(gens, limit):
    """Membership set of <gens> on [0, limit] by dynamic programming."""
    member = [False] * (limit + 1)
    member[0] = True
    for n in range(1, limit + 1):
        member[n] = any(g <= n and member[n - g] for g in gens)
    return {n for n in range(limit + 1) if member[n]}


def brute_frobenius(gens):
    """Largest non-member, by scanning until min(gens) consecutive members."""
    m = min(gens)
    limit = 4 * max(gens)
    while True:
        mem = members_upto(gens, limit)
        run = 0
        for n in range(limit + 1):
            run = run + 1 if n in mem else 0
            if run == m:
                # a run of m consecutive members makes everything above reachable
                non = [k for k in range(n + 1) if k not in mem]
                return non[-1] if non else -1
        limit *= 2


def brute_gaps(gens):
    f = brute_frobenius(gens)
    if f < 0:
        return []
    mem = members_upto(gens, f)
    return [n for n in range(f + 1) if n not in mem]


def nested_loop_factorizations(atoms, target):
    """Literal nested loops (one hand-written block per arity up to 5)."""
    sols = []
    t = target
    if len(atoms) == 1:
        (a,) = atoms
        for u0 in range(t // a + 1):
            if u0 * a == t:
                sols.append((u0,))
    elif len(atoms) == 2:
        a, b = atoms
        for u0 in range(t // a + 1):
            for u1 in range(t // b + 1):
                if u0 * a + u1 * b == t:
                    sols.append((u0, u1))
    elif len(atoms) == 3:
        a, b, c = atoms
        for u0 in range(t // a + 1):
            for u1 in range(t // b + 1):
                for u2 in range(t // c + 1):
                    if u0 * a + u1 * b + u2 * c == t:
                        sols.append((u0, u1, u2))
    elif len(atoms) == 4:
        a, b, c, d = atoms
        for u0 in range(t // a + 1):
            for u1 in range(t // b + 1):
                for u2 in range(t // c + 1):
                    for u3 in range(t // d + 1):
                        if u0 * a + u1 * b + u2 * c + u3 * d == t:
                            sols.append((u0, u1, u2, u3))
    elif len(atoms) == 5:
        a, b, c, d, e = atoms
        for u0 in range(t // a + 1):
            for u1 in range(t // b + 1):
                for u2 in range(t // c + 1):
                    for u3 in range(t // d + 1):
                        for u4 in range(t // e + 1):
                            if u0 * a + u1 * b + u2 * c + u3 * d + u4 * e == t:
                                sols.append((u0, u1, u2, u3, u4))
    else:
        raise ValueError("oracle written for at most 5 atoms")
    return sorted(sols, reverse=True)


def bfs_r_classes(fiber):
    """Connected components under nonzero dot product, by breadth-first search."""
    fiber = list(fiber)
    unvisited = set(range(len(fiber)))
    classes = []
    while unvisited:
        start = min(unvisited)
        queue = [start]
        unvisited.discard(start)
        comp = {start}
        while queue:
            i = queue.pop()
            for j in list(unvisited):
                if sum(x * y for x, y in zip(fiber[i], fiber[j])):
                    unvisited.discard(j)
                    comp.add(j)
                    queue.append(j)
        classes.append(sorted(fiber[i] for i in comp))
    return classes


def brute_betti(gens, limit):
    """Betti elements <= limit via the nested-loop fiber and BFS classes."""
    out = []
    for s in range(limit + 1):
        fiber = nested_loop_factorizations(list(gens), s)
        if len(fiber) >= 2 and len(bfs_r_classes(fiber)) >= 2:
            out.append(s)
    return out


def gap_set_semigroups_with_frobenius(f):
    """All numerical semigroups with Frobenius number f, as gap-set subsets.

    Returns the set of minimal-generator tuples.  A candidate gap set is any
    subset of {1..f-1} together with f whose complement is closed under
    addition (sums above f are always members).
    """
    out = set()
    pool = list(range(1, f))
    for k in range(len(pool) + 1):
        for extra in combinations(pool, k):
            gaps = set(extra) | {f}
            members = [n for n in range(2 * f + 3) if n == 0 or (n not in gaps and n >= 1)]
            ok = True
            for a in members:
                if a == 0 or a > f:
                    continue
                for b in members:
                    if b == 0 or a + b > f:
                        continue
                    if a + b in gaps:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            gens = [
                n
                for n in members
                if n
                and not any(
                    a and b and a + b == n for a in members for b in members
                )
            ]
            out.add(tuple(sorted(gens)))
    return out


def lattice_member_2d(rows, v):
    """Exact membership of v in the 2-d lattice spanned by `rows` (rank <= 2),
    independent of any row-reduction code.

    Rank 2 uses the index characterization: the index of the lattice in Z^2 is
    the gcd of all 2x2 minors of a generating row list, and appending v leaves
    the index unchanged iff v already belongs to the lattice.
    """
    rows = [r for r in rows if any(r)]
    if not rows:
        return not any(v)

    def minor_gcd(rs):
        g = 0
        for i in range(len(rs)):
            for j in range(i + 1, len(rs)):
                g = gcd(g, rs[i][0] * rs[j][1] - rs[i][1] * rs[j][0])
        return g

    index = minor_gcd(rows)
    if index:
        return minor_gcd(rows + [list(v)]) == index
    # rank 1: all rows proportional; reduce to the primitive direction
    b = rows[0]
    g = gcd(b[0], b[1])
    direction = (b[0] // g, b[1] // g)
    steps = set()
    for r in rows:
        if r[0] * direction[1] != r[1] * direction[0]:
            return False
        c = r[0] // direction[0] if direction[0] else r[1] // direction[1]
        steps.add(c)
    step = 0
    for c in steps:
        step = gcd(step, c)
    if v[0] * direction[1] != v[1] * direction[0]:
        return False
    cv = v[0] // direction[0] if direction[0] else v[1] // direction[1]
    if direction[0] and cv * direction[0] != v[0]:
        return False
    if direction[1] and cv * direction[1] != v[1]:
        return False
    return cv % step == 0
