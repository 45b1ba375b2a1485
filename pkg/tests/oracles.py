"""Independent brute-force oracles and random generators shared by tests.

Everything here recomputes results from first principles (enumeration,
exhaustive search, naive matching) so the library has something honest to
be checked against.
"""

import itertools
import random
from functools import lru_cache

from monord import divides, normalize


def points_of_degree(m, n):
    """All points of N^m with degree exactly n."""
    if m == 1:
        return [(n,)]
    out = []
    for first in range(n + 1):
        out.extend((first,) + rest for rest in points_of_degree(m - 1, n - first))
    return out


def points_up_to(m, d):
    return [v for n in range(d + 1) for v in points_of_degree(m, n)]


def in_ideal(gens, v):
    return any(all(a <= b for a, b in zip(g, v)) for g in gens)


def naive_hilbert(e, n):
    """Count degree-n points outside e by enumeration."""
    return sum(1 for v in points_of_degree(e.dim, n) if not in_ideal(e.gens, v))


def naive_hilbert_samuel(e, s):
    return sum(naive_hilbert(e, n) for n in range(s + 1))


def slice_count(e, s):
    """h_e(s) by recursion on the last coordinate; independent of the
    library's inclusion-exclusion."""

    def gens_slice(gens, j):
        return tuple(sorted({g[:-1] for g in gens if g[-1] <= j}))

    @lru_cache(maxsize=None)
    def count(gens, m, budget):
        if budget < 0:
            return 0
        if in_ideal(gens, (0,) * m):
            return 0
        if m == 1:
            bound = min((g[0] for g in gens), default=budget + 1)
            return min(bound, budget + 1)
        return sum(count(gens_slice(gens, j), m - 1, budget - j)
                   for j in range(budget + 1))

    return count(tuple(e.gens), e.dim, s)


def brute_comm_leq(u, v):
    """Injective domination by trying all position assignments."""
    u, v = list(u), list(v)
    if len(u) > len(v):
        return False
    for perm in itertools.permutations(range(len(v)), len(u)):
        if all(divides(u[i], v[j]) for i, j in enumerate(perm)):
            return True
    return False


def random_point(rng, m, max_deg):
    d = rng.randint(0, max_deg)
    cuts = sorted(rng.randint(0, d) for _ in range(m - 1))
    parts = []
    prev = 0
    for c in cuts:
        parts.append(c - prev)
        prev = c
    parts.append(d - prev)
    return tuple(parts)


def random_ideal(rng, m, max_gens, max_deg, allow_zero=False, allow_unit=False):
    while True:
        r = rng.randint(0, max_gens)
        pts = [random_point(rng, m, max_deg) for _ in range(r)]
        e = normalize(m, pts)
        if e.is_zero() and not allow_zero:
            continue
        if e.is_unit() and not allow_unit:
            continue
        return e


def random_artinian_staircase(rng, colength):
    """A random Artinian ideal in N^2 whose complement has exactly
    ``colength`` cells: a Young-diagram staircase."""
    heights = []
    left = colength
    while left > 0:
        cap = min(left, heights[-1] if heights else left)
        h = rng.randint(1, cap)
        heights.append(h)
        left -= h
    heights.sort(reverse=True)
    gens = [(len(heights), 0)]
    for i, h in enumerate(heights):
        gens.append((i, h))
    return normalize(2, gens)


def downsets(points):
    """All downward-closed subsets of a finite set of points of N^m."""
    points = list(points)
    out = []
    for bits in itertools.product((0, 1), repeat=len(points)):
        chosen = [p for p, b in zip(points, bits) if b]
        cset = set(chosen)
        if all(q in cset or not divides(q, p)
               for p in chosen for q in points):
            out.append(frozenset(cset))
    return out


def longest_downset_chain(cells):
    """Length (number of strict steps) of the longest chain of down-sets
    from the empty set to the full complement, by DP over the lattice."""
    sets = downsets(cells)
    sets.sort(key=len)
    best = {frozenset(): 0}
    for s in sets:
        if not s:
            continue
        best[s] = 1 + max(best[t] for t in sets
                          if t < s and t in best)
    return best[frozenset(cells)]


def antichains(points):
    """All divisibility antichains within a point list."""
    out = [()]
    for p in points:
        out.extend(c + (p,) for c in list(out)
                   if not any(divides(q, p) or divides(p, q) for q in c))
    return out


def max_decreasing_sequence(m, f_values, stable_at):
    """Exhaustive longest f-bounded lex-decreasing sequence in N^m.

    ``f_values(i)`` gives the degree bound at step i; bounds must be
    constant from index ``stable_at`` on so the memo key can collapse.
    """
    universe = points_up_to(m, max(f_values(i) for i in range(stable_at + 1)))
    universe.sort(reverse=True)

    @lru_cache(maxsize=None)
    def longest(last, key):
        i = key
        best = 0
        for v in universe:
            if (last is None or v < last) and sum(v) <= f_values(i):
                best = max(best, 1 + longest(v, min(i + 1, stable_at)))
        return best

    return longest(None, 0)
