"""Exponent vectors, term orders, and word embeddings.

Points of N^m stand for monomials; divisibility is the componentwise
order.  Words are finite sequences of points, compared by the three
embedding quasi-orders used for ideal generators: subsequence (Higman),
commutative image (bipartite matching), and multiset.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import DataError, DimensionMismatch


def check_point(v):
    if not isinstance(v, tuple) or not v or any(
            not isinstance(x, int) or x < 0 for x in v):
        raise DataError(f"not a point of N^m: {v!r}")
    return v


def check_same_dim(u, v):
    if len(u) != len(v):
        raise DimensionMismatch(f"dimensions {len(u)} and {len(v)} differ")


def degree(v):
    return sum(v)


def support(v):
    """Indices (0-based) of the nonzero coordinates."""
    return tuple(i for i, x in enumerate(v) if x)


def divides(u, v):
    """Whether u <= v componentwise (the monomial x^u divides x^v)."""
    check_same_dim(u, v)
    return all(a <= b for a, b in zip(u, v))


def vec_add(u, v):
    check_same_dim(u, v)
    return tuple(a + b for a, b in zip(u, v))


def vec_max(u, v):
    """Componentwise max (the lcm of the two monomials)."""
    check_same_dim(u, v)
    return tuple(max(a, b) for a, b in zip(u, v))


def unit_vec(m, i, scale=1):
    v = [0] * m
    v[i] = scale
    return tuple(v)


@dataclass(frozen=True)
class TermOrder:
    """A term order on N^m: ``lex``, ``deglex``, or an integer matrix order.

    A matrix order compares u, v by the lexicographic order on A*u, A*v.
    The matrix must order every point after the origin, which holds when
    the first nonzero entry in each column is positive.
    """

    kind: str
    matrix: tuple = ()

    def __post_init__(self):
        if self.kind not in ("lex", "deglex", "matrix"):
            raise DataError(f"unknown term order {self.kind!r}")
        if self.kind == "matrix":
            rows = self.matrix
            if not rows or any(len(r) != len(rows[0]) for r in rows):
                raise DataError("matrix order needs a rectangular matrix")
            for j in range(len(rows[0])):
                col = [r[j] for r in rows]
                nz = next((x for x in col if x != 0), 0)
                if nz <= 0:
                    raise DataError(
                        f"matrix order column {j} does not order x{j + 1} "
                        "above 1")

    def key(self, v):
        if self.kind == "lex":
            return v
        if self.kind == "deglex":
            return (sum(v),) + v
        if len(self.matrix[0]) != len(v):
            raise DimensionMismatch(
                f"matrix has {len(self.matrix[0])} columns, point has "
                f"dimension {len(v)}")
        return tuple(sum(a * x for a, x in zip(row, v)) for row in self.matrix)

    def is_type_omega(self):
        """Whether the order has type omega (finitely many predecessors
        everywhere).  Holds for deglex, fails for lex on m >= 2, and for a
        matrix order amounts to a strictly positive first row."""
        if self.kind == "deglex":
            return True
        if self.kind == "lex":
            return False
        return all(x > 0 for x in self.matrix[0])


LEX = TermOrder("lex")
DEGLEX = TermOrder("deglex")


def term_cmp(order, u, v):
    """Three-way comparison of two points under a term order."""
    check_same_dim(u, v)
    if order.kind == "lex" or order.kind == "deglex":
        ku, kv = order.key(u), order.key(v)
    else:
        ku, kv = order.key(u), order.key(v)
        if ku == kv and u != v:
            raise DataError("matrix does not totally order these points")
    return (ku > kv) - (ku < kv)


def higman_leq(u, v):
    """Subsequence embedding: u embeds into v preserving order of positions,
    each letter mapping to a componentwise-larger letter.

    The greedy earliest-match scan is correct because any embedding can be
    pushed left.
    """
    j = 0
    for x in u:
        while j < len(v) and not divides(x, v[j]):
            j += 1
        if j == len(v):
            return False
        j += 1
    return True


def comm_leq(u, v):
    """Embedding with positions permuted freely: an injection from the
    letters of u to letters of v with each letter mapped above itself.

    Solved as bipartite matching (Kuhn's augmenting paths).
    """
    u, v = list(u), list(v)
    if len(u) > len(v):
        return False
    match = [-1] * len(v)

    def augment(i, seen):
        for j in range(len(v)):
            if not seen[j] and divides(u[i], v[j]):
                seen[j] = True
                if match[j] < 0 or augment(match[j], seen):
                    match[j] = i
                    return True
        return False

    for i in range(len(u)):
        if not augment(i, [False] * len(v)):
            return False
    return True


def multiset_leq(u, v):
    """Multiset embedding: cancel letters common to both words, then every
    leftover letter of u must divide some leftover letter of v."""
    cu, cv = Counter(u), Counter(v)
    common = cu & cv
    cu -= common
    cv -= common
    rest = list(cv)
    return all(any(divides(x, y) for y in rest) for x in cu)
