"""Integer-valued polynomials in the binomial basis, plus Macaulay bounds.

A polynomial is stored by its coordinates (b_0, ..., b_d) in the basis
C(T+i, i), so p(T) = sum b_i * C(T+i, i).  Every polynomial taking integer
values on the integers has a unique such expansion with integer b_i.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .errors import DataError


def binomial(x, k):
    """C(x, k) for any integer x and natural k (polynomial extension)."""
    if k < 0:
        raise ValueError("lower index must be a natural number")
    num = 1
    for j in range(k):
        num *= x - j
    return num // math.factorial(k)


class IVPoly:
    """An integer-valued polynomial in the binomial basis."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self):
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __call__(self, t):
        return sum(b * binomial(t + i, i) for i, b in enumerate(self.coeffs))

    def __eq__(self, other):
        return isinstance(other, IVPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        a += (0,) * (n - len(a))
        b += (0,) * (n - len(b))
        return IVPoly(x + y for x, y in zip(a, b))

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, k):
        return IVPoly(k * b for b in self.coeffs)

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in reversed(range(len(self.coeffs))):
            b = self.coeffs[i]
            if b == 0:
                continue
            basis = f"C(T+{i},{i})" if i > 0 else ""
            mag = abs(b)
            if basis:
                term = basis if mag == 1 else f"{mag}*{basis}"
            else:
                term = str(mag)
            parts.append(("- " if b < 0 else "+ ") + term)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    def __repr__(self):
        return f"IVPoly({self.coeffs!r})"


def binom_poly(c, k):
    """The polynomial C(T - c + k, k) as an IVPoly."""
    return from_samples([binomial(t - c + k, k) for t in range(k + 1)])


def from_samples(values, start=0):
    """Recover the unique polynomial of degree < len(values) through the
    samples p(start), p(start+1), ...

    Coordinates come from the forward-difference table:
    b_k = sum_j (-1)^j C(k + start + j, j) D^{k+j} p(start).
    """
    if not values:
        raise ValueError("need at least one sample")
    table = [list(values)]
    while len(table[-1]) > 1:
        row = table[-1]
        table.append([row[i + 1] - row[i] for i in range(len(row) - 1)])
    diffs = [row[0] for row in table]
    coeffs = []
    for k in range(len(values)):
        b = sum((-1) ** j * binomial(k + start + j, j) * diffs[k + j]
                for j in range(len(diffs) - k))
        coeffs.append(b)
    return IVPoly(coeffs)


def shift(p, k):
    """The polynomial T |-> p(T + k)."""
    d = max(p.degree, 0)
    return from_samples([p(k + t) for t in range(d + 1)])


def dominance_cmp(p, q):
    """Compare by the lexicographic order on (b_d, ..., b_0), padding the
    shorter coefficient vector with zeros."""
    a, b = p.coeffs, q.coeffs
    n = max(len(a), len(b))
    a += (0,) * (n - len(a))
    b += (0,) * (n - len(b))
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return -1 if x < y else 1
    return 0


class MacaulayRep(NamedTuple):
    """The d-th Macaulay representation a = C(a_d,d) + ... + C(a_1,1)."""

    d: int
    tops: tuple  # (a_d, ..., a_1), strictly decreasing, a_1 >= 0

    def value(self):
        return sum(binomial(a, i) for a, i in zip(self.tops, range(self.d, 0, -1)))


def macaulay_rep(a, d):
    """Greedy d-th Macaulay representation of a natural number a."""
    if d < 1:
        raise DataError("d must be >= 1")
    if a < 1:
        raise DataError("a must be positive (0 has no representation)")
    tops = []
    rem = a
    prev = None
    for i in range(d, 0, -1):
        c = i - 1 if prev is None else min(prev - 1, max(i - 1, 0))
        # largest c (below the previous top) with C(c, i) <= rem
        c = max(c, 0)
        while (prev is None or c + 1 < prev) and binomial(c + 1, i) <= rem:
            c += 1
        tops.append(c)
        rem -= binomial(c, i)
        prev = c
    if rem != 0:
        raise AssertionError("greedy representation failed")
    return MacaulayRep(d, tuple(tops))


def macaulay_next(a, d):
    """The Macaulay bound a^<d>: raise every top and index by one.

    0^<d> is 0.
    """
    if a == 0:
        return 0
    rep = macaulay_rep(a, d)
    return sum(binomial(t + 1, i + 1)
               for t, i in zip(rep.tops, range(d, 0, -1)))


class OSequenceCheck(NamedTuple):
    ok: bool
    violation: int | None  # first failing index: 0 or 1 for the anchor
    # conditions, the step n for a growth failure f(n+1) > f(n)^<n>
    f1_exact: bool  # whether f(1) equals the ambient dimension m


def is_osequence(values, m):
    """Check a finite prefix f(0), f(1), ... against Macaulay's growth bound
    for Hilbert functions of ideals in m variables.

    Requires f(0) = 1, f(1) <= m, and f(n+1) <= f(n)^<n> for n >= 1.  The
    flag ``f1_exact`` records whether f(1) hits m, which is where honest
    Hilbert functions of proper monomial ideals sit.
    """
    if m < 1:
        raise DataError("m must be >= 1")
    values = list(values)
    if not values:
        raise DataError("need at least f(0)")
    if any(v < 0 for v in values):
        first = next(i for i, v in enumerate(values) if v < 0)
        return OSequenceCheck(False, first, False)
    if values[0] != 1:
        return OSequenceCheck(False, 0, False)
    f1_exact = len(values) > 1 and values[1] == m
    if len(values) > 1 and values[1] > m:
        return OSequenceCheck(False, 1, False)
    for n in range(1, len(values) - 1):
        if values[n + 1] > macaulay_next(values[n], n):
            return OSequenceCheck(False, n, f1_exact)
    return OSequenceCheck(True, None, f1_exact)
