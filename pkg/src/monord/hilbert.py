"""Hilbert functions, Hilbert-Samuel polynomials, and the ordinal invariant.

For a final segment E of N^m, H_E(n) counts the degree-n points outside E
and h_E(s) = sum of H_E over degrees <= s.  From some threshold on, h_E
agrees with an integer-valued polynomial p_E; its minimizing coefficients
give the ordinal psi(E) < w^m + 1 that measures the height of E in the
containment order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import BudgetExceeded, DataError, WindowExhausted
from .ivpoly import IVPoly, binom_poly, binomial, from_samples, macaulay_next, shift
from .monom import degree, vec_max
from .ordinal import ZERO, Ord, omega_pow


def _subset_lcm_degrees(gens, max_gens):
    """Degrees of lcms of all nonempty generator subsets, with signs.

    Yields (sign, degree) where sign is (-1)^(|S|+1); the inclusion-
    exclusion workhorse.
    """
    if len(gens) > max_gens:
        raise BudgetExceeded(
            f"{len(gens)} generators exceed the inclusion-exclusion cap "
            f"({max_gens}); use complement_count_by_slices instead",
            spent=len(gens))
    lcms = {0: None}
    out = []
    for mask in range(1, 1 << len(gens)):
        low = (mask & -mask).bit_length() - 1
        rest = lcms[mask & (mask - 1)]
        cur = gens[low] if rest is None else vec_max(gens[low], rest)
        lcms[mask] = cur
        out.append((1 if bin(mask).count("1") % 2 else -1, sum(cur)))
    return out


def threshold(e):
    """Degree of the lcm of all generators: past it, h_E is polynomial.

    This equals the largest lcm degree over generator subsets, since lcms
    only grow as subsets do.  Zero for the zero and unit ideals.
    """
    if e.is_zero():
        return 0
    lcm = e.gens[0]
    for g in e.gens[1:]:
        lcm = vec_max(lcm, g)
    return sum(lcm)


def hilbert_fn(e, n, max_gens=16):
    """H_E(n): the number of degree-n points of N^m outside E."""
    if n < 0:
        raise DataError("degree must be a natural number")
    m = e.dim
    total = binomial(n + m - 1, m - 1)
    inside = sum(sign * binomial(n - c + m - 1, m - 1)
                 for sign, c in _subset_lcm_degrees(e.gens, max_gens)
                 if n >= c)
    return total - inside


def hilbert_samuel_fn(e, s, max_gens=16):
    """h_E(s): the number of points of degree <= s outside E."""
    if s < 0:
        raise DataError("degree must be a natural number")
    m = e.dim
    total = binomial(s + m, m)
    inside = sum(sign * binomial(s - c + m, m)
                 for sign, c in _subset_lcm_degrees(e.gens, max_gens)
                 if s >= c)
    return total - inside


def complement_count_by_slices(e, s):
    """h_E(s) by direct lattice counting, slicing off the last coordinate.

    Linear in s per slice instead of exponential in the generator count;
    the fallback when inclusion-exclusion is too wide.
    """
    from .ideal import slice_last

    memo = {}

    def count(f, budget):
        if budget < 0:
            return 0
        if f.is_unit():
            return 0
        key = (f.gens, f.dim, budget)
        if key in memo:
            return memo[key]
        if f.dim == 1:
            if f.is_zero():
                out = budget + 1
            else:
                out = min(f.gens[0][0], budget + 1)
        else:
            out = sum(count(slice_last(f, j), budget - j)
                      for j in range(budget + 1))
        memo[key] = out
        return out

    if s < 0:
        raise DataError("degree must be a natural number")
    return count(e, s)


def hilbert_samuel_poly(e, max_gens=16):
    """The polynomial p_E with h_E(s) = p_E(s) for all s >= threshold(e).

    Returns the pair (p_E, threshold).  Falls back to sampling h_E just
    past the threshold when the generator count exceeds ``max_gens``.
    """
    m = e.dim
    t = threshold(e)
    if len(e.gens) <= max_gens:
        p = binom_poly(0, m)
        for sign, c in _subset_lcm_degrees(e.gens, max_gens):
            p = p - binom_poly(c, m).scale(sign)
        return p, t
    samples = [complement_count_by_slices(e, t + i) for i in range(m + 1)]
    return shift(from_samples(samples), -t), t


class MinimizingCoefficients(NamedTuple):
    """Result of the coefficient recursion: c = (c_{m-1}, ..., c_0)."""

    c: tuple
    valid: bool
    first_negative: int | None  # position i of the first c_i < 0, if any


def minimizing_coefficients(p, m):
    """The coefficient tuple behind psi_p = w^(m-1)*c_{m-1} + ... + c_0.

    p must be nonzero of degree < m.  A polynomial is the Hilbert-Samuel
    polynomial of some nonzero proper ideal exactly when all c_i come out
    nonnegative; ``valid`` reports that, with the offending position.
    """
    if p.is_zero():
        raise DataError("p must be nonzero (the unit ideal has no psi)")
    if p.degree >= m:
        raise DataError(f"degree {p.degree} is too big for N^{m}")
    c = _coeff_recursion(p)
    c = [0] * (m - len(c)) + c
    first_neg = None
    for i in range(m):  # positions counted from c_0
        if c[m - 1 - i] < 0:
            first_neg = i
            break
    return MinimizingCoefficients(tuple(c), first_neg is None, first_neg)


def _coeff_recursion(p):
    """The descending coefficient list (c_d, ..., c_0) for p of degree d."""
    d = p.degree
    if d <= 0:
        return [p.coeffs[0] if p.coeffs else 0]
    bd = p.coeffs[d]
    q = shift(p, bd) - binom_poly(-bd, d + 1) + binom_poly(0, d + 1)
    if q.degree >= d:
        raise AssertionError("leading terms failed to cancel")
    inner = _coeff_recursion(q)
    return [bd] + [0] * (d - len(inner)) + inner


def psi_poly(p, m):
    """The ordinal psi_p < w^m + 1 attached to a realizable polynomial.

    By convention psi of C(T+m, m) itself (the zero ideal) is w^m; any
    other polynomial must have degree < m and nonnegative minimizing
    coefficients.
    """
    if p == binom_poly(0, m):
        return omega_pow(m)
    mc = minimizing_coefficients(p, m)
    if not mc.valid:
        raise DataError(
            f"no ideal realizes this polynomial (c_{mc.first_negative} < 0)")
    terms = []
    for i, ci in enumerate(mc.c):
        if ci:
            terms.append((Ord.from_int(m - 1 - i), ci))
    return Ord(tuple(terms))


def a_sequence(c):
    """The canonical weakly decreasing exponent list: c_i copies of i,
    read from the top coefficient down."""
    m = len(c)
    out = []
    for i, ci in enumerate(c):
        if ci < 0:
            raise DataError("coefficients must be nonnegative")
        out.extend([m - 1 - i] * ci)
    return out


def poly_from_a_sequence(seq):
    """Rebuild the polynomial sum_k C(T + a_k - (k-1), a_k) from its
    canonical exponent list."""
    p = IVPoly()
    for k, a in enumerate(seq, start=1):
        if a < 0:
            raise DataError("exponents must be natural numbers")
        p = p + binom_poly(k - 1, a)
    return p


def canonical_decomposition(p, m):
    """The canonical exponent list a_1 >= ... >= a_s of a realizable p;
    poly_from_a_sequence inverts it exactly."""
    mc = minimizing_coefficients(p, m)
    if not mc.valid:
        raise DataError(
            f"no ideal realizes this polynomial (c_{mc.first_negative} < 0)")
    return tuple(a_sequence(mc.c))


def phi_poly(p, m):
    """phi(p): the length of the canonical exponent list, i.e. the number
    of summands when p is written degreewise."""
    return len(canonical_decomposition(p, m))


def realize_poly(p, m):
    """An ideal in N^m whose Hilbert-Samuel polynomial is exactly p.

    Follows the recursion that validates p: peel the leading coefficient
    b_d as a slab of b_d hyperplane layers in the last variable and
    realize the remainder q one variable down, giving
    E = (x_m^(b_d + 1)) + x_m^(b_d) * J.
    """
    from .ideal import normalize
    from .monom import unit_vec

    mc = minimizing_coefficients(p, m)  # also validates the preconditions
    if not mc.valid:
        raise DataError(
            f"no ideal realizes this polynomial (c_{mc.first_negative} < 0)")
    d = p.degree
    if d <= 0:
        k = p.coeffs[0]
        gens = [unit_vec(m, m - 1, k)] + [unit_vec(m, i) for i in range(m - 1)]
        return normalize(m, gens)
    if d + 1 < m:
        # the slab construction needs m = d + 1; realize there, then kill
        # the extra variables so the complement (and h) is unchanged
        inner = realize_poly(p, d + 1)
        gens = [g + (0,) * (m - d - 1) for g in inner.gens]
        gens += [unit_vec(m, i) for i in range(d + 1, m)]
        return normalize(m, gens)
    bd = p.coeffs[d]
    q = shift(p, bd) - binom_poly(-bd, d + 1) + binom_poly(0, d + 1)
    gens = [unit_vec(m, m - 1, bd + 1)]
    if q.is_zero():
        inner_gens = [(0,) * (m - 1)]
    else:
        inner_gens = realize_poly(q, m - 1).gens
    gens.extend(g + (bd,) for g in inner_gens)
    return normalize(m, gens)


def psi_ideal(e):
    """psi(E) for a nonzero proper ideal; the height of E among final
    segments ordered by reverse containment."""
    p, _ = hilbert_samuel_poly(e)
    return psi_poly(p, e.dim)


def height(e):
    """Height of E in the containment order: 0 for the unit ideal, w^m for
    the zero ideal, psi(E) in between."""
    if e.is_unit():
        return ZERO
    if e.is_zero():
        return omega_pow(e.dim)
    return psi_ideal(e)


class N0Result(NamedTuple):
    n0: int
    window: int  # H was inspected on degrees up to this bound
    certified: bool


def stability_index(e, margin=8, max_window=None):
    """n0(E): least n0 with H(n+1) = H(n)^<n> for every n >= n0.

    Certified by scanning past max(threshold + 1, phi(p_E)), beyond which
    Macaulay growth is provably exact; ``margin`` extra degrees are
    scanned as a sanity check.  A ``max_window`` below the certification
    point raises WindowExhausted.
    """
    if e.is_zero() or e.is_unit():
        raise DataError("stability index needs a nonzero proper ideal")
    p, t = hilbert_samuel_poly(e)
    cert = max(t + 1, phi_poly(p, e.dim))
    window = max(cert + 1, t + e.dim + margin)
    if max_window is not None:
        if max_window < cert + 1:
            raise WindowExhausted(
                f"window {max_window} ends before the certified bound "
                f"{cert + 1}")
        window = min(window, max_window)
    hvals = [hilbert_fn(e, n) for n in range(window + 1)]
    n0 = 1
    for n in range(1, window):
        if hvals[n + 1] != macaulay_next(hvals[n], n):
            if n >= cert:
                raise AssertionError("growth broke past the certified bound")
            n0 = n + 1
    return N0Result(n0, window, True)


def _points_of_degree(m, n):
    """Degree-n points of N^m in increasing lex order."""
    if m == 1:
        return [(n,)]
    out = []
    for first in range(n + 1):
        out.extend((first,) + rest for rest in _points_of_degree(m - 1, n - first))
    return out


def lex_segment_ideal(e, bound):
    """The lex segment with the same Hilbert function as e.

    In each degree n <= bound, keep all but the first H_E(n) points in
    increasing lex order.  Every generator of e must have degree at most
    ``bound``, and the kept layers must glue into a final segment;
    otherwise the bound is too small and a DataError is raised.
    """
    from .ideal import normalize

    m = e.dim
    if any(degree(g) > bound for g in e.gens):
        raise DataError(
            f"bound {bound} is below a generator degree; no lex segment "
            "can be read off")
    layers = []
    for n in range(bound + 1):
        pts = _points_of_degree(m, n)
        h = hilbert_fn(e, n)
        layers.append(set(pts[h:]))
    for n in range(bound):
        for v in layers[n]:
            for i in range(m):
                w = v[:i] + (v[i] + 1,) + v[i + 1:]
                if w not in layers[n + 1]:
                    raise DataError(
                        f"bound {bound} too small: layer {n} does not "
                        "extend upward")
    return normalize(m, (v for layer in layers for v in layer))


@dataclass(frozen=True)
class HilbertProfile:
    """Everything the polynomial side knows about one ideal."""

    dim: int
    p: IVPoly
    threshold: int
    c: tuple | None  # minimizing coefficients, None for zero/unit ideal
    psi: Ord
    phi: int | None
    a_seq: tuple | None
    n0: int | None


def hilbert_profile(e):
    """Assemble the HilbertProfile of an ideal."""
    p, t = hilbert_samuel_poly(e)
    if e.is_zero() or e.is_unit():
        return HilbertProfile(e.dim, p, t, None, height(e), None, None, None)
    mc = minimizing_coefficients(p, e.dim)
    seq = tuple(a_sequence(mc.c))
    return HilbertProfile(e.dim, p, t, mc.c, psi_poly(p, e.dim), len(seq),
                          seq, stability_index(e).n0)
