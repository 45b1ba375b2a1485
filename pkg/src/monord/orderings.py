"""Three total well-orderings on monomial ideals extending reverse inclusion.

Each comparator returns -1/0/1 and satisfies: E a strict superset of F
implies E strictly less.  ``kb_cmp`` orders ideals through their sorted
generator words Kleene-Brouwer style, ``triangle_cmp`` recurses on slice
sequences, and ``min_type_cmp`` sorts by the ordinal invariant first and
breaks ties with the triangle order.
"""

from __future__ import annotations

from .errors import DataError
from .hilbert import hilbert_samuel_poly
from .ideal import generator_word, slice_last
from .ivpoly import dominance_cmp
from .monom import DEGLEX, term_cmp
from .ordinal import ONE, OMEGA, nat_pow, nat_sum, omega_pow


def _check_dims(e, f):
    if e.dim != f.dim:
        raise DataError("ideals live in different dimensions")


def kb_cmp(e, f, order=DEGLEX):
    """Kleene-Brouwer comparison of generator words.

    Generators are sorted increasingly by the term order; the word that
    extends a common prefix comes first, otherwise the first differing
    generators decide.  The zero ideal (empty word) is the maximum.  The
    term order must have order type omega, so lex is rejected.
    """
    _check_dims(e, f)
    if not order.is_type_omega():
        raise DataError(
            f"{order.kind} order does not have type omega; KB needs one")
    u = generator_word(e, order)
    v = generator_word(f, order)
    for x, y in zip(u, v):
        c = term_cmp(order, x, y)
        if c != 0:
            return c
    if len(u) != len(v):
        # the longer word is an extension and precedes its truncation
        return -1 if len(u) > len(v) else 1
    return 0


def triangle_cmp(e, f):
    """Compare the slice sequences (slice at j = 0, 1, ...) lexicographically,
    recursing in one dimension less; in dimension 1, containment decides
    (bigger set first, the zero ideal last).

    Slices are constant once j passes every generator's last coordinate,
    so comparing up to that bound decides equality.
    """
    _check_dims(e, f)
    if e.dim == 1:
        if e.gens == f.gens:
            return 0
        # generator exponent orders by containment; no generator = empty
        # final segment, the largest element
        a = e.gens[0][0] if e.gens else None
        b = f.gens[0][0] if f.gens else None
        if a is None or b is None:
            return 1 if a is None else -1
        return (a > b) - (a < b)
    bound = max((g[-1] for g in e.gens + f.gens), default=0)
    for j in range(bound + 1):
        c = triangle_cmp(slice_last(e, j), slice_last(f, j))
        if c != 0:
            return c
    return 0


def min_type_cmp(e, f):
    """Order by the Hilbert-Samuel polynomial under dominance (equivalently
    by psi), breaking ties with the triangle order."""
    _check_dims(e, f)
    pe, _ = hilbert_samuel_poly(e)
    pf, _ = hilbert_samuel_poly(f)
    c = dominance_cmp(pe, pf)
    if c != 0:
        return c
    return triangle_cmp(e, f)


def bounds_report(m):
    """The ordinal bound constants for dimension m, computed (not quoted).

    height: order type of the height function range on final segments;
    kb_order_type: order type under the KB well-ordering, which is also
    the lower bound for any total extension of reverse inclusion;
    type_upper: the general upper bound w^((w+1) nat-powered to m).  For
    m = 2 the triangle order's exact type is included.
    """
    if m < 1:
        raise DataError("m must be >= 1")
    kb = nat_sum(omega_pow(omega_pow(m - 1)), ONE)
    report = {
        "height": nat_sum(omega_pow(m), ONE),
        "kb_order_type": kb,
        "type_lower": kb,
        "type_upper": omega_pow(nat_pow(nat_sum(OMEGA, ONE), m)),
    }
    if m == 2:
        report["triangle_order_type_m2"] = nat_sum(
            omega_pow(nat_sum(OMEGA, ONE)), ONE)
    return report
