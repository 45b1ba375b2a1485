"""Ordinal arithmetic below epsilon_0.

Ordinals are kept in hereditary Cantor normal form: a sum
w^g1 * c1 + ... + w^gk * ck with g1 > g2 > ... > gk and positive integer
coefficients, where the exponents are themselves ordinals in the same form.
The arithmetic provided here is the commutative (Hessenberg) natural sum
and natural product, which is what order-type bookkeeping for well partial
orders needs.
"""

from __future__ import annotations

from functools import cmp_to_key, total_ordering

from .errors import ParseError


@total_ordering
class Ord:
    """An ordinal below epsilon_0 in Cantor normal form.

    Instances are immutable and hashable.  ``terms`` is a tuple of
    (exponent, coefficient) pairs with strictly decreasing Ord exponents
    and coefficients >= 1.  The empty tuple is zero.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=()):
        terms = tuple(terms)
        for i, (e, c) in enumerate(terms):
            if not isinstance(e, Ord) or not isinstance(c, int) or c < 1:
                raise ValueError(f"bad CNF term {terms[i]!r}")
            if i > 0 and cmp(terms[i - 1][0], e) <= 0:
                raise ValueError("CNF exponents must strictly decrease")
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_hash", hash(terms))

    def __setattr__(self, name, value):
        raise AttributeError("Ord is immutable")

    @staticmethod
    def from_int(n):
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"expected a natural number, got {n!r}")
        if n == 0:
            return ZERO
        return Ord(((ZERO, n),))

    def is_zero(self):
        return not self.terms

    def is_finite(self):
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0].is_zero())

    def to_int(self):
        """The integer value of a finite ordinal."""
        if self.is_zero():
            return 0
        if not self.is_finite():
            raise ValueError(f"{self} is infinite")
        return self.terms[0][1]

    def is_successor(self):
        return bool(self.terms) and self.terms[-1][0].is_zero()

    def is_limit(self):
        return bool(self.terms) and not self.terms[-1][0].is_zero()

    def __eq__(self, other):
        return isinstance(other, Ord) and self.terms == other.terms

    def __lt__(self, other):
        if not isinstance(other, Ord):
            return NotImplemented
        return cmp(self, other) < 0

    def __hash__(self):
        return self._hash

    def __add__(self, other):
        return nat_sum(self, _coerce(other))

    __radd__ = __add__

    def __mul__(self, other):
        return nat_prod(self, _coerce(other))

    __rmul__ = __mul__

    def __str__(self):
        return format_ordinal(self)

    def __repr__(self):
        return f"Ord[{format_ordinal(self)}]"


def _coerce(x):
    if isinstance(x, Ord):
        return x
    if isinstance(x, int):
        return Ord.from_int(x)
    raise TypeError(f"cannot treat {x!r} as an ordinal")


ZERO = Ord()
ONE = Ord.from_int(1)
OMEGA = Ord(((ONE, 1),))


def cmp(a, b):
    """Three-way comparison of two ordinals: -1, 0, or 1."""
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = cmp(ea, eb)
        if c != 0:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    if len(a.terms) != len(b.terms):
        return -1 if len(a.terms) < len(b.terms) else 1
    return 0


def nat_sum(a, b):
    """Hessenberg natural sum: merge the CNF terms exponent by exponent."""
    a, b = _coerce(a), _coerce(b)
    coeffs = {}
    for e, c in a.terms + b.terms:
        coeffs[e] = coeffs.get(e, 0) + c
    exps = sorted(coeffs, key=cmp_to_key(cmp), reverse=True)
    return Ord(tuple((e, coeffs[e]) for e in exps))


def nat_prod(a, b):
    """Hessenberg natural product, distributing over natural sums of terms."""
    a, b = _coerce(a), _coerce(b)
    coeffs = {}
    for ea, ca in a.terms:
        for eb, cb in b.terms:
            e = nat_sum(ea, eb)
            coeffs[e] = coeffs.get(e, 0) + ca * cb
    exps = sorted(coeffs, key=cmp_to_key(cmp), reverse=True)
    return Ord(tuple((e, coeffs[e]) for e in exps))


def nat_pow(a, n):
    """Iterated natural product a (x) ... (x) a, n a natural number."""
    a = _coerce(a)
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"exponent must be a natural number, got {n!r}")
    out = ONE
    for _ in range(n):
        out = nat_prod(out, a)
    return out


def omega_pow(a):
    """w^a for an ordinal (or natural number) a."""
    a = _coerce(a)
    return Ord(((a, 1),))


def ot_decreasing_sequences(a):
    """Order type of the tree of strictly decreasing sequences below a.

    Sequences b_0 > b_1 > ... with all b_i < a, ordered by the usual
    Kleene-Brouwer style comparison, form a well-order whose type depends
    only on a:  0 and 1 map to themselves, a finite n >= 2 maps to
    w^(n-1) + 1, an infinite limit a maps to w^a, and an infinite
    successor a maps to w^a + 1.
    """
    a = _coerce(a)
    if a.is_zero():
        return ZERO
    if a == ONE:
        return ONE
    if a.is_finite():
        return nat_sum(omega_pow(a.to_int() - 1), ONE)
    if a.is_limit():
        return omega_pow(a)
    return nat_sum(omega_pow(a), ONE)


def format_ordinal(a):
    """Render a in the textual CNF syntax, e.g. ``w^(w + 1)*2 + w + 3``."""
    a = _coerce(a)
    if a.is_zero():
        return "0"
    parts = []
    for e, c in a.terms:
        if e.is_zero():
            parts.append(str(c))
            continue
        if e == ONE:
            s = "w"
        else:
            es = format_ordinal(e)
            if not (es.isdigit() or es == "w"):
                es = "(" + es + ")"
            s = "w^" + es
        if c > 1:
            s += "*" + str(c)
        parts.append(s)
    return " + ".join(parts)


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, msg):
        raise ParseError(msg, line=1, column=self.pos + 1)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] == " ":
            self.pos += 1

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def nat(self):
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected a number")
        tok = self.text[start:self.pos]
        if len(tok) > 1 and tok[0] == "0":
            self.error("no leading zeros")
        return int(tok)


def parse_ordinal(text):
    """Parse the syntax produced by :func:`format_ordinal`.

    Terms must appear in strictly decreasing exponent order with positive
    coefficients; anything else is a :class:`ParseError`.
    """
    sc = _Scanner(text)
    sc.skip_ws()
    a = _parse_sum(sc)
    sc.skip_ws()
    if sc.pos != len(sc.text):
        sc.error("trailing input")
    return a


def _parse_sum(sc):
    terms = [_parse_term(sc)]
    while True:
        save = sc.pos
        sc.skip_ws()
        if sc.peek() != "+":
            sc.pos = save
            break
        sc.take("+")
        sc.skip_ws()
        terms.append(_parse_term(sc))
    if len(terms) == 1 and terms[0] == (ZERO, 0):
        return ZERO
    if any(c == 0 for _, c in terms):
        sc.error("'0' is only valid on its own")
    for i in range(1, len(terms)):
        if cmp(terms[i - 1][0], terms[i][0]) <= 0:
            sc.error("exponents must strictly decrease")
    return Ord(tuple(terms))


def _parse_term(sc):
    if sc.peek().isdigit():
        n = sc.nat()
        if n == 0:
            # bare zero; only valid as the whole ordinal, checked by caller
            return (ZERO, 0)
        return (ZERO, n)
    if sc.peek() != "w":
        sc.error("expected 'w' or a number")
    sc.take("w")
    exp = ONE
    if sc.peek() == "^":
        sc.take("^")
        if sc.peek() == "(":
            sc.take("(")
            sc.skip_ws()
            exp = _parse_sum(sc)
            sc.skip_ws()
            sc.take(")")
        elif sc.peek() == "w":
            sc.take("w")
            exp = OMEGA
        else:
            exp = Ord.from_int(sc.nat())
    coeff = 1
    if sc.peek() == "*":
        sc.take("*")
        coeff = sc.nat()
        if coeff == 0:
            sc.error("coefficient must be positive")
    if exp.is_zero():
        sc.error("write finite terms as plain numbers")
    return (exp, coeff)
