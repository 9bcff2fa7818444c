"""Exact multivariate rational functions under operadic composition,
and the interval-product images of decorated cliques.

Composing at position i substitutes the sum of a block of fresh
variables into the i-th slot and multiplies by the right operand read
on that block.  A clique maps to the product over its arcs of the
linear forms u_x + ... + u_{y-1}, each raised to the rank of the arc
label; the map turns clique composition into rational-function
composition whenever the rank is additive.

>>> f = RatFct.from_poly(Poly.variable(1, 1))
>>> g = RatFct.one(2)
>>> ratfct_compose(f, 1, g) == RatFct.from_poly(Poly.linear_form(2, 1, 3))
True
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .magma import UNIT


class Poly:
    """A polynomial in u_1..u_n: exponent tuples mapped to coefficients."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity, terms):
        self.arity = arity
        clean = {}
        for exps, c in terms.items():
            assert len(exps) == arity and all(e >= 0 for e in exps)
            c = Fraction(c)
            if c:
                clean[tuple(exps)] = c
        self.terms = clean

    @staticmethod
    def zero(arity):
        return Poly(arity, {})

    @staticmethod
    def constant(arity, c):
        return Poly(arity, {(0,) * arity: Fraction(c)})

    @staticmethod
    def one(arity):
        return Poly.constant(arity, 1)

    @staticmethod
    def variable(arity, i):
        """The polynomial u_i.

        >>> Poly.variable(3, 2).terms
        {(0, 1, 0): Fraction(1, 1)}
        """
        assert 1 <= i <= arity
        exps = [0] * arity
        exps[i - 1] = 1
        return Poly(arity, {tuple(exps): Fraction(1)})

    @staticmethod
    def linear_form(arity, x, y):
        """The sum u_x + ... + u_{y-1}.

        >>> sorted(Poly.linear_form(3, 1, 3).terms)
        [(0, 1, 0), (1, 0, 0)]
        """
        assert 1 <= x < y <= arity + 1
        terms = {}
        for j in range(x, y):
            exps = [0] * arity
            exps[j - 1] = 1
            terms[tuple(exps)] = Fraction(1)
        return Poly(arity, terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __add__(self, other):
        assert self.arity == other.arity
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return Poly(self.arity, terms)

    def __neg__(self):
        return Poly(self.arity, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        assert self.arity == other.arity
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return Poly(self.arity, terms)

    def scale(self, c):
        c = Fraction(c)
        return Poly(self.arity, {e: c * v for e, v in self.terms.items()})

    def power(self, k):
        assert k >= 0
        out = Poly.one(self.arity)
        for _ in range(k):
            out = out * self
        return out

    def substitute_block(self, i, m):
        """Map u_i to u_i + ... + u_{i+m-1} and shift upper variables
        by m - 1; the result has arity + m - 1 variables.

        >>> p = Poly.variable(2, 1) * Poly.variable(2, 2)
        >>> sorted(p.substitute_block(1, 2).terms)
        [(0, 1, 1), (1, 0, 1)]
        """
        assert 1 <= i <= self.arity
        new_arity = self.arity + m - 1
        block = Poly.linear_form(new_arity, i, i + m)
        out = Poly.zero(new_arity)
        for exps, c in self.terms.items():
            mono = {tuple(exps[:i - 1] + (0,) * m + exps[i:]): c}
            piece = Poly(new_arity, mono) * block.power(exps[i - 1])
            out = out + piece
        return out

    def embed_block(self, offset, new_arity):
        """Read the polynomial on variables offset+1..offset+arity."""
        assert offset + self.arity <= new_arity
        terms = {}
        for exps, c in self.terms.items():
            e = (0,) * offset + exps + (0,) * (new_arity - offset - self.arity)
            terms[e] = c
        return Poly(new_arity, terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            factors = [f"u{j + 1}^{e}" if e != 1 else f"u{j + 1}"
                       for j, e in enumerate(exps) if e]
            mono = "*".join(factors) if factors else "1"
            bits.append(f"{c}*{mono}" if c != 1 or not factors else mono)
        return " + ".join(bits)


class RatFct:
    """A quotient of two polynomials; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        assert num.arity == den.arity
        assert not den.is_zero(), "denominator must be nonzero"
        self.num = num
        self.den = den

    @property
    def arity(self):
        return self.num.arity

    @staticmethod
    def from_poly(p):
        return RatFct(p, Poly.one(p.arity))

    @staticmethod
    def one(arity):
        return RatFct.from_poly(Poly.one(arity))

    def __eq__(self, other):
        if not isinstance(other, RatFct):
            return NotImplemented
        if self.arity != other.arity:
            return False
        return self.num * other.den == other.num * self.den

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        assert self.arity == other.arity
        return RatFct(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    def __neg__(self):
        return RatFct(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        assert self.arity == other.arity
        return RatFct(self.num * other.num, self.den * other.den)

    def scale(self, c):
        return RatFct(self.num.scale(c), self.den)

    def __repr__(self):
        return f"({self.num!r}) / ({self.den!r})"


def ratfct_compose(f, i, g):
    """Operadic composition of rational functions.

    >>> f = RatFct.from_poly(Poly.variable(2, 2))
    >>> ratfct_compose(f, 1, RatFct.one(1)) == f
    True
    """
    assert 1 <= i <= f.arity
    m = g.arity
    new_arity = f.arity + m - 1
    g_num = g.num.embed_block(i - 1, new_arity)
    g_den = g.den.embed_block(i - 1, new_arity)
    return RatFct(f.num.substitute_block(i, m) * g_num,
                  f.den.substitute_block(i, m) * g_den)


# ----------------------------------------------------------------------
# interval products: images of cliques in factored form

class IntervalProduct:
    """A product of powers of the linear forms u_x + ... + u_{y-1},
    stored as a map from intervals to integer exponents."""

    __slots__ = ("arity", "exponents")

    def __init__(self, arity, exponents):
        self.arity = arity
        clean = {}
        for (x, y), e in exponents.items():
            assert 1 <= x < y <= arity + 1
            if e:
                clean[(x, y)] = e
        self.exponents = clean

    def __eq__(self, other):
        if not isinstance(other, IntervalProduct):
            return NotImplemented
        return self.arity == other.arity and self.exponents == other.exponents

    def __hash__(self):
        return hash((self.arity, frozenset(self.exponents.items())))

    def __mul__(self, other):
        assert self.arity == other.arity
        exps = dict(self.exponents)
        for k, e in other.exponents.items():
            exps[k] = exps.get(k, 0) + e
        return IntervalProduct(self.arity, exps)

    def inverse(self):
        return IntervalProduct(self.arity, {k: -e for k, e in self.exponents.items()})

    def to_ratfct(self):
        """Expand into an explicit fraction.

        >>> IntervalProduct(2, {(1, 3): 1, (2, 3): -1}).to_ratfct()
        (u1 + u2) / (u2)
        """
        num = Poly.one(self.arity)
        den = Poly.one(self.arity)
        for (x, y), e in sorted(self.exponents.items()):
            form = Poly.linear_form(self.arity, x, y)
            if e > 0:
                num = num * form.power(e)
            else:
                den = den * form.power(-e)
        return RatFct(num, den)

    def __repr__(self):
        if not self.exponents:
            return "1"
        bits = []
        for (x, y), e in sorted(self.exponents.items()):
            form = "(" + "+".join(f"u{j}" for j in range(x, y)) + ")"
            bits.append(form if e == 1 else f"{form}^{e}")
        return "*".join(bits)


def interval_compose(f, i, g):
    """Composition in factored form: intervals move exactly like arcs,
    and meeting exponents add.

    >>> f = IntervalProduct(2, {(1, 2): 3})
    >>> g = IntervalProduct(2, {(1, 3): -1})
    >>> interval_compose(f, 1, g).exponents
    {(1, 3): 2}
    """
    assert 1 <= i <= f.arity
    m = g.arity
    exps = {}

    def put(key, e):
        exps[key] = exps.get(key, 0) + e

    for (x, y), e in f.exponents.items():
        if y <= i:
            put((x, y), e)
        elif x <= i < y:
            put((x, y + m - 1), e)
        else:
            put((x + m - 1, y + m - 1), e)
    for (x, y), e in g.exponents.items():
        put((x + i - 1, y + i - 1), e)
    return IntervalProduct(f.arity + m - 1, exps)


# ----------------------------------------------------------------------
# images of cliques

def clique_image(p, theta):
    """The factored image of one clique: the arc (x, y) contributes the
    linear form on [x, y) raised to the rank of its label.

    >>> from cliqueops.magma import make_standard
    >>> from cliqueops.clique import unit_clique
    >>> clique_image(unit_clique(make_standard("Z")), lambda v: v).exponents
    {}
    """
    exps = {}
    for (x, y), v in p.solid_arcs():
        e = theta(v)
        if e:
            exps[(x, y)] = e
    return IntervalProduct(p.arity, exps)


def lincomb_image(f, theta):
    """Linear extension of the clique image, expanded to a fraction."""
    total = RatFct.from_poly(Poly.zero(f.arity))
    for p, c in f.terms.items():
        total = total + clique_image(p, theta).to_ratfct().scale(c)
    return total


def star(p, q):
    """Arc-wise magma product of two same-arity cliques.

    >>> from cliqueops.magma import make_standard
    >>> from cliqueops.clique import triangle
    >>> z = make_standard("Z")
    >>> star(triangle(z, 1, 2, 0), triangle(z, 1, -2, 5)) == triangle(z, 2, 0, 5)
    True
    """
    assert p.magma == q.magma and p.arity == q.arity
    from .clique import Clique
    labels = {}
    for key in set(p.labels) | set(q.labels):
        v = p.magma.op(p.label(*key), q.label(*key))
        if v != UNIT:
            labels[key] = v
    return Clique(p.magma, p.arity, labels)


def star_lincomb(f, g):
    """Bilinear extension of the arc-wise product."""
    from .linops import LinComb
    assert f.magma == g.magma and f.arity == g.arity
    out = LinComb.zero(f.magma, f.arity)
    for p, cp in f.terms.items():
        for q, cq in g.terms.items():
            out = out + LinComb.of(star(p, q), cp * cq)
    return out


def negate_labels(p):
    """Replace every label by its additive inverse (integer labels).

    >>> from cliqueops.magma import make_standard
    >>> from cliqueops.clique import triangle
    >>> z = make_standard("Z")
    >>> negate_labels(triangle(z, 1, -2, 0)) == triangle(z, -1, 2, 0)
    True
    """
    from .clique import Clique
    assert not p.magma.is_finite(), "label negation is the integer involution"
    return Clique(p.magma, p.arity, {k: -v for k, v in p.labels.items()})
