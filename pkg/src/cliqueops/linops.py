"""Linear combinations of cliques and verification of operad laws.

Elements of the operad are finite linear combinations of cliques of a
common arity with exact rational coefficients.  Composition extends
bilinearly from cliques.  This module also houses the exhaustive
small-arity verifiers for the operad axioms and for the componentwise
(Hadamard) product isomorphism.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .magma import UNIT, product as magma_product, pair_index, pair_of
from .clique import (
    Clique, all_cliques, compose, to_text, parse_clique, triangle, unit_clique,
)


class LinComb:
    """A formal rational linear combination of same-arity cliques.

    >>> from cliqueops.magma import make_standard
    >>> n2 = make_standard("N", 2)
    >>> t = triangle(n2, 0, 1, 0)
    >>> (LinComb.of(t) + LinComb.of(t)).coeff(t)
    Fraction(2, 1)
    """

    __slots__ = ("magma", "arity", "terms")

    def __init__(self, magma, arity, terms=None):
        self.magma = magma
        self.arity = arity
        clean = {}
        if terms:
            for c, coeff in terms.items():
                assert c.arity == arity, "mixed arities in one combination"
                assert c.magma == magma
                coeff = Fraction(coeff)
                if coeff:
                    clean[c] = coeff
        self.terms = clean

    @staticmethod
    def of(clique_, coeff=1):
        return LinComb(clique_.magma, clique_.arity, {clique_: Fraction(coeff)})

    @staticmethod
    def zero(magma, arity):
        return LinComb(magma, arity, {})

    def coeff(self, clique_):
        return self.terms.get(clique_, Fraction(0))

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        assert self.arity == other.arity and self.magma == other.magma
        terms = dict(self.terms)
        for c, v in other.terms.items():
            terms[c] = terms.get(c, Fraction(0)) + v
        return LinComb(self.magma, self.arity, terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, factor):
        factor = Fraction(factor)
        return LinComb(self.magma, self.arity,
                       {c: v * factor for c, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return (self.arity == other.arity and self.magma == other.magma
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __repr__(self):
        return f"LinComb({to_lincomb_text(self)})"


def lc_compose(f, i, g):
    """Bilinear extension of clique composition.

    >>> from cliqueops.magma import make_standard
    >>> z = make_standard("Z", 0)
    >>> p, q = triangle(z, 0, 1, 0), triangle(z, 0, 0, 2)
    >>> lc_compose(LinComb.of(p, 2), 1, LinComb.of(q, 3)).coeff(compose(p, 1, q))
    Fraction(6, 1)
    """
    assert f.magma == g.magma
    result = {}
    for p, a in f.terms.items():
        for q, b in g.terms.items():
            c = compose(p, i, q)
            result[c] = result.get(c, Fraction(0)) + a * b
    return LinComb(f.magma, f.arity + g.arity - 1, result)


def is_associative_element(f):
    """True iff f composed with itself at slot 1 equals slot 2.

    For finite magmas the answer is cross-checked against the three
    coefficient conditions that characterize associative arity-2
    elements (sums of products of coefficients over label pairs whose
    product is a fixed value).

    >>> from cliqueops.magma import make_standard
    >>> n2 = make_standard("N", 2)
    >>> is_associative_element(LinComb.of(triangle(n2, 1, 1, 1)))
    True
    >>> is_associative_element(LinComb.of(triangle(n2, 0, 1, 0)))
    False
    """
    assert f.arity == 2, "associativity is an arity-2 notion"
    direct = lc_compose(f, 1, f) == lc_compose(f, 2, f)
    if f.magma.is_finite():
        by_coeffs = _associative_coefficient_conditions(f)
        assert direct == by_coeffs, "coefficient criterion disagrees with direct check"
    return direct


def _associative_coefficient_conditions(f):
    """The three families of quadratic conditions on triangle
    coefficients equivalent to associativity (finite magmas)."""
    m = f.magma
    n = m.size()

    def lam(b, e1, e2):
        return f.coeff(triangle(m, b, e1, e2))

    for p0, p2, q1, q2 in itertools.product(range(n), repeat=4):
        # First family: for every non-unit target, products through a
        # solid glued arc at slot 1 cancel.
        for delta in range(1, n):
            total = Fraction(0)
            for p1, q0 in itertools.product(range(n), repeat=2):
                if m.op(p1, q0) == delta:
                    total += lam(p0, p1, p2) * lam(q0, q1, q2)
            if total:
                return False
        # Second family: unit glued arcs at slot 1 match slot 2.
        total = Fraction(0)
        for p1, q0 in itertools.product(range(n), repeat=2):
            if m.op(p1, q0) == UNIT:
                total += lam(p0, p1, p2) * lam(q0, q1, q2)
                total -= lam(p0, q1, p1) * lam(q0, q2, p2)
        if total:
            return False
    # Third family: mirror of the first at slot 2.
    for p0, p1, q1, q2 in itertools.product(range(n), repeat=4):
        for delta in range(1, n):
            total = Fraction(0)
            for p2, q0 in itertools.product(range(n), repeat=2):
                if m.op(p2, q0) == delta:
                    total += lam(p0, p1, p2) * lam(q0, q1, q2)
            if total:
                return False
    return True


# ----------------------------------------------------------------------
# axiom verification

def check_operad_axioms(magma, max_arity, window=None):
    """Exhaustively verify the operad axioms on basis cliques.

    Checks, for all cliques p, q, r with arities up to ``max_arity``
    and all valid positions, the two associativity shapes

        (p o_i q) o_{i+j-1} r = p o_i (q o_j r)
        (p o_i q) o_{j+|q|-1} r = (p o_j r) o_i q   for i < j

    and the unit law.  Returns a report dict; ``violations`` is
    expected empty.  ``window`` supplies the label alphabet for the
    integer magma.

    >>> from cliqueops.magma import make_standard
    >>> rpt = check_operad_axioms(make_standard("N", 2), 2)
    >>> rpt["violations"]
    []
    """
    if not magma.is_finite() and window is None:
        raise ValueError("the integer magma needs an explicit label window")
    cliques_by_arity = {
        n: list(all_cliques(magma, n)) if magma.is_finite()
        else list(_windowed_cliques(magma, n, window))
        for n in range(1, max_arity + 1)
    }
    unit = unit_clique(magma)
    # All pairwise compositions, computed once; the triple sweep then
    # needs only one further composition per side of each identity.
    pool = [p for n in cliques_by_arity for p in cliques_by_arity[n]]
    pair = {(p, i, q): compose(p, i, q)
            for p in pool for i in range(1, p.arity + 1) for q in pool}
    violations = []
    sequential = parallel = unital = 0
    for n in range(1, max_arity + 1):
        for p in cliques_by_arity[n]:
            # Unit law at every position.
            if compose(unit, 1, p) != p:
                violations.append(("left-unit", p))
            for i in range(1, n + 1):
                if compose(p, i, unit) != p:
                    violations.append(("right-unit", p, i))
                unital += 1
            for mm in range(1, max_arity + 1):
                for q in cliques_by_arity[mm]:
                    pq = [None] + [pair[p, i, q] for i in range(1, n + 1)]
                    for k in range(1, max_arity + 1):
                        for r in cliques_by_arity[k]:
                            # Nested (sequential) associativity.
                            for i in range(1, n + 1):
                                for j in range(1, mm + 1):
                                    lhs = compose(pq[i], i + j - 1, r)
                                    rhs = compose(p, i, pair[q, j, r])
                                    sequential += 1
                                    if lhs != rhs:
                                        violations.append(("sequential", p, i, q, j, r))
                            # Disjoint (parallel) associativity.
                            for i in range(1, n + 1):
                                for j in range(i + 1, n + 1):
                                    lhs = compose(pq[i], j + mm - 1, r)
                                    rhs = compose(pair[p, j, r], i, q)
                                    parallel += 1
                                    if lhs != rhs:
                                        violations.append(("parallel", p, i, q, j, r))
    return {
        "magma": magma.label,
        "max_arity": max_arity,
        "sequential_checked": sequential,
        "parallel_checked": parallel,
        "unit_checked": unital,
        "violations": violations,
    }


def _windowed_cliques(magma, arity, window):
    """All cliques whose labels come from a finite label window."""
    if arity == 1:
        yield unit_clique(magma)
        return
    arcs = [(x, y) for x in range(1, arity + 1) for y in range(x + 1, arity + 2)]
    alphabet = sorted(set(window) | {UNIT})
    for assignment in itertools.product(alphabet, repeat=len(arcs)):
        yield Clique(magma, arity,
                     {arc: v for arc, v in zip(arcs, assignment) if v != UNIT})


def pair_cliques(p, q, prod_magma=None):
    """Combine two same-arity cliques into one over the product magma,
    labeling each arc with the pair of component labels."""
    assert p.arity == q.arity
    pm = prod_magma or magma_product(p.magma, q.magma)
    n2 = q.magma.size()
    labels = {}
    for arc in p.all_arcs():
        v = pair_index(n2, p.label(*arc), q.label(*arc))
        if v != UNIT:
            labels[arc] = v
    return Clique(pm, p.arity, labels)


def unpair_clique(r, m1, m2):
    """Inverse of :func:`pair_cliques`."""
    n2 = m2.size()
    left, right = {}, {}
    for arc, v in r.solid_arcs():
        x, y = pair_of(n2, v)
        if x != UNIT:
            left[arc] = x
        if y != UNIT:
            right[arc] = y
    return Clique(m1, r.arity, left), Clique(m2, r.arity, right)


def check_hadamard_iso(m1, m2, max_arity):
    """Verify that pairing labels is an isomorphism between the
    componentwise product of two clique operads and the clique operad
    of the product magma, on all pairs up to ``max_arity``.

    >>> from cliqueops.magma import make_standard
    >>> d0 = make_standard("D", 0)
    >>> check_hadamard_iso(d0, d0, 2)["violations"]
    []
    """
    pm = magma_product(m1, m2)
    violations = []
    checked = 0
    by_arity = {
        n: [(p, q) for p in all_cliques(m1, n) for q in all_cliques(m2, n)]
        for n in range(1, max_arity + 1)
    }
    for n in range(1, max_arity + 1):
        for p1, q1 in by_arity[n]:
            for mth in range(1, max_arity + 1):
                for p2, q2 in by_arity[mth]:
                    for i in range(1, n + 1):
                        lhs = compose(pair_cliques(p1, q1, pm), i,
                                      pair_cliques(p2, q2, pm))
                        rhs = pair_cliques(compose(p1, i, p2),
                                           compose(q1, i, q2), pm)
                        checked += 1
                        if lhs != rhs:
                            violations.append((p1, q1, i, p2, q2))
    return {"checked": checked, "violations": violations}


# ----------------------------------------------------------------------
# text format

def to_lincomb_text(f, magma=None):
    """Render `<coeff> * <clique-literal> [ + ... ]`, terms sorted.

    >>> from cliqueops.magma import make_standard
    >>> z = make_standard("Z", 0)
    >>> to_lincomb_text(LinComb.of(triangle(z, 0, 1, 0), Fraction(1, 2)))
    '1/2 * clique 2 { 1-2:1 }'
    """
    m = magma or f.magma
    if f.is_zero():
        return "0"
    parts = []
    for c in sorted(f.terms, key=lambda c: sorted(c.labels.items())):
        parts.append(f"{f.terms[c]} * {to_text(c, m)}")
    return " + ".join(parts)


def parse_lincomb(text, magma):
    """Parse the format produced by :func:`to_lincomb_text`.

    >>> from cliqueops.magma import make_standard
    >>> z = make_standard("Z", 0)
    >>> f = parse_lincomb("1/2 * clique 2 { 1-2:1 } + -2 * clique 2 { }", z)
    >>> f.coeff(triangle(z, 0, 0, 0))
    Fraction(-2, 1)
    """
    text = text.strip()
    if text == "0":
        raise ValueError("cannot infer arity of the zero combination")
    terms = {}
    arity = None
    for part in text.split(" + "):
        coeff_text, _, clique_text = part.partition("*")
        c = parse_clique(clique_text.strip(), magma)
        coeff = Fraction(coeff_text.strip())
        if arity is None:
            arity = c.arity
        terms[c] = terms.get(c, Fraction(0)) + coeff
    return LinComb(magma, arity, terms)
