"""Two triangular bases of the clique operad and their composition.

The first alternative basis (tag ``H``) sums, for an index clique, all
cliques obtained by erasing solid base/edge labels.  The second (tag
``K``) is the signed sum over erasures of solid diagonal labels, the
sign being the parity of the number of erased arcs.  Both are related
to the fundamental basis by a unitriangular change of basis, and
partial composition has a short closed form on each.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .magma import UNIT
from .clique import Clique, compose, unit_clique
from .linops import LinComb, lc_compose, to_lincomb_text, parse_lincomb

FUNDAMENTAL, H, K = "Fundamental", "H", "K"


def erase_base(p):
    """The clique with the base label replaced by the unit."""
    labels = dict(p.labels)
    labels.pop((1, p.arity + 1), None)
    return Clique(p.magma, p.arity, labels)


def erase_edge(p, i):
    """The clique with the i-th edge label replaced by the unit."""
    labels = dict(p.labels)
    labels.pop((i, i + 1), None)
    return Clique(p.magma, p.arity, labels)


def _erasure_arcs(p, tag):
    """The solid arcs whose erasure generates the basis expansion:
    base and edges for H, diagonals for K."""
    n = p.arity
    out = []
    for (x, y), _ in p.solid_arcs():
        is_boundary = (y - x == 1) or (x, y) == (1, n + 1)
        if (tag == H) == is_boundary:
            out.append((x, y))
    return out


def expand_basis_clique(p, tag):
    """Expansion of one H- or K-indexed element in the fundamental
    basis.

    >>> from cliqueops.magma import make_standard
    >>> from cliqueops.clique import triangle
    >>> n2 = make_standard("N", 2)
    >>> len(expand_basis_clique(triangle(n2, 0, 1, 1), H).terms)
    4
    >>> b = triangle(n2, 1, 0, 0)
    >>> expand_basis_clique(b, K) == LinComb.of(b)
    True
    """
    arcs = _erasure_arcs(p, tag)
    terms = {}
    for r in range(len(arcs) + 1):
        for subset in itertools.combinations(arcs, r):
            labels = {a: v for a, v in p.labels.items() if a not in subset}
            q = Clique(p.magma, p.arity, labels)
            coeff = Fraction(1) if tag == H else Fraction(-1) ** r
            terms[q] = terms.get(q, Fraction(0)) + coeff
    return LinComb(p.magma, p.arity, terms)


def to_fundamental(f, tag):
    """Reinterpret the clique keys of f as basis indices of ``tag``
    and expand into the fundamental basis."""
    if tag == FUNDAMENTAL:
        return f
    out = LinComb.zero(f.magma, f.arity)
    for p, c in f.terms.items():
        out = out + expand_basis_clique(p, tag).scale(c)
    return out


def from_fundamental(f, target):
    """Express a fundamental-basis element over the target basis.

    Triangular elimination: the expansion of a basis element is the
    element itself plus cliques with strictly fewer solid arcs.

    >>> from cliqueops.magma import make_standard
    >>> from cliqueops.clique import triangle
    >>> n2 = make_standard("N", 2)
    >>> p = triangle(n2, 1, 1, 0)
    >>> to_fundamental(from_fundamental(LinComb.of(p), H), H) == LinComb.of(p)
    True
    """
    if target == FUNDAMENTAL:
        return f
    remaining = dict(f.terms)
    out = {}
    while remaining:
        # Eliminate a term with the most solid arcs; its expansion
        # only touches smaller cliques.
        p = max(remaining, key=lambda c: len(c.labels))
        coeff = remaining.pop(p)
        if not coeff:
            continue
        out[p] = out.get(p, Fraction(0)) + coeff
        for q, s in expand_basis_clique(p, target).terms.items():
            if q == p:
                continue
            v = remaining.get(q, Fraction(0)) - coeff * s
            if v:
                remaining[q] = v
            else:
                remaining.pop(q, None)
    return LinComb(f.magma, f.arity, out)


def compose_in_basis(f, i, g, tag):
    """Partial composition computed directly on basis indices.

    On the H-basis the result has up to four terms, obtained by
    optionally erasing the i-th edge label of the left index and the
    base label of the right index before composing; a term appears for
    each erasable solid label.  On the K-basis the result is a single
    term when the two glued labels multiply to the unit, and otherwise
    gains a second term indexed by the composition of both erasures.

    >>> from cliqueops.magma import make_standard
    >>> from cliqueops.clique import triangle, to_text
    >>> z = make_standard("Z", 0)
    >>> p, q = triangle(z, 0, 1, 0), triangle(z, -1, 5, 0)
    >>> sorted(len(c.labels) for c in compose_in_basis(LinComb.of(p), 1, LinComb.of(q), K).terms)
    [1]
    """
    if tag == FUNDAMENTAL:
        return lc_compose(f, i, g)
    unit = unit_clique(f.magma)
    result = {}

    def add(p, coeff):
        result[p] = result.get(p, Fraction(0)) + coeff

    for p, a in f.terms.items():
        for q, b in g.terms.items():
            coeff = a * b
            if p == unit or q == unit:
                # The closed forms assume non-unit operands; the unit
                # acts trivially in every basis.
                add(compose(p, i, q), coeff)
                continue
            if tag == H:
                add(compose(p, i, q), coeff)
                if p.edge(i) != UNIT:
                    add(compose(erase_edge(p, i), i, q), coeff)
                if q.base() != UNIT:
                    add(compose(p, i, erase_base(q)), coeff)
                if p.edge(i) != UNIT and q.base() != UNIT:
                    add(compose(erase_edge(p, i), i, erase_base(q)), coeff)
            else:
                add(compose(p, i, q), coeff)
                if f.magma.op(p.edge(i), q.base()) != UNIT:
                    add(compose(erase_edge(p, i), i, erase_base(q)), coeff)
    out = LinComb(f.magma, f.arity + g.arity - 1, result)
    # Cross-check against the conversion route.
    direct = lc_compose(to_fundamental(f, tag), i, to_fundamental(g, tag))
    assert to_fundamental(out, tag) == direct, "closed form disagrees with expansion"
    return out


# ----------------------------------------------------------------------
# text I/O with basis prefix

def to_tagged_text(f, tag, magma=None):
    """Render a combination with its basis prefix (`H:`/`K:`)."""
    body = to_lincomb_text(f, magma)
    if tag == FUNDAMENTAL:
        return body
    return f"{tag}: {body}"


def parse_tagged(text, magma):
    """Parse `H: ...`, `K: ...`, or an untagged fundamental element.

    Returns (LinComb, tag).

    >>> from cliqueops.magma import make_standard
    >>> f, tag = parse_tagged("K: 1 * clique 2 { 1-3:1 }", make_standard("D", 0))
    >>> tag
    'K'
    """
    text = text.strip()
    for tag in (H, K):
        if text.startswith(f"{tag}:"):
            return parse_lincomb(text[len(tag) + 1:], magma), tag
    return parse_lincomb(text, magma), FUNDAMENTAL
