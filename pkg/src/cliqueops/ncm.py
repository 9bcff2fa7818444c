"""The noncrossing suboperad: tree realizations and algebra actions.

A noncrossing clique decomposes uniquely into the diagonal-free region
touching its base (a bubble) with smaller noncrossing cliques hanging
below the region's bounding arcs.  Iterating yields a planar tree whose
internal nodes carry label words: the slot label over child i is the
corresponding bubble border letter, and one root label carries the base
of the outermost bubble.  Leaves are unlabeled; a slot over an internal
child is always solid.  Composition of such trees grafts one root onto
a leaf, multiplying the two incident labels, and contracts the new edge
when the product is the unit.

>>> from cliqueops.magma import make_standard
>>> from cliqueops.clique import parse_clique
>>> d0 = make_standard("D", 0)
>>> p = parse_clique("clique 3 { 1-3:0 ; 3-4:0 }", d0)
>>> to_tree_text(bubble_tree(p), d0)
'(1: (leaf[1], leaf[1])[0], leaf[0])'
>>> from_bubble_tree(bubble_tree(p)) == p
True
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .magma import UNIT
from .clique import (
    Clique, bubble, compose, crossing, triangle, unit_clique,
)

# A tree is LEAF or a _Node; slot labels live on the parent.
LEAF = "leaf"


class _Node:
    __slots__ = ("children", "labels", "_leaves")

    def __init__(self, children, labels):
        children = tuple(children)
        labels = tuple(labels)
        assert len(children) == len(labels) and len(children) >= 2
        for child, lab in zip(children, labels):
            # An edge between two internal nodes is never empty.
            assert child == LEAF or lab != UNIT, "solid label required over internal child"
        self.children = children
        self.labels = labels
        self._leaves = sum(1 if c == LEAF else c._leaves for c in children)

    def __eq__(self, other):
        if not isinstance(other, _Node):
            return NotImplemented
        return self.children == other.children and self.labels == other.labels

    def __hash__(self):
        return hash((self.children, self.labels))


class SchroderTree:
    """A planar tree with labeled edges realizing noncrossing cliques.

    ``root_label`` labels the root edge; ``top`` is LEAF or a _Node.
    The arity is the leaf count.
    """

    __slots__ = ("magma", "root_label", "top")

    def __init__(self, magma, root_label, top):
        if top == LEAF:
            assert root_label == UNIT, "a bare leaf carries the unit root label"
        self.magma = magma
        self.root_label = root_label
        self.top = top

    @property
    def arity(self):
        return 1 if self.top == LEAF else self.top._leaves

    def is_leaf(self):
        return self.top == LEAF

    def __eq__(self, other):
        if not isinstance(other, SchroderTree):
            return NotImplemented
        return (self.magma == other.magma and self.root_label == other.root_label
                and self.top == other.top)

    def __hash__(self):
        return hash((self.root_label, self.top))

    def __repr__(self):
        return f"SchroderTree({to_tree_text(self)})"


def leaf_tree(magma):
    """The arity-1 tree: a single unlabeled leaf (the operadic unit)."""
    return SchroderTree(magma, UNIT, LEAF)


def corolla(magma, base, border):
    """One internal node: the tree of the bubble with that base/border."""
    return SchroderTree(magma, base, _Node([LEAF] * len(border), border))


# ----------------------------------------------------------------------
# decomposition and evaluation

def base_area_decomposition(p):
    """Split a noncrossing clique at the region touching its base.

    Returns (region, parts): the region as a bubble and one smaller
    noncrossing clique per region arc (the unit clique under region
    arcs that bound nothing).  The original clique is recovered by
    composing every part into the bubble; parts always have empty
    bases.

    >>> from cliqueops.magma import make_standard
    >>> from cliqueops.clique import parse_clique, to_text
    >>> d0 = make_standard("D", 0)
    >>> p = parse_clique("clique 3 { 1-3:0 ; 3-4:0 }", d0)
    >>> q, parts = base_area_decomposition(p)
    >>> to_text(q), [to_text(r) for r in parts]
    ('clique 2 { 1-2:0 ; 2-3:0 }', ['clique 2 { }', 'clique 1 { }'])
    """
    assert crossing(p) == 0, "decomposition needs a noncrossing clique"
    n = p.arity
    assert n >= 2
    # Walk the bounding arcs of the base region: from each vertex jump
    # along the longest solid arc (noncrossing makes this the region
    # boundary), else to the next vertex.
    vertices = [1]
    while vertices[-1] < n + 1:
        v = vertices[-1]
        jump = v + 1
        for (x, y), _ in p.solid_arcs():
            if x == v and y > jump and (x, y) != (1, n + 1):
                jump = y
        vertices.append(jump)
    border = [p.label(a, b) for a, b in zip(vertices, vertices[1:])]
    region = bubble(p.magma, p.base(), border)
    parts = []
    for a, b in zip(vertices, vertices[1:]):
        if b == a + 1:
            parts.append(unit_clique(p.magma))
            continue
        labels = {}
        for (x, y), v in p.solid_arcs():
            if a <= x < y <= b and (x, y) != (a, b):
                labels[(x - a + 1, y - a + 1)] = v
        parts.append(Clique(p.magma, b - a, labels))
    return region, parts


def bubble_tree(p):
    """Decompose a noncrossing clique into its labeled tree.

    >>> from cliqueops.magma import make_standard
    >>> d0 = make_standard("D", 0)
    >>> bubble_tree(unit_clique(d0)).is_leaf()
    True
    >>> bubble_tree(bubble(d0, 1, [0, 1])) == corolla(d0, 1, (1, 0, 1))
    False
    >>> bubble_tree(bubble(d0, 1, [0, 1])) == corolla(d0, 1, (0, 1))
    True
    """
    if p.arity == 1:
        return leaf_tree(p.magma)
    region, parts = base_area_decomposition(p)
    children = []
    for part in parts:
        children.append(LEAF if part.arity == 1 else bubble_tree(part).top)
    return SchroderTree(p.magma, region.base(), _Node(children, region.border()))


def from_bubble_tree(t):
    """Evaluate a labeled tree back to its noncrossing clique.

    >>> from cliqueops.magma import make_standard
    >>> n2 = make_standard("N", 2)
    >>> from_bubble_tree(corolla(n2, 1, (1, 0, 1))) == bubble(n2, 1, [1, 0, 1])
    True
    """
    if t.is_leaf():
        return unit_clique(t.magma)

    def eval_node(node, base_label):
        q = bubble(t.magma, base_label, node.labels)
        result = q
        # Substitute children right-to-left so positions stay valid.
        for i in range(len(node.children), 0, -1):
            child = node.children[i - 1]
            if child == LEAF:
                continue
            # Child bases are empty, so the glue arc keeps exactly the
            # slot label sitting on the parent bubble's edge.
            result = compose(result, i, eval_node(child, UNIT))
        return result

    return eval_node(t.top, t.root_label)


# ----------------------------------------------------------------------
# composition on trees

def schroder_compose(s, i, t):
    """Graft the root of t onto the i-th leaf of s.

    The leaf's slot label a and t's root label b multiply: when
    a*b is solid it labels the new edge, and when a*b is the unit the
    edge is contracted (t's top node merges into the leaf's parent).

    >>> from cliqueops.magma import make_standard
    >>> n2 = make_standard("N", 2)
    >>> s = corolla(n2, 0, (1, 0))
    >>> t = corolla(n2, 1, (0, 1))
    >>> schroder_compose(s, 1, t).top.labels   # 1*1 = 0: contraction
    (0, 1, 0)
    """
    assert s.magma == t.magma
    if not 1 <= i <= s.arity:
        raise IndexError(f"leaf index {i} out of range 1..{s.arity}")
    if s.is_leaf():
        return t
    magma = s.magma

    def graft(node, k):
        children, labels = [], []
        for child, lab in zip(node.children, node.labels):
            size = 1 if child == LEAF else child._leaves
            if k is not None and 1 <= k <= size:
                if child == LEAF:
                    c = magma.op(lab, t.root_label)
                    if t.is_leaf():
                        children.append(LEAF)
                        labels.append(c)
                    elif c != UNIT:
                        children.append(t.top)
                        labels.append(c)
                    else:
                        children.extend(t.top.children)
                        labels.extend(t.top.labels)
                else:
                    children.append(graft(child, k))
                    labels.append(lab)
                k = None
            else:
                children.append(child)
                labels.append(lab)
                if k is not None:
                    k -= size
        return _Node(children, labels)

    return SchroderTree(magma, s.root_label, graft(s.top, i))


# ----------------------------------------------------------------------
# algebras

def check_omega_compatibility(magma, omega, samples, pairs=None):
    """Verify the unary family: identity at the unit and composition
    matching the magma product, on the given sample elements."""
    if pairs is None:
        if magma.is_finite():
            pairs = list(itertools.product(magma.elements(), repeat=2))
        else:
            raise ValueError("supply label pairs for the integer magma")
    for a in samples:
        if omega(UNIT)(a) != a:
            return False
        for x, y in pairs:
            if omega(x)(omega(y)(a)) != omega(magma.op(x, y))(a):
                return False
    return True


def algebra_eval(p, args, omega, prod):
    """Act by a noncrossing clique on a list of algebra elements.

    The action goes through the labeled tree: a bubble sends its
    inputs through the unary maps of its border letters, multiplies
    left-to-right, and applies the unary map of its base.

    >>> from cliqueops.magma import make_standard
    >>> n4 = make_standard("N", 4)
    >>> alg = WordAlgebra(n4)
    >>> word = algebra_eval(triangle(n4, 1, 2, 0), [(0, 2, 1, 1), (3, 1, 2)],
    ...                     alg.omega, alg.prod)
    >>> "".join(str(v) for v in word)
    '3100023'
    """
    assert len(args) == p.arity, "argument count must match the arity"
    t = bubble_tree(p)
    if t.is_leaf():
        return args[0]

    def eval_node(node, values):
        pieces = []
        pos = 0
        for child, lab in zip(node.children, node.labels):
            if child == LEAF:
                piece = values[pos]
                pos += 1
            else:
                piece = eval_node(child, values[pos:pos + child._leaves])
                pos += child._leaves
            pieces.append(omega(lab)(piece))
        out = pieces[0]
        for piece in pieces[1:]:
            out = prod(out, piece)
        return out

    return omega(t.root_label)(eval_node(t.top, list(args)))


def triangle_product(tri, a1, a2, omega, prod):
    """The binary operation of an algebra attached to one triangle."""
    return algebra_eval(tri, [a1, a2], omega, prod)


def free_algebra_product(tri, q, r):
    """The free-algebra binary product on noncrossing cliques: feed
    the right operand into slot 2 and the left into slot 1.

    >>> from cliqueops.magma import make_standard
    >>> z = make_standard("Z", 0)
    >>> u = unit_clique(z)
    >>> free_algebra_product(triangle(z, 0, 0, 0), u, u) == triangle(z, 0, 0, 0)
    True
    """
    return compose(compose(tri, 2, r), 1, q)


class WordAlgebra:
    """Words over an associative magma; letters act elementwise.

    The unary map of x sends each letter w to x*w; the product is
    concatenation.  Requires an associative operation so that the
    unary maps compose like the magma.

    >>> from cliqueops.magma import make_standard
    >>> alg = WordAlgebra(make_standard("D", 1))
    >>> alg.omega(2)((0, 1, 2))   # d1 * (1, 0, d1) erases to (d1, 0, 0)
    (2, 1, 1)
    """

    def __init__(self, magma):
        if magma.is_finite():
            for x in magma.elements():
                for y in magma.elements():
                    for z in magma.elements():
                        assert magma.op(magma.op(x, y), z) == magma.op(x, magma.op(y, z)), \
                            "word algebras need an associative operation"
        self.magma = magma

    def omega(self, x):
        return lambda w: tuple(self.magma.op(x, v) for v in w)

    @staticmethod
    def prod(u, v):
        return u + v

    def parse(self, text):
        return tuple(self.magma.element_named(ch) for ch in text)

    def render(self, word):
        return "".join(self.magma.name_of(v) for v in word)


class ConstantTermAlgebra:
    """Univariate rational-coefficient polynomials with the map that
    collapses a polynomial to its constant term.

    Built for the two-element magma whose non-unit element is
    idempotent and absorbing: the unit acts as the identity and the
    other element acts by taking the constant term.

    >>> alg = ConstantTermAlgebra()
    >>> alg.omega(1)((3, 2, 1))
    (3,)
    """

    def omega(self, x):
        if x == UNIT:
            return lambda f: f
        return lambda f: (f[0],) if f else ()

    @staticmethod
    def prod(f, g):
        out = [Fraction(0)] * (max(len(f) + len(g) - 1, 0))
        for a, fa in enumerate(f):
            for b, gb in enumerate(g):
                out[a + b] += fa * gb
        return tuple(out)

    @staticmethod
    def poly(*coeffs):
        return tuple(Fraction(c) for c in coeffs)


class SelectedConcatAlgebra:
    """Noncommutative polynomials over letters 1..ell, where the
    subset-magma acts by killing every word missing a selected letter.

    Elements are dicts word-tuple -> rational.  The unary map of a
    subset S keeps exactly the words using every letter of S; the
    product is the bilinear concatenation.

    >>> from cliqueops.magma import make_standard
    >>> s3 = make_standard("S", 3)
    >>> alg = SelectedConcatAlgebra(s3)
    >>> f = alg.poly({(1, 3): 1, (2, 2): 1})
    >>> alg.omega(s3.element_named("{2}"))(f)
    {(2, 2): Fraction(1, 1)}
    """

    def __init__(self, magma):
        assert magma.label.startswith("S")
        self.magma = magma
        # Decode each subset element back to its member letters.
        self._members = []
        for idx in magma.elements():
            name = magma.name_of(idx)
            inner = name.strip("{}")
            self._members.append(frozenset(int(s) for s in inner.split(",") if s))

    @staticmethod
    def poly(terms):
        return {tuple(w): Fraction(c) for w, c in terms.items() if c}

    def omega(self, x):
        required = self._members[x]

        def act(f):
            return {w: c for w, c in f.items()
                    if all(any(v == j for v in w) for j in required)}

        return act

    @staticmethod
    def prod(f, g):
        out = {}
        for u, a in f.items():
            for v, b in g.items():
                w = u + v
                c = out.get(w, Fraction(0)) + a * b
                if c:
                    out[w] = c
                else:
                    out.pop(w, None)
        return out


# ----------------------------------------------------------------------
# tree text format

def to_tree_text(t, magma=None):
    """Render `(root-label: child[label], ...)` with `leaf` atoms.

    >>> from cliqueops.magma import make_standard
    >>> n2 = make_standard("N", 2)
    >>> to_tree_text(corolla(n2, 1, (0, 1)))
    '(1: leaf[0], leaf[1])'
    >>> to_tree_text(leaf_tree(n2))
    'leaf'
    """
    m = magma or t.magma

    def render(node):
        parts = []
        for child, lab in zip(node.children, node.labels):
            body = "leaf" if child == LEAF else "(" + render(child) + ")"
            parts.append(f"{body}[{m.name_of(lab)}]")
        return ", ".join(parts)

    if t.is_leaf():
        return "leaf"
    return f"({m.name_of(t.root_label)}: {render(t.top)})"


def parse_tree(text, magma):
    """Parse the format of :func:`to_tree_text`.

    >>> from cliqueops.magma import make_standard
    >>> n2 = make_standard("N", 2)
    >>> parse_tree("(1: leaf[0], (leaf[1], leaf[1])[1])", n2).arity
    3
    """
    text = text.strip()
    if text == "leaf":
        return leaf_tree(magma)
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"expected a parenthesized tree, got {text!r}")
    head, _, body = text[1:-1].partition(":")

    def split_items(s):
        # Split on top-level commas only.
        items, depth, start = [], 0, 0
        for k, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                items.append(s[start:k])
                start = k + 1
        items.append(s[start:])
        return [item.strip() for item in items if item.strip()]

    def parse_item(item):
        if not item.endswith("]"):
            raise ValueError(f"child needs a [label] suffix: {item!r}")
        bracket = item.rindex("[")
        body_text, label_text = item[:bracket], item[bracket + 1:-1]
        label = magma.element_named(label_text.strip())
        body_text = body_text.strip()
        if body_text == "leaf":
            return LEAF, label
        if body_text.startswith("(") and body_text.endswith(")"):
            return parse_node(body_text[1:-1]), label
        raise ValueError(f"bad child {item!r}")

    def parse_node(s):
        pairs = [parse_item(item) for item in split_items(s)]
        return _Node([c for c, _ in pairs], [l for _, l in pairs])

    root_label = magma.element_named(head.strip())
    return SchroderTree(magma, root_label, parse_node(body))
