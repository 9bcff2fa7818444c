"""Syntax trees over arity-2 generators and the oriented rewriting that
presents the noncrossing operad.

Trees are binary here: every internal node carries a triangle (an
arity-2 decorated clique) and two subtrees.  Three oriented rules push
non-unit base labels upward and re-associate left combs whose touching
labels cancel; the rules terminate and are confluent, the normal forms
are counted by the dimensions of the noncrossing operad, and the span
of all rule applications in arity 3 is the quadratic relation space.
The dual relation space pairs to zero against it under the signed
two-node pairing.

>>> from cliqueops.magma import make_standard
>>> from cliqueops.clique import triangle
>>> n2 = make_standard("N", 2)
>>> t = node(triangle(n2, 0, 1, 0), node(triangle(n2, 1, 0, 1), LEAF, LEAF), LEAF)
>>> normal = normalize(t, n2)
>>> eval_tree(normal, n2) == eval_tree(t, n2)
True
>>> is_normal_form(normal, n2)
True
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .magma import UNIT
from .clique import compose, to_text, triangle, unit_clique

LEAF = "leaf"


class Node:
    """An internal syntax-tree node: one arity-2 generator, two subtrees."""

    __slots__ = ("gen", "left", "right", "_leaves")

    def __init__(self, gen, left, right):
        assert gen.arity == 2, "generators are triangles"
        self.gen = gen
        self.left = left
        self.right = right
        self._leaves = ((1 if left == LEAF else left._leaves)
                        + (1 if right == LEAF else right._leaves))

    def __eq__(self, other):
        if not isinstance(other, Node):
            return NotImplemented
        return (self.gen == other.gen and self.left == other.left
                and self.right == other.right)

    def __hash__(self):
        return hash((self.gen, self.left, self.right))

    def __repr__(self):
        return tree_text(self)


def node(gen, left, right):
    return Node(gen, left, right)


def tree_arity(t):
    return 1 if t == LEAF else t._leaves


def compose_tree(s, i, t):
    """Graft t onto the i-th leaf of s (free composition of trees).

    >>> from cliqueops.magma import make_standard
    >>> from cliqueops.clique import triangle
    >>> n2 = make_standard("N", 2)
    >>> g = triangle(n2, 0, 0, 0)
    >>> tree_arity(compose_tree(corolla(g), 2, corolla(g)))
    3
    """
    assert 1 <= i <= tree_arity(s)
    if s == LEAF:
        return t
    a = tree_arity(s.left)
    if i <= a:
        return Node(s.gen, compose_tree(s.left, i, t), s.right)
    return Node(s.gen, s.left, compose_tree(s.right, i - a, t))


def corolla(gen):
    return Node(gen, LEAF, LEAF)


def eval_tree(t, magma):
    """Evaluate a syntax tree by complete composition of its generators.

    >>> from cliqueops.magma import make_standard
    >>> from cliqueops.clique import triangle, unit_clique
    >>> n2 = make_standard("N", 2)
    >>> eval_tree(LEAF, n2) == unit_clique(n2)
    True
    >>> g = triangle(n2, 1, 0, 1)
    >>> eval_tree(corolla(g), n2) == g
    True
    """
    if t == LEAF:
        return unit_clique(magma)
    result = t.gen
    if t.right != LEAF:
        result = compose(result, 2, eval_tree(t.right, magma))
    if t.left != LEAF:
        result = compose(result, 1, eval_tree(t.left, magma))
    return result


# ----------------------------------------------------------------------
# the oriented rules

def _step_at(x, magma):
    # Try the three rules at node x; return the rewritten node or None.
    p = x.gen
    p0, p1, p2 = p.base(), p.edge(1), p.edge(2)
    if x.left != LEAF:
        q = x.left.gen
        q0, q1, q2 = q.base(), q.edge(1), q.edge(2)
        # rule 1: absorb a solid base below position 1 into the edge above
        if q0 != UNIT:
            return Node(triangle(magma, p0, magma.op(p1, q0), p2),
                        Node(triangle(magma, UNIT, q1, q2), x.left.left, x.left.right),
                        x.right)
        # rule 2: touching labels cancel, re-associate to the right
        if magma.op(p1, q0) == UNIT:
            return Node(triangle(magma, p0, q1, UNIT),
                        x.left.left,
                        Node(triangle(magma, UNIT, q2, p2), x.left.right, x.right))
    if x.right != LEAF:
        q = x.right.gen
        q0, q1, q2 = q.base(), q.edge(1), q.edge(2)
        # rule 3: absorb a solid base below position 2
        if q0 != UNIT:
            return Node(triangle(magma, p0, p1, magma.op(p2, q0)),
                        x.left,
                        Node(triangle(magma, UNIT, q1, q2), x.right.left, x.right.right))
    return None


def rewrite_step(t, magma):
    """One leftmost-outermost rule application; None on a normal form.

    >>> from cliqueops.magma import make_standard
    >>> from cliqueops.clique import triangle
    >>> n2 = make_standard("N", 2)
    >>> rewrite_step(corolla(triangle(n2, 1, 1, 0)), n2) is None
    True
    """
    if t == LEAF:
        return None
    stepped = _step_at(t, magma)
    if stepped is not None:
        return stepped
    if t.left != LEAF:
        sub = rewrite_step(t.left, magma)
        if sub is not None:
            return Node(t.gen, sub, t.right)
    if t.right != LEAF:
        sub = rewrite_step(t.right, magma)
        if sub is not None:
            return Node(t.gen, t.left, sub)
    return None


def rewrite_successors(t, magma):
    """Every tree reachable in exactly one rule application anywhere."""
    out = []
    if t == LEAF:
        return out
    p = t.gen
    p0, p1, p2 = p.base(), p.edge(1), p.edge(2)
    if t.left != LEAF:
        q = t.left.gen
        q0, q1, q2 = q.base(), q.edge(1), q.edge(2)
        if q0 != UNIT:
            out.append(Node(triangle(magma, p0, magma.op(p1, q0), p2),
                            Node(triangle(magma, UNIT, q1, q2), t.left.left, t.left.right),
                            t.right))
        if magma.op(p1, q0) == UNIT:
            out.append(Node(triangle(magma, p0, q1, UNIT),
                            t.left.left,
                            Node(triangle(magma, UNIT, q2, p2), t.left.right, t.right)))
        out.extend(Node(t.gen, sub, t.right) for sub in rewrite_successors(t.left, magma))
    if t.right != LEAF:
        q = t.right.gen
        q0, q1, q2 = q.base(), q.edge(1), q.edge(2)
        if q0 != UNIT:
            out.append(Node(triangle(magma, p0, p1, magma.op(p2, q0)),
                            t.left,
                            Node(triangle(magma, UNIT, q1, q2), t.right.left, t.right.right)))
        out.extend(Node(t.gen, t.left, sub) for sub in rewrite_successors(t.right, magma))
    return out


def termination_measure(t):
    """The pair (sum of left-subtree node counts, count of solid bases);
    every rule application strictly decreases it lexicographically.

    >>> from cliqueops.magma import make_standard
    >>> from cliqueops.clique import triangle
    >>> n2 = make_standard("N", 2)
    >>> termination_measure(corolla(triangle(n2, 1, 0, 0)))
    (0, 1)
    """
    if t == LEAF:
        return (0, 0)

    def walk(x):
        # returns (internal nodes, alpha, beta)
        if x == LEAF:
            return (0, 0, 0)
        ln, la, lb = walk(x.left)
        rn, ra, rb = walk(x.right)
        return (1 + ln + rn,
                la + ra + ln,
                lb + rb + (1 if x.gen.base() != UNIT else 0))

    _, alpha, beta = walk(t)
    return (alpha, beta)


def normalize(t, magma):
    """Apply rules to exhaustion; the result is the unique normal form.

    >>> from cliqueops.magma import make_standard
    >>> from cliqueops.clique import triangle
    >>> n2 = make_standard("N", 2)
    >>> g = triangle(n2, 1, 1, 1)
    >>> nf = normalize(node(g, corolla(g), LEAF), n2)
    >>> is_normal_form(nf, n2)
    True
    """
    measure = termination_measure(t)
    while True:
        stepped = rewrite_step(t, magma)
        if stepped is None:
            return t
        new_measure = termination_measure(stepped)
        assert new_measure < measure, "every step must shrink the measure"
        t, measure = stepped, new_measure


def is_normal_form(t, magma):
    """Check the two structural conditions: below any node the bases are
    empty, and a node with an internal left child has a solid first edge."""
    if t == LEAF:
        return True

    def ok(x, is_root):
        if x == LEAF:
            return True
        if not is_root and x.gen.base() != UNIT:
            return False
        if x.left != LEAF and x.gen.edge(1) == UNIT:
            return False
        return ok(x.left, False) and ok(x.right, False)

    return ok(t, True)


# ----------------------------------------------------------------------
# enumeration and counting

def all_triangles(magma):
    elems = magma.elements()
    return [triangle(magma, b, e1, e2)
            for b in elems for e1 in elems for e2 in elems]


def syntax_trees(magma, n):
    """All syntax trees with n leaves over every triangle generator.

    >>> from cliqueops.magma import make_standard
    >>> len(syntax_trees(make_standard("N", 2), 3))
    128
    """
    assert magma.is_finite()
    gens = all_triangles(magma)
    out = {1: [LEAF]}
    for k in range(2, n + 1):
        out[k] = [Node(g, l, r)
                  for a in range(1, k)
                  for l in out[a]
                  for r in out[k - a]
                  for g in gens]
    return out[n]


def normal_forms(magma, n):
    """Direct construction of the normal forms with n leaves.

    >>> from cliqueops.magma import make_standard
    >>> len(normal_forms(make_standard("N", 2), 2))
    8
    """
    assert magma.is_finite()
    elems = magma.elements()
    solid = magma.nonunit_elements()

    memo = {1: [LEAF]}

    def subtrees(k):
        # normal-form subtrees with empty root base
        if k in memo:
            return memo[k]
        out = []
        for a in range(1, k):
            for left in subtrees(a):
                e1_choices = elems if left == LEAF else solid
                for right in subtrees(k - a):
                    for e1 in e1_choices:
                        for e2 in elems:
                            out.append(Node(triangle(magma, UNIT, e1, e2), left, right))
        memo[k] = out
        return out

    if n == 1:
        return [LEAF]
    result = []
    for t in subtrees(n):
        for b in elems:
            result.append(Node(triangle(magma, b, t.gen.edge(1), t.gen.edge(2)),
                               t.left, t.right))
    return result


def count_normal_forms(magma, n):
    """Count normal forms with n leaves without building them.

    >>> from cliqueops.magma import make_standard
    >>> [count_normal_forms(make_standard("N", 2), k) for k in range(1, 6)]
    [1, 8, 48, 352, 2880]
    """
    assert magma.is_finite()
    m = magma.size()
    if n == 1:
        return 1
    # a[k]: normal-form subtrees with k leaves and empty root base.
    a = [0, 1]
    for k in range(2, n + 1):
        total = 0
        for i in range(1, k):
            weight = m if i == 1 else m - 1
            total += weight * m * a[i] * a[k - i]
        a.append(total)
    return m * a[n]


# ----------------------------------------------------------------------
# relation spaces

def _lin(*pairs):
    out = {}
    for coeff, t in pairs:
        c = out.get(t, Fraction(0)) + Fraction(coeff)
        if c:
            out[t] = c
        else:
            out.pop(t, None)
    return out


def _left_tree(magma, p0, p1, p2, q0, q1, q2):
    return Node(triangle(magma, p0, p1, p2),
                corolla(triangle(magma, q0, q1, q2)), LEAF)


def _right_tree(magma, p0, p1, p2, q0, q1, q2):
    return Node(triangle(magma, p0, p1, p2),
                LEAF, corolla(triangle(magma, q0, q1, q2)))


def relation_generators(magma):
    """The quadratic relation family of the noncrossing operad: all
    differences of arity-3 trees with equal evaluation, organized in
    the three displayed shapes."""
    assert magma.is_finite()
    elems = magma.elements()
    out = []
    for p0, p2, q1, q2 in itertools.product(elems, repeat=4):
        # products landing on each solid delta, position 1 and position 2
        by_delta_1, by_delta_2, kill_1 = {}, {}, []
        for u, v in itertools.product(elems, repeat=2):
            d = magma.op(u, v)
            if d == UNIT:
                kill_1.append(_left_tree(magma, p0, u, p2, v, q1, q2))
            else:
                by_delta_1.setdefault(d, []).append(_left_tree(magma, p0, u, p2, v, q1, q2))
                by_delta_2.setdefault(d, []).append(_right_tree(magma, p0, q1, u, v, q2, p2))
        for group in by_delta_1.values():
            out.extend(_lin((1, t), (-1, group[0])) for t in group[1:])
        for group in by_delta_2.values():
            out.extend(_lin((1, t), (-1, group[0])) for t in group[1:])
        # unit products: both shapes collapse to the diagonal-free square
        kill_2 = [_right_tree(magma, p0, q1, u, v, q2, p2)
                  for u, v in itertools.product(elems, repeat=2)
                  if magma.op(u, v) == UNIT]
        ref = kill_2[0]
        out.extend(_lin((1, t), (-1, ref)) for t in kill_1)
        out.extend(_lin((1, t), (-1, ref)) for t in kill_2[1:])
    return out


def dual_relation_generators(magma):
    """The relation family of the dual: summed fibers over each solid
    product in both shapes, and the signed unit-fiber combination."""
    assert magma.is_finite()
    elems = magma.elements()
    out = []
    for p0, p2, q1, q2 in itertools.product(elems, repeat=4):
        fibers_1, fibers_2 = {}, {}
        signed = []
        for u, v in itertools.product(elems, repeat=2):
            d = magma.op(u, v)
            if d == UNIT:
                signed.append((1, _left_tree(magma, p0, u, p2, v, q1, q2)))
                signed.append((-1, _right_tree(magma, p0, q1, u, v, q2, p2)))
            else:
                fibers_1.setdefault(d, []).append(_left_tree(magma, p0, u, p2, v, q1, q2))
                fibers_2.setdefault(d, []).append(_right_tree(magma, p0, q1, u, v, q2, p2))
        for group in fibers_1.values():
            out.append(_lin(*((1, t) for t in group)))
        for group in fibers_2.values():
            out.append(_lin(*((1, t) for t in group)))
        out.append(_lin(*signed))
    return [f for f in out if f]


def span_rank(vectors):
    """Rank of a family of sparse tree-indexed vectors, exactly.

    >>> span_rank([])
    0
    """
    pivots = {}
    rank = 0
    for vec in vectors:
        vec = dict(vec)
        while vec:
            key = min(vec, key=_tree_sort_key)
            if key in pivots:
                factor = vec[key]
                for k, c in pivots[key].items():
                    nc = vec.get(k, Fraction(0)) - factor * c
                    if nc:
                        vec[k] = nc
                    else:
                        vec.pop(k, None)
            else:
                lead = vec[key]
                pivots[key] = {k: c / lead for k, c in vec.items()}
                rank += 1
                break
    return rank


def in_span(vectors, target):
    """Whether target lies in the span of the vectors."""
    return span_rank(list(vectors)) == span_rank(list(vectors) + [target])


def _tree_sort_key(t):
    if t == LEAF:
        return (0,)
    return (1, tuple(sorted(t.gen.labels.items())),
            _tree_sort_key(t.left), _tree_sort_key(t.right))


def relation_space_dimension(magma):
    """Exact dimension of the quadratic relation space.

    >>> from cliqueops.magma import make_standard
    >>> relation_space_dimension(make_standard("N", 2))
    80
    """
    return span_rank(relation_generators(magma))


def dual_relation_space_dimension(magma):
    """Exact dimension of the dual relation space.

    >>> from cliqueops.magma import make_standard
    >>> dual_relation_space_dimension(make_standard("N", 2))
    48
    """
    return span_rank(dual_relation_generators(magma))


# ----------------------------------------------------------------------
# the signed pairing on two-node trees

def _two_node_shape(t):
    # (position, parent generator, child generator) for a two-node tree
    if t == LEAF or not isinstance(t, Node):
        return None
    if t.left != LEAF and t.right == LEAF and t.left.left == LEAF and t.left.right == LEAF:
        return (1, t.gen, t.left.gen)
    if t.right != LEAF and t.left == LEAF and t.right.left == LEAF and t.right.right == LEAF:
        return (2, t.gen, t.right.gen)
    return None


def pairing(s, t):
    """+1 when both trees compose at position 1 with equal generators,
    -1 when both compose at position 2 with equal generators, else 0.

    >>> from cliqueops.magma import make_standard
    >>> from cliqueops.clique import triangle
    >>> n2 = make_standard("N", 2)
    >>> g = triangle(n2, 1, 0, 1)
    >>> s = node(g, corolla(g), LEAF)
    >>> pairing(s, s), pairing(node(g, LEAF, corolla(g)), node(g, LEAF, corolla(g)))
    (1, -1)
    """
    a, b = _two_node_shape(s), _two_node_shape(t)
    if a is None or b is None or a != b:
        return 0
    return 1 if a[0] == 1 else -1


def pairing_lin(f, g):
    """Bilinear extension of the signed pairing to tree combinations."""
    total = Fraction(0)
    for s, cs in f.items():
        shape = _two_node_shape(s)
        if shape is None:
            continue
        ct = g.get(s)
        if ct:
            total += cs * ct * (1 if shape[0] == 1 else -1)
    return total


# ----------------------------------------------------------------------
# text output

def tree_text(t, magma=None):
    """Render a syntax tree with clique literals at the nodes.

    >>> from cliqueops.magma import make_standard
    >>> from cliqueops.clique import triangle
    >>> n2 = make_standard("N", 2)
    >>> tree_text(node(triangle(n2, 0, 1, 0), LEAF, LEAF))
    '(clique 2 { 1-2:1 }: leaf, leaf)'
    """
    if t == LEAF:
        return "leaf"
    return (f"({to_text(t.gen, magma)}: {tree_text(t.left, magma)}, "
            f"{tree_text(t.right, magma)})")


def lincomb_text(f, magma=None):
    """Render a tree combination deterministically."""
    if not f:
        return "0"
    items = sorted(f.items(), key=lambda kv: _tree_sort_key(kv[0]))
    return " + ".join(f"{c} * {tree_text(t, magma)}" for t, c in items)
