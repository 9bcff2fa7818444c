"""Tests for the noncrossing suboperad: base-region decomposition,
labeled-tree realization, tree composition with contraction, algebra
actions, and the tree text format."""

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cliqueops.clique import (
    Clique, all_cliques, bubble, compose, crossing, triangle, unit_clique,
)
from cliqueops.families import FamilySpec, enumerate_members
from cliqueops.magma import UNIT, make_standard
from cliqueops.ncm import (
    LEAF,
    ConstantTermAlgebra,
    SelectedConcatAlgebra,
    WordAlgebra,
    algebra_eval,
    base_area_decomposition,
    bubble_tree,
    check_omega_compatibility,
    corolla,
    free_algebra_product,
    from_bubble_tree,
    leaf_tree,
    parse_tree,
    schroder_compose,
    to_tree_text,
    triangle_product,
)

N2 = make_standard("N", 2)
D0 = make_standard("D", 0)
D1 = make_standard("D", 1)
Z = make_standard("Z")


def _nc_pool(magma, max_arity):
    spec = FamilySpec("NC", magma, mode="suboperad")
    pool = []
    for n in range(1, max_arity + 1):
        pool.extend(enumerate_members(spec, n))
    return pool


NC_D0_3 = _nc_pool(D0, 3)
NC_N2_3 = _nc_pool(N2, 3)


# ----------------------------------------------------------------------
# decomposition

def test_base_area_decomposition_doc_example():
    p = Clique(D0, 3, {(1, 3): 1, (3, 4): 1})
    region, parts = base_area_decomposition(p)
    assert region == bubble(D0, 0, [1, 1])
    assert parts[0].arity == 2 and parts[0].labels == {}
    assert parts[1] == unit_clique(D0)


def test_base_area_decomposition_reconstructs():
    for p in NC_N2_3:
        if p.arity == 1:
            continue
        region, parts = base_area_decomposition(p)
        rebuilt = region
        for i in range(len(parts), 0, -1):
            if parts[i - 1].arity > 1:
                rebuilt = compose(rebuilt, i, parts[i - 1])
        assert rebuilt == p
        assert all(part.base() == UNIT for part in parts)


def test_base_area_decomposition_rejects_crossings():
    with pytest.raises(AssertionError):
        base_area_decomposition(Clique(D0, 3, {(1, 3): 1, (2, 4): 1}))


# ----------------------------------------------------------------------
# trees

def test_bubble_tree_round_trip_exhaustive_small():
    for p in NC_D0_3 + NC_N2_3:
        t = bubble_tree(p)
        assert t.arity == p.arity
        assert from_bubble_tree(t) == p


def test_bubble_tree_of_unit_and_bubbles():
    assert bubble_tree(unit_clique(D0)).is_leaf()
    assert bubble_tree(bubble(D0, 1, [0, 1])) == corolla(D0, 1, (0, 1))
    assert from_bubble_tree(leaf_tree(D0)) == unit_clique(D0)


# Arity-9 integer fixture: a clique with nested base regions, whose
# tree has four internal nodes on three levels.
P9 = Clique(Z, 9, {(1, 2): 1, (1, 5): 2, (1, 10): 1, (2, 3): 4, (2, 4): 1,
                   (3, 4): 2, (5, 6): 3, (5, 9): 3, (5, 10): 1, (6, 9): 2,
                   (7, 8): 1})
P9_TEXT = ("(1: (leaf[1], (leaf[4], leaf[2])[1], leaf[0])[2], "
           "((leaf[3], (leaf[0], leaf[1], leaf[0])[2])[3], leaf[0])[1])")


def test_arity_nine_integer_tree():
    t = bubble_tree(P9)
    assert to_tree_text(t) == P9_TEXT
    assert from_bubble_tree(t) == P9
    assert parse_tree(P9_TEXT, Z) == t


def test_tree_text_round_trip_small():
    for p in NC_D0_3:
        t = bubble_tree(p)
        assert parse_tree(to_tree_text(t), D0) == t


# ----------------------------------------------------------------------
# tree composition

def test_schroder_compose_commutes_with_clique_compose():
    pool = [p for p in NC_N2_3 if p.arity <= 2]
    for p, q in itertools.product(pool, repeat=2):
        for i in range(1, p.arity + 1):
            lhs = bubble_tree(compose(p, i, q))
            rhs = schroder_compose(bubble_tree(p), i, bubble_tree(q))
            assert lhs == rhs, (p, i, q)


def test_schroder_compose_contracts_unit_edges():
    # Composing the all-empty triangles merges the two nodes into a
    # single 3-slot node: plain grafting would keep two nodes, so the
    # tree map is not a morphism of plain (uncontracted) grafting.
    tri = triangle(D0, UNIT, UNIT, UNIT)
    composed = bubble_tree(compose(tri, 1, tri))

    def internal_nodes(node):
        if node == LEAF:
            return 0
        return 1 + sum(internal_nodes(c) for c in node.children)

    assert internal_nodes(composed.top) == 1
    assert internal_nodes(bubble_tree(tri).top) == 1
    assert schroder_compose(bubble_tree(tri), 1, bubble_tree(tri)) == composed


def test_schroder_compose_keeps_solid_edges():
    s = corolla(N2, 0, (1, 0))
    t = corolla(N2, 1, (0, 1))
    # Slot label 1 times root label 1 contracts (1+1=0 mod 2) ...
    assert schroder_compose(s, 1, t).top.labels == (0, 1, 0)
    # ... while slot label 0 times root label 1 stays solid.
    kept = schroder_compose(s, 2, t)
    assert kept.top.labels == (1, 1)
    assert kept.top.children[1] != LEAF


def test_schroder_unit_laws():
    one = leaf_tree(N2)
    for p in NC_N2_3:
        t = bubble_tree(p)
        assert schroder_compose(one, 1, t) == t
        for i in range(1, t.arity + 1):
            assert schroder_compose(t, i, one) == t


# ----------------------------------------------------------------------
# algebras

def test_word_algebra_action():
    n4 = make_standard("N", 4)
    alg = WordAlgebra(n4)
    word = algebra_eval(triangle(n4, 1, 2, 0), [(0, 2, 1, 1), (3, 1, 2)],
                        alg.omega, alg.prod)
    assert alg.render(word) == "3100023"
    assert check_omega_compatibility(n4, alg.omega,
                                     [(0,), (1, 2), (3, 0, 1)])


def test_word_algebra_rejects_nonassociative_magmas():
    with pytest.raises(AssertionError):
        WordAlgebra(make_standard("E", 2))


def test_constant_term_algebra():
    alg = ConstantTermAlgebra()
    f = alg.poly(3, 2, 1)
    assert alg.omega(1)(f) == (Fraction(3),)
    assert alg.omega(UNIT)(f) == f
    g = alg.prod(alg.poly(1, 1), alg.poly(1, -1))
    assert g == (Fraction(1), Fraction(0), Fraction(-1))
    assert check_omega_compatibility(D0, alg.omega,
                                     [alg.poly(1, 2), alg.poly(0, 0, 5)])


def test_selected_concat_algebra():
    s2 = make_standard("S", 2)
    alg = SelectedConcatAlgebra(s2)
    f = alg.poly({(1, 2): 1, (1, 1): 2})
    both = s2.element_named("{1,2}")
    assert alg.omega(both)(f) == {(1, 2): Fraction(1)}
    assert check_omega_compatibility(s2, alg.omega, [f, alg.poly({(2,): 1})])


@pytest.mark.parametrize("algebra,magma,elements", [
    ("word", "N2", [(0,), (1, 0), (1, 1, 0)]),
    ("const", "D0", [(1, 2), (3,), (0, 1, 1)]),
    ("concat", "S2", [{(1,): 1}, {(2, 1): 2}, {(1, 2): 1, (2,): -1}]),
])
def test_action_respects_composition(algebra, magma, elements):
    # The defining property of an action: evaluating a composite clique
    # equals evaluating the outer clique on a block-evaluated input.
    m = make_standard(magma[0], int(magma[1:]))
    if algebra == "word":
        alg = WordAlgebra(m)
        elements = [tuple(e) for e in elements]
    elif algebra == "const":
        alg = ConstantTermAlgebra()
        elements = [ConstantTermAlgebra.poly(*e) for e in elements]
    else:
        alg = SelectedConcatAlgebra(m)
        elements = [SelectedConcatAlgebra.poly(e) for e in elements]
    rng = random.Random(11)
    pool = _nc_pool(m, 3)
    for _ in range(60):
        p = rng.choice(pool)
        q = rng.choice(pool)
        i = rng.randrange(1, p.arity + 1)
        args = [rng.choice(elements) for _ in range(p.arity + q.arity - 1)]
        whole = algebra_eval(compose(p, i, q), args, alg.omega, alg.prod)
        inner = algebra_eval(q, args[i - 1:i - 1 + q.arity], alg.omega, alg.prod)
        outer_args = args[:i - 1] + [inner] + args[i - 1 + q.arity:]
        outer = algebra_eval(p, outer_args, alg.omega, alg.prod)
        assert whole == outer


def test_unit_clique_acts_as_identity():
    alg = ConstantTermAlgebra()
    f = alg.poly(2, 7)
    assert algebra_eval(unit_clique(D0), [f], alg.omega, alg.prod) == f


def test_triangle_product_and_free_product():
    alg = WordAlgebra(N2)
    t = triangle(N2, 0, 0, 0)
    assert triangle_product(t, (1,), (0, 1), alg.omega, alg.prod) == (1, 0, 1)
    u = unit_clique(Z)
    zt = triangle(Z, 0, 0, 0)
    assert free_algebra_product(zt, u, u) == zt
    # Plugging cliques into both slots realizes the free algebra on
    # the operad itself.
    left = triangle(Z, 0, 1, 0)
    assert free_algebra_product(zt, left, u) == compose(zt, 1, left)


def test_associative_triangle_gives_associative_product():
    # The all-empty triangle satisfies the associativity identity, so
    # its induced product on any algebra is associative.
    alg = WordAlgebra(N2)
    t = triangle(N2, 0, 0, 0)
    words = [(0,), (1,), (0, 1), (1, 1, 0)]
    for a, b, c in itertools.product(words, repeat=3):
        lhs = triangle_product(t, triangle_product(t, a, b, alg.omega, alg.prod),
                               c, alg.omega, alg.prod)
        rhs = triangle_product(t, a, triangle_product(t, b, c, alg.omega, alg.prod),
                               alg.omega, alg.prod)
        assert lhs == rhs
