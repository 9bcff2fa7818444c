"""Tests for decorated cliques: construction, partial composition,
statistics, the rotation and reflection symmetries, relabeling, and the
text format."""

import itertools

import pytest
from hypothesis import given, settings

from cliqueops.clique import (
    Clique,
    all_cliques,
    bubble,
    compose,
    compose_many,
    crossing,
    degree,
    is_acyclic,
    is_inclusion_free,
    is_magma_morphism,
    is_prime,
    is_white,
    parse_clique,
    relabel,
    returned,
    rotate,
    skeleton,
    statistics,
    to_text,
    triangle,
    unit_clique,
)
from cliqueops.magma import UNIT, make_standard

from conftest import cliques, composition_setups

N2 = make_standard("N", 2)
D0 = make_standard("D", 0)
Z = make_standard("Z")


# ----------------------------------------------------------------------
# construction and accessors

def test_construction_validates_arcs():
    with pytest.raises(AssertionError):
        Clique(N2, 2, {(2, 2): 1})
    with pytest.raises(AssertionError):
        Clique(N2, 2, {(1, 4): 1})
    with pytest.raises(AssertionError):
        Clique(N2, 2, {(0, 2): 1})


def test_unit_labels_are_normalized_away():
    p = Clique(N2, 3, {(1, 2): 0, (1, 3): 1})
    assert (1, 2) not in p.labels
    assert p.label(1, 2) == UNIT
    assert p.label(1, 3) == 1


def test_accessors_on_triangle():
    t = triangle(Z, 7, -1, 4)
    assert t.arity == 2
    assert t.base() == 7
    assert t.edge(1) == -1
    assert t.edge(2) == 4
    assert t.border() == (-1, 4)
    assert t.is_triangle() and t.is_bubble()


def test_bubble_and_unit():
    b = bubble(D0, 1, [0, 1, 0])
    assert b.arity == 3
    assert b.base() == 1
    assert [b.edge(i) for i in (1, 2, 3)] == [0, 1, 0]
    assert b.is_bubble() and not b.is_triangle()
    assert b.solid_diagonals() == []
    one = unit_clique(D0)
    assert one.arity == 1 and one.base() == UNIT and one.edge(1) == UNIT


def test_all_cliques_counts():
    # m^(n(n+1)/2) cliques of arity n over a magma of size m.
    assert sum(1 for _ in all_cliques(N2, 1)) == 1
    assert sum(1 for _ in all_cliques(N2, 2)) == 8
    assert sum(1 for _ in all_cliques(N2, 3)) == 64
    assert sum(1 for _ in all_cliques(make_standard("N", 3), 2)) == 27


# ----------------------------------------------------------------------
# partial composition

def _compose_oracle(p, i, q):
    """Independent re-derivation of composition through vertex maps.

    Vertices of p map by a -> a if a <= i else a + m - 1, vertices of q
    by c -> c + i - 1; each target arc multiplies the labels of every
    source arc landing on it (only the glue arc receives two).
    """
    n, m = p.arity, q.arity
    mg = p.magma
    landed = {}

    def put(x, y, v):
        landed[(x, y)] = mg.op(landed.get((x, y), UNIT), v)

    for (a, b), v in p.solid_arcs():
        x = a if a <= i else a + m - 1
        y = b if b <= i else b + m - 1
        put(x, y, v)
    # The glue also multiplies on the right by q's base, so feed p's
    # edge first and q's arcs after to respect the operation order.
    for (c, d), v in q.solid_arcs():
        put(c + i - 1, d + i - 1, v)
    return Clique(mg, n + m - 1, landed)


@pytest.mark.parametrize("magma", [N2, D0])
def test_compose_matches_vertex_map_oracle_exhaustive(magma):
    pool2 = list(all_cliques(magma, 2))
    for p, q in itertools.product(pool2, repeat=2):
        for i in (1, 2):
            assert compose(p, i, q) == _compose_oracle(p, i, q)


@settings(max_examples=300)
@given(composition_setups(Z, max_arity=4))
def test_compose_matches_vertex_map_oracle_random(setup):
    p, i, q = setup
    assert compose(p, i, q) == _compose_oracle(p, i, q)


def test_compose_concrete_example():
    # Gluing a triangle onto position 1 of a triangle over the integers:
    # the shared arc multiplies the outer edge with the inner base.
    p = triangle(Z, 2, 3, 5)
    q = triangle(Z, 7, 11, 13)
    r = compose(p, 1, q)
    assert r.arity == 3
    assert r.label(1, 4) == 2          # base of p survives
    assert r.label(3, 4) == 5          # edge 2 of p shifts
    assert r.label(1, 3) == 3 + 7      # glue: edge 1 of p times base of q
    assert r.label(1, 2) == 11 and r.label(2, 3) == 13


def test_compose_unit_laws():
    one = unit_clique(N2)
    for p in all_cliques(N2, 3):
        assert compose(one, 1, p) == p
        for i in (1, 2, 3):
            assert compose(p, i, one) == p


def test_compose_many_flattening():
    p = triangle(Z, 1, 2, 3)
    q1 = triangle(Z, 10, 20, 30)
    q2 = triangle(Z, -1, -2, -3)
    full = compose_many(p, [q1, q2])
    step = compose(compose(p, 2, q2), 1, q1)
    assert full == step and full.arity == 4


def test_compose_arity_bounds():
    p = triangle(N2, 0, 0, 0)
    with pytest.raises(IndexError):
        compose(p, 0, p)
    with pytest.raises(IndexError):
        compose(p, 3, p)


# ----------------------------------------------------------------------
# statistics

def test_crossing_and_degree():
    p = Clique(D0, 3, {(1, 3): 1, (2, 4): 1})
    assert crossing(p) == 1
    assert degree(p) == 1
    q = Clique(D0, 4, {(1, 3): 1, (2, 4): 1, (2, 5): 1})
    assert crossing(q) == 2
    assert degree(q) == 2
    assert crossing(bubble(D0, 1, [1, 1, 1])) == 0


def test_inclusion_and_acyclicity():
    assert is_inclusion_free(Clique(D0, 3, {(1, 3): 1, (2, 4): 1}))
    assert not is_inclusion_free(Clique(D0, 3, {(1, 4): 1, (2, 3): 1}))
    assert is_acyclic(Clique(D0, 3, {(1, 2): 1, (2, 3): 1, (3, 4): 1}))
    assert not is_acyclic(Clique(D0, 3, {(1, 2): 1, (2, 3): 1, (1, 3): 1}))


def test_white_and_prime():
    assert is_white(Clique(D0, 3, {(1, 3): 1, (2, 4): 1}))
    assert not is_white(Clique(D0, 3, {(1, 2): 1}))
    assert is_prime(triangle(D0, 0, 0, 0))
    assert is_prime(Clique(D0, 3, {(1, 3): 1, (2, 4): 1}))
    assert not is_prime(Clique(D0, 3, {(1, 3): 1}))
    assert not is_prime(unit_clique(D0))


def test_skeleton_and_statistics_record():
    p = Clique(D0, 3, {(1, 3): 1, (2, 4): 1})
    assert skeleton(p) == {1: [3], 2: [4], 3: [1], 4: [2]}
    st = statistics(p)
    assert st["crossing"] == 1 and not st["is_noncrossing"]
    assert st["is_white"] and st["is_acyclic"] and st["is_prime"]
    assert st["border"] == ["1", "1", "1"]


# ----------------------------------------------------------------------
# rotation and reflection

# Fixture pair: an arity-5 integer clique and its one-step rotation,
# checked arc by arc against the defining formula.
ROTATE_IN = Clique(Z, 5, {(1, 2): 1, (1, 5): -2, (2, 3): -2, (3, 5): 1})
ROTATE_OUT = Clique(Z, 5, {(1, 2): -2, (1, 6): 1, (2, 4): 1, (4, 6): -2})
RETURN_OUT = Clique(Z, 5, {(2, 4): 1, (2, 6): -2, (4, 5): -2, (5, 6): 1})


def test_rotate_fixture():
    assert rotate(ROTATE_IN) == ROTATE_OUT


def test_returned_fixture():
    assert returned(ROTATE_IN) == RETURN_OUT


def test_rotate_fixes_unit_and_has_order_arity_plus_one():
    assert rotate(unit_clique(N2)) == unit_clique(N2)
    for p in all_cliques(N2, 3):
        r = p
        for _ in range(p.arity + 1):
            r = rotate(r)
        assert r == p


def test_rotate_composition_law_exhaustive_arity_two():
    # rotate(p o_i q) is rotate(q) o_m rotate(p) for i = 1 and
    # rotate(p) o_{i-1} q otherwise.
    pool = list(all_cliques(N2, 2))
    for p, q in itertools.product(pool, repeat=2):
        assert rotate(compose(p, 1, q)) == compose(rotate(q), q.arity, rotate(p))
        assert rotate(compose(p, 2, q)) == compose(rotate(p), 1, q)


@settings(max_examples=200)
@given(composition_setups(Z, max_arity=3))
def test_returned_is_an_antiautomorphism(setup):
    p, i, q = setup
    lhs = returned(compose(p, i, q))
    rhs = compose(returned(p), p.arity - i + 1, returned(q))
    assert lhs == rhs


@settings(max_examples=200)
@given(cliques(Z, max_arity=5))
def test_returned_is_an_involution(p):
    assert returned(returned(p)) == p


# ----------------------------------------------------------------------
# relabeling

def test_is_magma_morphism():
    assert is_magma_morphism(lambda v: v % 2, Z, N2)
    assert is_magma_morphism(lambda v: -v, Z, Z)
    assert not is_magma_morphism(lambda v: abs(v), Z, Z)
    assert not is_magma_morphism(lambda v: 1, Z, N2)


def test_relabel_rejects_non_morphisms():
    with pytest.raises(AssertionError):
        relabel(triangle(Z, 1, 2, 3), lambda v: abs(v), Z)


@settings(max_examples=150)
@given(composition_setups(Z, max_arity=3))
def test_relabel_commutes_with_composition(setup):
    p, i, q = setup
    theta = lambda v: v % 2
    lhs = relabel(compose(p, i, q), theta, N2, check=False)
    rhs = compose(relabel(p, theta, N2, check=False),
                  i, relabel(q, theta, N2, check=False))
    assert lhs == rhs


# ----------------------------------------------------------------------
# text format

def test_text_round_trip_concrete():
    p = Clique(D0, 3, {(1, 3): 1, (2, 4): 1})
    text = to_text(p)
    assert text == "clique 3 { 1-3:0 ; 2-4:0 }"
    assert parse_clique(text, D0) == p
    assert parse_clique("clique 1 { }", D0) == unit_clique(D0)


@settings(max_examples=150)
@given(cliques(Z, max_arity=4))
def test_text_round_trip_random_integer(p):
    assert parse_clique(to_text(p), Z) == p


@settings(max_examples=150)
@given(cliques(D0, max_arity=4))
def test_text_round_trip_random_finite(p):
    assert parse_clique(to_text(p), D0) == p
