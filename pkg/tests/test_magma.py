"""Tests for the unitary-magma layer: built-ins, predicates, products,
and the Cayley-table text format."""

import itertools

import pytest
from hypothesis import given, strategies as st

from cliqueops.magma import (
    UNIT,
    Magma,
    from_cayley_lines,
    make_standard,
    pair_index,
    pair_of,
    parse_magma_label,
    product,
    to_cayley_lines,
)


STANDARD_LABELS = ["N1", "N2", "N3", "D0", "D1", "D2", "E1", "E2", "S2", "BNC", "Z"]


def _standard(label):
    return parse_magma_label(label)


@pytest.mark.parametrize("label", STANDARD_LABELS)
def test_unit_is_two_sided(label):
    m = _standard(label)
    domain = m.elements() if m.is_finite() else range(-6, 7)
    for x in domain:
        assert m.op(UNIT, x) == x
        assert m.op(x, UNIT) == x


def test_expected_sizes():
    assert make_standard("N", 2).size() == 2
    assert make_standard("N", 3).size() == 3
    assert make_standard("D", 0).size() == 2
    assert make_standard("D", 1).size() == 3
    assert make_standard("E", 2).size() == 3
    assert make_standard("S", 2).size() == 4
    assert make_standard("BNC").size() == 3
    with pytest.raises(ValueError):
        make_standard("Z").size()


def test_specific_products():
    n2 = make_standard("N", 2)
    assert n2.op(1, 1) == 0                       # 1 + 1 = 0 mod 2
    n3 = make_standard("N", 3)
    assert n3.name_of(n3.op(2, 2)) == "1"         # 2 + 2 = 1 mod 3
    d1 = make_standard("D", 1)
    zero = d1.element_named("0")
    dee = d1.element_named("d1")
    assert d1.op(dee, dee) == zero                # every non-unit product is 0
    assert d1.op(zero, dee) == zero
    e2 = make_standard("E", 2)
    assert e2.op(e2.element_named("e1"), e2.element_named("e2")) == UNIT
    bnc = make_standard("BNC")
    a, b = bnc.element_named("a"), bnc.element_named("b")
    assert bnc.op(a, a) == a
    assert bnc.op(b, b) == b
    assert bnc.op(a, b) == UNIT
    assert bnc.op(b, a) == UNIT


def test_unit_divisor_classification():
    # The cyclic magmas of size >= 2 and the E-family have nontrivial
    # unit divisors; the D-family and the set-union magmas do not.
    assert not make_standard("N", 2).has_no_nontrivial_unit_divisors()
    assert not make_standard("N", 3).has_no_nontrivial_unit_divisors()
    assert not make_standard("E", 1).has_no_nontrivial_unit_divisors()
    assert not make_standard("BNC").has_no_nontrivial_unit_divisors()
    assert make_standard("N", 1).has_no_nontrivial_unit_divisors()
    assert make_standard("D", 0).has_no_nontrivial_unit_divisors()
    assert make_standard("D", 2).has_no_nontrivial_unit_divisors()
    assert make_standard("S", 2).has_no_nontrivial_unit_divisors()
    assert make_standard("Z").has_no_nontrivial_unit_divisors()


def test_right_cancellable_classification():
    assert make_standard("N", 2).is_right_cancellable()
    assert make_standard("N", 3).is_right_cancellable()
    assert make_standard("Z").is_right_cancellable()
    assert not make_standard("D", 0).is_right_cancellable()
    assert not make_standard("E", 2).is_right_cancellable()
    assert not make_standard("S", 2).is_right_cancellable()


def test_quasi_injectivity():
    d0 = make_standard("D", 0)
    # 0*1 = 1*0 = 0, so factors are not determined.
    assert not d0.is_quasi_injective([0, 1], [0, 1])
    assert d0.is_quasi_injective([0], [0, 1])
    e2 = make_standard("E", 2)
    assert e2.is_quasi_injective([0], [1, 2])
    assert not e2.is_quasi_injective([0, 1], [0, 1])


def test_rank_functions():
    assert make_standard("Z").check_rank_function(lambda k: k)
    assert make_standard("Z").check_rank_function(lambda k: -3 * k)
    assert not make_standard("Z").check_rank_function(lambda k: abs(k))
    assert not make_standard("N", 2).check_rank_function(lambda x: x)
    # The only additive map on a finite magma with idempotents is zero.
    assert make_standard("BNC").check_rank_function(lambda x: 0)


def test_unit_table_validation():
    with pytest.raises(AssertionError):
        Magma("bad", ["u", "x"], [[1, 0], [0, 1]])
    with pytest.raises(AssertionError):
        Magma("dup", ["u", "u"], [[0, 1], [1, 0]])


def test_product_magma_componentwise():
    d0 = make_standard("D", 0)
    prod = product(d0, d0)
    assert prod.size() == 4
    for (x1, x2), (y1, y2) in itertools.product(
            itertools.product(d0.elements(), repeat=2), repeat=2):
        v = prod.op(pair_index(d0.size(), x1, x2),
                    pair_index(d0.size(), y1, y2))
        assert pair_of(d0.size(), v) == (d0.op(x1, y1), d0.op(x2, y2))


def test_pair_index_round_trip():
    for x in range(3):
        for y in range(4):
            assert pair_of(4, pair_index(4, x, y)) == (x, y)


@pytest.mark.parametrize("label", ["N2", "D1", "E2", "S2", "BNC"])
def test_cayley_text_round_trip(label):
    m = _standard(label)
    lines = to_cayley_lines(m)
    again = from_cayley_lines(lines)
    assert again == m
    assert again.names == m.names


def test_parse_magma_label_errors():
    with pytest.raises(ValueError):
        parse_magma_label("Q7")
    with pytest.raises(ValueError):
        parse_magma_label("N0")


@given(st.integers(-30, 30), st.integers(-30, 30), st.integers(-30, 30))
def test_integer_magma_is_associative(a, b, c):
    z = make_standard("Z")
    assert z.op(z.op(a, b), c) == z.op(a, z.op(b, c))


@pytest.mark.parametrize("label", ["N2", "N3", "D0", "D1", "E1", "S2"])
def test_standard_finite_magmas_are_associative(label):
    m = _standard(label)
    for x, y, z in itertools.product(m.elements(), repeat=3):
        assert m.op(m.op(x, y), z) == m.op(x, m.op(y, z))


def test_nonassociative_magmas():
    # Several built-ins are genuinely just magmas, not monoids.
    bnc = make_standard("BNC")
    a, b = bnc.element_named("a"), bnc.element_named("b")
    assert bnc.op(bnc.op(a, a), b) != bnc.op(a, bnc.op(a, b))
    e2 = make_standard("E", 2)
    e1x, e2x = e2.element_named("e1"), e2.element_named("e2")
    assert e2.op(e2.op(e1x, e1x), e2x) != e2.op(e1x, e2.op(e1x, e2x))
