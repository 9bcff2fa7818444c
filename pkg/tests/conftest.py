"""Shared fixtures and hypothesis strategies for the cliqueops test suite.

The strategies build random decorated cliques over the small standard
magmas, random integer-labelled cliques, and random (clique, position,
clique) composition setups, which most property tests need.
"""

import pytest
from hypothesis import strategies as st

from cliqueops.clique import Clique
from cliqueops.magma import UNIT, make_standard


@pytest.fixture(scope="session")
def n2():
    return make_standard("N", 2)


@pytest.fixture(scope="session")
def n3():
    return make_standard("N", 3)


@pytest.fixture(scope="session")
def d0():
    return make_standard("D", 0)


@pytest.fixture(scope="session")
def d1():
    return make_standard("D", 1)


@pytest.fixture(scope="session")
def e2():
    return make_standard("E", 2)


@pytest.fixture(scope="session")
def zed():
    return make_standard("Z")


def cliques(magma, min_arity=1, max_arity=4, label_pool=None):
    """Strategy producing decorated cliques over ``magma``.

    ``label_pool`` defaults to all elements of a finite magma; for the
    integer magma a small window around zero is used so that arithmetic
    stays readable in failure reports.
    """
    if label_pool is None:
        if magma.is_finite():
            label_pool = list(magma.elements())
        else:
            label_pool = list(range(-2, 3))

    def build(arity, picks):
        arcs = [(x, y) for x in range(1, arity + 1)
                for y in range(x + 1, arity + 2)]
        labels = {}
        for arc, lab in zip(arcs, picks):
            if lab != UNIT:
                labels[arc] = lab
        return Clique(magma, arity, labels)

    def for_arity(arity):
        # The only arity-1 clique is the operadic unit.
        if arity == 1:
            return st.just(Clique(magma, 1))
        count = (arity + 1) * arity // 2
        return st.tuples(
            st.just(arity),
            st.lists(st.sampled_from(label_pool),
                     min_size=count, max_size=count),
        ).map(lambda t: build(*t))

    return st.integers(min_value=min_arity, max_value=max_arity).flatmap(
        for_arity)


def composition_setups(magma, min_arity=1, max_arity=3, label_pool=None):
    """Strategy producing ``(p, i, q)`` with ``1 <= i <= arity(p)``."""
    def attach_position(p):
        return st.tuples(
            st.just(p),
            st.integers(min_value=1, max_value=p.arity),
        )

    return cliques(magma, min_arity, max_arity, label_pool).flatmap(
        attach_position).flatmap(
        lambda pi: st.tuples(
            st.just(pi[0]), st.just(pi[1]),
            cliques(magma, min_arity, max_arity, label_pool)))
