"""Decorated cliques and their partial composition.

A decorated clique of arity n is a complete graph on the vertices
1..n+1 whose arcs carry magma elements; arcs labeled by the unit are
called empty, the others solid.  Only solid arcs are stored.  Special
arcs: the base is (1, n+1), the i-th edge is (i, i+1), and every other
arc is a diagonal.

The cliques of a fixed magma form an operad: composing p at position i
with q glues the base of q onto the i-th edge of p, the glued arc
receiving the product of the two labels it replaces.

>>> from cliqueops.magma import make_standard
>>> z = make_standard("Z", 0)
>>> p = triangle(z, 1, 2, 3)
>>> q = triangle(z, 5, 7, 0)
>>> print(to_text(compose(p, 1, q), z))
clique 3 { 1-2:7 ; 1-3:7 ; 1-4:1 ; 3-4:3 }
"""

from __future__ import annotations

import itertools

from .magma import UNIT


class Clique:
    """An immutable decorated clique.

    ``labels`` maps arcs (x, y) with 1 <= x < y <= arity+1 to non-unit
    magma elements; unit arcs are never stored.

    >>> from cliqueops.magma import make_standard
    >>> d0 = make_standard("D", 0)
    >>> p = Clique(d0, 3, {(1, 3): 1, (2, 4): 1})
    >>> p.label(1, 3), p.label(1, 2)
    (1, 0)
    """

    __slots__ = ("magma", "arity", "labels", "_key")

    def __init__(self, magma, arity, labels=None):
        assert arity >= 1
        # Convention: the only arity-1 clique is the operadic unit,
        # whose single arc is empty.
        assert arity >= 2 or not labels or all(v == UNIT for v in labels.values()), \
            "the arity-1 clique must be the unit"
        items = []
        if labels:
            for (x, y), v in labels.items():
                assert 1 <= x < y <= arity + 1, f"bad arc ({x},{y}) at arity {arity}"
                if v != UNIT:
                    items.append(((x, y), v))
        items.sort()
        self.magma = magma
        self.arity = arity
        self.labels = dict(items)
        self._key = (arity, tuple(items))

    @staticmethod
    def _raw(magma, arity, items):
        # Internal constructor for pre-validated sorted (arc, label) items.
        c = object.__new__(Clique)
        c.magma = magma
        c.arity = arity
        c.labels = dict(items)
        c._key = (arity, tuple(items))
        return c

    def label(self, x, y):
        """Label of the arc (x, y); the unit when the arc is empty."""
        assert 1 <= x < y <= self.arity + 1
        return self.labels.get((x, y), UNIT)

    def base(self):
        return self.label(1, self.arity + 1)

    def edge(self, i):
        """Label of the i-th edge (i, i+1), 1 <= i <= arity."""
        assert 1 <= i <= self.arity
        return self.label(i, i + 1)

    def border(self):
        """Word of the edge labels, from edge 1 to edge arity."""
        return tuple(self.edge(i) for i in range(1, self.arity + 1))

    def all_arcs(self):
        """Every arc (x, y) of the complete graph, solid or not."""
        n = self.arity
        return ((x, y) for x in range(1, n + 1) for y in range(x + 1, n + 2))

    def solid_arcs(self):
        return self.labels.items()

    def solid_diagonals(self):
        n = self.arity
        return [((x, y), v) for (x, y), v in self.labels.items()
                if not (y - x == 1 or (x, y) == (1, n + 1))]

    def is_bubble(self):
        return not self.solid_diagonals()

    def is_triangle(self):
        return self.arity == 2

    def __eq__(self, other):
        if not isinstance(other, Clique):
            return NotImplemented
        return self._key == other._key and self.magma == other.magma

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        inner = " ; ".join(f"{x}-{y}:{v}" for (x, y), v in self.labels.items())
        return f"Clique({self.arity}; {inner})"


# ----------------------------------------------------------------------
# constructors

def unit_clique(magma):
    """The arity-1 clique with empty base: the operadic unit."""
    return Clique(magma, 1, {})


def bubble(magma, base, border):
    """The diagonal-free clique with the given base label and border.

    >>> from cliqueops.magma import make_standard
    >>> b = bubble(make_standard("D", 0), 0, [0, 1, 0])
    >>> b.base(), b.border()
    (0, (0, 1, 0))
    """
    labels = {(1, len(border) + 1): base}
    for i, v in enumerate(border, start=1):
        labels[(i, i + 1)] = v
    return Clique(magma, len(border), labels)


def triangle(magma, base, e1, e2):
    """The arity-2 clique with the given base and edge labels."""
    return bubble(magma, base, [e1, e2])


def all_cliques(magma, arity):
    """Iterate over every clique of the given arity (finite magmas).

    >>> from cliqueops.magma import make_standard
    >>> sum(1 for _ in all_cliques(make_standard("N", 2), 2))
    8
    >>> sum(1 for _ in all_cliques(make_standard("N", 2), 1))
    1
    """
    if arity == 1:
        yield unit_clique(magma)
        return
    arcs = [(x, y) for x in range(1, arity + 1) for y in range(x + 1, arity + 2)]
    m = magma.size()
    for assignment in itertools.product(range(m), repeat=len(arcs)):
        yield Clique(magma, arity,
                     {arc: v for arc, v in zip(arcs, assignment) if v != UNIT})


# ----------------------------------------------------------------------
# partial composition

def compose(p, i, q):
    """Partial composition: glue the base of q onto the i-th edge of p.

    The result has arity |p| + |q| - 1.  Arcs of p keep their labels
    with vertices above i shifted by |q| - 1; arcs of q are shifted by
    i - 1; the glued arc (i, i + |q|) receives the product of the i-th
    edge label of p with the base label of q.

    >>> from cliqueops.magma import make_standard
    >>> n2 = make_standard("N", 2)
    >>> p = triangle(n2, 0, 1, 0)
    >>> q = triangle(n2, 1, 0, 0)
    >>> compose(p, 1, q).label(1, 3)   # 1 + 1 = 0 mod 2: glued arc empty
    0
    """
    assert p.magma == q.magma, "magma mismatch"
    n, m = p.arity, q.arity
    if not 1 <= i <= n:
        raise IndexError(f"composition position {i} out of range 1..{n}")
    items = []
    # Arcs of p, except the i-th edge which is consumed by the gluing.
    for (a, b), v in p.labels.items():
        if a == i and b == i + 1:
            continue
        if b <= i:
            items.append(((a, b), v))
        elif a <= i:
            items.append(((a, b + m - 1), v))
        else:
            items.append(((a + m - 1, b + m - 1), v))
    # Arcs of q, except its base which is consumed by the gluing.
    for (u, v_), w in q.labels.items():
        if u == 1 and v_ == m + 1:
            continue
        items.append(((u + i - 1, v_ + i - 1), w))
    # The glued arc carries the product of the two consumed labels.
    glue = p.magma.op(p.labels.get((i, i + 1), UNIT),
                      q.labels.get((1, m + 1), UNIT))
    if glue != UNIT:
        items.append(((i, i + m), glue))
    items.sort()
    # The three shifted arc families and the glued arc are pairwise
    # disjoint, so no arc can appear twice.
    assert all(items[k][0] != items[k + 1][0] for k in range(len(items) - 1))
    return Clique._raw(p.magma, n + m - 1, items)


def compose_many(p, args):
    """Complete composition p(q_1, ..., q_n): substitute every slot.

    >>> from cliqueops.magma import make_standard
    >>> z = make_standard("Z", 0)
    >>> u = unit_clique(z)
    >>> compose_many(triangle(z, 1, 2, 3), [u, u]) == triangle(z, 1, 2, 3)
    True
    """
    assert len(args) == p.arity
    result = p
    # Substitute right-to-left so earlier positions stay valid.
    for i in range(p.arity, 0, -1):
        result = compose(result, i, args[i - 1])
    return result


# ----------------------------------------------------------------------
# statistics

def _crossing_pairs(arcs):
    """Yield index pairs of crossing arcs from a list of (x, y)."""
    for a in range(len(arcs)):
        x, y = arcs[a]
        for b in range(a + 1, len(arcs)):
            u, v = arcs[b]
            if x < u < y < v or u < x < v < y:
                yield a, b


def crossing(p):
    """Largest number of solid diagonals crossing one solid diagonal.

    >>> from cliqueops.magma import make_standard
    >>> d0 = make_standard("D", 0)
    >>> crossing(Clique(d0, 3, {(1, 3): 1, (2, 4): 1}))
    1
    """
    diags = [arc for arc, _ in p.solid_diagonals()]
    counts = [0] * len(diags)
    for a, b in _crossing_pairs(diags):
        counts[a] += 1
        counts[b] += 1
    return max(counts, default=0)


def degree(p):
    """Largest number of solid arcs meeting at one vertex."""
    counts = [0] * (p.arity + 2)
    for (x, y), _ in p.solid_arcs():
        counts[x] += 1
        counts[y] += 1
    return max(counts)


def is_inclusion_free(p):
    """True iff no solid arc strictly includes another solid arc.

    The arc (x, y) includes (x', y') when x <= x' < y' <= y.
    """
    arcs = [arc for arc, _ in p.solid_arcs()]
    for (x, y), (u, v) in itertools.permutations(arcs, 2):
        if x <= u < v <= y:
            return False
    return True


def is_acyclic(p):
    """True iff the graph of solid arcs has no cycle."""
    parent = list(range(p.arity + 2))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for (x, y), _ in p.solid_arcs():
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        parent[rx] = ry
    return True


def is_white(p):
    """True iff the base and all edges are empty."""
    n = p.arity
    if p.base() != UNIT:
        return False
    return all(p.edge(i) == UNIT for i in range(1, n + 1))


def is_prime(p):
    """True iff arity >= 2 and every diagonal, solid or not, is
    crossed by some solid diagonal.

    >>> from cliqueops.magma import make_standard
    >>> is_prime(triangle(make_standard("D", 0), 0, 0, 0))
    True
    """
    if p.arity < 2:
        return False
    n = p.arity
    solid = [arc for arc, _ in p.solid_diagonals()]
    for x in range(1, n + 1):
        for y in range(x + 2, n + 2):
            if (x, y) == (1, n + 1):
                continue
            if not any(x < u < y < v or u < x < v < y for u, v in solid):
                return False
    return True


def skeleton(p):
    """Adjacency list of the graph of solid arcs on vertices 1..n+1."""
    adj = {v: [] for v in range(1, p.arity + 2)}
    for (x, y), _ in p.solid_arcs():
        adj[x].append(y)
        adj[y].append(x)
    return {v: sorted(ws) for v, ws in adj.items()}


def statistics(p):
    """All clique statistics in one record (a plain dict)."""
    return {
        "degree": degree(p),
        "crossing": crossing(p),
        "is_noncrossing": crossing(p) == 0,
        "is_bubble": p.is_bubble(),
        "is_triangle": p.is_triangle(),
        "is_inclusion_free": is_inclusion_free(p),
        "is_acyclic": is_acyclic(p),
        "is_white": is_white(p),
        "is_prime": is_prime(p),
        "border": [p.magma.name_of(v) for v in p.border()],
        "skeleton": skeleton(p),
    }


# ----------------------------------------------------------------------
# symmetries and relabeling

def rotate(p):
    """One-step rotation: arc labels advance around the polygon.

    The rotated clique r satisfies r(x, y) = p(x+1, y+1) when
    y <= arity, and r(x, n+1) = p(1, x+1).

    >>> from cliqueops.magma import make_standard
    >>> n2 = make_standard("N", 2)
    >>> t = triangle(n2, 1, 0, 1)
    >>> rotate(rotate(rotate(t))) == t
    True
    """
    n = p.arity
    labels = {}
    for (x, y), v in p.solid_arcs():
        # Invert the defining formula: source (x+1, y+1) means target
        # (x-1, y-1); source (1, x+1) means target (x-1, n+1).
        if x >= 2:
            labels[(x - 1, y - 1)] = v
        else:
            labels[(y - 1, n + 1)] = v
    return Clique(p.magma, n, labels)


def returned(p):
    """Reflection through the vertical axis: r(x, y) = p(n-y+2, n-x+2).

    >>> from cliqueops.magma import make_standard
    >>> z = make_standard("Z", 0)
    >>> returned(triangle(z, 5, 1, 2)) == triangle(z, 5, 2, 1)
    True
    """
    n = p.arity
    labels = {}
    for (x, y), v in p.solid_arcs():
        labels[(n - y + 2, n - x + 2)] = v
    return Clique(p.magma, n, labels)


def is_magma_morphism(theta, source, target, window=8):
    """Check that theta maps source to target preserving unit and
    products (exhaustive when finite, windowed for the integers)."""
    if theta(UNIT) != UNIT:
        return False
    domain = source.elements() if source.is_finite() else range(-window, window + 1)
    for x in domain:
        for y in domain:
            if theta(source.op(x, y)) != target.op(theta(x), theta(y)):
                return False
    return True


def relabel(p, theta, target_magma, check=True):
    """Apply a magma morphism to every arc label.

    >>> from cliqueops.magma import make_standard
    >>> z = make_standard("Z", 0)
    >>> relabel(triangle(z, 1, -2, 0), lambda v: -v, z) == triangle(z, -1, 2, 0)
    True
    """
    if check:
        assert is_magma_morphism(theta, p.magma, target_magma), "not a magma morphism"
    labels = {arc: theta(v) for arc, v in p.solid_arcs()}
    return Clique(target_magma, p.arity, labels)


# ----------------------------------------------------------------------
# text format

def to_text(p, magma=None):
    """Render `clique <n> { <x>-<y>:<label> ; ... }`, arcs sorted.

    >>> from cliqueops.magma import make_standard
    >>> to_text(unit_clique(make_standard("D", 0)))
    'clique 1 { }'
    """
    m = magma or p.magma
    inner = " ; ".join(f"{x}-{y}:{m.name_of(v)}" for (x, y), v in sorted(p.solid_arcs()))
    return f"clique {p.arity} {{ {inner} }}".replace("{  }", "{ }")


def parse_clique(text, magma):
    """Parse the format produced by :func:`to_text` (any arc order).

    >>> from cliqueops.magma import make_standard
    >>> z = make_standard("Z", 0)
    >>> parse_clique("clique 3 { 1-4:1 ; 1-2:7 ; 1-3:7 ; 3-4:3 }", z).label(1, 3)
    7
    """
    text = text.strip()
    if not text.startswith("clique "):
        raise ValueError(f"expected `clique <n> {{ ... }}`, got {text!r}")
    head, _, body = text[len("clique "):].partition("{")
    arity = int(head.strip())
    body = body.rstrip()
    if not body.endswith("}"):
        raise ValueError("missing closing brace")
    body = body[:-1].strip()
    labels = {}
    if body:
        for item in body.split(";"):
            item = item.strip()
            arc_part, _, label_part = item.partition(":")
            x_part, _, y_part = arc_part.strip().partition("-")
            arc = (int(x_part), int(y_part))
            if arc in labels:
                raise ValueError(f"duplicate arc {arc}")
            labels[arc] = magma.element_named(label_part.strip())
    return Clique(magma, arity, labels)
