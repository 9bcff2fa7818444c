"""Unitary magmas: binary operations with a two-sided unit.

A unitary magma is a carrier set together with a binary operation that
admits a two-sided unit.  Nothing else is assumed: the operation need
not be associative or commutative.  Finite magmas are stored as Cayley
tables over dense integer indices, with index 0 reserved for the unit.
The additive integers are supported as the single built-in infinite
magma.

>>> m = make_standard("E", 2)
>>> x = m.op(1, m.op(1, 2))    # e1 * (e1 * e2) = e1 * 1 = e1
>>> y = m.op(m.op(1, 1), 2)    # (e1 * e1) * e2 = 1 * e2 = e2
>>> m.name_of(x), m.name_of(y)
('e1', 'e2')
"""

from __future__ import annotations

import itertools

# The unit element always has index 0 (finite case) or value 0 (integer
# case), so `x == 0` tests unitality regardless of the magma kind.
UNIT = 0


class Magma:
    """A unitary magma, either finite (Cayley table) or the integers.

    Finite elements are integer indices into ``names``; the element of
    the integer magma is the integer itself.  Values are immutable
    after construction and safe to share.

    >>> m = make_standard("D", 1)
    >>> m.name_of(m.op(2, 2))      # d1 * d1 = 0
    '0'
    >>> z = make_standard("Z", 0)
    >>> z.op(3, -5)
    -2
    """

    __slots__ = ("kind", "label", "names", "table", "_index_of")

    def __init__(self, label, names=None, table=None):
        # ``names is None`` selects the infinite additive-integer magma.
        self.label = label
        if names is None:
            self.kind = "Z"
            self.names = None
            self.table = None
            self._index_of = None
            return
        self.kind = "finite"
        assert len(names) == len(set(names)), "duplicate element names"
        assert len(table) == len(names)
        for row in table:
            assert len(row) == len(names)
            assert all(0 <= v < len(names) for v in row)
        # Unit checks: row 0 and column 0 must act as the identity.
        for i in range(len(names)):
            assert table[UNIT][i] == i, "names[0] is not a left unit"
            assert table[i][UNIT] == i, "names[0] is not a right unit"
        self.names = tuple(names)
        self.table = tuple(tuple(row) for row in table)
        self._index_of = {s: i for i, s in enumerate(names)}

    # ------------------------------------------------------------------
    # basic structure

    def is_finite(self):
        return self.kind == "finite"

    def size(self):
        """Number of elements; raises for the integer magma."""
        if not self.is_finite():
            raise ValueError("the integer magma is infinite")
        return len(self.names)

    def elements(self):
        """All element indices, unit first; raises for the integers."""
        return range(self.size())

    def nonunit_elements(self):
        return range(1, self.size())

    def op(self, x, y):
        """Product of two elements.

        >>> make_standard("N", 2).op(1, 1)
        0
        """
        if self.kind == "Z":
            return x + y
        return self.table[x][y]

    def name_of(self, x):
        if self.kind == "Z":
            return str(x)
        return self.names[x]

    def element_named(self, s):
        """Inverse of :meth:`name_of`.

        >>> m = make_standard("S", 2)
        >>> m.name_of(m.element_named("{1,2}"))
        '{1,2}'
        """
        if self.kind == "Z":
            return int(s)
        try:
            return self._index_of[s]
        except KeyError:
            raise ValueError(f"unknown element {s!r} of magma {self.label}") from None

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Magma):
            return NotImplemented
        return (self.kind, self.names, self.table) == (other.kind, other.names, other.table)

    def __hash__(self):
        return hash((self.kind, self.names, self.table))

    def __repr__(self):
        return f"Magma({self.label})"

    # ------------------------------------------------------------------
    # structural predicates

    def is_right_cancellable(self):
        """True iff y*x = z*x forces y = z.

        >>> make_standard("N", 2).is_right_cancellable()
        True
        >>> make_standard("D", 0).is_right_cancellable()
        False
        """
        if not self.is_finite():
            return True
        n = self.size()
        for x in range(n):
            seen = set()
            for y in range(n):
                v = self.table[y][x]
                if v in seen:
                    return False
                seen.add(v)
        return True

    def has_no_nontrivial_unit_divisors(self):
        """True iff x*y = unit forces x = y = unit.

        >>> make_standard("D", 2).has_no_nontrivial_unit_divisors()
        True
        >>> make_standard("E", 1).has_no_nontrivial_unit_divisors()
        False
        >>> make_standard("N", 2).has_no_nontrivial_unit_divisors()
        False
        """
        if not self.is_finite():
            return True
        n = self.size()
        for x in range(n):
            for y in range(n):
                if self.table[x][y] == UNIT and (x != UNIT or y != UNIT):
                    return False
        return True

    def is_quasi_injective(self, left_set, right_set):
        """True iff products from left_set * right_set that avoid the
        unit determine both factors uniquely.

        Formally: x*y = x'*y' != unit with x,x' in left_set and
        y,y' in right_set implies x = x' and y = y'.

        >>> d0 = make_standard("D", 0)
        >>> d0.is_quasi_injective([0, 1], [0, 1])
        False
        >>> e2 = make_standard("E", 2)
        >>> e2.is_quasi_injective([0], [1, 2])
        True
        """
        if not self.is_finite():
            raise ValueError("quasi-injectivity scan needs a finite magma")
        producer = {}
        for x in left_set:
            for y in right_set:
                v = self.table[x][y]
                if v == UNIT:
                    continue
                if v in producer and producer[v] != (x, y):
                    return False
                producer[v] = (x, y)
        return True

    def check_rank_function(self, theta, window=10):
        """True iff theta is an additive map to the integers.

        Requires theta(unit) = 0 and theta(x*y) = theta(x) + theta(y).
        Finite magmas are scanned exhaustively; the integer magma is
        scanned over the window [-window, window].

        >>> make_standard("Z", 0).check_rank_function(lambda k: k)
        True
        >>> make_standard("N", 2).check_rank_function(lambda x: x)
        False
        >>> make_standard("BNC", 0).check_rank_function(lambda x: 0)
        True
        """
        if theta(UNIT) != 0:
            return False
        if self.is_finite():
            domain = self.elements()
        else:
            domain = range(-window, window + 1)
        for x in domain:
            for y in domain:
                if theta(self.op(x, y)) != theta(x) + theta(y):
                    return False
        return True


# ----------------------------------------------------------------------
# built-in magmas

def make_standard(name, ell=0):
    """Construct a built-in unitary magma.

    ``N``  cyclic additive magma on {0,...,ell-1}, unit 0 (ell >= 1).
    ``D``  {1, 0, d1..d_ell}: 0 absorbs, and di*dj = 0 (ell >= 0).
    ``E``  {1, e1..e_ell}: ei*ej = 1 (ell >= 0).
    ``S``  subsets of {1..ell} under union, unit {} (ell >= 1).
    ``Z``  additive integers (ell ignored).
    ``BNC``  {1, a, b}: a*a = a, b*b = b, a*b = b*a = 1.

    >>> make_standard("N", 3).name_of(make_standard("N", 3).op(2, 2))
    '1'
    >>> make_standard("BNC").name_of(make_standard("BNC").op(1, 2))
    '1'
    """
    if name == "Z":
        return Magma("Z")
    if name == "N":
        if ell < 1:
            raise ValueError("N requires ell >= 1")
        names = [str(i) for i in range(ell)]
        table = [[(i + j) % ell for j in range(ell)] for i in range(ell)]
        return Magma(f"N{ell}", names, table)
    if name == "D":
        if ell < 0:
            raise ValueError("D requires ell >= 0")
        names = ["1", "0"] + [f"d{i}" for i in range(1, ell + 1)]
        n = len(names)
        # Any product of two non-unit elements collapses to 0 (index 1).
        table = [[j if i == 0 else (i if j == 0 else 1) for j in range(n)] for i in range(n)]
        return Magma(f"D{ell}", names, table)
    if name == "E":
        if ell < 0:
            raise ValueError("E requires ell >= 0")
        names = ["1"] + [f"e{i}" for i in range(1, ell + 1)]
        n = len(names)
        # Any product of two non-unit elements collapses to the unit.
        table = [[j if i == 0 else (i if j == 0 else 0) for j in range(n)] for i in range(n)]
        return Magma(f"E{ell}", names, table)
    if name == "S":
        if ell < 1:
            raise ValueError("S requires ell >= 1")
        # Order subsets by (size, lexicographic content): unit {} first.
        subsets = [frozenset(c)
                   for k in range(ell + 1)
                   for c in itertools.combinations(range(1, ell + 1), k)]
        index = {s: i for i, s in enumerate(subsets)}

        def subset_name(s):
            return "{" + ",".join(str(v) for v in sorted(s)) + "}"

        names = [subset_name(s) for s in subsets]
        table = [[index[a | b] for b in subsets] for a in subsets]
        return Magma(f"S{ell}", names, table)
    if name == "BNC":
        names = ["1", "a", "b"]
        table = [
            [0, 1, 2],
            [1, 1, 0],
            [2, 0, 2],
        ]
        return Magma("BNC", names, table)
    raise ValueError(f"unknown magma name {name!r}")


def parse_magma_label(text):
    """Parse a CLI magma label: Z | N<ell> | D<ell> | E<ell> | S<ell> | BNC.

    >>> parse_magma_label("D2").label
    'D2'
    >>> parse_magma_label("Z").kind
    'Z'
    """
    text = text.strip()
    if text == "Z":
        return make_standard("Z")
    if text == "BNC":
        return make_standard("BNC")
    head, tail = text[:1], text[1:]
    if head in ("N", "D", "E", "S") and tail.isdigit():
        return make_standard(head, int(tail))
    raise ValueError(f"unknown magma label {text!r}")


def product(m1, m2):
    """Componentwise product of two finite magmas.

    The element (x, y) is stored at index x * m2.size() + y, so the
    unit (0, 0) keeps index 0.

    >>> p = product(make_standard("D", 0), make_standard("D", 0))
    >>> p.size()
    4
    >>> n2 = make_standard("N", 2)
    >>> p2 = product(n2, n2)
    >>> p2.name_of(p2.op(p2.element_named("(1,0)"), p2.element_named("(1,1)")))
    '(0,1)'
    """
    if not (m1.is_finite() and m2.is_finite()):
        raise ValueError("product requires finite magmas")
    n1, n2 = m1.size(), m2.size()

    def pair_index(x, y):
        return x * n2 + y

    names = [f"({m1.name_of(x)},{m2.name_of(y)})"
             for x in range(n1) for y in range(n2)]
    table = [[pair_index(m1.op(x1, x2), m2.op(y1, y2))
              for x2 in range(n1) for y2 in range(n2)]
             for x1 in range(n1) for y1 in range(n2)]
    return Magma(f"({m1.label}x{m2.label})", names, table)


def pair_index(m2_size, x, y):
    """Index of the pair (x, y) inside a product magma."""
    return x * m2_size + y


def pair_of(m2_size, v):
    """Inverse of :func:`pair_index`."""
    return divmod(v, m2_size)


# ----------------------------------------------------------------------
# Cayley-table file format

def to_cayley_lines(m):
    """Serialize a finite magma: `unit <name>` then the table rows.

    Entry (i, j) of the table is the name of names[i] * names[j].

    >>> for line in to_cayley_lines(make_standard("E", 1)):
    ...     print(line)
    unit 1
    1 e1
    e1 1
    """
    if not m.is_finite():
        raise ValueError("cannot serialize the integer magma as a table")
    lines = [f"unit {m.name_of(UNIT)}"]
    for i in range(m.size()):
        lines.append(" ".join(m.name_of(m.table[i][j]) for j in range(m.size())))
    return lines


def from_cayley_lines(lines):
    """Parse the format written by :func:`to_cayley_lines`.

    The element order is recovered from the unit row (the unique row
    that lists every element in column order).

    >>> m = from_cayley_lines(to_cayley_lines(make_standard("BNC")))
    >>> m.name_of(m.op(m.element_named("a"), m.element_named("b")))
    '1'
    """
    lines = [ln.strip() for ln in lines if ln.strip()]
    if not lines or not lines[0].startswith("unit "):
        raise ValueError("expected first line `unit <name>`")
    unit_name = lines[0][len("unit "):].strip()
    rows = [ln.split() for ln in lines[1:]]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("table must be square")
    # The unit's row lists the elements in column order; identify it by
    # requiring consistency with the unit column as well.
    for r, candidate in enumerate(rows):
        names = candidate
        if len(set(names)) != n or names[r] != unit_name:
            continue
        if all(rows[i][r] == names[i] for i in range(n)):
            order = {s: i for i, s in enumerate(names)}
            if unit_name not in order:
                continue
            # Reindex so the unit comes first.
            u = order[unit_name]
            perm = [u] + [i for i in range(n) if i != u]
            new_names = [names[i] for i in perm]
            new_index = {s: i for i, s in enumerate(new_names)}
            try:
                table = [[new_index[rows[perm[i]][perm[j]]] for j in range(n)]
                         for i in range(n)]
            except KeyError as exc:
                raise ValueError(f"table entry {exc} is not an element") from None
            return Magma("file", new_names, table)
    raise ValueError("no row acts as the unit; not a unitary magma table")
