"""Suboperads and quotients of the clique operad, as label families.

Each family is a set of cliques cut out by hereditary structural
constraints (bounded crossing, bounded degree, no diagonals, inclusion
freeness, acyclicity, whiteness) and/or by per-position label sets
(base, edge, diagonal alphabets).  Families act as suboperads when
membership is closed under composition, and as quotients when the
non-members span an operad ideal; quotient composition projects any
non-member result to zero.

>>> from cliqueops.magma import make_standard
>>> d0 = make_standard("D", 0)
>>> spec = FamilySpec("Deg", d0, k=1)
>>> enumerate_dims(spec, 5)
[1, 4, 10, 26, 76]
"""

from __future__ import annotations

import itertools

from .magma import UNIT
from .clique import (
    Clique, compose, crossing, degree, is_acyclic, is_inclusion_free, is_white,
    unit_clique,
)
from .linops import LinComb

# Structural constraint profile per family kind: (max_crossing,
# max_degree, bubble, inclusion_free, acyclic, white).  ``None`` means
# unconstrained; Cro/Deg take their bound from the ``k`` parameter.
_PROFILES = {
    "Cro": ("k", None, False, False, False, False),
    "NC":  (0, None, False, False, False, False),
    "Bub": (None, None, True, False, False, False),
    "Deg": (None, "k", False, False, False, False),
    "Inf": (None, None, False, True, False, False),
    "Acy": (None, None, False, False, True, False),
    "Lab": (None, None, False, False, False, False),
    "Whi": (None, None, False, False, False, True),
    "WNC": (0, None, False, False, False, True),
    "Pat": (None, 2, False, False, True, False),
    "For": (0, None, False, False, True, False),
    "Mot": (0, 1, False, False, False, False),
    "Dis": (0, 1, False, False, False, True),
    "Luc": (None, 1, True, False, False, False),
}

# Families realized as quotients by an operad ideal; they require the
# magma to have no nontrivial unit divisors.
_NEEDS_NNUD = {"Deg", "Inf", "Acy", "Pat", "For", "Mot", "Dis", "Luc"}


class FamilySpec:
    """A family of cliques over one magma.

    ``kind`` selects the predicate; ``k`` parameterizes Cro/Deg;
    ``base_set``/``edge_set``/``diag_set`` parameterize Lab.  ``mode``
    records whether the family is used as a suboperad or a quotient.

    >>> from cliqueops.magma import make_standard
    >>> FamilySpec("Cro", make_standard("D", 0), k=0).label()
    'Cro0'
    """

    __slots__ = ("kind", "magma", "k", "base_set", "edge_set", "diag_set", "mode")

    def __init__(self, kind, magma, k=None, base_set=None, edge_set=None,
                 diag_set=None, mode=None):
        if kind not in _PROFILES:
            raise ValueError(f"unknown family kind {kind!r}")
        if kind in ("Cro", "Deg") and (k is None or k < 0):
            raise ValueError(f"{kind} needs a bound k >= 0")
        if kind in _NEEDS_NNUD and magma.is_finite() \
                and not magma.has_no_nontrivial_unit_divisors():
            raise ValueError(f"{kind} needs a magma without nontrivial unit divisors")
        if kind == "Lab":
            base_set = frozenset(base_set)
            edge_set = frozenset(edge_set)
            diag_set = frozenset(diag_set)
            if UNIT not in base_set or UNIT not in diag_set:
                raise ValueError("Lab needs the unit in the base and diagonal sets")
            for e in edge_set:
                for b in base_set:
                    if magma.op(e, b) not in diag_set:
                        raise ValueError("Lab needs edge*base products inside the diagonal set")
        self.kind = kind
        self.magma = magma
        self.k = k
        self.base_set = base_set
        self.edge_set = edge_set
        self.diag_set = diag_set
        if mode is None:
            mode = "suboperad" if kind in ("Lab", "Whi") else "quotient"
        assert mode in ("suboperad", "quotient")
        self.mode = mode

    def label(self):
        if self.kind in ("Cro", "Deg"):
            return f"{self.kind}{self.k}"
        return self.kind

    def _bounds(self):
        cro, deg, bub, inf, acy, whi = _PROFILES[self.kind]
        cro = self.k if cro == "k" else cro
        deg = self.k if deg == "k" else deg
        return cro, deg, bub, inf, acy, whi

    def member(self, p):
        """Membership predicate.

        >>> from cliqueops.magma import make_standard
        >>> d0 = make_standard("D", 0)
        >>> nc = FamilySpec("NC", d0)
        >>> nc.member(Clique(d0, 3, {(1, 3): 1, (2, 4): 1}))
        False
        >>> FamilySpec("Cro", d0, k=1).member(Clique(d0, 3, {(1, 3): 1, (2, 4): 1}))
        True
        """
        assert p.magma == self.magma
        cro, deg, bub, inf, acy, whi = self._bounds()
        if cro is not None and crossing(p) > cro:
            return False
        if deg is not None and degree(p) > deg:
            return False
        if bub and not p.is_bubble():
            return False
        if inf and not is_inclusion_free(p):
            return False
        if acy and not is_acyclic(p):
            return False
        if whi and not is_white(p):
            return False
        if self.kind == "Lab":
            n = p.arity
            if n >= 2:
                if p.base() not in self.base_set:
                    return False
                for i in range(1, n + 1):
                    if p.edge(i) not in self.edge_set:
                        return False
                for x in range(1, n):
                    for y in range(x + 2, n + 2):
                        if (x, y) != (1, n + 1) and p.label(x, y) not in self.diag_set:
                            return False
        return True


def parse_family(text, magma):
    """Parse a CLI family label: NC, Bub, ..., Cro<k>, Deg<k>, or
    Lab:<base>|<edges>|<diagonals> with comma-separated element names.

    >>> from cliqueops.magma import make_standard
    >>> parse_family("Deg2", make_standard("D", 1)).label()
    'Deg2'
    """
    text = text.strip()
    if text.startswith("Lab:"):
        parts = text[len("Lab:"):].split("|")
        if len(parts) != 3:
            raise ValueError("Lab format: Lab:<base>|<edges>|<diagonals>")
        sets = [frozenset(magma.element_named(s.strip())
                          for s in part.split(",") if s.strip() != "")
                for part in parts]
        return FamilySpec("Lab", magma, base_set=sets[0], edge_set=sets[1],
                          diag_set=sets[2])
    for kind in ("Cro", "Deg"):
        if text.startswith(kind) and text[len(kind):].isdigit():
            return FamilySpec(kind, magma, k=int(text[len(kind):]))
    if text in _PROFILES and text not in ("Cro", "Deg", "Lab"):
        return FamilySpec(text, magma)
    raise ValueError(f"unknown family {text!r}")


# ----------------------------------------------------------------------
# composition inside a family

def quotient_compose(spec, p, i, q):
    """Compose two members; project to zero outside the family.

    For suboperad-mode families the projection never fires (asserted).

    >>> from cliqueops.magma import make_standard
    >>> d0 = make_standard("D", 0)
    >>> deg1 = FamilySpec("Deg", d0, k=1)
    >>> p = Clique(d0, 4, {(1, 4): 1})
    >>> q = Clique(d0, 3, {(1, 3): 1, (2, 4): 1})
    >>> sorted(quotient_compose(deg1, p, 2, q).terms)[0].labels
    {(1, 6): 1, (2, 4): 1, (3, 5): 1}
    >>> quotient_compose(deg1, p, 3, q).is_zero()
    True
    """
    if not (spec.member(p) and spec.member(q)):
        raise ValueError("operand outside the family")
    r = compose(p, i, q)
    if spec.member(r):
        return LinComb.of(r)
    assert spec.mode == "quotient", "suboperad composition left the family"
    return LinComb.zero(spec.magma, r.arity)


# ----------------------------------------------------------------------
# enumeration

def enumerate_members(spec, arity):
    """Yield every member clique of the given arity, by backtracking
    over arcs with incremental pruning (all constraints are hereditary:
    removing solid arcs never breaks membership)."""
    magma = spec.magma
    if not magma.is_finite():
        raise ValueError("enumeration needs a finite magma")
    if arity == 1:
        yield unit_clique(magma)
        return
    n = arity
    arcs = [(x, y) for x in range(1, n + 1) for y in range(x + 1, n + 2)]

    def arc_alphabet(x, y):
        # Non-unit labels permitted on this arc by the label sets.
        if spec.kind != "Lab":
            allowed = range(1, magma.size())
        elif (x, y) == (1, n + 1):
            allowed = spec.base_set
        elif y - x == 1:
            allowed = spec.edge_set
        else:
            allowed = spec.diag_set
        return sorted(v for v in allowed if v != UNIT)

    def unit_ok(x, y):
        if spec.kind != "Lab":
            return True
        if (x, y) == (1, n + 1):
            return UNIT in spec.base_set
        if y - x == 1:
            return UNIT in spec.edge_set
        return UNIT in spec.diag_set

    alphabets = [arc_alphabet(x, y) for x, y in arcs]
    units_ok = [unit_ok(x, y) for x, y in arcs]
    cro, deg, bub, inf, acy, whi = spec._bounds()
    partial = {}

    def structurally_ok(x, y):
        # Check the hereditary constraints after adding solid arc (x,y).
        is_diag = not (y - x == 1 or (x, y) == (1, n + 1))
        if bub and is_diag:
            return False
        if whi and not is_diag:
            return False
        if deg is not None:
            cx = sum(1 for (a, b) in partial if a == x or b == x)
            cy = sum(1 for (a, b) in partial if a == y or b == y)
            if cx + 1 > deg or cy + 1 > deg:
                return False
        if cro is not None and is_diag:
            others = [(a, b) for (a, b) in partial
                      if not (b - a == 1 or (a, b) == (1, n + 1))]
            count = 0
            for a, b in others:
                if x < a < y < b or a < x < b < y:
                    count += 1
                    if count > cro:
                        return False
                    # The other diagonal's own crossing count grows too.
                    oc = sum(1 for (c, d) in others if (a < c < b < d or c < a < d < b))
                    if oc + 1 > cro:
                        return False
        if inf:
            for a, b in partial:
                if (x <= a < b <= y) or (a <= x < y <= b):
                    return False
        if acy:
            # Union-find over current solid arcs plus the candidate.
            parent = {}

            def find(v):
                parent.setdefault(v, v)
                while parent[v] != v:
                    parent[v] = parent[parent[v]]
                    v = parent[v]
                return v

            for a, b in partial:
                ra, rb = find(a), find(b)
                if ra == rb:
                    return False
                parent[ra] = rb
            if find(x) == find(y):
                return False
        return True

    def backtrack(t):
        if t == len(arcs):
            yield Clique(magma, n, dict(partial))
            return
        x, y = arcs[t]
        if units_ok[t]:
            yield from backtrack(t + 1)
        # Structural constraints ignore the label value, so test once.
        if alphabets[t] and structurally_ok(x, y):
            for v in alphabets[t]:
                partial[(x, y)] = v
                yield from backtrack(t + 1)
                del partial[(x, y)]

    yield from backtrack(0)


def enumerate_dims(spec, n_max):
    """Member counts per arity 1..n_max.

    >>> from cliqueops.magma import make_standard
    >>> d0 = make_standard("D", 0)
    >>> enumerate_dims(FamilySpec("Mot", d0), 6)
    [1, 4, 9, 21, 51, 127]
    >>> enumerate_dims(FamilySpec("Inf", d0), 5)
    [1, 5, 14, 42, 132]
    """
    return [sum(1 for _ in enumerate_members(spec, n)) for n in range(1, n_max + 1)]


# ----------------------------------------------------------------------
# generated suboperads

def closure(generators, n_max, magma=None):
    """Saturate a generating set under partial composition.

    Returns a dict arity -> set of cliques: the smallest
    composition-closed set containing the unit and the generators,
    truncated above ``n_max``.

    >>> from cliqueops.magma import make_standard
    >>> d0 = make_standard("D", 0)
    >>> sorted(len(closure([], 3, d0)[n]) for n in (1, 2, 3))
    [0, 0, 1]
    """
    generators = list(generators)
    if magma is None:
        if not generators:
            raise ValueError("empty generator set needs an explicit magma")
        magma = generators[0].magma
    found = {n: set() for n in range(1, n_max + 1)}
    found[1].add(unit_clique(magma))
    for g in generators:
        if g.arity <= n_max:
            found[g.arity].add(g)
    # Saturate: compose members until nothing new appears.  Composing
    # with the unit is the identity, so skip arity-1 operands.
    changed = True
    while changed:
        changed = False
        snapshot = {n: list(s) for n, s in found.items()}
        for a in range(2, n_max + 1):
            for b in range(2, n_max - a + 2):
                for p in snapshot[a]:
                    for q in snapshot[b]:
                        for i in range(1, a + 1):
                            r = compose(p, i, q)
                            if r not in found[r.arity]:
                                found[r.arity].add(r)
                                changed = True
    return found


def closure_dims(generators, n_max, magma=None):
    """Per-arity sizes of :func:`closure`.

    >>> from cliqueops.magma import make_standard
    >>> from cliqueops.clique import triangle
    >>> e2 = make_standard("E", 2)
    >>> t1, t2 = triangle(e2, 1, 0, 1), triangle(e2, 2, 0, 2)
    >>> closure_dims([t1, t2], 5)
    [1, 2, 8, 36, 180]
    """
    c = closure(generators, n_max, magma)
    return [len(c[n]) for n in range(1, n_max + 1)]


# ----------------------------------------------------------------------
# axiom sweep with quotient composition

def quotient_lc_compose(spec, f, i, g):
    """Linear extension of :func:`quotient_compose` to combinations."""
    out = LinComb.zero(spec.magma, f.arity + g.arity - 1)
    for p, cp in f.terms.items():
        for q, cq in g.terms.items():
            out = out + quotient_compose(spec, p, i, q).scale(cp * cq)
    return out


def check_family_axioms(spec, max_arity):
    """Exhaustively verify the operad axioms for a family's quotient
    (or suboperad) composition on all members of arity <= ``max_arity``.

    Mirrors the basis-clique sweep: both associativity shapes and the
    unit law, with composition replaced by the projected composition.

    >>> from cliqueops.magma import make_standard
    >>> rpt = check_family_axioms(FamilySpec("Deg", make_standard("D", 0), k=1), 2)
    >>> rpt["violations"]
    []
    """
    members = {n: list(enumerate_members(spec, n)) for n in range(1, max_arity + 1)}
    unit = unit_clique(spec.magma)
    # Basis members compose to a single member or project to zero, so
    # the sweep tracks results as a clique or None with a membership
    # cache; this matches the linear quotient composition on basis
    # combinations with coefficient one.
    known = {}

    def qc(p, i, q):
        r = compose(p, i, q)
        ok = known.get(r)
        if ok is None:
            ok = spec.member(r)
            known[r] = ok
        if ok:
            return r
        assert spec.mode == "quotient", "suboperad composition left the family"
        return None

    pool = [p for n in members for p in members[n]]
    pair = {(p, i, q): qc(p, i, q)
            for p in pool for i in range(1, p.arity + 1) for q in pool}
    violations = []
    sequential = parallel = unital = 0
    for n in range(1, max_arity + 1):
        for p in members[n]:
            if qc(unit, 1, p) != p:
                violations.append(("left-unit", p))
            for i in range(1, n + 1):
                if qc(p, i, unit) != p:
                    violations.append(("right-unit", p, i))
                unital += 1
            for mm in range(1, max_arity + 1):
                for q in members[mm]:
                    pq = [None] + [pair[p, i, q] for i in range(1, n + 1)]
                    for k in range(1, max_arity + 1):
                        for r in members[k]:
                            for i in range(1, n + 1):
                                x = pq[i]
                                for j in range(1, mm + 1):
                                    lhs = None if x is None else qc(x, i + j - 1, r)
                                    qr = pair[q, j, r]
                                    rhs = None if qr is None else qc(p, i, qr)
                                    sequential += 1
                                    if lhs != rhs:
                                        violations.append(("sequential", p, i, q, j, r))
                            for i in range(1, n + 1):
                                x = pq[i]
                                for j in range(i + 1, n + 1):
                                    lhs = None if x is None else qc(x, j + mm - 1, r)
                                    pr = pair[p, j, r]
                                    rhs = None if pr is None else qc(pr, i, q)
                                    parallel += 1
                                    if lhs != rhs:
                                        violations.append(("parallel", p, i, q, j, r))
    return {
        "family": spec.label(),
        "magma": spec.magma.label,
        "max_arity": max_arity,
        "sequential_checked": sequential,
        "parallel_checked": parallel,
        "unit_checked": unital,
        "violations": violations,
    }
