"""Truncated power series, dimension formulas, and Hilbert checks.

All arithmetic is exact-rational over a fixed truncation order, so the
verified identities are genuine identities of coefficients, not
numerical approximations.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb


class TruncatedSeries:
    """A power series in one variable, truncated at a fixed order.

    >>> t = TruncatedSeries.variable(4)
    >>> ((t + t * t) * (t - t * t)).coeffs
    [Fraction(0, 1), Fraction(0, 1), Fraction(1, 1), Fraction(0, 1), Fraction(-1, 1)]
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order=None):
        coeffs = [Fraction(c) for c in coeffs]
        if order is not None:
            coeffs = coeffs[:order + 1] + [Fraction(0)] * (order + 1 - len(coeffs))
        self.coeffs = coeffs

    @staticmethod
    def variable(order):
        return TruncatedSeries([0, 1], order)

    @staticmethod
    def constant(value, order):
        return TruncatedSeries([value], order)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TruncatedSeries([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)])

    def __sub__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TruncatedSeries([self.coeffs[k] - other.coeffs[k] for k in range(n + 1)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([c * other for c in self.coeffs])
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for a, ca in enumerate(self.coeffs[:n + 1]):
            if not ca:
                continue
            for b in range(0, n + 1 - a):
                out[a + b] += ca * other.coeffs[b]
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.constant(other, self.order)
        return other

    def substitute(self, inner):
        """Compose self(inner(t)); requires inner(0) = 0.

        >>> t = TruncatedSeries.variable(3)
        >>> geom = TruncatedSeries([1, 1, 1, 1])
        >>> geom.substitute(t + t * t).coeffs[2]
        Fraction(2, 1)
        """
        assert inner.coeffs[0] == 0, "substitution needs zero constant term"
        order = min(self.order, inner.order)
        result = TruncatedSeries.constant(self.coeffs[self.order], order)
        for k in range(self.order - 1, -1, -1):
            result = result * inner + self.coeffs[k]
        return result

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]})"


def series_from_dims(dims, order=None):
    """Hilbert series Σ dims[n-1] tⁿ from a per-arity count list."""
    if order is None:
        order = len(dims)
    return TruncatedSeries([0] + list(dims), order)


# ----------------------------------------------------------------------
# closed-form dimension formulas

def narayana(n, k):
    """Triangle of counts (1/(k+1)) C(n-2,k) C(n-1,k) for 0 <= k <= n-2.

    >>> narayana(4, 1)
    3
    >>> [narayana(5, k) for k in range(4)]   # row sums to catalan(4)
    [1, 6, 6, 1]
    """
    if not 0 <= k <= n - 2:
        raise ValueError(f"narayana needs 0 <= k <= n-2, got n={n}, k={k}")
    value = Fraction(comb(n - 2, k) * comb(n - 1, k), k + 1)
    assert value.denominator == 1
    return int(value)


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def dim_formula(which, n, m=None, b=None, e=None, d=None):
    """Closed-form dimension of the named space at arity n.

    ``Cli``: all cliques, m^C(n+1,2).
    ``NC``: noncrossing cliques, sum of m^{n+k+1}(m-1)^{n-k-2}nar(n,k).
    ``NCdual``: dual of the noncrossing operad.
    ``Inf``: inclusion-free cliques, sum of (m-1)^k nar(n+2,k).
    ``Lab``: label family, b e^n d^{(n+1)(n-2)/2}.
    ``WNC``: white noncrossing cliques, sum of m^k (m-1)^{n-k-2} nar(n,k).

    >>> [dim_formula("Cli", n, m=2) for n in range(1, 6)]
    [1, 8, 64, 1024, 32768]
    >>> [dim_formula("NC", n, m=3) for n in range(1, 5)]
    [1, 27, 405, 7533]
    >>> [dim_formula("NCdual", n, m=2) for n in range(1, 5)]
    [1, 8, 80, 992]
    """
    if n == 1:
        return 1
    if which == "Cli":
        return m ** comb(n + 1, 2)
    if which == "NC":
        return sum(m ** (n + k + 1) * (m - 1) ** (n - k - 2) * narayana(n, k)
                   for k in range(n - 1))
    if which == "NCdual":
        mm = m * (m - 1)
        return sum(m ** (n + 1) * (mm + 1) ** k * mm ** (n - k - 2) * narayana(n, k)
                   for k in range(n - 1))
    if which == "Inf":
        return sum((m - 1) ** k * narayana(n + 2, k) for k in range(n + 1))
    if which == "Lab":
        return b * e ** n * d ** ((n + 1) * (n - 2) // 2)
    if which == "WNC":
        return sum(m ** k * (m - 1) ** (n - k - 2) * narayana(n, k)
                   for k in range(n - 1))
    raise ValueError(f"unknown formula {which!r}")


# ----------------------------------------------------------------------
# algebraic equations satisfied by Hilbert series

def check_hilbert_equation(which, coeffs, m=None):
    """Substitute a Hilbert series into the named polynomial equation
    and return the residual series (zero iff the equation holds).

    Equations (H = the series, t = the variable):
      NC:      t + (m^3-2m^2+2m-1) t^2 + (2m^2 t - 3m t + 2t - 1) H + (m-1) H^2
      NCdual:  t + (m-1) t^2 + (2m^2 t - 3m t + 2t - 1) H + (m^3-2m^2+2m-1) H^2
      E2sub:   t + (t-1) H + (2t+1) H^2
      MotzSub: t + (t-1) H + t H^2
      NCP:     t - H + 2 H^2 - H^3
      FF4:     t + (2t-1) H + 2 H^2

    >>> h = series_from_dims([1, 2, 7, 30, 143])
    >>> check_hilbert_equation("NCP", h).is_zero()
    True
    """
    H = coeffs
    order = H.order
    t = TruncatedSeries.variable(order)
    if which == "NC":
        return (t + (m ** 3 - 2 * m * m + 2 * m - 1) * t * t
                + (2 * m * m * t - 3 * m * t + 2 * t - 1) * H
                + (m - 1) * H * H)
    if which == "NCdual":
        return (t + (m - 1) * t * t
                + (2 * m * m * t - 3 * m * t + 2 * t - 1) * H
                + (m ** 3 - 2 * m * m + 2 * m - 1) * H * H)
    if which == "E2sub":
        return t + (t - 1) * H + (2 * t + 1) * H * H
    if which == "MotzSub":
        return t + (t - 1) * H + t * H * H
    if which == "NCP":
        return t - H + 2 * H * H - H * H * H
    if which == "FF4":
        return t + (2 * t - 1) * H + 2 * H * H
    raise ValueError(f"unknown equation {which!r}")


def koszul_inverse_residual(h, h_dual):
    """Residual of the functional identity H(-H_dual(-t)) = t.

    >>> h = series_from_dims([dim_formula("NC", n, m=2) for n in range(1, 7)])
    >>> hd = series_from_dims([dim_formula("NCdual", n, m=2) for n in range(1, 7)])
    >>> koszul_inverse_residual(h, hd).is_zero()
    True
    """
    order = min(h.order, h_dual.order)
    t = TruncatedSeries.variable(order)
    minus_dual = TruncatedSeries([-c for c in h_dual.coeffs]).substitute(t * -1)
    return h.substitute(minus_dual) - t
