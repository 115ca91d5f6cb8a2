# -*- coding: utf-8 -*-
"""Exact series kernel

Univariate polynomials, truncated power series and bivariate polynomials
with exact rational coefficients, and evaluation of bivariate polynomials
along a branch parametrization t -> (x(t), y(t)).
"""

from fractions import Fraction
from typing import Dict, Iterable, Mapping, NamedTuple, Tuple, Union

Rat = Fraction
Scalar = Union[int, Fraction]


def to_rat(value: Scalar) -> Fraction:
    """Converts an int or Fraction (or a sympy Rational) to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if hasattr(value, "p") and hasattr(value, "q"):
        return Fraction(int(value.p), int(value.q))
    raise TypeError(f"Exact rational expected, got {type(value).__name__}")


def _clean(coeffs: Iterable[Tuple[object, Scalar]]) -> dict:
    out = {}
    for key, value in coeffs:
        value = to_rat(value)
        if value:
            out[key] = value
    return out


class UniPoly:
    """A univariate polynomial in t with rational coefficients.

    Args:
        coeffs (Mapping[int, Fraction]): Exponent to coefficient. Zero
            coefficients are dropped.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, Scalar] = None):
        coeffs = coeffs or {}
        for k in coeffs:
            if not isinstance(k, int) or k < 0:
                raise ValueError(f"Exponents must be non-negative integers, got {k!r}")
        self._coeffs = _clean(coeffs.items())

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "UniPoly":
        return cls({k: c})

    def coeff(self, k: int) -> Fraction:
        return self._coeffs.get(k, Fraction(0))

    def items(self):
        """(exponent, coefficient) pairs in increasing exponent order."""
        return sorted(self._coeffs.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return max(self._coeffs, default=-1)

    def order(self):
        """Smallest exponent with a nonzero coefficient, None when zero."""
        return min(self._coeffs, default=None)

    def truncate(self, precision: int) -> "TruncSeries":
        return TruncSeries(
            [self.coeff(k) for k in range(precision)], precision
        )

    def __add__(self, other):
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            out[k] = out.get(k, 0) + c
        return UniPoly(out)

    def __neg__(self):
        return UniPoly({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly({k: c * to_rat(other) for k, c in self._coeffs.items()})
        out: Dict[int, Fraction] = {}
        for i, a in self._coeffs.items():
            for j, b in other._coeffs.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(tuple(self.items()))

    def __repr__(self):
        return f"UniPoly({dict(self.items())})"


class TruncSeries:
    """A power series in t known exactly below its truncation order.

    Coefficients at exponents >= precision are unknown; reading them raises
    AssertionError.

    Args:
        coeffs (Sequence[Fraction]): Coefficients of t^0 .. t^(precision-1);
            shorter sequences are padded with zeros.
        precision (int): The truncation order N.
    """

    __slots__ = ("_coeffs", "precision")

    def __init__(self, coeffs, precision: int):
        if precision < 1:
            raise ValueError("Truncation order must be positive")
        coeffs = [to_rat(c) for c in list(coeffs)[:precision]]
        coeffs.extend([Fraction(0)] * (precision - len(coeffs)))
        self._coeffs = tuple(coeffs)
        self.precision = precision

    @classmethod
    def constant(cls, c: Scalar, precision: int) -> "TruncSeries":
        return cls([c], precision)

    def coeff(self, k: int) -> Fraction:
        if k >= self.precision:
            raise AssertionError(
                f"Coefficient of t^{k} read from a series truncated at order {self.precision}"
            )
        if k < 0:
            return Fraction(0)
        return self._coeffs[k]

    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def __add__(self, other):
        n = min(self.precision, other.precision)
        return TruncSeries([self._coeffs[k] + other._coeffs[k] for k in range(n)], n)

    def __neg__(self):
        return TruncSeries([-c for c in self._coeffs], self.precision)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return series_mul(self, other)

    def __eq__(self, other):
        return (
            isinstance(other, TruncSeries)
            and self.precision == other.precision
            and self._coeffs == other._coeffs
        )

    def __hash__(self):
        return hash((self._coeffs, self.precision))

    def __repr__(self):
        terms = {k: c for k, c in enumerate(self._coeffs) if c}
        return f"TruncSeries({terms}, N={self.precision})"


class Lead(NamedTuple):
    """Order and coefficient of the leading term of a series."""

    order: int
    coeff: Fraction


class ZeroUpToN(NamedTuple):
    """Every retained coefficient vanishes: the order is at least `precision`."""

    precision: int


def lead(s: TruncSeries):
    """Returns the leading term of `s`, or ZeroUpToN if all retained
    coefficients are zero. ZeroUpToN means "order >= N", never "order = oo"."""
    for k, c in enumerate(s.coeffs()):
        if c:
            return Lead(k, c)
    return ZeroUpToN(s.precision)


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Cauchy product truncated to min(N_a, N_b)."""
    n = min(a.precision, b.precision)
    left = [(i, c) for i, c in enumerate(a.coeffs()[:n]) if c]
    right = [(j, c) for j, c in enumerate(b.coeffs()[:n]) if c]
    out = [Fraction(0)] * n
    for i, x in left:
        for j, y in right:
            if i + j >= n:
                break
            out[i + j] += x * y
    return TruncSeries(out, n)


class BivarPoly:
    """A polynomial in X and Y with rational coefficients.

    Args:
        coeffs (Mapping[Tuple[int, int], Fraction]): (exponent of X,
            exponent of Y) to coefficient. Zero coefficients are dropped.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[Tuple[int, int], Scalar] = None):
        coeffs = coeffs or {}
        for a, b in coeffs:
            if a < 0 or b < 0:
                raise ValueError(f"Exponents must be non-negative, got {(a, b)}")
        self._coeffs = _clean(coeffs.items())

    @classmethod
    def monomial(cls, a: int, b: int, c: Scalar = 1) -> "BivarPoly":
        return cls({(a, b): c})

    @classmethod
    def from_sympy(cls, expr, x_symbol, y_symbol) -> "BivarPoly":
        """Builds a BivarPoly from a sympy expression in two symbols."""
        import sympy

        poly = sympy.Poly(sympy.expand(expr), x_symbol, y_symbol)
        return cls({monom: to_rat(c) for monom, c in poly.terms()})

    def to_sympy(self, x_symbol, y_symbol):
        import sympy

        return sympy.Add(
            *[
                sympy.Rational(c.numerator, c.denominator) * x_symbol**a * y_symbol**b
                for (a, b), c in self.items()
            ]
        )

    def coeff(self, a: int, b: int) -> Fraction:
        return self._coeffs.get((a, b), Fraction(0))

    def items(self):
        """((a, b), coefficient) pairs in graded-lex order of (a, b)."""
        return sorted(self._coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def is_zero(self) -> bool:
        return not self._coeffs

    def degree_x(self) -> int:
        return max((a for a, _ in self._coeffs), default=-1)

    def degree_y(self) -> int:
        return max((b for _, b in self._coeffs), default=-1)

    def horner(self, x, y, const):
        """Evaluates at (x, y) by Horner's rule, nested in Y inside X.

        Args:
            x, y: Ring elements (UniPoly or TruncSeries) to substitute.
            const: Callable building the ring element for a scalar.
        """
        acc = const(0)
        for a in range(self.degree_x(), -1, -1):
            row = const(0)
            for b in range(self.degree_y(), -1, -1):
                row = row * y + const(self.coeff(a, b))
            acc = acc * x + row
        return acc

    def compose(self, x: UniPoly, y: UniPoly) -> UniPoly:
        """Exact polynomial g(x(t), y(t))."""
        return self.horner(x, y, lambda c: UniPoly({0: c}))

    def __add__(self, other):
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            out[k] = out.get(k, 0) + c
        return BivarPoly(out)

    def __neg__(self):
        return BivarPoly({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, BivarPoly):
            return BivarPoly({k: c * to_rat(other) for k, c in self._coeffs.items()})
        out = {}
        for (a, b), c in self._coeffs.items():
            for (p, q), d in other._coeffs.items():
                out[(a + p, b + q)] = out.get((a + p, b + q), 0) + c * d
        return BivarPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, BivarPoly) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(tuple(self.items()))

    def __repr__(self):
        return f"BivarPoly({dict(self.items())})"


def eval_on_branch(g: BivarPoly, branch, precision: int) -> TruncSeries:
    """Truncation of g(x(t), y(t)) to order `precision`.

    Args:
        g (BivarPoly): The polynomial to evaluate.
        branch: Anything with UniPoly attributes `x` and `y`.
        precision (int): The truncation order N >= 1.
    """
    xs = branch.x.truncate(precision)
    ys = branch.y.truncate(precision)
    return g.horner(xs, ys, lambda c: TruncSeries.constant(c, precision))
