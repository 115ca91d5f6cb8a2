# -*- coding: utf-8 -*-
"""Integer Laurent polynomials and box-truncated series

Sparse integer arithmetic for the chain L_C -> P'_C -> P_C, the exact
division by t1*...*tr - 1, the diagonal specialization t_i := t and the
canonical text rendering.
"""

from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import (
    NotDivisibleError,
    WindowExceededError,
    not_stabilized_exception_factory,
)

Exponent = Tuple[int, ...]


def graded_lex_key(v: Sequence[int]):
    """Sort key: total degree first, then lex with t1 > t2 > ... ."""
    return (sum(v), tuple(-x for x in v))


def _as_int(c) -> int:
    if isinstance(c, bool):
        raise TypeError("Boolean is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    raise TypeError(f"Integer coefficient expected, got {c!r}")


class LaurentPoly:
    """A Laurent polynomial in nvars variables with integer coefficients.

    Args:
        terms (Mapping[tuple, int]): Exponent vector to coefficient. Zero
            coefficients are dropped.
        nvars (int): Number of variables.
    """

    __slots__ = ("_terms", "nvars")

    def __init__(self, terms: Mapping[Exponent, int], nvars: int):
        self.nvars = nvars
        self._terms: Dict[Exponent, int] = {}
        for exp, c in terms.items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"Exponent {exp} does not have {nvars} entries")
            c = _as_int(c)
            if c:
                self._terms[exp] = c

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls({}, nvars)

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls({(0,) * nvars: 1}, nvars)

    @classmethod
    def tprod_minus_one(cls, nvars: int) -> "LaurentPoly":
        """t1 * ... * tr - 1."""
        return cls({(1,) * nvars: 1, (0,) * nvars: -1}, nvars)

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[int]) -> "LaurentPoly":
        """Univariate polynomial from its coefficient list, constant first."""
        return cls({(k,): c for k, c in enumerate(coeffs)}, 1)

    def terms(self) -> List[Tuple[Exponent, int]]:
        """(exponent, coefficient) pairs in graded-lex order."""
        return sorted(self._terms.items(), key=lambda kv: graded_lex_key(kv[0]))

    def support(self) -> List[Exponent]:
        return [e for e, _ in self.terms()]

    def coeff(self, exp: Sequence[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    def coefficients(self) -> List[int]:
        """Dense coefficient list of a univariate polynomial, constant first."""
        if self.nvars != 1 or self.has_negative_exponents():
            raise ValueError("Only univariate polynomials have a coefficient list")
        return [self.coeff((k,)) for k in range(self.degrees()[0] + 1)]

    def is_zero(self) -> bool:
        return not self._terms

    def constant_term(self) -> int:
        return self.coeff((0,) * self.nvars)

    def has_negative_exponents(self) -> bool:
        return any(x < 0 for exp in self._terms for x in exp)

    def degrees(self) -> Exponent:
        """Largest exponent of each variable; -1 everywhere for zero."""
        return tuple(
            max((exp[i] for exp in self._terms), default=-1) for i in range(self.nvars)
        )

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for exp, c in self._terms.items():
            term = Fraction(c)
            for x, e in zip(point, exp):
                term *= Fraction(x) ** e
            total += term
        return total

    def _check(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly({(0,) * self.nvars: other}, self.nvars)
        if other.nvars != self.nvars:
            raise ValueError("Laurent polynomials in different numbers of variables")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        out: Dict[Exponent, int] = {}
        for e, c in self._terms.items():
            for f, d in other._terms.items():
                key = tuple(a + b for a, b in zip(e, f))
                out[key] = out.get(key, 0) + c * d
        return LaurentPoly(out, self.nvars)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPoly)
            and self.nvars == other.nvars
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.nvars, tuple(self.terms())))

    def __repr__(self):
        return f"LaurentPoly({dict(self.terms())}, nvars={self.nvars})"

    def __str__(self):
        return canonical_render(self)


class BoxSeries:
    """A finite window [lower, upper] of an integer series in r variables.

    Coefficients outside the window are unknown; reading them raises
    WindowExceededError.
    """

    __slots__ = ("lower", "upper", "_coeffs")

    def __init__(self, lower: Sequence[int], upper: Sequence[int], coeffs: Mapping[Exponent, int]):
        if len(lower) != len(upper):
            raise ValueError("Window corners differ in length")
        self.lower = tuple(lower)
        self.upper = tuple(upper)
        self._coeffs = {}
        for v, c in coeffs.items():
            v = tuple(v)
            if not self.covers(v):
                raise WindowExceededError(f"Coefficient at {v} lies outside the window")
            self._coeffs[v] = _as_int(c)

    @property
    def r(self) -> int:
        return len(self.upper)

    def covers(self, v: Sequence[int]) -> bool:
        return all(lo <= x <= hi for lo, x, hi in zip(self.lower, v, self.upper))

    def coeff(self, v: Sequence[int]) -> int:
        v = tuple(v)
        if not self.covers(v):
            raise WindowExceededError(
                f"Coefficient at {v} requested from window {self.lower}..{self.upper}"
            )
        return self._coeffs.get(v, 0)

    def points(self) -> List[Exponent]:
        return sorted(
            product(*(range(lo, hi + 1) for lo, hi in zip(self.lower, self.upper))),
            key=graded_lex_key,
        )

    def items(self) -> Iterable[Tuple[Exponent, int]]:
        """Nonzero coefficients in graded-lex order."""
        return [(v, self._coeffs[v]) for v in self.points() if self._coeffs.get(v)]

    def restrict(self, lower: Sequence[int], upper: Sequence[int]) -> "BoxSeries":
        """The sub-window [lower, upper]."""
        if not (self.covers(lower) and self.covers(upper)):
            raise WindowExceededError(f"Window {tuple(lower)}..{tuple(upper)} is not inside this one")
        inner = BoxSeries(lower, upper, {})
        return BoxSeries(
            lower, upper, {v: c for v, c in self._coeffs.items() if inner.covers(v)}
        )

    def __eq__(self, other):
        return (
            isinstance(other, BoxSeries)
            and self.lower == other.lower
            and self.upper == other.upper
            and {v: c for v, c in self._coeffs.items() if c}
            == {v: c for v, c in other._coeffs.items() if c}
        )

    def __repr__(self):
        return f"BoxSeries({self.lower}..{self.upper}, {dict(self.items())})"


def difference_transform(c_table: BoxSeries, stable_from: Optional[Sequence[int]] = None) -> LaurentPoly:
    """P' = (t1 - 1)...(tr - 1) * L restricted to the window.

    The coefficient at v >= 0 is the sum over T of (-1)^(r-|T|) c(v - 1_T);
    coefficients at negative exponents vanish because c is constant in each
    coordinate below zero.

    Args:
        c_table (BoxSeries): c(v) on [-1, B].
        stable_from (tuple, optional): Conductor delta. Coefficients at v with
            some v_i > delta_i must vanish.

    Raises:
        NotStabilizedError: If a coefficient on the margin is nonzero.
    """
    r = c_table.r
    corners = list(product((0, 1), repeat=r))
    out = {}
    for v in product(*(range(0, hi + 1) for hi in c_table.upper)):
        total = 0
        for corner in corners:
            sign = -1 if (r - sum(corner)) % 2 else 1
            total += sign * c_table.coeff(tuple(x - d for x, d in zip(v, corner)))
        if not total:
            continue
        if stable_from is not None and any(x > d for x, d in zip(v, stable_from)):
            raise not_stabilized_exception_factory("P'", v, total)
        out[v] = total
    return LaurentPoly(out, r)


def divide_exact_by_tprod_minus_one(p: LaurentPoly) -> LaurentPoly:
    """Returns P with P * (t1...tr - 1) = p.

    Solves p(v) = P(v - 1) - P(v) in graded-lex order and re-multiplies.

    Raises:
        NotDivisibleError: With the nonzero remainder attached.
    """
    if p.nvars < 2:
        raise ValueError("Division by t1*...*tr - 1 is defined here for r >= 2")
    if p.has_negative_exponents():
        raise ValueError("Only polynomials without negative exponents can be divided")
    quotient: Dict[Exponent, int] = {}
    top = p.degrees()
    for v in sorted(product(*(range(d + 1) for d in top)), key=graded_lex_key):
        q = quotient.get(tuple(x - 1 for x in v), 0) - p.coeff(v)
        if q:
            quotient[v] = q
    result = LaurentPoly(quotient, p.nvars)
    remainder = p - result * LaurentPoly.tprod_minus_one(p.nvars)
    if not remainder.is_zero():
        raise NotDivisibleError(
            f"{p} is not divisible by {LaurentPoly.tprod_minus_one(p.nvars)}; "
            f"remainder {remainder}",
            remainder,
        )
    return result


def specialize_diagonal(series, order: Optional[int] = None) -> LaurentPoly:
    """Substitutes t_i := t.

    Args:
        series (LaurentPoly or BoxSeries): What to specialize. A BoxSeries
            must start at 0 and needs `order`; the coefficient of t^i is the
            sum of the window coefficients with |v| = i.
        order (int, optional): Drop powers above t^order.

    Raises:
        WindowExceededError: If some v with |v| <= order lies outside the
            window.
    """
    out: Dict[Exponent, int] = {}
    if isinstance(series, BoxSeries):
        if order is None:
            raise ValueError("A window can only be specialized up to an explicit order")
        if any(lo > 0 for lo in series.lower) or order > min(series.upper):
            raise WindowExceededError(
                f"Diagonal of order {order} leaves the window {series.lower}..{series.upper}"
            )
        pairs = [(v, c) for v, c in series.items() if min(v) >= 0]
    else:
        pairs = series.terms()
    for v, c in pairs:
        degree = sum(v)
        if order is not None and degree > order:
            continue
        out[(degree,)] = out.get((degree,), 0) + c
    return LaurentPoly(out, 1)


def _variable_names(nvars: int) -> List[str]:
    return ["t"] if nvars == 1 else [f"t{i + 1}" for i in range(nvars)]


def canonical_render(p: LaurentPoly, names: Optional[Sequence[str]] = None) -> str:
    """Text form with terms in graded-lex order, constant first.

    Examples: "0", "1", "1 - t + t^2", "-1 + t1*t2".
    """
    if p.is_zero():
        return "0"
    names = list(names) if names else _variable_names(p.nvars)
    out = []
    for exp, c in p.terms():
        factors = [
            name if e == 1 else f"{name}^{e}" for name, e in zip(names, exp) if e
        ]
        magnitude = abs(c)
        if not factors:
            body = str(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(magnitude)] + factors)
        if not out:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(out)
