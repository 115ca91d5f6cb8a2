# -*- coding: utf-8 -*-
"""
This module contains the curve model: branch parametrizations, their
implicit equations, branch semigroups, intersection multiplicities and the
conductor vector of the curve.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from typing import Dict, List, NamedTuple, Optional, Sequence, Set, Tuple

import sympy
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .config import Settings
from .errors import (
    BudgetExceededError,
    CertificationFailedError,
    DegenerateParametrizationError,
    DuplicateBranchError,
    EmptyInputError,
    NonPositiveOrderError,
    NonPrimitiveError,
    ReturnsToOriginError,
    SameBranchError,
    TooManyBranchesError,
)
from .utils.linalg import EchelonBasis, sparse
from .utils.series import BivarPoly, TruncSeries, UniPoly, series_mul

logger = logging.getLogger(__name__)

X, Y, T = sympy.symbols("X Y T")


class BranchParam:
    """A polynomial parametrization t -> (x(t), y(t)) of one branch.

    Args:
        x (UniPoly): The first coordinate.
        y (UniPoly): The second coordinate.
        name (str, optional): A label used in reports and curve files.
    """

    def __init__(self, x: UniPoly, y: UniPoly, name: Optional[str] = None):
        self.x = x
        self.y = y
        self.name = name

    def check_orders(self):
        """Checks that the branch is a nonzero germ whose only point over the
        origin is t = 0.

        Raises:
            NonPositiveOrderError: For a constant term or a zero branch.
            ReturnsToOriginError: If the branch passes through the origin
                again at some t != 0.
        """
        if self.x.is_zero() and self.y.is_zero():
            raise NonPositiveOrderError(
                f"Branch {self.label()} is the zero parametrization"
            )
        for coord, poly in (("x", self.x), ("y", self.y)):
            if poly.coeff(0):
                raise NonPositiveOrderError(
                    f"Branch {self.label()} has constant term {poly.coeff(0)} in {coord}; "
                    f"parametrizations must pass through the origin"
                )
        common = sympy.gcd(_as_poly(self.x), _as_poly(self.y))
        low = min(k for (k,) in common.monoms())
        rest = common.exquo(sympy.Poly(T ** low, T, domain=QQ))
        if rest.degree() > 0:
            raise ReturnsToOriginError(
                f"Branch {self.label()} passes through the origin again where "
                f"{rest.as_expr(sympy.Symbol('t'))} = 0; only the germ at t = 0 may lie at the origin"
            )

    def multiplicity(self) -> int:
        """min(ord x, ord y), ignoring a coordinate that is identically zero."""
        orders = [p.order() for p in (self.x, self.y) if not p.is_zero()]
        return min(orders)

    def label(self) -> str:
        return self.name if self.name is not None else "<unnamed>"

    def monomial_images(self, degree: int, precision: int) -> Dict[Tuple[int, int], TruncSeries]:
        """Truncated images x(t)^a * y(t)^b for all a + b <= degree."""
        xs = self.x.truncate(precision)
        ys = self.y.truncate(precision)
        x_powers = [TruncSeries.constant(1, precision)]
        y_powers = [TruncSeries.constant(1, precision)]
        for _ in range(degree):
            x_powers.append(series_mul(x_powers[-1], xs))
            y_powers.append(series_mul(y_powers[-1], ys))
        images = {}
        for total in range(degree + 1):
            for a in range(total, -1, -1):
                b = total - a
                images[(a, b)] = series_mul(x_powers[a], y_powers[b])
        return images

    def __eq__(self, other):
        return (
            isinstance(other, BranchParam)
            and self.x == other.x
            and self.y == other.y
            and self.name == other.name
        )

    def __hash__(self):
        return hash((self.x, self.y, self.name))

    def __repr__(self):
        return f"BranchParam(x={self.x!r}, y={self.y!r}, name={self.name!r})"


class BranchSemigroup(NamedTuple):
    """The numerical semigroup of values of one branch."""

    generators: Tuple[int, ...]
    conductor: int
    gaps: Tuple[int, ...]
    multiplicity: int

    def __contains__(self, k) -> bool:
        return k >= self.conductor or (k >= 0 and k not in self.gaps)


def _as_poly(poly: UniPoly) -> sympy.Poly:
    if poly.is_zero():
        return sympy.Poly(0, T, domain=QQ)
    return sympy.Poly.from_dict(
        {(k,): sympy.Rational(c.numerator, c.denominator) for k, c in poly.items()},
        T,
        domain=QQ,
    )


def _coefficient_column(poly: UniPoly, symbol):
    # Coefficients of poly(T) - symbol, highest power of T first.
    degree = max(poly.degree(), 0)
    column = [sympy.Rational(c.numerator, c.denominator) for c in
              (poly.coeff(k) for k in range(degree, -1, -1))]
    column[-1] -= symbol
    return column


def _sylvester(p: List, q: List) -> List[List]:
    m, n = len(p) - 1, len(q) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + p + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + q + [0] * (size - n - 1 - i))
    return rows


def implicitize(branch: BranchParam, settings: Settings = None) -> BivarPoly:
    """Implicit equation of a branch as Res_T(x(T) - X, y(T) - Y).

    The Sylvester determinant is taken over the polynomial ring QQ[X, Y]
    with sympy's DomainMatrix, which eliminates fraction-free (Bareiss). The
    result is scaled to a primitive integer polynomial with positive leading
    coefficient in lex order X > Y.

    Raises:
        DegenerateParametrizationError: If both coordinates are zero.
        BudgetExceededError: If the Sylvester matrix is larger than
            settings.max_resultant_size.
        CertificationFailedError: If the equation does not vanish on the branch.
    """
    if branch.x.is_zero() and branch.y.is_zero():
        raise DegenerateParametrizationError(
            f"Branch {branch.label()} has no image to implicitize"
        )
    settings = settings or Settings()
    size = max(branch.x.degree(), 0) + max(branch.y.degree(), 0)
    if size > settings.max_resultant_size:
        raise BudgetExceededError(
            f"Implicit equation of branch {branch.label()} needs a {size}x{size} "
            f"Sylvester determinant, but at most {settings.max_resultant_size} rows "
            f"are allowed. Raise --max-resultant-size."
        )
    ring = QQ[X, Y]
    rows = _sylvester(_coefficient_column(branch.x, X), _coefficient_column(branch.y, Y))
    size = len(rows)
    matrix = DomainMatrix(
        [[ring.from_sympy(sympy.sympify(e)) for e in row] for row in rows],
        (size, size),
        ring,
    )
    det = ring.to_sympy(matrix.det())
    poly = sympy.Poly(det, X, Y, domain=QQ)
    _, poly = poly.clear_denoms(convert=True)
    _, poly = poly.primitive()
    if poly.LC() < 0:
        poly = -poly
    equation = BivarPoly.from_sympy(poly.as_expr(), X, Y)
    if not equation.compose(branch.x, branch.y).is_zero():
        raise CertificationFailedError(
            f"Implicit equation of branch {branch.label()} does not vanish on it"
        )
    return equation


def check_primitive(branch: BranchParam, equation: BivarPoly):
    """Raises NonPrimitiveError when the implicit equation is not squarefree.

    A parametrization that factors through t -> s(t) with ord s = k > 1
    has the k-th power of the reduced equation as its resultant.
    """
    poly = sympy.Poly(equation.to_sympy(X, Y), X, Y, domain=QQ)
    derivative = poly.diff(X)
    if derivative.is_zero:
        derivative = poly.diff(Y)
    if poly.gcd(derivative).total_degree() > 0:
        raise NonPrimitiveError(
            f"Branch {branch.label()} is not primitive: its implicit equation "
            f"{poly.as_expr()} is not squarefree"
        )


def intersection_multiplicity(equation: BivarPoly, branch: BranchParam) -> int:
    """ord_t of equation(x(t), y(t)); exact since everything is polynomial.

    Raises:
        SameBranchError: If the composition vanishes identically.
    """
    composed = equation.compose(branch.x, branch.y)
    if composed.is_zero():
        raise SameBranchError(
            f"Equation vanishes identically on branch {branch.label()}"
        )
    return composed.order()


def values_below(branch: BranchParam, precision: int) -> Set[int]:
    """Values v(g) < precision of polynomials g restricted to the branch.

    Every monomial of degree above ceil(precision / m) has order at least
    `precision`, so the truncated monomial images see every such value.
    """
    degree = -(-precision // branch.multiplicity())
    basis = EchelonBasis()
    for image in branch.monomial_images(degree, precision).values():
        basis.insert(sparse(image.coeffs()))
    return set(basis.pivots())


def _is_symmetric(values: Set[int], conductor: int) -> bool:
    gaps = [k for k in range(conductor) if k not in values]
    if 2 * len(gaps) != conductor:
        return False
    return all((k in values) != (conductor - 1 - k in values) for k in range(conductor))


def _minimal_generators(values: Set[int], conductor: int, multiplicity: int) -> Tuple[int, ...]:
    limit = conductor + multiplicity
    reach = [True] + [False] * limit
    generators = []
    for e in range(1, limit + 1):
        if not (e >= conductor or e in values) or reach[e]:
            continue
        generators.append(e)
        for s in range(e, limit + 1):
            if reach[s - e]:
                reach[s] = True
    return tuple(generators)


def branch_value_semigroup(branch: BranchParam, settings: Settings = None) -> BranchSemigroup:
    """Semigroup of values of a single branch.

    Values are collected with a truncation order that doubles until the gap
    set is symmetric and unchanged across one doubling.

    Raises:
        CertificationFailedError: If no certificate is found below
            settings.max_series_order.
    """
    settings = settings or Settings()
    m = branch.multiplicity()
    precision = max(8, 4 * m)
    previous = None
    while precision <= settings.max_series_order:
        values = values_below(branch, precision)
        gaps = tuple(k for k in range(precision) if k not in values)
        conductor = gaps[-1] + 1 if gaps else 0
        logger.debug(
            "Branch %s: %d gaps below %d, conductor candidate %d",
            branch.label(), len(gaps), precision, conductor,
        )
        if gaps == previous and _is_symmetric(values, conductor):
            return BranchSemigroup(
                _minimal_generators(values, conductor, m), conductor, gaps, m
            )
        previous = gaps
        precision *= 2
    raise CertificationFailedError(
        f"Semigroup of branch {branch.label()} did not stabilize below order "
        f"{settings.max_series_order}"
    )


def conductor_vector(curve: "Curve") -> Tuple[int, ...]:
    """delta_i = c_i + sum over j != i of (C_i . C_j)."""
    return tuple(
        curve.semigroups[i].conductor
        + sum(curve.intersection[i][j] for j in range(curve.r) if j != i)
        for i in range(curve.r)
    )


class Curve:
    """A validated plane curve germ given by its branches.

    Use validate() to build one; the constructor trusts its arguments.
    """

    def __init__(
        self,
        branches: Sequence[BranchParam],
        equations: Sequence[BivarPoly],
        semigroups: Sequence[BranchSemigroup],
        intersection: Sequence[Sequence[int]],
    ):
        self.branches = tuple(branches)
        self.equations = tuple(equations)
        self.semigroups = tuple(semigroups)
        self.intersection = tuple(tuple(row) for row in intersection)
        self.delta = conductor_vector(self)

    @property
    def r(self) -> int:
        return len(self.branches)

    @property
    def multiplicities(self) -> Tuple[int, ...]:
        return tuple(s.multiplicity for s in self.semigroups)

    def equation(self) -> BivarPoly:
        """The product of the branch equations."""
        f = BivarPoly.monomial(0, 0)
        for g in self.equations:
            f = f * g
        return f

    def intersection_multiplicity(self, i: int, j: int) -> int:
        if i == j:
            raise SameBranchError("Intersection multiplicity of a branch with itself")
        return self.intersection[i][j]

    def names(self) -> List[str]:
        return [b.name if b.name is not None else f"b{i + 1}" for i, b in enumerate(self.branches)]

    def __repr__(self):
        return f"Curve(r={self.r}, delta={self.delta})"


def _branch_data(branch: BranchParam, settings: Settings):
    equation = implicitize(branch, settings)
    check_primitive(branch, equation)
    return equation, branch_value_semigroup(branch, settings)


def _pair_multiplicity(pair):
    (i, bi, fi), (j, bj, fj) = pair
    try:
        m_ij = intersection_multiplicity(fi, bj)
        m_ji = intersection_multiplicity(fj, bi)
    except SameBranchError:
        raise DuplicateBranchError(
            f"Branches {bi.label()} and {bj.label()} parametrize the same curve"
        ) from None
    if m_ij != m_ji:
        raise CertificationFailedError(
            f"Intersection multiplicity of branches {i + 1} and {j + 1} is not symmetric: "
            f"{m_ij} != {m_ji}"
        )
    return i, j, m_ij


def validate(branches: Sequence[BranchParam], settings: Settings = None) -> Curve:
    """Validates branch parametrizations and derives the curve invariants.

    Args:
        branches (list[BranchParam]): The branches, in their fixed numbering.
        settings (Settings, optional): Limits and thread count.

    Returns:
        Curve: The validated curve.

    Raises:
        EmptyInputError, TooManyBranchesError, NonPositiveOrderError,
        NonPrimitiveError, DuplicateBranchError
    """
    settings = settings or Settings()
    branches = list(branches)
    if not branches:
        raise EmptyInputError("A curve needs at least one branch")
    if len(branches) > settings.max_branches:
        raise TooManyBranchesError(
            f"{len(branches)} branches given, at most {settings.max_branches} supported"
        )
    for branch in branches:
        branch.check_orders()

    r = len(branches)
    with ThreadPoolExecutor(max_workers=settings.threads) as pool:
        data = list(pool.map(lambda b: _branch_data(b, settings), branches))
        equations = [d[0] for d in data]
        semigroups = [d[1] for d in data]
        indexed = [(i, branches[i], equations[i]) for i in range(r)]
        pairs = list(pool.map(_pair_multiplicity, combinations(indexed, 2)))

    intersection = [[0] * r for _ in range(r)]
    for i, j, m in pairs:
        intersection[i][j] = intersection[j][i] = m

    curve = Curve(branches, equations, semigroups, intersection)
    logger.info(
        "Validated curve with %d branches, multiplicities %s, delta %s",
        r, curve.multiplicities, curve.delta,
    )
    return curve
