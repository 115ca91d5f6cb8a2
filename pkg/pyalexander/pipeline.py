# -*- coding: utf-8 -*-
"""
The two routes to the Alexander polynomial and their cross-validation.

The dimension route builds the c-table, applies (t1 - 1)...(tr - 1) and
divides by t1*...*tr - 1. The Euler route sums chi(P(F_v)) t^v over the
box. For a single branch both produce a window of the monodromy zeta
function, from which the knot polynomial (1 - t) * zeta is recovered.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .config import Settings
from .curve import Curve
from .errors import (
    BudgetExceededError,
    CertificationFailedError,
    ComputationError,
    NotStabilizedError,
    OutOfBoxError,
    WindowExceededError,
    not_stabilized_exception_factory,
)
from .filtration import Box, FiberData, FiltrationEngine
from .laurent import (
    BoxSeries,
    LaurentPoly,
    difference_transform,
    divide_exact_by_tprod_minus_one,
    specialize_diagonal,
)

logger = logging.getLogger(__name__)

DIMENSIONS = "dimensions"
EULER = "euler"

# Errors that mean the box or budget was too small rather than that a
# computed invariant is wrong.
RESOURCE_ERRORS = (BudgetExceededError, NotStabilizedError, WindowExceededError, OutOfBoxError)


@dataclass
class AlexanderResult:
    """Outcome of one route.

    Attributes:
        r (int): Number of branches.
        route (str): "dimensions" or "euler".
        series (BoxSeries): L_C on [-1, B] (dimension route) or the fibre
            Euler characteristics on [0, B] (Euler route).
        polynomial (LaurentPoly): Delta for r >= 2, the knot polynomial
            (1 - t) * zeta for r = 1.
        prime (LaurentPoly): P' for the dimension route with r >= 2.
        zeta (LaurentPoly): The window of zeta for r = 1, up to `order`.
        conductor (tuple): The conductor vector the result was certified with.
        order (int): Window order of `zeta`.
    """

    r: int
    route: str
    series: BoxSeries
    conductor: tuple
    order: int
    polynomial: Optional[LaurentPoly] = None
    prime: Optional[LaurentPoly] = None
    zeta: Optional[LaurentPoly] = None


@dataclass
class Verdicts:
    thm1_eq_thm2: bool = False
    normalized: bool = False
    support_in_semigroup: bool = False
    divisibility: bool = False

    def all_pass(self) -> bool:
        return all(self.as_dict().values())

    def as_dict(self) -> Dict[str, bool]:
        return {
            "thm1_eq_thm2": self.thm1_eq_thm2,
            "normalized": self.normalized,
            "support_in_semigroup": self.support_in_semigroup,
            "divisibility": self.divisibility,
        }


@dataclass
class CrossCheck:
    """Verdicts together with whatever each route produced or raised."""

    verdicts: Verdicts
    dimensions: Optional[AlexanderResult] = None
    euler: Optional[AlexanderResult] = None
    errors: Dict[str, ComputationError] = field(default_factory=dict)

    def raise_resource_errors(self):
        """Re-raises a route failure caused by a too small box or budget."""
        for error in self.errors.values():
            if isinstance(error, RESOURCE_ERRORS):
                raise error


@dataclass
class AnalysisReport:
    curve: Curve
    box: Box
    order: int
    dimensions: Optional[AlexanderResult]
    euler: Optional[AlexanderResult]
    zeta: LaurentPoly
    verdicts: Verdicts
    fibers: List[FiberData]
    semigroup: List[tuple]
    errors: Dict[str, str] = field(default_factory=dict)

    @property
    def r(self) -> int:
        return self.curve.r

    @property
    def alexander(self) -> LaurentPoly:
        """Delta for r >= 2, the knot polynomial for r = 1."""
        result = self.dimensions or self.euler
        return result.polynomial


def _engine(curve: Curve, settings: Optional[Settings], engine: Optional[FiltrationEngine]):
    if engine is not None:
        return engine
    return FiltrationEngine.for_curve(curve, settings)


def _order(engine: FiltrationEngine, order: Optional[int] = None) -> int:
    return min(engine.box.upper) if order is None else order


def _window(series: BoxSeries, order: int) -> LaurentPoly:
    # Univariate window [0, order] of an r = 1 series.
    if order > series.upper[0]:
        raise WindowExceededError(f"Order {order} exceeds the window {series.upper}")
    return LaurentPoly({v: c for v, c in series.items() if 0 <= v[0] <= order}, 1)


def knot_polynomial(result: AlexanderResult) -> LaurentPoly:
    """Finite knot polynomial (1 - t) * zeta of a single branch.

    The whole window of `result.series` is used. Coefficients above the
    conductor must vanish; the result must be palindromic up to sign with
    value +-1 at t = 1.

    Raises:
        ValueError: If the result is not for a single branch.
        WindowExceededError: If the window does not reach past the conductor.
        NotStabilizedError: If a coefficient above the conductor is nonzero.
        CertificationFailedError: If the palindrome or t = 1 checks fail.
    """
    if result.r != 1:
        raise ValueError("The knot polynomial is defined for a single branch")
    conductor = result.conductor[0]
    top = result.series.upper[0]
    if top <= conductor:
        raise WindowExceededError(
            f"Window {top} does not reach past the conductor {conductor}"
        )
    coeffs = {}
    for k in range(top + 1):
        below = result.series.coeff((k - 1,)) if k >= 1 else 0
        a = result.series.coeff((k,)) - below
        if not a:
            continue
        if k > conductor:
            raise not_stabilized_exception_factory("(1 - t) * zeta", (k,), a)
        coeffs[(k,)] = a
    poly = LaurentPoly(coeffs, 1)

    dense = poly.coefficients()
    if any(abs(a) != abs(b) for a, b in zip(dense, reversed(dense))):
        raise CertificationFailedError(f"Knot polynomial {poly} is not palindromic")
    if abs(poly.evaluate((1,))) != 1:
        raise CertificationFailedError(f"Knot polynomial {poly} is not +-1 at t = 1")
    return poly


def alexander_via_dimensions(
    curve: Curve, settings: Settings = None, engine: FiltrationEngine = None
) -> AlexanderResult:
    """Delta from the dimensions c(v): P' = prod(t_i - 1) * L, P = P' / (t1...tr - 1).

    For r = 1 the window of L on [0, B] is returned as zeta.

    Raises:
        NotStabilizedError, NotDivisibleError, BudgetExceededError
    """
    engine = _engine(curve, settings, engine)
    order = _order(engine, settings.order if settings else None)
    c_table = engine.c_table()
    result = AlexanderResult(curve.r, DIMENSIONS, c_table, curve.delta, order)
    if curve.r == 1:
        result.series = c_table.restrict((0,), engine.box.upper)
        result.zeta = _window(result.series, order)
        result.polynomial = knot_polynomial(result)
    else:
        result.prime = difference_transform(c_table, stable_from=curve.delta)
        logger.debug("P' has %d terms", len(result.prime.terms()))
        result.polynomial = divide_exact_by_tprod_minus_one(result.prime)
    logger.info("Dimension route: %s", result.polynomial)
    return result


def alexander_via_euler(
    curve: Curve, settings: Settings = None, engine: FiltrationEngine = None
) -> AlexanderResult:
    """Delta as the generating series of chi(P(F_v)).

    For r >= 2 the series must vanish at every v with some v_i > delta_i;
    it is then returned as a polynomial.

    Raises:
        NotStabilizedError: If a coefficient on the box margin is nonzero.
    """
    engine = _engine(curve, settings, engine)
    order = _order(engine, settings.order if settings else None)
    series = engine.euler_series()
    result = AlexanderResult(curve.r, EULER, series, curve.delta, order)
    if curve.r == 1:
        result.zeta = _window(series, order)
        result.polynomial = knot_polynomial(result)
    else:
        for v, c in series.items():
            if any(x > d for x, d in zip(v, curve.delta)):
                raise not_stabilized_exception_factory("chi(P(F_v))", v, c)
        result.polynomial = LaurentPoly(dict(series.items()), curve.r)
    logger.debug("Euler series has %d nonzero terms", len(series.items()))
    logger.info("Euler route: %s", result.polynomial)
    return result


def _support(result: AlexanderResult) -> List[tuple]:
    if result.r == 1:
        return [v for v, _ in result.series.items()]
    return result.polynomial.support()


def _normalized(result: AlexanderResult) -> bool:
    if result.r == 1:
        coeffs = [c for _, c in result.series.items()]
        return result.series.coeff((0,)) == 1 and all(c in (0, 1) for c in coeffs)
    poly = result.polynomial
    return poly.constant_term() == 1 and not poly.has_negative_exponents()


def _same(a: AlexanderResult, b: AlexanderResult) -> bool:
    if a.r == 1:
        window = b.series
        return a.series.restrict(window.lower, window.upper) == window
    return a.polynomial == b.polynomial


def _run(route, curve, settings, engine):
    try:
        return route(curve, settings, engine), None
    except ComputationError as e:
        logger.warning("%s failed: %s", route.__name__, e)
        return None, e


def cross_check(
    curve: Curve, settings: Settings = None, engine: FiltrationEngine = None
) -> CrossCheck:
    """Runs both routes and compares them.

    Failures of either route are recorded in the returned CrossCheck and
    turn the affected verdicts false; nothing is raised.
    """
    settings = settings or Settings()
    engine = _engine(curve, settings, engine)
    engine.table.fill()
    routes = (alexander_via_dimensions, alexander_via_euler)
    if settings.threads > 1:
        with ThreadPoolExecutor(max_workers=2) as pool:
            outcomes = list(pool.map(lambda f: _run(f, curve, settings, engine), routes))
    else:
        outcomes = [_run(f, curve, settings, engine) for f in routes]
    (dims, dims_error), (euler, euler_error) = outcomes

    check = CrossCheck(Verdicts(), dims, euler)
    if dims_error is not None:
        check.errors[DIMENSIONS] = dims_error
    if euler_error is not None:
        check.errors[EULER] = euler_error

    verdicts = check.verdicts
    verdicts.divisibility = dims is not None
    if dims is not None and euler is not None:
        verdicts.thm1_eq_thm2 = _same(dims, euler)
    results = [res for res in (dims, euler) if res is not None]
    if results:
        verdicts.normalized = all(_normalized(res) for res in results)
        verdicts.support_in_semigroup = all(
            engine.member(v) for res in results for v in _support(res)
        )
    logger.info("Verdicts: %s", verdicts.as_dict())
    return check


def zeta(
    curve: Curve,
    order: int = None,
    settings: Settings = None,
    engine: FiltrationEngine = None,
    dimensions: AlexanderResult = None,
) -> LaurentPoly:
    """Monodromy zeta function up to t^order as the diagonal of the Euler series.

    The diagonal of the dimension-route result is computed too (or taken
    from `dimensions`) and must agree on the window.

    Raises:
        WindowExceededError: If the order leaves the box diagonal.
        CertificationFailedError: If the two diagonals differ.
    """
    engine = _engine(curve, settings, engine)
    if order is None:
        order = _order(engine, settings.order if settings else None)
    series = engine.euler_series()
    diagonal = specialize_diagonal(series, order)

    if dimensions is None:
        dimensions = alexander_via_dimensions(curve, settings, engine)
    if curve.r == 1:
        other = specialize_diagonal(dimensions.series, order)
    else:
        other = specialize_diagonal(dimensions.polynomial, order)
    if other != diagonal:
        raise CertificationFailedError(
            f"Diagonal of the fibre series {diagonal} differs from the diagonal "
            f"of the dimension route {other}"
        )
    logger.info("zeta up to t^%d: %s", order, diagonal)
    return diagonal


def analyze(curve: Curve, settings: Settings = None) -> AnalysisReport:
    """Full analysis of a validated curve.

    Raises:
        BudgetExceededError, NotStabilizedError, WindowExceededError: When the
            box or budget is too small; rerun with a larger margin or budget.
        CertificationFailedError: If the conductor does not certify.
    """
    settings = settings or Settings()
    engine = FiltrationEngine.for_curve(curve, settings)
    engine.table.fill()
    engine.certify_conductor()
    order = _order(engine, settings.order)

    check = cross_check(curve, settings, engine)
    check.raise_resource_errors()
    if check.dimensions is None and check.euler is None:
        raise next(iter(check.errors.values()))

    if check.dimensions is not None and check.verdicts.thm1_eq_thm2:
        z = zeta(curve, order, settings, engine, dimensions=check.dimensions)
    else:
        z = specialize_diagonal(engine.euler_series(), order)

    return AnalysisReport(
        curve=curve,
        box=engine.box,
        order=order,
        dimensions=check.dimensions,
        euler=check.euler,
        zeta=z,
        verdicts=check.verdicts,
        fibers=engine.fiber_table(),
        semigroup=engine.semigroup_elements(),
        errors={route: str(e) for route, e in check.errors.items()},
    )
