import unittest

from pyalexander.config import Settings
from pyalexander.curve import validate
from pyalexander.errors import NotStabilizedError, WindowExceededError
from pyalexander.filtration import FiltrationEngine
from pyalexander.laurent import BoxSeries, LaurentPoly, specialize_diagonal
from pyalexander.pipeline import (
    AlexanderResult,
    alexander_via_dimensions,
    alexander_via_euler,
    analyze,
    cross_check,
    knot_polynomial,
    zeta,
)

from .helpers import CORPUS, branch, engine, example

TWO46 = [1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 1, 0, 1, 1, 1, 1, 1]


def _knot(coeffs):
    return LaurentPoly.from_coefficients(coeffs)


def _run(name, route, **settings):
    s = Settings(**settings)
    if settings:
        return route(example(name), s)
    return route(example(name), s, engine(name))


class TestDimensionRoute(unittest.TestCase):
    def test_node(self):
        result = _run("node", alexander_via_dimensions)
        self.assertEqual(result.prime, LaurentPoly({(1, 1): 1, (0, 0): -1}, 2))
        self.assertEqual(result.polynomial, LaurentPoly.one(2))

    def test_tacnode(self):
        result = _run("tacnode", alexander_via_dimensions)
        self.assertEqual(result.polynomial, LaurentPoly({(0, 0): 1, (1, 1): 1}, 2))

    def test_cusp(self):
        result = _run("cusp", alexander_via_dimensions, order=12)
        self.assertEqual(result.zeta.coefficients(), [1, 0] + [1] * 11)
        self.assertEqual(result.polynomial, _knot([1, -1, 1]))

    def test_smooth(self):
        result = _run("smooth", alexander_via_dimensions)
        self.assertTrue(all(c == 1 for c in result.zeta.coefficients()))
        self.assertEqual(result.polynomial, LaurentPoly.one(1))

    def test_two46(self):
        result = _run("two46", alexander_via_dimensions, order=20)
        self.assertEqual(result.zeta.coefficients(), TWO46)
        self.assertEqual(result.polynomial.degrees(), (16,))
        self.assertEqual(result.polynomial.constant_term(), 1)

    def test_e8(self):
        result = _run("e8", alexander_via_dimensions)
        self.assertEqual(result.polynomial, _knot([1, -1, 0, 1, -1, 1, 0, -1, 1]))

    def test_proposition(self):
        for name in CORPUS:
            result = _run(name, alexander_via_dimensions)
            if result.r > 1:
                tau = LaurentPoly.tprod_minus_one(result.r)
                self.assertEqual(result.polynomial * tau, result.prime)

    def test_small_margin_still_stabilizes(self):
        result = _run("tacnode", alexander_via_dimensions, margin=1)
        self.assertEqual(result.polynomial, LaurentPoly({(0, 0): 1, (1, 1): 1}, 2))


class TestEulerRoute(unittest.TestCase):
    def test_node(self):
        result = _run("node", alexander_via_euler)
        self.assertEqual(result.polynomial, LaurentPoly.one(2))
        self.assertEqual(result.series.items(), [((0, 0), 1)])

    def test_cusp(self):
        result = _run("cusp", alexander_via_euler, order=8)
        self.assertEqual(result.zeta.coefficients(), [1, 0, 1, 1, 1, 1, 1, 1, 1])

    def test_vanishes_beyond_conductor(self):
        for name in ("node", "tacnode", "cusp-plus-line"):
            e = engine(name)
            result = _run(name, alexander_via_euler)
            for v in e.points_above_conductor():
                self.assertEqual(result.series.coeff(v), 0)


class TestCrossCheck(unittest.TestCase):
    def test_corpus(self):
        for name in CORPUS:
            check = cross_check(example(name), Settings(), engine(name))
            self.assertTrue(check.verdicts.all_pass(), (name, check.verdicts))
            self.assertEqual(check.dimensions.polynomial, check.euler.polynomial)
            self.assertEqual(check.errors, {})

    def test_normalization(self):
        for name in CORPUS:
            poly = _run(name, alexander_via_dimensions).polynomial
            self.assertEqual(poly.constant_term(), 1)
            self.assertFalse(poly.has_negative_exponents())

    def test_support(self):
        for name in ("node", "tacnode", "cusp-plus-line"):
            e = engine(name)
            for v in _run(name, alexander_via_dimensions).polynomial.support():
                self.assertTrue(e.member(v))

    def test_three_lines(self):
        curve = validate([branch([(1, 1)], []), branch([], [(1, 1)]), branch([(1, 1)], [(1, 1)])])
        check = cross_check(curve)
        self.assertTrue(check.verdicts.all_pass())
        self.assertEqual(check.dimensions.polynomial, LaurentPoly({(0, 0, 0): 1, (1, 1, 1): -1}, 3))

    def test_corrupted_table(self):
        curve = example("node")
        e = FiltrationEngine.for_curve(curve)
        e.table.fill()
        e.table._values[(2, 2)] = 4
        check = cross_check(curve, Settings(), e)
        self.assertFalse(check.verdicts.thm1_eq_thm2)
        self.assertFalse(check.verdicts.all_pass())

    def test_threads(self):
        one = cross_check(example("tacnode"), Settings(threads=1))
        many = cross_check(example("tacnode"), Settings(threads=4))
        self.assertEqual(one.verdicts, many.verdicts)
        self.assertEqual(one.dimensions.polynomial, many.dimensions.polynomial)


class TestZeta(unittest.TestCase):
    def test_node(self):
        self.assertEqual(zeta(example("node"), engine=engine("node")), LaurentPoly.one(1))

    def test_cusp(self):
        z = zeta(example("cusp"), 8, Settings(order=8))
        self.assertEqual(z.coefficients(), [1, 0, 1, 1, 1, 1, 1, 1, 1])

    def test_tacnode(self):
        e = engine("tacnode")
        z = zeta(example("tacnode"), engine=e)
        delta = _run("tacnode", alexander_via_dimensions).polynomial
        self.assertEqual(z, specialize_diagonal(delta, min(e.box.upper)))
        self.assertEqual(z, _knot([1, 0, 1]))

    def test_outside_window(self):
        with self.assertRaises(WindowExceededError):
            zeta(example("node"), 9, engine=engine("node"))


class TestKnotPolynomial(unittest.TestCase):
    def test_palindromic(self):
        for name in ("smooth", "cusp", "e8", "two46"):
            coeffs = _run(name, alexander_via_euler).polynomial.coefficients()
            self.assertEqual(coeffs, coeffs[::-1])
            self.assertEqual(sum(coeffs), 1)

    def test_requires_single_branch(self):
        with self.assertRaises(ValueError):
            knot_polynomial(_run("node", alexander_via_euler))

    def test_window_too_short(self):
        series = BoxSeries((0,), (2,), {(0,): 1, (2,): 1})
        result = AlexanderResult(1, "euler", series, (2,), 2)
        with self.assertRaises(WindowExceededError):
            knot_polynomial(result)

    def test_not_stabilized(self):
        series = BoxSeries((0,), (5,), {(0,): 1, (2,): 1, (3,): 1})
        result = AlexanderResult(1, "euler", series, (2,), 5)
        with self.assertRaises(NotStabilizedError):
            knot_polynomial(result)


class TestAnalyze(unittest.TestCase):
    def test_node(self):
        report = analyze(example("node"))
        self.assertEqual(report.alexander, LaurentPoly.one(2))
        self.assertEqual(report.zeta, LaurentPoly.one(1))
        self.assertTrue(report.verdicts.all_pass())
        self.assertEqual(len(report.fibers), 16)
        self.assertEqual(report.order, 3)

    def test_cusp_plus_line(self):
        report = analyze(example("cusp-plus-line"), Settings(threads=2))
        self.assertTrue(report.verdicts.all_pass())
        self.assertEqual(report.box.upper, (7, 5))
        self.assertIn((0, 0), report.semigroup)

    def test_not_stabilized_propagates(self):
        curve = example("node")
        e = FiltrationEngine.for_curve(curve)
        e.table.fill()
        e.table._values[(4, 1)] = 2
        with self.assertRaises(NotStabilizedError):
            alexander_via_dimensions(curve, Settings(), e)
