import unittest
from fractions import Fraction

from pyalexander.corpus import load_example, names
from pyalexander.curvefile import parse_curve, render_curve, render_poly
from pyalexander.errors import (
    CurveSyntaxError,
    ExponentError,
    NegativeExponentError,
    NonPositiveOrderError,
    UnknownExampleError,
    ZeroDenominatorError,
)
from pyalexander.utils.series import UniPoly

from .helpers import CORPUS, branch


def _same(a, b):
    return [(p.name, p.x, p.y) for p in a] == [(p.name, p.x, p.y) for p in b]


class TestParse(unittest.TestCase):
    def test_cusp(self):
        (b,) = parse_curve("branch a: x = t^2, y = t^3\n")
        self.assertEqual(b.name, "a")
        self.assertEqual(b.x, UniPoly({2: 1}))
        self.assertEqual(b.y, UniPoly({3: 1}))

    def test_terms(self):
        (b,) = parse_curve("branch q1: x = 2*t - 1/3*t^4 + t^4, y = -t^2+3/2*t^5")
        self.assertEqual(b.x, UniPoly({1: 2, 4: Fraction(2, 3)}))
        self.assertEqual(b.y, UniPoly({2: -1, 5: Fraction(3, 2)}))

    def test_zero_coordinate(self):
        (b,) = parse_curve("branch a: x = t, y = 0")
        self.assertTrue(b.y.is_zero())

    def test_comments_and_blank_lines(self):
        text = "# two lines\n\nbranch a: x = t, y = 0  # first\n   \nbranch b: x = 0, y = t\n"
        self.assertEqual([b.name for b in parse_curve(text)], ["a", "b"])
        self.assertEqual(parse_curve("# nothing\n\n"), [])

    def test_corpus(self):
        self.assertEqual(names(), sorted(CORPUS))
        for name in CORPUS:
            self.assertTrue(parse_curve(load_example(name)))


class TestParseErrors(unittest.TestCase):
    def _raises(self, cls, text):
        with self.assertRaises(cls) as ctx:
            parse_curve(text)
        return ctx.exception

    def test_position(self):
        e = self._raises(CurveSyntaxError, "branch a: x = t\nbranch b x = t, y = t^2")
        self.assertEqual(e.line, 1)
        e = self._raises(CurveSyntaxError, "branch a: x = t, y = 0\nbranch b x = t, y = t^2")
        self.assertEqual((e.line, e.column), (2, 10))
        self.assertIn("line 2, column 10", str(e))

    def test_trailing_text(self):
        e = self._raises(CurveSyntaxError, "branch a: x = t, y = t^2 z")
        self.assertEqual(e.column, 26)

    def test_missing_exponent(self):
        self._raises(CurveSyntaxError, "branch a: x = t^, y = t^2")

    def test_negative_exponent(self):
        e = self._raises(NegativeExponentError, "branch a: x = t^-2, y = t^3")
        self.assertEqual(e.column, 17)
        self.assertIsInstance(e, ExponentError)

    def test_zero_denominator(self):
        e = self._raises(ZeroDenominatorError, "branch a: x = 1/0*t, y = t^3")
        self.assertEqual(e.line, 1)

    def test_constant_term(self):
        self._raises(NonPositiveOrderError, "branch a: x = 1 + t, y = t^2")
        self._raises(ExponentError, "branch a: x = 0, y = 0")

    def test_duplicate_name(self):
        e = self._raises(CurveSyntaxError, "branch a: x = t, y = 0\nbranch a: x = 0, y = t")
        self.assertEqual((e.line, e.column), (2, 8))


class TestRender(unittest.TestCase):
    def test_poly(self):
        self.assertEqual(render_poly(UniPoly()), "0")
        self.assertEqual(render_poly(UniPoly({1: 1, 3: -2, 4: Fraction(1, 2)})), "t - 2*t^3 + 1/2*t^4")
        self.assertEqual(render_poly(UniPoly({2: -1})), "-t^2")

    def test_unnamed(self):
        text = render_curve([branch([(1, 1)], []), branch([], [(1, 1)])])
        self.assertEqual(text, "branch b1: x = t, y = 0\nbranch b2: x = 0, y = t\n")

    def test_round_trip_corpus(self):
        for name in CORPUS:
            branches = parse_curve(load_example(name))
            self.assertTrue(_same(parse_curve(render_curve(branches)), branches), name)


class TestExamples(unittest.TestCase):
    def test_unknown(self):
        with self.assertRaises(UnknownExampleError):
            load_example("lemniscate")
        with self.assertRaises(UnknownExampleError):
            load_example("../setup")
