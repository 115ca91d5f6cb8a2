import unittest

from pyalexander.arrangement import arrangement_euler, leading_coefficient_space

from .helpers import engine


class TestLeadingCoefficients(unittest.TestCase):
    def test_node(self):
        e = engine("node")
        self.assertEqual(leading_coefficient_space(e, (0, 0)), [(1, 1)])
        self.assertEqual(leading_coefficient_space(e, (1, 0)), [(1, 0)])
        self.assertEqual(leading_coefficient_space(e, (1, 1)), [(1, 0), (0, 1)])

    def test_dimension_is_c(self):
        for name in ("node", "tacnode", "cusp", "cusp-plus-line"):
            e = engine(name)
            for v in e.box.points():
                self.assertEqual(len(leading_coefficient_space(e, v)), e.dim_c(v), (name, v))

    def test_outside_box(self):
        with self.assertRaises(ValueError):
            leading_coefficient_space(engine("node"), (4, 0))


class TestArrangementOracle(unittest.TestCase):
    def _check(self, name):
        e = engine(name)
        for v in e.box.points():
            self.assertEqual(arrangement_euler(e, v), e.fiber_euler(v), (name, v))

    def test_node(self):
        self._check("node")

    def test_tacnode(self):
        self._check("tacnode")

    def test_cusp_plus_line(self):
        self._check("cusp-plus-line")

    def test_single_branch(self):
        self._check("cusp")
        self._check("e8")

    def test_point_and_punctured_line(self):
        e = engine("node")
        self.assertEqual(arrangement_euler(e, (0, 0)), 1)
        self.assertEqual(arrangement_euler(e, (1, 1)), 0)
        self.assertEqual(arrangement_euler(e, (1, 0)), 0)
