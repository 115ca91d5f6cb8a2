import unittest
from itertools import product

from pyalexander.config import Settings
from pyalexander.errors import BudgetExceededError, CertificationFailedError, OutOfBoxError
from pyalexander.filtration import (
    Box,
    FiltrationEngine,
    HilbertTable,
    build_matrix,
    degree_bound,
    shift,
    subsets,
)

from .helpers import CORPUS, engine, example


class TestBox(unittest.TestCase):
    def test_around(self):
        self.assertEqual(Box.around((1, 1), 2).upper, (3, 3))
        self.assertEqual(Box.around((2,), 2, reach=8).upper, (8,))

    def test_points_graded_lex(self):
        points = Box((1, 1)).points()
        self.assertEqual(points, [(0, 0), (1, 0), (0, 1), (1, 1)])

    def test_subsets_and_shift(self):
        self.assertEqual(subsets(2), [(), (0,), (1,), (0, 1)])
        self.assertEqual(shift((3, 4), (1,)), (3, 5))


class TestMonomialMatrix(unittest.TestCase):
    def test_node(self):
        matrix = build_matrix(example("node"), Box((3, 3)))
        self.assertEqual(matrix.degree, 3)
        self.assertEqual(matrix.precisions, (4, 4))
        self.assertEqual(matrix.shape, (10, 8))
        self.assertEqual(matrix.entry((1, 0), 0, 1), 1)
        self.assertEqual([matrix.entry((1, 0), 1, k) for k in range(4)], [0, 0, 0, 0])

    def test_cusp(self):
        matrix = build_matrix(example("cusp"), Box((4,)))
        self.assertEqual([matrix.entry((0, 1), 0, k) for k in range(5)], [0, 0, 0, 1, 0])

    def test_degree_bound(self):
        self.assertEqual(degree_bound((1, 1), (3, 3)), 3)
        for m, b in ((2, 4), (3, 10), (4, 18)):
            d = degree_bound((m,), (b,))
            self.assertGreater(m * (d + 1), b)
            self.assertLessEqual(m * d, b)

    def test_budget(self):
        with self.assertRaises(BudgetExceededError):
            build_matrix(example("node"), Box((3, 3)), Settings(max_cells=10))


class TestHilbert(unittest.TestCase):
    def test_node(self):
        e = engine("node")
        self.assertEqual(e.hilbert((0, 0)), 0)
        self.assertEqual(e.hilbert((1, 1)), 1)
        self.assertEqual(e.hilbert((2, 1)), 2)
        self.assertEqual(e.hilbert((1, 2)), 2)
        self.assertEqual(e.hilbert((2, 2)), 3)

    def test_cusp(self):
        e = engine("cusp")
        gamma = {0, 2, 3, 4, 5, 6, 7}
        for v in range(e.box.upper[0] + 2):
            self.assertEqual(e.hilbert((v,)), len([s for s in gamma if s < v]))

    def test_clamp(self):
        e = engine("node")
        self.assertEqual(e.hilbert((-1, 2)), e.hilbert((0, 2)))
        self.assertEqual(e.hilbert((-1, -1)), 0)

    def test_out_of_box(self):
        e = engine("node")
        e.hilbert((4, 4))
        with self.assertRaises(OutOfBoxError):
            e.hilbert((5, 0))

    def test_direct_rank_agrees(self):
        for name in ("node", "cusp", "tacnode", "cusp-plus-line"):
            e = engine(name)
            for v in product(*(range(b + 2) for b in e.box.upper)):
                self.assertEqual(e.table.rank_direct(v), e.hilbert(v), (name, v))

    def test_threads(self):
        curve = example("cusp-plus-line")
        box = Box.around(curve.delta, 2)
        matrix = build_matrix(curve, box)
        one, many = HilbertTable(matrix, box, 1), HilbertTable(matrix, box, 4)
        for v in product(*(range(b + 2) for b in box.upper)):
            self.assertEqual(one.hilbert(v), many.hilbert(v))


class TestFibers(unittest.TestCase):
    def test_node_dimensions(self):
        e = engine("node")
        self.assertEqual(e.dim_c((0, 0)), 1)
        self.assertEqual(e.dim_c((1, 0)), 1)
        self.assertEqual(e.dim_c((1, 1)), 2)
        self.assertEqual(e.subspace_dim((0,), (0, 0)), 0)
        self.assertEqual(e.subspace_dim((1,), (1, 0)), 1)
        self.assertEqual(e.subspace_dim((0, 1), (2, 1)), 0)

    def test_node_membership(self):
        e = engine("node")
        self.assertTrue(e.member((0, 0)))
        self.assertFalse(e.member((1, 0)))
        self.assertTrue(e.member((1, 1)))
        self.assertEqual(len(e.semigroup_elements()), 10)

    def test_node_euler(self):
        e = engine("node")
        self.assertEqual(e.fiber_euler((0, 0)), 1)
        self.assertEqual(e.fiber_euler((1, 1)), 0)
        nonzero = [(f.v, f.euler) for f in e.fiber_table() if f.euler]
        self.assertEqual(nonzero, [((0, 0), 1)])

    def test_cusp(self):
        e = engine("cusp")
        for f in e.fiber_table():
            inside = f.v[0] != 1
            self.assertEqual(f.member, inside)
            self.assertEqual(f.euler, 1 if inside else 0)
            self.assertEqual(f.dim, 1 if inside else 0)

    def test_smooth(self):
        self.assertTrue(all(f.euler == 1 for f in engine("smooth").fiber_table()))

    def test_fiber_table_order(self):
        e = engine("tacnode")
        self.assertEqual([f.v for f in e.fiber_table()], e.box.points())

    def test_fiber_data(self):
        f = engine("node").fiber((0, 0))
        self.assertEqual(f.dim, f.subspace_dims[()])
        self.assertEqual(f.subspace_dims[(0, 1)], 0)

    def test_conductor_certified(self):
        for name in CORPUS:
            e = engine(name)
            e.certify_conductor()
            self.assertTrue(e.member(example(name).delta))

    def test_conductor_rejected(self):
        e = FiltrationEngine(example("node"), Box((3, 3)))
        e.table.fill()
        e.table._values[(2, 2)] = 2
        with self.assertRaises(CertificationFailedError):
            e.certify_conductor()

    def test_box_must_contain_conductor(self):
        with self.assertRaises(ValueError):
            FiltrationEngine(example("tacnode"), Box((1, 3)))

    def test_box_budget(self):
        with self.assertRaises(BudgetExceededError):
            FiltrationEngine.for_curve(example("tacnode"), Settings(max_cells=20))

    def test_c_table_window(self):
        c = engine("node").c_table()
        self.assertEqual(c.lower, (-1, -1))
        self.assertEqual(c.upper, (3, 3))
        self.assertEqual(c.coeff((-1, -1)), 0)
        self.assertEqual(c.coeff((3, 3)), 2)
