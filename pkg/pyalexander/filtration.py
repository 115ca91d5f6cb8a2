# -*- coding: utf-8 -*-
"""
Multi-index filtration on the ring of functions of a curve.

h(v) = dim O_C / J(v) is computed on a finite box as the rank of a column
block of the monomial image matrix; everything else (c(v), the subspace
dimensions d(S, v), semigroup membership and the Euler characteristics of
the projectivized fibres) is read off h.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
from math import prod
from typing import Dict, Iterator, List, NamedTuple, Sequence, Tuple

from .config import Settings
from .curve import Curve
from .errors import (
    CertificationFailedError,
    budget_exceeded_exception_factory,
    out_of_box_exception_factory,
)
from .laurent import BoxSeries, graded_lex_key
from .utils.linalg import EchelonBasis, rank, row_space_basis

logger = logging.getLogger(__name__)

ValueVector = Tuple[int, ...]
Subset = Tuple[int, ...]


def subsets(r: int) -> List[Subset]:
    """All subsets of {0..r-1}, by size and then lexicographically."""
    return [s for k in range(r + 1) for s in combinations(range(r), k)]


def shift(v: Sequence[int], s: Subset) -> ValueVector:
    """v + 1_S."""
    return tuple(x + 1 if i in s else x for i, x in enumerate(v))


class Box(NamedTuple):
    """The window [0, upper] of value vectors a computation covers."""

    upper: ValueVector

    @classmethod
    def around(cls, delta: Sequence[int], margin: int, reach: int = 0) -> "Box":
        """Box with upper corner max(delta + margin, reach) in each coordinate."""
        return cls(tuple(max(d + margin, reach) for d in delta))

    @property
    def r(self) -> int:
        return len(self.upper)

    def volume(self) -> int:
        """Number of Hilbert function values the box needs, on [0, B + 1]."""
        return prod(b + 2 for b in self.upper)

    def points(self) -> List[ValueVector]:
        """All v in [0, B] in graded-lex order."""
        return sorted(product(*(range(b + 1) for b in self.upper)), key=graded_lex_key)

    def __contains__(self, v) -> bool:
        return all(0 <= x <= b for x, b in zip(v, self.upper))


class MonomialMatrix:
    """Coefficients of t^k in the images of monomials on every branch.

    Rows are indexed by monomials x^a y^b with a + b <= degree, columns by
    pairs (branch i, exponent k) with k < precisions[i].
    """

    def __init__(self, monomials, columns, rows, degree, precisions):
        self.monomials = monomials
        self.columns = columns
        self.rows = rows
        self.degree = degree
        self.precisions = precisions
        self._column_index = {c: j for j, c in enumerate(columns)}
        self._row_index = {m: i for i, m in enumerate(monomials)}

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.columns)

    def column_index(self, i: int, k: int) -> int:
        return self._column_index[(i, k)]

    def entry(self, monomial: Tuple[int, int], i: int, k: int):
        return self.rows[self._row_index[monomial]][self._column_index[(i, k)]]


def degree_bound(multiplicities: Sequence[int], upper: Sequence[int]) -> int:
    """Smallest D with m_i * (D + 1) > B_i for every branch."""
    return max(b // m for m, b in zip(multiplicities, upper))


def build_matrix(curve: Curve, box: Box, settings: Settings = None) -> MonomialMatrix:
    """Builds the monomial image matrix for a curve on a box.

    Raises:
        BudgetExceededError: If rows times columns exceed settings.max_cells.
    """
    settings = settings or Settings()
    degree = degree_bound(curve.multiplicities, box.upper)
    precisions = tuple(b + 1 for b in box.upper)
    nrows = (degree + 1) * (degree + 2) // 2
    ncols = sum(precisions)
    if nrows * ncols > settings.max_cells:
        raise budget_exceeded_exception_factory("Monomial matrix", nrows * ncols, settings.max_cells)

    images = [
        branch.monomial_images(degree, n) for branch, n in zip(curve.branches, precisions)
    ]
    monomials = sorted(images[0], key=graded_lex_key)
    columns = [(i, k) for i, n in enumerate(precisions) for k in range(n)]
    rows = [
        [c for per_branch in images for c in per_branch[mono].coeffs()]
        for mono in monomials
    ]
    logger.info("Monomial matrix: degree %d, %d x %d", degree, nrows, ncols)
    return MonomialMatrix(monomials, columns, rows, degree, precisions)


class HilbertTable:
    """Memoized h(v) = dim O_C / J(v) for v in [-1, B + 1].

    The first call fills the whole table with one sweep: columns are added
    branch by branch, one exponent at a time, to an incremental echelon
    basis, and the rank is recorded after each addition.

    Args:
        matrix (MonomialMatrix): The monomial image matrix of the curve.
        box (Box): The box the matrix was built for.
        threads (int, optional): Worker threads for the sweep.
    """

    def __init__(self, matrix: MonomialMatrix, box: Box, threads: int = 1):
        self.matrix = matrix
        self.box = box
        self.threads = threads
        self._values: Dict[ValueVector, int] = {}
        # Column dependencies survive row operations, so the reduced row
        # basis has the same column ranks as the full matrix.
        self.basis_rows = row_space_basis(matrix.rows, len(matrix.columns))
        self._columns = []
        for i, n in enumerate(matrix.precisions):
            per_branch = []
            for k in range(n):
                j = matrix.column_index(i, k)
                per_branch.append({row: r[j] for row, r in enumerate(self.basis_rows) if r[j]})
            self._columns.append(per_branch)

    @property
    def r(self) -> int:
        return self.box.r

    def _sweep(self, level: int, basis: EchelonBasis, prefix: ValueVector, out: dict):
        columns = self._columns[level]
        for count in range(len(columns) + 1):
            if count:
                basis.insert(columns[count - 1])
            key = prefix + (count,)
            if level == self.r - 1:
                out[key] = basis.rank
            else:
                self._sweep(level + 1, basis.copy(), key, out)

    def fill(self):
        """Computes h on all of [0, B + 1]."""
        if self._values:
            return
        snapshots = []
        basis = EchelonBasis()
        for count in range(len(self._columns[0]) + 1):
            if count:
                basis.insert(self._columns[0][count - 1])
            snapshots.append((count, basis.copy()))

        if self.r == 1:
            values = {(count, ): b.rank for count, b in snapshots}
        else:
            def task(item):
                count, b = item
                out = {}
                self._sweep(1, b, (count,), out)
                return out

            values = {}
            with ThreadPoolExecutor(max_workers=self.threads) as pool:
                for out in pool.map(task, snapshots):
                    values.update(out)
        self._values = values
        logger.info("Hilbert table filled: %d values", len(values))

    def _clamp(self, v: Sequence[int]) -> ValueVector:
        if len(v) != self.r:
            raise ValueError(f"Expected a vector of length {self.r}, got {tuple(v)}")
        if any(x > b + 1 for x, b in zip(v, self.box.upper)):
            raise out_of_box_exception_factory(v, self.box.upper)
        return tuple(max(x, 0) for x in v)

    def hilbert(self, v: Sequence[int]) -> int:
        """h(v); coordinates below zero impose no condition.

        Raises:
            OutOfBoxError: If some v_i exceeds B_i + 1.
        """
        key = self._clamp(v)
        if not self._values:
            self.fill()
        return self._values[key]

    def rank_direct(self, v: Sequence[int]) -> int:
        """h(v) recomputed from scratch by row reduction of the column block."""
        key = self._clamp(v)
        cols = [
            self.matrix.column_index(i, k) for i, x in enumerate(key) for k in range(x)
        ]
        block = [[row[j] for j in cols] for row in self.matrix.rows]
        return rank(block, len(cols))


@dataclass(frozen=True)
class FiberData:
    """Everything the engine knows about the fibre over one value vector."""

    v: ValueVector
    dim: int
    subspace_dims: Dict[Subset, int] = field(hash=False)
    member: bool
    euler: int


class FiltrationEngine:
    """Filtration invariants of a curve on a box.

    Args:
        curve (Curve): A validated curve.
        box (Box): The computation window; must contain the conductor.
        settings (Settings, optional): Budget and thread count.
    """

    def __init__(self, curve: Curve, box: Box, settings: Settings = None):
        settings = settings or Settings()
        if box.r != curve.r or any(b < d for b, d in zip(box.upper, curve.delta)):
            raise ValueError(f"Box {box.upper} does not contain the conductor {curve.delta}")
        if box.volume() > settings.max_cells:
            raise budget_exceeded_exception_factory("Box", box.volume(), settings.max_cells)
        self.curve = curve
        self.box = box
        self.matrix = build_matrix(curve, box, settings)
        self.table = HilbertTable(self.matrix, box, settings.threads)

    @classmethod
    def for_curve(cls, curve: Curve, settings: Settings = None, order: int = None):
        """Engine on the box delta + margin, widened to reach `order`."""
        settings = settings or Settings()
        if order is None:
            order = settings.order or 0
        box = Box.around(curve.delta, settings.margin, order)
        logger.info("Box upper corner %s (delta %s)", box.upper, curve.delta)
        return cls(curve, box, settings)

    @property
    def r(self) -> int:
        return self.curve.r

    def hilbert(self, v: Sequence[int]) -> int:
        return self.table.hilbert(v)

    def dim_c(self, v: Sequence[int]) -> int:
        """c(v) = h(v + 1) - h(v) = dim C(v)."""
        v = tuple(max(x, -1) for x in v)
        return self.hilbert(shift(v, tuple(range(self.r)))) - self.hilbert(v)

    def subspace_dim(self, s: Subset, v: Sequence[int]) -> int:
        """d(S, v) = dim of C(v) inside the coordinate subspace {a_i = 0, i in S}."""
        v = tuple(max(x, -1) for x in v)
        return self.hilbert(shift(v, tuple(range(self.r)))) - self.hilbert(shift(v, tuple(s)))

    def member(self, v: Sequence[int]) -> bool:
        """True iff v is in the semigroup of values.

        A linear subspace lies in a finite union of hyperplanes only if it
        lies in one of them.
        """
        c = self.dim_c(v)
        return c > 0 and all(self.subspace_dim((i,), v) < c for i in range(self.r))

    def fiber_euler(self, v: Sequence[int]) -> int:
        """chi(P(F_v)) = sum over S of (-1)^(|S|+1) h(v + 1_S)."""
        return sum(
            (-1) ** (len(s) + 1) * self.hilbert(shift(v, s)) for s in subsets(self.r)
        )

    def fiber(self, v: Sequence[int]) -> FiberData:
        v = tuple(v)
        dims = {s: self.subspace_dim(s, v) for s in subsets(self.r)}
        return FiberData(v, dims[()], dims, self.member(v), self.fiber_euler(v))

    def fiber_table(self) -> List[FiberData]:
        """FiberData for every v in [0, B], graded-lex."""
        self.table.fill()
        return [self.fiber(v) for v in self.box.points()]

    def semigroup_elements(self) -> List[ValueVector]:
        """S_C intersected with the box, graded-lex."""
        return [v for v in self.box.points() if self.member(v)]

    def c_table(self) -> BoxSeries:
        """c(v) on [-1, B]."""
        lower = (-1,) * self.r
        points = product(*(range(-1, b + 1) for b in self.box.upper))
        return BoxSeries(lower, self.box.upper, {v: self.dim_c(v) for v in points})

    def euler_series(self) -> BoxSeries:
        """chi(P(F_v)) on [0, B]."""
        return BoxSeries(
            (0,) * self.r, self.box.upper, {v: self.fiber_euler(v) for v in self.box.points()}
        )

    def points_above_conductor(self) -> Iterator[ValueVector]:
        delta = self.curve.delta
        return (v for v in self.box.points() if all(x >= d for x, d in zip(v, delta)))

    def certify_conductor(self):
        """Checks c(v) = r for every v in [delta, B].

        Raises:
            CertificationFailedError: If some c(v) differs from r.
        """
        for v in self.points_above_conductor():
            c = self.dim_c(v)
            if c != self.r:
                raise CertificationFailedError(
                    f"c{v} = {c}, expected {self.r} beyond the conductor {self.curve.delta}"
                )
        logger.debug("Conductor %s certified on the box", self.curve.delta)
