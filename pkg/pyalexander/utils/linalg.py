# -*- coding: utf-8 -*-
"""Exact linear algebra over the rationals

One-shot reductions go through sympy's DomainMatrix over QQ. Incremental
rank tracking, where vectors arrive one at a time and the rank after each
arrival is wanted, uses EchelonBasis on sparse Fraction vectors.
"""

from fractions import Fraction
from typing import Dict, List, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .series import to_rat

SparseVector = Dict[int, Fraction]


def _domain_matrix(rows: Sequence[Sequence[Fraction]], ncols: int) -> DomainMatrix:
    data = [[QQ(c.numerator, c.denominator) for c in row] for row in rows]
    return DomainMatrix(data, (len(data), ncols), QQ)


def rank(rows: Sequence[Sequence[Fraction]], ncols: int) -> int:
    """Rank over QQ of a dense matrix given as a list of rows."""
    if not rows or not ncols:
        return 0
    return _domain_matrix(rows, ncols).rank()


def row_space_basis(rows: Sequence[Sequence[Fraction]], ncols: int) -> List[List[Fraction]]:
    """Nonzero rows of the reduced row echelon form of a dense matrix."""
    if not rows or not ncols:
        return []
    reduced, pivots = _domain_matrix(rows, ncols).rref()
    dense = reduced.to_Matrix()
    return [
        [to_rat(dense[i, j]) for j in range(ncols)] for i in range(len(pivots))
    ]


def sparse(vector: Sequence[Fraction]) -> SparseVector:
    """Drops the zero entries of a dense vector."""
    return {i: c for i, c in enumerate(vector) if c}


class EchelonBasis:
    """Incremental echelon form of a growing set of sparse vectors.

    Each stored vector is normalized to 1 at its pivot (its first nonzero
    position) and vanishes at every position before it; pivots are distinct.
    """

    __slots__ = ("_pivots",)

    def __init__(self, pivots: Dict[int, SparseVector] = None):
        self._pivots = dict(pivots) if pivots else {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def pivots(self) -> List[int]:
        return sorted(self._pivots)

    def copy(self) -> "EchelonBasis":
        # Stored vectors are never mutated, so sharing them is safe.
        return EchelonBasis(self._pivots)

    def reduce(self, vector: SparseVector) -> SparseVector:
        """Returns the remainder of `vector` modulo the span of the basis."""
        vec = dict(vector)
        for p in sorted(self._pivots):
            c = vec.get(p)
            if not c:
                continue
            for j, a in self._pivots[p].items():
                value = vec.get(j, 0) - c * a
                if value:
                    vec[j] = value
                else:
                    vec.pop(j, None)
        return vec

    def insert(self, vector: SparseVector) -> bool:
        """Adds `vector` to the span; returns True when the rank grew."""
        rem = self.reduce(vector)
        if not rem:
            return False
        p = min(rem)
        scale = rem[p]
        self._pivots[p] = {j: c / scale for j, c in rem.items()}
        return True
