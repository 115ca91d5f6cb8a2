# -*- coding: utf-8 -*-
"""
Explicit fibres of the extended semigroup.

C(v) is computed here as the image of the leading-coefficient map on J(v),
not through dimensions, and the Euler characteristic of the projectivized
fibre is obtained from the intersection poset of the coordinate hyperplanes
inside C(v) and its Moebius function. This is independent of the
inclusion-exclusion over h used by FiltrationEngine.fiber_euler.
"""

from typing import Dict, List, Sequence, Tuple

import sympy

from .filtration import FiltrationEngine, subsets
from .utils.series import to_rat

Subspace = Tuple[Tuple[sympy.Rational, ...], ...]


def _rationals(vector: Sequence) -> List[sympy.Rational]:
    return [sympy.Rational(c.numerator, c.denominator) for c in vector]


def _canonical(rows: Sequence[Sequence], width: int) -> Subspace:
    """Reduced row echelon basis of the span of `rows`."""
    if not rows:
        return ()
    reduced, pivots = sympy.Matrix(rows).rref()
    return tuple(tuple(reduced[i, j] for j in range(width)) for i in range(len(pivots)))


def leading_coefficient_space(engine: FiltrationEngine, v: Sequence[int]) -> List[Tuple]:
    """Basis of C(v), the image of g -> (a_1(g), ..., a_r(g)) on J(v).

    Args:
        engine (FiltrationEngine): Engine for the curve.
        v (tuple): A value vector in [0, B].

    Returns:
        list[tuple[Fraction, ...]]: Reduced echelon basis of C(v) in Q^r.
    """
    matrix = engine.matrix
    rows = [_rationals(row) for row in engine.table.basis_rows]
    if tuple(v) not in engine.box:
        raise ValueError(f"{tuple(v)} is not in the box {engine.box.upper}")
    if not rows:
        return []
    conditions = [matrix.column_index(i, k) for i, x in enumerate(v) for k in range(x)]
    leading = [matrix.column_index(i, x) for i, x in enumerate(v)]

    width = len(rows)
    if conditions:
        block = sympy.Matrix([[row[j] for j in conditions] for row in rows])
        combos = [list(n) for n in block.T.nullspace()]
    else:
        combos = [[1 if i == j else 0 for j in range(width)] for i in range(width)]

    images = [
        [sum(lam[row] * rows[row][j] for row in range(width)) for j in leading]
        for lam in combos
    ]
    basis = _canonical(images, engine.r)
    return [tuple(to_rat(c) for c in vec) for vec in basis]


def _intersection(basis: List[Tuple], s: Sequence[int], r: int) -> Subspace:
    # Vectors of span(basis) whose coordinates in s vanish.
    if not basis:
        return ()
    basis = [_rationals(vec) for vec in basis]
    if not s:
        return _canonical(basis, r)
    block = sympy.Matrix([[vec[i] for i in s] for vec in basis])
    combos = block.T.nullspace()
    vectors = [
        [sum(lam[k] * basis[k][j] for k in range(len(basis))) for j in range(r)]
        for lam in combos
    ]
    return _canonical(vectors, r)


def _contains(big: Subspace, small: Subspace) -> bool:
    if not small:
        return True
    if not big:
        return False
    return sympy.Matrix(list(big) + list(small)).rank() == len(big)


def arrangement_euler(engine: FiltrationEngine, v: Sequence[int]) -> int:
    """chi(P(F_v)) from the Moebius function of the intersection poset.

    The fibre is C(v) minus the coordinate hyperplanes; its projectivization
    has Euler characteristic sum over flats X of mu(C(v), X) * dim X.
    """
    r = engine.r
    basis = leading_coefficient_space(engine, v)
    flats: Dict[Subspace, int] = {}
    for s in subsets(r):
        flat = _intersection(basis, s, r)
        flats.setdefault(flat, len(flat))
    top = _intersection(basis, (), r)
    if not top or any(len(_intersection(basis, (i,), r)) == len(top) for i in range(r)):
        return 0

    ordered = sorted(flats, key=lambda f: -flats[f])
    mobius: Dict[Subspace, int] = {}
    for flat in ordered:
        if flat == top:
            mobius[flat] = 1
            continue
        mobius[flat] = -sum(
            mobius[other]
            for other in mobius
            if other != flat and _contains(other, flat)
        )
    return sum(mobius[flat] * flats[flat] for flat in ordered)
