"""Shared fixtures: the built-in curves, validated once per test run."""

from functools import lru_cache

from pyalexander.config import Settings
from pyalexander.corpus import load_example
from pyalexander.curve import BranchParam, validate
from pyalexander.curvefile import parse_curve
from pyalexander.filtration import FiltrationEngine
from pyalexander.utils.series import UniPoly

CORPUS = ["smooth", "node", "cusp", "tacnode", "e8", "two46", "cusp-plus-line"]


def poly(*terms):
    """poly((1, 2), (3, 5)) is t^2 + 3 t^5; terms are (coefficient, exponent)."""
    return UniPoly({k: c for c, k in terms})


def branch(x, y, name=None):
    return BranchParam(poly(*x), poly(*y), name)


@lru_cache(maxsize=None)
def example(name):
    return validate(parse_curve(load_example(name)))


@lru_cache(maxsize=None)
def engine(name, margin=Settings.MARGIN):
    e = FiltrationEngine.for_curve(example(name), Settings(margin=margin))
    e.table.fill()
    return e
