from ._version import __version__

from .config import Settings
from .corpus import load_example
from .curve import BranchParam, Curve, implicitize, validate
from .curvefile import parse_curve, render_curve
from .filtration import Box, FiltrationEngine
from .laurent import LaurentPoly, canonical_render
from .pipeline import (
    alexander_via_dimensions,
    alexander_via_euler,
    analyze,
    cross_check,
    knot_polynomial,
    zeta,
)


__all__ = [
    "arrangement",
    "cli",
    "config",
    "corpus",
    "curve",
    "curvefile",
    "errors",
    "filtration",
    "laurent",
    "output",
    "pipeline",
    "utils",
]
