"""Built-in example curves, shipped as curve files next to this module."""

import os
from typing import List

from ..errors import UnknownExampleError

_SUFFIX = ".curve"


def _directory() -> str:
    return os.path.dirname(__file__)


def names() -> List[str]:
    """Names of the built-in examples, sorted."""
    return sorted(
        f[: -len(_SUFFIX)] for f in os.listdir(_directory()) if f.endswith(_SUFFIX)
    )


def load_example(name: str) -> str:
    """Returns the curve file text of a built-in example.

    Raises:
        UnknownExampleError: If there is no example by that name.
    """
    path = os.path.join(_directory(), f"{name}{_SUFFIX}")
    if name not in names() or not os.path.isfile(path):
        raise UnknownExampleError(
            f"Unknown example '{name}'; choose one of: {', '.join(names())}"
        )
    with open(path, "r", encoding="utf-8") as f:
        return f.read()
