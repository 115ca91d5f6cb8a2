# -*- coding: utf-8 -*-
"""
Reading and writing curve files.

One branch per line::

    # the cusp
    branch a: x = t^2, y = t^3

A polynomial is a sum of terms ``c*t^k`` where ``c`` is an integer or a
fraction ``p/q``; ``t^1`` may be written ``t`` and a coefficient of 1 may be
left out. Blank lines and ``#`` comments are ignored.
"""

import re
from fractions import Fraction
from typing import Dict, List, Sequence

from .curve import BranchParam
from .errors import CurveSyntaxError, NegativeExponentError, ZeroDenominatorError
from .utils.series import UniPoly

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_\-]*")
_DIGITS = re.compile(r"[0-9]+")


class _Scanner:
    """Cursor over one line, reporting 1-based positions in errors."""

    def __init__(self, text: str, lineno: int):
        self.text = text
        self.lineno = lineno
        self.pos = 0

    def error(self, message, cls=CurveSyntaxError, pos=None):
        column = (self.pos if pos is None else pos) + 1
        return cls(message, self.lineno, column)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, token: str) -> bool:
        self.skip()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str):
        if not self.accept(token):
            found = self.peek() or "end of line"
            raise self.error(f"expected '{token}', found '{found}'")

    def match(self, pattern) -> str:
        self.skip()
        m = pattern.match(self.text, self.pos)
        if not m:
            return ""
        self.pos = m.end()
        return m.group(0)

    def at_end(self) -> bool:
        return self.peek() == ""


def _exponent(scanner: _Scanner) -> int:
    if not scanner.accept("^"):
        return 1
    start = scanner.pos
    if scanner.accept("-"):
        digits = scanner.match(_DIGITS)
        raise scanner.error(
            f"negative exponent t^-{digits or '?'}", NegativeExponentError, start
        )
    digits = scanner.match(_DIGITS)
    if not digits:
        raise scanner.error("expected an exponent after '^'")
    return int(digits)


def _coefficient(scanner: _Scanner, digits: str) -> Fraction:
    start = scanner.pos
    if not scanner.accept("/"):
        return Fraction(int(digits))
    denominator = scanner.match(_DIGITS)
    if not denominator:
        raise scanner.error("expected a denominator after '/'")
    if int(denominator) == 0:
        raise scanner.error(f"zero denominator in {digits}/{denominator}", ZeroDenominatorError, start)
    return Fraction(int(digits), int(denominator))


def _term(scanner: _Scanner):
    digits = scanner.match(_DIGITS)
    if digits:
        coefficient = _coefficient(scanner, digits)
        if not scanner.accept("*"):
            return 0, coefficient
    else:
        coefficient = Fraction(1)
    if not scanner.accept("t"):
        found = scanner.peek() or "end of line"
        raise scanner.error(f"expected a coefficient or 't', found '{found}'")
    return _exponent(scanner), coefficient


def _poly(scanner: _Scanner) -> UniPoly:
    coeffs: Dict[int, Fraction] = {}
    sign = -1 if scanner.accept("-") else 1
    while True:
        k, c = _term(scanner)
        coeffs[k] = coeffs.get(k, 0) + sign * c
        if scanner.accept("+"):
            sign = 1
        elif scanner.accept("-"):
            sign = -1
        else:
            return UniPoly(coeffs)


def _branch(scanner: _Scanner) -> BranchParam:
    scanner.expect("branch")
    if scanner.pos < len(scanner.text) and scanner.text[scanner.pos] not in " \t":
        raise scanner.error("expected a space after 'branch'")
    name = scanner.match(_NAME)
    if not name:
        raise scanner.error("expected a branch name")
    scanner.expect(":")
    scanner.expect("x")
    scanner.expect("=")
    x = _poly(scanner)
    scanner.expect(",")
    scanner.expect("y")
    scanner.expect("=")
    y = _poly(scanner)
    if not scanner.at_end():
        raise scanner.error(f"unexpected '{scanner.peek()}'")
    return BranchParam(x, y, name)


def parse_curve(text: str) -> List[BranchParam]:
    """Parses a curve file into branch parametrizations.

    Args:
        text (str): The contents of a curve file.

    Returns:
        list[BranchParam]: The branches in file order.

    Raises:
        CurveSyntaxError: With the line and column of the problem.
        NegativeExponentError: For a term t^-k.
        ZeroDenominatorError: For a coefficient p/0.
        NonPositiveOrderError: For a constant term or a zero branch.
    """
    branches = []
    seen = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        scanner = _Scanner(body, lineno)
        branch = _branch(scanner)
        if branch.name in seen:
            raise CurveSyntaxError(
                f"branch name '{branch.name}' already used on line {seen[branch.name]}",
                lineno,
                body.index(branch.name, body.index("branch") + len("branch")) + 1,
            )
        seen[branch.name] = lineno
        branch.check_orders()
        branches.append(branch)
    return branches


def render_poly(poly: UniPoly) -> str:
    """A polynomial in the curve file syntax, lowest power first."""
    if poly.is_zero():
        return "0"
    out = []
    for k, c in poly.items():
        magnitude = abs(c)
        power = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        if not power:
            body = str(magnitude)
        elif magnitude == 1:
            body = power
        else:
            body = f"{magnitude}*{power}"
        if not out:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(out)


def render_curve(branches: Sequence[BranchParam]) -> str:
    """Writes branches in the curve file syntax; unnamed branches become b1, b2, ..."""
    lines = []
    for i, branch in enumerate(branches):
        name = branch.name if branch.name is not None else f"b{i + 1}"
        lines.append(f"branch {name}: x = {render_poly(branch.x)}, y = {render_poly(branch.y)}")
    return "\n".join(lines) + "\n"
