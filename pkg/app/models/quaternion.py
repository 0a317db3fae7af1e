"""Exact quaternions over the rationals.

A quaternion a0 + a1*i + a2*j + a3*k is stored as four ``Fraction`` components.
``Fraction`` keeps every component in lowest terms with a positive denominator,
so equality is plain componentwise equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from app.core import ParseError, ZeroInverse

Rational = Fraction

ScalarLike = Union["Quaternion", Fraction, int]

_UNITS = ("", "i", "j", "k")


@dataclass(frozen=True, slots=True)
class Quaternion:
    a0: Fraction = Fraction(0)
    a1: Fraction = Fraction(0)
    a2: Fraction = Fraction(0)
    a3: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        for name in ("a0", "a1", "a2", "a3"):
            value = getattr(self, name)
            if not isinstance(value, Fraction):
                object.__setattr__(self, name, Fraction(value))

    @classmethod
    def coerce(cls, value: ScalarLike) -> Quaternion:
        if isinstance(value, Quaternion):
            return value
        return cls(Fraction(value))

    @property
    def components(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a0, self.a1, self.a2, self.a3)

    def is_zero(self) -> bool:
        return not (self.a0 or self.a1 or self.a2 or self.a3)

    def norm2(self) -> Fraction:
        return self.a0 * self.a0 + self.a1 * self.a1 + self.a2 * self.a2 + self.a3 * self.a3

    def __add__(self, other: ScalarLike) -> Quaternion:
        o = Quaternion.coerce(other)
        return Quaternion(self.a0 + o.a0, self.a1 + o.a1, self.a2 + o.a2, self.a3 + o.a3)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> Quaternion:
        o = Quaternion.coerce(other)
        return Quaternion(self.a0 - o.a0, self.a1 - o.a1, self.a2 - o.a2, self.a3 - o.a3)

    def __rsub__(self, other: ScalarLike) -> Quaternion:
        return Quaternion.coerce(other) - self

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.a0, -self.a1, -self.a2, -self.a3)

    def __mul__(self, other: ScalarLike) -> Quaternion:
        return qmul(self, Quaternion.coerce(other))

    def __rmul__(self, other: ScalarLike) -> Quaternion:
        return qmul(Quaternion.coerce(other), self)

    def __str__(self) -> str:
        return format_quaternion(self)

    def __repr__(self) -> str:
        return f"Quaternion({format_quaternion(self)!r})"


ZERO = Quaternion()
ONE = Quaternion(Fraction(1))
I = Quaternion(a1=Fraction(1))  # noqa: E741
J = Quaternion(a2=Fraction(1))
K = Quaternion(a3=Fraction(1))


def qmul(x: Quaternion, y: Quaternion) -> Quaternion:
    """Hamilton product x*y. Order matters."""
    a0, a1, a2, a3 = x.a0, x.a1, x.a2, x.a3
    b0, b1, b2, b3 = y.a0, y.a1, y.a2, y.a3
    return Quaternion(
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def qconj(x: Quaternion) -> Quaternion:
    return Quaternion(x.a0, -x.a1, -x.a2, -x.a3)


def qinv(x: Quaternion) -> Quaternion:
    """Two-sided inverse, conjugate over norm squared.

    Raises:
        ZeroInverse: If x is zero
    """
    n = x.norm2()
    if n == 0:
        raise ZeroInverse("Cannot invert the zero quaternion")
    return Quaternion(x.a0 / n, -x.a1 / n, -x.a2 / n, -x.a3 / n)


def _format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_quaternion(x: Quaternion) -> str:
    """Canonical literal: terms in (1, i, j, k) order, zero terms omitted."""
    terms: list[str] = []
    for coeff, unit in zip(x.components, _UNITS, strict=True):
        if coeff == 0:
            continue
        if not unit:
            term = _format_rational(coeff)
        elif coeff == 1:
            term = unit
        elif coeff == -1:
            term = f"-{unit}"
        else:
            term = f"{_format_rational(coeff)}*{unit}"
        if terms and not term.startswith("-"):
            term = "+" + term
        terms.append(term)
    return "".join(terms) if terms else "0"


# sign, then either a coefficient with optional "*unit", or a bare unit
_TERM = re.compile(
    r"""
    (?P<sign>[+-])?
    (?:
        (?P<num>\d+)(?:/(?P<den>\d+))?(?:\*(?P<unit>[ijk]))?
      | (?P<bare>[ijk])
    )
    """,
    re.VERBOSE,
)


def parse_quaternion(text: str) -> Quaternion:
    """Parse a quaternion literal such as ``1/2+3*i-4/5*j+k``.

    Whitespace is ignored. Repeated components are summed.

    Raises:
        ParseError: With the offset into ``text`` of the first bad character
    """
    # keep original offsets while skipping whitespace
    positions = [idx for idx, ch in enumerate(text) if not ch.isspace()]
    compact = "".join(text[idx] for idx in positions)
    if not compact:
        raise ParseError("Empty quaternion literal", offset=0)

    parts = [Fraction(0)] * 4
    pos = 0
    while pos < len(compact):
        match = _TERM.match(compact, pos)
        if match is None or match.end() == pos:
            raise ParseError(f"Malformed quaternion literal {text!r}", offset=positions[pos])
        if pos > 0 and match.group("sign") is None:
            raise ParseError(
                f"Expected '+' or '-' between terms in {text!r}", offset=positions[pos]
            )
        sign = -1 if match.group("sign") == "-" else 1
        if match.group("bare"):
            unit = match.group("bare")
            coeff = Fraction(1)
        else:
            den = int(match.group("den") or 1)
            if den == 0:
                raise ParseError(
                    f"Zero denominator in {text!r}", offset=positions[match.start("den")]
                )
            coeff = Fraction(int(match.group("num")), den)
            unit = match.group("unit") or ""
        parts[_UNITS.index(unit)] += sign * coeff
        pos = match.end()

    return Quaternion(*parts)
