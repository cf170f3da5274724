"""Scalar fields: exact rationals and approximate complex numbers."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Literal, Union

from ..errors import FieldMismatchError, ParseError

Scalar = Union[Fraction, complex]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


@dataclass(frozen=True)
class Field:
    """Scalar field context.

    ``kind == "exact"`` computes over the rationals with ``Fraction`` and never
    rounds.  ``kind == "approx"`` computes with double-precision ``complex``
    values; ``tolerance`` is the relative threshold below which a pivot or a
    residual counts as zero.
    """

    kind: Literal["exact", "approx"] = "exact"
    tolerance: float = 0.0

    def __post_init__(self) -> None:
        if self.kind == "exact":
            if self.tolerance != 0:
                raise ValueError("exact field must have tolerance 0")
        elif self.kind == "approx":
            if not self.tolerance > 0:
                raise ValueError("approximate field needs a positive tolerance")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"

    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self.is_exact else 0j

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self.is_exact else 1 + 0j

    def coerce(self, value: object) -> Scalar:
        """Convert a Python number into this field's scalar type.

        Integers and rationals enter either field.  Floats and complex numbers
        are refused by the exact field: rounding must never leak into it.
        """
        if self.is_exact:
            if isinstance(value, bool):
                raise TypeError("booleans are not scalars")
            if isinstance(value, Fraction):
                return value
            if isinstance(value, (int, Rational)):
                return Fraction(value)
            if isinstance(value, str):
                return parse_rational(value)
            raise FieldMismatchError(
                f"cannot place {type(value).__name__} {value!r} in the exact field"
            )
        if isinstance(value, complex):
            return value
        if isinstance(value, (int, float, Fraction, Rational)) and not isinstance(value, bool):
            return complex(float(value))
        raise FieldMismatchError(
            f"cannot place {type(value).__name__} {value!r} in the approximate field"
        )

    def check(self, value: object) -> None:
        """Raise if ``value`` does not already belong to this field."""
        if self.is_exact:
            if not isinstance(value, Fraction):
                raise FieldMismatchError(f"{value!r} is not an exact rational")
        elif not isinstance(value, complex):
            raise FieldMismatchError(f"{value!r} is not an approximate complex scalar")

    def is_zero(self, value: Scalar, scale: float = 1.0) -> bool:
        if self.is_exact:
            return value == 0
        return abs(value) <= self.tolerance * max(scale, 1.0)

    def eq(self, a: Scalar, b: Scalar, scale: float = 1.0) -> bool:
        return self.is_zero(a - b, scale)


EXACT = Field("exact")


def approx(tolerance: float = 1e-9) -> Field:
    return Field("approx", tolerance)


def same_field(*fields: Field) -> Field:
    """Return the common field, refusing exact/approximate mixtures."""
    first = fields[0]
    for other in fields[1:]:
        if other.kind != first.kind:
            raise FieldMismatchError("exact and approximate operands cannot be mixed")
    return first


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ParseError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_scalar(value: Scalar) -> str:
    """Render a scalar compactly: ``-1/2`` or ``(1.5+0.25j)``."""
    if isinstance(value, Fraction):
        return str(value)
    if value.imag == 0:
        return repr(value.real)
    return repr(value)
