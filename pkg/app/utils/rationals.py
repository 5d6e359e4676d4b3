"""
Utilities for parsing and formatting exact rationals.
"""
from fractions import Fraction
from typing import Annotated, Any

from pydantic import BeforeValidator, PlainSerializer

from app.exceptions import ParseError


def parse_rational(value: Any) -> Fraction:
    """
    Convert an integer, ``p/q`` string or finite decimal to a reduced Fraction.

    Args:
        value: int, Fraction or string such as "3", "-2/6" or "0.5"

    Returns:
        The exact value (0.5 -> 1/2)
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, float):
        raise ParseError(f"refusing inexact float {value!r}; pass a string")
    if not isinstance(value, str):
        raise ParseError(f"cannot read {value!r} as a rational")

    text = value.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {value!r}: {exc}") from exc


def format_rational(value: Fraction) -> str:
    """Lowest terms, positive denominator, integers without ``/1``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


Rational = Annotated[
    Fraction,
    BeforeValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str, when_used="json"),
]
