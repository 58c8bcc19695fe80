import numbers
import re
from fractions import Fraction
from math import gcd
from typing import Union

from gjx.exceptions import InvalidArgumentError

# Exact scalar of every matrix; Fraction keeps itself in lowest terms with a positive denominator.
Rational = Fraction

RationalLike = Union[Fraction, int, str]

# [sign] digits | [sign] digits "/" digits | [sign] digits "." digits
RATIONAL_PATTERN = re.compile(r"[+-]?[0-9]+(?:/[0-9]+|\.[0-9]+)?")


def parse_rational(token: str) -> Fraction:
    """
    Parses a rational token of the matrix text grammar exactly.

    Finite decimals are converted without any binary floating-point round trip, so "0.1" is exactly 1/10.

    Args:
        token (str): An integer, a fraction "p/q" with q > 0, or a finite decimal, each with an optional sign.

    Returns:
        Fraction: The canonical rational value.

    Raises:
        InvalidArgumentError: If the token does not follow the grammar.
        ZeroDivisionError: If the token is a fraction with a zero denominator.
    """
    if not RATIONAL_PATTERN.fullmatch(token):
        raise InvalidArgumentError(f"invalid rational token {token!r}")
    if "/" in token:
        numerator, denominator = token.split("/")
        if int(denominator) == 0:
            raise ZeroDivisionError(f"zero denominator in {token!r}")
        return Fraction(int(numerator), int(denominator))
    return Fraction(token)


def as_rational(value: RationalLike) -> Fraction:
    """
    Converts an exact value to a canonical Fraction.

    Args:
        value: A Fraction, an integer (Python or numpy) or a rational token string.

    Returns:
        Fraction: The canonical rational value.

    Raises:
        InvalidArgumentError: For floats and any other inexact or unsupported value.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, str):
        return parse_rational(value.strip())
    if isinstance(value, numbers.Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    raise InvalidArgumentError(f"{value!r} of type {type(value).__name__} is not an exact rational; "
                               f"floats are not accepted")


def format_rational(value: Fraction) -> str:
    """
    Canonical text of a rational: "p" for integers, "p/q" with q > 1 otherwise, sign on the numerator only.
    """
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_canonical(value: Fraction) -> bool:
    """True if the value is a Fraction stored in lowest terms with a positive denominator."""
    if not isinstance(value, Fraction):
        return False
    return value.denominator > 0 and gcd(abs(value.numerator), value.denominator) == 1
