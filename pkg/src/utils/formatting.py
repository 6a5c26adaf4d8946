"""Decimal rendering of exact probabilities."""

from fractions import Fraction


def terminates(value: Fraction) -> bool:
    """True when the value has a finite decimal expansion."""
    denominator = value.denominator
    for prime in (2, 5):
        while denominator % prime == 0:
            denominator //= prime
    return denominator == 1


def format_decimal(value: Fraction, places: int = 12) -> str:
    """Render a fraction as a decimal without trailing zeros.

    Terminating values are written exactly; anything else is rounded
    half-even to ``places`` digits.
    """
    if terminates(value):
        digits = 0
        scaled = value
        while scaled.denominator != 1:
            scaled *= 10
            digits += 1
    else:
        digits = places
        scaled = Fraction(round(value * 10**places))
    sign = "-" if scaled < 0 else ""
    magnitude = str(abs(scaled.numerator)).rjust(digits + 1, "0")
    if digits == 0:
        return f"{sign}{magnitude}"
    whole, fraction = magnitude[:-digits], magnitude[-digits:].rstrip("0")
    return f"{sign}{whole}.{fraction}" if fraction else f"{sign}{whole}"
