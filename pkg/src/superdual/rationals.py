"""Helpers for exact rational I/O.

All numerical data in this package is `fractions.Fraction`; floats are never
accepted.  The wire format for a rational is the string "a/b" with b > 0 and
gcd(a, b) = 1, or a bare integer string "a".
"""

from fractions import Fraction


def rat(x) -> Fraction:
    """Coerce ints, Fractions and "a/b" strings to Fraction. Floats are rejected."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact rational: {x!r}")


def rat_str(x: Fraction) -> str:
    """Canonical string form: "a" for integers, "a/b" otherwise (b > 0, reduced)."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def is_int(x: Fraction) -> bool:
    return Fraction(x).denominator == 1
