"""Scalar coercion helpers shared by the exact-arithmetic modules.

Two numeric modes exist side by side: exact ``fractions.Fraction`` for
construction and certification, plain ``float`` for long simulations.
Floats are promoted to rationals by parsing their shortest decimal repr,
so ``0.1`` becomes 1/10 rather than the binary expansion.
"""

from fractions import Fraction

Scalar = Fraction | int | float

FLOAT_TOL = 1e-12


def to_fraction(value) -> Fraction:
    """Coerce ints, rational strings ("3/7", "0.25") and floats to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    raise TypeError(f"cannot coerce {type(value).__name__} to a rational")


def is_exact(values) -> bool:
    """True when every scalar is an int or Fraction (exact mode)."""
    return all(isinstance(v, (int, Fraction)) for v in values)


def format_scalar(value) -> str:
    """Serialize a scalar losslessly: rationals as "p/q", floats via repr."""
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, int):
        return f"{value}/1"
    return repr(float(value))
