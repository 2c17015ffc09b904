"""Exact integer arithmetic for the effectiveness decision.

Python integers are arbitrary precision, so every operation here is exact
by construction; there is no overflow to guard against.
"""

import math


def gcd(a: int, b: int) -> int:
    """Nonnegative greatest common divisor, with gcd(0, 0) == 0."""
    return math.gcd(a, b)


def congruent(a: int, b: int, modulus: int) -> bool:
    """True iff ``modulus`` divides ``a - b``.

    The modulus must be positive; negative moduli are rejected rather than
    normalized so that all callers share one sign convention.
    """
    if modulus < 1:
        raise ValueError(f"modulus must be a positive integer, got {modulus}")
    return (a - b) % modulus == 0
