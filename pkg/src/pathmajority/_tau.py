"""Exact handling of the frequency threshold tau.

Thresholds are kept as :class:`fractions.Fraction` so that the strict test
``count > tau * length`` is decided in integer arithmetic and never wobbles
with rounding.  Floats are converted through their shortest ``repr`` (so
``0.1`` means 1/10, not the binary double nearest to it).
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Union

TauLike = Union[Fraction, float, str, int]


def as_tau(tau: TauLike) -> Fraction:
    if isinstance(tau, bool):
        raise TypeError("tau must be a number, not bool")
    if isinstance(tau, Fraction):
        f = tau
    elif isinstance(tau, Rational):
        f = Fraction(tau)
    elif isinstance(tau, float):
        f = Fraction(repr(tau))
    elif isinstance(tau, str):
        try:
            f = Fraction(tau.strip())
        except ValueError:
            raise ValueError(f"cannot parse tau from {tau!r}") from None
    else:
        raise TypeError(f"unsupported tau type {type(tau).__name__}")
    if not 0 < f < 1:
        raise ValueError(f"tau must lie strictly between 0 and 1, got {f}")
    return f


def ceil_inv(tau: Fraction) -> int:
    """``ceil(1/tau)``."""
    return -(-tau.denominator // tau.numerator)


def floor_mul_inv(k: int, tau: Fraction) -> int:
    """``floor(k/tau)``."""
    return (k * tau.denominator) // tau.numerator


def mg_counters(tau: Fraction) -> int:
    """Counters a Misra-Gries summary needs to keep every tau-majority."""
    return ceil_inv(tau) - 1


def iterated_log2(x: float, k: int) -> float:
    """``log^[k] x``; returns ``-inf`` once the iteration leaves the domain."""
    for _ in range(k):
        if x <= 0:
            return -math.inf
        x = math.log2(x)
    return x


def log_star(n: float) -> int:
    k = 0
    x = float(n)
    while x > 1:
        x = math.log2(x)
        k += 1
    return k
