"""Input checks shared by the public functions."""

from __future__ import annotations

import math


class DomainError(ValueError):
    """An argument lies outside the domain where a formula is defined."""


class PoleError(ValueError):
    """A derivative was requested at a pole of the map."""


def check_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite (got {value!r})")
    return value


def check_interval(
    name: str,
    value: float,
    lo: float,
    hi: float,
    *,
    lo_label: str | None = None,
    hi_label: str | None = None,
    closed_lo: bool = False,
    closed_hi: bool = False,
) -> float:
    """Return ``value`` as a float if it lies in the interval, else raise.

    The error message names the violated bound, using ``lo_label`` /
    ``hi_label`` when the bound has a nicer symbolic form (``"√2−1"``).
    """
    value = check_finite(name, value)
    lo_text = lo_label if lo_label is not None else f"{lo:g}"
    hi_text = hi_label if hi_label is not None else f"{hi:g}"
    if closed_lo:
        if value < lo:
            raise DomainError(f"{name} must be at least {lo_text} (got {value!r})")
    elif value <= lo:
        raise DomainError(f"{name} must exceed {lo_text} (got {value!r})")
    if closed_hi:
        if value > hi:
            raise DomainError(f"{name} must be at most {hi_text} (got {value!r})")
    elif value >= hi:
        raise DomainError(f"{name} must be less than {hi_text} (got {value!r})")
    return value


def check_unit_interval(name: str, value: float) -> float:
    return check_interval(name, value, 0.0, 1.0)
