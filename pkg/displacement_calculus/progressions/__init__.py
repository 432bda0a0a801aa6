"""Arithmetic progressions: membership, generation, transforms, enumeration."""

from __future__ import annotations

from ..errors import DomainError, WouldBeAllIntegers
from .base import Progression
from .kinds import EMPTY, Empty, Residue, Singleton
from .window import relevant_progressions

__all__ = [
    "Progression",
    "Empty",
    "Singleton",
    "Residue",
    "EMPTY",
    "ap_contains",
    "ap_generated_by",
    "ap_transform",
    "relevant_progressions",
]


def ap_contains(progression: Progression, n: int) -> bool:
    """True iff n lies in the progression."""
    return progression.contains(n)


def ap_generated_by(x: int, y: int) -> Progression:
    """Smallest progression containing x and y.

    Raises WouldBeAllIntegers when |x - y| = 1.
    """
    if x == y:
        return Singleton(x)
    d = abs(x - y)
    if d == 1:
        raise WouldBeAllIntegers(f"{x} and {y} generate all of Z")
    return Residue(x, d)


def ap_transform(progression: Progression, kind: str, value: int | None = None) -> Progression:
    """Apply 'negate', 'shift' (by value) or 'reflect' (about value)."""
    if kind == "negate":
        return progression.negate()
    if value is None:
        raise DomainError(f"transform {kind!r} needs a value")
    if kind == "shift":
        return progression.shift(value)
    if kind == "reflect":
        return progression.reflect(value)
    raise DomainError(f"unknown transform {kind!r}")
