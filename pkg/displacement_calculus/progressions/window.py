"""Enumeration of all progressions distinguishable on a finite window."""

from __future__ import annotations

from typing import Iterable

from ..errors import DomainError
from .base import Progression
from .kinds import EMPTY, Empty, Residue, Singleton


MAX_WINDOW = 256


def relevant_progressions(window: Iterable[int]) -> list[tuple[Progression, frozenset[int]]]:
    """One representative per distinct trace (progression ∩ window).

    Covers the empty progression, singletons at window points and every
    residue class with 2 <= d <= max(window) - min(window). Larger moduli
    meet the window at most once, so they add no new traces. When traces
    collide the smallest modulus wins (singletons rank after all residues);
    the empty trace is always represented by the empty progression.
    Output order: by trace size, then by the trace's sorted elements.
    """
    points = sorted(set(window))
    if not points:
        raise DomainError("window must be nonempty")
    if len(points) > MAX_WINDOW:
        raise DomainError(f"window too large ({len(points)} > {MAX_WINDOW})")

    best: dict[frozenset[int], Progression] = {}

    def offer(progression: Progression):
        trace = progression.trace(points)
        if not trace and not isinstance(progression, Empty):
            return
        current = best.get(trace)
        if current is None or progression.rank_key < current.rank_key:
            best[trace] = progression

    offer(EMPTY)
    for n in points:
        offer(Singleton(n))
    span = points[-1] - points[0]
    for d in range(2, span + 1):
        for rep in range(d):
            offer(Residue(rep, d))

    found = [(progression, trace) for trace, progression in best.items()]
    return sorted(found, key=lambda item: (len(item[1]), sorted(item[1])))
