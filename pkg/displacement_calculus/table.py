"""Batch difficulty tables for box partitions (a^b)."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Callable

from .cache import DifficultyCache
from .config import EngineConfig
from .engine import DifficultyResult, conjugate_sequence, difficulty, verify_sequence
from .errors import CacheIoError
from .partition import Partition

logger = logging.getLogger(__name__)


def box(a: int, b: int) -> Partition:
    """The box partition (a^b): b rows of length a."""
    return Partition((a,) * b) if a > 0 and b > 0 else Partition()


@dataclass
class DifficultyTable:
    """delta((a^b)) for every a in a_values and b in b_values.

    Laid out like the published table: one row per b, one column per a.
    """
    a_values: list[int]
    b_values: list[int]
    cells: dict[tuple[int, int], int] = field(default_factory=dict)
    results: dict[tuple[int, int], DifficultyResult] = field(default_factory=dict)

    def delta(self, a: int, b: int) -> int:
        return self.cells[(a, b)]

    def matrix(self) -> list[list[int]]:
        return [[self.cells[(a, b)] for a in self.a_values] for b in self.b_values]

    def asymmetric_pairs(self) -> list[tuple[int, int]]:
        """Pairs (a, b) computed both ways whose values disagree (always empty by duality)."""
        return sorted(
            (a, b) for (a, b), value in self.cells.items()
            if a < b and (b, a) in self.cells and self.cells[(b, a)] != value
        )


def _cell_result(
    a: int,
    b: int,
    cache: DifficultyCache | None,
    computed: dict[tuple[int, int], DifficultyResult],
    config: EngineConfig,
    use_duality: bool,
) -> DifficultyResult:
    target = box(a, b)
    if cache is not None:
        cached = cache.get(target)
        if cached is not None:
            return cached
    if use_duality and (b, a) in computed:
        mirrored = conjugate_sequence(computed[(b, a)].certificate)
        delta = verify_sequence(mirrored, target)
        return DifficultyResult(target=target, delta=delta, certificate=mirrored, stats={"dual": True})
    return difficulty(target, config=config)


def difficulty_table(
    a_range,
    b_range,
    cache: DifficultyCache | None = None,
    config: EngineConfig | None = None,
    progress_callback: Callable[[int, int, tuple[int, int], DifficultyResult], None] | None = None,
    use_duality: bool = True,
) -> DifficultyTable:
    """Compute delta((a^b)) over the given ranges, reading and filling the cache.

    A cache that cannot be written is dropped with a warning and the
    computation carries on without persistence.

    Args:
        a_range: Row lengths a
        b_range: Row counts b
        cache: Optional DifficultyCache, read first and filled as cells finish
        config: Engine limits and defaults
        progress_callback: Called as (current, total, (a, b), result) after each cell
        use_duality: Fill (a^b) from a verified mirror of (b^a) when available

    Returns:
        DifficultyTable with one row per b and one column per a
    """
    config = config or EngineConfig()
    table = DifficultyTable(a_values=list(a_range), b_values=list(b_range))
    cells = [(a, b) for b in table.b_values for a in table.a_values]
    started = time.time()

    for index, (a, b) in enumerate(cells, start=1):
        result = _cell_result(a, b, cache, table.results, config, use_duality)
        table.results[(a, b)] = result
        table.cells[(a, b)] = result.delta
        if cache is not None and result.target not in cache:
            try:
                cache.put(result)
            except CacheIoError as e:
                logger.warning("cache disabled: %s", e)
                cache = None
        if progress_callback:
            progress_callback(index, len(cells), (a, b), result)

    if cache is not None:
        try:
            cache.flush()
        except CacheIoError as e:
            logger.warning("cache not saved: %s", e)
    logger.info("table of %d cells done in %.1fs", len(cells), time.time() - started)
    return table


def box_difficulty_probe(max_side: int, config: EngineConfig | None = None) -> dict:
    """Largest delta((a^b)) over 3 <= a, b <= max_side.

    Experimental evidence for a uniform bound on box difficulties; nothing
    is asserted about the bound itself.
    """
    sides = range(3, max_side + 1)
    table = difficulty_table(sides, sides, config=config)
    worst = max(table.cells.items(), key=lambda item: (item[1], item[0])) if table.cells else None
    return {
        "max_side": max_side,
        "cells": len(table.cells),
        "max_delta": worst[1] if worst else None,
        "argmax": worst[0] if worst else None,
        "values": table.cells,
    }
