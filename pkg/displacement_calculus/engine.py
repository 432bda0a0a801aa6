"""Exact displacement difficulty: layered DP, exhaustive oracle and certificate checks."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .config import EngineConfig
from .displacement import down_parts, successor_parts, up_parts
from .errors import NotLinked, ResourceError, WrongEndpoint, WrongWeightJump
from .partition import EMPTY, Partition, conjugate
from .progressions import Progression, relevant_progressions

logger = logging.getLogger(__name__)

Parts = tuple[int, ...]


@dataclass(frozen=True)
class Step:
    """One step of a valid sequence: the partition reached, its progression and k."""
    partition: Partition
    lam: Progression
    k: int


@dataclass(frozen=True)
class ValidSequence:
    """A chain of linked partitions, implicitly starting from the empty partition."""
    steps: tuple[Step, ...] = ()

    @property
    def cost(self) -> int:
        """Number of 1-linked steps."""
        return sum(1 for step in self.steps if step.k == 1)

    @property
    def final(self) -> Partition:
        return self.steps[-1].partition if self.steps else EMPTY

    def __len__(self) -> int:
        return len(self.steps)

    def to_rows(self) -> list[list]:
        """[[partition text, lambda text, k], ...] as used by cache and certificate files."""
        return [[s.partition.to_text(), s.lam.to_text(), s.k] for s in self.steps]


@dataclass
class DifficultyResult:
    """delta(target) with a witnessing certificate and search statistics."""
    target: Partition
    delta: int
    certificate: ValidSequence
    explored: int = 0
    elapsed: float = 0.0
    stats: dict = field(default_factory=dict)


def weight_lower_bound(p: Partition) -> int:
    """max(0, 2 P_0 - |P|, 2 P*_0 - |P|): each step grows the first row and first column by at most one."""
    if p.is_empty():
        return 0
    return max(0, 2 * p.parts[0] - p.weight, 2 * p.length - p.weight)


def _expand_chunk(chunk: list[Parts], container: Parts) -> list[tuple[Parts, list]]:
    return [(state, successor_parts(state, container)) for state in chunk]


def _chunks(states: list[Parts], count: int) -> list[list[Parts]]:
    size = max(1, -(-len(states) // count))
    return [states[i:i + size] for i in range(0, len(states), size)]


def difficulty(
    p: Partition,
    config: EngineConfig | None = None,
    workers: int | None = None,
) -> DifficultyResult:
    """Exact delta(P) by a dynamic program over the sub-partitions of P.

    Every linked step raises the weight by 1 or 2, so sweeping weight layers
    in increasing order settles each state before it is expanded. Ties
    between optimal predecessors go to the lexicographically smallest one.

    Args:
        p: Target partition
        config: Engine limits and defaults (default: EngineConfig())
        workers: Worker processes per weight layer; overrides config.workers

    Returns:
        DifficultyResult with delta, a certificate of that cost and search stats

    Raises:
        ResourceError: If |P| exceeds config.weight_limit
    """
    config = config or EngineConfig()
    workers = workers or config.workers
    if p.weight > config.weight_limit:
        raise ResourceError(f"|P| = {p.weight} exceeds the engine limit {config.weight_limit}")

    started = time.perf_counter()
    target = p.parts
    dist: dict[Parts, int] = {(): 0}
    back: dict[Parts, tuple[Parts, Progression, int]] = {}
    layers: dict[int, set[Parts]] = {0: {()}}
    explored = 0

    executor = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for w in range(p.weight + 1):
            layer = sorted(layers.pop(w, ()))
            if not layer:
                continue
            if executor is not None and len(layer) > workers:
                futures = [executor.submit(_expand_chunk, chunk, target) for chunk in _chunks(layer, workers)]
                expansions = [item for future in futures for item in future.result()]
            else:
                expansions = _expand_chunk(layer, target)

            for state, successors in expansions:
                base = dist[state]
                for upper, lam, k, _ in successors:
                    candidate = base + (1 if k == 1 else 0)
                    current = dist.get(upper)
                    if (
                        current is None
                        or candidate < current
                        or (candidate == current and state < back[upper][0])
                    ):
                        dist[upper] = candidate
                        back[upper] = (state, lam, k)
                        layers.setdefault(w + k, set()).add(upper)
            explored += len(layer)
            for state in layer:
                if state != target:
                    del dist[state]
            logger.debug("layer %d: %d states", w, len(layer))
    finally:
        if executor is not None:
            executor.shutdown()

    steps = []
    state = target
    while state:
        pred, lam, k = back[state]
        steps.append(Step(Partition(state), lam, k))
        state = pred
    certificate = ValidSequence(tuple(reversed(steps)))
    elapsed = time.perf_counter() - started
    logger.info("delta(%s) = %d (%d states, %.2fs)", p, dist[target], explored, elapsed)
    return DifficultyResult(
        target=p,
        delta=dist[target],
        certificate=certificate,
        explored=explored,
        elapsed=elapsed,
        stats={"explored": explored, "elapsed": elapsed, "workers": workers},
    )


def linked_by_definition(q: Parts) -> list[tuple[Parts, Progression, int]]:
    """Every partition 1- or 2-linked above q, found by trying one
    progression per trace on a window holding all diagonals that matter."""
    top = q[0] if q else 0
    window = range(-len(q) - 1, top + 2)
    weight = sum(q)
    found: dict[Parts, tuple[Progression, int]] = {}
    for lam, _ in relevant_progressions(window):
        upper = up_parts(q, lam)
        k = sum(upper) - weight
        if k in (1, 2) and upper not in found and down_parts(upper, lam) == q:
            found[upper] = (lam, k)
    return [(upper, lam, k) for upper, (lam, k) in sorted(found.items())]


def difficulty_oracle(p: Partition, config: EngineConfig | None = None) -> int:
    """Minimum cost over all valid sequences to P by depth-first enumeration.

    Independent of difficulty(): linkage is decided straight from the
    definition and paths are enumerated rather than relaxed layer by layer.
    """
    config = config or EngineConfig()
    if p.weight > config.oracle_limit:
        raise ResourceError(f"|P| = {p.weight} exceeds the oracle limit {config.oracle_limit}")
    target = p.parts
    best = p.weight
    successors: dict[Parts, list] = {}

    def inside(q: Parts) -> bool:
        return len(q) <= len(target) and all(x <= target[i] for i, x in enumerate(q))

    def walk(q: Parts, cost: int):
        nonlocal best
        if cost >= best and q != target:
            return
        if q == target:
            best = min(best, cost)
            return
        if q not in successors:
            successors[q] = [item for item in linked_by_definition(q) if inside(item[0])]
        for upper, _, k in successors[q]:
            walk(upper, cost + (1 if k == 1 else 0))

    if not target:
        return 0
    walk((), 0)
    return best


def verify_sequence(seq: ValidSequence, target: Partition | None = None) -> int:
    """Re-check every step of seq and return its number of 1-linked steps.

    Raises NotLinked, WrongWeightJump or WrongEndpoint.
    """
    prev: Parts = ()
    cost = 0
    for index, step in enumerate(seq.steps):
        upper = step.partition.parts
        if up_parts(prev, step.lam) != upper or down_parts(upper, step.lam) != prev:
            raise NotLinked(index, f"step {index}: {Partition(prev)} -> {step.partition} not linked by {step.lam}")
        jump = sum(upper) - sum(prev)
        if jump not in (1, 2) or jump != step.k:
            raise WrongWeightJump(index, f"step {index}: weight jump {jump}, recorded k={step.k}")
        cost += jump == 1
        prev = upper
    if target is not None and prev != target.parts:
        raise WrongEndpoint(f"sequence ends at {Partition(prev)}, expected {target}")
    return cost


def conjugate_sequence(seq: ValidSequence) -> ValidSequence:
    """Transpose every partition and negate every progression.

    Displacement commutes with conjugation once the progression is negated,
    so the result is a valid sequence to the conjugate target with the same cost.
    """
    return ValidSequence(tuple(
        Step(conjugate(step.partition), step.lam.negate(), step.k) for step in seq.steps
    ))
