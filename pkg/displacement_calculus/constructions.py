"""Explicit valid sequences for primitive partitions and box partitions."""

from __future__ import annotations

import logging

from .config import EngineConfig
from .displacement import displace, linkage
from .engine import Step, ValidSequence, difficulty, verify_sequence
from .errors import ConstructionBug, PreconditionError, VerificationError, WouldBeAllIntegers
from .partition import Partition, conjugate, normalize
from .progressions import Residue, Singleton, ap_generated_by

logger = logging.getLogger(__name__)


def _row_steps(start: Partition, row: int, stop: int) -> list[Step]:
    """Singleton steps growing one row of start until it has stop boxes."""
    steps = []
    values = list(start.parts) + [0] * (row + 1 - start.length)
    while values[row] < stop:
        diagonal = values[row] - row
        values[row] += 1
        steps.append(Step(normalize(values), Singleton(diagonal), 1))
    return steps


def is_primitive_partition(p: Partition) -> bool:
    """Both hypotheses of the primitive formula: P_0 - P*_0 >= 2 P_1 - 2 and |P| <= 2 P_0 - 2."""
    if p.is_empty():
        return False
    return (
        p.parts[0] - conjugate(p).part(0) >= 2 * p.part(1) - 2
        and p.weight <= 2 * p.parts[0] - 2
    )


def primitive_construction(p: Partition) -> ValidSequence:
    """A valid sequence to P of cost exactly 2 P_0 - |P|.

    Works downward: while P_1 > 0, take the last row k with P_k = P_1, turn
    in the corners of rows 0 and k along the progression generated by
    P_0 - 1 and P_k - k - 1, and recurse on the result. A single row is
    built box by box.
    """
    if not is_primitive_partition(p):
        raise PreconditionError(f"{p} does not satisfy P_0 - P*_0 >= 2 P_1 - 2 and |P| <= 2 P_0 - 2")

    descending = []
    current = p
    while current.part(1) > 0:
        k = max(i for i, value in enumerate(current.parts) if value == current.parts[1])
        try:
            lam = ap_generated_by(current.parts[0] - 1, current.parts[k] - k - 1)
        except WouldBeAllIntegers as e:
            raise ConstructionBug(f"degenerate progression at {current}: {e}")
        lower = displace(current, lam, "down")
        witness = linkage(lower, current)
        if (
            witness is None
            or witness.k != 2
            or displace(lower, lam, "up") != current
        ):
            raise ConstructionBug(f"{lower} -> {current} is not 2-linked by {lam}")
        descending.append(Step(current, lam, 2))
        current = lower

    steps = _row_steps(Partition(), 0, current.part(0)) + list(reversed(descending))
    sequence = ValidSequence(tuple(steps))
    expected = 2 * p.parts[0] - p.weight
    try:
        cost = verify_sequence(sequence, p)
    except VerificationError as e:
        raise ConstructionBug(f"primitive construction for {p} failed verification: {e}")
    if cost != expected:
        raise ConstructionBug(f"primitive construction for {p} costs {cost}, expected {expected}")
    return sequence


def _staircase(a: int, k: int, i: int) -> Partition:
    """P_{k,i} = (a^k, i + a/2, i)."""
    return normalize([a] * k + [i + a // 2, i])


def _even_box_steps(a: int, b: int) -> list[Step]:
    half = a // 2
    steps = _row_steps(Partition(), 0, half)
    for k in range(b - 1):
        for i in range(1, half + 1):
            lower = _staircase(a, k, i - 1)
            upper = _staircase(a, k, i)
            lam = Residue(i - k - 2, half + 1)
            if displace(lower, lam, "up") == upper and displace(upper, lam, "down") == lower:
                steps.append(Step(upper, lam, 2))
                continue
            # repair with two single boxes, lower row first
            logger.debug("box (%d^%d): step k=%d i=%d repaired", a, b, k, i)
            middle = normalize([a] * k + [i - 1 + half, i])
            steps.append(Step(middle, Singleton(i - k - 2), 1))
            steps.append(Step(upper, Singleton(i - 1 + half - k), 1))
    last = steps[-1].partition
    steps.extend(_row_steps(last, b - 1, a))
    return steps


def box_construction(a: int, b: int) -> ValidSequence:
    """A valid sequence to (a^b) of cost at most a + 3b - 5 (a + 2b - 4 for even a).

    Even a climbs through the staircases (a^k, i + a/2, i) with 2-linked
    steps along i - k - 2 mod (a/2 + 1), patching any step whose progression
    also catches the end of the first row. Odd a builds ((a-1)^b) and then
    adds the last column.
    """
    if a < 2 or b < 2:
        raise PreconditionError(f"box construction needs a, b >= 2, got a={a}, b={b}")

    if a % 2 == 0:
        steps = _even_box_steps(a, b)
        bound = a + 2 * b - 4
    else:
        steps = _even_box_steps(a - 1, b)
        for j in range(1, b + 1):
            steps.append(Step(normalize([a] * j + [a - 1] * (b - j)), Singleton(a - j), 1))
        bound = a + 3 * b - 5

    sequence = ValidSequence(tuple(steps))
    target = Partition((a,) * b)
    try:
        cost = verify_sequence(sequence, target)
    except VerificationError as e:
        raise ConstructionBug(f"box construction for ({a}^{b}) failed verification: {e}")
    if cost > bound:
        raise ConstructionBug(f"box construction for ({a}^{b}) costs {cost} > {bound}")
    return sequence


def komeda_partition(m: int) -> Partition:
    """((2m-1) m m), the partitions left over by the primitive induction."""
    if m < 1:
        raise PreconditionError(f"m must be >= 1, got {m}")
    return Partition((2 * m - 1, m, m))


def komeda_probe(m_max: int, config: EngineConfig | None = None) -> list[dict]:
    """Engine difficulty of ((2m-1) m m) for 2 <= m <= m_max.

    Reports whether (|P| + delta) / 2 reaches the genus P_0; a report,
    not a claim.
    """
    rows = []
    for m in range(2, m_max + 1):
        p = komeda_partition(m)
        result = difficulty(p, config=config)
        threshold = (p.weight + result.delta) // 2
        rows.append({
            "m": m,
            "partition": p.to_text(),
            "delta": result.delta,
            "threshold": threshold,
            "genus": p.parts[0],
            "covered": threshold <= p.parts[0],
        })
    return rows
