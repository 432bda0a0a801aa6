"""Upward/downward displacement and linked pairs of partitions."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .errors import DomainError
from .partition import Partition, VanishingSequence, contains, corner_lists
from .progressions import Progression, Residue, Singleton

Direction = Literal["up", "down"]


@dataclass(frozen=True)
class LinkWitness:
    """Why Q and Q' are linked: up(Q, lam) = Q' and down(Q', lam) = Q."""
    k: int
    lam: Progression
    added_rows: tuple[int, ...]


@lru_cache(maxsize=4096)
def divisors_from_two(n: int) -> tuple[int, ...]:
    """Divisors d >= 2 of n > 0, ascending."""
    return tuple(d for d in range(2, n + 1) if n % d == 0)


def _strip(values: list[int]) -> tuple[int, ...]:
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


def up_parts(parts: tuple[int, ...], lam: Progression) -> tuple[int, ...]:
    """Upward displacement on a raw parts tuple."""
    addable, _ = corner_lists(parts)
    values = list(parts) + [0]
    for i, v in addable:
        if lam.contains(v):
            values[i] += 1
    return _strip(values)


def down_parts(parts: tuple[int, ...], lam: Progression) -> tuple[int, ...]:
    """Downward displacement on a raw parts tuple."""
    _, removable = corner_lists(parts)
    values = list(parts)
    for i, v in removable:
        if lam.contains(v):
            values[i] -= 1
    return _strip(values)


def displace(p: Partition, lam: Progression, direction: Direction) -> Partition:
    """Turn every corner met by lam outward ('up') or inward ('down')."""
    if direction == "up":
        return Partition(up_parts(p.parts, lam))
    if direction == "down":
        return Partition(down_parts(p.parts, lam))
    raise DomainError(f"direction must be 'up' or 'down', got {direction!r}")


def seq_displace(a: VanishingSequence, lam: Progression, direction: Direction) -> VanishingSequence:
    """Entrywise displacement of a vanishing sequence.

    Up raises a_i when a_i + 1 is in lam and a_{i+1} > a_i + 1 (a_{r+1} = inf).
    Down lowers a_i when a_i is in lam and a_{i-1} < a_i - 1; the entry below
    a_0 is read as -1, so vanishing orders never drop below zero.
    """
    e = a.entries
    n = len(e)
    if direction == "up":
        out = [
            x + 1 if lam.contains(x + 1) and (i + 1 == n or e[i + 1] > x + 1) else x
            for i, x in enumerate(e)
        ]
    elif direction == "down":
        out = [
            x - 1 if lam.contains(x) and (e[i - 1] if i else -1) < x - 1 else x
            for i, x in enumerate(e)
        ]
    else:
        raise DomainError(f"direction must be 'up' or 'down', got {direction!r}")
    return VanishingSequence(tuple(out))


def _is_link(lower: tuple[int, ...], upper: tuple[int, ...], lam: Progression) -> bool:
    return up_parts(lower, lam) == upper and down_parts(upper, lam) == lower


def linkage(q: Partition, q2: Partition) -> LinkWitness | None:
    """Canonical witness that q and q2 are 1- or 2-linked, else None.

    k = 1 is witnessed by the singleton at the added box's diagonal. For
    k = 2 the two added diagonals v1 > v2 must both lie in a residue class
    whose modulus divides v1 - v2; the smallest working modulus is reported.
    """
    k = q2.weight - q.weight
    if k not in (1, 2) or not contains(q2, q):
        return None
    addable = dict(corner_lists(q.parts)[0])
    added = []
    for i, value in enumerate(q2.parts):
        diff = value - q.part(i)
        if diff == 0:
            continue
        if diff != 1 or i not in addable:
            return None
        added.append(i)
    if k == 1:
        lam = Singleton(addable[added[0]])
        if _is_link(q.parts, q2.parts, lam):
            return LinkWitness(1, lam, tuple(added))
        return None
    v1, v2 = addable[added[0]], addable[added[1]]
    for d in divisors_from_two(v1 - v2):
        lam = Residue(v1, d)
        if _is_link(q.parts, q2.parts, lam):
            return LinkWitness(2, lam, tuple(added))
    return None


def successor_parts(
    parts: tuple[int, ...],
    container: tuple[int, ...],
) -> list[tuple[tuple[int, ...], Progression, int, tuple[int, ...]]]:
    """Raw-tuple core of linked_successors: (parts', lam, k, added_rows) sorted by parts'."""
    addable, _ = corner_lists(parts)
    n = len(parts)
    inside = [
        (i, v) for i, v in addable
        if i < len(container) and (parts[i] if i < n else 0) + 1 <= container[i]
    ]
    found = []
    for i, v in inside:
        values = list(parts) + [0]
        values[i] += 1
        found.append((_strip(values), Singleton(v), 1, (i,)))

    for a in range(len(inside)):
        i1, v1 = inside[a]
        for b in range(a + 1, len(inside)):
            i2, v2 = inside[b]
            for d in divisors_from_two(v1 - v2):
                # the class must meet no other addable corner, in or out of the container
                if any((v - v1) % d == 0 for i, v in addable if i != i1 and i != i2):
                    continue
                lam = Residue(v1, d)
                values = list(parts) + [0]
                values[i1] += 1
                values[i2] += 1
                upper = _strip(values)
                if down_parts(upper, lam) == parts:
                    found.append((upper, lam, 2, (i1, i2)))
                    break
    found.sort(key=lambda item: item[0])
    return found


def linked_successors(q: Partition, container: Partition) -> list[tuple[Partition, LinkWitness]]:
    """Every Q' inside container that is 1- or 2-linked from q, sorted by Q'."""
    if not contains(container, q):
        raise DomainError(f"{q} is not contained in {container}")
    return [
        (Partition(upper), LinkWitness(k, lam, added))
        for upper, lam, k, added in successor_parts(q.parts, container.parts)
    ]
