"""Partitions, corners, conjugation and the partition/vanishing-sequence bijection."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DomainError


MAX_WEIGHT = 10_000
MAX_PARTS = 1_000


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers.

    Rows are indexed from 0. Out of range reads follow the usual convention:
    P_k = 0 past the last part, and P_{-1} is treated as infinite.
    """
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if len(parts) > MAX_PARTS:
            raise DomainError(f"too many parts ({len(parts)} > {MAX_PARTS})")
        for i, p in enumerate(parts):
            if not isinstance(p, int) or isinstance(p, bool) or p <= 0:
                raise DomainError(f"part {i} must be a positive integer, got {p!r}")
            if i and p > parts[i - 1]:
                raise DomainError(f"parts must be weakly decreasing: {parts}")
        if sum(parts) > MAX_WEIGHT:
            raise DomainError(f"weight exceeds {MAX_WEIGHT}")

    @property
    def weight(self) -> int:
        """Number of boxes in the Young diagram."""
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of nonzero parts."""
        return len(self.parts)

    def part(self, i: int) -> int:
        """P_i with P_i = 0 past the last row (negative rows are not allowed)."""
        if i < 0:
            raise DomainError("negative row index")
        return self.parts[i] if i < len(self.parts) else 0

    def is_empty(self) -> bool:
        return not self.parts

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        from .parser import parse_partition

        return parse_partition(text)

    def to_text(self) -> str:
        """Canonical encoding: '8,7,1,1,1', or '0' for the empty partition."""
        return ",".join(str(p) for p in self.parts) if self.parts else "0"

    def __str__(self) -> str:
        return self.to_text()

    def __contains__(self, other: "Partition") -> bool:
        return contains(self, other)


EMPTY = Partition()


@dataclass(frozen=True)
class CornerSet:
    """Addable and removable corners as (row index, diagonal value) pairs.

    Addable diagonal values are P_i - i; removable ones are P_i - i - 1.
    Both lists are ordered by row, so their diagonal values strictly decrease.
    """
    addable: tuple[tuple[int, int], ...]
    removable: tuple[tuple[int, int], ...]

    @property
    def addable_diagonals(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.addable)

    @property
    def removable_diagonals(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.removable)


@dataclass(frozen=True)
class VanishingSequence:
    """Strictly increasing nonnegative integers a_0 < a_1 < ... < a_r."""
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise DomainError("a vanishing sequence has at least one entry")
        if entries[0] < 0:
            raise DomainError(f"vanishing orders are nonnegative: {entries}")
        for prev, cur in zip(entries, entries[1:]):
            if cur <= prev:
                raise DomainError(f"vanishing sequence must strictly increase: {entries}")

    @property
    def r(self) -> int:
        return len(self.entries) - 1

    @property
    def ramification(self) -> tuple[int, ...]:
        """Ramification values alpha_i = a_i - i."""
        return tuple(a - i for i, a in enumerate(self.entries))

    @property
    def weight(self) -> int:
        return sum(self.ramification)

    def to_text(self) -> str:
        return ",".join(str(a) for a in self.entries)

    def __str__(self) -> str:
        return self.to_text()

    def __len__(self) -> int:
        return len(self.entries)


def normalize(values: Iterable[int]) -> Partition:
    """Sort into weakly decreasing order and strip zeros."""
    values = list(values)
    for v in values:
        if not isinstance(v, int) or v < 0:
            raise DomainError(f"partition entries must be nonnegative integers, got {v!r}")
    return Partition(tuple(sorted((v for v in values if v > 0), reverse=True)))


def conjugate_parts(parts: tuple[int, ...]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > n) for n in range(parts[0]))


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram: P*_n = #{m : P_m > n}."""
    return Partition(conjugate_parts(p.parts))


def corner_lists(parts: tuple[int, ...]) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Addable and removable (row, diagonal) pairs of a raw parts tuple.

    Row len(parts) is the first all-zero row and is always addable.
    """
    n = len(parts)
    addable = []
    removable = []
    for i in range(n + 1):
        p = parts[i] if i < n else 0
        above = parts[i - 1] if i > 0 else None
        if above is None or above > p:
            addable.append((i, p - i))
        below = parts[i + 1] if i + 1 < n else 0
        if p > 0 and below < p:
            removable.append((i, p - i - 1))
    return addable, removable


def corners(p: Partition) -> CornerSet:
    """All addable and removable corners of P with their diagonal values."""
    addable, removable = corner_lists(p.parts)
    return CornerSet(addable=tuple(addable), removable=tuple(removable))


def contains(outer: Partition, inner: Partition) -> bool:
    """True iff inner fits inside outer componentwise."""
    if inner.length > outer.length:
        return False
    return all(q <= outer.parts[i] for i, q in enumerate(inner.parts))


def to_vanishing(p: Partition, r: int) -> VanishingSequence:
    """a_i = i + P_{r-i}; needs r + 1 >= number of parts."""
    if r < 0 or r + 1 < p.length:
        raise DomainError(f"r={r} too small for a partition with {p.length} parts")
    return VanishingSequence(tuple(i + p.part(r - i) for i in range(r + 1)))


def from_vanishing(a: VanishingSequence) -> tuple[Partition, int]:
    """Inverse of to_vanishing: returns (P, r) with P_{r-i} = a_i - i."""
    r = a.r
    values = [a.entries[r - j] - (r - j) for j in range(r + 1)]
    return normalize(values), r


def iter_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Every partition of n with parts at most max_part, in decreasing lexicographic order."""
    if n < 0:
        raise DomainError("cannot partition a negative number")

    def build(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in build(remaining - first, first):
                yield (first,) + rest

    for parts in build(n, n if max_part is None else max_part):
        yield Partition(parts)
