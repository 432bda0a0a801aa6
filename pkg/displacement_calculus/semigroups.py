"""Numerical semigroups and their dictionary with partitions."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Iterable

from .config import DEFAULT_SEMIGROUP_GENUS_LIMIT
from .errors import DomainError, InfiniteGaps, NotASemigroup, ResourceError
from .partition import Partition, conjugate


def _closure_violation(gaps: frozenset[int]) -> tuple[int, int] | None:
    """A pair of members whose sum is a gap, or None if the complement is closed."""
    if not gaps:
        return None
    top = max(gaps)
    members = [n for n in range(1, top) if n not in gaps]
    for i, x in enumerate(members):
        for y in members[i:]:
            if x + y > top:
                break
            if x + y in gaps:
                return x, y
    return None


@dataclass(frozen=True)
class NumericalSemigroup:
    """A cofinite additively closed subset of Z>=0, stored by its gaps."""
    gaps: frozenset[int]

    def __post_init__(self):
        gaps = frozenset(self.gaps)
        object.__setattr__(self, "gaps", gaps)
        if any(not isinstance(x, int) or x <= 0 for x in gaps):
            raise DomainError(f"gaps must be positive integers: {sorted(gaps)}")
        violation = _closure_violation(gaps)
        if violation is not None:
            x, y = violation
            raise NotASemigroup(f"{x} + {y} = {x + y} is a gap")

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def frobenius(self) -> int:
        """Largest gap, -1 when there are none."""
        return max(self.gaps, default=-1)

    @property
    def conductor(self) -> int:
        """Every integer from here on belongs to S."""
        return self.frobenius + 1

    def __contains__(self, n: int) -> bool:
        return n >= 0 and n not in self.gaps

    def elements(self, count: int) -> list[int]:
        """The first count elements s_0 = 0 < s_1 < ..."""
        out = []
        n = 0
        while len(out) < count:
            if n not in self.gaps:
                out.append(n)
            n += 1
        return out

    @property
    def multiplicity(self) -> int:
        """Smallest positive element s_1."""
        return self.elements(2)[1]

    def to_text(self) -> str:
        return "gaps:" + ",".join(str(x) for x in sorted(self.gaps))

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class SemigroupStats:
    genus: int
    weight: int
    primitive: bool


@dataclass(frozen=True)
class TwistedSequence:
    """A cofinite increasing sequence s_0 < s_1 < ...: the listed prefix,
    then every integer from threshold on."""
    prefix: tuple[int, ...]
    threshold: int
    is_semigroup: bool

    def __contains__(self, n: int) -> bool:
        return n >= self.threshold or n in self.prefix

    def elements(self, up_to: int) -> list[int]:
        return [n for n in range(up_to + 1) if n in self]

    def to_text(self) -> str:
        head = ",".join(str(s) for s in self.prefix)
        tail = f"{self.threshold},{self.threshold + 1},..."
        return f"{{{head},{tail}}}" if head else f"{{{tail}}}"


@dataclass(frozen=True)
class ImprimitivityWitness:
    """A gap f > 2 s_1 and the shift k = f - 2 s_1 that breaks closure of S^k."""
    f: int
    k: int
    member: int
    doubled: int
    verified: bool


def semigroup_from_generators(generators: Iterable[int]) -> NumericalSemigroup:
    gens = sorted(set(generators))
    if not gens or any(g <= 0 for g in gens):
        raise DomainError(f"generators must be positive integers: {gens}")
    if reduce(gcd, gens) != 1:
        raise InfiniteGaps(f"generators {gens} share the factor {reduce(gcd, gens)}")
    smallest = gens[0]
    member = [True]
    gaps = []
    run = 1
    n = 0
    # once `smallest` consecutive integers are members, all larger ones are too
    while run < smallest:
        n += 1
        inside = any(n >= g and member[n - g] for g in gens)
        member.append(inside)
        if inside:
            run += 1
        else:
            run = 0
            gaps.append(n)
    return NumericalSemigroup(frozenset(gaps))


def semigroup_from(source: Iterable[int], kind: str = "gens") -> NumericalSemigroup:
    """Build a semigroup from generators (kind='gens') or from its gap set (kind='gaps')."""
    if kind == "gens":
        return semigroup_from_generators(source)
    if kind == "gaps":
        return NumericalSemigroup(frozenset(source))
    raise DomainError(f"kind must be 'gens' or 'gaps', got {kind!r}")


def semigroup_stats(s: NumericalSemigroup) -> SemigroupStats:
    """Genus, weight (sum of gaps minus g(g+1)/2) and primitivity (2 s_1 > every gap)."""
    g = s.genus
    return SemigroupStats(
        genus=g,
        weight=sum(s.gaps) - g * (g + 1) // 2,
        primitive=2 * s.multiplicity > s.frobenius,
    )


def semigroup_to_partition(s: NumericalSemigroup) -> Partition:
    """P_n = (g + n) - s_n, up to the first zero."""
    g = s.genus
    values = []
    for n, element in enumerate(s.elements(g + 1)):
        value = g + n - element
        if value <= 0:
            break
        values.append(value)
    return Partition(tuple(values))


def partition_to_sequence(p: Partition, g: int | None = None) -> TwistedSequence:
    """s_n = (g + n) - P_n; g defaults to P_0 and must be at least P_0."""
    top = p.part(0)
    g = top if g is None else g
    if g < top:
        raise DomainError(f"g = {g} is smaller than P_0 = {top}")
    prefix = tuple(g + n - p.parts[n] for n in range(p.length))
    threshold = g + p.length
    members = set(prefix)
    if prefix:
        # sums reaching the threshold are always members
        closed = prefix[0] == 0 and all(
            x + y >= threshold or x + y in members for x in prefix for y in prefix
        )
    else:
        closed = g == 0
    return TwistedSequence(prefix=prefix, threshold=threshold, is_semigroup=closed)


def imprimitivity_witness(s: NumericalSemigroup) -> ImprimitivityWitness | None:
    """Smallest gap f > 2 s_1 with k = f - 2 s_1, or None when S is primitive.

    In S^k = {0, s_1 + k, s_2 + k, ...} the element s_1 + k is present but
    2 (s_1 + k) = f + k is not.
    """
    s1 = s.multiplicity
    candidates = sorted(f for f in s.gaps if f > 2 * s1)
    if not candidates:
        return None
    f = candidates[0]
    k = f - 2 * s1
    shifted = {0} | {x + k for x in s.elements(s.genus + 2)[1:]}
    member = s1 + k
    doubled = 2 * member
    # past the listed prefix S^k contains every integer >= conductor + k
    doubled_in = doubled in shifted or doubled >= s.conductor + k
    return ImprimitivityWitness(
        f=f, k=k, member=member, doubled=doubled,
        verified=member in shifted and not doubled_in,
    )


def enumerate_semigroups(genus: int, limit: int = DEFAULT_SEMIGROUP_GENUS_LIMIT) -> list[NumericalSemigroup]:
    """Every numerical semigroup of the given genus, sorted by gap tuple.

    Brute force: 1 is always a gap, the other g - 1 gaps lie in [2, 2g - 1].
    """
    if genus < 0:
        raise DomainError("genus must be nonnegative")
    if genus > limit:
        raise ResourceError(f"genus {genus} exceeds the enumeration limit {limit}")
    if genus == 0:
        return [NumericalSemigroup(frozenset())]
    found = []
    for rest in combinations(range(2, 2 * genus), genus - 1):
        gaps = frozenset((1,) + rest)
        if _closure_violation(gaps) is None:
            found.append(NumericalSemigroup(gaps))
    return found


def ordinary_semigroup(g: int) -> NumericalSemigroup:
    """{0, g+1, g+2, ...}."""
    return NumericalSemigroup(frozenset(range(1, g + 1)))


def partition_is_primitive(p: Partition) -> bool:
    """P_0 - P*_0 >= 2 P_1 - 2, the partition form of primitivity."""
    if p.is_empty():
        return True
    return p.parts[0] - conjugate(p).part(0) >= 2 * p.part(1) - 2


__all__ = [
    "NumericalSemigroup",
    "SemigroupStats",
    "TwistedSequence",
    "ImprimitivityWitness",
    "semigroup_from",
    "semigroup_from_generators",
    "semigroup_stats",
    "semigroup_to_partition",
    "partition_to_sequence",
    "imprimitivity_witness",
    "enumerate_semigroups",
    "ordinary_semigroup",
    "partition_is_primitive",
]
