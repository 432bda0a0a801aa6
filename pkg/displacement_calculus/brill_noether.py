"""Brill-Noether arithmetic and expected-dimension formulas."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .config import EngineConfig
from .constructions import box_construction
from .engine import difficulty
from .errors import DomainError, PreconditionError
from .partition import Partition, VanishingSequence


@dataclass(frozen=True)
class BnRecord:
    g: int
    d: int
    r: int
    rho: int
    box: Partition
    expected_w_dim: int
    expected_codim: int
    in_theorem_range: bool

    def to_dict(self) -> dict:
        return {
            "g": self.g,
            "d": self.d,
            "r": self.r,
            "rho": self.rho,
            "box": self.box.to_text(),
            "expected_w_dim": self.expected_w_dim,
            "expected_codim": self.expected_codim,
            "in_theorem_range": self.in_theorem_range,
        }


@dataclass(frozen=True)
class TheoremChain:
    """The inequalities behind the main existence range for one (g, d, r).

    With a = g - d + r and b = r + 1 the range test is equivalent to
    2gb >= (ab + 3b - 6)(b + 1), which for b >= 3 gives 2g >= ab + a + 3b - 5.
    """
    g: int
    d: int
    r: int
    a: int
    b: int
    rho: int
    in_range: bool
    chain_holds: bool | None
    construction_cost: int
    genus_needed: int
    construction_suffices: bool

    def to_dict(self) -> dict:
        return {
            "g": self.g,
            "d": self.d,
            "r": self.r,
            "a": self.a,
            "b": self.b,
            "rho": self.rho,
            "in_range": self.in_range,
            "chain_holds": self.chain_holds,
            "construction_cost": self.construction_cost,
            "genus_needed": self.genus_needed,
            "construction_suffices": self.construction_suffices,
        }


def rho(g: int, d: int, r: int) -> int:
    """g - (r + 1)(g - d + r)."""
    return g - (r + 1) * (g - d + r)


def _in_range(g: int, d: int, r: int) -> bool:
    value = rho(g, d, r)
    # (r+2) rho >= -r g + (3r-3)(r+2), cross-multiplied
    return (
        r >= 1
        and g - d + r >= 2
        and value < 0
        and (r + 2) * value >= -r * g + (3 * r - 3) * (r + 2)
    )


def brill_noether(g: int, d: int, r: int) -> BnRecord:
    if g < 0 or r < 0:
        raise DomainError(f"g and r must be nonnegative, got g={g}, r={r}")
    a = g - d + r
    if a < 0:
        raise DomainError(f"g - d + r = {a} is negative")
    value = rho(g, d, r)
    box = Partition((a,) * (r + 1)) if a > 0 else Partition()
    return BnRecord(
        g=g, d=d, r=r,
        rho=value,
        box=box,
        expected_w_dim=3 * g - 3 + value,
        expected_codim=box.weight,
        in_theorem_range=_in_range(g, d, r),
    )


def genus_threshold(p: Partition, config: EngineConfig | None = None) -> int:
    """(|P| + delta(P)) / 2: the genus from which W_g(P) has a dimensionally proper point."""
    if p.is_empty():
        return 0
    return (p.weight + difficulty(p, config=config).delta) // 2


def node_compatibility(a1: VanishingSequence, a2: VanishingSequence, d: int) -> bool:
    """a1_i + a2_{r-i} = d for every i."""
    if len(a1) != len(a2):
        raise DomainError(f"vanishing sequences of different lengths: {a1} and {a2}")
    r = a1.r
    return all(a1.entries[i] + a2.entries[r - i] == d for i in range(r + 1))


def moduli_dimension(g: int, s: int) -> int:
    """dim M_{g,s}: 3g - 3 + s for g >= 2, s for g = 1, max(0, s - 3) for g = 0."""
    if g < 0 or s < 0:
        raise DomainError(f"g and s must be nonnegative, got g={g}, s={s}")
    if g >= 2:
        return 3 * g - 3 + s
    if g == 1:
        return s
    return max(0, s - 3)


def proper_dimension(
    g: int,
    s: int,
    d: int,
    r: int,
    ram: Sequence[VanishingSequence],
) -> int:
    """dim M_{g,s} + rho(g, d, r) minus the total ramification at the s marked points."""
    if len(ram) != s:
        raise DomainError(f"expected {s} vanishing sequences, got {len(ram)}")
    for a in ram:
        if a.r != r:
            raise DomainError(f"vanishing sequence {a} has {len(a)} entries, expected {r + 1}")
    return moduli_dimension(g, s) + rho(g, d, r) - sum(a.weight for a in ram)


def main_theorem_check(g: int, d: int, r: int) -> TheoremChain:
    """Check the main range against the genus the box construction needs."""
    a = g - d + r
    b = r + 1
    if a < 2 or b < 2:
        raise PreconditionError(f"need g - d + r >= 2 and r >= 1, got a={a}, b={b}")
    record = brill_noether(g, d, r)
    chain_holds = None
    if b >= 3:
        middle = 2 * g * b >= (a * b + 3 * b - 6) * (b + 1)
        final = 2 * g >= a * b + a + 3 * b - 5
        chain_holds = (middle or not record.in_theorem_range) and (final or not middle)
    cost = box_construction(a, b).cost
    genus_needed = (a * b + cost) // 2
    return TheoremChain(
        g=g, d=d, r=r, a=a, b=b,
        rho=record.rho,
        in_range=record.in_theorem_range,
        chain_holds=chain_holds,
        construction_cost=cost,
        genus_needed=genus_needed,
        construction_suffices=g >= genus_needed,
    )
