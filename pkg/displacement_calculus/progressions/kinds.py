"""The three concrete progression shapes."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import DomainError
from .base import Progression


@dataclass(frozen=True)
class Empty(Progression):
    """The empty progression; displacement along it changes nothing."""

    def contains(self, n: int) -> bool:
        return False

    def negate(self) -> "Empty":
        return self

    def shift(self, t: int) -> "Empty":
        return self

    def reflect(self, c: int) -> "Empty":
        return self

    def to_text(self) -> str:
        return "empty"

    @property
    def rank_key(self) -> tuple[int, int, int]:
        return (2, 0, 0)


@dataclass(frozen=True)
class Singleton(Progression):
    """The one-element progression {m}."""
    m: int

    def contains(self, n: int) -> bool:
        return n == self.m

    def negate(self) -> "Singleton":
        return Singleton(-self.m)

    def shift(self, t: int) -> "Singleton":
        return Singleton(self.m + t)

    def reflect(self, c: int) -> "Singleton":
        return Singleton(c - self.m)

    def to_text(self) -> str:
        return f"{{{self.m}}}"

    @property
    def rank_key(self) -> tuple[int, int, int]:
        return (1, 0, self.m)


@dataclass(frozen=True)
class Residue(Progression):
    """The class {n : n = rep mod modulus}, modulus >= 2, rep stored reduced."""
    rep: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise DomainError(f"residue modulus must be >= 2, got {self.modulus}")
        object.__setattr__(self, "rep", self.rep % self.modulus)

    def contains(self, n: int) -> bool:
        return (n - self.rep) % self.modulus == 0

    def negate(self) -> "Residue":
        return Residue(-self.rep, self.modulus)

    def shift(self, t: int) -> "Residue":
        return Residue(self.rep + t, self.modulus)

    def reflect(self, c: int) -> "Residue":
        return Residue(c - self.rep, self.modulus)

    def to_text(self) -> str:
        return f"{self.rep} mod {self.modulus}"

    @property
    def rank_key(self) -> tuple[int, int, int]:
        return (0, self.modulus, self.rep)


EMPTY = Empty()
