"""Base class for arithmetic progressions."""

from __future__ import annotations

from abc import ABC, abstractmethod


class Progression(ABC):
    """A proper subset of Z whose difference set is closed under addition.

    Only three shapes are modelled: the empty set, a singleton and a full
    residue class modulo d >= 2.
    """

    @abstractmethod
    def contains(self, n: int) -> bool:
        """Membership test, O(1)."""
        pass

    @abstractmethod
    def negate(self) -> "Progression":
        """{-n : n in self}."""
        pass

    @abstractmethod
    def shift(self, t: int) -> "Progression":
        """{n + t : n in self}."""
        pass

    @abstractmethod
    def reflect(self, c: int) -> "Progression":
        """{c - n : n in self}."""
        pass

    @abstractmethod
    def to_text(self) -> str:
        """Textual form: 'empty', '{m}' or 'rep mod d'."""
        pass

    @property
    @abstractmethod
    def rank_key(self) -> tuple[int, int, int]:
        """Ordering used for witness tie-breaks: residues by (modulus, rep) first,
        then singletons, then the empty progression."""
        pass

    def __contains__(self, n: int) -> bool:
        return self.contains(n)

    def __str__(self) -> str:
        return self.to_text()

    def trace(self, window) -> frozenset[int]:
        """The finite set self ∩ window."""
        return frozenset(n for n in window if self.contains(n))
