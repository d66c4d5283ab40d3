# models/element.py
"""Canonical elements of the polycyclic monoid P_n."""

from dataclasses import dataclass
from typing import Tuple

from models.word import PositiveWord


def _format_positive(indices: PositiveWord, letter: str) -> str:
    return " ".join(f"{letter}{i}" for i in indices)


@dataclass(frozen=True)
class PnElement:
    """
    Zero, or the nonzero element y·x⁻¹ with y, x positive words.

    Equality is componentwise (unique irreducible representative).
    """
    rank: int
    y: PositiveWord = ()
    x: PositiveWord = ()
    is_zero: bool = False

    @staticmethod
    def zero(rank: int) -> 'PnElement':
        return PnElement(rank, (), (), True)

    @staticmethod
    def of(rank: int, y=(), x=()) -> 'PnElement':
        return PnElement(rank, tuple(y), tuple(x), False)

    @staticmethod
    def one(rank: int) -> 'PnElement':
        return PnElement(rank)

    @property
    def is_positive(self) -> bool:
        """Nonzero with empty x-component (an element of A_n*)."""
        return not self.is_zero and not self.x

    @property
    def is_negative(self) -> bool:
        """Nonzero with empty y-component (an element of (A_n⁻¹)*)."""
        return not self.is_zero and not self.y

    @property
    def is_one(self) -> bool:
        return not self.is_zero and not self.y and not self.x

    @property
    def length(self) -> int:
        """Length of the irreducible word; the zero word "0" has length 1."""
        return 1 if self.is_zero else len(self.y) + len(self.x)

    @property
    def sort_key(self) -> Tuple:
        # same order as Word.sort_key on the irreducible word: p < q < 0
        if self.is_zero:
            return (1, ((3, 0),))
        letters = tuple((0, i) for i in self.y) + tuple((1, i) for i in reversed(self.x))
        return (self.length, letters)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        if self.y:
            parts.append(_format_positive(self.y, "p"))
        if self.x:
            parts.append(_format_positive(tuple(reversed(self.x)), "q"))
        return " ".join(parts) if parts else "e"


@dataclass(frozen=True)
class CyclicDecomposition:
    """a = r·core·r⁻¹ with core cyclically reduced."""
    r: PositiveWord
    core: PnElement

    def __str__(self) -> str:
        r = _format_positive(self.r, "p") or "e"
        return f"r = {r}, core = {self.core}"
