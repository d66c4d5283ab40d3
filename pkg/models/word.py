# models/word.py
"""Letters and words over the alphabet A_n ∪ A_n⁻¹ ∪ {0}, plus single-character symbols for the example monoids."""

from enum import Enum
from dataclasses import dataclass
from typing import Iterator, Tuple

from models.errors import WordSyntaxError


class LetterKind(Enum):
    POSITIVE = "p"
    NEGATIVE = "q"
    ZERO = "0"
    SYMBOL = "s"


_KIND_ORDER = {
    LetterKind.POSITIVE: 0,
    LetterKind.NEGATIVE: 1,
    LetterKind.SYMBOL: 2,
    LetterKind.ZERO: 3,
}


@dataclass(frozen=True)
class Letter:
    """A generator p_i, its inverse p_i⁻¹, the zero symbol, or a named symbol."""
    kind: LetterKind
    index: int = 0       # generator index, 1-based; unused for ZERO/SYMBOL
    name: str = ""       # symbol name; unused otherwise

    @staticmethod
    def positive(i: int) -> 'Letter':
        return Letter(LetterKind.POSITIVE, i)

    @staticmethod
    def negative(i: int) -> 'Letter':
        return Letter(LetterKind.NEGATIVE, i)

    @staticmethod
    def zero() -> 'Letter':
        return ZERO

    @staticmethod
    def symbol(name: str) -> 'Letter':
        return Letter(LetterKind.SYMBOL, 0, name)

    @property
    def is_zero(self) -> bool:
        return self.kind is LetterKind.ZERO

    @property
    def is_generator(self) -> bool:
        return self.kind in (LetterKind.POSITIVE, LetterKind.NEGATIVE)

    @property
    def sort_key(self) -> Tuple[int, int, str]:
        """Order used by every enumeration: p_1 < … < p_n < q_1 < … < q_n < symbols < 0."""
        return (_KIND_ORDER[self.kind], self.index, self.name)

    def inverse(self) -> 'Letter':
        if self.kind is LetterKind.POSITIVE:
            return Letter(LetterKind.NEGATIVE, self.index)
        if self.kind is LetterKind.NEGATIVE:
            return Letter(LetterKind.POSITIVE, self.index)
        raise WordSyntaxError(f"letter {self} has no inverse")

    def __str__(self) -> str:
        if self.kind is LetterKind.ZERO:
            return "0"
        if self.kind is LetterKind.SYMBOL:
            return self.name
        return f"{self.kind.value}{self.index}"


ZERO = Letter(LetterKind.ZERO)


@dataclass(frozen=True)
class Word:
    """
    Finite sequence of letters with the ambient rank n.

    Rank 0 marks a word over a symbol alphabet (the example monoids);
    generator letters are then rejected.
    """
    letters: Tuple[Letter, ...] = ()
    rank: int = 0

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        for letter in letters:
            if letter.is_generator and not 1 <= letter.index <= self.rank:
                raise WordSyntaxError(
                    f"letter {letter} outside rank {self.rank}"
                )

    @staticmethod
    def empty(rank: int = 0) -> 'Word':
        return Word((), rank)

    @property
    def is_empty(self) -> bool:
        return not self.letters

    @property
    def has_zero(self) -> bool:
        return any(letter.is_zero for letter in self.letters)

    @property
    def sort_key(self) -> Tuple:
        """Length first, then letterwise."""
        return (len(self.letters), tuple(letter.sort_key for letter in self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.letters[item], self.rank)
        return self.letters[item]

    def __add__(self, other: 'Word') -> 'Word':
        return Word(self.letters + other.letters, max(self.rank, other.rank))

    def __str__(self) -> str:
        from core.words import format_word
        return format_word(self)


# Positive words are kept as plain tuples of generator indices.
PositiveWord = Tuple[int, ...]
