# models/rewrite_system.py
"""Data models for finite string-rewriting systems."""

from enum import Enum
from functools import cached_property
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from models.errors import PreconditionError, WordSyntaxError
from models.word import Letter, Word, ZERO


@dataclass(frozen=True)
class Rule:
    """Oriented rule lhs → rhs."""
    lhs: Word
    rhs: Word

    def __post_init__(self):
        if self.lhs.is_empty:
            raise PreconditionError("rule left-hand side must be non-empty")

    def __str__(self) -> str:
        return f"{self.lhs} -> {self.rhs}"


@dataclass(frozen=True)
class SystemClass:
    """Classification flags of a rewriting system."""
    special: bool
    monadic: bool
    length_reducing: bool

    def to_dict(self) -> dict:
        return {
            "special": self.special,
            "monadic": self.monadic,
            "length_reducing": self.length_reducing,
        }


@dataclass(frozen=True)
class CriticalPair:
    """An overlap of two left-hand sides and its two one-step descendants."""
    overlap: Word
    left: Word           # overlap rewritten with first_rule
    right: Word          # overlap rewritten with second_rule
    first_rule: Rule
    second_rule: Rule

    def __str__(self) -> str:
        return f"{self.overlap}: ({self.left}, {self.right})"


class Equality(Enum):
    EQUAL = "EQUAL"
    DISTINCT = "DISTINCT"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class RewriteSystem:
    """
    Finite rewriting system over either the generators of rank `rank`
    (with their inverses) or a list of single-character symbols.

    The alphabet optionally contains the zero symbol. `family` records the
    preset the system came from ("pn", "example22", ...) or "custom".
    """
    rules: Tuple[Rule, ...]
    rank: int = 0
    symbols: Tuple[str, ...] = ()
    has_zero: bool = False
    name: str = "custom"
    family: str = "custom"
    params: Tuple[Tuple[str, int], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        object.__setattr__(self, "symbols", tuple(self.symbols))
        allowed = set(self.alphabet)
        for rule in self.rules:
            for letter in rule.lhs.letters + rule.rhs.letters:
                if letter not in allowed:
                    raise WordSyntaxError(
                        f"rule {rule} uses {letter}, not in the alphabet of {self.name}"
                    )

    @property
    def alphabet(self) -> List[Letter]:
        """Letters of the system in enumeration order."""
        letters = [Letter.positive(i) for i in range(1, self.rank + 1)]
        letters += [Letter.negative(i) for i in range(1, self.rank + 1)]
        letters += [Letter.symbol(s) for s in self.symbols]
        if self.has_zero:
            letters.append(ZERO)
        return letters

    @property
    def is_symbolic(self) -> bool:
        return self.rank == 0

    def param(self, key: str) -> Optional[int]:
        return dict(self.params).get(key)

    def word(self, letters) -> Word:
        """Wrap letters as a Word of this system's rank."""
        return Word(tuple(letters), self.rank)

    @cached_property
    def lhs_index(self) -> Dict[int, Dict[Tuple[Letter, ...], Tuple[Letter, ...]]]:
        """lhs length → {lhs letters → rhs letters}; the first rule wins on repeated lhs."""
        index: Dict[int, Dict[Tuple[Letter, ...], Tuple[Letter, ...]]] = {}
        for rule in self.rules:
            bucket = index.setdefault(len(rule.lhs), {})
            bucket.setdefault(rule.lhs.letters, rule.rhs.letters)
        return index

    @cached_property
    def lhs_lengths(self) -> Tuple[int, ...]:
        """Distinct lhs lengths, longest first."""
        return tuple(sorted(self.lhs_index, reverse=True))

    def __str__(self) -> str:
        return f"{self.name} ({len(self.rules)} rules)"
