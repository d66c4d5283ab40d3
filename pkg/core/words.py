# core/words.py
"""Inversion, letter counting, prefix comparison and the token syntax for words."""

import re
from typing import Optional, Sequence

from models.errors import WordSyntaxError
from models.word import Letter, LetterKind, Word, ZERO

_GENERATOR_TOKEN = re.compile(r"^([pq])(\d+)$")

EMPTY_TOKEN = "e"


def invert_word(w: Word) -> Word:
    """
    Formal inverse: (xw)⁻¹ = w⁻¹x⁻¹ and 1⁻¹ = 1.

    Raises:
        WordSyntaxError: if w contains the zero letter or a symbol
    """
    if w.has_zero:
        raise WordSyntaxError("cannot invert a word containing 0")
    return Word(tuple(letter.inverse() for letter in reversed(w.letters)), w.rank)


def count_letter(w: Word, x: Letter) -> int:
    """|w|_x, the number of occurrences of x in w."""
    return sum(1 for letter in w.letters if letter == x)


def is_prefix_comparable(u: Sequence, v: Sequence) -> bool:
    """True iff u is a prefix of v or v is a prefix of u."""
    n = min(len(u), len(v))
    return tuple(u[:n]) == tuple(v[:n])


def is_prefix(u: Sequence, v: Sequence) -> bool:
    """True iff u is a prefix of v."""
    return len(u) <= len(v) and tuple(v[:len(u)]) == tuple(u)


def parse_word(text: str, rank: int = 0, alphabet: Optional[Sequence[str]] = None) -> Word:
    """
    Read a word in token syntax.

    Generator mode (no alphabet): whitespace separated tokens "p<i>", "q<i>", "0",
    or the single token "e" for the empty word.
    Symbol mode (alphabet given): every non-blank character is a symbol of the
    alphabet or "0"; "e" alone is the empty word unless e is itself a symbol.

    Args:
        text: Word text
        rank: Ambient rank n (generator mode)
        alphabet: Symbol names (symbol mode)

    Returns:
        Parsed Word
    """
    stripped = text.strip()
    shorthand = alphabet is None or EMPTY_TOKEN not in alphabet
    if not stripped or (stripped == EMPTY_TOKEN and shorthand):
        return Word.empty(rank if alphabet is None else 0)

    if alphabet is not None:
        return _parse_symbols(stripped, alphabet)

    letters = []
    for token in stripped.split():
        if token == "0":
            letters.append(ZERO)
            continue
        match = _GENERATOR_TOKEN.match(token)
        if not match:
            raise WordSyntaxError(f"unknown token {token!r}")
        index = int(match.group(2))
        if not 1 <= index <= rank:
            raise WordSyntaxError(f"token {token!r} outside rank {rank}")
        if match.group(1) == "p":
            letters.append(Letter.positive(index))
        else:
            letters.append(Letter.negative(index))
    return Word(tuple(letters), rank)


def _parse_symbols(text: str, alphabet: Sequence[str]) -> Word:
    letters = []
    known = set(alphabet)
    for char in text:
        if char.isspace():
            continue
        if char == "0":
            letters.append(ZERO)
        elif char in known:
            letters.append(Letter.symbol(char))
        else:
            raise WordSyntaxError(
                f"symbol {char!r} not in alphabet {''.join(alphabet)!r}"
            )
    return Word(tuple(letters), 0)


def format_word(w: Word) -> str:
    """Canonical text: "e" when empty, compact for words over symbols (rank 0), space separated otherwise."""
    if w.is_empty:
        return EMPTY_TOKEN
    if w.rank == 0 and all(letter.kind in (LetterKind.SYMBOL, LetterKind.ZERO) for letter in w.letters):
        return "".join(str(letter) for letter in w.letters)
    return " ".join(str(letter) for letter in w.letters)


def looks_like_generator_text(text: str) -> bool:
    """True when every token is a generator token, "0" or "e"."""
    tokens = text.split()
    return bool(tokens) and all(
        token in ("0", EMPTY_TOKEN) or _GENERATOR_TOKEN.match(token) for token in tokens
    )
