# core/rewriting.py
"""
Generic finite string rewriting: classification, one-step and full reduction,
critical pairs, local confluence, zero adjunction and a bounded search of the
Thue congruence.
"""

from collections import deque
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from models.errors import (
    AlphabetError, IncompleteSystemError, NotLengthReducingError, PreconditionError,
)
from models.rewrite_system import CriticalPair, Equality, RewriteSystem, Rule, SystemClass
from models.word import Letter, Word, ZERO

import logging
logger = logging.getLogger(__name__)

# Hard cap on the number of words visited by bounded_equal.
MAX_SEARCH_STATES = 200_000


@lru_cache(maxsize=256)
def classify(system: RewriteSystem) -> SystemClass:
    """
    Special: every rule is (x, 1). Monadic: |rhs| ≤ 1 and |lhs| > |rhs|.
    Length reducing: |lhs| > |rhs| for every rule.
    """
    rules = system.rules
    return SystemClass(
        special=all(rule.rhs.is_empty for rule in rules),
        monadic=all(len(rule.rhs) <= 1 and len(rule.lhs) > len(rule.rhs) for rule in rules),
        length_reducing=all(len(rule.lhs) > len(rule.rhs) for rule in rules),
    )


def reduce_step(system: RewriteSystem, w: Word) -> Optional[Word]:
    """
    Rewrite the leftmost redex, preferring the longest lhs at that position.

    Returns:
        The rewritten word, or None when w is irreducible
    """
    letters = w.letters
    index = system.lhs_index
    for pos in range(len(letters)):
        for length in system.lhs_lengths:
            if pos + length > len(letters):
                continue
            rhs = index[length].get(letters[pos:pos + length])
            if rhs is not None:
                return Word(letters[:pos] + rhs + letters[pos + length:], w.rank)
    return None


def normalize(system: RewriteSystem, w: Word) -> Word:
    """
    Irreducible descendant of w.

    Single left-to-right pass over w keeping the irreducible prefix in a buffer;
    after each appended letter only suffixes of the buffer can be redexes. Right-hand
    sides are fed back as input, so monadic systems run in time linear in |w|.

    Raises:
        NotLengthReducingError: termination is not guaranteed for the system
    """
    if not classify(system).length_reducing:
        raise NotLengthReducingError(
            f"{system.name} is not length reducing; use bounded_equal instead"
        )

    index = system.lhs_index
    lengths = system.lhs_lengths
    buffer: List[Letter] = []
    pending = list(reversed(w.letters))

    while pending:
        buffer.append(pending.pop())
        size = len(buffer)
        for length in lengths:
            if length > size:
                continue
            rhs = index[length].get(tuple(buffer[size - length:]))
            if rhs is not None:
                del buffer[size - length:]
                pending.extend(reversed(rhs))
                break

    return Word(tuple(buffer), w.rank)


def critical_pairs(system: RewriteSystem) -> List[CriticalPair]:
    """
    All overlaps of left-hand sides with both one-step descendants.

    Two kinds are enumerated for every ordered pair of rules (R1, R2):
    a proper suffix of lhs1 equal to a proper prefix of lhs2, and lhs2 occurring
    inside lhs1. A rule is not paired with itself at offset 0; two rules with the
    same lhs are paired once.
    """
    pairs: List[CriticalPair] = []
    rules = system.rules

    for i, first in enumerate(rules):
        l1, r1 = first.lhs.letters, first.rhs.letters
        for j, second in enumerate(rules):
            l2, r2 = second.lhs.letters, second.rhs.letters

            # suffix of l1 == prefix of l2
            for k in range(1, min(len(l1), len(l2))):
                if l1[-k:] == l2[:k]:
                    overlap = l1 + l2[k:]
                    pairs.append(CriticalPair(
                        overlap=system.word(overlap),
                        left=system.word(r1 + l2[k:]),
                        right=system.word(l1[:-k] + r2),
                        first_rule=first,
                        second_rule=second,
                    ))

            # l2 inside l1
            if len(l2) > len(l1):
                continue
            for pos in range(len(l1) - len(l2) + 1):
                if l1[pos:pos + len(l2)] != l2:
                    continue
                if i == j:
                    continue
                if len(l1) == len(l2) and j < i:
                    continue
                pairs.append(CriticalPair(
                    overlap=system.word(l1),
                    left=system.word(r1),
                    right=system.word(l1[:pos] + r2 + l1[pos + len(l2):]),
                    first_rule=first,
                    second_rule=second,
                ))

    logger.debug(f"{system.name}: {len(pairs)} critical pairs")
    return pairs


def is_locally_confluent(system: RewriteSystem) -> bool:
    """True iff every critical pair is joinable (both sides share a normal form)."""
    for pair in critical_pairs(system):
        if normalize(system, pair.left) != normalize(system, pair.right):
            logger.info(f"{system.name}: critical pair {pair} does not resolve")
            return False
    return True


@lru_cache(maxsize=256)
def is_complete(system: RewriteSystem) -> bool:
    """Length reducing (hence noetherian) and locally confluent, hence complete."""
    if not classify(system).length_reducing:
        return False
    return is_locally_confluent(system)


def require_complete(system: RewriteSystem):
    if not is_complete(system):
        raise IncompleteSystemError(f"{system.name} is not certified complete")


def adjoin_zero(system: RewriteSystem) -> RewriteSystem:
    """
    Add the zero symbol with rules x0 → 0, 0x → 0 (x in the alphabet) and 00 → 0.

    Raises:
        AlphabetError: if the alphabet already contains 0
    """
    if system.has_zero:
        raise AlphabetError(f"{system.name} already contains the zero symbol")

    zero = system.word((ZERO,))
    letters = system.alphabet
    zero_rules = [Rule(system.word((x, ZERO)), zero) for x in letters]
    zero_rules += [Rule(system.word((ZERO, x)), zero) for x in letters]
    zero_rules.append(Rule(system.word((ZERO, ZERO)), zero))

    return RewriteSystem(
        rules=system.rules + tuple(zero_rules),
        rank=system.rank,
        symbols=system.symbols,
        has_zero=True,
        name=f"{system.name}-zero",
        family=system.family,
        params=system.params,
    )


def congruence_distance(
    system: RewriteSystem, u: Word, v: Word, depth: int
) -> Optional[int]:
    """
    Fewest rule applications (either direction) linking u and v, if at most depth.

    Breadth-first search; gives up (None) beyond depth or MAX_SEARCH_STATES words.
    """
    start, goal = u.letters, v.letters
    if start == goal:
        return 0

    seen = {start}
    frontier = deque([(start, 0)])
    while frontier:
        current, dist = frontier.popleft()
        if dist >= depth:
            continue
        for neighbour in _thue_neighbours(system, current):
            if neighbour == goal:
                return dist + 1
            if neighbour not in seen:
                if len(seen) >= MAX_SEARCH_STATES:
                    logger.warning(f"congruence search stopped after {len(seen)} words")
                    return None
                seen.add(neighbour)
                frontier.append((neighbour, dist + 1))
    return None


def _thue_neighbours(system: RewriteSystem, letters: Tuple[Letter, ...]):
    for rule in system.rules:
        for source, target in ((rule.lhs.letters, rule.rhs.letters),
                               (rule.rhs.letters, rule.lhs.letters)):
            width = len(source)
            for pos in range(len(letters) - width + 1):
                if letters[pos:pos + width] == source:
                    yield letters[:pos] + target + letters[pos + width:]


def bounded_equal(system: RewriteSystem, u: Word, v: Word, depth: int) -> Equality:
    """
    Three-valued word problem.

    EQUAL when a chain of at most `depth` rule applications links u and v.
    Otherwise, on a certified complete system the normal forms decide
    (EQUAL or DISTINCT); on any other system the answer is UNKNOWN.
    """
    if depth < 0:
        raise PreconditionError("depth must be non-negative")

    if congruence_distance(system, u, v, depth) is not None:
        return Equality.EQUAL

    if is_complete(system):
        if normalize(system, u) == normalize(system, v):
            return Equality.EQUAL
        return Equality.DISTINCT

    return Equality.UNKNOWN


def describe(system: RewriteSystem) -> Dict:
    """Classification plus completeness summary, as plain data."""
    flags = classify(system)
    summary = {"name": system.name, "rules": [str(rule) for rule in system.rules]}
    summary.update(flags.to_dict())
    summary["critical_pairs"] = len(critical_pairs(system))
    # local confluence needs normalize, so only for length-reducing systems
    summary["locally_confluent"] = is_locally_confluent(system) if flags.length_reducing else None
    return summary


def _has_suffix_redex(system: RewriteSystem, letters: Tuple[Letter, ...]) -> bool:
    index = system.lhs_index
    size = len(letters)
    return any(
        length <= size and letters[size - length:] in index[length]
        for length in system.lhs_lengths
    )


def irreducible_words(system: RewriteSystem, max_length: int) -> List[List[Word]]:
    """
    Irreducible words grouped by length (index = length), each group in
    lexicographic order of the alphabet.

    Grown letter by letter: a word with an irreducible prefix is irreducible
    unless one of its suffixes is a left-hand side.
    """
    letters = sorted(system.alphabet, key=lambda letter: letter.sort_key)
    levels: List[List[Tuple[Letter, ...]]] = [[()]]
    for _ in range(max_length):
        levels.append([
            word + (letter,)
            for word in levels[-1]
            for letter in letters
            if not _has_suffix_redex(system, word + (letter,))
        ])
    return [[system.word(word) for word in level] for level in levels]


def all_words(system: RewriteSystem, max_length: int) -> List[List[Word]]:
    """Every word over the alphabet grouped by length, lexicographically."""
    letters = sorted(system.alphabet, key=lambda letter: letter.sort_key)
    levels: List[List[Tuple[Letter, ...]]] = [[()]]
    for _ in range(max_length):
        levels.append([word + (letter,) for word in levels[-1] for letter in letters])
    return [[system.word(word) for word in level] for level in levels]


def congruent(system: RewriteSystem, u: Word, v: Word, depth: int) -> bool:
    """
    u = v in the monoid presented by system, as far as can be certified:
    normal forms on a complete system, otherwise a chain of at most depth steps.
    """
    if is_complete(system):
        return normalize(system, u) == normalize(system, v)
    return congruence_distance(system, u, v, depth) is not None
