# parsers/rule_parser.py
"""
Rule-file reader.

Format, one item per line:

    # comment
    rank: 2            generator alphabet p1..pn, q1..qn
    alphabet: abc      single-character symbols
    name: my-system
    adjoin-zero        add 0 with x0 -> 0, 0x -> 0, 00 -> 0
    LHS -> RHS         words in token syntax; "e" is the empty word

Without a rank or alphabet directive the alphabet is inferred: generator
tokens select generator mode (rank from the largest index unless a default
rank is given), anything else is read as symbols.
"""

import re
from typing import List, Optional, Tuple

from core.rewriting import adjoin_zero
from core.words import EMPTY_TOKEN, looks_like_generator_text, parse_word
from models.errors import WordSyntaxError
from models.rewrite_system import RewriteSystem, Rule
from parsers.base_parser import BaseParser

import logging
logger = logging.getLogger(__name__)

_ARROW = "->"
_DIRECTIVE = re.compile(r"^(rank|alphabet|name)\s*:\s*(.*)$")
_GENERATOR_INDEX = re.compile(r"[pq](\d+)")


class RuleFileParser(BaseParser):
    """Reads the line-oriented rule format described in the module docstring."""

    def parse_text(self, text: str, name: str = "custom") -> RewriteSystem:
        rank: Optional[int] = None
        alphabet: Optional[str] = None
        with_zero = False
        raw_rules: List[Tuple[int, str, str]] = []

        for number, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if line == "adjoin-zero":
                with_zero = True
                continue

            directive = _DIRECTIVE.match(line)
            if directive:
                key, value = directive.group(1), directive.group(2).strip()
                if key == "rank":
                    if not value.isdigit():
                        raise WordSyntaxError(f"line {number}: rank must be a number, got {value!r}")
                    rank = int(value)
                elif key == "alphabet":
                    alphabet = "".join(value.split())
                else:
                    name = value
                continue

            if _ARROW not in line:
                raise WordSyntaxError(f"line {number}: expected 'LHS -> RHS', got {line!r}")
            lhs, rhs = (side.strip() for side in line.split(_ARROW, 1))
            raw_rules.append((number, lhs, rhs))

        if rank is None and alphabet is None:
            rank, alphabet = self._infer_alphabet(raw_rules)

        has_zero = any("0" in side.split() or (alphabet is not None and "0" in side)
                       for _, lhs, rhs in raw_rules for side in (lhs, rhs))
        rules = []
        for number, lhs, rhs in raw_rules:
            try:
                rules.append(Rule(self._word(lhs, rank, alphabet), self._word(rhs, rank, alphabet)))
            except WordSyntaxError as e:
                raise WordSyntaxError(f"line {number}: {e}") from e

        system = RewriteSystem(
            rules=tuple(rules),
            rank=rank or 0,
            symbols=tuple(alphabet) if alphabet is not None else (),
            has_zero=has_zero,
            name=name,
        )
        if with_zero:
            system = adjoin_zero(system)
        logger.info(f"parsed {system.name}: {len(system.rules)} rules")
        return system

    def _word(self, text: str, rank: Optional[int], alphabet: Optional[str]):
        if alphabet is not None:
            return parse_word(text, alphabet=alphabet)
        return parse_word(text, rank=rank or 0)

    def _infer_alphabet(self, raw_rules) -> Tuple[Optional[int], Optional[str]]:
        sides = [side for _, lhs, rhs in raw_rules for side in (lhs, rhs)]
        if sides and all(side == EMPTY_TOKEN or looks_like_generator_text(side) for side in sides):
            if self.default_rank is not None:
                return self.default_rank, None
            indices = [int(i) for side in sides for i in _GENERATOR_INDEX.findall(side)]
            return max(indices, default=0), None

        symbols = sorted({
            ch for side in sides if side != EMPTY_TOKEN
            for ch in side if not ch.isspace() and ch != "0"
        })
        return None, "".join(symbols)

    @property
    def supported_extensions(self) -> List[str]:
        return [".rules", ".srs", ".txt"]
