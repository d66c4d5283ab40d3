# models/zoo_monoid.py
"""Example monoids with their specialised deciders, and the separation report."""

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from models.rewrite_system import RewriteSystem
from models.verdicts import ConjVerdict
from models.word import Word

WordDecider = Callable[[Word, Word], ConjVerdict]


@dataclass
class ZooMonoid:
    """
    A finitely presented monoid from the example collection.

    `deciders` maps a relation name (p, c, o) to a decider on words; relations
    without an entry are only reachable through the bounded oracles.
    """
    name: str
    system: RewriteSystem
    deciders: Dict[str, WordDecider] = field(default_factory=dict)
    provenance: str = ""
    zero_adjoined: bool = False
    zero_variant: Optional['ZooMonoid'] = None

    def supports(self, relation: str) -> bool:
        return relation in self.deciders

    def summary(self) -> str:
        relations = ", ".join(sorted(self.deciders)) or "none"
        return (
            f"{self.name}: {len(self.system.rules)} rules over "
            f"{''.join(str(x) for x in self.system.alphabet)}; deciders: {relations}"
        )


@dataclass
class SeparationEntry:
    """One experiment: does `relation` hold between `left` and `right` in `monoid`."""
    monoid: str
    relation: str
    left: str
    right: str
    outcome: str                                  # YES, NO, NO_AT_BOUND
    witness: Optional[Tuple[str, str]] = None
    bound: Optional[int] = None
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "monoid": self.monoid,
            "relation": self.relation,
            "pair": [self.left, self.right],
            "outcome": self.outcome,
            "witness": list(self.witness) if self.witness else None,
            "bound": self.bound,
            "note": self.note,
        }


@dataclass
class SeparationReport:
    entries: List[SeparationEntry] = field(default_factory=list)
    separated: List[Tuple[str, str, str, str]] = field(default_factory=list)   # (rel1, rel2, left, right)
    zero_c_class: List[str] = field(default_factory=list)
    o_universal_checked: int = 0
    o_universal_holds: bool = True

    def find(self, monoid: str, relation: str, left: str, right: str) -> Optional[SeparationEntry]:
        for entry in self.entries:
            if (entry.monoid, entry.relation, entry.left, entry.right) == (monoid, relation, left, right):
                return entry
        return None

    def to_dict(self) -> dict:
        return {
            "entries": [entry.to_dict() for entry in self.entries],
            "separated": [
                {"relations": [r1, r2], "pair": [left, right]}
                for r1, r2, left, right in self.separated
            ],
            "zero_c_class": self.zero_c_class,
            "o_universal": {
                "checked_pairs": self.o_universal_checked,
                "holds": self.o_universal_holds,
            },
        }
