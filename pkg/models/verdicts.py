# models/verdicts.py
"""Results returned by the conjugacy deciders and the bounded oracles."""

from enum import Enum
from dataclasses import dataclass, field
from typing import Any, List, Optional, Tuple


@dataclass(frozen=True)
class ConjVerdict:
    """
    Decider answer. `witness` is the conjugator pair when one is known:
    (u, v) with a = uv, b = vu for ∼p; (g, h) with ag = gb, bh = ha otherwise.
    `via` is the middle element c of a chain a ∼p c ∼p b.
    """
    related: bool
    witness: Optional[Tuple[Any, Any]] = None
    via: Optional[Any] = None

    def __bool__(self) -> bool:
        return self.related

    def to_dict(self) -> dict:
        return {
            "verdict": "YES" if self.related else "NO",
            "witness": [str(w) for w in self.witness] if self.witness else None,
            "via": str(self.via) if self.via is not None else None,
        }


class OracleVerdict(Enum):
    YES = "YES"
    NO_AT_BOUND = "NO_AT_BOUND"


@dataclass(frozen=True)
class OracleResult:
    """Outcome of a bounded search; `explored` counts candidate witnesses tried."""
    verdict: OracleVerdict
    witness: Optional[Tuple[Any, Any]] = None
    explored: int = 0

    @property
    def found(self) -> bool:
        return self.verdict is OracleVerdict.YES

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "witness": [str(w) for w in self.witness] if self.witness else None,
            "explored": self.explored,
        }


class MembershipVerdict(Enum):
    TRUE_AT_BOUND = "TRUE_AT_BOUND"
    FALSE = "FALSE"


@dataclass(frozen=True)
class MembershipResult:
    """Definitional check of g ∈ 𝒫(a); on FALSE `counterexample` is a failing m."""
    verdict: MembershipVerdict
    counterexample: Optional[Any] = None


@dataclass
class SweepResult:
    """Outcome of an exhaustive property check; `violations` holds readable counterexamples."""
    name: str
    checked: int = 0
    violations: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "checked": self.checked,
            "violations": self.violations[:20],
            "violation_count": len(self.violations),
            "passed": self.passed,
        }
