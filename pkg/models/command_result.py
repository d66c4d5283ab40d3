# models/command_result.py
"""Data model for the outcome of one CLI command."""
from typing import Any, Dict, List, Optional
from dataclasses import dataclass, field


@dataclass
class CommandResult:
    """
    What a command computed. `verdict` is YES / NO / NO_AT_BOUND for the
    deciding commands and None otherwise; `details` carries command-specific data.
    """
    command: str
    verdict: Optional[str] = None
    witness: Optional[List[str]] = None
    normal_forms: List[str] = field(default_factory=list)
    timings: Dict[str, float] = field(default_factory=dict)
    details: Dict[str, Any] = field(default_factory=dict)
    lines: List[str] = field(default_factory=list)      # text-mode body
    exit_code: int = 0

    def to_dict(self) -> dict:
        data: Dict[str, Any] = {
            "command": self.command,
            "verdict": self.verdict,
            "normal_forms": self.normal_forms,
            "timings": self.timings,
        }
        if self.witness is not None:
            data["witness"] = self.witness
        if self.details:
            data["details"] = self.details
        return data
