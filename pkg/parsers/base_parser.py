# parsers/base_parser.py
"""Base parser interface for rewriting-system descriptions."""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import List, Optional

from models.rewrite_system import RewriteSystem


class BaseParser(ABC):
    """
    Abstract base class for rewriting-system readers.

    Each text format implements parse_text; reading from disk is shared.
    """
    def __init__(self, default_rank: Optional[int] = None):
        self.default_rank = default_rank

    @abstractmethod
    def parse_text(self, text: str, name: str = "custom") -> RewriteSystem:
        """
        Parse a complete description.

        Args:
            text: File contents
            name: Name given to the resulting system

        Returns:
            RewriteSystem
        """
        pass

    def parse_file(self, file_path: str) -> RewriteSystem:
        """Parse a file; the system is named after the file stem."""
        path = Path(file_path)
        text = path.read_text(encoding="utf-8")
        return self.parse_text(text, name=path.stem)

    @property
    @abstractmethod
    def supported_extensions(self) -> List[str]:
        """Return list of file extensions this parser handles."""
        pass
