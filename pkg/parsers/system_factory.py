# parsers/system_factory.py
"""Registry of named presets and rule files, resolved to ZooMonoid targets."""

import re
from pathlib import Path
from typing import Callable, Dict, Optional

from analysis.polycyclic import pn_system
from analysis.zoo import (
    make_cyclic_group, make_example22, make_example22_zero, make_one_relator_power,
    make_tin1, trivial_group,
)
from models.errors import UnknownPresetError
from models.rewrite_system import RewriteSystem
from models.zoo_monoid import ZooMonoid
from parsers.base_parser import BaseParser
from parsers.rule_parser import RuleFileParser

import logging
logger = logging.getLogger(__name__)

_PARAMETRISED = re.compile(r"^(?P<family>[a-z0-9]+(?:-[a-z]+)?)-(?P<value>\d+)$")

PresetBuilder = Callable[..., ZooMonoid]


def _pn(rank: Optional[int] = None, **_) -> ZooMonoid:
    system = pn_system(rank if rank is not None else 2)
    return ZooMonoid(name=system.name, system=system, provenance="polycyclic monoid")


def _onerel(k: Optional[int] = None, **_) -> ZooMonoid:
    if k is None:
        raise UnknownPresetError("onerel needs k (use onerel-<k> or --k)")
    return make_one_relator_power(k)


def _base_group(base: Optional[str]) -> RewriteSystem:
    if base in (None, "trivial"):
        return trivial_group()
    match = re.match(r"^cyclic-(\d+)$", base)
    if match:
        return make_cyclic_group(int(match.group(1)))
    raise UnknownPresetError(f"unknown base group {base!r}; use trivial or cyclic-<m>")


def _tin1(base: Optional[str] = None, **_) -> ZooMonoid:
    return make_tin1(_base_group(base))


class SystemFactory:
    """
    Resolve preset names or rule files.

    Usage:
        factory = SystemFactory()
        target = factory.get("onerel-3")
        target = factory.from_file("my.rules")
    """

    # Registry of presets by family name
    _presets: Dict[str, PresetBuilder] = {
        "pn": _pn,
        "example22": lambda **_: make_example22(),
        "example22-zero": lambda **_: make_example22_zero(),
        "onerel": _onerel,
        "tin1": _tin1,
    }

    def __init__(self, parser: Optional[BaseParser] = None):
        self.parser = parser or RuleFileParser()

    def get(self, name: str, rank: Optional[int] = None, k: Optional[int] = None,
            base: Optional[str] = None) -> ZooMonoid:
        """
        Build a preset.

        Args:
            name: Preset name, optionally with a trailing parameter
                  (onerel-3, tin1-trivial, tin1-cyclic-4)
            rank: Rank for pn
            k: Exponent for onerel
            base: Base group for tin1 (trivial or cyclic-<m>)
        """
        family = name
        if name.startswith("tin1-"):
            family, base = "tin1", name[len("tin1-"):]
        else:
            match = _PARAMETRISED.match(name)
            if match and match.group("family") in self._presets:
                family = match.group("family")
                value = int(match.group("value"))
                if family == "pn":
                    rank = value
                else:
                    k = value

        builder = self._presets.get(family)
        if builder is None:
            raise UnknownPresetError(
                f"unknown preset {name!r}; available: {', '.join(self.available)}"
            )
        logger.debug(f"building preset {family} (rank={rank}, k={k}, base={base})")
        return builder(rank=rank, k=k, base=base)

    def from_file(self, file_path: str) -> ZooMonoid:
        """Wrap a rule file as a monoid without specialised deciders."""
        if Path(file_path).suffix.lower() not in self.parser.supported_extensions:
            logger.warning(f"{file_path}: unexpected extension, parsing as a rule file")
        system = self.parser.parse_file(file_path)
        return ZooMonoid(name=system.name, system=system, provenance=f"rule file {file_path}")

    @classmethod
    def register_preset(cls, family: str, builder: PresetBuilder):
        """Register a new preset family."""
        cls._presets[family] = builder

    @property
    def available(self) -> list:
        """List all preset families."""
        return list(self._presets.keys())
