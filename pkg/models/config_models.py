# models/config_models.py
"""Data models for configuration settings."""

from typing import List, Optional
from dataclasses import dataclass, field


@dataclass
class EngineConfig:
    """Rewriting and P_n defaults."""
    default_rank: int = 2


@dataclass
class OracleConfig:
    """Bounded search settings."""
    bound: Optional[int] = None         # None: |a| + |b|
    probe_bound: int = 4                # multipliers tried by pp_member_definitional
    congruence_depth: int = 6           # bounded_equal on incomplete systems
    o_search_bound: int = 4


@dataclass
class BenchConfig:
    """Linear-time benchmark schedule."""
    rank: int = 2
    lengths: List[int] = field(default_factory=lambda: [10_000, 20_000, 40_000])
    trials: int = 3
    seed: int = 0


@dataclass
class OutputConfig:
    """Output configuration."""
    json: bool = False


@dataclass
class Config:
    """Main configuration container."""
    engine: EngineConfig = field(default_factory=EngineConfig)
    oracle: OracleConfig = field(default_factory=OracleConfig)
    bench: BenchConfig = field(default_factory=BenchConfig)
    output: OutputConfig = field(default_factory=OutputConfig)

    # Logging
    log_level: str = "WARNING"
    verbose: bool = False
