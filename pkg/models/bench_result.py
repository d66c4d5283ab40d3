# models/bench_result.py
"""Data model for benchmark results."""
from datetime import datetime
from typing import Dict, List, Optional
from dataclasses import dataclass, field

OPERATIONS = ("reduce", "conj_p", "conj_c")


@dataclass
class BenchRow:
    """Median timings (seconds) for one word length."""
    length: int
    medians: Dict[str, float]
    ratios: Dict[str, Optional[float]] = field(default_factory=dict)   # vs previous row

    def to_dict(self) -> dict:
        return {"length": self.length, "medians": self.medians, "ratios": self.ratios}


@dataclass
class BenchReport:
    """Result of a benchmark run."""
    rank: int
    trials: int
    seed: int
    rows: List[BenchRow] = field(default_factory=list)
    exponents: Dict[str, Optional[float]] = field(default_factory=dict)
    generated_at: datetime = field(default_factory=datetime.now)
    total_seconds: float = 0.0

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "trials": self.trials,
            "seed": self.seed,
            "rows": [row.to_dict() for row in self.rows],
            "exponents": self.exponents,
            "generated_at": self.generated_at.isoformat(timespec="seconds"),
            "total_seconds": round(self.total_seconds, 3),
        }

    def summary(self) -> str:
        """Human-readable timing table."""
        header = f"{'length':>10} " + " ".join(f"{op:>12}" for op in OPERATIONS)
        lines = [f"Benchmark (rank {self.rank}, {self.trials} trials, seed {self.seed}):", header]
        for row in self.rows:
            cells = " ".join(f"{row.medians[op] * 1000:>10.2f}ms" for op in OPERATIONS)
            lines.append(f"{row.length:>10} {cells}")
        for row in self.rows[1:]:
            ratios = " ".join(
                f"{op}={row.ratios[op]:.2f}" if row.ratios.get(op) else f"{op}=n/a"
                for op in OPERATIONS
            )
            lines.append(f"  ratio at {row.length}: {ratios}")
        if self.exponents:
            fitted = " ".join(
                f"{op}={value:.2f}" if value is not None else f"{op}=n/a"
                for op, value in self.exponents.items()
            )
            lines.append(f"  fitted exponent: {fitted}")
        lines.append(f"  Time: {self.total_seconds:.2f}s")
        return "\n".join(lines)
