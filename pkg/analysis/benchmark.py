# analysis/benchmark.py
"""Empirical check that reduction and the p/c deciders run in linear time."""

import random
import time
from statistics import median
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from analysis.conjugacy import conj_c, conj_p
from analysis.polycyclic import check_rank, reduce
from core.words import invert_word
from models.bench_result import OPERATIONS, BenchReport, BenchRow
from models.errors import PreconditionError
from models.word import Letter, Word

import logging
logger = logging.getLogger(__name__)


def random_word(rng: random.Random, rank: int, length: int) -> Word:
    """Uniform word over p_1..p_n, q_1..q_n (no zero letter)."""
    letters = [Letter.positive(i) for i in range(1, rank + 1)]
    letters += [Letter.negative(i) for i in range(1, rank + 1)]
    return Word(tuple(rng.choice(letters) for _ in range(length)), rank)


def random_positive_word(rng: random.Random, rank: int, length: int) -> Word:
    return Word(tuple(Letter.positive(rng.randint(1, rank)) for _ in range(length)), rank)


def conjugate_pair(rng: random.Random, rank: int, length: int, negative: bool = False) -> Tuple[Word, Word]:
    """
    Two words of the given length whose cyclic cores are rotations of one
    random positive word t (of t⁻¹ when negative).

    Each word has the shape r·c⁻¹c·core·r⁻¹, so reduction cancels c⁻¹c and
    leaves the nonzero element r·core·r⁻¹. Both words are p-conjugate, and
    c-conjugate when negative.
    """
    if length < 4:
        raise PreconditionError("conjugate pairs need length >= 4")
    prefix_length, filler_length = length // 4, length // 8
    core_length = length - 2 * prefix_length - 2 * filler_length
    core = random_positive_word(rng, rank, core_length)
    shift = rng.randrange(core_length)
    rotated = core[shift:] + core[:shift]

    def shaped(t: Word) -> Word:
        r = random_positive_word(rng, rank, prefix_length)
        c = random_positive_word(rng, rank, filler_length)
        middle = invert_word(t) if negative else t
        return r + invert_word(c) + c + middle + invert_word(r)

    return shaped(core), shaped(rotated)


def _time(fn: Callable[[], object]) -> float:
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def fit_exponent(lengths: Sequence[int], timings: Sequence[float]) -> Optional[float]:
    """Slope of the least-squares line through (log n, log t); None if under two points."""
    points = [(n, t) for n, t in zip(lengths, timings) if n > 0 and t > 0]
    if len(points) < 2:
        return None
    x = np.log([n for n, _ in points])
    y = np.log([t for _, t in points])
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


def run_bench(rank: int, lengths: Sequence[int], trials: int, seed: int = 0) -> BenchReport:
    """
    Time reduce on uniform random words, and conj_p and conj_c on conjugate
    pairs with nonzero cyclic cores (see conjugate_pair), for each length.

    Conjugacy timings include reducing both words.

    Raises:
        PreconditionError: empty schedule, a length below 4, or trials < 1
    """
    if not lengths:
        raise PreconditionError("bench needs at least one length")
    if any(n < 4 for n in lengths):
        raise PreconditionError("bench lengths must be at least 4")
    if trials < 1:
        raise PreconditionError("bench needs at least one trial")
    check_rank(rank)

    rng = random.Random(seed)
    report = BenchReport(rank=rank, trials=trials, seed=seed)
    started = time.perf_counter()

    for length in lengths:
        samples: Dict[str, List[float]] = {op: [] for op in OPERATIONS}
        for _ in range(trials):
            w = random_word(rng, rank, length)
            u, v = conjugate_pair(rng, rank, length)
            s, t = conjugate_pair(rng, rank, length, negative=True)
            samples["reduce"].append(_time(lambda: reduce(w)))
            samples["conj_p"].append(_time(lambda: conj_p(reduce(u), reduce(v))))
            samples["conj_c"].append(_time(lambda: conj_c(reduce(s), reduce(t))))

        row = BenchRow(length=length, medians={op: median(samples[op]) for op in OPERATIONS})
        if report.rows:
            previous = report.rows[-1]
            row.ratios = {
                op: row.medians[op] / previous.medians[op] if previous.medians[op] > 0 else None
                for op in OPERATIONS
            }
        report.rows.append(row)
        logger.info(f"bench length {length}: {row.medians}")

    measured = [row.length for row in report.rows]
    report.exponents = {
        op: fit_exponent(measured, [row.medians[op] for row in report.rows])
        for op in OPERATIONS
    }
    report.total_seconds = time.perf_counter() - started
    return report
