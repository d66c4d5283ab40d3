# test/test_verification.py
import random
import sys
from pathlib import Path

import pytest

sys.path.append(str(Path(__file__).parent.parent))  # Add project root to path
from analysis.benchmark import conjugate_pair, fit_exponent, random_word, run_bench
from analysis.conjugacy import conj_c, conj_p
from analysis.polycyclic import cyclic_reduce, reduce
from analysis.verification import (
    SWEEPS, run_sweeps, sweep_arithmetic, sweep_ccp, sweep_idempotents, sweep_lpp,
    sweep_onerel, sweep_p53, sweep_p56, sweep_pn_presentation, sweep_rho_zero, sweep_tin1,
)
from models.errors import PreconditionError


def test_small_sweeps_pass():
    for result in [
        sweep_arithmetic(2, 1),
        sweep_ccp(2, 1),
        sweep_p56(2, 1),
        sweep_p53(2, 1),
        sweep_rho_zero(2, 2),
        sweep_lpp(2, 1),
        sweep_idempotents(2, 3),
        sweep_pn_presentation(),
        sweep_tin1(3),
    ]:
        assert result.checked > 0
        assert result.passed, result.violations[:5]


def test_run_sweeps_selects_by_name():
    results = run_sweeps(["presentation", "rotations"], max_component=1)
    assert [r.passed for r in results] == [True, True]
    assert set(SWEEPS) >= {"ccp", "p56", "p53", "lpp", "zoo"}


def test_sweep_report_shape():
    data = sweep_pn_presentation(ranks=[2]).to_dict()
    assert data["passed"] is True
    assert data["checked"] == 1
    assert data["violation_count"] == 0


def test_random_word():
    w = random_word(random.Random(3), 2, 40)
    assert len(w) == 40
    assert not w.has_zero
    assert random_word(random.Random(3), 2, 40) == w


def test_fit_exponent():
    lengths = [1000, 2000, 4000, 8000]
    assert fit_exponent(lengths, [n * 1e-6 for n in lengths]) == pytest.approx(1.0)
    assert fit_exponent(lengths, [(n ** 2) * 1e-9 for n in lengths]) == pytest.approx(2.0)
    assert fit_exponent([1000], [0.1]) is None


def test_run_bench():
    report = run_bench(2, [200], 1, seed=5)
    assert len(report.rows) == 1
    assert report.exponents["reduce"] is None
    assert "Benchmark (rank 2" in report.summary()

    report = run_bench(2, [100, 200], 2)
    assert set(report.rows[1].ratios) == {"reduce", "conj_p", "conj_c"}


def test_run_bench_rejects_bad_schedules():
    with pytest.raises(PreconditionError):
        run_bench(2, [], 1)
    with pytest.raises(PreconditionError):
        run_bench(2, [0, 100], 1)
    with pytest.raises(PreconditionError):
        run_bench(2, [3], 1)
    with pytest.raises(PreconditionError):
        run_bench(2, [100], 0)


def test_conjugate_pair():
    rng = random.Random(7)
    u, v = conjugate_pair(rng, 2, 40)
    assert len(u) == len(v) == 40
    a, b = reduce(u), reduce(v)
    assert not a.is_zero and not b.is_zero
    assert cyclic_reduce(a).core.is_positive
    assert conj_p(a, b).related

    s, t = conjugate_pair(rng, 2, 40, negative=True)
    c, d = reduce(s), reduce(t)
    assert cyclic_reduce(c).core.is_negative
    assert conj_c(c, d).related

    with pytest.raises(PreconditionError):
        conjugate_pair(rng, 2, 3)


@pytest.mark.slow
def test_bench_conjugacy_is_linear():
    report = run_bench(2, [10_000, 20_000, 40_000], 3, seed=0)
    for op in ("conj_p", "conj_c"):
        assert 0.5 <= report.exponents[op] <= 1.3


@pytest.mark.slow
def test_deciders_match_oracles_at_components_3():
    assert sweep_ccp(2, 3).passed
    assert sweep_p56(2, 3).passed


@pytest.mark.slow
def test_rho_zero_cases_at_components_3():
    assert sweep_rho_zero(2, 3).passed


@pytest.mark.slow
def test_conjugator_sets_at_components_3():
    for rank in (2, 3):
        result = sweep_lpp(rank, 3, 4)
        assert result.passed, result.violations[:5]


@pytest.mark.slow
def test_one_relator_powers_up_to_5():
    assert sweep_onerel(5).passed
