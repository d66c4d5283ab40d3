# test/test_conjugacy.py
import sys
from pathlib import Path

import pytest

sys.path.append(str(Path(__file__).parent.parent))  # Add project root to path
from analysis.conjugacy import (
    conj_c, conj_o, conj_p, conj_p_star, decide, free_conj_p, pstar_closure,
)
from analysis.polycyclic import enumerate_elements, idempotent, positive_words, reduce, rho
from analysis.verification import verify_c_witness, verify_p_witness
from core.words import parse_word
from models.element import PnElement
from models.errors import RankMismatchError, RelationNotDefinedError

E = PnElement.of
ZERO = PnElement.zero(2)

# a = p1 p1 p2 q1, b = p2 p2 p1 q2: cores p1 p2 and p2 p1
CPC_A = E(2, (1, 1, 2), (1,))
CPC_B = E(2, (2, 2, 1), (2,))


def test_free_conj_p():
    assert free_conj_p("abc", "cab")
    assert free_conj_p("ab", "ab")
    assert not free_conj_p("aab", "abb")
    assert free_conj_p((), ())


def test_conj_p_examples():
    verdict = conj_p(CPC_A, CPC_B)
    assert verdict.related
    assert verify_p_witness(CPC_A, CPC_B, verdict)

    assert conj_p(idempotent(2, (1,)), idempotent(2, (2,))).related
    assert not conj_p(E(2, (1,), (2,)), E(2, (2,), (1,))).related


def test_conj_p_zero_cases():
    mixed = E(2, (1, 2), (1, 1))
    assert rho(mixed).is_zero
    for a, b in [(mixed, ZERO), (ZERO, mixed), (ZERO, ZERO)]:
        verdict = conj_p(a, b)
        assert verdict.related
        assert verify_p_witness(a, b, verdict)
    assert not conj_p(E(2, (1,)), ZERO).related
    assert not conj_p(ZERO, E(2, (), (2,))).related


def test_conj_p_negative_rotation():
    a = E(2, (2,), (2, 1, 2))
    b = E(2, (), (2, 1))
    verdict = conj_p(a, b)
    assert verdict.related
    assert verify_p_witness(a, b, verdict)


def test_conj_p_witnesses_verify():
    universe = enumerate_elements(2, 2)
    for a in universe:
        for b in universe:
            verdict = conj_p(a, b)
            assert verdict.related == conj_p(b, a).related
            if verdict.related:
                assert verify_p_witness(a, b, verdict), (str(a), str(b))
        assert conj_p(a, a).related


def test_conj_p_star():
    a, b = E(2, (1,), (2,)), E(2, (2,), (1,))
    assert conj_p_star(a, b).related
    assert conj_p(a, ZERO).related and conj_p(ZERO, b).related
    chained = conj_p_star(a, b)
    assert chained.witness is None and chained.via == ZERO
    assert conj_p(a, chained.via).related and conj_p(chained.via, b).related
    assert conj_p_star(CPC_A, CPC_B).via is None
    assert conj_p_star(CPC_A, CPC_A).related
    assert not conj_p_star(E(2, (1,)), E(2, (1, 1))).related


def test_conj_c_examples():
    a, b = idempotent(2, (1,)), idempotent(2, (2,))
    verdict = conj_c(a, b)
    assert verdict.related
    assert verify_c_witness(a, b, verdict)

    assert not conj_c(ZERO, a).related
    assert conj_c(ZERO, ZERO).related
    assert not conj_c(CPC_A, CPC_B).related


def test_conj_c_negative_rotation():
    a = E(2, (1,), (1, 2, 1, 1))
    b = E(2, (), (1, 1, 2))
    verdict = conj_c(a, b)
    assert verdict.related
    assert verify_c_witness(a, b, verdict)


def test_conj_c_is_an_equivalence_inside_p():
    universe = enumerate_elements(2, 2)
    related = {(a, b): conj_c(a, b) for a in universe for b in universe}
    for (a, b), verdict in related.items():
        if not verdict.related:
            continue
        assert verify_c_witness(a, b, verdict), (str(a), str(b))
        assert related[(b, a)].related
        assert conj_p(a, b).related
    for a in universe:
        assert related[(a, a)].related


def test_conj_o_universal():
    assert conj_o(ZERO, E(2, (1,))).related
    assert conj_o(E(2, (1,)), E(2, (2,))).related
    assert conj_o(CPC_A, CPC_A).related


def test_idempotent_class():
    words = [w for n in range(5) for w in positive_words(2, n)]
    for x in words:
        for y in words:
            a, b = idempotent(2, x), idempotent(2, y)
            assert conj_p(a, b).related and conj_c(a, b).related


def test_decide():
    a = reduce(parse_word("p1 p1 p2 q1", rank=2))
    b = reduce(parse_word("p2 p2 p1 q2", rank=2))
    assert decide("p", a, b).related
    assert not decide("c", a, b).related
    with pytest.raises(RelationNotDefinedError):
        decide("x", a, b)
    with pytest.raises(RankMismatchError):
        decide("p", a, PnElement.zero(3))


def test_pstar_closure():
    universe = enumerate_elements(2, 2)
    classes = pstar_closure(universe)
    assert sum(len(c) for c in classes) == len(universe)
    zero_class = next(c for c in classes if ZERO in c)
    assert all(rho(a).is_zero for a in zero_class)
    assert {a for a in universe if rho(a).is_zero} == set(zero_class)
    for cls in classes:
        for a in cls:
            for b in cls:
                assert conj_p_star(a, b).related

    assert pstar_closure([CPC_A]) == [[CPC_A]]
    assert len(pstar_closure([idempotent(2, (1,)), idempotent(2, (2, 2))])) == 1
