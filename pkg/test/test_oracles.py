# test/test_oracles.py
import sys
from pathlib import Path

import pytest

sys.path.append(str(Path(__file__).parent.parent))  # Add project root to path
from analysis.conjugacy import conj_c, conj_p
from analysis.oracles import oracle_conj_c_pn, oracle_conj_p, oracle_conj_p_pn, search_conj_o
from analysis.polycyclic import enumerate_elements, idempotent, multiply, pn_system, pp_member
from analysis.zoo import make_example22, symbolic_system
from core.rewriting import normalize
from core.words import parse_word
from models.element import PnElement
from models.errors import IncompleteSystemError, PreconditionError
from models.verdicts import OracleVerdict

E = PnElement.of
CPC_A = E(2, (1, 1, 2), (1,))
CPC_B = E(2, (2, 2, 1), (2,))


def pn_word(text):
    return parse_word(text, rank=2)


def test_p_oracle_pn_example():
    result = oracle_conj_p(pn_system(2), pn_word("p1 q1"), pn_word("p2 q2"), 2)
    assert result.verdict is OracleVerdict.YES
    u, v = result.witness
    assert str(u) == "p1 q2"
    assert str(v) == "p2 q1"

    result = oracle_conj_p(pn_system(2), pn_word("p1"), pn_word("p2"), 3)
    assert result.verdict is OracleVerdict.NO_AT_BOUND


def test_corollary_pair():
    p = oracle_conj_p_pn(CPC_A, CPC_B, 8)
    assert p.found
    u, v = p.witness
    assert multiply(u, v) == CPC_A and multiply(v, u) == CPC_B
    assert oracle_conj_c_pn(CPC_A, CPC_B, 8).verdict is OracleVerdict.NO_AT_BOUND


def test_c_oracle_examples():
    a, b = idempotent(2, (1,)), idempotent(2, (2,))
    result = oracle_conj_c_pn(a, b, 1)
    assert result.found
    g, h = result.witness
    assert g == E(2, (1,), (2,)) and h == E(2, (2,), (1,))

    zero = PnElement.zero(2)
    result = oracle_conj_c_pn(zero, zero, 0)
    assert result.found and result.witness == (zero, zero)

    assert not oracle_conj_c_pn(E(2, (1, 2)), E(2, (2, 1)), 4).found


def test_bound_validation():
    with pytest.raises(PreconditionError):
        oracle_conj_p_pn(CPC_A, CPC_B, -1)
    with pytest.raises(PreconditionError):
        oracle_conj_c_pn(CPC_A, CPC_B, -1)


def test_deciders_agree_with_oracles():
    universe = enumerate_elements(2, 2)
    for a in universe:
        for b in universe:
            bound = a.length + b.length
            p = oracle_conj_p_pn(a, b, bound)
            assert conj_p(a, b).related == p.found, (str(a), str(b))
            if p.found:
                u, v = p.witness
                assert multiply(u, v) == a and multiply(v, u) == b
            c = oracle_conj_c_pn(a, b, bound)
            assert conj_c(a, b).related == c.found, (str(a), str(b))
            if c.found:
                g, h = c.witness
                assert pp_member(g, a) and pp_member(h, b)
                assert multiply(a, g) == multiply(g, b)
                assert multiply(b, h) == multiply(h, a)


def test_p_oracle_example22():
    monoid = make_example22()
    system = monoid.system
    result = oracle_conj_p(system, parse_word("bac", alphabet="abc"), parse_word("ba", alphabet="abc"), 3)
    assert result.found
    u, v = result.witness
    assert (str(u), str(v)) == ("ba", "c")
    assert str(normalize(system, u + v)) == "bac"
    assert str(normalize(system, v + u)) == "ba"


def test_p_oracle_needs_complete_system():
    swap = symbolic_system("swap", "ab", [("ab", "ba")])
    with pytest.raises(IncompleteSystemError):
        oracle_conj_p(swap, parse_word("ab", alphabet="ab"), parse_word("ba", alphabet="ab"), 2)


def test_o_search_example22():
    system = make_example22().system

    def w(text):
        return parse_word(text, alphabet="abc")

    result = search_conj_o(system, w("bac"), w("ba"), 4)
    assert result.found
    g, h = result.witness
    assert normalize(system, w("bac") + g) == normalize(system, g + w("ba"))
    assert normalize(system, w("ba") + h) == normalize(system, h + w("bac"))

    # no g at all makes ba g = g bc when g is restricted to words without b
    def no_b(word):
        return all(letter.name != "b" for letter in word)

    assert not search_conj_o(system, w("ba"), w("bc"), 3, conjugator_filter=no_b).found
