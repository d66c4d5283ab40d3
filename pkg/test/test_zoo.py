# test/test_zoo.py
import sys
from pathlib import Path

import pytest

sys.path.append(str(Path(__file__).parent.parent))  # Add project root to path
from analysis.oracles import oracle_conj_p
from analysis.zoo import (
    c_search_m0, make_cyclic_group, make_example22, make_example22_zero,
    make_one_relator_power, make_tin1, normal_forms, separation_report, symbolic_system,
    tin1_c_witness,
)
from core.rewriting import (
    all_words, classify, critical_pairs, is_complete, is_locally_confluent, normalize,
)
from core.words import count_letter, parse_word
from models.errors import AlphabetError, PreconditionError
from models.word import Letter


def w(text, monoid):
    return parse_word(text, alphabet=monoid.system.symbols)


def test_example22():
    m = make_example22()
    assert str(normalize(m.system, w("aba", m))) == "ba"
    assert critical_pairs(m.system) == []
    assert is_locally_confluent(m.system)
    assert m.zero_variant is not None and m.zero_variant.zero_adjoined

    result = oracle_conj_p(m.system, w("bac", m), w("ba", m), 3)
    assert result.found


def test_example22_normal_form_shape():
    m = make_example22()
    for level in all_words(m.system, 6):
        for word in level:
            text = str(normalize(m.system, word))
            assert "b" not in text.lstrip("b")


def test_example22_zero():
    m0 = make_example22_zero()
    assert m0.name == "example22-zero"
    rules = sorted(str(rule) for rule in m0.system.rules)
    assert rules == sorted(str(rule) for rule in make_example22().zero_variant.system.rules)
    assert m0.system.has_zero
    assert is_locally_confluent(m0.system)
    assert m0.deciders["o"](w("0", m0), w("ba", m0)).related


def test_one_relator_power():
    m = make_one_relator_power(2)
    assert str(normalize(m.system, w("aaaa", m))) == "aa"
    assert [str(f) for f in normal_forms(m, 4)] == ["e", "a", "aa"]
    assert m.deciders["o"](w("e", m), w("aa", m)).related

    m3 = make_one_relator_power(3)
    assert not m3.deciders["p"](w("a", m3), w("aa", m3)).related
    assert m3.deciders["p"](w("aaa", m3), w("aaaaa", m3)).related
    assert m3.deciders["c"](w("aaa", m3), w("aaaa", m3)).related

    with pytest.raises(PreconditionError):
        make_one_relator_power(0)


def test_one_relator_p_oracle_is_equality():
    for k in range(1, 4):
        m = make_one_relator_power(k)
        forms = normal_forms(m, k + 1)
        assert len(forms) == k + 1
        for u in forms:
            for v in forms:
                assert oracle_conj_p(m.system, u, v, len(u) + len(v)).found == (u == v)


def test_one_relator_witnesses():
    for k in range(1, 5):
        m = make_one_relator_power(k)
        zero = normalize(m.system, w("a" * k, m))
        forms = normal_forms(m, k + 1)
        for u in forms:
            x, y = m.deciders["p"](u, u).witness
            assert normalize(m.system, x + y) == u == normalize(m.system, y + x)

            g, h = m.deciders["c"](u, u).witness
            for c in (g, h):
                assert normalize(m.system, u + c) == normalize(m.system, c + u)
                # c ∈ 𝒫(u): m u c = 0 only when m u = 0
                for mult in forms:
                    if normalize(m.system, mult + u + c) == zero:
                        assert normalize(m.system, mult + u) == zero


def test_tin1_trivial():
    m = make_tin1()
    assert sorted(str(rule) for rule in m.system.rules) == ["aa -> a", "ba -> b"]
    assert is_complete(m.system)
    forms = {str(f) for f in normal_forms(m, 4)}
    assert forms == {"e", "a", "b", "bb", "bbb", "bbbb", "ab", "abb", "abbb"}


def test_tin1_c_decider():
    m = make_tin1()
    decide = m.deciders["c"]
    assert decide(w("bab", m), w("abba", m)).related
    assert not decide(w("ab", m), w("abb", m)).related
    assert decide(w("a", m), w("e", m)).related

    for u_text, v_text in [("bab", "abba"), ("ab", "b"), ("b", "ab"), ("aa", "e"), ("abab", "bb")]:
        u, v = w(u_text, m), w(v_text, m)
        g, h = tin1_c_witness(u, v)
        assert normalize(m.system, u + g) == normalize(m.system, g + v)
        assert normalize(m.system, v + h) == normalize(m.system, h + u)


def test_tin1_b_count_invariant():
    m = make_tin1()
    b = Letter.symbol("b")
    for level in all_words(m.system, 6):
        for word in level:
            assert count_letter(word, b) == count_letter(normalize(m.system, word), b)


def test_tin1_with_cyclic_base():
    base = make_cyclic_group(3)
    m = make_tin1(base)
    assert m.name == "tin1-cyclic-3"
    # xa -> ax keeps length
    assert not classify(m.system).length_reducing
    assert m.deciders["c"](w("xbx", m), w("ab", m)).related


def test_tin1_alphabet_clash():
    clash = symbolic_system("clash", "ab", [("ab", "e")])
    with pytest.raises(AlphabetError):
        make_tin1(clash)


def test_c_search_in_m0():
    m0 = make_example22_zero()
    zero = w("0", m0)
    assert c_search_m0(m0, zero, w("00", m0), 2).found
    assert not c_search_m0(m0, zero, w("ba", m0), 2).found
    assert not c_search_m0(m0, w("ba", m0), zero, 2).found


def test_separation_report():
    report = separation_report()
    p_entry = report.find("example22", "p", "bac", "ba")
    assert p_entry is not None and p_entry.outcome == "YES"
    zero_entry = report.find("example22-zero", "p", "bac", "ba")
    assert zero_entry is not None and zero_entry.outcome == "YES"
    assert zero_entry.bound == 4
    assert report.zero_c_class == ["0"]
    assert report.o_universal_holds
    assert report.o_universal_checked > 0
    assert ("p", "o", "ba", "bc") in report.separated
    assert ("o", "c", "0", "ba") in report.separated

    data = report.to_dict()
    assert data["o_universal"]["holds"] is True
    assert {"relations": ["o", "c"], "pair": ["0", "ba"]} in data["separated"]
