# test/test_parsers.py
import sys
from pathlib import Path

import pytest

sys.path.append(str(Path(__file__).parent.parent))  # Add project root to path
from analysis.zoo import make_cyclic_group
from core.rewriting import classify, is_locally_confluent
from models.errors import UnknownPresetError, WordSyntaxError
from models.zoo_monoid import ZooMonoid
from parsers.rule_parser import RuleFileParser
from parsers.system_factory import SystemFactory


def test_symbol_rules():
    system = RuleFileParser().parse_text("# example\nab -> b\ncb -> b\n", name="ex")
    assert system.name == "ex"
    assert system.symbols == ("a", "b", "c")
    assert len(system.rules) == 2
    assert not system.has_zero


def test_generator_rules_infer_rank():
    text = "q1 p1 -> e\nq2 p2 -> e\nq1 p2 -> 0\nq2 p1 -> 0\n"
    system = RuleFileParser().parse_text(text)
    assert system.rank == 2
    assert system.has_zero
    assert classify(system).monadic

    wider = RuleFileParser(default_rank=3).parse_text(text)
    assert wider.rank == 3


def test_directives():
    text = """
    name: idem
    alphabet: ab
    adjoin-zero
    aa -> a      # idempotent
    """
    system = RuleFileParser().parse_text(text)
    assert system.name == "idem-zero"
    assert system.symbols == ("a", "b")
    assert system.has_zero
    assert len(system.rules) == 1 + 5
    assert is_locally_confluent(system)


def test_bad_lines():
    with pytest.raises(WordSyntaxError, match="line 2"):
        RuleFileParser().parse_text("ab -> b\nab b\n")
    with pytest.raises(WordSyntaxError, match="line 2"):
        RuleFileParser().parse_text("rank: 2\np3 -> e\n")
    with pytest.raises(WordSyntaxError):
        RuleFileParser().parse_text("rank: two\n")


def test_parse_file(tmp_path):
    path = tmp_path / "example.rules"
    path.write_text("ab -> b\ncb -> b\n", encoding="utf-8")
    target = SystemFactory().from_file(str(path))
    assert target.name == "example"
    assert target.deciders == {}


def test_presets():
    factory = SystemFactory()
    assert factory.get("pn", rank=3).system.rank == 3
    assert factory.get("pn-4").system.name == "pn-4"
    assert factory.get("example22").name == "example22"
    assert factory.get("example22-zero").zero_adjoined
    assert factory.get("onerel-3").name == "onerel-3"
    assert factory.get("onerel", k=2).name == "onerel-2"
    assert factory.get("tin1-trivial").name == "tin1-trivial"
    assert factory.get("tin1", base="cyclic-2").name == "tin1-cyclic-2"
    assert "tin1" in factory.available


def test_unknown_presets():
    factory = SystemFactory()
    with pytest.raises(UnknownPresetError):
        factory.get("bicyclic")
    with pytest.raises(UnknownPresetError):
        factory.get("onerel")
    with pytest.raises(UnknownPresetError):
        factory.get("tin1-free")


def test_register_preset():
    def cyclic(k=None, **_):
        if k is None:
            raise UnknownPresetError("cyclic needs an order, e.g. cyclic-3")
        return ZooMonoid(name=f"cyclic-{k}", system=make_cyclic_group(k))

    SystemFactory.register_preset("cyclic", cyclic)
    try:
        factory = SystemFactory()
        assert "cyclic" in factory.available
        monoid = factory.get("cyclic-3")
        assert monoid.name == "cyclic-3"
        assert len(monoid.system.rules) == 1
        with pytest.raises(UnknownPresetError):
            factory.get("cyclic")
    finally:
        SystemFactory._presets.pop("cyclic", None)
    assert "cyclic" not in SystemFactory().available
