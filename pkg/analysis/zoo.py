# analysis/zoo.py
"""
Example monoids used to separate the conjugacy relations and to exercise
the rewriting engine on systems other than P_n.

  example22        ({a, b, c}; ab = b, cb = b) and its zero-adjoined variant
  onerel-<k>       ({a}; a^(k+1) = a^k)
  tin1             base group presentation extended by a, b; c-conjugacy is
                   decided by counting b
  cyclic-<m>       ({x}; x^m = 1), a base group for tin1
"""

from typing import Iterable, List, Optional, Sequence, Tuple

from analysis.oracles import oracle_conj_p, search_conj_o
from core.rewriting import (
    adjoin_zero, all_words, classify, is_complete, normalize,
)
from core.words import count_letter, parse_word
from models.errors import AlphabetError, PreconditionError
from models.rewrite_system import RewriteSystem, Rule
from models.verdicts import ConjVerdict, OracleResult, OracleVerdict
from models.word import Letter, Word
from models.zoo_monoid import SeparationEntry, SeparationReport, ZooMonoid

import logging
logger = logging.getLogger(__name__)

SEPARATION_BOUND = 4
UNIVERSAL_SAMPLE_LENGTH = 2


def symbolic_system(
    name: str,
    symbols: Sequence[str],
    rules: Iterable[Tuple[str, str]],
    family: str = "custom",
    params: Tuple[Tuple[str, int], ...] = (),
) -> RewriteSystem:
    """Build a system over single-character symbols from (lhs, rhs) texts."""
    parsed = tuple(
        Rule(parse_word(lhs, alphabet=symbols), parse_word(rhs, alphabet=symbols))
        for lhs, rhs in rules
    )
    system = RewriteSystem(parsed, symbols=tuple(symbols), name=name, family=family, params=params)
    logger.debug(f"built {name} with {len(parsed)} rules")
    return system


def _equal_forms(system: RewriteSystem, relation: str):
    """
    p- or c-decider for a monoid where the relation is equality.

    The p-witness is (u, 1): u = u·1 and v = 1·u. The c-witness is g = h = 1,
    which lies in 𝒫(u) for every u.
    """
    def decide(u: Word, v: Word) -> ConjVerdict:
        if normalize(system, u) != normalize(system, v):
            return ConjVerdict(False)
        if relation == "c":
            return ConjVerdict(True, (Word.empty(), Word.empty()))
        return ConjVerdict(True, (u, Word.empty()))
    return decide


def _universal(conjugator: Word):
    def decide(u: Word, v: Word) -> ConjVerdict:
        return ConjVerdict(True, (conjugator, conjugator))
    return decide


def make_example22() -> ZooMonoid:
    """M = ({a, b, c}; ab = b, cb = b); normal forms are b^k v with v over {a, c}."""
    system = symbolic_system("example22", "abc", [("ab", "b"), ("cb", "b")], family="example22")
    monoid = ZooMonoid(
        name="example22",
        system=system,
        provenance="monadic confluent system with bac ∼p ba",
    )
    monoid.zero_variant = make_example22_zero(system)
    return monoid


def make_example22_zero(base: Optional[RewriteSystem] = None) -> ZooMonoid:
    """M⁰: example22 with a zero adjoined; ∼o is universal there."""
    if base is None:
        return make_example22().zero_variant
    system = adjoin_zero(base)
    zero = Word((Letter.zero(),))
    return ZooMonoid(
        name="example22-zero",
        system=system,
        deciders={"o": _universal(zero)},
        provenance="example22 with zero adjoined; the ∼c class of 0 is {0}",
        zero_adjoined=True,
    )


def make_one_relator_power(k: int) -> ZooMonoid:
    """
    ({a}; a^(k+1) = a^k): elements 1, a, ..., a^k with a^k a zero.
    ∼p and ∼c are equality, ∼o is universal (g = h = a^k).
    """
    if k < 1:
        raise PreconditionError(f"one-relator power needs k >= 1, got {k}")
    system = symbolic_system(
        f"onerel-{k}", "a", [("a" * (k + 1), "a" * k)], family="onerel", params=(("k", k),)
    )
    zero_word = parse_word("a" * k, alphabet="a")
    return ZooMonoid(
        name=f"onerel-{k}",
        system=system,
        deciders={
            "p": _equal_forms(system, "p"),
            "c": _equal_forms(system, "c"),
            "o": _universal(zero_word),
        },
        provenance=f"a^{k} is a zero, so p and c collapse to equality",
    )


def make_cyclic_group(m: int) -> RewriteSystem:
    """({x}; x^m = 1)."""
    if m < 1:
        raise PreconditionError(f"cyclic group needs m >= 1, got {m}")
    return symbolic_system(f"cyclic-{m}", "x", [("x" * m, "e")], family="cyclic", params=(("m", m),))


def trivial_group() -> RewriteSystem:
    return RewriteSystem((), symbols=(), name="trivial", family="trivial")


def _tin1_b_letter() -> Letter:
    return Letter.symbol("b")


def _a_before_b(w: Word) -> bool:
    """Whether an a occurs before the first b; then [w] = [a b^p], else [b^p]."""
    for letter in w.letters:
        if letter.name == "b":
            return False
        if letter.name == "a":
            return True
    return False


def tin1_c_witness(u: Word, v: Word) -> Optional[Tuple[Word, Word]]:
    """
    Conjugators (g, h) with ug = gv and vh = hu, or None when |u|_b ≠ |v|_b.

    No b: g = h = ab. Otherwise the classes are b^p or ab^p: equal classes
    use g = h = 1, and [b^p], [ab^p] use g = b, h = a (swapped the other way).
    """
    b = _tin1_b_letter()
    p = count_letter(u, b)
    if p != count_letter(v, b):
        return None

    def word(text: str) -> Word:
        return Word(tuple(Letter.symbol(ch) for ch in text))

    if p == 0:
        return word("ab"), word("ab")
    u_has_a, v_has_a = _a_before_b(u), _a_before_b(v)
    if u_has_a == v_has_a:
        return Word.empty(), Word.empty()
    if v_has_a:
        return word("b"), word("a")
    return word("a"), word("b")


def _tin1_c_decider(u: Word, v: Word) -> ConjVerdict:
    witness = tin1_c_witness(u, v)
    return ConjVerdict(witness is not None, witness)


def make_tin1(base: Optional[RewriteSystem] = None) -> ZooMonoid:
    """
    Extend a group presentation (Σ; R) by fresh symbols a, b:
    R ∪ {xa → ax : x ∈ Σ} ∪ {bx → b : x ∈ Σ ∪ {a}} ∪ {xb → b : x ∈ Σ} ∪ {aa → a}.

    Rule applications preserve the number of b's, and c-conjugacy is
    |u|_b = |v|_b.

    Raises:
        AlphabetError: base uses a or b, or is not over symbols
    """
    if base is None:
        base = trivial_group()
    if not base.is_symbolic or base.has_zero:
        raise AlphabetError(f"{base.name} must be a symbol presentation without zero")
    clash = {"a", "b"} & set(base.symbols)
    if clash:
        raise AlphabetError(f"{base.name} already uses {', '.join(sorted(clash))}")

    sigma = list(base.symbols)
    pairs = [(f"{x}a", f"a{x}") for x in sigma]
    pairs += [(f"b{x}", "b") for x in sigma + ["a"]]
    pairs += [(f"{x}b", "b") for x in sigma]
    pairs.append(("aa", "a"))

    symbols = tuple(sigma) + ("a", "b")
    extension = symbolic_system("tin1-extension", symbols, pairs)
    system = RewriteSystem(
        rules=base.rules + extension.rules,
        symbols=symbols,
        name=f"tin1-{base.name}",
        family="tin1",
        params=base.params,
    )

    if not classify(system).length_reducing:
        logger.info(f"{system.name} is not length reducing; word problem falls back to bounded_equal")
    elif not is_complete(system):
        logger.warning(f"{system.name} is not complete; word problem falls back to bounded_equal")

    return ZooMonoid(
        name=system.name,
        system=system,
        deciders={"c": _tin1_c_decider},
        provenance=f"base {base.name} extended by a, b; c-conjugacy counts b",
    )


def normal_forms(monoid: ZooMonoid, max_length: int) -> List[Word]:
    """Distinct normal forms of all words of length ≤ max_length, shortest first."""
    system = monoid.system
    forms = {
        normalize(system, w)
        for level in all_words(system, max_length)
        for w in level
    }
    return sorted(forms, key=lambda w: w.sort_key)


def _entry(monoid: ZooMonoid, bound: int, relation: str, left: str, right: str, result, note: str = "") -> SeparationEntry:
    witness = tuple(str(w) for w in result.witness) if result.witness else None
    return SeparationEntry(
        monoid=monoid.name,
        relation=relation,
        left=left,
        right=right,
        outcome=result.verdict.value,
        witness=witness,
        bound=bound,
        note=note,
    )


def c_search_m0(monoid: ZooMonoid, a: Word, b: Word, bound: int):
    """
    c-conjugacy search in a zero-adjoined monoid without zero divisors:
    𝒫(0) = {0} and 𝒫(a) is every nonzero element otherwise.
    """
    system = monoid.system
    zero = normalize(system, Word((Letter.zero(),)))
    a_zero = normalize(system, a) == zero
    b_zero = normalize(system, b) == zero
    if a_zero or b_zero:
        if a_zero and b_zero:
            return OracleResult(OracleVerdict.YES, (zero, zero), 1)
        return OracleResult(OracleVerdict.NO_AT_BOUND, None, 0)

    def nonzero(g: Word) -> bool:
        return normalize(system, g) != zero

    return search_conj_o(system, a, b, bound, conjugator_filter=nonzero)


def separation_report(bound: int = SEPARATION_BOUND) -> SeparationReport:
    """
    Run the example22 experiments in M and M⁰ and record which relation
    pairs are told apart by which pair of elements.
    """
    m = make_example22()
    m0 = m.zero_variant
    report = SeparationReport()

    def w(text: str, monoid: ZooMonoid) -> Word:
        return parse_word(text, alphabet=monoid.system.symbols)

    p_bac = oracle_conj_p(m.system, w("bac", m), w("ba", m), bound)
    report.entries.append(_entry(m, bound, "p", "bac", "ba", p_bac))
    # and in M⁰
    p0_bac = oracle_conj_p(m0.system, w("bac", m0), w("ba", m0), bound)
    report.entries.append(_entry(m0, bound, "p", "bac", "ba", p0_bac))

    o_bac = search_conj_o(m.system, w("bac", m), w("ba", m), bound)
    report.entries.append(_entry(
        m, bound, "o", "bac", "ba", o_bac,
        note="conjugators found" if o_bac.found else "refuted up to bound",
    ))

    p_babc = oracle_conj_p(m.system, w("ba", m), w("bc", m), bound)
    o_babc = search_conj_o(m.system, w("ba", m), w("bc", m), bound)
    report.entries.append(_entry(m, bound, "p", "ba", "bc", p_babc))
    report.entries.append(_entry(m, bound, "o", "ba", "bc", o_babc))
    if o_babc.found and not p_babc.found:
        report.separated.append(("p", "o", "ba", "bc"))

    p0_babc = oracle_conj_p(m0.system, w("ba", m0), w("bc", m0), bound)
    c0_babc = c_search_m0(m0, w("ba", m0), w("bc", m0), bound)
    report.entries.append(_entry(m0, bound, "p", "ba", "bc", p0_babc))
    report.entries.append(_entry(m0, bound, "c", "ba", "bc", c0_babc))
    if c0_babc.found and not p0_babc.found:
        report.separated.append(("p", "c", "ba", "bc"))

    o0_zero = search_conj_o(m0.system, w("0", m0), w("ba", m0), bound)
    c0_zero = c_search_m0(m0, w("0", m0), w("ba", m0), bound)
    report.entries.append(_entry(m0, bound, "o", "0", "ba", o0_zero))
    report.entries.append(_entry(m0, bound, "c", "0", "ba", c0_zero, note="class of 0 is {0}"))
    if o0_zero.found and not c0_zero.found:
        report.separated.append(("o", "c", "0", "ba"))

    sample = normal_forms(m0, UNIVERSAL_SAMPLE_LENGTH)
    zero = normalize(m0.system, w("0", m0))
    report.zero_c_class = [
        str(x) for x in sample if c_search_m0(m0, zero, x, bound).found
    ]
    for left in sample:
        for right in sample:
            report.o_universal_checked += 1
            if not search_conj_o(m0.system, left, right, 1).found:
                report.o_universal_holds = False

    logger.info(f"separation: {len(report.separated)} relation pairs separated")
    return report
