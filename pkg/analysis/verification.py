# analysis/verification.py
"""
Exhaustive small-universe checks of the P_n deciders against the bounded
oracles and the defining equations, plus consistency checks of the example
monoids. Each sweep returns a SweepResult listing counterexamples.
"""

from typing import Callable, Dict, List, Optional

from analysis.conjugacy import conj_c, conj_p, conj_p_star, free_conj_p
from analysis.oracles import oracle_conj_c_pn, oracle_conj_p, oracle_conj_p_pn
from analysis.polycyclic import (
    cyclic_reduce, element_to_word, enumerate_elements, idempotent, multiply,
    pn_system, positive_words, pp_member, pp_member_definitional, product_core,
    reduce, rho,
)
from analysis.zoo import make_example22, make_one_relator_power, make_tin1, normal_forms, tin1_c_witness
from core.rewriting import all_words, classify, is_locally_confluent, normalize
from core.words import count_letter
from models.element import PnElement
from models.verdicts import ConjVerdict, MembershipVerdict, SweepResult
from models.word import Letter

import logging
logger = logging.getLogger(__name__)


def verify_p_witness(a: PnElement, b: PnElement, verdict: ConjVerdict) -> bool:
    """a = uv and b = vu for the pair carried by verdict."""
    if verdict.witness is None:
        return False
    u, v = verdict.witness
    return multiply(u, v) == a and multiply(v, u) == b


def verify_c_witness(a: PnElement, b: PnElement, verdict: ConjVerdict) -> bool:
    """g ∈ 𝒫(a), h ∈ 𝒫(b), ag = gb and bh = ha."""
    if verdict.witness is None:
        return False
    g, h = verdict.witness
    return (
        pp_member(g, a) and pp_member(h, b)
        and multiply(a, g) == multiply(g, b)
        and multiply(b, h) == multiply(h, a)
    )


def _finish(result: SweepResult) -> SweepResult:
    level = logging.INFO if result.passed else logging.WARNING
    logger.log(level, f"{result.name}: {result.checked} checked, {len(result.violations)} violations")
    return result


def sweep_arithmetic(rank: int, max_component: int) -> SweepResult:
    """multiply vs reducing the concatenation; recomposition r ã r⁻¹ = a; product_core vs multiply."""
    result = SweepResult(f"arithmetic rank {rank} components <= {max_component}")
    universe = enumerate_elements(rank, max_component)

    for a in universe:
        d = cyclic_reduce(a)
        recomposed = multiply(multiply(PnElement.of(rank, d.r), d.core), PnElement.of(rank, (), d.r))
        result.checked += 1
        if recomposed != a:
            result.violations.append(f"recomposition of {a} gives {recomposed}")

        for b in universe:
            result.checked += 1
            product = multiply(a, b)
            expected = reduce(element_to_word(a) + element_to_word(b))
            if product != expected:
                result.violations.append(f"{a} * {b} = {product}, word reduction gives {expected}")
            if a.is_zero or b.is_zero or product.is_zero:
                continue
            core = product_core(rank, a.y, a.x, b.y, b.x)
            if core != cyclic_reduce(product).core:
                result.violations.append(f"product core of {a} * {b} is {core}")
    return _finish(result)


def sweep_associativity(rank: int, max_component: int) -> SweepResult:
    result = SweepResult(f"associativity rank {rank} components <= {max_component}")
    universe = enumerate_elements(rank, max_component)
    for a in universe:
        for b in universe:
            ab = multiply(a, b)
            for c in universe:
                result.checked += 1
                if multiply(ab, c) != multiply(a, multiply(b, c)):
                    result.violations.append(f"({a} {b}) {c}")
    return _finish(result)


def sweep_ccp(rank: int, max_component: int) -> SweepResult:
    """conj_p agrees with the factorisation oracle at bound |a| + |b|; witnesses verify."""
    result = SweepResult(f"p-conjugacy vs oracle rank {rank} components <= {max_component}")
    universe = enumerate_elements(rank, max_component)
    for a in universe:
        for b in universe:
            result.checked += 1
            verdict = conj_p(a, b)
            oracle = oracle_conj_p_pn(a, b, a.length + b.length)
            if verdict.related != oracle.found:
                result.violations.append(f"conj_p({a}, {b}) = {verdict.related}, oracle {oracle.verdict.value}")
            elif verdict.related and not verify_p_witness(a, b, verdict):
                result.violations.append(f"bad p-witness for ({a}, {b}): {verdict.witness}")
    return _finish(result)


def sweep_p56(rank: int, max_component: int) -> SweepResult:
    """conj_c agrees with the conjugator oracle at bound |a| + |b|; witnesses verify."""
    result = SweepResult(f"c-conjugacy vs oracle rank {rank} components <= {max_component}")
    universe = enumerate_elements(rank, max_component)
    for a in universe:
        for b in universe:
            result.checked += 1
            verdict = conj_c(a, b)
            oracle = oracle_conj_c_pn(a, b, a.length + b.length)
            if verdict.related != oracle.found:
                result.violations.append(f"conj_c({a}, {b}) = {verdict.related}, oracle {oracle.verdict.value}")
            elif verdict.related and not verify_c_witness(a, b, verdict):
                result.violations.append(f"bad c-witness for ({a}, {b}): {verdict.witness}")
            if verdict.related and not conj_p(a, b).related:
                result.violations.append(f"({a}, {b}) c-conjugate but not p-conjugate")
    return _finish(result)


def sweep_p53(rank: int, max_component: int) -> SweepResult:
    """
    Transitivity of ∼p through nonzero middles, and ∼p* equal to two-step
    reachability inside the universe.
    """
    result = SweepResult(f"p* closure rank {rank} components <= {max_component}")
    universe = enumerate_elements(rank, max_component)
    size = len(universe)
    related = [[conj_p(a, b).related for b in universe] for a in universe]

    for i in range(size):
        for j in range(size):
            two_step = any(related[i][m] and related[m][j] for m in range(size))
            result.checked += 1
            if conj_p_star(universe[i], universe[j]).related != two_step:
                result.violations.append(f"p* vs two-step chain on ({universe[i]}, {universe[j]})")
            if not related[i][j]:
                continue
            for m in range(size):
                if universe[j].is_zero or not related[j][m]:
                    continue
                result.checked += 1
                if not related[i][m]:
                    result.violations.append(
                        f"{universe[i]} ~ {universe[j]} ~ {universe[m]} but not {universe[i]} ~ {universe[m]}"
                    )
    return _finish(result)


def sweep_rho_zero(rank: int, max_component: int) -> SweepResult:
    """a ∼p 0 iff ρ(a) = 0; among nonzero ρ-zero elements ∼p is equality of cores."""
    result = SweepResult(f"rho-zero classes rank {rank} components <= {max_component}")
    universe = enumerate_elements(rank, max_component)
    zero = PnElement.zero(rank)
    mixed = [a for a in universe if not a.is_zero and rho(a).is_zero]

    for a in universe:
        result.checked += 1
        if conj_p(a, zero).related != rho(a).is_zero:
            result.violations.append(f"conj_p({a}, 0) disagrees with rho")
    for a in mixed:
        for b in mixed:
            result.checked += 1
            if conj_p(a, b).related != (cyclic_reduce(a).core == cyclic_reduce(b).core):
                result.violations.append(f"conj_p({a}, {b}) disagrees with core equality")
    return _finish(result)


def sweep_lpp(rank: int, max_component: int, probe_bound: int = 4) -> SweepResult:
    """Prefix membership test for 𝒫(a) against the defining condition."""
    result = SweepResult(f"conjugator set rank {rank} components <= {max_component}")
    universe = enumerate_elements(rank, max_component)
    for g in universe:
        for a in universe:
            result.checked += 1
            definitional = pp_member_definitional(g, a, probe_bound)
            if pp_member(g, a) != (definitional.verdict is MembershipVerdict.TRUE_AT_BOUND):
                result.violations.append(f"membership of {g} in P({a})")
    return _finish(result)


def sweep_idempotents(rank: int, max_length: int) -> SweepResult:
    """All nonzero idempotents x x⁻¹ form one p-class and one c-class."""
    result = SweepResult(f"idempotents rank {rank} length <= {max_length}")
    words = [w for n in range(max_length + 1) for w in positive_words(rank, n)]
    for x in words:
        for y in words:
            a, b = idempotent(rank, x), idempotent(rank, y)
            result.checked += 1
            if not (conj_p(a, b).related and conj_c(a, b).related):
                result.violations.append(f"{a} and {b}")
    return _finish(result)


def sweep_free_rotations(alphabet_size: int, max_length: int) -> SweepResult:
    """free_conj_p against explicit rotation."""
    result = SweepResult(f"free rotations size {alphabet_size} length <= {max_length}")
    for n in range(max_length + 1):
        words = list(positive_words(alphabet_size, n))
        for u in words:
            rotations = {u[k:] + u[:k] for k in range(max(n, 1))}
            for v in words:
                result.checked += 1
                if free_conj_p(u, v) != (v in rotations):
                    result.violations.append(f"{u} / {v}")
    return _finish(result)


def sweep_pn_presentation(ranks=range(2, 6)) -> SweepResult:
    """The P_n rules are monadic, length reducing and locally confluent."""
    result = SweepResult("P_n presentation completeness")
    for rank in ranks:
        system = pn_system(rank)
        flags = classify(system)
        result.checked += 1
        if not (flags.monadic and flags.length_reducing and is_locally_confluent(system)):
            result.violations.append(f"rank {rank}: {flags}")
    return _finish(result)


def sweep_example22(max_length: int = 8) -> SweepResult:
    """Normal forms of example22 are b^k followed by a word over {a, c}."""
    result = SweepResult(f"example22 normal forms length <= {max_length}")
    system = make_example22().system
    for level in all_words(system, max_length):
        for w in level:
            result.checked += 1
            names = [letter.name for letter in normalize(system, w).letters]
            k = 0
            while k < len(names) and names[k] == "b":
                k += 1
            if "b" in names[k:]:
                result.violations.append(f"{w} -> {''.join(names)}")
    return _finish(result)


def sweep_onerel(max_k: int = 5) -> SweepResult:
    """∼p by oracle is equality on normal forms; the o-decider is universal."""
    result = SweepResult(f"one-relator powers k <= {max_k}")
    for k in range(1, max_k + 1):
        monoid = make_one_relator_power(k)
        forms = normal_forms(monoid, k + 1)
        for u in forms:
            for v in forms:
                result.checked += 1
                found = oracle_conj_p(monoid.system, u, v, len(u) + len(v)).found
                if found != (u == v):
                    result.violations.append(f"k={k}: p-oracle on ({u}, {v}) gives {found}")
                if not monoid.deciders["o"](u, v).related:
                    result.violations.append(f"k={k}: o-decider rejects ({u}, {v})")
    return _finish(result)


def sweep_tin1(max_length: int = 6) -> SweepResult:
    """
    On the trivial base: |·|_b is invariant under reduction, and the b-count
    decider agrees with verifying its conjugators by normal forms.
    """
    result = SweepResult(f"tin1-trivial words length <= {max_length}")
    monoid = make_tin1()
    system = monoid.system
    b = Letter.symbol("b")
    words = [w for level in all_words(system, max_length) for w in level]

    for w in words:
        result.checked += 1
        if count_letter(w, b) != count_letter(normalize(system, w), b):
            result.violations.append(f"b-count of {w} changes under reduction")

    for u in words:
        for v in words:
            result.checked += 1
            decided = monoid.deciders["c"](u, v).related
            witness = tin1_c_witness(u, v)
            verified = witness is not None and all(
                normalize(system, left + g) == normalize(system, g + right)
                for (left, right), g in (((u, v), witness[0]), ((v, u), witness[1]))
            )
            if decided != verified:
                result.violations.append(f"({u}, {v}): decider {decided}, witness check {verified}")
    return _finish(result)


# Each entry takes the universe size and the multiplier bound for the membership check.
SWEEPS: Dict[str, Callable[[int, int], List[SweepResult]]] = {
    "arithmetic": lambda n, bound: [sweep_arithmetic(2, n), sweep_associativity(2, min(n, 2))],
    "ccp": lambda n, bound: [sweep_ccp(2, n)],
    "p56": lambda n, bound: [sweep_p56(2, n)],
    "p53": lambda n, bound: [sweep_p53(2, min(n, 2))],
    "rho": lambda n, bound: [sweep_rho_zero(2, n)],
    "lpp": lambda n, bound: [sweep_lpp(2, n, bound), sweep_lpp(3, n, bound)],
    "idempotents": lambda n, bound: [sweep_idempotents(2, n + 1)],
    "rotations": lambda n, bound: [sweep_free_rotations(2, 2 * n + 2)],
    "presentation": lambda n, bound: [sweep_pn_presentation()],
    "zoo": lambda n, bound: [sweep_example22(), sweep_onerel(), sweep_tin1()],
}


def run_sweeps(
    names: Optional[List[str]] = None, max_component: int = 2, probe_bound: int = 4
) -> List[SweepResult]:
    """Run the named sweeps (all by default) at the given universe size."""
    selected = names or list(SWEEPS)
    results: List[SweepResult] = []
    for name in selected:
        results.extend(SWEEPS[name](max_component, probe_bound))
    return results
