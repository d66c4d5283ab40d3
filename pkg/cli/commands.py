# cli/commands.py
"""
Command implementations. Each takes the parsed arguments and the loaded
Config and returns a CommandResult; nothing here prints or exits.
"""

import argparse
import time
from typing import Callable, Dict, Optional, Tuple

from analysis.benchmark import run_bench
from analysis.conjugacy import decide
from analysis.oracles import oracle_conj_c_pn, oracle_conj_p, oracle_conj_p_pn, search_conj_o
from analysis.polycyclic import element_to_word, multiply, reduce
from analysis.verification import run_sweeps
from analysis.zoo import c_search_m0, normal_forms, separation_report
from core.rewriting import classify, critical_pairs, describe, normalize
from core.words import parse_word
from models.command_result import CommandResult
from models.config_models import Config
from models.errors import RelationNotDefinedError
from models.rewrite_system import RewriteSystem
from models.verdicts import ConjVerdict
from models.word import Word
from models.zoo_monoid import ZooMonoid
from parsers.rule_parser import RuleFileParser
from parsers.system_factory import SystemFactory

import logging
logger = logging.getLogger(__name__)

ZOO_NORMAL_FORM_LENGTH = 4


def resolve_target(args: argparse.Namespace, config: Config) -> ZooMonoid:
    """The monoid named by --rules or --preset (default pn)."""
    rank = args.rank if getattr(args, "rank", None) is not None else config.engine.default_rank
    if getattr(args, "rules", None):
        factory = SystemFactory(RuleFileParser(default_rank=getattr(args, "rank", None)))
        return factory.from_file(args.rules)
    preset = getattr(args, "preset", None) or "pn"
    return SystemFactory().get(preset, rank=rank, k=getattr(args, "k", None), base=getattr(args, "base", None))


def parse_input(system: RewriteSystem, text: str) -> Word:
    if system.is_symbolic:
        return parse_word(text, alphabet=system.symbols)
    return parse_word(text, rank=system.rank)


def _is_pn(monoid: ZooMonoid) -> bool:
    return monoid.system.family == "pn"


def _timed(fn: Callable):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def _witness(pair: Optional[Tuple]) -> Optional[list]:
    return [str(w) for w in pair] if pair else None


def cmd_reduce(args: argparse.Namespace, config: Config) -> CommandResult:
    monoid = resolve_target(args, config)
    w = parse_input(monoid.system, args.word)
    if _is_pn(monoid):
        value, elapsed = _timed(lambda: reduce(w))
        form = str(element_to_word(value))
    else:
        value, elapsed = _timed(lambda: normalize(monoid.system, w))
        form = str(value)
    return CommandResult("reduce", normal_forms=[form], timings={"reduce": elapsed})


def cmd_mul(args: argparse.Namespace, config: Config) -> CommandResult:
    monoid = resolve_target(args, config)
    u = parse_input(monoid.system, args.left)
    v = parse_input(monoid.system, args.right)
    if _is_pn(monoid):
        value, elapsed = _timed(lambda: multiply(reduce(u), reduce(v)))
        form = str(element_to_word(value))
    else:
        value, elapsed = _timed(lambda: normalize(monoid.system, u + v))
        form = str(value)
    return CommandResult("mul", normal_forms=[form], timings={"mul": elapsed})


def _verdict_result(command: str, verdict: ConjVerdict, forms, elapsed: float, rel: str) -> CommandResult:
    details = {"relation": rel}
    lines = []
    if verdict.via is not None:
        details["via"] = str(verdict.via)
        lines.append(f"via: {verdict.via}")
    return CommandResult(
        command,
        verdict="YES" if verdict.related else "NO",
        witness=_witness(verdict.witness),
        normal_forms=[str(f) for f in forms],
        timings={command: elapsed},
        details=details,
        lines=lines,
    )


def cmd_conj(args: argparse.Namespace, config: Config) -> CommandResult:
    monoid = resolve_target(args, config)
    u = parse_input(monoid.system, args.left)
    v = parse_input(monoid.system, args.right)

    if _is_pn(monoid):
        a, b = reduce(u), reduce(v)
        verdict, elapsed = _timed(lambda: decide(args.rel, a, b))
        return _verdict_result("conj", verdict, [element_to_word(a), element_to_word(b)], elapsed, args.rel)

    if not monoid.supports(args.rel):
        raise RelationNotDefinedError(
            f"{monoid.name} has no decider for relation {args.rel!r}; try the oracle command"
        )
    verdict, elapsed = _timed(lambda: monoid.deciders[args.rel](u, v))
    forms = [u, v]
    if classify(monoid.system).length_reducing:
        forms = [normalize(monoid.system, u), normalize(monoid.system, v)]
    return _verdict_result("conj", verdict, forms, elapsed, args.rel)


def _oracle_pn(rel: str, u: Word, v: Word, bound: Optional[int], monoid: ZooMonoid, config: Config):
    a, b = reduce(u), reduce(v)
    limit = bound if bound is not None else a.length + b.length
    if rel == "p":
        return oracle_conj_p_pn(a, b, limit), [a, b], limit
    if rel == "c":
        return oracle_conj_c_pn(a, b, limit), [a, b], limit
    if rel == "o":
        result = search_conj_o(monoid.system, element_to_word(a), element_to_word(b), limit,
                               depth=config.oracle.congruence_depth)
        return result, [a, b], limit
    raise RelationNotDefinedError(f"no oracle for relation {rel!r}")


def _oracle_zoo(rel: str, u: Word, v: Word, bound: Optional[int], monoid: ZooMonoid, config: Config):
    system = monoid.system
    forms = [u, v]
    if classify(system).length_reducing:
        forms = [normalize(system, u), normalize(system, v)]
    limit = bound if bound is not None else len(forms[0]) + len(forms[1])
    if rel == "p":
        return oracle_conj_p(system, u, v, limit), forms, limit
    if rel == "o":
        return search_conj_o(system, u, v, limit, depth=config.oracle.congruence_depth), forms, limit
    if rel == "c" and monoid.zero_adjoined:
        return c_search_m0(monoid, u, v, limit), forms, limit
    raise RelationNotDefinedError(f"no oracle for relation {rel!r} on {monoid.name}")


def cmd_oracle(args: argparse.Namespace, config: Config) -> CommandResult:
    monoid = resolve_target(args, config)
    u = parse_input(monoid.system, args.left)
    v = parse_input(monoid.system, args.right)
    bound = args.bound if args.bound is not None else config.oracle.bound

    search = _oracle_pn if _is_pn(monoid) else _oracle_zoo
    (result, forms, limit), elapsed = _timed(lambda: search(args.rel, u, v, bound, monoid, config))
    return CommandResult(
        "oracle",
        verdict=result.verdict.value,
        witness=_witness(result.witness),
        normal_forms=[str(element_to_word(f)) if _is_pn(monoid) else str(f) for f in forms],
        timings={"oracle": elapsed},
        details={"relation": args.rel, "bound": limit, "explored": result.explored},
    )


def cmd_critpairs(args: argparse.Namespace, config: Config) -> CommandResult:
    monoid = resolve_target(args, config)
    pairs = critical_pairs(monoid.system)
    summary = describe(monoid.system)
    lines = [str(pair) for pair in pairs]
    lines.append(f"{len(pairs)} critical pairs; locally confluent: {summary['locally_confluent']}")
    return CommandResult(
        "critpairs",
        details={
            "critical_pairs": [
                {"overlap": str(p.overlap), "left": str(p.left), "right": str(p.right)}
                for p in pairs
            ],
            "locally_confluent": summary["locally_confluent"],
        },
        lines=lines,
    )


def cmd_classify(args: argparse.Namespace, config: Config) -> CommandResult:
    monoid = resolve_target(args, config)
    summary = describe(monoid.system)
    lines = [f"{monoid.system.name}: {len(monoid.system.rules)} rules"]
    lines += [f"  {key}: {summary[key]}" for key in
              ("special", "monadic", "length_reducing", "critical_pairs", "locally_confluent")]
    return CommandResult("classify", details=summary, lines=lines)


def cmd_zoo(args: argparse.Namespace, config: Config) -> CommandResult:
    if args.target == "separation":
        report = separation_report(config.oracle.o_search_bound)
        lines = []
        for entry in report.entries:
            witness = f" via {', '.join(entry.witness)}" if entry.witness else ""
            note = f" ({entry.note})" if entry.note else ""
            lines.append(f"{entry.monoid} {entry.relation}: ({entry.left}, {entry.right}) "
                         f"{entry.outcome}{witness}{note}")
        for r1, r2, left, right in report.separated:
            lines.append(f"~{r1} != ~{r2}: ({left}, {right})")
        lines.append(f"c-class of 0: {{{', '.join(report.zero_c_class)}}}")
        lines.append(f"~o universal on {report.o_universal_checked} sampled pairs: {report.o_universal_holds}")
        return CommandResult("zoo", details=report.to_dict(), lines=lines)

    monoid = SystemFactory().get(args.target)
    summary = describe(monoid.system)
    forms = []
    if summary["length_reducing"]:
        forms = [str(w) for w in normal_forms(monoid, args.max_length or ZOO_NORMAL_FORM_LENGTH)]
    lines = [monoid.summary(), f"  provenance: {monoid.provenance}"]
    lines += [f"  rule: {rule}" for rule in monoid.system.rules]
    if forms:
        lines.append(f"  normal forms: {' '.join(forms)}")
    return CommandResult(
        "zoo",
        normal_forms=forms,
        details={"monoid": monoid.name, "deciders": sorted(monoid.deciders), **summary},
        lines=lines,
    )


def cmd_bench(args: argparse.Namespace, config: Config) -> CommandResult:
    rank = args.rank if args.rank is not None else config.bench.rank
    lengths = args.lengths if args.lengths is not None else config.bench.lengths
    trials = args.trials if args.trials is not None else config.bench.trials
    seed = args.seed if args.seed is not None else config.bench.seed

    report = run_bench(rank, lengths, trials, seed)
    return CommandResult(
        "bench",
        timings={"total": report.total_seconds},
        details=report.to_dict(),
        lines=[report.summary()],
    )


def cmd_verify(args: argparse.Namespace, config: Config) -> CommandResult:
    results = run_sweeps(args.sweep or None, args.max_component, config.oracle.probe_bound)
    lines = [
        f"{'ok  ' if r.passed else 'FAIL'} {r.name}: {r.checked} checked, {len(r.violations)} violations"
        for r in results
    ]
    for r in results:
        lines += [f"  {violation}" for violation in r.violations[:10]]
    failed = any(not r.passed for r in results)
    return CommandResult(
        "verify",
        details={"sweeps": [r.to_dict() for r in results]},
        lines=lines,
        exit_code=1 if failed else 0,
    )


COMMANDS: Dict[str, Callable[[argparse.Namespace, Config], CommandResult]] = {
    "reduce": cmd_reduce,
    "mul": cmd_mul,
    "conj": cmd_conj,
    "oracle": cmd_oracle,
    "critpairs": cmd_critpairs,
    "classify": cmd_classify,
    "zoo": cmd_zoo,
    "bench": cmd_bench,
    "verify": cmd_verify,
}
