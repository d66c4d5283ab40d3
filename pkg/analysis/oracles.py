# analysis/oracles.py
"""
Bounded brute-force searches for conjugators.

These never consult the conjugacy characterisations; candidates are only
pruned with the prefix rules of multiplication, and every hit is checked by
multiplying out. A negative answer means "none up to the bound".
"""

from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from analysis.polycyclic import (
    elements_up_to_length, multiply, positive_words, reduce, same_rank,
)
from core.rewriting import (
    all_words, congruent, irreducible_words, is_complete, normalize, require_complete,
)
from core.words import is_prefix
from models.element import PnElement
from models.errors import PreconditionError
from models.rewrite_system import RewriteSystem
from models.verdicts import OracleResult, OracleVerdict
from models.word import PositiveWord, Word

import logging
logger = logging.getLogger(__name__)

DEFAULT_CONGRUENCE_DEPTH = 6

WordFilter = Callable[[Word], bool]


def _prefixes(w: PositiveWord) -> List[PositiveWord]:
    return [w[:k] for k in range(len(w) + 1)]


def _words_up_to(rank: int, max_length: int) -> List[PositiveWord]:
    return [w for n in range(max_length + 1) for w in positive_words(rank, n)]


def _pair_key(u: PnElement, v: PnElement) -> Tuple:
    return (u.length + v.length, u.length, u.sort_key, v.sort_key)


def _check_bound(bound: int):
    if bound < 0:
        raise PreconditionError("bound must be non-negative")


# ---------------------------------------------------------------------------
# p-conjugacy
# ---------------------------------------------------------------------------

def _left_factors(a: PnElement, b: PnElement, bound: int) -> List[PnElement]:
    """
    Candidates u = p q⁻¹. A nonzero uv has y-component extending p, and a
    nonzero vu has x-component extending q.
    """
    rank = a.rank
    ps = _prefixes(a.y) if not a.is_zero else _words_up_to(rank, bound)
    qs = _prefixes(b.x) if not b.is_zero else _words_up_to(rank, bound)
    return [
        PnElement.of(rank, p, q)
        for p in ps for q in qs
        if len(p) + len(q) <= bound
    ]


def _right_factors_for_product(u: PnElement, a: PnElement) -> List[PnElement]:
    """All nonzero v with u·v = a (a and u nonzero)."""
    rank = a.rank
    p, q = u.y, u.x
    found = []
    if is_prefix(p, a.y):
        found.append(PnElement.of(rank, q + a.y[len(p):], a.x))
    if p == a.y:
        for k in range(1, min(len(q), len(a.x)) + 1):
            if q[len(q) - k:] == a.x[len(a.x) - k:]:
                found.append(PnElement.of(rank, q[:len(q) - k], a.x[:len(a.x) - k]))
    return found


def _left_factors_for_product(u: PnElement, b: PnElement) -> List[PnElement]:
    """All nonzero v with v·u = b (b and u nonzero)."""
    rank = b.rank
    p, q = u.y, u.x
    found = []
    if q == b.x:
        for k in range(min(len(p), len(b.y)) + 1):
            if p[len(p) - k:] == b.y[len(b.y) - k:]:
                found.append(PnElement.of(rank, b.y[:len(b.y) - k], p[:len(p) - k]))
    if is_prefix(q, b.x) and len(q) < len(b.x):
        found.append(PnElement.of(rank, b.y, p + b.x[len(q):]))
    return found


def oracle_conj_p_pn(a: PnElement, b: PnElement, bound: int) -> OracleResult:
    """
    Search u, v with |u|, |v| ≤ bound, a = uv and b = vu in P_n.

    u runs over the prefix-pruned candidates; v is solved from one equation
    and the other is checked by multiplication.
    """
    _check_bound(bound)
    rank = same_rank(a, b)
    explored = 0
    best: Optional[Tuple[PnElement, PnElement]] = None

    if a.is_zero and b.is_zero:
        pairs: Iterable = (
            (u, v)
            for u in elements_up_to_length(rank, bound)
            for v in elements_up_to_length(rank, bound)
        )
    else:
        def solved():
            for u in _left_factors(a, b, bound):
                if not a.is_zero:
                    vs = _right_factors_for_product(u, a)
                else:
                    vs = _left_factors_for_product(u, b)
                for v in vs:
                    if v.length <= bound:
                        yield u, v
        pairs = solved()

    for u, v in pairs:
        explored += 1
        if multiply(u, v) != a or multiply(v, u) != b:
            continue
        if best is None or _pair_key(u, v) < _pair_key(*best):
            best = (u, v)

    logger.debug(f"p-oracle {a} / {b} at bound {bound}: {explored} candidates")
    if best is None:
        return OracleResult(OracleVerdict.NO_AT_BOUND, None, explored)
    return OracleResult(OracleVerdict.YES, best, explored)


def oracle_conj_p(system: RewriteSystem, a: Word, b: Word, bound: int) -> OracleResult:
    """
    Search words u, v of length ≤ bound with uv = a and vu = b in the monoid
    presented by a complete system.

    Raises:
        IncompleteSystemError: normal forms are not certified unique
    """
    _check_bound(bound)
    if system.family == "pn":
        return oracle_conj_p_pn(reduce(a), reduce(b), bound)

    require_complete(system)
    target_a, target_b = normalize(system, a), normalize(system, b)
    words = irreducible_words(system, bound)
    explored = 0

    for total in range(2 * bound + 1):
        for left in range(max(0, total - bound), min(total, bound) + 1):
            for u in words[left]:
                for v in words[total - left]:
                    explored += 1
                    if normalize(system, u + v) == target_a \
                            and normalize(system, v + u) == target_b:
                        logger.debug(f"p-oracle hit after {explored} candidates")
                        return OracleResult(OracleVerdict.YES, (u, v), explored)

    return OracleResult(OracleVerdict.NO_AT_BOUND, None, explored)


# ---------------------------------------------------------------------------
# c-conjugacy in P_n
# ---------------------------------------------------------------------------

def _c_conjugator(a: PnElement, b: PnElement, bound: int) -> Tuple[Optional[PnElement], int]:
    """
    Least g ∈ 𝒫(a), components ≤ bound, with ag = gb; also the number of
    candidates tried.

    g = r s⁻¹ needs r a prefix of x. Then ag ≠ 0, so gb ≠ 0 forces s to be
    prefix-comparable with the y-component v of b. When s extends v, the
    products are y (sz)⁻¹ and r (uw)⁻¹, which can only agree if r = y.
    """
    rank = a.rank
    if a.is_zero:
        return PnElement.zero(rank), 1
    if b.is_zero:
        return None, 0

    v, u = b.y, b.x
    candidates = []
    for r in _prefixes(a.x):
        if len(r) > bound:
            continue
        ss = [s for s in _prefixes(v) if len(s) <= bound]
        z = a.x[len(r):]
        if r == a.y and is_prefix(v, u) and len(v) + len(z) == len(u):
            ss += [v + w for w in _words_up_to(rank, bound - len(v)) if w]
        candidates += [PnElement.of(rank, r, s) for s in ss]

    candidates.sort(key=lambda g: g.sort_key)
    for tried, g in enumerate(candidates, 1):
        if multiply(a, g) == multiply(g, b):
            return g, tried
    return None, len(candidates)


def oracle_conj_c_pn(a: PnElement, b: PnElement, bound: int) -> OracleResult:
    """
    Search g ∈ 𝒫(a), h ∈ 𝒫(b) with components ≤ bound, ag = gb and bh = ha.

    Membership in 𝒫 is taken as "first component is a prefix of x"; g and h
    are searched independently and each is the least candidate found.
    """
    _check_bound(bound)
    same_rank(a, b)
    g, tried_g = _c_conjugator(a, b, bound)
    h, tried_h = _c_conjugator(b, a, bound) if g is not None else (None, 0)
    explored = tried_g + tried_h

    logger.debug(f"c-oracle {a} / {b} at bound {bound}: {explored} candidates")
    if g is None or h is None:
        return OracleResult(OracleVerdict.NO_AT_BOUND, None, explored)
    return OracleResult(OracleVerdict.YES, (g, h), explored)


# ---------------------------------------------------------------------------
# o- and c-conjugacy in the example monoids
# ---------------------------------------------------------------------------

def _first_conjugator(
    system: RewriteSystem,
    left: Word,
    right: Word,
    candidates: Sequence[Word],
    conjugator_filter: Optional[WordFilter],
    depth: int,
) -> Tuple[Optional[Word], int]:
    tried = 0
    for g in candidates:
        if conjugator_filter is not None and not conjugator_filter(g):
            continue
        tried += 1
        if congruent(system, left + g, g + right, depth):
            return g, tried
    return None, tried


def search_conj_o(
    system: RewriteSystem,
    a: Word,
    b: Word,
    bound: int,
    conjugator_filter: Optional[WordFilter] = None,
    depth: int = DEFAULT_CONGRUENCE_DEPTH,
) -> OracleResult:
    """
    Search words g, h of length ≤ bound with ag = gb and bh = ha.

    On a complete system only irreducible words are tried and equality is
    decided by normal forms; otherwise every word is tried and equality needs
    a chain of at most `depth` rule applications. `conjugator_filter`
    restricts the admissible g and h (c-conjugacy in M⁰ uses "nonzero").
    """
    _check_bound(bound)
    if is_complete(system):
        levels = irreducible_words(system, bound)
    else:
        levels = all_words(system, bound)
    candidates = [w for level in levels for w in level]

    g, tried_g = _first_conjugator(system, a, b, candidates, conjugator_filter, depth)
    h, tried_h = (None, 0)
    if g is not None:
        h, tried_h = _first_conjugator(system, b, a, candidates, conjugator_filter, depth)
    explored = tried_g + tried_h

    logger.debug(f"o-search {a} / {b} in {system.name} at bound {bound}: {explored} candidates")
    if g is None or h is None:
        return OracleResult(OracleVerdict.NO_AT_BOUND, None, explored)
    return OracleResult(OracleVerdict.YES, (g, h), explored)
