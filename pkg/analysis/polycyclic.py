# analysis/polycyclic.py
"""
Canonical arithmetic of the polycyclic monoid P_n.

Elements are kept as pairs (y, x) of positive words standing for y·x⁻¹,
or Zero. Multiplication, cyclic reduction and ρ work directly on the pair;
the rewriting engine is only used to bring arbitrary words into this shape.
"""

from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, List, Sequence, Tuple

from core.rewriting import normalize
from core.words import is_prefix, is_prefix_comparable
from models.element import CyclicDecomposition, PnElement
from models.errors import PreconditionError, RankMismatchError
from models.rewrite_system import RewriteSystem, Rule
from models.verdicts import MembershipResult, MembershipVerdict
from models.word import Letter, LetterKind, PositiveWord, Word, ZERO

import logging
logger = logging.getLogger(__name__)

MIN_RANK = 2


def check_rank(rank: int):
    if rank < MIN_RANK:
        raise PreconditionError(f"P_n needs rank n >= {MIN_RANK}, got {rank}")


def same_rank(*elements: PnElement) -> int:
    """Common rank of the operands."""
    ranks = {e.rank for e in elements}
    if len(ranks) != 1:
        raise RankMismatchError(f"operands have ranks {sorted(ranks)}")
    return ranks.pop()


@lru_cache(maxsize=32)
def pn_system(rank: int) -> RewriteSystem:
    """
    The complete monadic presentation of P_n: q_i p_i → 1, q_i p_j → 0 (i ≠ j),
    together with the zero rules x0 → 0, 0x → 0 and 00 → 0.
    """
    check_rank(rank)

    def w(*letters: Letter) -> Word:
        return Word(letters, rank)

    rules: List[Rule] = []
    for i in range(1, rank + 1):
        for j in range(1, rank + 1):
            rhs = w() if i == j else w(ZERO)
            rules.append(Rule(w(Letter.negative(i), Letter.positive(j)), rhs))

    generators = [Letter.positive(i) for i in range(1, rank + 1)]
    generators += [Letter.negative(i) for i in range(1, rank + 1)]
    rules += [Rule(w(x, ZERO), w(ZERO)) for x in generators]
    rules += [Rule(w(ZERO, x), w(ZERO)) for x in generators]
    rules.append(Rule(w(ZERO, ZERO), w(ZERO)))

    system = RewriteSystem(
        rules=tuple(rules),
        rank=rank,
        has_zero=True,
        name=f"pn-{rank}",
        family="pn",
        params=(("rank", rank),),
    )
    logger.debug(f"built {system.name} with {len(rules)} rules")
    return system


def word_to_element(w: Word) -> PnElement:
    """
    Read an irreducible word (p-letters then q-letters, or the single 0).

    Raises:
        PreconditionError: if w is not of irreducible shape
    """
    letters = w.letters
    if w.has_zero:
        if len(letters) != 1:
            raise PreconditionError(f"{w} is not irreducible")
        return PnElement.zero(w.rank)

    split = 0
    while split < len(letters) and letters[split].kind is LetterKind.POSITIVE:
        split += 1
    tail = letters[split:]
    if any(letter.kind is not LetterKind.NEGATIVE for letter in tail):
        raise PreconditionError(f"{w} is not irreducible")

    y = tuple(letter.index for letter in letters[:split])
    x = tuple(letter.index for letter in reversed(tail))
    return PnElement.of(w.rank, y, x)


def element_to_word(a: PnElement) -> Word:
    """The irreducible word y·x⁻¹ (or 0) of a."""
    if a.is_zero:
        return Word((ZERO,), a.rank)
    letters = tuple(Letter.positive(i) for i in a.y)
    letters += tuple(Letter.negative(i) for i in reversed(a.x))
    return Word(letters, a.rank)


def reduce(w: Word) -> PnElement:
    """Unique irreducible representative of w in P_n, in time linear in |w|."""
    return word_to_element(normalize(pn_system(w.rank), w))


def multiply(a: PnElement, b: PnElement) -> PnElement:
    """
    (y x⁻¹)(v u⁻¹) is y z u⁻¹ when v = x z, y (u z)⁻¹ when x = v z,
    and 0 when x and v are not prefix-comparable.
    """
    rank = same_rank(a, b)
    if a.is_zero or b.is_zero:
        return PnElement.zero(rank)

    x, v = a.x, b.y
    if is_prefix(x, v):
        return PnElement.of(rank, a.y + v[len(x):], b.x)
    if is_prefix(v, x):
        return PnElement.of(rank, a.y, b.x + x[len(v):])
    return PnElement.zero(rank)


def _common_prefix_length(u: Sequence, v: Sequence) -> int:
    n = 0
    for left, right in zip(u, v):
        if left != right:
            break
        n += 1
    return n


def cyclic_reduce(a: PnElement) -> CyclicDecomposition:
    """a = r·ã·r⁻¹ where r is the longest common prefix of y and x."""
    if a.is_zero:
        return CyclicDecomposition((), a)
    n = _common_prefix_length(a.y, a.x)
    return CyclicDecomposition(a.y[:n], PnElement.of(a.rank, a.y[n:], a.x[n:]))


def rho(a: PnElement) -> PnElement:
    """Reduction of x⁻¹y: z if y = xz, z⁻¹ if x = yz, otherwise 0. ρ(0) = 0."""
    if a.is_zero:
        return a
    y, x = a.y, a.x
    if is_prefix(x, y):
        return PnElement.of(a.rank, y[len(x):], ())
    if is_prefix(y, x):
        return PnElement.of(a.rank, (), x[len(y):])
    return PnElement.zero(a.rank)


def product_core(
    rank: int, p: PositiveWord, q: PositiveWord, r: PositiveWord, s: PositiveWord
) -> PnElement:
    """
    Cyclically reduced core of the nonzero product p q⁻¹ · r s⁻¹.

    With r = q t or q = r t, and p = s l or s = p l, the core is
    l t, the core of t l⁻¹, the core of l t⁻¹, or (l t)⁻¹ respectively.

    Raises:
        PreconditionError: q and r are not prefix-comparable (the product is 0)
    """
    check_rank(rank)
    if not is_prefix_comparable(q, r):
        raise PreconditionError("q and r are not prefix-comparable; the product is 0")

    r_extends_q = is_prefix(q, r)
    t = r[len(q):] if r_extends_q else q[len(r):]

    if is_prefix(s, p):
        l = p[len(s):]
        if r_extends_q:
            return PnElement.of(rank, l + t, ())
        return cyclic_reduce(PnElement.of(rank, l, t)).core
    if is_prefix(p, s):
        l = s[len(p):]
        if r_extends_q:
            return cyclic_reduce(PnElement.of(rank, t, l)).core
        return PnElement.of(rank, (), l + t)

    # p and s diverge: the product is already cyclically reduced
    value = multiply(PnElement.of(rank, p, q), PnElement.of(rank, r, s))
    return cyclic_reduce(value).core


def pp_member(g: PnElement, a: PnElement) -> bool:
    """g = r s⁻¹ lies in 𝒫(y x⁻¹) iff r is a prefix of x; 𝒫(0) = {0}."""
    same_rank(g, a)
    if a.is_zero:
        return g.is_zero
    if g.is_zero:
        return False
    return is_prefix(g.y, a.x)


def positive_words(rank: int, length: int) -> Iterator[PositiveWord]:
    """All positive words of the given length, lexicographically."""
    return product(range(1, rank + 1), repeat=length)


def elements_of_length(rank: int, length: int) -> List[PnElement]:
    """
    All elements whose irreducible word has exactly `length` letters, in
    lexicographic word order (p-letters before q-letters; 0 has length 1).
    """
    found = []
    for split in range(length + 1):
        for y in positive_words(rank, split):
            for x in positive_words(rank, length - split):
                found.append(PnElement.of(rank, y, x))
    if length == 1:
        found.append(PnElement.zero(rank))
    found.sort(key=lambda e: e.sort_key)
    return found


def elements_up_to_length(rank: int, max_length: int) -> Iterator[PnElement]:
    for length in range(max_length + 1):
        yield from elements_of_length(rank, length)


def enumerate_elements(rank: int, max_component: int) -> List[PnElement]:
    """Zero and every y x⁻¹ with |y|, |x| ≤ max_component, by (length, lexicographic)."""
    check_rank(rank)
    words = [w for n in range(max_component + 1) for w in positive_words(rank, n)]
    elements = [PnElement.of(rank, y, x) for y in words for x in words]
    elements.append(PnElement.zero(rank))
    elements.sort(key=lambda e: e.sort_key)
    return elements


def nonzero_multipliers(a: PnElement, probe_bound: int) -> List[PnElement]:
    """
    Every m = r s⁻¹ of word length at most probe_bound with m·a ≠ 0, in
    (length, lexicographic) order. For a = y x⁻¹ these are exactly the m whose
    s is prefix-comparable with y.
    """
    if a.is_zero:
        return []
    rank, y = a.rank, a.y
    inverse_parts = [y[:n] for n in range(min(len(y), probe_bound) + 1)]
    inverse_parts += [
        y + t
        for n in range(1, probe_bound - len(y) + 1)
        for t in positive_words(rank, n)
    ]
    found = [
        PnElement.of(rank, r, s)
        for s in inverse_parts
        for n in range(probe_bound - len(s) + 1)
        for r in positive_words(rank, n)
    ]
    found.sort(key=lambda e: e.sort_key)
    return found


@lru_cache(maxsize=8192)
def _multiplier_products(a: PnElement, probe_bound: int) -> Tuple[Tuple[PnElement, PositiveWord], ...]:
    # first m for each distinct x-component of the nonzero products m·a
    first: Dict[PositiveWord, PnElement] = {}
    for m in nonzero_multipliers(a, probe_bound):
        first.setdefault(multiply(m, a).x, m)
    return tuple((m, z) for z, m in first.items())


def pp_member_definitional(g: PnElement, a: PnElement, probe_bound: int) -> MembershipResult:
    """
    Test "m a g = 0 implies m a = 0" for every m of word length at most probe_bound.

    𝒫(0) = {0}: for a = 0 a nonzero g is rejected with counterexample m = 1.
    Only m with m·a ≠ 0 can fail, and (u z⁻¹)·g vanishes exactly when z and
    the positive part of g are not prefix-comparable, so products sharing z
    are checked once.

    Returns:
        FALSE with the first failing m, or TRUE_AT_BOUND
    """
    if probe_bound < 0:
        raise PreconditionError("probe_bound must be non-negative")
    rank = same_rank(g, a)
    if a.is_zero:
        if g.is_zero:
            return MembershipResult(MembershipVerdict.TRUE_AT_BOUND)
        return MembershipResult(MembershipVerdict.FALSE, PnElement.one(rank))

    for m, z in _multiplier_products(a, probe_bound):
        if g.is_zero or not is_prefix_comparable(z, g.y):
            return MembershipResult(MembershipVerdict.FALSE, m)
    return MembershipResult(MembershipVerdict.TRUE_AT_BOUND)


def inverse(a: PnElement) -> PnElement:
    """Inverse-monoid inverse: (y x⁻¹)⁻¹ = x y⁻¹ and 0⁻¹ = 0."""
    if a.is_zero:
        return a
    return PnElement.of(a.rank, a.x, a.y)


def is_idempotent(a: PnElement) -> bool:
    """a·a = a; for nonzero a this is ã = 1. Zero is idempotent."""
    return a.is_zero or a.y == a.x


def idempotent(rank: int, x: Sequence[int]) -> PnElement:
    """The idempotent x x⁻¹."""
    return PnElement.of(rank, x, x)
