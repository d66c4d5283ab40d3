# analysis/conjugacy.py
"""
Deciders for the conjugacy relations of P_n.

  p      a = uv and b = vu for some u, v
  pstar  transitive closure of p
  c      ag = gb, bh = ha with g ∈ 𝒫(a), h ∈ 𝒫(b)
  o      ag = gb, bh = ha for arbitrary g, h (universal, P_n has a zero)

Every decider runs in time linear in |a| + |b| and returns the conjugators
it can read off the decomposition a = r ã r⁻¹.
"""

from typing import Callable, Dict, List, Sequence

from analysis.polycyclic import cyclic_reduce, rho, same_rank
from core.matching import rotation_offset
from models.element import PnElement
from models.errors import RelationNotDefinedError
from models.verdicts import ConjVerdict
from models.word import PositiveWord

import logging
logger = logging.getLogger(__name__)

NOT_RELATED = ConjVerdict(False)


def free_conj_p(u: Sequence, v: Sequence) -> bool:
    """u ∼p v in a free monoid: v is a cyclic rotation of u."""
    return rotation_offset(u, v) >= 0


def _split_rotation(t: PositiveWord, z: PositiveWord):
    """(t1, t2) with t = t1 t2 and z = t2 t1, or None."""
    k = rotation_offset(t, z)
    if k < 0:
        return None
    return t[:k], t[k:]


def conj_p(a: PnElement, b: PnElement) -> ConjVerdict:
    """
    a ∼p b iff one of
      - a = 0 and ρ(b) = 0, or b = 0 and ρ(a) = 0
      - ρ(a) = ρ(b) = 0 and ã = b̃
      - ã, b̃ both positive (or both negative) and rotations of each other

    The witness is a pair (u, v) with a = uv and b = vu.
    """
    rank = same_rank(a, b)
    zero = PnElement.zero(rank)

    if a.is_zero and b.is_zero:
        return ConjVerdict(True, (zero, zero))
    if a.is_zero:
        if not rho(b).is_zero:
            return NOT_RELATED
        return ConjVerdict(True, (PnElement.of(rank, (), b.x), PnElement.of(rank, b.y, ())))
    if b.is_zero:
        if not rho(a).is_zero:
            return NOT_RELATED
        return ConjVerdict(True, (PnElement.of(rank, a.y, ()), PnElement.of(rank, (), a.x)))

    da, db = cyclic_reduce(a), cyclic_reduce(b)
    ca, cb = da.core, db.core
    a_mixed, b_mixed = rho(a).is_zero, rho(b).is_zero

    if a_mixed or b_mixed:
        if not (a_mixed and b_mixed) or ca != cb:
            return NOT_RELATED
        r, s = da.r, db.r
        u = PnElement.of(rank, r + ca.y, s + ca.x)
        v = PnElement.of(rank, s, r)
        return ConjVerdict(True, (u, v))

    p, q = da.r, db.r
    if not ca.x and not cb.x:
        split = _split_rotation(ca.y, cb.y)
        if split is None:
            return NOT_RELATED
        head, tail = split
        return ConjVerdict(True, (PnElement.of(rank, p + head, q), PnElement.of(rank, q + tail, p)))

    if not ca.y and not cb.y:
        split = _split_rotation(ca.x, cb.x)
        if split is None:
            return NOT_RELATED
        head, tail = split
        return ConjVerdict(True, (PnElement.of(rank, p, q + tail), PnElement.of(rank, q, p + head)))

    return NOT_RELATED


def conj_p_star(a: PnElement, b: PnElement) -> ConjVerdict:
    """
    a ∼p* b iff a ∼p b, or both are p-conjugate to 0 (ρ(a) = ρ(b) = 0).

    A direct pair carries the ∼p witness; a chain through 0 carries via = 0.
    """
    direct = conj_p(a, b)
    if direct.related:
        return direct
    if rho(a).is_zero and rho(b).is_zero:
        return ConjVerdict(True, via=PnElement.zero(a.rank))
    return NOT_RELATED


def conj_c(a: PnElement, b: PnElement) -> ConjVerdict:
    """
    a ∼c b iff a = b = 0, or ã = b̃, or ã = t⁻¹ and b̃ = z⁻¹ with z a rotation of t.

    The witness is (g, h) with g ∈ 𝒫(a), h ∈ 𝒫(b), ag = gb and bh = ha.
    """
    rank = same_rank(a, b)
    if a.is_zero and b.is_zero:
        zero = PnElement.zero(rank)
        return ConjVerdict(True, (zero, zero))
    if a.is_zero or b.is_zero:
        return NOT_RELATED

    da, db = cyclic_reduce(a), cyclic_reduce(b)
    r, s = da.r, db.r
    ca, cb = da.core, db.core

    if ca == cb:
        return ConjVerdict(True, (PnElement.of(rank, r, s), PnElement.of(rank, s, r)))

    if not ca.y and not cb.y:
        split = _split_rotation(ca.x, cb.x)
        if split is not None:
            head, tail = split
            g = PnElement.of(rank, r, s + tail)
            h = PnElement.of(rank, s, r + head)
            return ConjVerdict(True, (g, h))

    return NOT_RELATED


def conj_o(a: PnElement, b: PnElement) -> ConjVerdict:
    """Universal: g = h = 0 always works in a monoid with zero."""
    zero = PnElement.zero(same_rank(a, b))
    return ConjVerdict(True, (zero, zero))


DECIDERS: Dict[str, Callable[[PnElement, PnElement], ConjVerdict]] = {
    "p": conj_p,
    "pstar": conj_p_star,
    "c": conj_c,
    "o": conj_o,
}


def decide(rel: str, a: PnElement, b: PnElement) -> ConjVerdict:
    """Dispatch to the decider for relation `rel` (p, pstar, c or o)."""
    decider = DECIDERS.get(rel)
    if decider is None:
        raise RelationNotDefinedError(
            f"unknown relation {rel!r}; choose one of {', '.join(DECIDERS)}"
        )
    return decider(a, b)


def pstar_closure(sample: Sequence[PnElement]) -> List[List[PnElement]]:
    """
    Partition `sample` into classes of the transitive closure of pairwise ∼p.

    Classes are listed in order of first appearance.
    """
    parent = list(range(len(sample)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(sample)):
        for j in range(i + 1, len(sample)):
            if find(i) != find(j) and conj_p(sample[i], sample[j]).related:
                parent[find(j)] = find(i)

    classes: Dict[int, List[PnElement]] = {}
    for i, element in enumerate(sample):
        classes.setdefault(find(i), []).append(element)
    logger.debug(f"{len(sample)} elements fall into {len(classes)} p*-classes")
    return list(classes.values())
