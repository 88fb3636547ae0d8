"""M_a, P_a, z-ideal and z-degree-zero ideal predicates, and the least
z-degree-zero ideal above a given ideal (written ``zo`` throughout).

``m_of(ring, a)`` intersects the maximal ideals containing ``a``;
``p_of`` does the same over minimal primes.  The empty intersection is
the whole ring, so units map to R.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .ideals import IdealSet, element_ann_masks, generated_ideal, members_of
from .rings import RingTable, require_nontrivial
from .spectrum import compute_spectrum


@lru_cache(maxsize=None)
def _m_masks(ring: RingTable) -> tuple[int, ...]:
    view = compute_spectrum(ring)
    maximal = [view.primes.ideals[i].mask for i in view.maximal_indices()]
    full = (1 << ring.size) - 1
    out = []
    for a in ring.elements:
        m = full
        for pm in maximal:
            if pm >> a & 1:
                m &= pm
        out.append(m)
    return tuple(out)


@lru_cache(maxsize=None)
def _p_masks(ring: RingTable) -> tuple[int, ...]:
    view = compute_spectrum(ring)
    minimal = [view.primes.ideals[i].mask for i in view.minimal_indices()]
    full = (1 << ring.size) - 1
    out = []
    for a in ring.elements:
        m = full
        for pm in minimal:
            if pm >> a & 1:
                m &= pm
        out.append(m)
    return tuple(out)


def m_of(ring: RingTable, a: int) -> IdealSet:
    """Intersection of the maximal ideals containing a."""
    require_nontrivial(ring)
    return IdealSet(ring, _m_masks(ring)[a])


def p_of(ring: RingTable, a: int) -> IdealSet:
    """Intersection of the minimal prime ideals containing a."""
    require_nontrivial(ring)
    return IdealSet(ring, _p_masks(ring)[a])


def p_of_alt(ring: RingTable, a: int) -> IdealSet:
    """Annihilator-comparison form: all x whose annihilator contains
    the annihilator of a.  Agrees with p_of on reduced rings."""
    require_nontrivial(ring)
    ann = element_ann_masks(ring)
    target = ann[a]
    mask = 0
    for x in ring.elements:
        if target & ~ann[x] == 0:
            mask |= 1 << x
    return IdealSet(ring, mask)


def is_z_ideal(ideal: IdealSet) -> bool:
    masks = _m_masks(ideal.ring)
    return all(masks[a] & ~ideal.mask == 0 for a in ideal.members)


def is_zo_ideal(ideal: IdealSet) -> bool:
    masks = _p_masks(ideal.ring)
    return all(masks[a] & ~ideal.mask == 0 for a in ideal.members)


@dataclass(frozen=True)
class ZClosureReport:
    input: IdealSet
    fixpoint_result: IdealSet
    sac_formula_result: IdealSet | None
    iterations: int
    agree: bool | None  # None when the formula side is undefined


def zo_fixpoint(ring: RingTable, mask: int) -> tuple[int, int]:
    """Least fixpoint of adjoining P_a for all members; returns the final
    mask and the number of strictly growing rounds."""
    p_masks = _p_masks(ring)
    current = mask
    iterations = 0
    while True:
        grown = current
        for a in members_of(current):
            grown |= p_masks[a]
        if grown != current:
            grown = generated_ideal(ring, members_of(grown)).mask
        if grown == current:
            break
        current = grown
        iterations += 1
    return current, iterations


def zo_closure(ideal: IdealSet) -> ZClosureReport:
    """Least zo-ideal above the input.

    The fixpoint route repeatedly adjoins P_a for every current member and
    regenerates; when the ring is reduced with the strong annihilator
    condition, the direct annihilator-comparison formula is evaluated as
    well and the two results compared.
    """
    ring = ideal.ring
    require_nontrivial(ring)
    fix_mask, iterations = zo_fixpoint(ring, ideal.mask)
    fix = IdealSet(ring, fix_mask)

    from .properties import has_sac, is_reduced  # deferred: properties sits above

    formula = None
    agree = None
    if is_reduced(ring) and has_sac(ring):
        ann = element_ann_masks(ring)
        mask = 0
        for x in ring.elements:
            if any(ann[b] & ~ann[x] == 0 for b in ideal.members):
                mask |= 1 << x
        formula = IdealSet(ring, mask)
        agree = formula.mask == fix.mask
    return ZClosureReport(ideal, fix, formula, iterations, agree)
