"""Deciders for the ring classes the harness quantifies over.

Pair-based classes (PW, UPW, W, UW and the family-relative variants) take
a hypothesis variant: INTERSECTION pairs elements or ideals whose
generated ideals intersect in zero, PRODUCT pairs those whose product is
zero.  The two readings coincide on reduced rings and every scan records
which one produced the answer.

All scans are deterministic: pairs are visited in canonical order and the
reported witness is always the first offender.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache

from .errors import NTooLarge
from .ideals import (
    IdealFamily,
    IdealSet,
    all_ideals,
    check_family,
    element_ann_masks,
    ideal_sum,
    members_of,
    principal_masks,
)
from .rings import RingTable, is_nilpotent, is_regular, is_unit, require_nontrivial
from .spectrum import compute_spectrum
from .zideals import zo_fixpoint

DEFAULT_REAL_CAP = 4


class HypVariant(Enum):
    INTERSECTION = "intersection"
    PRODUCT = "product"


# ---------------------------------------------------------------------------
# cached per-ring element data

@lru_cache(maxsize=None)
def _neg_table(ring: RingTable) -> tuple[int, ...]:
    return tuple(ring.neg(a) for a in ring.elements)


@lru_cache(maxsize=None)
def regular_mask(ring: RingTable) -> int:
    require_nontrivial(ring)
    m = 0
    for a in ring.elements:
        if is_regular(ring, a):
            m |= 1 << a
    return m


@lru_cache(maxsize=None)
def unit_mask(ring: RingTable) -> int:
    require_nontrivial(ring)
    m = 0
    for a in ring.elements:
        if is_unit(ring, a):
            m |= 1 << a
    return m


def _least_in_sum(ring: RingTable, mask_a: int, mask_b: int, candidates: int) -> int | None:
    """Least candidate element expressible as a+b with a, b in the masks."""
    add = ring.add
    neg = _neg_table(ring)
    for c in members_of(candidates):
        row = add[c]
        for a in members_of(mask_a):
            if mask_b >> row[neg[a]] & 1:
                return c
    return None


# ---------------------------------------------------------------------------
# elementwise classes

def is_reduced(ring: RingTable) -> bool:
    return reduced_witness(ring) is None


@lru_cache(maxsize=None)
def reduced_witness(ring: RingTable) -> int | None:
    """Least nonzero nilpotent, or None."""
    require_nontrivial(ring)
    for a in ring.elements:
        if a != ring.zero and is_nilpotent(ring, a):
            return a
    return None


@lru_cache(maxsize=None)
def jacobson_radical_mask(ring: RingTable) -> int:
    require_nontrivial(ring)
    view = compute_spectrum(ring)
    mask = (1 << ring.size) - 1
    for i in view.maximal_indices():
        mask &= view.primes.ideals[i].mask
    return mask


def is_semiprimitive(ring: RingTable) -> bool:
    return jacobson_radical_mask(ring) == 1 << ring.zero


@lru_cache(maxsize=None)
def _nonzero_square_sum_levels(ring: RingTable, depth: int) -> tuple[frozenset, ...]:
    """Level k holds every value of a sum of k squares of nonzero elements."""
    mul, add = ring.mul, ring.add
    squares = sorted({mul[a][a] for a in ring.elements if a != ring.zero})
    levels = [frozenset(squares)]
    for _ in range(depth - 1):
        nxt = set()
        for s in levels[-1]:
            row = add[s]
            for q in squares:
                nxt.add(row[q])
        levels.append(frozenset(nxt))
    return tuple(levels)


def is_n_real(ring: RingTable, n: int, cap: int = DEFAULT_REAL_CAP) -> bool:
    """No nonzero n-tuple has squares summing to zero.

    Tuples may contain zeros, so the scan reduces to sums of at most n
    squares of nonzero elements.
    """
    require_nontrivial(ring)
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > cap:
        raise NTooLarge(f"n = {n} exceeds the cap {cap}", n=n, cap=cap)
    levels = _nonzero_square_sum_levels(ring, n)
    return all(ring.zero not in level for level in levels[:n])


def n_real_witness(ring: RingTable, n: int) -> tuple[int, ...] | None:
    """A nonzero n-tuple whose squares sum to zero, or None."""
    mul, add = ring.mul, ring.add
    zero = ring.zero
    nonzero = [a for a in ring.elements if a != zero]

    parents: dict[tuple[int, int], tuple] = {}
    frontier = {}
    for a in nonzero:
        s = mul[a][a]
        if (1, s) not in parents:
            parents[(1, s)] = (None, a)
            frontier[s] = True
    for k in range(2, n + 1):
        new_frontier = {}
        for s in sorted(frontier):
            row = add[s]
            for a in nonzero:
                t = row[mul[a][a]]
                if (k, t) not in parents:
                    parents[(k, t)] = (s, a)
                    new_frontier[t] = True
        frontier = new_frontier
        if not frontier:
            break
    for k in range(1, n + 1):
        if (k, zero) in parents:
            out = []
            state = (k, zero)
            while state is not None:
                prev, a = parents[state]
                out.append(a)
                state = (state[0] - 1, prev) if prev is not None else None
            out.reverse()
            return tuple(out) + (zero,) * (n - len(out))
    return None


def max_real_level(ring: RingTable, cap: int = DEFAULT_REAL_CAP) -> int:
    """Largest n <= cap for which the ring is n-real; 0 when not even 1-real."""
    require_nontrivial(ring)
    levels = _nonzero_square_sum_levels(ring, cap)
    for k, level in enumerate(levels, start=1):
        if ring.zero in level:
            return k - 1
    return cap


# ---------------------------------------------------------------------------
# annihilator-shaped classes

@lru_cache(maxsize=None)
def _ideal_ann_masks(ring: RingTable) -> dict[int, int]:
    """Annihilator mask of every ideal, keyed by ideal mask."""
    ann = element_ann_masks(ring)
    full = (1 << ring.size) - 1
    out = {}
    for ideal in all_ideals(ring):
        m = full
        for a in ideal.members:
            m &= ann[a]
        out[ideal.mask] = m
    return out


def is_mccoy(ring: RingTable) -> bool:
    return mccoy_witness(ring) is None


@lru_cache(maxsize=None)
def mccoy_witness(ring: RingTable) -> tuple[int, ...] | None:
    """An ideal of zerodivisors whose annihilator is zero, or None.

    In a finite ring every ideal is finitely generated, so the scan ranges
    over all ideals.
    """
    require_nontrivial(ring)
    zerodivisors = ((1 << ring.size) - 1) & ~regular_mask(ring)
    zero_only = 1 << ring.zero
    ann = _ideal_ann_masks(ring)
    for ideal in all_ideals(ring):
        if ideal.mask & ~zerodivisors == 0 and ann[ideal.mask] == zero_only:
            return ideal.members
    return None


@lru_cache(maxsize=None)
def sac_witnesses(ring: RingTable) -> dict[int, int] | None:
    """For each ideal, the least member whose annihilator equals the
    ideal's annihilator; None when some ideal has no such member."""
    require_nontrivial(ring)
    ann_elem = element_ann_masks(ring)
    ann_ideal = _ideal_ann_masks(ring)
    out = {}
    for ideal in all_ideals(ring):
        target = ann_ideal[ideal.mask]
        for c in ideal.members:
            if ann_elem[c] == target:
                out[ideal.mask] = c
                break
        else:
            return None
    return out


def has_sac(ring: RingTable) -> bool:
    """Strong annihilator condition: each ideal's annihilator is realized
    by a single element inside the ideal."""
    return sac_witnesses(ring) is not None


@lru_cache(maxsize=None)
def has_ac(ring: RingTable) -> bool:
    """Weaker form: the realizing element may live anywhere in the ring."""
    require_nontrivial(ring)
    ann_elem = element_ann_masks(ring)
    realized = set(ann_elem)
    return all(m in realized for m in _ideal_ann_masks(ring).values())


@lru_cache(maxsize=None)
def _idempotent_list(ring: RingTable) -> tuple[int, ...]:
    return tuple(a for a in ring.elements if ring.mul[a][a] == a)


def pp_idempotent_for(ring: RingTable, a: int) -> int | None:
    """Least idempotent e with eR equal to Ann(a), if one exists."""
    ann = element_ann_masks(ring)[a]
    principal = principal_masks(ring)
    for e in _idempotent_list(ring):
        if principal[e] == ann:
            return e
    return None


def is_pp(ring: RingTable) -> bool:
    return pp_witness(ring) is None


@lru_cache(maxsize=None)
def pp_witness(ring: RingTable) -> int | None:
    """Least element whose annihilator is not generated by an idempotent."""
    require_nontrivial(ring)
    for a in ring.elements:
        if pp_idempotent_for(ring, a) is None:
            return a
    return None


def is_baer(ring: RingTable) -> bool:
    return baer_witness(ring) is None


@lru_cache(maxsize=None)
def baer_witness(ring: RingTable) -> tuple[int, ...] | None:
    """First ideal (canonical order) whose annihilator is not generated by
    an idempotent."""
    require_nontrivial(ring)
    principal = principal_masks(ring)
    idem = _idempotent_list(ring)
    generated = {principal[e] for e in idem}
    for ideal in all_ideals(ring):
        if _ideal_ann_masks(ring)[ideal.mask] not in generated:
            return ideal.members
    return None


# ---------------------------------------------------------------------------
# wedded-style pair scans

def _element_pairs(ring: RingTable, variant: HypVariant):
    """Element pairs satisfying the disjointness hypothesis, in row-major
    order.  Intersection pairs are a subset of product pairs, so both scans
    start from the product-zero pairs."""
    mul = ring.mul
    zero = ring.zero
    zero_only = 1 << zero
    principal = principal_masks(ring) if variant is HypVariant.INTERSECTION else None
    for a in ring.elements:
        row = mul[a]
        for b in ring.elements:
            if row[b] != zero:
                continue
            if variant is HypVariant.INTERSECTION and principal[a] & principal[b] != zero_only:
                continue
            yield a, b


def pw_scan(ring: RingTable, variant: HypVariant, strength: str) -> tuple[bool, tuple[int, int] | None]:
    """Scan element pairs under the hypothesis; require a regular (or unit)
    element in Ann(a)+Ann(b).  Returns (holds, first offending pair)."""
    require_nontrivial(ring)
    ann = element_ann_masks(ring)
    candidates = regular_mask(ring) if strength == "regular" else unit_mask(ring)
    for a, b in _element_pairs(ring, variant):
        if _least_in_sum(ring, ann[a], ann[b], candidates) is None:
            return False, (a, b)
    return True, None


def is_pw(ring: RingTable, variant: HypVariant) -> bool:
    return pw_scan(ring, variant, "regular")[0]


def is_upw(ring: RingTable, variant: HypVariant) -> bool:
    return pw_scan(ring, variant, "unit")[0]


def _ideal_hypothesis(ring: RingTable, i: IdealSet, j: IdealSet, variant: HypVariant) -> bool:
    zero_only = 1 << ring.zero
    if variant is HypVariant.INTERSECTION:
        return i.mask & j.mask == zero_only
    mul = ring.mul
    for a in i.members:
        row = mul[a]
        for b in j.members:
            if row[b] != ring.zero:
                return False
    return True


def w_scan(
    ring: RingTable,
    family: IdealFamily,
    variant: HypVariant,
    strength: str,
) -> tuple[bool, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """Quantify the wedded condition over ordered ideal pairs of a family."""
    require_nontrivial(ring)
    check_family(family, ring)
    ann_elem = element_ann_masks(ring)
    full = (1 << ring.size) - 1

    def ann_mask(ideal: IdealSet) -> int:
        m = full
        for a in ideal.members:
            m &= ann_elem[a]
        return m

    anns = [ann_mask(i) for i in family]
    candidates = regular_mask(ring) if strength == "regular" else unit_mask(ring)
    ideals = family.ideals
    for xi, i in enumerate(ideals):
        for yj, j in enumerate(ideals):
            if not _ideal_hypothesis(ring, i, j, variant):
                continue
            if _least_in_sum(ring, anns[xi], anns[yj], candidates) is None:
                return False, (i.members, j.members)
    return True, None


def is_w(ring: RingTable, variant: HypVariant) -> bool:
    return w_scan(ring, all_ideals(ring), variant, "regular")[0]


def is_uw(ring: RingTable, variant: HypVariant) -> bool:
    return w_scan(ring, all_ideals(ring), variant, "unit")[0]


def is_d_w(ring: RingTable, family: IdealFamily, variant: HypVariant, strength: str = "regular") -> bool:
    """Wedded condition relative to a designated ideal family."""
    return w_scan(ring, family, variant, strength)[0]


def wsa_scan(ring: RingTable) -> tuple[bool, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """For ideal pairs with zero intersection, the zo-closure of
    Ann(I)+Ann(J) must be the whole ring."""
    require_nontrivial(ring)
    zero_only = 1 << ring.zero
    full = (1 << ring.size) - 1
    ann = _ideal_ann_masks(ring)
    family = all_ideals(ring)
    for i in family:
        for j in family:
            if i.mask & j.mask != zero_only:
                continue
            s = ideal_sum(IdealSet(ring, ann[i.mask]), IdealSet(ring, ann[j.mask]))
            if zo_fixpoint(ring, s.mask)[0] != full:
                return False, (i.members, j.members)
    return True, None


def is_wsa(ring: RingTable) -> bool:
    return wsa_scan(ring)[0]


# ---------------------------------------------------------------------------
# full class report

_VARIANTS = (HypVariant.INTERSECTION, HypVariant.PRODUCT)


def build_class_report(ring: RingTable, cap: int = DEFAULT_REAL_CAP) -> dict:
    """Every class decision with witnesses, both variants where relevant.

    Keys are emitted in a fixed order so serialized reports are stable.
    """
    require_nontrivial(ring)
    report: dict = {}

    nil = reduced_witness(ring)
    report["reduced"] = {"value": nil is None, "witness": nil}
    radical = jacobson_radical_mask(ring)
    semi = radical == 1 << ring.zero
    report["semiprimitive"] = {
        "value": semi,
        "witness": None if semi else list(members_of(radical)),
    }
    mccoy_w = mccoy_witness(ring)
    report["mccoy"] = {"value": mccoy_w is None, "witness": list(mccoy_w) if mccoy_w else None}
    report["sac"] = {"value": has_sac(ring), "witness": None}
    report["ac"] = {"value": has_ac(ring), "witness": None}
    pp_w = pp_witness(ring)
    report["pp"] = {"value": pp_w is None, "witness": pp_w}
    baer_w = baer_witness(ring)
    report["baer"] = {"value": baer_w is None, "witness": list(baer_w) if baer_w else None}
    for n in range(1, cap + 1):
        wit = None if is_n_real(ring, n, cap) else n_real_witness(ring, n)
        report[f"n_real_{n}"] = {"value": wit is None, "witness": list(wit) if wit else None}
    report["max_real_level"] = {"value": max_real_level(ring, cap)}

    for name, strength in (("pw", "regular"), ("upw", "unit")):
        for variant in _VARIANTS:
            ok, pair = pw_scan(ring, variant, strength)
            report[f"{name}_{variant.value}"] = {
                "value": ok,
                "variant": variant.value,
                "witness": list(pair) if pair else None,
            }
    family = all_ideals(ring)
    for name, strength in (("w", "regular"), ("uw", "unit")):
        for variant in _VARIANTS:
            ok, pair = w_scan(ring, family, variant, strength)
            report[f"{name}_{variant.value}"] = {
                "value": ok,
                "variant": variant.value,
                "witness": [list(pair[0]), list(pair[1])] if pair else None,
            }
    ok, pair = wsa_scan(ring)
    report["wsa"] = {
        "value": ok,
        "witness": [list(pair[0]), list(pair[1])] if pair else None,
    }
    return report
