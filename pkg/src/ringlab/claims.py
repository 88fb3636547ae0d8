"""Executable claim registry and the corpus sweep.

Each claim is a check over a single ring returning a ClaimVerdict.
Variant-sensitive claims take a disjointness hypothesis (intersection or
product); each carries a default so sweeps are reproducible.  Claims whose
ids start with ``X-`` are exploratory: they emit structured observations
and never count toward the process exit code.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .errors import UnknownClaim
from .ideals import (
    IdealFamily,
    IdealSet,
    all_ideals,
    annihilator,
    annihilator_of_ideal,
    canonical_key,
    contains_regular,
    contains_unit,
    element_ann_masks,
    ideal_sum,
    members_of,
    principal_masks,
)
from .lattices import build_bz, build_bzo, is_conormal, is_distributive
from .properties import (
    DEFAULT_REAL_CAP,
    HypVariant,
    _neg_table,
    has_sac,
    is_baer,
    is_pp,
    is_reduced,
    is_semiprimitive,
    is_wsa,
    max_real_level,
    pp_idempotent_for,
    pw_scan,
    reduced_witness,
    w_scan,
)
from .rings import (
    RingTable,
    is_regular,
    is_unit,
    make_product,
    make_quotient,
    make_zmod,
    product_decode,
    product_encode,
)
from .spectrum import (
    Ambient,
    SpecSubset,
    check_lemma_p3,
    check_lemma_p4,
    closure,
    compute_spectrum,
    hull,
)
from .verdicts import ClaimVerdict, Status, counterexample, holds, not_applicable

PRODUCT_SIZE_CAP = 36


# ---------------------------------------------------------------------------
# corpus

@lru_cache(maxsize=None)
def default_corpus() -> tuple[RingTable, ...]:
    """The standard sweep targets, in a fixed order."""
    rings = [make_zmod(n) for n in (2, 3, 4, 5, 6, 8, 9, 12, 16, 18, 30)]
    rings.append(make_quotient(make_zmod(2), [1, 1, 1], label="GF(4)"))
    rings.append(make_quotient(make_zmod(2), [0, 0, 1], label="F2[x]/(x^2)"))
    rings.append(make_quotient(make_zmod(3), [0, 0, 1], label="F3[x]/(x^2)"))
    rings.append(make_product([make_zmod(2), make_zmod(2)], label="Z2xZ2"))
    rings.append(make_product([make_zmod(2), make_zmod(4)], label="Z2xZ4"))
    rings.append(make_product([make_zmod(2), make_zmod(2), make_zmod(2)], label="Z2xZ2xZ2"))
    rings.append(make_product([make_zmod(6), make_zmod(2)], label="Z6xZ2"))
    return tuple(rings)


@lru_cache(maxsize=None)
def _pair_product(a: RingTable, b: RingTable) -> RingTable:
    return make_product([a, b])


# ---------------------------------------------------------------------------
# shared helpers

@lru_cache(maxsize=None)
def _min_hull_masks(ring: RingTable) -> tuple[int, ...]:
    view = compute_spectrum(ring)
    return tuple(hull(view, (a,), Ambient.MIN).members for a in ring.elements)


def _min_opens(ring: RingTable) -> list[int]:
    """All opens of Min(R), generated as unions of basic opens."""
    view = compute_spectrum(ring)
    space = view.space_mask(Ambient.MIN)
    basics = sorted({space & ~m for m in _min_hull_masks(ring)})
    opens = {0}
    for b in basics:
        opens |= {o | b for o in opens}
    return sorted(opens)


def _separated_by_basic_closed(ring: RingTable) -> tuple[bool, dict | None]:
    """Every disjoint pair of opens in Min must fit inside disjoint basic
    closed sets h_m(x), h_m(y)."""
    hm = _min_hull_masks(ring)
    opens = _min_opens(ring)
    for ai, a_mask in enumerate(opens):
        for b_mask in opens[ai:]:
            if a_mask & b_mask:
                continue
            found = False
            for x in ring.elements:
                hx = hm[x]
                if a_mask & ~hx:
                    continue
                for y in ring.elements:
                    if hx & hm[y] == 0 and b_mask & ~hm[y] == 0:
                        found = True
                        break
                if found:
                    break
            if not found:
                return False, {
                    "open_a": list(members_of(a_mask)),
                    "open_b": list(members_of(b_mask)),
                }
    return True, None


def _embed_product_mask(ring: RingTable, factor_masks: tuple[int, ...]) -> int:
    """Mask of the product ideal with the given member masks per factor."""
    sizes = tuple(f.size for f in ring.factor_rings)
    mask = 0
    for coords in itertools.product(*[members_of(m) for m in factor_masks]):
        mask |= 1 << product_encode(sizes, coords)
    return mask


@lru_cache(maxsize=None)
def _product_ideal_family(ring: RingTable) -> IdealFamily:
    factors = ring.factor_rings
    masks = set()
    for combo in itertools.product(*[all_ideals(f).masks() for f in factors]):
        masks.add(_embed_product_mask(ring, combo))
    ordered = sorted(masks, key=lambda m: canonical_key(m, ring.size))
    return IdealFamily(ring, tuple(IdealSet(ring, m) for m in ordered))


# ---------------------------------------------------------------------------
# claim runners

def _run_l_p4(ring: RingTable, variant) -> ClaimVerdict:
    return check_lemma_p4(ring)


def _run_l_p3(ring: RingTable, variant) -> ClaimVerdict:
    return check_lemma_p3(ring)


def _hull_square_identity(ring: RingTable, cap: int) -> tuple[bool, tuple[int, ...] | None]:
    """For every tuple of length <= cap, the intersection of the basic
    minimal hulls must equal the hull of the sum of squares."""
    hm = _min_hull_masks(ring)
    add, mul = ring.add, ring.mul
    sq = [mul[a][a] for a in ring.elements]
    # state: (intersection mask, partial square sum), with a parent chain
    parents: dict[tuple[int, tuple[int, int]], tuple] = {}
    frontier: list[tuple[int, int]] = []
    for a in ring.elements:
        state = (hm[a], sq[a])
        if (1, state) not in parents:
            parents[(1, state)] = (None, a)
            frontier.append(state)
    level = 1
    while True:
        for mask, s in frontier:
            if mask != hm[s]:
                out = []
                key = (level, (mask, s))
                while key is not None:
                    prev, a = parents[key]
                    out.append(a)
                    key = (key[0] - 1, prev) if prev is not None else None
                out.reverse()
                return False, tuple(out)
        if level == cap:
            return True, None
        level += 1
        nxt = []
        for mask, s in frontier:
            row = add[s]
            for a in ring.elements:
                state = (mask & hm[a], row[sq[a]])
                if (level, state) not in parents:
                    parents[(level, state)] = ((mask, s), a)
                    nxt.append(state)
        frontier = nxt


def _run_l_ar(ring: RingTable, variant) -> ClaimVerdict:
    cap = DEFAULT_REAL_CAP
    left = max_real_level(ring, cap) == cap
    reduced = is_reduced(ring)
    identity_ok, identity_wit = _hull_square_identity(ring, cap)
    right = reduced and identity_ok
    payload = {
        "real_up_to_cap": left,
        "reduced": reduced,
        "hull_identity": identity_ok,
        "cap": cap,
    }
    if identity_wit is not None:
        payload["hull_identity_witness"] = list(identity_wit)
    if left == right:
        return holds("L-AR-n", ring.label, witness=payload)
    return counterexample("L-AR-n", ring.label, payload)


def _run_t_ar1_1(ring: RingTable, variant: HypVariant) -> ClaimVerdict:
    if not is_reduced(ring):
        return not_applicable("T-AR1-1", ring.label, "reduced", variant=variant.value)
    family = all_ideals(ring)
    detail = {}
    for strength, finder in (("regular", contains_regular), ("unit", contains_unit)):
        wedded, pair = w_scan(ring, family, variant, strength)
        ann_side = True
        bad_ideal = None
        for ideal in family:
            ann1 = annihilator_of_ideal(ideal)
            ann2 = annihilator_of_ideal(ann1)
            if not finder(ideal_sum(ann1, ann2))[0]:
                ann_side = False
                bad_ideal = ideal
                break
        detail[strength] = {"wedded": wedded, "annihilator_sum": ann_side}
        if wedded != ann_side:
            witness = {"strength": strength, "sides": detail[strength]}
            if pair is not None:
                witness["pair"] = [list(pair[0]), list(pair[1])]
            if bad_ideal is not None:
                witness["ideal"] = list(bad_ideal.members)
            return counterexample("T-AR1-1", ring.label, witness, variant=variant.value)
    return holds("T-AR1-1", ring.label, variant=variant.value, witness=detail)


def _run_t_ar1_2(ring: RingTable, variant: HypVariant) -> ClaimVerdict:
    if not is_reduced(ring):
        return not_applicable("T-AR1-2", ring.label, "reduced", variant=variant.value)
    if not w_scan(ring, all_ideals(ring), variant, "regular")[0]:
        return not_applicable("T-AR1-2", ring.label, "W-ring", variant=variant.value)
    ok, wit = _separated_by_basic_closed(ring)
    if ok:
        return holds("T-AR1-2", ring.label, variant=variant.value)
    return counterexample("T-AR1-2", ring.label, wit, variant=variant.value)


def _run_t_ar1_3(ring: RingTable, variant: HypVariant) -> ClaimVerdict:
    note = "the reality hypothesis is read at level 2"
    if not is_reduced(ring):
        return not_applicable("T-AR1-3", ring.label, "reduced", variant=variant.value, note=note)
    if max_real_level(ring, 2) < 2:
        return not_applicable("T-AR1-3", ring.label, "2-real", variant=variant.value, note=note)
    separated, _ = _separated_by_basic_closed(ring)
    if not separated:
        return holds(
            "T-AR1-3",
            ring.label,
            variant=variant.value,
            note=note + "; separation hypothesis fails, implication is vacuous",
        )
    wedded, pair = w_scan(ring, all_ideals(ring), variant, "regular")
    if wedded:
        return holds("T-AR1-3", ring.label, variant=variant.value, note=note)
    return counterexample(
        "T-AR1-3",
        ring.label,
        {"pair": [list(pair[0]), list(pair[1])]},
        variant=variant.value,
        note=note,
    )


def _run_p_dava(ring: RingTable, variant: HypVariant) -> ClaimVerdict:
    upw_ok, upw_pair = pw_scan(ring, variant, "unit")

    ann = element_ann_masks(ring)
    add = ring.add
    identity_ok = True
    identity_pair = None
    for a in ring.elements:
        for b in ring.elements:
            target = ann[ring.mul[a][b]]
            s = 0
            for x in members_of(ann[a]):
                row = add[x]
                for y in members_of(ann[b]):
                    s |= 1 << row[y]
            if s != target:
                identity_ok = False
                identity_pair = (a, b)
                break
        if not identity_ok:
            break

    nil = reduced_witness(ring)
    if nil is not None:
        separated_ok = False
        separation_wit = {"nilpotent": nil}
    else:
        view = compute_spectrum(ring)
        space = view.space_mask(Ambient.SPEC)
        h_masks = [hull(view, (a,), Ambient.SPEC).members for a in ring.elements]
        cl_open = [
            closure(SpecSubset(view, Ambient.SPEC, space & ~m)).members for m in h_masks
        ]
        separated_ok = True
        separation_wit = None
        for a in ring.elements:
            open_a = space & ~h_masks[a]
            for b in ring.elements:
                if open_a & (space & ~h_masks[b]):
                    continue
                if cl_open[a] & cl_open[b]:
                    separated_ok = False
                    separation_wit = {"pair": [a, b]}
                    break
            if not separated_ok:
                break

    payload = {
        "sides": {
            "upw": upw_ok,
            "annihilator_sum_identity": identity_ok,
            "reduced_with_separated_closures": separated_ok,
        }
    }
    if upw_pair is not None:
        payload["upw_witness"] = list(upw_pair)
    if identity_pair is not None:
        payload["identity_witness"] = list(identity_pair)
    if separation_wit is not None:
        payload["separation_witness"] = separation_wit
    if upw_ok == identity_ok == separated_ok:
        return holds("P-DAVA", ring.label, variant=variant.value, witness=payload)
    return counterexample("P-DAVA", ring.label, payload, variant=variant.value)


def _run_c_pp_upw(ring: RingTable, variant) -> ClaimVerdict:
    if not is_pp(ring):
        return not_applicable("C-PP-UPW", ring.label, "PP-ring")
    upw_ok, upw_pair = pw_scan(ring, HypVariant.PRODUCT, "unit")
    ann = element_ann_masks(ring)
    principal = principal_masks(ring)
    neg = _neg_table(ring)
    add, mul = ring.add, ring.mul
    idem = {a: pp_idempotent_for(ring, a) for a in ring.elements}
    identity_pair = None
    for a in ring.elements:
        e = idem[a]
        for b in ring.elements:
            f = idem[b]
            g = add[add[e][f]][neg[mul[e][f]]]
            if principal[g] != ann[mul[a][b]]:
                identity_pair = (a, b)
                break
        if identity_pair:
            break
    if upw_ok and identity_pair is None:
        return holds("C-PP-UPW", ring.label, note="idempotent sum identity verified pairwise")
    witness = {}
    if not upw_ok:
        witness["upw_witness"] = list(upw_pair)
    if identity_pair is not None:
        witness["identity_witness"] = list(identity_pair)
    return counterexample("C-PP-UPW", ring.label, witness)


def _run_c_baer_upw(ring: RingTable, variant) -> ClaimVerdict:
    if not is_baer(ring):
        return not_applicable("C-BAER-UPW", ring.label, "Baer-ring")
    ok, pair = pw_scan(ring, HypVariant.PRODUCT, "unit")
    if ok:
        return holds("C-BAER-UPW", ring.label)
    return counterexample("C-BAER-UPW", ring.label, {"pair": list(pair)})


def _run_p_wsa_pw(ring: RingTable, variant: HypVariant) -> ClaimVerdict:
    if not is_wsa(ring):
        return not_applicable("P-WSA-PW", ring.label, "WSA-ring", variant=variant.value)
    if not has_sac(ring):
        return not_applicable("P-WSA-PW", ring.label, "s.a.c.", variant=variant.value)
    ok, pair = pw_scan(ring, variant, "regular")
    if ok:
        return holds("P-WSA-PW", ring.label, variant=variant.value)
    return counterexample("P-WSA-PW", ring.label, {"pair": list(pair)}, variant=variant.value)


def _run_p_prod_pw(ring: RingTable, variant: HypVariant) -> ClaimVerdict:
    partners = [b for b in default_corpus() if ring.size * b.size <= PRODUCT_SIZE_CAP]
    if not partners:
        return not_applicable(
            "P-PROD-PW",
            ring.label,
            "admissible partner",
            variant=variant.value,
            note=f"no corpus partner keeps the product size within {PRODUCT_SIZE_CAP}",
        )
    for partner in partners:
        prod = _pair_product(ring, partner)
        for strength in ("regular", "unit"):
            left = pw_scan(prod, variant, strength)[0]
            right = pw_scan(ring, variant, strength)[0] and pw_scan(partner, variant, strength)[0]
            if left != right:
                return counterexample(
                    "P-PROD-PW",
                    ring.label,
                    {
                        "partner": partner.label,
                        "strength": strength,
                        "product_side": left,
                        "factor_side": right,
                    },
                    variant=variant.value,
                )
    return holds(
        "P-PROD-PW",
        ring.label,
        variant=variant.value,
        note=f"checked {len(partners)} partner(s)",
    )


def _run_l_42(ring: RingTable, variant) -> ClaimVerdict:
    factors = ring.factor_rings
    if not factors:
        return not_applicable("L-42", ring.label, "product ring")
    sizes = tuple(f.size for f in factors)

    factor_families = [all_ideals(f) for f in factors]
    ann_elem = [element_ann_masks(f) for f in factors]

    def factor_ann_mask(k: int, mask: int) -> int:
        full = (1 << factors[k].size) - 1
        m = full
        for a in members_of(mask):
            m &= ann_elem[k][a]
        return m

    for combo in itertools.product(*[fam.masks() for fam in factor_families]):
        embedded = _embed_product_mask(ring, combo)
        left = annihilator(ring, members_of(embedded)).mask
        right = _embed_product_mask(
            ring, tuple(factor_ann_mask(k, m) for k, m in enumerate(combo))
        )
        if left != right:
            return counterexample(
                "L-42",
                ring.label,
                {
                    "identity": "annihilator-product",
                    "factor_ideals": [list(members_of(m)) for m in combo],
                },
            )

    for ideal in all_ideals(ring):
        coords = [product_decode(sizes, x) for x in ideal.members]
        for k in range(len(factors)):
            proj = {c[k] for c in coords}
            cylinder = 0
            zeros = [f.zero for f in factors]
            for a in proj:
                tup = list(zeros)
                tup[k] = a
                cylinder |= 1 << product_encode(sizes, tuple(tup))
            if cylinder & ~ideal.mask:
                return counterexample(
                    "L-42",
                    ring.label,
                    {
                        "identity": "cylinder",
                        "ideal": list(ideal.members),
                        "position": k,
                    },
                )

    for x in ring.elements:
        coords = product_decode(sizes, x)
        reg_left = is_regular(ring, x)
        reg_right = all(is_regular(f, c) for f, c in zip(factors, coords))
        unit_left = is_unit(ring, x)
        unit_right = all(is_unit(f, c) for f, c in zip(factors, coords))
        if reg_left != reg_right or unit_left != unit_right:
            return counterexample(
                "L-42",
                ring.label,
                {"identity": "componentwise-units", "element": x},
            )
    return holds("L-42", ring.label, note="annihilator, cylinder and unit identities verified")


def _run_p_prodfam_w(ring: RingTable, variant: HypVariant) -> ClaimVerdict:
    factors = ring.factor_rings
    if not factors:
        return not_applicable("P-PRODFAM-W", ring.label, "product ring", variant=variant.value)
    family = _product_ideal_family(ring)
    whole = all_ideals(ring)
    for strength in ("regular", "unit"):
        s1 = w_scan(ring, whole, variant, strength)[0]
        s2 = w_scan(ring, family, variant, strength)[0]
        s3 = all(w_scan(f, all_ideals(f), variant, strength)[0] for f in factors)
        if not (s1 == s2 == s3):
            return counterexample(
                "P-PRODFAM-W",
                ring.label,
                {
                    "strength": strength,
                    "whole_ring": s1,
                    "product_family": s2,
                    "factors": s3,
                },
                variant=variant.value,
            )
    return holds("P-PRODFAM-W", ring.label, variant=variant.value)


def _lattice_prerequisites(report) -> dict:
    prereq = {
        "lattice_complete": report.lattice.is_complete,
        "well_defined": report.well_defined,
        "join_formula": report.is_join,
        "meet_formula": report.is_meet,
    }
    if report.lattice.is_complete:
        prereq["distributive"] = is_distributive(report.lattice)[0]
    else:
        prereq["distributive"] = False
    return prereq


def _format_prereq(prereq: dict) -> str:
    return ", ".join(f"{k}={v}" for k, v in prereq.items())


def _run_x_p2(ring: RingTable, variant: HypVariant) -> ClaimVerdict:
    if not is_reduced(ring):
        return not_applicable("X-P2", ring.label, "reduced", variant=variant.value, exploratory=True)
    report = build_bzo(ring)
    prereq = _lattice_prerequisites(report)
    if not all(prereq.values()):
        failed = next(k for k, v in prereq.items() if not v)
        return not_applicable(
            "X-P2",
            ring.label,
            failed,
            variant=variant.value,
            note="lattice prerequisites: " + _format_prereq(prereq),
            exploratory=True,
        )
    conormal = is_conormal(report.lattice)[0]
    pw_ok = pw_scan(ring, variant, "regular")[0]
    payload = {"conormal": conormal, "pw": pw_ok}
    if conormal == pw_ok:
        return holds("X-P2", ring.label, variant=variant.value, witness=payload, exploratory=True)
    return counterexample("X-P2", ring.label, payload, variant=variant.value, exploratory=True)


def _run_x_es2(ring: RingTable, variant: HypVariant) -> ClaimVerdict:
    if not is_semiprimitive(ring):
        return not_applicable(
            "X-ES2", ring.label, "semiprimitive", variant=variant.value, exploratory=True
        )
    report = build_bz(ring)
    prereq = _lattice_prerequisites(report)
    if not all(prereq.values()):
        failed = next(k for k, v in prereq.items() if not v)
        return not_applicable(
            "X-ES2",
            ring.label,
            failed,
            variant=variant.value,
            note="lattice prerequisites: " + _format_prereq(prereq),
            exploratory=True,
        )
    conormal = is_conormal(report.lattice)[0]
    upw_ok = pw_scan(ring, variant, "unit")[0]
    payload = {"conormal": conormal, "upw": upw_ok}
    if conormal == upw_ok:
        return holds("X-ES2", ring.label, variant=variant.value, witness=payload, exploratory=True)
    return counterexample("X-ES2", ring.label, payload, variant=variant.value, exploratory=True)


def _run_x_variant(ring: RingTable, variant) -> ClaimVerdict:
    family = all_ideals(ring)
    checks = {
        "pw": lambda v: pw_scan(ring, v, "regular")[0],
        "upw": lambda v: pw_scan(ring, v, "unit")[0],
        "w": lambda v: w_scan(ring, family, v, "regular")[0],
        "uw": lambda v: w_scan(ring, family, v, "unit")[0],
    }
    divergences = []
    for name, check in checks.items():
        iv = check(HypVariant.INTERSECTION)
        pv = check(HypVariant.PRODUCT)
        if iv != pv:
            divergences.append({"class": name, "intersection": iv, "product": pv})
    if not divergences:
        return holds(
            "X-VARIANT",
            ring.label,
            note="intersection and product readings agree on PW/UPW/W/UW",
            exploratory=True,
        )
    reduced = is_reduced(ring)
    note = "hypothesis variants diverge"
    if not reduced and any(d["class"] == "upw" for d in divergences):
        note = (
            "UPW is vacuously true under the intersection reading but false under "
            "the product reading on a non-reduced ring; claim P-DAVA makes UPW force "
            "reducedness, so the divergence marks the definitional gap"
        )
    return counterexample(
        "X-VARIANT",
        ring.label,
        {"divergences": divergences, "reduced": reduced},
        note=note,
        exploratory=True,
    )


# ---------------------------------------------------------------------------
# registry

@dataclass(frozen=True)
class ClaimSpec:
    claim_id: str
    summary: str
    runner: Callable
    variant_sensitive: bool = False
    default_variant: HypVariant | None = None
    exploratory: bool = False


REGISTRY: dict[str, ClaimSpec] = {}


def _register(spec: ClaimSpec) -> None:
    REGISTRY[spec.claim_id] = spec


_register(ClaimSpec("L-P4", "minimal primes are exactly the primes annihilated pointwise from outside (reduced rings)", _run_l_p4))
_register(ClaimSpec("L-P3", "annihilator equality matches interior-of-hull equality on Min, and hulls are clopen there", _run_l_p3))
_register(ClaimSpec("L-AR-n", "bounded reality coincides with the square-sum hull identity on Min", _run_l_ar))
_register(ClaimSpec("T-AR1-1", "the wedded condition matches the annihilator-plus-double-annihilator criterion on reduced rings", _run_t_ar1_1, variant_sensitive=True, default_variant=HypVariant.INTERSECTION))
_register(ClaimSpec("T-AR1-2", "wedded reduced rings separate disjoint opens of Min by disjoint basic closed sets", _run_t_ar1_2, variant_sensitive=True, default_variant=HypVariant.INTERSECTION))
_register(ClaimSpec("T-AR1-3", "the separation criterion forces weddedness on 2-real reduced rings", _run_t_ar1_3, variant_sensitive=True, default_variant=HypVariant.INTERSECTION))
_register(ClaimSpec("P-DAVA", "unit-wedded pairs, the annihilator sum identity, and closure separation are equivalent", _run_p_dava, variant_sensitive=True, default_variant=HypVariant.PRODUCT))
_register(ClaimSpec("C-PP-UPW", "PP rings are unit-wedded, witnessed by the idempotent sum identity", _run_c_pp_upw))
_register(ClaimSpec("C-BAER-UPW", "Baer rings are unit-wedded", _run_c_baer_upw))
_register(ClaimSpec("P-WSA-PW", "WSA rings with the strong annihilator condition are principally wedded", _run_p_wsa_pw, variant_sensitive=True, default_variant=HypVariant.INTERSECTION))
_register(ClaimSpec("P-PROD-PW", "principal weddedness passes through finite products factorwise", _run_p_prod_pw, variant_sensitive=True, default_variant=HypVariant.INTERSECTION))
_register(ClaimSpec("L-42", "annihilators, cylinders, and units decompose componentwise on products", _run_l_42))
_register(ClaimSpec("P-PRODFAM-W", "weddedness, family-relative weddedness, and factor weddedness coincide on products", _run_p_prodfam_w, variant_sensitive=True, default_variant=HypVariant.INTERSECTION))
_register(ClaimSpec("X-P2", "co-normality of the minimal-prime lattice versus principal weddedness", _run_x_p2, variant_sensitive=True, default_variant=HypVariant.INTERSECTION, exploratory=True))
_register(ClaimSpec("X-ES2", "co-normality of the maximal-ideal lattice versus unit principal weddedness", _run_x_es2, variant_sensitive=True, default_variant=HypVariant.INTERSECTION, exploratory=True))
_register(ClaimSpec("X-VARIANT", "audit of rings where the two hypothesis readings disagree", _run_x_variant, exploratory=True))


def claim_ids() -> list[str]:
    return list(REGISTRY)


def claim_info() -> list[dict]:
    return [
        {
            "id": spec.claim_id,
            "summary": spec.summary,
            "variant_sensitive": spec.variant_sensitive,
            "default_variant": spec.default_variant.value if spec.default_variant else None,
            "exploratory": spec.exploratory,
        }
        for spec in REGISTRY.values()
    ]


def run_claim(claim_id: str, ring: RingTable, variant: HypVariant | None = None) -> ClaimVerdict:
    spec = REGISTRY.get(claim_id)
    if spec is None:
        raise UnknownClaim(f"unknown claim id: {claim_id}", claim=claim_id)
    if not spec.variant_sensitive:
        return spec.runner(ring, None)
    return spec.runner(ring, variant or spec.default_variant)


def run_corpus(
    corpus: tuple[RingTable, ...] | None = None,
    ids: list[str] | None = None,
    variants: list[HypVariant] | None = None,
) -> list[ClaimVerdict]:
    """Sweep claims over rings in deterministic (ring, claim, variant) order."""
    rings = corpus if corpus is not None else default_corpus()
    selected = ids if ids is not None else claim_ids()
    for cid in selected:
        if cid not in REGISTRY:
            raise UnknownClaim(f"unknown claim id: {cid}", claim=cid)
    out = []
    for ring in rings:
        for cid in selected:
            spec = REGISTRY[cid]
            if spec.variant_sensitive and variants is not None:
                for v in variants:
                    out.append(run_claim(cid, ring, v))
            else:
                out.append(run_claim(cid, ring))
    return out


def summarize(verdicts: list[ClaimVerdict]) -> dict:
    counts = {status.value: 0 for status in Status}
    flagged = 0
    for v in verdicts:
        counts[v.status.value] += 1
        if v.exploratory and v.status is Status.COUNTEREXAMPLE:
            flagged += 1
    failing = sorted(
        {
            (v.claim_id, v.ring)
            for v in verdicts
            if v.status is Status.COUNTEREXAMPLE and not v.exploratory
        }
    )
    return {
        "total": len(verdicts),
        "holds": counts[Status.HOLDS.value],
        "counterexamples": counts[Status.COUNTEREXAMPLE.value],
        "not_applicable": counts[Status.NOT_APPLICABLE.value],
        "exploratory_flags": flagged,
        "failing": [{"claim": c, "ring": r} for c, r in failing],
    }


def has_blocking_counterexample(verdicts: list[ClaimVerdict]) -> bool:
    return any(v.status is Status.COUNTEREXAMPLE and not v.exploratory for v in verdicts)
