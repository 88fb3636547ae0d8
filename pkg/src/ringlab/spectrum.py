"""Prime, maximal and minimal prime ideals with the hull-kernel topology.

The two point sets of interest are Spec(R) (all primes) and Min(R)
(minimal primes).  Subsets of either space are kept as bitmasks over the
canonical prime list; closure is hull-of-kernel and interior is the
complement dual, both computed inside the ambient space of the subset.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .ideals import IdealFamily, IdealSet, all_ideals, annihilator_of_ideal, members_of
from .rings import RingTable, require_nontrivial
from .verdicts import ClaimVerdict, counterexample, holds, not_applicable


class Ambient(Enum):
    SPEC = "SPEC"
    MIN = "MIN"


@dataclass(frozen=True)
class SpectrumView:
    ring: RingTable
    primes: IdealFamily
    maximal: tuple[bool, ...]
    minimal: tuple[bool, ...]

    @property
    def count(self) -> int:
        return len(self.primes)

    def space_mask(self, which: Ambient) -> int:
        if which is Ambient.SPEC:
            return (1 << self.count) - 1
        return sum(1 << i for i, m in enumerate(self.minimal) if m)

    def minimal_indices(self) -> tuple[int, ...]:
        return tuple(i for i, m in enumerate(self.minimal) if m)

    def maximal_indices(self) -> tuple[int, ...]:
        return tuple(i for i, m in enumerate(self.maximal) if m)


@dataclass(frozen=True)
class SpecSubset:
    view: SpectrumView
    which: Ambient
    members: int  # bitmask over prime indices, restricted to the ambient

    def complement(self) -> "SpecSubset":
        return SpecSubset(self.view, self.which, self.view.space_mask(self.which) & ~self.members)

    def indices(self) -> tuple[int, ...]:
        return members_of(self.members)

    @property
    def is_empty(self) -> bool:
        return self.members == 0


def _is_prime_mask(ring: RingTable, mask: int) -> bool:
    if mask == (1 << ring.size) - 1:
        return False
    mul = ring.mul
    outside = [a for a in ring.elements if not mask >> a & 1]
    for a in outside:
        row = mul[a]
        for b in outside:
            if mask >> row[b] & 1:
                return False
    return True


@lru_cache(maxsize=None)
def compute_spectrum(ring: RingTable) -> SpectrumView:
    """All primes filtered from the full ideal list, with maximal and
    minimal flags decided by pairwise inclusion."""
    require_nontrivial(ring)
    family = all_ideals(ring)
    primes = [i for i in family if _is_prime_mask(ring, i.mask)]
    full = (1 << ring.size) - 1
    proper = [i.mask for i in family if i.mask != full]
    maximal = []
    minimal = []
    for p in primes:
        pm = p.mask
        # maximal among all proper ideals, not merely among primes
        maximal.append(not any(m != pm and pm & ~m == 0 for m in proper))
        minimal.append(not any(q.mask != pm and q.mask & ~pm == 0 for q in primes))
    return SpectrumView(
        ring=ring,
        primes=IdealFamily(ring, tuple(primes)),
        maximal=tuple(maximal),
        minimal=tuple(minimal),
    )


def hull(view: SpectrumView, subset, which: Ambient = Ambient.SPEC) -> SpecSubset:
    """Primes of the ambient space containing every element of the subset."""
    ss = tuple(subset)
    mask = 0
    for i, p in enumerate(view.primes):
        if which is Ambient.MIN and not view.minimal[i]:
            continue
        if all(p.mask >> a & 1 for a in ss):
            mask |= 1 << i
    return SpecSubset(view, which, mask)


def hull_of_ideal(view: SpectrumView, ideal: IdealSet, which: Ambient = Ambient.SPEC) -> SpecSubset:
    return hull(view, ideal.members, which)


def kernel_mask(sub: SpecSubset) -> int:
    """Intersection of the member primes as an element mask; the empty
    family intersects to the whole ring."""
    mask = (1 << sub.view.ring.size) - 1
    for i in sub.indices():
        mask &= sub.view.primes.ideals[i].mask
    return mask


def closure(sub: SpecSubset) -> SpecSubset:
    return hull(sub.view, members_of(kernel_mask(sub)), sub.which)


def interior(sub: SpecSubset) -> SpecSubset:
    return closure(sub.complement()).complement()


def _prime_members(view: SpectrumView, i: int) -> list[int]:
    return list(view.primes.ideals[i].members)


def check_lemma_p4(ring: RingTable) -> ClaimVerdict:
    """On a reduced ring, a prime is minimal exactly when each of its
    elements is killed by something outside the prime."""
    from .properties import is_reduced  # local import to keep layering acyclic

    if not is_reduced(ring):
        return not_applicable("L-P4", ring.label, "reduced")
    view = compute_spectrum(ring)
    mul = ring.mul
    zero = ring.zero
    for i, p in enumerate(view.primes):
        outside = [c for c in ring.elements if c not in p]
        annihilated = True
        bad_a = None
        for a in p.members:
            row = mul[a]
            if not any(row[c] == zero for c in outside):
                annihilated = False
                bad_a = a
                break
        if view.minimal[i] and not annihilated:
            return counterexample(
                "L-P4",
                ring.label,
                {"prime": list(p.members), "element": bad_a, "direction": "minimal-but-unwitnessed"},
            )
        if annihilated and not view.minimal[i]:
            return counterexample(
                "L-P4",
                ring.label,
                {"prime": list(p.members), "direction": "witnessed-but-not-minimal"},
            )
    return holds("L-P4", ring.label)


def check_lemma_p3(ring: RingTable) -> ClaimVerdict:
    """Two-part check on Min(R) for reduced rings: annihilator equality
    matches interior-of-hull equality, and every hull is its own interior."""
    from .properties import is_reduced

    if not is_reduced(ring):
        return not_applicable("L-P3", ring.label, "reduced")
    view = compute_spectrum(ring)
    family = all_ideals(ring)
    ann = {i.mask: annihilator_of_ideal(i).mask for i in family}
    int_hull = {}
    for i in family:
        h = hull_of_ideal(view, i, Ambient.MIN)
        int_hull[i.mask] = interior(h).members
    for i in family:
        for j in family:
            same_ann = ann[i.mask] == ann[j.mask]
            same_int = int_hull[i.mask] == int_hull[j.mask]
            if same_ann != same_int:
                return counterexample(
                    "L-P3",
                    ring.label,
                    {
                        "part": 1,
                        "ideal_i": list(i.members),
                        "ideal_j": list(j.members),
                        "ann_equal": same_ann,
                        "interior_equal": same_int,
                    },
                )
    singletons = [(a,) for a in ring.elements]
    subsets = [tuple(i.members) for i in family] + singletons
    for s in subsets:
        h = hull(view, s, Ambient.MIN)
        if interior(h).members != h.members:
            return counterexample(
                "L-P3",
                ring.label,
                {"part": 2, "subset": list(s), "hull": list(h.indices()), "interior": list(interior(h).indices())},
            )
    return holds("L-P3", ring.label)
