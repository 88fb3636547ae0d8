"""Ideals of a finite ring as element subsets.

An ideal is stored as a bitmask over element indices, which makes
intersection, containment and canonical ordering cheap.  The canonical
order of a family is ascending by the ideal's bit-vector key, read with
element 0 as the most significant digit; the key is a linear extension of
inclusion, so the zero ideal always comes first and the whole ring last.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import FamilyMismatch, IdealLimitExceeded, MixedRings
from .rings import RingTable, is_regular, is_unit, require_nontrivial

DEFAULT_IDEAL_LIMIT = 100000


def mask_of(members) -> int:
    m = 0
    for a in members:
        m |= 1 << a
    return m


def members_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def canonical_key(mask: int, size: int) -> int:
    """Bit-vector of the member set read as an integer, element 0 first."""
    key = 0
    for i in range(size):
        key = (key << 1) | ((mask >> i) & 1)
    return key


@dataclass(frozen=True)
class IdealSet:
    ring: RingTable
    mask: int

    @property
    def members(self) -> tuple[int, ...]:
        return members_of(self.mask)

    @property
    def key(self) -> int:
        return canonical_key(self.mask, self.ring.size)

    def __contains__(self, a: int) -> bool:
        return bool(self.mask >> a & 1)

    def issubset(self, other: "IdealSet") -> bool:
        return self.mask & ~other.mask == 0

    @property
    def is_zero(self) -> bool:
        return self.mask == 1 << self.ring.zero

    @property
    def is_whole_ring(self) -> bool:
        return self.mask == (1 << self.ring.size) - 1

    def __repr__(self):
        return f"IdealSet({self.ring.label}, {{{','.join(map(str, self.members))}}})"


@dataclass(frozen=True)
class IdealFamily:
    ring: RingTable
    ideals: tuple[IdealSet, ...]

    def __len__(self):
        return len(self.ideals)

    def __iter__(self):
        return iter(self.ideals)

    def masks(self) -> tuple[int, ...]:
        return tuple(i.mask for i in self.ideals)


def _require_same_ring(i: IdealSet, j: IdealSet) -> RingTable:
    if i.ring is not j.ring:
        raise MixedRings(f"ideals of {i.ring.label} and {j.ring.label} cannot be combined")
    return i.ring


def is_ideal_mask(ring: RingTable, mask: int) -> bool:
    """Exhaustive check: contains zero, closed under + and negation,
    absorbs ring multiplication."""
    if not mask >> ring.zero & 1:
        return False
    members = members_of(mask)
    for a in members:
        if not mask >> ring.neg(a) & 1:
            return False
        for b in members:
            if not mask >> ring.add[a][b] & 1:
                return False
        for r in ring.elements:
            if not mask >> ring.mul[r][a] & 1:
                return False
    return True


def _additive_closure(ring: RingTable, mask: int) -> int:
    """Close a negation-stable, multiplication-absorbing set under +."""
    add = ring.add
    elems = list(members_of(mask))
    queue = list(elems)
    while queue:
        a = queue.pop()
        row = add[a]
        for b in list(members_of(mask)):
            c = row[b]
            if not mask >> c & 1:
                mask |= 1 << c
                queue.append(c)
    return mask


def generated_ideal(ring: RingTable, gens) -> IdealSet:
    """Smallest ideal containing the generators."""
    mask = 1 << ring.zero
    for s in gens:
        if not 0 <= s < ring.size:
            raise ValueError(f"element {s} out of range for {ring.label}")
        for r in ring.elements:
            mask |= 1 << ring.mul[r][s]
    return IdealSet(ring, _additive_closure(ring, mask))


def principal_ideal(ring: RingTable, a: int) -> IdealSet:
    # aR = {a*r} is already an ideal in a unital ring: a*r + a*s = a*(r+s)
    row = ring.mul[a]
    return IdealSet(ring, mask_of(row[r] for r in ring.elements))


def annihilator(ring: RingTable, subset) -> IdealSet:
    """All x with x*s = 0 for every s in the subset; Ann(empty) = R."""
    zero = ring.zero
    mask = 0
    ss = tuple(subset)
    for x in ring.elements:
        row = ring.mul[x]
        if all(row[s] == zero for s in ss):
            mask |= 1 << x
    return IdealSet(ring, mask)


def annihilator_of_ideal(ideal: IdealSet) -> IdealSet:
    return annihilator(ideal.ring, ideal.members)


@lru_cache(maxsize=None)
def element_ann_masks(ring: RingTable) -> tuple[int, ...]:
    """Annihilator of each single element, as bitmasks indexed by element."""
    zero = ring.zero
    out = []
    for a in ring.elements:
        mask = 0
        for x in ring.elements:
            if ring.mul[x][a] == zero:
                mask |= 1 << x
        out.append(mask)
    return tuple(out)


@lru_cache(maxsize=None)
def principal_masks(ring: RingTable) -> tuple[int, ...]:
    return tuple(principal_ideal(ring, a).mask for a in ring.elements)


def ideal_sum(i: IdealSet, j: IdealSet) -> IdealSet:
    ring = _require_same_ring(i, j)
    add = ring.add
    mask = 0
    for a in i.members:
        row = add[a]
        for b in j.members:
            mask |= 1 << row[b]
    return IdealSet(ring, mask)


def ideal_product(i: IdealSet, j: IdealSet) -> IdealSet:
    ring = _require_same_ring(i, j)
    mul = ring.mul
    mask = 1 << ring.zero
    for a in i.members:
        row = mul[a]
        for b in j.members:
            mask |= 1 << row[b]
    return IdealSet(ring, _additive_closure(ring, mask))


def ideal_intersect(i: IdealSet, j: IdealSet) -> IdealSet:
    ring = _require_same_ring(i, j)
    return IdealSet(ring, i.mask & j.mask)


@lru_cache(maxsize=None)
def _all_ideal_masks(ring: RingTable, limit: int) -> tuple[int, ...]:
    require_nontrivial(ring)
    principal = sorted({principal_ideal(ring, a).mask for a in ring.elements})
    seen = set(principal)
    queue = list(principal)
    add = ring.add
    while queue:
        mask = queue.pop()
        base = members_of(mask)
        for p in principal:
            if p & ~mask == 0:
                continue
            s = 0
            for a in base:
                row = add[a]
                for b in members_of(p):
                    s |= 1 << row[b]
            if s not in seen:
                seen.add(s)
                if len(seen) > limit:
                    raise IdealLimitExceeded(
                        f"{ring.label}: more than {limit} ideals", limit=limit
                    )
                queue.append(s)
    size = ring.size
    return tuple(sorted(seen, key=lambda m: canonical_key(m, size)))


def all_ideals(ring: RingTable, limit: int = DEFAULT_IDEAL_LIMIT) -> IdealFamily:
    """Every ideal, via closure of the principal ideals under sums."""
    masks = _all_ideal_masks(ring, limit)
    return IdealFamily(ring, tuple(IdealSet(ring, m) for m in masks))


def contains_regular(ideal: IdealSet) -> tuple[bool, int | None]:
    """Least regular member, if any."""
    ring = ideal.ring
    require_nontrivial(ring)
    for a in ideal.members:
        if is_regular(ring, a):
            return True, a
    return False, None


def contains_unit(ideal: IdealSet) -> tuple[bool, int | None]:
    ring = ideal.ring
    require_nontrivial(ring)
    for a in ideal.members:
        if is_unit(ring, a):
            return True, a
    return False, None


def check_family(family: IdealFamily, ring: RingTable) -> None:
    if family.ring is not ring:
        raise FamilyMismatch(
            f"ideal family belongs to {family.ring.label}, not {ring.label}"
        )
