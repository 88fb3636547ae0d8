"""Finite lattices from posets, distributivity and co-normality checks,
and the annihilator-intersection lattices built from M_f and P_f.

The node sets of the two ring lattices are the deduplicated ideals
``{M_f}`` and ``{P_f}`` ordered by inclusion.  The candidate operations
``join(a, b) = value at a^2 + b^2`` and ``meet(a, b) = value at a*b`` are
verified against the poset lub/glb rather than assumed; on rings without
squares behaving like positives the join check is expected to fail, and
the report records the first offending pair.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LatticeIncomplete, NotAPartialOrder, NotDistributive
from .ideals import IdealSet, canonical_key, members_of
from .rings import RingTable, require_nontrivial
from .zideals import _m_masks, _p_masks


@dataclass(frozen=True)
class FiniteLattice:
    elements: tuple
    leq: tuple[tuple[bool, ...], ...]
    join: tuple[tuple[int, ...], ...] | None
    join_missing: tuple[int, int] | None
    meet: tuple[tuple[int, ...], ...] | None
    meet_missing: tuple[int, int] | None
    bottom: int | None
    top: int | None

    def __len__(self):
        return len(self.elements)

    @property
    def is_complete(self) -> bool:
        return self.join is not None and self.meet is not None


def _bound_masks(leq):
    n = len(leq)
    up = [0] * n
    down = [0] * n
    for i in range(n):
        for j in range(n):
            if leq[i][j]:
                up[i] |= 1 << j
                down[j] |= 1 << i
    return up, down


def _least_of(candidates: int, up) -> int | None:
    """The member of the candidate set below every other member, if any."""
    for k in members_of(candidates):
        if candidates & ~up[k] == 0:
            return k
    return None


def _greatest_of(candidates: int, down) -> int | None:
    for k in members_of(candidates):
        if candidates & ~down[k] == 0:
            return k
    return None


def lattice_from_poset(elements, leq) -> FiniteLattice:
    """Build a lattice from a finite poset, verifying the order axioms and
    computing all pairwise lubs and glbs.  Join or meet tables are dropped
    (with a witness pair) as soon as one pair has no bound."""
    n = len(elements)
    leq_t = tuple(tuple(bool(x) for x in row) for row in leq)
    if len(leq_t) != n or any(len(row) != n for row in leq_t):
        raise NotAPartialOrder("relation table shape does not match the element count")
    if n > 4096:
        raise NotAPartialOrder(f"poset too large: {n} > 4096 elements")
    for i in range(n):
        if not leq_t[i][i]:
            raise NotAPartialOrder(f"relation is not reflexive at {i}", witness=[i])
    for i in range(n):
        for j in range(n):
            if i != j and leq_t[i][j] and leq_t[j][i]:
                raise NotAPartialOrder(f"antisymmetry fails at ({i}, {j})", witness=[i, j])
            if leq_t[i][j]:
                for k in range(n):
                    if leq_t[j][k] and not leq_t[i][k]:
                        raise NotAPartialOrder(
                            f"transitivity fails at ({i}, {j}, {k})", witness=[i, j, k]
                        )

    up, down = _bound_masks(leq_t)
    join_rows = []
    meet_rows = []
    join_missing = None
    meet_missing = None
    for i in range(n):
        jrow = []
        mrow = []
        for j in range(n):
            lub = _least_of(up[i] & up[j], up)
            if lub is None and join_missing is None:
                join_missing = (i, j)
            jrow.append(lub)
            glb = _greatest_of(down[i] & down[j], down)
            if glb is None and meet_missing is None:
                meet_missing = (i, j)
            mrow.append(glb)
        join_rows.append(tuple(jrow))
        meet_rows.append(tuple(mrow))
    full = (1 << n) - 1
    bottom = _least_of(full, up)
    top = _greatest_of(full, down)
    return FiniteLattice(
        elements=tuple(elements),
        leq=leq_t,
        join=tuple(join_rows) if join_missing is None else None,
        join_missing=join_missing,
        meet=tuple(meet_rows) if meet_missing is None else None,
        meet_missing=meet_missing,
        bottom=bottom,
        top=top,
    )


def is_distributive(lattice: FiniteLattice) -> tuple[bool, tuple[int, int, int] | None]:
    """Check meet-over-join distributivity over all triples."""
    if not lattice.is_complete:
        raise LatticeIncomplete("distributivity needs total join and meet tables")
    join, meet = lattice.join, lattice.meet
    n = len(lattice)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]]:
                    return False, (a, b, c)
    return True, None


def is_conormal(lattice: FiniteLattice) -> tuple[bool, tuple[int, int] | None]:
    """Every disjoint pair must be split by a pair joining to the top.

    Only defined for bounded distributive lattices; non-distributive input
    is an error rather than a false.
    """
    if not lattice.is_complete:
        raise LatticeIncomplete("co-normality needs total join and meet tables")
    if lattice.bottom is None or lattice.top is None:
        raise LatticeIncomplete("co-normality needs a bottom and a top")
    ok, witness = is_distributive(lattice)
    if not ok:
        raise NotDistributive(
            "co-normality is only defined for distributive lattices",
            witness=list(witness),
        )
    join, meet = lattice.join, lattice.meet
    bot, top = lattice.bottom, lattice.top
    n = len(lattice)
    for a in range(n):
        for b in range(n):
            if meet[a][b] != bot:
                continue
            found = False
            for x in range(n):
                if meet[x][a] != bot:
                    continue
                for y in range(n):
                    if join[x][y] == top and meet[y][b] == bot:
                        found = True
                        break
                if found:
                    break
            if not found:
                return False, (a, b)
    return True, None


def boolean_lattice(n: int) -> FiniteLattice:
    """Subset lattice of an n-element set (used as a reference shape)."""
    size = 1 << n
    elements = tuple(range(size))
    leq = [[(a & ~b) == 0 for b in elements] for a in elements]
    return lattice_from_poset(elements, leq)


# ---------------------------------------------------------------------------
# the M_f / P_f lattices

@dataclass(frozen=True)
class LatticeBuildReport:
    kind: str  # "bz" | "bzo"
    ring: RingTable
    lattice: FiniteLattice
    node_masks: tuple[int, ...]
    element_node: tuple[int, ...]
    well_defined: bool
    well_defined_witness: dict | None
    is_join: bool
    join_witness: dict | None
    is_meet: bool
    meet_witness: dict | None

    def node_members(self) -> list[list[int]]:
        return [list(members_of(m)) for m in self.node_masks]


def _build_value_lattice(ring: RingTable, value_masks, kind: str) -> LatticeBuildReport:
    size = ring.size
    node_masks = tuple(sorted(set(value_masks), key=lambda m: canonical_key(m, size)))
    node_index = {m: i for i, m in enumerate(node_masks)}
    element_node = tuple(node_index[value_masks[a]] for a in ring.elements)
    nn = len(node_masks)
    leq = [[node_masks[i] & ~node_masks[j] == 0 for j in range(nn)] for i in range(nn)]
    lattice = lattice_from_poset(
        tuple(IdealSet(ring, m) for m in node_masks), leq
    )
    up, down = _bound_masks(leq)

    add, mul = ring.add, ring.mul
    sq = [mul[a][a] for a in ring.elements]

    # the operation values must not depend on the representative chosen
    well_defined = True
    wd_witness = None
    seen: dict = {}
    for a in ring.elements:
        for b in ring.elements:
            pair = (element_node[a], element_node[b])
            values = (element_node[add[sq[a]][sq[b]]], element_node[mul[a][b]])
            if pair not in seen:
                seen[pair] = (a, b, values)
            else:
                a0, b0, values0 = seen[pair]
                if values0 != values and well_defined:
                    well_defined = False
                    op = "join" if values0[0] != values[0] else "meet"
                    wd_witness = {"op": op, "a": a0, "a_alt": a, "b": b0, "b_alt": b}

    # compare the operations against the poset bounds on distinct node pairs
    reps = [None] * nn
    for a in ring.elements:
        if reps[element_node[a]] is None:
            reps[element_node[a]] = a
    is_join = True
    join_witness = None
    is_meet = True
    meet_witness = None
    for i in range(nn):
        for j in range(nn):
            if i == j:
                continue
            ra, rb = reps[i], reps[j]
            lub = _least_of(up[i] & up[j], up)
            if lub is not None and is_join:
                got = element_node[add[sq[ra]][sq[rb]]]
                if got != lub:
                    is_join = False
                    join_witness = {
                        "a": ra,
                        "b": rb,
                        "formula_value": list(members_of(node_masks[got])),
                        "bound": list(members_of(node_masks[lub])),
                    }
            glb = _greatest_of(down[i] & down[j], down)
            if glb is not None and is_meet:
                got = element_node[mul[ra][rb]]
                if got != glb:
                    is_meet = False
                    meet_witness = {
                        "a": ra,
                        "b": rb,
                        "formula_value": list(members_of(node_masks[got])),
                        "bound": list(members_of(node_masks[glb])),
                    }
    return LatticeBuildReport(
        kind=kind,
        ring=ring,
        lattice=lattice,
        node_masks=node_masks,
        element_node=element_node,
        well_defined=well_defined,
        well_defined_witness=wd_witness,
        is_join=is_join,
        join_witness=join_witness,
        is_meet=is_meet,
        meet_witness=meet_witness,
    )


def build_bz(ring: RingTable) -> LatticeBuildReport:
    """Lattice of the ideals M_f (intersections of maximal ideals over f)."""
    require_nontrivial(ring)
    return _build_value_lattice(ring, _m_masks(ring), "bz")


def build_bzo(ring: RingTable) -> LatticeBuildReport:
    """Lattice of the ideals P_f (intersections of minimal primes over f)."""
    require_nontrivial(ring)
    return _build_value_lattice(ring, _p_masks(ring), "bzo")
