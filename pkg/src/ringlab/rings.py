"""Finite commutative rings with unity, given by explicit Cayley tables.

A ring is a pair of ``size x size`` tables over element indices
``0..size-1`` plus distinguished ``zero`` and ``one``.  Constructors cover
integers mod n, finite products, and quotients of Z/n by a monic
polynomial; ``make_table`` imports raw tables and checks all ring axioms
eagerly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    AxiomViolation,
    DegeneratePoly,
    EmptyProduct,
    InvalidModulus,
    NonMonicPoly,
    QuotientBase,
    TrivialRing,
)


@dataclass(frozen=True)
class Construction:
    """Provenance of a ring: how it was built, for reports and printing."""

    kind: str  # "zmod" | "product" | "quotient" | "table"
    n: int | None = None
    factors: tuple[str, ...] | None = None
    base: str | None = None
    poly: tuple[int, ...] | None = None

    def as_dict(self) -> dict:
        out = {"kind": self.kind}
        if self.n is not None:
            out["n"] = self.n
        if self.factors is not None:
            out["factors"] = list(self.factors)
        if self.base is not None:
            out["base"] = self.base
        if self.poly is not None:
            out["poly"] = list(self.poly)
        return out


@dataclass(frozen=True, eq=False)
class RingTable:
    """Immutable finite commutative ring with unity.

    Identity is object identity: two structurally equal tables are still
    distinct rings for bookkeeping purposes (use ``same_tables`` to compare
    contents).
    """

    size: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    zero: int
    one: int
    label: str
    construction: Construction
    factor_rings: tuple["RingTable", ...] = field(default=(), repr=False)

    @property
    def elements(self) -> range:
        return range(self.size)

    @property
    def is_trivial(self) -> bool:
        return self.size == 1

    def neg(self, a: int) -> int:
        row = self.add[a]
        for b in self.elements:
            if row[b] == self.zero:
                return b
        raise AxiomViolation("additive-inverses", (a,), f"no additive inverse for {a}")

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg(b)]

    def __repr__(self):
        return f"RingTable({self.label}, size={self.size})"


def same_tables(r1: RingTable, r2: RingTable) -> bool:
    """Table-level equality, ignoring labels and provenance."""
    return (
        r1.size == r2.size
        and r1.add == r2.add
        and r1.mul == r2.mul
        and r1.zero == r2.zero
        and r1.one == r2.one
    )


def require_nontrivial(ring: RingTable) -> None:
    if ring.is_trivial:
        raise TrivialRing(f"{ring.label}: operation undefined on the one-element ring")


# ---------------------------------------------------------------------------
# axiom validation

_AXIOM_CHECKS = (
    "add-commutativity",
    "add-associativity",
    "additive-identity",
    "additive-inverses",
    "mul-commutativity",
    "mul-associativity",
    "multiplicative-identity",
    "distributivity",
)


def validate_ring(ring: RingTable) -> None:
    """Check all eight ring axioms exhaustively; raise AxiomViolation on the
    first failure, naming the axiom and a witness tuple."""
    n = ring.size
    add, mul = ring.add, ring.mul
    if n < 1:
        raise AxiomViolation("table-shape", (n,), "size must be positive")
    for table, name in ((add, "add"), (mul, "mul")):
        if len(table) != n:
            raise AxiomViolation("table-shape", (name, len(table)), f"{name} table has wrong row count")
        for i, row in enumerate(table):
            if len(row) != n:
                raise AxiomViolation("table-shape", (name, i), f"{name} row {i} has wrong length")
            for j, v in enumerate(row):
                if not 0 <= v < n:
                    raise AxiomViolation("entry-range", (name, i, j, v), f"{name}[{i}][{j}] = {v} out of range")
    if not 0 <= ring.zero < n or not 0 <= ring.one < n:
        raise AxiomViolation("entry-range", (ring.zero, ring.one), "zero/one out of range")
    if n > 1 and ring.zero == ring.one:
        raise AxiomViolation("multiplicative-identity", (ring.zero,), "zero equals one in a ring of size > 1")

    rng = range(n)
    for a in rng:
        for b in rng:
            if add[a][b] != add[b][a]:
                raise AxiomViolation("add-commutativity", (a, b), f"{a}+{b} != {b}+{a}")
            if mul[a][b] != mul[b][a]:
                raise AxiomViolation("mul-commutativity", (a, b), f"{a}*{b} != {b}*{a}")
    for a in rng:
        if add[ring.zero][a] != a:
            raise AxiomViolation("additive-identity", (ring.zero, a, add[ring.zero][a]), f"0+{a} != {a}")
        if mul[ring.one][a] != a:
            raise AxiomViolation("multiplicative-identity", (ring.one, a, mul[ring.one][a]), f"1*{a} != {a}")
    for a in rng:
        if all(add[a][b] != ring.zero for b in rng):
            raise AxiomViolation("additive-inverses", (a,), f"element {a} has no additive inverse")
    for a in rng:
        adda = add[a]
        mula = mul[a]
        for b in rng:
            ab_add = adda[b]
            ab_mul = mula[b]
            addab = add[ab_add]
            for c in rng:
                if addab[c] != adda[add[b][c]]:
                    raise AxiomViolation("add-associativity", (a, b, c), f"({a}+{b})+{c} != {a}+({b}+{c})")
                if mul[ab_mul][c] != mula[mul[b][c]]:
                    raise AxiomViolation("mul-associativity", (a, b, c), f"({a}*{b})*{c} != {a}*({b}*{c})")
                if mula[add[b][c]] != add[ab_mul][mula[c]]:
                    raise AxiomViolation("distributivity", (a, b, c), f"{a}*({b}+{c}) != {a}*{b}+{a}*{c}")


# ---------------------------------------------------------------------------
# constructors

def make_zmod(n: int, label: str | None = None) -> RingTable:
    """Integers modulo n, element i standing for residue i."""
    if n < 1:
        raise InvalidModulus(f"modulus must be >= 1, got {n}")
    add = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    mul = tuple(tuple((i * j) % n for j in range(n)) for i in range(n))
    return RingTable(
        size=n,
        add=add,
        mul=mul,
        zero=0,
        one=1 % n,
        label=label or f"Z{n}",
        construction=Construction(kind="zmod", n=n),
    )


def product_encode(sizes: tuple[int, ...], coords: tuple[int, ...]) -> int:
    """Mixed-radix index with the leftmost factor most significant."""
    idx = 0
    for s, c in zip(sizes, coords):
        idx = idx * s + c
    return idx


def product_decode(sizes: tuple[int, ...], idx: int) -> tuple[int, ...]:
    coords = []
    for s in reversed(sizes):
        coords.append(idx % s)
        idx //= s
    return tuple(reversed(coords))


def make_product(factors: list[RingTable], label: str | None = None) -> RingTable:
    """Componentwise ring on the cartesian product of the factors."""
    if not factors:
        raise EmptyProduct("product of rings needs at least one factor")
    sizes = tuple(f.size for f in factors)
    total = 1
    for s in sizes:
        total *= s
    coords = [product_decode(sizes, i) for i in range(total)]
    add_rows = []
    mul_rows = []
    for ca in coords:
        arow = []
        mrow = []
        for cb in coords:
            arow.append(product_encode(sizes, tuple(f.add[x][y] for f, x, y in zip(factors, ca, cb))))
            mrow.append(product_encode(sizes, tuple(f.mul[x][y] for f, x, y in zip(factors, ca, cb))))
        add_rows.append(tuple(arow))
        mul_rows.append(tuple(mrow))
    labels = tuple(f.label for f in factors)
    return RingTable(
        size=total,
        add=tuple(add_rows),
        mul=tuple(mul_rows),
        zero=product_encode(sizes, tuple(f.zero for f in factors)),
        one=product_encode(sizes, tuple(f.one for f in factors)),
        label=label or "x".join(labels),
        construction=Construction(kind="product", factors=labels),
        factor_rings=tuple(factors),
    )


def _poly_str(poly: tuple[int, ...]) -> str:
    terms = []
    for i in range(len(poly) - 1, -1, -1):
        c = poly[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append("x" if c == 1 else f"{c}x")
        else:
            terms.append(f"x^{i}" if c == 1 else f"{c}x^{i}")
    return "+".join(terms) if terms else "0"


def make_quotient(base: RingTable, poly: list[int], label: str | None = None) -> RingTable:
    """Quotient base[x]/(p) for a monic p of degree >= 1 over base = Z/n.

    Elements are coefficient vectors of length deg(p), indexed little-endian
    in base n.
    """
    if base.construction.kind != "zmod":
        raise QuotientBase(f"quotient base must be an integers-mod-n ring, got {base.label}")
    n = base.size
    coeffs = tuple(c % n for c in poly)
    k = len(coeffs) - 1
    if k < 1:
        raise DegeneratePoly("polynomial must have degree >= 1")
    if coeffs[k] != 1:
        raise NonMonicPoly(f"leading coefficient must be 1, got {coeffs[k]}")

    size = n ** k

    def decode(idx: int) -> list[int]:
        vec = []
        for _ in range(k):
            vec.append(idx % n)
            idx //= n
        return vec

    def encode(vec) -> int:
        idx = 0
        for c in reversed(vec):
            idx = idx * n + c
        return idx

    def reduce_poly(vec: list[int]) -> list[int]:
        # divide by the monic modulus, keep the remainder
        for d in range(len(vec) - 1, k - 1, -1):
            c = vec[d]
            if c:
                vec[d] = 0
                for j in range(k):
                    vec[d - k + j] = (vec[d - k + j] - c * coeffs[j]) % n
        return vec[:k]

    vectors = [decode(i) for i in range(size)]
    add_rows = []
    mul_rows = []
    for va in vectors:
        arow = []
        mrow = []
        for vb in vectors:
            arow.append(encode([(x + y) % n for x, y in zip(va, vb)]))
            conv = [0] * (2 * k - 1)
            for i, x in enumerate(va):
                if x:
                    for j, y in enumerate(vb):
                        conv[i + j] = (conv[i + j] + x * y) % n
            mrow.append(encode(reduce_poly(conv)))
        add_rows.append(tuple(arow))
        mul_rows.append(tuple(mrow))
    return RingTable(
        size=size,
        add=tuple(add_rows),
        mul=tuple(mul_rows),
        zero=0,
        one=1,
        label=label or f"{base.label}[x]/({_poly_str(coeffs)})",
        construction=Construction(kind="quotient", base=base.label, poly=coeffs),
    )


def make_table(size: int, add, mul, one: int, label: str | None = None) -> RingTable:
    """Import a raw table ring; derives zero and validates every axiom."""
    add_t = tuple(tuple(row) for row in add)
    mul_t = tuple(tuple(row) for row in mul)
    zero = None
    for e in range(size):
        if e < len(add_t) and len(add_t[e]) == size and all(add_t[e][x] == x for x in range(size)):
            zero = e
            break
    if zero is None:
        raise AxiomViolation("additive-identity", (), "no additive identity in table")
    ring = RingTable(
        size=size,
        add=add_t,
        mul=mul_t,
        zero=zero,
        one=one,
        label=label or f"table{size}",
        construction=Construction(kind="table"),
    )
    validate_ring(ring)
    return ring


# ---------------------------------------------------------------------------
# element predicates

def is_unit(ring: RingTable, a: int) -> bool:
    require_nontrivial(ring)
    row = ring.mul[a]
    return any(row[b] == ring.one for b in ring.elements)


def is_regular(ring: RingTable, a: int) -> bool:
    """True when a is not a zerodivisor (annihilator is zero)."""
    require_nontrivial(ring)
    row = ring.mul[a]
    zero = ring.zero
    return all(row[b] != zero for b in ring.elements if b != zero)


def is_idempotent(ring: RingTable, a: int) -> bool:
    return ring.mul[a][a] == a


def is_nilpotent(ring: RingTable, a: int) -> bool:
    # nilpotency index in a finite ring is at most its size
    x = a
    for _ in range(ring.size):
        if x == ring.zero:
            return True
        x = ring.mul[x][a]
    return x == ring.zero


def idempotents(ring: RingTable) -> list[int]:
    return [a for a in ring.elements if ring.mul[a][a] == a]


def units_mask(ring: RingTable) -> int:
    require_nontrivial(ring)
    mask = 0
    for a in ring.elements:
        if is_unit(ring, a):
            mask |= 1 << a
    return mask
