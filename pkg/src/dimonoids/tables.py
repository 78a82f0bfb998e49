"""Finite binary operations as Cayley tables, plus the single-operation
predicates and element roles everything else is built on.

Elements are the indices 0..n-1.  A table stores its entries row-major, so
``entries[x * n + y]`` is x * y with x the left operand.  All values are
immutable after construction and every function here is pure, so tables can be
shared freely between concurrent workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import EmptyCarrier, IndexOutOfRange, SizeMismatch

Witness = tuple[int, int, int]


@dataclass(frozen=True)
class OpTable:
    """Row-major n x n operation table.  Build through :func:`make_table` (or
    :func:`from_rows`), which validate; the raw constructor is for internal
    hot paths that produce entries already known to be in range."""

    n: int
    entries: tuple[int, ...]

    def entry(self, x: int, y: int) -> int:
        """x * y."""
        return self.entries[x * self.n + y]

    def rows(self) -> list[list[int]]:
        n = self.n
        return [list(self.entries[i * n:(i + 1) * n]) for i in range(n)]

    def to_json(self) -> dict:
        return {"n": self.n, "table": self.rows()}

    @classmethod
    def from_json(cls, doc: dict) -> "OpTable":
        if not isinstance(doc, dict) or "n" not in doc or "table" not in doc:
            raise SizeMismatch("operation-table document needs 'n' and 'table' keys")
        n = doc["n"]
        rows = doc["table"]
        if not isinstance(n, int) or not isinstance(rows, list):
            raise SizeMismatch("'n' must be an int and 'table' a list of rows")
        if len(rows) != n or any(not isinstance(r, list) or len(r) != n for r in rows):
            raise SizeMismatch(f"expected {n} rows of length {n}")
        return make_table(n, [v for row in rows for v in row])


def make_table(n: int, entries: Sequence[int]) -> OpTable:
    """Validate and build an OpTable from a row-major entry sequence.

    No algebraic law is assumed; only the shape and the index range are
    checked.
    """
    if n <= 0:
        raise EmptyCarrier("carrier size must be at least 1")
    ent = tuple(entries)
    if len(ent) != n * n:
        raise SizeMismatch(f"need {n * n} entries for n={n}, got {len(ent)}")
    for v in ent:
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
            raise IndexOutOfRange(f"entry {v!r} outside 0..{n - 1}")
    return OpTable(n, ent)


def from_rows(rows: Sequence[Sequence[int]]) -> OpTable:
    """Build a validated table from a square list of rows."""
    return make_table(len(rows), [v for row in rows for v in row])


def is_associative(t: OpTable) -> Optional[Witness]:
    """Return None when (x*y)*z = x*(y*z) holds for every triple, else the
    lexicographically first violating (x, y, z) in scan order x, then y, then z."""
    n, e = t.n, t.entries
    rng = range(n)
    for x in rng:
        xn = x * n
        for y in rng:
            xy = e[xn + y]
            yn = y * n
            for z in rng:
                if e[xy * n + z] != e[xn + e[yn + z]]:
                    return (x, y, z)
    return None


@dataclass(frozen=True)
class RoleReport:
    """Element roles of one table.  The zero is the unique element that is
    both a left and a right zero, when such an element exists."""

    left_zeros: frozenset[int]
    right_zeros: frozenset[int]
    zero: Optional[int]
    left_identities: frozenset[int]
    right_identities: frozenset[int]
    identities: frozenset[int]
    idempotents: frozenset[int]

    def to_json(self) -> dict:
        return {
            "left_zeros": sorted(self.left_zeros),
            "right_zeros": sorted(self.right_zeros),
            "zero": self.zero,
            "left_identities": sorted(self.left_identities),
            "right_identities": sorted(self.right_identities),
            "identities": sorted(self.identities),
            "idempotents": sorted(self.idempotents),
        }


def element_roles(t: OpTable) -> RoleReport:
    """Left/right zeros, left/right identities, two-sided identities, the zero
    if present, and the idempotents of a table."""
    n, e = t.n, t.entries
    rng = range(n)
    left_zeros = frozenset(z for z in rng if all(e[z * n + a] == z for a in rng))
    right_zeros = frozenset(z for z in rng if all(e[a * n + z] == z for a in rng))
    left_ids = frozenset(i for i in rng if all(e[i * n + a] == a for a in rng))
    right_ids = frozenset(i for i in rng if all(e[a * n + i] == a for a in rng))
    both = left_zeros & right_zeros
    # an element that is a zero on both sides is unique when it exists
    zero = min(both) if both else None
    return RoleReport(
        left_zeros=left_zeros,
        right_zeros=right_zeros,
        zero=zero,
        left_identities=left_ids,
        right_identities=right_ids,
        identities=left_ids & right_ids,
        idempotents=frozenset(x for x in rng if e[x * n + x] == x),
    )


@dataclass(frozen=True)
class ClassFlags:
    """Which defining identities a single table satisfies.  On non-associative
    tables the three-factor identities are read with left-to-right bracketing."""

    associative: bool
    commutative: bool
    band: bool
    semilattice: bool
    null: bool
    left_zero_sg: bool
    right_zero_sg: bool
    rectangular: bool
    right_commutative: bool

    def to_json(self) -> dict:
        return {
            "associative": self.associative,
            "commutative": self.commutative,
            "band": self.band,
            "semilattice": self.semilattice,
            "null": self.null,
            "left_zero_sg": self.left_zero_sg,
            "right_zero_sg": self.right_zero_sg,
            "rectangular": self.rectangular,
            "right_commutative": self.right_commutative,
        }


def semigroup_class(t: OpTable) -> ClassFlags:
    """Decide every flag by exhaustive quantifier check over the table.

    rectangular means x*y*z = x*z for all triples; right commutative means
    s*x*y = s*y*x for all triples; a semilattice is a commutative band; null
    means every product equals one fixed element.
    """
    n, e = t.n, t.entries
    rng = range(n)
    commutative = all(e[x * n + y] == e[y * n + x] for x in rng for y in rng)
    band = all(e[x * n + x] == x for x in rng)
    rectangular = all(
        e[e[x * n + y] * n + z] == e[x * n + z] for x in rng for y in rng for z in rng
    )
    right_commutative = all(
        e[e[s * n + x] * n + y] == e[e[s * n + y] * n + x]
        for s in rng for x in rng for y in rng
    )
    return ClassFlags(
        associative=is_associative(t) is None,
        commutative=commutative,
        band=band,
        semilattice=band and commutative,
        null=len(set(e)) == 1,
        left_zero_sg=all(e[x * n + y] == x for x in rng for y in rng),
        right_zero_sg=all(e[x * n + y] == y for x in rng for y in rng),
        rectangular=rectangular,
        right_commutative=right_commutative,
    )


def dual_table(t: OpTable) -> OpTable:
    """Same carrier with the arguments swapped: entry(x, y) of the result is
    entry(y, x) of the input.  Involutive."""
    n, e = t.n, t.entries
    return OpTable(n, tuple(e[y * n + x] for x in range(n) for y in range(n)))


def adjoin_zero(t: OpTable) -> OpTable:
    """Extend the table by a fresh absorbing element placed at index n;
    original entries are preserved."""
    n, e = t.n, t.entries
    m = n + 1
    ent = [n] * (m * m)
    for x in range(n):
        ent[x * m:x * m + n] = e[x * n:(x + 1) * n]
    return OpTable(m, tuple(ent))
