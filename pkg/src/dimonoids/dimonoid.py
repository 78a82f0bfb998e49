"""Pairs of Cayley tables as dimonoid candidates.

A dimonoid is a carrier with two associative operations (written <| and |>
here) tied together by three axioms:

    (x <| y) <| z = x <| (y |> z)          (inner/outer left)
    (x |> y) <| z = x |> (y <| z)          (mixed)
    (x <| y) |> z = x |> (y |> z)          (inner/outer right)

`pair` never rejects a failing pair: the axiom report is data, so enumerators
can count failures and counterexamples are first-class test objects.  The
predicate functions (`di_flags`, `halo`) refuse to run on pairs whose report
has failures, to keep classification meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import (
    EmptySubset,
    IndexOutOfRange,
    NotADimonoid,
    NotAssociative,
    NotRightCommutative,
    SizeMismatch,
)
from .tables import (
    OpTable,
    Witness,
    adjoin_zero,
    dual_table,
    element_roles,
    is_associative,
)

AXIOM_NAMES = ("assoc_left", "assoc_right", "d1", "d2", "d3")


def _check_d1(le: tuple, re_: tuple, n: int) -> Optional[Witness]:
    rng = range(n)
    for x in rng:
        xn = x * n
        for y in rng:
            xy = le[xn + y]
            yn = y * n
            for z in rng:
                if le[xy * n + z] != le[xn + re_[yn + z]]:
                    return (x, y, z)
    return None


def _check_d2(le: tuple, re_: tuple, n: int) -> Optional[Witness]:
    rng = range(n)
    for x in rng:
        xn = x * n
        for y in rng:
            xy = re_[xn + y]
            yn = y * n
            for z in rng:
                if le[xy * n + z] != re_[xn + le[yn + z]]:
                    return (x, y, z)
    return None


def _check_d3(le: tuple, re_: tuple, n: int) -> Optional[Witness]:
    rng = range(n)
    for x in rng:
        xn = x * n
        for y in rng:
            xy = le[xn + y]
            yn = y * n
            for z in rng:
                if re_[xy * n + z] != re_[xn + re_[yn + z]]:
                    return (x, y, z)
    return None


@dataclass(frozen=True)
class AxiomReport:
    """Per-axiom outcome: None means the axiom holds; otherwise the first
    violating triple in scan order x, then y, then z."""

    assoc_left: Optional[Witness]
    assoc_right: Optional[Witness]
    d1: Optional[Witness]
    d2: Optional[Witness]
    d3: Optional[Witness]

    @property
    def all_ok(self) -> bool:
        return (self.assoc_left is None and self.assoc_right is None
                and self.d1 is None and self.d2 is None and self.d3 is None)

    def failures(self) -> dict[str, Witness]:
        """Every failing axiom with its witness."""
        out = {}
        for name in AXIOM_NAMES:
            w = getattr(self, name)
            if w is not None:
                out[name] = w
        return out

    def to_json(self) -> dict:
        doc = {}
        for name in AXIOM_NAMES:
            w = getattr(self, name)
            doc[name] = "ok" if w is None else {"witness": list(w)}
        return doc


def _axiom_report(left: OpTable, right: OpTable) -> AxiomReport:
    le, re_, n = left.entries, right.entries, left.n
    return AxiomReport(
        assoc_left=is_associative(left),
        assoc_right=is_associative(right),
        d1=_check_d1(le, re_, n),
        d2=_check_d2(le, re_, n),
        d3=_check_d3(le, re_, n),
    )


def axioms_ok(left: OpTable, right: OpTable) -> bool:
    """Fast all-or-nothing axiom check used by the enumerators; equivalent to
    building the full report and asking all_ok."""
    le, re_, n = left.entries, right.entries, left.n
    return (is_associative(left) is None and is_associative(right) is None
            and _check_d1(le, re_, n) is None
            and _check_d2(le, re_, n) is None
            and _check_d3(le, re_, n) is None)


@dataclass(frozen=True)
class DiTable:
    """An ordered pair of same-size tables (left operation, right operation)
    with its axiom report.  Equality and hashing ignore the report, which is
    derived data."""

    left: OpTable
    right: OpTable
    axiom_status: AxiomReport = field(compare=False, repr=False)

    @property
    def n(self) -> int:
        return self.left.n

    @property
    def is_dimonoid(self) -> bool:
        return self.axiom_status.all_ok

    def to_json(self) -> dict:
        return {"n": self.n, "left": self.left.rows(), "right": self.right.rows()}

    @classmethod
    def from_json(cls, doc: dict) -> "DiTable":
        if not isinstance(doc, dict) or not {"n", "left", "right"} <= set(doc):
            raise SizeMismatch("dimonoid document needs 'n', 'left' and 'right' keys")
        left = OpTable.from_json({"n": doc["n"], "table": doc["left"]})
        right = OpTable.from_json({"n": doc["n"], "table": doc["right"]})
        return pair(left, right)


def pair(left: OpTable, right: OpTable) -> DiTable:
    """Pair two tables and populate the axiom report.  Non-dimonoids are not
    rejected; inspect ``DiTable.is_dimonoid`` or the report."""
    if left.n != right.n:
        raise SizeMismatch(f"carrier sizes differ: {left.n} vs {right.n}")
    return DiTable(left, right, _axiom_report(left, right))


def check_axioms(d: DiTable) -> AxiomReport:
    """Recompute the axiom report from the tables."""
    return _axiom_report(d.left, d.right)


def dual_dimonoid(d: DiTable) -> DiTable:
    """Swap-and-transpose duality: the new left operation is x, y -> y |> x and
    the new right operation is x, y -> y <| x.  Involutive, and the result is
    a dimonoid exactly when the input is."""
    return pair(dual_table(d.right), dual_table(d.left))


def naive_flip(d: DiTable) -> DiTable:
    """Transpose both tables independently.  Unlike dual_dimonoid this does
    not generally preserve the axioms; see the flipped left/right-zero pair,
    which fails the first axiom."""
    return pair(dual_table(d.left), dual_table(d.right))


@dataclass(frozen=True)
class DiFlags:
    """Predicate flags of a verified dimonoid.

    trivial: the two operations coincide.
    commutative: both operations are commutative.
    abelian: x <| y = y |> x everywhere (equivalently the right table is the
        dual of the left one, equivalently the dimonoid is self-dual).
    self_dual: equal to its dual as a labeled structure.
    rectangular: both operations satisfy x*y*z = x*z.
    """

    trivial: bool
    commutative: bool
    abelian: bool
    self_dual: bool
    rectangular: bool

    def to_json(self) -> dict:
        return {
            "trivial": self.trivial,
            "commutative": self.commutative,
            "abelian": self.abelian,
            "self_dual": self.self_dual,
            "rectangular": self.rectangular,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "DiFlags":
        return cls(
            trivial=bool(doc["trivial"]),
            commutative=bool(doc["commutative"]),
            abelian=bool(doc["abelian"]),
            self_dual=bool(doc["self_dual"]),
            rectangular=bool(doc["rectangular"]),
        )


def _require_dimonoid(d: DiTable) -> None:
    if not d.is_dimonoid:
        raise NotADimonoid(f"axioms fail: {d.axiom_status.failures()}")


def _is_rectangular(e: tuple, n: int) -> bool:
    rng = range(n)
    return all(e[e[x * n + y] * n + z] == e[x * n + z]
               for x in rng for y in rng for z in rng)


def di_flags(d: DiTable) -> DiFlags:
    """Compute the predicate flags of a verified dimonoid by exhaustive check.

    abelian and self_dual are computed independently (pointwise identity vs.
    comparison with the constructed dual); they must agree on dimonoids, and
    the test suite asserts that they do.
    """
    _require_dimonoid(d)
    n, le, re_ = d.n, d.left.entries, d.right.entries
    rng = range(n)
    commutative = (all(le[x * n + y] == le[y * n + x] for x in rng for y in rng)
                   and all(re_[x * n + y] == re_[y * n + x] for x in rng for y in rng))
    abelian = all(le[x * n + y] == re_[y * n + x] for x in rng for y in rng)
    dual = dual_dimonoid(d)
    return DiFlags(
        trivial=d.left == d.right,
        commutative=commutative,
        abelian=abelian,
        self_dual=dual.left == d.left and dual.right == d.right,
        rectangular=_is_rectangular(le, n) and _is_rectangular(re_, n),
    )


def halo(d: DiTable) -> frozenset[int]:
    """The set of bar-units: elements e with e |> x = x and x <| e = x for all
    x.  Nonempty halos are closed under both operations."""
    _require_dimonoid(d)
    n, le, re_ = d.n, d.left.entries, d.right.entries
    rng = range(n)
    return frozenset(
        e for e in rng
        if all(re_[e * n + x] == x for x in rng)
        and all(le[x * n + e] == x for x in rng)
    )


def di_zero(d: DiTable) -> Optional[int]:
    """The element that is a zero of both tables, if one exists."""
    zl = element_roles(d.left).zero
    if zl is None:
        return None
    zr = element_roles(d.right).zero
    return zl if zl == zr else None


def adjoin_zero_di(d: DiTable) -> DiTable:
    """Adjoin one fresh element absorbing under both operations, at index n.
    Preserves the axioms, the halo, and the automorphism group."""
    return pair(adjoin_zero(d.left), adjoin_zero(d.right))


def is_subdimonoid(d: DiTable, B: Iterable[int]) -> bool:
    """True when the nonempty subset B is closed under both operations."""
    sub = frozenset(B)
    if not sub:
        raise EmptySubset("subdimonoid candidates must be nonempty")
    n, le, re_ = d.n, d.left.entries, d.right.entries
    for v in sub:
        if not isinstance(v, int) or not 0 <= v < n:
            raise IndexOutOfRange(f"element {v!r} outside 0..{n - 1}")
    return all(le[a * n + b] in sub and re_[a * n + b] in sub
               for a in sub for b in sub)


def from_right_commutative(t: OpTable, strict: bool = False) -> DiTable:
    """Pair an associative table with its dual.

    The result satisfies the dimonoid axioms exactly when t is right
    commutative, and is then abelian.  With strict=True a table that is not
    right commutative is rejected instead of returned with a failing report.
    """
    w = is_associative(t)
    if w is not None:
        raise NotAssociative(f"not associative, witness {w}")
    if strict:
        n, e = t.n, t.entries
        rng = range(n)
        for s in rng:
            for x in rng:
                for y in rng:
                    if e[e[s * n + x] * n + y] != e[e[s * n + y] * n + x]:
                        raise NotRightCommutative(f"witness {(s, x, y)}")
    return pair(t, dual_table(t))
