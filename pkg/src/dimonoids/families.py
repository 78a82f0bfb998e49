"""Constructors for the named semigroup families.

Left-handed forms are built directly from their case-split definitions; every
right-handed variant (RO, ROB, RO_arrow, RO_tilde0) is the dual of the
matching left-handed table and has no separate code path, so the two can
never drift apart.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import (
    ANotContainingA,
    BadFamilyParams,
    CarrierTooSmall,
    EmptyA,
    EmptyCarrier,
    EqualDistinguished,
    IndexOutOfRange,
    ZeroInA,
)
from .tables import OpTable, adjoin_zero, dual_table

FAMILIES = (
    "O", "O_A", "LO", "RO", "LO_tilde0", "RO_tilde0",
    "LOB", "ROB", "LO_arrow", "RO_arrow", "plus_zero",
)

_REQUIRED = {
    "O": frozenset({"zero"}),
    "O_A": frozenset({"zero", "A"}),
    "LO": frozenset(),
    "RO": frozenset(),
    "LO_tilde0": frozenset({"A"}),
    "RO_tilde0": frozenset({"A"}),
    "LOB": frozenset({"a", "c"}),
    "ROB": frozenset({"a", "c"}),
    "LO_arrow": frozenset({"A", "a"}),
    "RO_arrow": frozenset({"A", "a"}),
    "plus_zero": frozenset(),
}


def _check_size(n: int) -> None:
    if n <= 0:
        raise EmptyCarrier("carrier size must be at least 1")


def _check_index(v: int, n: int, what: str) -> None:
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
        raise IndexOutOfRange(f"{what} {v!r} outside 0..{n - 1}")


def null_sg(n: int, zero: int) -> OpTable:
    """x*y = zero for all x, y."""
    _check_size(n)
    _check_index(zero, n, "zero")
    return OpTable(n, (zero,) * (n * n))


def o_with_fixed(n: int, zero: int, A: Iterable[int]) -> OpTable:
    """x*y = x when y = x is in A, otherwise zero.

    Commutative with zero `zero`; a semilattice when A is everything but the
    zero, and the plain null table when A is empty.
    """
    _check_size(n)
    _check_index(zero, n, "zero")
    fixed = frozenset(A)
    for v in fixed:
        _check_index(v, n, "A element")
    if zero in fixed:
        raise ZeroInA(f"zero {zero} may not be a fixed point")
    ent = [zero] * (n * n)
    for x in fixed:
        ent[x * n + x] = x
    return OpTable(n, tuple(ent))


def left_zero_sg(n: int) -> OpTable:
    """x*y = x."""
    _check_size(n)
    return OpTable(n, tuple(x for x in range(n) for _ in range(n)))


def right_zero_sg(n: int) -> OpTable:
    """x*y = y; the dual of the left-zero table."""
    _check_size(n)
    return OpTable(n, tuple(y for _ in range(n) for y in range(n)))


def lo_tilde0(n: int, A: Iterable[int]) -> OpTable:
    """Partial left-zero table with an adjoined zero.

    `n` is the size of the base set; the carrier is 0..n with the zero at
    index n, and x*y = x when y is in A (a subset of 0..n-1), else the zero.
    With A = 0..n-1 this coincides with adjoin_zero(left_zero_sg(n)); with
    A empty it is the null table on n+1 elements.
    """
    _check_size(n)
    sel = frozenset(A)
    for v in sel:
        _check_index(v, n, "A element")
    m = n + 1
    ent = [n] * (m * m)
    for x in range(m):
        xm = x * m
        for y in sel:
            ent[xm + y] = x
    return OpTable(m, tuple(ent))


def lob(n: int, a: int, c: int) -> OpTable:
    """Left-zero band with distinguished pair (a, c): a*a = a, a*y = c for
    y != a, and x*y = x for x != a.  All choices of (a, c) give isomorphic
    tables."""
    if not isinstance(a, int) or not isinstance(c, int) or a == c:
        raise EqualDistinguished("a and c must be distinct elements")
    if n < 2:
        raise CarrierTooSmall("left-zero band needs at least 2 elements")
    _check_index(a, n, "a")
    _check_index(c, n, "c")
    ent = [0] * (n * n)
    for x in range(n):
        xn = x * n
        if x == a:
            for y in range(n):
                ent[xn + y] = a if y == a else c
        else:
            for y in range(n):
                ent[xn + y] = x
    return OpTable(n, tuple(ent))


def lo_arrow(n: int, A: Iterable[int], a: int) -> OpTable:
    """Partial left-zero table anchored at a: x*y = x for x in A and = a for x
    outside A.  Coincides with the null table (zero a) when A = {a} and with
    the left-zero table when A is everything."""
    _check_size(n)
    sel = frozenset(A)
    if not sel:
        raise EmptyA("A must be nonempty")
    for v in sel:
        _check_index(v, n, "A element")
    if a not in sel:
        raise ANotContainingA(f"a={a!r} must lie in A")
    ent = [a] * (n * n)
    for x in sel:
        ent[x * n:(x + 1) * n] = [x] * n
    return OpTable(n, tuple(ent))


def plus_zero_lo(n: int) -> OpTable:
    """Left-zero table with a fresh zero adjoined at index n."""
    return adjoin_zero(left_zero_sg(n))


@dataclass(frozen=True)
class FamilyParams:
    """Parameter record for :func:`build`; fields must be present exactly when
    the family uses them."""

    family: str
    n: int
    A: Optional[frozenset[int]] = None
    a: Optional[int] = None
    c: Optional[int] = None
    zero: Optional[int] = None

    def to_json(self) -> dict:
        doc: dict = {"family": self.family, "n": self.n}
        if self.A is not None:
            doc["A"] = sorted(self.A)
        if self.a is not None:
            doc["a"] = self.a
        if self.c is not None:
            doc["c"] = self.c
        if self.zero is not None:
            doc["zero"] = self.zero
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "FamilyParams":
        if not isinstance(doc, dict) or "family" not in doc or "n" not in doc:
            raise BadFamilyParams("family document needs 'family' and 'n' keys")
        unknown = set(doc) - {"family", "n", "A", "a", "c", "zero"}
        if unknown:
            raise BadFamilyParams(f"unknown keys {sorted(unknown)}")
        A = doc.get("A")
        return cls(
            family=doc["family"],
            n=doc["n"],
            A=None if A is None else frozenset(A),
            a=doc.get("a"),
            c=doc.get("c"),
            zero=doc.get("zero"),
        )


def make_params(family: str, n: int, A: Optional[Iterable[int]] = None,
                a: Optional[int] = None, c: Optional[int] = None,
                zero: Optional[int] = None) -> FamilyParams:
    return FamilyParams(family, n, None if A is None else frozenset(A), a, c, zero)


def build(params: FamilyParams) -> OpTable:
    """Dispatch a parameter record to its family constructor.

    Every table this returns is associative; the test suite verifies that
    exhaustively rather than assuming it.
    """
    fam = params.family
    if fam not in _REQUIRED:
        raise BadFamilyParams(f"unknown family {fam!r}; known: {', '.join(FAMILIES)}")
    present = {k for k in ("A", "a", "c", "zero") if getattr(params, k) is not None}
    if present != _REQUIRED[fam]:
        raise BadFamilyParams(
            f"family {fam} takes exactly {sorted(_REQUIRED[fam])}, got {sorted(present)}"
        )
    n = params.n
    if fam == "O":
        return null_sg(n, params.zero)
    if fam == "O_A":
        return o_with_fixed(n, params.zero, params.A)
    if fam == "LO":
        return left_zero_sg(n)
    if fam == "RO":
        return right_zero_sg(n)
    if fam == "LO_tilde0":
        return lo_tilde0(n, params.A)
    if fam == "RO_tilde0":
        return dual_table(lo_tilde0(n, params.A))
    if fam == "LOB":
        return lob(n, params.a, params.c)
    if fam == "ROB":
        return dual_table(lob(n, params.a, params.c))
    if fam == "LO_arrow":
        return lo_arrow(n, params.A, params.a)
    if fam == "RO_arrow":
        return dual_table(lo_arrow(n, params.A, params.a))
    return plus_zero_lo(n)


def subsets(universe: Iterable[int]) -> Iterator[frozenset[int]]:
    """All subsets of a finite index set, in deterministic bitmask order."""
    items = sorted(universe)
    for mask in range(1 << len(items)):
        yield frozenset(items[i] for i in range(len(items)) if mask >> i & 1)


def family_sweep(n_max: int) -> Iterator[tuple[FamilyParams, OpTable]]:
    """Every valid parameter choice for every family with 1 <= n <= n_max,
    built through the dispatcher."""
    for n in range(1, n_max + 1):
        for fam in ("LO", "RO", "plus_zero"):
            p = make_params(fam, n)
            yield p, build(p)
        for zero in range(n):
            p = make_params("O", n, zero=zero)
            yield p, build(p)
            for A in subsets(set(range(n)) - {zero}):
                p = make_params("O_A", n, A=A, zero=zero)
                yield p, build(p)
        for A in subsets(range(n)):
            for fam in ("LO_tilde0", "RO_tilde0"):
                p = make_params(fam, n, A=A)
                yield p, build(p)
            if A:
                for a in sorted(A):
                    for fam in ("LO_arrow", "RO_arrow"):
                        p = make_params(fam, n, A=A, a=a)
                        yield p, build(p)
        if n >= 2:
            for a in range(n):
                for c in range(n):
                    if a != c:
                        for fam in ("LOB", "ROB"):
                            p = make_params(fam, n, a=a, c=c)
                            yield p, build(p)
