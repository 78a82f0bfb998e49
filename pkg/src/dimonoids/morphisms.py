"""Permutation actions on dimonoids: homomorphism/isomorphism checking,
automorphism enumeration, matching automorphism sets against products of
symmetric groups, and lexicographic canonical forms.

Every function here also accepts a bare OpTable where a dimonoid is expected,
treating it as the trivial dimonoid whose two operations coincide; that makes
the same machinery usable for plain semigroups.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _permutations
from math import factorial
from typing import Callable, Iterator, NamedTuple, Optional, Sequence, Union

from .dimonoid import DiTable, di_flags, halo, pair
from .errors import BadPartition, BoundExceeded, IndexOutOfRange, NotADimonoid, SizeMismatch
from .tables import OpTable, element_roles

CANONICAL_BOUND = 5


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of 0..n-1 stored as its image tuple."""

    images: tuple[int, ...]

    @classmethod
    def of(cls, images: Sequence[int]) -> "Permutation":
        imgs = tuple(images)
        if sorted(imgs) != list(range(len(imgs))):
            raise IndexOutOfRange(f"{imgs!r} is not a bijection of 0..{len(imgs) - 1}")
        return cls(imgs)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self . other)(x) = self(other(x))."""
        return Permutation(tuple(self.images[v] for v in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation(tuple(inv))

    def to_json(self) -> dict:
        return {"images": list(self.images)}

    @classmethod
    def from_json(cls, doc: dict) -> "Permutation":
        return cls.of(doc["images"])


def all_permutations(n: int) -> Iterator[Permutation]:
    for images in _permutations(range(n)):
        yield Permutation(images)


def as_ditable(s: Union[OpTable, DiTable]) -> DiTable:
    """Wrap a bare table as the trivial dimonoid; pass dimonoids through."""
    return s if isinstance(s, DiTable) else pair(s, s)


def relabel_table(t: OpTable, p: Permutation) -> OpTable:
    """Transport the table along p: new(p(x), p(y)) = p(old(x, y))."""
    n, e, img = t.n, t.entries, p.images
    out = [0] * (n * n)
    for x in range(n):
        xn = x * n
        px_n = img[x] * n
        for y in range(n):
            out[px_n + img[y]] = img[e[xn + y]]
    return OpTable(n, tuple(out))


def relabel_dimonoid(d: DiTable, p: Permutation) -> DiTable:
    return pair(relabel_table(d.left, p), relabel_table(d.right, p))


class MorphismCheck(NamedTuple):
    homomorphism: bool
    isomorphism: bool


Mapping = Union[Permutation, Sequence[int], Callable[[int], int]]


def check_morphism(src: Union[OpTable, DiTable], dst: Union[OpTable, DiTable],
                   mapping: Mapping) -> MorphismCheck:
    """Check whether a total map src -> dst respects both operations, and
    whether it is additionally an isomorphism (bijective, equal carriers).

    Passing a Permutation across carriers of different sizes is a usage error
    and raises SizeMismatch; arbitrary maps between different carriers are
    fine and simply can never be isomorphisms.
    """
    src = as_ditable(src)
    dst = as_ditable(dst)
    if isinstance(mapping, Permutation):
        if src.n != dst.n or mapping.n != src.n:
            raise SizeMismatch("permutations only map a carrier to itself-sized carrier")
        images = mapping.images
    elif callable(mapping):
        images = tuple(mapping(x) for x in range(src.n))
    else:
        images = tuple(mapping)
        if len(images) != src.n:
            raise SizeMismatch(f"map must be total on 0..{src.n - 1}")
    for v in images:
        if not 0 <= v < dst.n:
            raise IndexOutOfRange(f"image {v!r} outside 0..{dst.n - 1}")

    n, m = src.n, dst.n
    sl, sr = src.left.entries, src.right.entries
    dl, dr = dst.left.entries, dst.right.entries
    hom = True
    for x in range(n):
        xn = x * n
        ix_m = images[x] * m
        for y in range(n):
            if (images[sl[xn + y]] != dl[ix_m + images[y]]
                    or images[sr[xn + y]] != dr[ix_m + images[y]]):
                hom = False
                break
        if not hom:
            break
    iso = hom and n == m and len(set(images)) == n
    return MorphismCheck(hom, iso)


@dataclass(frozen=True)
class AutSet:
    """The full automorphism set of a structure.  Iterates in sorted order so
    downstream output is deterministic."""

    perms: frozenset[Permutation]

    @property
    def order(self) -> int:
        return len(self.perms)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(sorted(self.perms))

    def __contains__(self, p: Permutation) -> bool:
        return p in self.perms

    def is_group(self) -> bool:
        """Identity present, closed under composition and inverse."""
        if not self.perms:
            return False
        n = next(iter(self.perms)).n
        if Permutation.identity(n) not in self.perms:
            return False
        return all(p.inverse() in self.perms for p in self.perms) and all(
            p.compose(q) in self.perms for p in self.perms for q in self.perms
        )

    def to_json(self) -> dict:
        # simplest faithful encoding: the generators are the whole set
        return {"order": self.order, "generators": [p.to_json() for p in self]}


def _element_signatures(d: DiTable) -> list[tuple]:
    """Per-element role profile preserved by every automorphism: left/right
    zero-ness, left/right identity-ness and idempotency in each table."""
    sigs = []
    for t in (d.left, d.right):
        roles = element_roles(t)
        sigs.append([
            (x in roles.left_zeros, x in roles.right_zeros,
             x in roles.left_identities, x in roles.right_identities,
             x in roles.idempotents)
            for x in range(d.n)
        ])
    return [sigs[0][x] + sigs[1][x] for x in range(d.n)]


def automorphisms(structure: Union[OpTable, DiTable]) -> AutSet:
    """All permutations that are isomorphisms of the structure onto itself.

    Backtracking search: candidate images are restricted to elements with the
    same role profile, and partial maps are discarded as soon as they violate
    either operation on already-assigned products.  The result is identical to
    the full n!-scan (asserted in the tests), just much smaller in practice.
    """
    d = as_ditable(structure)
    if not d.is_dimonoid:
        raise NotADimonoid(f"axioms fail: {d.axiom_status.failures()}")
    n = d.n
    le, re_ = d.left.entries, d.right.entries
    sig = _element_signatures(d)
    candidates = [[v for v in range(n) if sig[v] == sig[x]] for x in range(n)]
    images = [-1] * n
    used = [False] * n
    found: list[Permutation] = []

    def consistent(k: int) -> bool:
        # verify both operations on all pairs of assigned elements whose
        # product is also assigned; at k = n-1 this is the full check
        for i in range(k + 1):
            ii_n = images[i] * n
            i_n = i * n
            for j in range(k + 1):
                jj = images[j]
                p = le[i_n + j]
                if p <= k and le[ii_n + jj] != images[p]:
                    return False
                q = re_[i_n + j]
                if q <= k and re_[ii_n + jj] != images[q]:
                    return False
        return True

    def extend(k: int) -> None:
        if k == n:
            found.append(Permutation(tuple(images)))
            return
        for v in candidates[k]:
            if used[v]:
                continue
            images[k] = v
            used[v] = True
            if consistent(k):
                extend(k + 1)
            used[v] = False
        images[k] = -1

    extend(0)
    return AutSet(frozenset(found))


def automorphisms_brute(structure: Union[OpTable, DiTable]) -> AutSet:
    """Reference implementation: filter all n! permutations."""
    d = as_ditable(structure)
    if not d.is_dimonoid:
        raise NotADimonoid(f"axioms fail: {d.axiom_status.failures()}")
    return AutSet(frozenset(
        p for p in all_permutations(d.n) if check_morphism(d, d, p).isomorphism
    ))


@dataclass(frozen=True)
class SymmetricProductSpec:
    """Shape of an automorphism group acting naturally: every listed fixed
    point is held pointwise and each block may be permuted freely within
    itself.  Empty blocks are dropped on construction."""

    fixed: frozenset[int]
    blocks: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, fixed: Sequence[int] | frozenset[int],
           blocks: Sequence[Sequence[int] | frozenset[int]]) -> "SymmetricProductSpec":
        blks = tuple(sorted((frozenset(b) for b in blocks if b), key=min))
        return cls(frozenset(fixed), blks)

    def carrier_size(self) -> int:
        """Validate that fixed points and blocks partition 0..n-1; return n."""
        parts = [self.fixed, *self.blocks]
        total = sum(len(p) for p in parts)
        union = frozenset().union(*parts) if parts else frozenset()
        if len(union) != total or union != frozenset(range(total)):
            raise BadPartition("fixed points and blocks must partition 0..n-1")
        return total

    @property
    def order(self) -> int:
        return _prod_factorials(self.blocks)


def _prod_factorials(blocks: tuple[frozenset[int], ...]) -> int:
    out = 1
    for b in blocks:
        out *= factorial(len(b))
    return out


def matches_symmetric_product(auts: AutSet, spec: SymmetricProductSpec) -> bool:
    """True iff the automorphism set is exactly the block-preserving group:
    every member fixes the fixed points and maps each block onto itself, and
    the order equals the product of the block factorials.  Because the
    block-preserving permutations form a group of exactly that order, order
    equality plus membership gives set equality."""
    n = spec.carrier_size()
    if auts.order != spec.order:
        return False
    for p in auts.perms:
        if p.n != n:
            return False
        img = p.images
        if any(img[f] != f for f in spec.fixed):
            return False
        if any(frozenset(img[b] for b in block) != block for block in spec.blocks):
            return False
    return True


def canonical_key(d: Union[OpTable, DiTable],
                  bound: int = CANONICAL_BOUND) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The lexicographically least (left entries, right entries) over all
    relabelings; the comparison key behind canonical_form."""
    d = as_ditable(d)
    n = d.n
    if n > bound:
        raise BoundExceeded(f"canonical form limited to n <= {bound}, got {n}")
    le, re_ = d.left.entries, d.right.entries
    best: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None
    size = n * n
    for img in _permutations(range(n)):
        out_l = [0] * size
        out_r = [0] * size
        for x in range(n):
            xn = x * n
            px_n = img[x] * n
            for y in range(n):
                pxy = px_n + img[y]
                out_l[pxy] = img[le[xn + y]]
                out_r[pxy] = img[re_[xn + y]]
        key = (tuple(out_l), tuple(out_r))
        if best is None or key < best:
            best = key
    assert best is not None
    return best


def canonical_form(d: Union[OpTable, DiTable], bound: int = CANONICAL_BOUND) -> DiTable:
    """The canonical representative of the isomorphism class: relabel by every
    permutation and keep the lexicographically least concatenated table pair.
    Stable under relabeling: canonical_form(relabel(d, p)) = canonical_form(d)."""
    d = as_ditable(d)
    key_l, key_r = canonical_key(d, bound)
    return pair(OpTable(d.n, key_l), OpTable(d.n, key_r))


def fingerprint(d: Union[OpTable, DiTable]) -> tuple:
    """Cheap isomorphism-invariant profile used to reject non-isomorphic pairs
    before paying for canonical forms."""
    d = as_ditable(d)
    report = d.axiom_status
    ok_pattern = tuple(getattr(report, name) is None for name in
                       ("assoc_left", "assoc_right", "d1", "d2", "d3"))
    sigs = tuple(sorted(_element_signatures(d)))
    if d.is_dimonoid:
        fl = di_flags(d)
        extra = ((fl.trivial, fl.commutative, fl.abelian, fl.self_dual, fl.rectangular),
                 len(halo(d)))
    else:
        extra = None
    return (d.n, ok_pattern, sigs, extra)


def are_isomorphic(d1: Union[OpTable, DiTable], d2: Union[OpTable, DiTable],
                   bound: int = CANONICAL_BOUND) -> bool:
    """Isomorphism test: size/fingerprint fast rejection, then canonical-form
    equality.  Different carrier sizes give False, not an error."""
    d1 = as_ditable(d1)
    d2 = as_ditable(d2)
    if d1.n != d2.n:
        return False
    if d1.left == d2.left and d1.right == d2.right:
        return True
    if fingerprint(d1) != fingerprint(d2):
        return False
    return canonical_key(d1, bound) == canonical_key(d2, bound)
