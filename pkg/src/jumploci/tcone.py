"""Exponential tangent cones via admissible partitions.

A Laurent polynomial f = sum_{a in S} c_a t^a vanishes identically on the
one-parameter subgroup exp(z C) (z a rational direction) iff the support
splits into parts on which z is constant as a linear functional and each
part's coefficients sum to zero.  Such set partitions of S are *admissible*
(every part sums to zero exactly), and each contributes the subspace

    L(p) = { x in Q^n : (a - b) . x = 0  whenever a, b lie in one part }.

The exponential tangent cone of V(f) at 1 is the finite union of the L(p);
only partitions whose subspace is maximal matter.  Intersecting over several
polynomials and over the components of a variety description gives the
degree-one characteristic arrangement.

>>> f = LaurentPoly.parse("t1 + t2 - 2")
>>> [s.basis for s in tangent_cone_polys([f]).subspaces]
[()]
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

from .laurent import LaurentPoly
from .qlinalg import RationalSubspace, lattice_coset_membership, nullspace
from .tori import VarietyDescription

Expo = tuple[int, ...]

DEFAULT_SUPPORT_LIMIT = 16


# ---------------------------------------------------------------------------
# admissible partitions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AdmissiblePartition:
    """A set partition of a polynomial support with zero-sum parts.

    Parts are canonically ordered: elements sorted within each part, parts
    sorted by their least element.
    """
    parts: tuple[tuple[Expo, ...], ...]

    @classmethod
    def from_parts(cls, parts: Iterable[Iterable[Expo]]) -> "AdmissiblePartition":
        canon = sorted((tuple(sorted(tuple(e) for e in part)) for part in parts),
                       key=lambda p: p[0])
        return cls(tuple(canon))

    def refines(self, other: "AdmissiblePartition") -> bool:
        """Every part of self lies inside a part of other."""
        lookup = {}
        for i, part in enumerate(other.parts):
            for e in part:
                lookup[e] = i
        for part in self.parts:
            owners = {lookup.get(e) for e in part}
            if len(owners) != 1 or None in owners:
                return False
        return True

    def to_json(self) -> list:
        return [[list(e) for e in part] for part in self.parts]


def _zero_sum_parts(anchor: Expo, others: Sequence[Expo],
                    coeffs: dict) -> Iterator[tuple[list[Expo], list[Expo]]]:
    """All (part, remaining) with anchor in part and zero coefficient sum."""
    target = coeffs[anchor]

    def rec(i: int, chosen: list[Expo], total: Fraction):
        if i == len(others):
            if total == 0:
                yield chosen[:], [e for e in others if e not in set(chosen)]
            return
        # exclude others[i]
        yield from rec(i + 1, chosen, total)
        # include others[i]
        chosen.append(others[i])
        yield from rec(i + 1, chosen, total + coeffs[others[i]])
        chosen.pop()

    for part, remaining in rec(0, [], target):
        yield [anchor] + part, remaining


def _admissible_partitions(f: LaurentPoly) -> Iterator[AdmissiblePartition]:
    """Depth-first enumeration anchored on the least unassigned exponent."""
    support = sorted(f.terms)
    coeffs = f.terms

    def rec(unassigned: list[Expo]) -> Iterator[list[list[Expo]]]:
        if not unassigned:
            yield []
            return
        anchor, rest = unassigned[0], unassigned[1:]
        for part, remaining in _zero_sum_parts(anchor, rest, coeffs):
            for tail in rec(remaining):
                yield [part] + tail

    for parts in rec(support):
        yield AdmissiblePartition.from_parts(parts)


def partition_subspace(p: AdmissiblePartition, f: LaurentPoly) -> RationalSubspace:
    """L(p): common kernel of all in-part exponent differences.

    >>> f = LaurentPoly.parse("t1 - t2")
    >>> partition_subspace(AdmissiblePartition.from_parts([f.support()]), f).basis
    ((Fraction(1, 1), Fraction(1, 1)),)
    """
    n = f.num_vars
    rows = []
    for part in p.parts:
        base = part[0]
        for e in part[1:]:
            rows.append([Fraction(a - b) for a, b in zip(e, base)])
    if not rows:
        return RationalSubspace.full(n)
    return RationalSubspace.from_rows(nullspace(rows, n), n)


def admissible_partitions_maximal(f: LaurentPoly,
                                  max_support: int = DEFAULT_SUPPORT_LIMIT
                                  ) -> list[AdmissiblePartition]:
    """All admissible partitions whose subspace L(p) is maximal.

    Returns [] when f(1) != 0 (no admissible partition exists).  Rejects
    the zero polynomial, whose tangent cone would be everything.

    >>> f = LaurentPoly.parse("t1 + t2")
    >>> admissible_partitions_maximal(f)
    []
    """
    if f.is_zero():
        raise ValueError("tangent cone of the zero polynomial is everything")
    if len(f.terms) > max_support:
        raise ValueError(
            f"support size {len(f.terms)} exceeds the enumeration limit "
            f"{max_support}; pass a larger max_support to override")
    if f.coefficient_sum() != 0:
        return []
    found: list[tuple[AdmissiblePartition, RationalSubspace]] = []
    for p in _admissible_partitions(f):
        found.append((p, partition_subspace(p, f)))
    out = []
    for i, (p, sub) in enumerate(found):
        dominated = False
        for j, (_, other) in enumerate(found):
            if i != j and other.contains(sub) and other != sub:
                dominated = True
                break
        if not dominated:
            out.append(p)
    return out


# ---------------------------------------------------------------------------
# subspace arrangements
# ---------------------------------------------------------------------------

def _subspace_sort_key(s: RationalSubspace):
    return (s.dim, s.basis)


class SubspaceArrangement:
    """A finite union of rational subspaces, pruned and canonically sorted.

    The empty arrangement (no subspaces — the cone of a variety missing the
    identity) is distinct from the arrangement whose only member is {0}.
    """

    __slots__ = ("ambient_dim", "subspaces", "empty")

    def __init__(self, ambient_dim: int,
                 subspaces: Iterable[RationalSubspace] = (),
                 empty: Optional[bool] = None):
        self.ambient_dim = int(ambient_dim)
        pruned = _prune_subspaces(list(subspaces))
        for s in pruned:
            if s.ambient_dim != self.ambient_dim:
                raise ValueError("ambient dimension mismatch")
        self.subspaces = tuple(sorted(pruned, key=_subspace_sort_key))
        inferred = not self.subspaces
        if empty is not None and bool(empty) != inferred:
            raise ValueError("empty flag inconsistent with subspace list")
        self.empty = inferred

    @classmethod
    def empty_arrangement(cls, ambient_dim: int) -> "SubspaceArrangement":
        return cls(ambient_dim, (), empty=True)

    def is_empty(self) -> bool:
        return self.empty

    def contains_vector(self, x) -> bool:
        return any(s.contains_vector(x) for s in self.subspaces)

    def union(self, other: "SubspaceArrangement") -> "SubspaceArrangement":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return SubspaceArrangement(self.ambient_dim,
                                   self.subspaces + other.subspaces)

    def intersect(self, other: "SubspaceArrangement") -> "SubspaceArrangement":
        """Pairwise intersections (union-of-subspaces semantics), pruned."""
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        if self.empty or other.empty:
            return SubspaceArrangement.empty_arrangement(self.ambient_dim)
        met = [a.intersect(b) for a in self.subspaces for b in other.subspaces]
        return SubspaceArrangement(self.ambient_dim, met)

    def __eq__(self, other):
        return (isinstance(other, SubspaceArrangement)
                and self.ambient_dim == other.ambient_dim
                and self.subspaces == other.subspaces)

    def __repr__(self):
        return (f"SubspaceArrangement(n={self.ambient_dim}, "
                f"{[s.basis for s in self.subspaces]})")

    def to_json(self) -> dict:
        from .qlinalg import format_rational
        return {
            "ambient_dim": self.ambient_dim,
            "empty": self.empty,
            "subspaces": [[[format_rational(x) for x in row] for row in s.basis]
                          for s in self.subspaces],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SubspaceArrangement":
        from .qlinalg import parse_rational
        n = int(data["ambient_dim"])
        subs = [
            RationalSubspace.from_rows(
                [[parse_rational(str(x)) for x in row] for row in rows], n)
            for rows in data.get("subspaces", [])
        ]
        return cls(n, subs, empty=data.get("empty"))


def _prune_subspaces(subs: list[RationalSubspace]) -> list[RationalSubspace]:
    out: list[RationalSubspace] = []
    ordered = sorted(subs, key=_subspace_sort_key, reverse=True)
    for s in ordered:
        if not any(t.contains(s) for t in out):
            out.append(s)
    return out


# ---------------------------------------------------------------------------
# tangent cones
# ---------------------------------------------------------------------------

def tangent_cone_polys(polys: Sequence[LaurentPoly],
                       max_support: int = DEFAULT_SUPPORT_LIMIT
                       ) -> SubspaceArrangement:
    """Tangent cone at 1 of the common zero set of the polynomials.

    Per polynomial, the union of L(p) over maximal admissible partitions;
    across polynomials, pairwise intersections.  A polynomial with
    f(1) != 0 forces the empty arrangement (1 is not on the variety).

    >>> cone = tangent_cone_polys([LaurentPoly.parse("t1 - 1", 2),
    ...                            LaurentPoly.parse("t2 - 1", 2)])
    >>> [s.basis for s in cone.subspaces]
    [()]
    """
    if not polys:
        raise ValueError("at least one polynomial is required")
    n = polys[0].num_vars
    for f in polys:
        if f.num_vars != n:
            raise ValueError("polynomials live in different tori")
        if f.is_zero():
            raise ValueError("tangent cone of the zero polynomial is everything")
    result: Optional[SubspaceArrangement] = None
    for f in polys:
        parts = admissible_partitions_maximal(f, max_support=max_support)
        cone = SubspaceArrangement(n, [partition_subspace(p, f) for p in parts])
        result = cone if result is None else result.intersect(cone)
        if result.empty:
            return SubspaceArrangement.empty_arrangement(n)
    return result


def tangent_cone_description(W: VarietyDescription) -> SubspaceArrangement:
    """Tangent cone at 1 of a union of torsion-translated subtori.

    A component rho exp(L otimes C) meets 1 iff lambda lies in L + Z^n, and
    then contributes exactly L (a point component contributes {0} iff it is
    the identity).
    """
    n = W.ambient_dim
    subs = []
    for comp in W.components:
        if lattice_coset_membership(comp.translate.values, comp.direction):
            subs.append(comp.direction)
    return SubspaceArrangement(n, subs)
