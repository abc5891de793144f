"""Finite topological spaces and the specialisation preorder.

A space is a finite point set with an explicit family of open sets.  The
specialisation preorder sets x <= y exactly when x lies in the closure of
{y}; it is reflexive and transitive but in general not antisymmetric.  The
Alexandrov correspondence identifies finite spaces with preorders, and
`from_preorder` is the inverse of `specialisation_preorder` under the
up-set convention (the round trip is checked by the test suite).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping


def _fmt(points: Iterable[str]) -> str:
    return "{" + ", ".join(points) + "}"


class TopologyError(ValueError):
    """Input does not describe a topology on the given points."""


class MissingEmptySet(TopologyError):
    def __init__(self):
        super().__init__("the empty set is not in the open-set family")


class MissingWholeSet(TopologyError):
    def __init__(self):
        super().__init__("the full point set is not in the open-set family")


class NotClosedUnderUnion(TopologyError):
    def __init__(self, a: tuple[str, ...], b: tuple[str, ...]):
        self.witness = (a, b)
        super().__init__(f"union of opens {_fmt(a)} and {_fmt(b)} is not open")


class NotClosedUnderIntersection(TopologyError):
    def __init__(self, a: tuple[str, ...], b: tuple[str, ...]):
        self.witness = (a, b)
        super().__init__(f"intersection of opens {_fmt(a)} and {_fmt(b)} is not open")


class UnknownPoint(TopologyError):
    def __init__(self, point: str):
        self.point = point
        super().__init__(f"unknown point {point!r}")


class InvalidPreorder(ValueError):
    """Relation is not reflexive or not transitive over its points."""


@dataclass(frozen=True)
class FiniteSpace:
    """A validated finite topological space.

    Point identifiers are opaque strings kept in lexicographic order; that
    order is the tie-breaker everywhere downstream.  Opens are stored
    canonically (each open sorted, family sorted, duplicates removed).
    Construction validates all topology axioms and raises a TopologyError
    subclass naming the first violation.
    """

    points: tuple[str, ...]
    opens: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        pts = [str(p) for p in self.points]
        if not pts:
            raise TopologyError("point set must be nonempty")
        if len(set(pts)) != len(pts):
            raise TopologyError("point identifiers must be distinct")
        pts = tuple(sorted(pts))
        index = {p: i for i, p in enumerate(pts)}
        full = (1 << len(pts)) - 1

        masks = set()
        for open_set in self.opens:
            m = 0
            for p in open_set:
                if p not in index:
                    raise UnknownPoint(p)
                m |= 1 << index[p]
            masks.add(m)

        def unmask(m: int) -> tuple[str, ...]:
            return tuple(p for i, p in enumerate(pts) if m >> i & 1)

        if 0 not in masks:
            raise MissingEmptySet()
        if full not in masks:
            raise MissingWholeSet()
        ordered = sorted(masks)
        for ma, mb in itertools.combinations(ordered, 2):
            if ma | mb not in masks:
                raise NotClosedUnderUnion(unmask(ma), unmask(mb))
        for ma, mb in itertools.combinations(ordered, 2):
            if ma & mb not in masks:
                raise NotClosedUnderIntersection(unmask(ma), unmask(mb))

        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "opens", tuple(sorted(unmask(m) for m in masks)))
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_masks", frozenset(masks))
        object.__setattr__(self, "_full", full)

    def mask_of(self, subset: Iterable[str]) -> int:
        m = 0
        for p in subset:
            i = self._index.get(p)
            if i is None:
                raise UnknownPoint(p)
            m |= 1 << i
        return m

    def unmask(self, m: int) -> tuple[str, ...]:
        return tuple(p for i, p in enumerate(self.points) if m >> i & 1)


@dataclass(frozen=True)
class Preorder:
    """A reflexive transitive relation; (x, y) in pairs means x <= y."""

    points: tuple[str, ...]
    pairs: frozenset

    def __post_init__(self):
        pts = [str(p) for p in self.points]
        if not pts:
            raise InvalidPreorder("point set must be nonempty")
        if len(set(pts)) != len(pts):
            raise InvalidPreorder("point identifiers must be distinct")
        pts = tuple(sorted(pts))
        known = set(pts)
        pairs = frozenset((str(x), str(y)) for x, y in self.pairs)
        for x, y in pairs:
            if x not in known:
                raise UnknownPoint(x)
            if y not in known:
                raise UnknownPoint(y)
        for p in pts:
            if (p, p) not in pairs:
                raise InvalidPreorder(f"not reflexive: missing ({p}, {p})")
        succ: dict[str, set[str]] = {p: set() for p in pts}
        for x, y in pairs:
            succ[x].add(y)
        for x, y in pairs:
            for z in succ[y]:
                if (x, z) not in pairs:
                    raise InvalidPreorder(f"not transitive: {x} <= {y} <= {z} but not {x} <= {z}")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "pairs", pairs)

    def leq(self, x: str, y: str) -> bool:
        return (x, y) in self.pairs

    def restrict(self, subset: Iterable[str]) -> "Preorder":
        keep = set(subset)
        for p in keep:
            if p not in set(self.points):
                raise UnknownPoint(p)
        pairs = {(x, y) for x, y in self.pairs if x in keep and y in keep}
        return Preorder(tuple(sorted(keep)), frozenset(pairs))


def validate_topology(points: Iterable[str], opens: Iterable[Iterable[str]]) -> FiniteSpace:
    """Check the open-set family axioms and return the validated space."""
    return FiniteSpace(tuple(points), tuple(tuple(o) for o in opens))


def closure(space: FiniteSpace, subset: Iterable[str]) -> tuple[str, ...]:
    """Smallest closed set (complement of an open) containing the subset."""
    target = space.mask_of(subset)
    result = space._full
    for open_mask in space._masks:
        closed = space._full & ~open_mask
        if closed & target == target:
            result &= closed
    return space.unmask(result)


def specialisation_preorder(space: FiniteSpace) -> Preorder:
    """The preorder with x <= y exactly when x lies in the closure of {y}."""
    closures = {}
    for y in space.points:
        target = space.mask_of((y,))
        result = space._full
        for open_mask in space._masks:
            closed = space._full & ~open_mask
            if closed & target == target:
                result &= closed
        closures[y] = result
    pairs = set()
    for y in space.points:
        for i, x in enumerate(space.points):
            if closures[y] >> i & 1:
                pairs.add((x, y))
    return Preorder(space.points, frozenset(pairs))


def from_preorder(preorder: Preorder) -> FiniteSpace:
    """The finite space whose opens are the up-closed sets of the relation.

    With this convention the specialisation preorder of the result is the
    input relation again.
    """
    pts = preorder.points
    n = len(pts)
    index = {p: i for i, p in enumerate(pts)}
    up = [0] * n
    for x, y in preorder.pairs:
        up[index[x]] |= 1 << index[y]
    opens = []
    for m in range(1 << n):
        if all(up[i] & ~m == 0 for i in range(n) if m >> i & 1):
            opens.append(tuple(p for i, p in enumerate(pts) if m >> i & 1))
    return FiniteSpace(pts, tuple(opens))


def from_min_opens(points: Iterable[str], min_opens: Mapping[str, Iterable[str]]) -> FiniteSpace:
    """Build a space from minimal-open-set generators.

    The family is the closure of the generators (plus the empty and full
    sets) under pairwise union and intersection.  Every point must have a
    generator that contains it.
    """
    pts = tuple(sorted(str(p) for p in points))
    if set(min_opens) != set(pts):
        missing = sorted(set(pts) ^ set(min_opens))
        raise TopologyError(f"min_opens keys must match the point set (mismatch: {missing})")
    index = {p: i for i, p in enumerate(pts)}
    full = (1 << len(pts)) - 1
    masks = {0, full}
    for p in pts:
        m = 0
        for q in min_opens[p]:
            if q not in index:
                raise UnknownPoint(q)
            m |= 1 << index[q]
        if not m >> index[p] & 1:
            raise TopologyError(f"minimal open of {p!r} does not contain it")
        masks.add(m)
    changed = True
    while changed:
        changed = False
        for ma, mb in itertools.combinations(sorted(masks), 2):
            for m in (ma | mb, ma & mb):
                if m not in masks:
                    masks.add(m)
                    changed = True

    def unmask(m: int) -> tuple[str, ...]:
        return tuple(p for i, p in enumerate(pts) if m >> i & 1)

    return FiniteSpace(pts, tuple(unmask(m) for m in sorted(masks)))


def preorder_from_relation(points: Iterable[str], pairs: Iterable[tuple[str, str]]) -> Preorder:
    """Reflexive-transitive closure of an arbitrary relation on the points."""
    pts = tuple(sorted(str(p) for p in points))
    known = set(pts)
    rel = {(str(x), str(y)) for x, y in pairs}
    for x, y in rel:
        if x not in known:
            raise UnknownPoint(x)
        if y not in known:
            raise UnknownPoint(y)
    rel |= {(p, p) for p in pts}
    changed = True
    while changed:
        changed = False
        for x, y in list(rel):
            for y2, z in list(rel):
                if y == y2 and (x, z) not in rel:
                    rel.add((x, z))
                    changed = True
    return Preorder(pts, frozenset(rel))
