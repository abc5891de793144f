"""Preorder algebra: strict order, indistinguishability classes, decomposition.

Two points are topologically indistinguishable (x ~ y) when x <= y and
y <= x.  Choosing one representative per class yields the poset part, on
which <= is antisymmetric; the remaining points form the complementary
part, which in general is not a poset.
"""

from __future__ import annotations

from dataclasses import dataclass

from .spaces import Preorder


@dataclass(frozen=True)
class Decomposition:
    """Poset part (representatives), complementary part, and the class map."""

    representatives: tuple[str, ...]
    complementary: tuple[str, ...]
    classes: tuple[tuple[str, ...], ...]
    class_of: dict[str, str]

    def __post_init__(self):
        reps = set(self.representatives)
        comp = set(self.complementary)
        if reps & comp:
            raise ValueError("representatives and complementary overlap")
        all_points = {p for cls in self.classes for p in cls}
        if reps | comp != all_points:
            raise ValueError("representatives and complementary do not partition the points")
        for cls in self.classes:
            if sum(1 for p in cls if p in reps) != 1:
                raise ValueError(f"class {cls} does not have exactly one representative")
        for r in self.representatives:
            if self.class_of[r] != r:
                raise ValueError(f"representative {r} is not its own class representative")


def strictify(preorder: Preorder) -> Preorder:
    """The partial order with x < y when x <= y holds one-way, plus equality."""
    pairs = frozenset(
        (x, y) for x, y in preorder.pairs if x == y or (y, x) not in preorder.pairs
    )
    return Preorder(preorder.points, pairs)


def equivalence_classes(preorder: Preorder) -> tuple[tuple[str, ...], ...]:
    """Partition into classes of mutually related points, sorted by least member."""
    seen: set[str] = set()
    classes = []
    for x in preorder.points:
        if x in seen:
            continue
        cls = tuple(
            y for y in preorder.points if preorder.leq(x, y) and preorder.leq(y, x)
        )
        seen.update(cls)
        classes.append(cls)
    return tuple(classes)


def is_poset(preorder: Preorder) -> bool:
    """True when the relation is antisymmetric (the space is T0)."""
    return all(x == y or (y, x) not in preorder.pairs for x, y in preorder.pairs)


def decompose(preorder: Preorder, policy: str = "least") -> Decomposition:
    """Split the points into the poset part and the complementary part.

    The representative of each class is its lexicographically least member
    (policy "least", the default) or greatest ("greatest").  All homological
    output downstream is invariant under this choice; the default makes it
    deterministic.
    """
    if policy not in ("least", "greatest"):
        raise ValueError(f"unknown representative policy {policy!r}")
    choose = min if policy == "least" else max
    classes = equivalence_classes(preorder)
    class_of = {}
    for cls in classes:
        rep = choose(cls)
        for p in cls:
            class_of[p] = rep
    representatives = tuple(sorted(choose(cls) for cls in classes))
    complementary = tuple(p for p in preorder.points if p not in set(representatives))
    return Decomposition(representatives, complementary, classes, class_of)
