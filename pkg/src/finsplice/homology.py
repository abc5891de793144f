"""Finitely generated abelian groups of integer chain complexes.

Groups are presented as a free rank plus invariant factors.  Everything
reduces to the Smith normal form of the differentials: the free rank of
the group at degree k is dim(k) minus the ranks of the outgoing and
incoming maps, and the torsion is the set of invariant factors above 1 of
the incoming map.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .complexes import ChainComplex
from .matrices import IntMatrix


@dataclass(frozen=True)
class GroupPresentation:
    """rank copies of Z plus cyclic factors in divisibility order.

    >>> str(GroupPresentation(2, (2, 6)))
    'Z^2 + Z/2 + Z/6'
    >>> str(GroupPresentation(1))
    'Z'
    >>> str(GroupPresentation())
    '0'
    """

    rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        torsion = tuple(int(t) for t in self.torsion)
        for t in torsion:
            if t <= 1:
                raise ValueError(f"torsion coefficient {t} must exceed 1")
        for a, b in zip(torsion, torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {torsion} is not in divisibility order")
        object.__setattr__(self, "torsion", torsion)

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"

    def as_dict(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion), "pretty": str(self)}


TRIVIAL_GROUP = GroupPresentation()


class SmithNormalForm(NamedTuple):
    diagonal: tuple[int, ...]
    left: IntMatrix | None
    right: IntMatrix | None


def smith_normal_form(matrix: IntMatrix, want_transforms: bool = False) -> SmithNormalForm:
    """Diagonalize an integer matrix by unimodular row and column operations.

    The diagonal entries are positive and each divides the next; their
    number is the rank.  With want_transforms, unimodular matrices U and V
    are returned with U * matrix * V equal to the diagonal form exactly.

    Pivots are chosen by smallest nonzero absolute value, ties broken by
    row then column index.  All arithmetic is exact.

    >>> smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 3]])).diagonal
    (1, 6)
    >>> smith_normal_form(IntMatrix.identity(3)).diagonal
    (1, 1, 1)
    >>> smith_normal_form(IntMatrix.from_rows([[-1], [-1]])).diagonal
    (1,)
    """
    n_rows, n_cols = matrix.rows, matrix.cols
    a = matrix.to_lists()
    u = IntMatrix.identity(n_rows).to_lists() if want_transforms else None
    v = IntMatrix.identity(n_cols).to_lists() if want_transforms else None

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        if u is not None:
            u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        if v is not None:
            for row in v:
                row[i], row[j] = row[j], row[i]

    def row_sub(i, j, q):  # row i -= q * row j
        ai, aj = a[i], a[j]
        for k in range(n_cols):
            ai[k] -= q * aj[k]
        if u is not None:
            ui, uj = u[i], u[j]
            for k in range(n_rows):
                ui[k] -= q * uj[k]

    def col_sub(i, j, q):  # col i -= q * col j
        for row in a:
            row[i] -= q * row[j]
        if v is not None:
            for row in v:
                row[i] -= q * row[j]

    def row_negate(i):
        a[i] = [-x for x in a[i]]
        if u is not None:
            u[i] = [-x for x in u[i]]

    def smallest_pivot(t):
        best = None
        for i in range(t, n_rows):
            for j in range(t, n_cols):
                x = a[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        return best

    t = 0
    limit = min(n_rows, n_cols)
    while t < limit:
        found = smallest_pivot(t)
        if found is None:
            break
        while True:
            _, bi, bj = found
            if bi != t:
                row_swap(t, bi)
            if bj != t:
                col_swap(t, bj)
            if a[t][t] < 0:
                row_negate(t)
            # Euclid passes until the cross through the pivot is clear.
            while True:
                for i in range(t + 1, n_rows):
                    if a[i][t]:
                        q = a[i][t] // a[t][t]
                        if q:
                            row_sub(i, t, q)
                remainder_rows = [i for i in range(t + 1, n_rows) if a[i][t]]
                if remainder_rows:
                    i = min(remainder_rows, key=lambda i: (abs(a[i][t]), i))
                    row_swap(t, i)
                    if a[t][t] < 0:
                        row_negate(t)
                    continue
                for j in range(t + 1, n_cols):
                    if a[t][j]:
                        q = a[t][j] // a[t][t]
                        if q:
                            col_sub(j, t, q)
                remainder_cols = [j for j in range(t + 1, n_cols) if a[t][j]]
                if remainder_cols:
                    j = min(remainder_cols, key=lambda j: (abs(a[t][j]), j))
                    col_swap(t, j)
                    if a[t][t] < 0:
                        row_negate(t)
                    continue  # column may be dirty again after the swap
                break
            pivot = a[t][t]
            violation = None
            for i in range(t + 1, n_rows):
                if any(a[i][j] % pivot for j in range(t + 1, n_cols)):
                    violation = i
                    break
            if violation is None:
                break
            # Pull the offending row through the pivot row; the next round
            # shrinks the pivot to a divisor of everything below.
            row_sub(t, violation, -1)
            found = smallest_pivot(t)
        t += 1

    diagonal = tuple(a[i][i] for i in range(limit) if a[i][i])
    left = right = None
    if want_transforms:
        left = IntMatrix.from_rows(u, cols=n_rows)
        right = IntMatrix.from_rows(v, cols=n_cols)
        smith = IntMatrix.zeros(n_rows, n_cols).to_lists()
        for i, d in enumerate(diagonal):
            smith[i][i] = d
        assert left.mul(matrix).mul(right) == IntMatrix.from_rows(smith, cols=n_cols)
    return SmithNormalForm(diagonal, left, right)


def rational_rank(matrix: IntMatrix) -> int:
    """Rank over the rationals by Gaussian elimination with exact fractions.

    Independent of the Smith normal form path; the test suite checks the
    two against each other.
    """
    rows = [[Fraction(x) for x in row] for row in matrix.entries]
    rank = 0
    for col in range(matrix.cols):
        pivot_row = next((i for i in range(rank, matrix.rows) if rows[i][col]), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][col]
        for i in range(rank + 1, matrix.rows):
            if rows[i][col]:
                factor = rows[i][col] / pivot
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
        if rank == matrix.rows:
            break
    return rank


def group_at(complex_: ChainComplex, k: int) -> GroupPresentation:
    """Kernel modulo image at degree k.

    Free rank is the kernel dimension of the outgoing differential minus
    the rank of the incoming one; torsion is the invariant factors above 1
    of the incoming differential.  Degrees outside the support are trivial.
    """
    if k < 0 or k > complex_.top_degree:
        return TRIVIAL_GROUP
    outgoing_rank = len(smith_normal_form(complex_.differential_from(k)).diagonal)
    incoming = smith_normal_form(complex_.differential_into(k)).diagonal
    rank = complex_.dim(k) - outgoing_rank - len(incoming)
    assert rank >= 0
    return GroupPresentation(rank, tuple(d for d in incoming if d > 1))


def all_groups(complex_: ChainComplex) -> tuple[GroupPresentation, ...]:
    """Groups at every degree 0..top_degree, computing one SNF per map."""
    top = complex_.top_degree
    if top < 0:
        return ()
    diagonals = [smith_normal_form(complex_.map_between(i)).diagonal for i in range(top)]

    def rank_of(i: int) -> int:
        return len(diagonals[i]) if 0 <= i < top else 0

    groups = []
    for k in range(top + 1):
        if complex_.direction == "homological":
            out_rank, in_index = rank_of(k - 1), k
        else:
            out_rank, in_index = rank_of(k), k - 1
        incoming = diagonals[in_index] if 0 <= in_index < top else ()
        rank = complex_.dim(k) - out_rank - len(incoming)
        assert rank >= 0
        groups.append(GroupPresentation(rank, tuple(d for d in incoming if d > 1)))
    return tuple(groups)


def kernel_group(complex_: ChainComplex, k: int) -> GroupPresentation:
    """Kernel of the differential leaving degree k (a free group)."""
    rank = complex_.dim(k) - len(smith_normal_form(complex_.differential_from(k)).diagonal)
    return GroupPresentation(rank)


def cokernel_group(complex_: ChainComplex, k: int) -> GroupPresentation:
    """Degree-k group modulo the image of the differential entering it."""
    incoming = smith_normal_form(complex_.differential_into(k)).diagonal
    rank = complex_.dim(k) - len(incoming)
    return GroupPresentation(rank, tuple(d for d in incoming if d > 1))
