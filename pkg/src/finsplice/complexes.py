"""Order complexes and integer (co)chain complexes.

The order complex of a poset has the chains (totally ordered subsets) as
faces.  Faces are stored in relation-ascending vertex order, so the
boundary of [v0 < ... < vk] is the usual alternating sum over deleted
vertices.  Chain complexes carry dense integer matrices; building one
checks that consecutive differentials compose to zero.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterable, Sequence

from .matrices import IntMatrix
from .orders import strictify
from .spaces import Preorder, UnknownPoint

HOMOLOGICAL = "homological"
COHOMOLOGICAL = "cohomological"


class NotAPoset(ValueError):
    def __init__(self, x: str, y: str):
        self.witness = (x, y)
        super().__init__(f"relation is not antisymmetric: {x} <= {y} and {y} <= {x}")


class NotASubcomplex(ValueError):
    pass


@dataclass(frozen=True)
class SimplicialComplex:
    """Faces grouped by dimension; nonempty, downward closed, vertex-covering."""

    vertices: tuple[str, ...]
    faces_by_dim: tuple[tuple[tuple[str, ...], ...], ...]

    def __post_init__(self):
        vertices = tuple(sorted(str(v) for v in self.vertices))
        if len(set(vertices)) != len(vertices):
            raise ValueError("duplicate vertices")
        faces_by_dim = tuple(
            tuple(sorted(tuple(f) for f in faces)) for faces in self.faces_by_dim
        )
        known = set(vertices)
        previous: set[tuple[str, ...]] = set()
        for dim, faces in enumerate(faces_by_dim):
            if not faces:
                raise ValueError(f"empty face list at dimension {dim}")
            for face in faces:
                if len(face) != dim + 1:
                    raise ValueError(f"face {face} has wrong size for dimension {dim}")
                if len(set(face)) != len(face):
                    raise ValueError(f"face {face} repeats a vertex")
                for v in face:
                    if v not in known:
                        raise UnknownPoint(v)
                if dim > 0:
                    for i in range(len(face)):
                        sub = face[:i] + face[i + 1:]
                        if sub not in previous:
                            raise ValueError(f"face {face} is missing its subface {sub}")
            previous = set(faces)
        if faces_by_dim:
            zero_faces = {f[0] for f in faces_by_dim[0]}
            if zero_faces != known:
                raise ValueError("vertex set and 0-faces disagree")
        elif vertices:
            raise ValueError("vertices given but no 0-faces")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "faces_by_dim", faces_by_dim)

    @property
    def dim(self) -> int:
        return len(self.faces_by_dim) - 1

    def faces(self, dim: int) -> tuple[tuple[str, ...], ...]:
        if 0 <= dim < len(self.faces_by_dim):
            return self.faces_by_dim[dim]
        return ()

    def face_counts(self) -> tuple[int, ...]:
        return tuple(len(faces) for faces in self.faces_by_dim)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * len(faces) for k, faces in enumerate(self.faces_by_dim))


def order_complex(
    preorder: Preorder,
    points: Iterable[str] | None = None,
    relation: str = "leq",
) -> SimplicialComplex:
    """Order complex of the relation restricted to the given points.

    relation "leq" uses the preorder itself, "strict" its strictification.
    The restriction must be antisymmetric; callers with an indistinguishable
    pair must decompose first.
    """
    if relation not in ("leq", "strict"):
        raise ValueError(f"unknown relation selector {relation!r}")
    rel = preorder if relation == "leq" else strictify(preorder)
    pts = tuple(sorted(points)) if points is not None else preorder.points
    known = set(preorder.points)
    for p in pts:
        if p not in known:
            raise UnknownPoint(p)
    for x, y in itertools.combinations(pts, 2):
        if rel.leq(x, y) and rel.leq(y, x):
            raise NotAPoset(x, y)

    def ascending(chain: tuple[str, ...]) -> tuple[str, ...]:
        return tuple(sorted(chain, key=cmp_to_key(lambda a, b: -1 if rel.leq(a, b) else 1)))

    faces_by_dim = []
    for size in range(1, len(pts) + 1):
        faces = []
        for combo in itertools.combinations(pts, size):
            if all(rel.leq(x, y) or rel.leq(y, x) for x, y in itertools.combinations(combo, 2)):
                faces.append(ascending(combo))
        if not faces:
            break
        faces_by_dim.append(tuple(sorted(faces)))
    return SimplicialComplex(pts, tuple(faces_by_dim))


def is_subcomplex(candidate: SimplicialComplex, ambient: SimplicialComplex) -> bool:
    """True when every face of the candidate is a face of the ambient complex."""
    for dim, faces in enumerate(candidate.faces_by_dim):
        ambient_faces = set(ambient.faces(dim))
        if any(face not in ambient_faces for face in faces):
            return False
    return True


@dataclass(frozen=True)
class ChainComplex:
    """Graded free abelian groups with integer differentials.

    Homological complexes lower degree, cohomological raise it.  maps[i]
    is the matrix of the differential between degrees i and i+1, written
    target-by-source, so its shape is dim(i) x dim(i+1) in the homological
    case and dim(i+1) x dim(i) in the cohomological case.  Consecutive
    maps must compose to zero and the top degree must be nonempty.
    """

    direction: str
    basis: tuple[tuple[str, ...], ...]
    maps: tuple[IntMatrix, ...]

    def __post_init__(self):
        if self.direction not in (HOMOLOGICAL, COHOMOLOGICAL):
            raise ValueError(f"unknown direction {self.direction!r}")
        basis = tuple(tuple(str(b) for b in labels) for labels in self.basis)
        for k, labels in enumerate(basis):
            if len(set(labels)) != len(labels):
                raise ValueError(f"duplicate basis labels at degree {k}")
        if basis and not basis[-1]:
            raise ValueError("trailing empty degree; trim the basis")
        maps = tuple(self.maps)
        if len(maps) != max(len(basis) - 1, 0):
            raise ValueError(f"expected {max(len(basis) - 1, 0)} differentials, got {len(maps)}")
        for i, m in enumerate(maps):
            lo, hi = len(basis[i]), len(basis[i + 1])
            want = (lo, hi) if self.direction == HOMOLOGICAL else (hi, lo)
            if (m.rows, m.cols) != want:
                raise ValueError(f"differential {i} has shape {m.rows}x{m.cols}, expected {want[0]}x{want[1]}")
        for i in range(len(maps) - 1):
            if self.direction == HOMOLOGICAL:
                composite = maps[i].mul(maps[i + 1])
            else:
                composite = maps[i + 1].mul(maps[i])
            if not composite.is_zero():
                raise ValueError(f"differentials at degrees {i}..{i + 2} do not compose to zero")
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "maps", maps)

    @property
    def top_degree(self) -> int:
        return len(self.basis) - 1

    def dim(self, k: int) -> int:
        if 0 <= k < len(self.basis):
            return len(self.basis[k])
        return 0

    def map_between(self, i: int) -> IntMatrix:
        """Differential between degrees i and i+1, zero-shaped outside range."""
        if 0 <= i < len(self.maps):
            return self.maps[i]
        lo, hi = self.dim(i), self.dim(i + 1)
        if self.direction == HOMOLOGICAL:
            return IntMatrix.zeros(lo, hi)
        return IntMatrix.zeros(hi, lo)

    def differential_from(self, k: int) -> IntMatrix:
        """The differential whose domain is degree k."""
        return self.map_between(k - 1 if self.direction == HOMOLOGICAL else k)

    def differential_into(self, k: int) -> IntMatrix:
        """The differential whose codomain is degree k."""
        return self.map_between(k if self.direction == HOMOLOGICAL else k - 1)


def zero_complex(direction: str = COHOMOLOGICAL) -> ChainComplex:
    return ChainComplex(direction, (), ())


def _trimmed(direction: str, basis: Sequence[tuple[str, ...]], maps: Sequence[IntMatrix]) -> ChainComplex:
    top = -1
    for k, labels in enumerate(basis):
        if labels:
            top = k
    return ChainComplex(direction, tuple(basis[: top + 1]), tuple(maps[:top]))


def face_label(face: tuple[str, ...]) -> str:
    return ",".join(face)


def chain_complex(complex_: SimplicialComplex) -> ChainComplex:
    """Simplicial chain complex over the integers.

    Degree-k basis elements are the k-faces in lexicographic order; the
    boundary of a face is the alternating sum over deleted vertices.
    """
    basis = tuple(tuple(face_label(f) for f in faces) for faces in complex_.faces_by_dim)
    maps = []
    for k in range(1, len(complex_.faces_by_dim)):
        rows = {face: i for i, face in enumerate(complex_.faces_by_dim[k - 1])}
        cols = complex_.faces_by_dim[k]
        entries = [[0] * len(cols) for _ in rows]
        for j, face in enumerate(cols):
            for i in range(len(face)):
                sub = face[:i] + face[i + 1:]
                entries[rows[sub]][j] += (-1) ** i
        maps.append(IntMatrix.from_rows(entries, cols=len(cols)))
    return _trimmed(HOMOLOGICAL, basis, maps)


def relative_chain_complex(ambient: ChainComplex, sub: ChainComplex) -> ChainComplex:
    """Quotient of the ambient chain complex by a subcomplex.

    Degree-k basis elements are the ambient labels not in the subcomplex;
    differentials are the ambient ones with the subcomplex coordinates
    deleted.
    """
    if ambient.direction != HOMOLOGICAL or sub.direction != HOMOLOGICAL:
        raise ValueError("relative complexes are built from homological complexes")
    keep: list[list[int]] = []
    for k in range(len(ambient.basis)):
        ambient_labels = ambient.basis[k]
        sub_labels = set(sub.basis[k]) if k < len(sub.basis) else set()
        if not sub_labels <= set(ambient_labels):
            raise NotASubcomplex(f"degree {k} basis of the subcomplex is not contained in the ambient basis")
        keep.append([i for i, lab in enumerate(ambient_labels) if lab not in sub_labels])
    if len(sub.basis) > len(ambient.basis) and any(len(b) for b in sub.basis[len(ambient.basis):]):
        raise NotASubcomplex("subcomplex has degrees beyond the ambient complex")
    basis = tuple(
        tuple(ambient.basis[k][i] for i in keep[k]) for k in range(len(ambient.basis))
    )
    maps = []
    for k, m in enumerate(ambient.maps):
        rows, cols = keep[k], keep[k + 1]
        entries = [[m.entries[i][j] for j in cols] for i in rows]
        maps.append(IntMatrix.from_rows(entries, cols=len(cols)))
    return _trimmed(HOMOLOGICAL, basis, maps)


def cochain(chain: ChainComplex) -> ChainComplex:
    """Dualize a homological complex: same bases, transposed differentials."""
    if chain.direction != HOMOLOGICAL:
        raise ValueError("cochain expects a homological complex")
    return ChainComplex(COHOMOLOGICAL, chain.basis, tuple(m.transpose() for m in chain.maps))
