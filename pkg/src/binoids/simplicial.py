"""Abstract simplicial complexes.

Faces are tuples of vertex labels sorted by their position in the
complex's vertex order.  The void complex (no faces at all) and the
empty complex {∅} are distinct values: the latter has the empty face,
the former nothing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import NotAFace, UnknownVertex, VoidComplex
from .exactalg import (
    FinAbGroup,
    GroupExpr,
    IntMatrix,
    TRIVIAL_GROUP,
    coefficient_cohomology,
    cohomology_of_complex,
)

Face = Tuple


@dataclass(frozen=True)
class SimplicialComplex:
    """Vertex order plus pairwise incomparable facets.

    >>> c = SimplicialComplex.from_facets([(1, 2, 3), (3, 4)])
    >>> c.faces(1)
    [(1, 2), (1, 3), (2, 3), (3, 4)]
    >>> c.link((3,)).facets
    ((1, 2), (4,))
    """

    vertices: tuple
    facets: tuple
    _closure: dict = field(default=None, init=False, repr=False, compare=False)

    @classmethod
    def make(cls, vertices: Sequence, faces: Iterable[Sequence]) -> "SimplicialComplex":
        """Normalize: sort faces by vertex position, keep the maximal ones,
        and turn uncovered vertices into singleton facets."""
        vertices = tuple(vertices)
        if len(set(vertices)) != len(vertices):
            raise ValueError("duplicate vertex labels")
        position = {v: i for i, v in enumerate(vertices)}
        normalized = set()
        for face in faces:
            face = tuple(face)
            if len(set(face)) != len(face):
                raise ValueError("face with repeated vertex: %r" % (face,))
            for v in face:
                if v not in position:
                    raise UnknownVertex("vertex %r not declared" % (v,))
            normalized.add(tuple(sorted(face, key=position.__getitem__)))
        covered = {v for face in normalized for v in face}
        for v in vertices:
            if v not in covered:
                normalized.add((v,))
        maximal = tuple(
            sorted(
                (f for f in normalized
                 if not any(set(f) < set(g) for g in normalized)),
                key=lambda f: tuple(position[v] for v in f),
            )
        )
        return cls(vertices, maximal)

    @classmethod
    def from_facets(cls, facets: Iterable[Sequence]) -> "SimplicialComplex":
        facets = [tuple(f) for f in facets]
        vertices = sorted({v for f in facets for v in f})
        return cls.make(vertices, facets)

    @classmethod
    def void(cls) -> "SimplicialComplex":
        return cls((), ())

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        return cls((), ((),))

    # -- basic structure ----------------------------------------------------

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty(self) -> bool:
        return self.facets == ((),)

    @property
    def dimension(self) -> int:
        """Largest face cardinality minus one; -1 for {∅}, -2 for void."""
        if self.is_void:
            return -2
        return max(len(f) for f in self.facets) - 1

    def _position(self, v):
        try:
            return self.vertices.index(v)
        except ValueError:
            raise UnknownVertex("vertex %r not in complex" % (v,))

    def _face_key(self, face):
        return tuple(self._position(v) for v in face)

    def _faces_by_dim(self) -> dict:
        if self._closure is None:
            closure = set(self.facets)
            stack = list(self.facets)
            while stack:
                face = stack.pop()
                for i in range(len(face)):
                    sub = face[:i] + face[i + 1 :]
                    if sub not in closure:
                        closure.add(sub)
                        stack.append(sub)
            by_dim = {}
            for face in closure:
                by_dim.setdefault(len(face) - 1, []).append(face)
            for faces in by_dim.values():
                faces.sort(key=self._face_key)
            object.__setattr__(self, "_closure", by_dim)
        return self._closure

    def faces(self, d: int) -> List[Face]:
        """All faces of dimension d, lexicographically sorted."""
        return list(self._faces_by_dim().get(d, []))

    def all_faces(self) -> List[Face]:
        by_dim = self._faces_by_dim()
        out = []
        for d in sorted(by_dim):
            out.extend(by_dim[d])
        return out

    def has_face(self, face: Sequence) -> bool:
        face = tuple(sorted(face, key=self._position))
        return face in set(self._faces_by_dim().get(len(face) - 1, []))

    # -- derived complexes --------------------------------------------------

    def link(self, face: Sequence) -> "SimplicialComplex":
        """Faces G disjoint from `face` with face ∪ G in the complex."""
        face = tuple(face)
        if not self.has_face(face):
            raise NotAFace("%r is not a face" % (face,))
        if not face:
            return self
        fset = set(face)
        link_faces = [
            tuple(v for v in g if v not in fset)
            for g in self.all_faces()
            if fset <= set(g)
        ]
        vertices = [v for v in self.vertices if any(v in g for g in link_faces)]
        if not link_faces:
            return SimplicialComplex.void()
        return SimplicialComplex.make(vertices, link_faces)

    def restriction(self, subset: Iterable) -> "SimplicialComplex":
        """The faces contained in the given vertex subset."""
        subset = list(subset)
        for v in subset:
            self._position(v)
        sset = set(subset)
        kept = [f for f in self.all_faces() if set(f) <= sset]
        ordered = [v for v in self.vertices if v in sset]
        return SimplicialComplex.make(ordered, kept)

    def crosscut(self, listed_faces: Sequence[Sequence]) -> "SimplicialComplex":
        """Complex on 1-based indices of the list; an index set is a face
        exactly when the union of its faces is a face here."""
        listed = [tuple(sorted(f, key=self._position)) for f in listed_faces]
        for f in listed:
            if not self.has_face(f):
                raise NotAFace("%r is not a face" % (f,))
        indices = list(range(1, len(listed) + 1))
        faces = []
        for r in range(len(listed) + 1):
            for combo in itertools.combinations(indices, r):
                union = set().union(*(listed[i - 1] for i in combo)) if combo else set()
                if self.has_face(sorted(union, key=self._position)):
                    faces.append(combo)
        if not faces:
            return SimplicialComplex.void()
        return SimplicialComplex.make(indices, [f for f in faces if f])

    # -- cohomology ----------------------------------------------------------

    def _cochain_data(self, reduced: bool):
        if self.is_void:
            raise VoidComplex("the void complex has no cochain complex")
        start = -1 if reduced else 0
        degrees = list(range(start, self.dimension + 1))
        ranks = [len(self.faces(d)) for d in degrees]
        diffs = []
        for d in degrees[:-1]:
            sources = self.faces(d)
            targets = self.faces(d + 1)
            index = {f: i for i, f in enumerate(sources)}
            rows = []
            for target in targets:
                row = [0] * len(sources)
                for l in range(len(target)):
                    sub = target[:l] + target[l + 1 :]
                    row[index[sub]] += (-1) ** l
                rows.append(row)
            diffs.append(IntMatrix.from_rows(rows, cols=len(sources)))
        return ranks, diffs

    def cochain_complex(self, reduced: bool = False) -> List[IntMatrix]:
        """Differentials of the (reduced) integer cochain complex.

        Faces are ordered lexicographically; the coefficient of a vertex
        omitted at position l is (-1)^l.
        """
        return self._cochain_data(reduced)[1]

    def cohomology(self, reduced: bool = False) -> List[FinAbGroup]:
        """H^j for j = 0..dim (reduced: from j = -1)."""
        ranks, diffs = self._cochain_data(reduced)
        return cohomology_of_complex(ranks, diffs)

    def cohomology_with_coefficients(
        self, symbol: str, reduced: bool = False
    ) -> List[GroupExpr]:
        """H^j with coefficients in an abstract group named `symbol`."""
        groups = self.cohomology(reduced)
        out = []
        for j, here in enumerate(groups):
            following = groups[j + 1] if j + 1 < len(groups) else TRIVIAL_GROUP
            out.append(coefficient_cohomology(here, following, symbol))
        return out
