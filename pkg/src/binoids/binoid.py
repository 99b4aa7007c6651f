"""Finitely presented commutative binoids.

A presentation is a list of generator names plus relations, each either
element = element or element = ∞, with both sides stored as exponent
vectors over the generators.  Syntax lives in the CLI module; everything
here works on the vectors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from .errors import (
    NotIntegral,
    NotMonomialPresentation,
    NotSimplicialPresentation,
    Torsion,
    VoidComplex,
)
from .exactalg import IntMatrix, smith_normal_form
from .simplicial import SimplicialComplex


@dataclass(frozen=True)
class Relation:
    """lhs = rhs with rhs None meaning ∞; both sides are exponent vectors."""

    lhs: tuple
    rhs: Optional[tuple]

    def __post_init__(self):
        object.__setattr__(self, "lhs", tuple(int(x) for x in self.lhs))
        if self.rhs is not None:
            object.__setattr__(self, "rhs", tuple(int(x) for x in self.rhs))
        for x in self.lhs:
            if x < 0:
                raise ValueError("exponents must be nonnegative")
        if self.rhs is not None:
            if len(self.rhs) != len(self.lhs):
                raise ValueError("relation sides over different generators")
            for x in self.rhs:
                if x < 0:
                    raise ValueError("exponents must be nonnegative")
            if self.rhs == self.lhs:
                raise ValueError("relation with identical sides")

    @property
    def is_infinity(self) -> bool:
        return self.rhs is None

    def lhs_support(self) -> frozenset:
        return frozenset(i for i, x in enumerate(self.lhs) if x)

    def rhs_support(self) -> frozenset:
        return frozenset(i for i, x in enumerate(self.rhs) if x)


@dataclass(frozen=True)
class BinoidPresentation:
    """Generator names in order, plus relations as exponent vectors.

    >>> M = BinoidPresentation(("x", "y", "z"), (Relation((1, 1, 0), (0, 0, 2)),))
    >>> difference_group(M).rank
    2
    """

    generator_names: tuple
    relations: tuple

    def __post_init__(self):
        object.__setattr__(self, "generator_names", tuple(self.generator_names))
        object.__setattr__(self, "relations", tuple(self.relations))
        if len(set(self.generator_names)) != len(self.generator_names):
            raise ValueError("duplicate generator names")
        n = len(self.generator_names)
        for rel in self.relations:
            if len(rel.lhs) != n:
                raise ValueError("relation arity does not match generators")

    @property
    def generator_count(self) -> int:
        return len(self.generator_names)

    def is_monomial(self) -> bool:
        return all(rel.is_infinity for rel in self.relations)

    def is_integral(self) -> bool:
        return not any(rel.is_infinity for rel in self.relations)


@dataclass(frozen=True)
class DifferenceGroup:
    """Γ ≅ Z^rank with the chosen images of the generators.

    images has one column per generator; relation_lattice has one column
    per element-relation (lhs - rhs), and its cokernel is free by the
    torsion check in difference_group.
    """

    rank: int
    images: IntMatrix
    relation_lattice: IntMatrix

    def image_of(self, index: int) -> tuple:
        return self.images.column(index)

    def all_images(self) -> list:
        return [self.images.column(j) for j in range(self.images.cols)]


# ---------------------------------------------------------------------------


def from_simplicial(complex_: SimplicialComplex) -> BinoidPresentation:
    """The binoid (vertices | sum over each minimal non-face = ∞)."""
    if complex_.is_void or not complex_.vertices:
        raise VoidComplex("need a complex with at least one vertex")
    vertices = complex_.vertices
    n = len(vertices)
    face_set = {frozenset(f) for f in complex_.all_faces()}
    relations = []
    for size in range(2, n + 1):
        for combo in itertools.combinations(range(n), size):
            subset = frozenset(vertices[i] for i in combo)
            if subset in face_set:
                continue
            if all(subset - {v} in face_set for v in subset):
                lhs = tuple(1 if i in combo else 0 for i in range(n))
                relations.append(Relation(lhs, None))
    return BinoidPresentation(vertices, tuple(relations))


def _complex_from_nonface_supports(names: tuple, supports: list) -> SimplicialComplex:
    n = len(names)
    supports = [frozenset(s) for s in supports]
    faces = []
    for size in range(n + 1):
        for combo in itertools.combinations(range(n), size):
            cset = set(combo)
            if not any(s <= cset for s in supports):
                faces.append(tuple(names[i] for i in combo))
    if not faces:
        return SimplicialComplex.void()
    covered = {v for f in faces for v in f}
    vertices = [v for v in names if v in covered]
    return SimplicialComplex.make(vertices, faces)


def as_simplicial(M: BinoidPresentation) -> SimplicialComplex:
    """The complex whose non-faces are the relation supports.

    Requires every relation to be squarefree = ∞; inverse of
    from_simplicial up to minimality of the relations.
    """
    supports = []
    for rel in M.relations:
        if not rel.is_infinity:
            raise NotSimplicialPresentation("element relation present")
        if any(x > 1 for x in rel.lhs):
            raise NotSimplicialPresentation("relation is not squarefree")
        supports.append(rel.lhs_support())
    return _complex_from_nonface_supports(M.generator_names, supports)


def radical_complex(M: BinoidPresentation) -> SimplicialComplex:
    """The complex of the radical of a monomial presentation."""
    supports = []
    for rel in M.relations:
        if not rel.is_infinity:
            raise NotMonomialPresentation("element relation present")
        supports.append(rel.lhs_support())
    return _complex_from_nonface_supports(M.generator_names, supports)


def smash_free(M: BinoidPresentation, k: int) -> BinoidPresentation:
    """M ∧ (N^k)^∞: k fresh free generators, no new relations."""
    if k < 0:
        raise ValueError("count must be nonnegative")
    if k == 0:
        return M
    taken = set(M.generator_names)
    fresh = []
    for i in range(1, k + 1):
        name = "t" if k == 1 else "t%d" % i
        while name in taken:
            name += "_"
        taken.add(name)
        fresh.append(name)
    names = M.generator_names + tuple(fresh)
    pad = (0,) * k
    relations = tuple(
        Relation(rel.lhs + pad, None if rel.rhs is None else rel.rhs + pad)
        for rel in M.relations
    )
    return BinoidPresentation(names, relations)


def difference_group(M: BinoidPresentation) -> DifferenceGroup:
    """Γ = group completion of M minus ∞, with a recorded basis.

    The basis comes from the Smith normal form of the relation lattice,
    so images are reproducible run to run.
    """
    if not M.is_integral():
        raise NotIntegral("∞-relation present; the binoid is not integral")
    n = M.generator_count
    columns = [
        [l - r for l, r in zip(rel.lhs, rel.rhs)] for rel in M.relations
    ]
    lattice = IntMatrix.from_rows(
        [[col[i] for col in columns] for i in range(n)], cols=len(columns)
    )
    dec = smith_normal_form(lattice)
    diag = dec.diagonal()
    if any(d not in (0, 1) for d in diag):
        raise Torsion("difference group has torsion: diagonal %s" % (diag,))
    free_rows = [i for i in range(n) if i >= len(diag) or diag[i] == 0]
    images = IntMatrix.from_rows(
        [dec.U.row(i) for i in free_rows], cols=n
    )
    return DifferenceGroup(len(free_rows), images, lattice)
