"""Čech cohomology of the unit sheaf on punctured binoid spectra.

Simplicial binoids get two independent routes: the per-vertex splitting of
the coordinate-cover complex, and the closed formula summing reduced link
cohomology.  General integral binoids get a direct computation on the
minimal cover, with unit groups of localizations discovered by bounded
search in the difference group.
"""

from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .binoid import (
    BinoidPresentation,
    DifferenceGroup,
    difference_group,
    from_simplicial,
    radical_complex,
)
from .divisors import cone_facets
from .errors import (
    CompositionNonzero,
    DegenerateLocalization,
    NotMonomialPresentation,
    VoidComplex,
)
from .exactalg import (
    TRIVIAL_GROUP,
    FinAbGroup,
    GroupExpr,
    IntMatrix,
    cohomology_of_complex,
    column_lattice_basis,
    solve_columns,
)
from .simplicial import SimplicialComplex
from .spectrum import (
    PrimeIdeal,
    compute_spec,
    minimal_cover,
    nerve,
    punctured_spectrum,
)


@dataclass(frozen=True)
class CechComplex:
    """Cochain complex of free groups with a label per coordinate.

    Labels in degree j are pairs (face or cover subset, coordinate); the
    differentials carry the alternating-sign restriction maps.
    """

    labels_by_degree: Tuple[Tuple, ...]
    differentials: Tuple[IntMatrix, ...]

    def __post_init__(self):
        labels = tuple(tuple(degree) for degree in self.labels_by_degree)
        diffs = tuple(self.differentials)
        object.__setattr__(self, "labels_by_degree", labels)
        object.__setattr__(self, "differentials", diffs)
        if len(diffs) != max(len(labels) - 1, 0):
            raise ValueError("need one differential between consecutive degrees")
        for j, d in enumerate(diffs):
            if d.cols != len(labels[j]) or d.rows != len(labels[j + 1]):
                raise ValueError("differential shape does not match the labels")
        for a, b in zip(diffs, diffs[1:]):
            if not (b * a).is_zero():
                raise CompositionNonzero("consecutive differentials do not compose to zero")

    @property
    def ranks(self) -> Tuple[int, ...]:
        return tuple(len(degree) for degree in self.labels_by_degree)

    def cohomology(self) -> List[FinAbGroup]:
        return cohomology_of_complex(list(self.ranks), list(self.differentials))

    def to_json(self) -> dict:
        return {
            "ranks": list(self.ranks),
            "labels": [
                [[list(face) if isinstance(face, tuple) else face, coord]
                 for face, coord in degree]
                for degree in self.labels_by_degree
            ],
            "differentials": [d.to_lists() for d in self.differentials],
        }


# ---------------------------------------------------------------------------
# simplicial binoids


def picard_complex_simplicial(delta: SimplicialComplex) -> CechComplex:
    """The unit-sheaf Čech complex on the coordinate cover, split by vertex.

    Degree j has one Z per pair (F in Delta_j, v in F); the component of
    the differential at (F, v) sums (-1)^l over the subfaces obtained by
    dropping the l-th vertex of F, skipping v itself.
    """
    if delta.is_void or not delta.vertices:
        raise VoidComplex("need a complex with at least one vertex")
    labels = []
    for d in range(delta.dimension + 1):
        labels.append(tuple((f, v) for f in delta.faces(d) for v in f))
    diffs = []
    for d in range(delta.dimension):
        index = {lab: i for i, lab in enumerate(labels[d])}
        rows = []
        for face, v in labels[d + 1]:
            row = [0] * len(labels[d])
            for l, dropped in enumerate(face):
                if dropped == v:
                    continue
                sub = face[:l] + face[l + 1 :]
                if (sub, v) in index:
                    row[index[(sub, v)]] += (-1) ** l
            rows.append(row)
        diffs.append(IntMatrix.from_rows(rows, cols=len(labels[d])))
    return CechComplex(tuple(labels), tuple(diffs))


def local_picard_formula(delta: SimplicialComplex) -> List[FinAbGroup]:
    """H^j of the unit sheaf via reduced link cohomology, degrees 0..dim.

    Each vertex contributes its link's reduced (j-1)-st cohomology to
    degree j; everything above the dimension vanishes.
    """
    if delta.is_void or not delta.vertices:
        raise VoidComplex("need a complex with at least one vertex")
    out = [TRIVIAL_GROUP] * (delta.dimension + 1)
    for v in delta.vertices:
        reduced = delta.link((v,)).cohomology(reduced=True)
        for j in range(min(len(reduced), len(out))):
            out[j] = out[j].direct_sum(reduced[j])
    return out


def local_picard_cech(delta: SimplicialComplex) -> List[FinAbGroup]:
    """Same groups as local_picard_formula, by running the Čech complex."""
    return picard_complex_simplicial(delta).cohomology()


def constant_cohomology(target, opens: Optional[Set[PrimeIdeal]] = None) -> List[FinAbGroup]:
    """Integer cohomology of a complex, or of an open set via its cover nerve.

    For a spectrum the open set defaults to the punctured spectrum.
    """
    if isinstance(target, SimplicialComplex):
        return target.cohomology()
    if opens is None:
        opens = punctured_spectrum(target)
    cover = minimal_cover(target, opens)
    return nerve(target, cover).cohomology()


def pic_open_subset(delta: SimplicialComplex, opens: Set[PrimeIdeal]) -> List[FinAbGroup]:
    """Unit-sheaf Čech cohomology of an open subset of a simplicial spectrum.

    The minimal cover consists of basic opens D(G_i) for faces G_i; the
    crosscut complex indexes the intersections, and the degree-k group is
    one Z^(union of faces) per crosscut k-face.  Degree 1 is Pic of the
    open set.
    """
    S = compute_spec(from_simplicial(delta))
    supports = minimal_cover(S, opens)
    position = {v: i for i, v in enumerate(delta.vertices)}
    faces = [tuple(delta.vertices[i] for i in sup) for sup in supports]
    ccc = delta.crosscut(faces)

    unions = {}
    labels = []
    for k in range(ccc.dimension + 1):
        degree = []
        for J in ccc.faces(k):
            merged = sorted(
                {v for j in J for v in faces[j - 1]}, key=position.get
            )
            unions[J] = merged
            degree.extend((J, v) for v in merged)
        labels.append(tuple(degree))

    diffs = []
    for k in range(ccc.dimension):
        index = {lab: i for i, lab in enumerate(labels[k])}
        rows = []
        for J, v in labels[k + 1]:
            row = [0] * len(labels[k])
            for l in range(len(J)):
                sub = J[:l] + J[l + 1 :]
                if v in unions[sub]:
                    row[index[(sub, v)]] += (-1) ** l
            rows.append(row)
        diffs.append(IntMatrix.from_rows(rows, cols=len(labels[k])))
    return CechComplex(tuple(labels), tuple(diffs)).cohomology()


def stanley_reisner_cohomology(
    delta: SimplicialComplex, symbol: str = "K*"
) -> List[Tuple[GroupExpr, FinAbGroup]]:
    """Unit-sheaf cohomology over a Stanley-Reisner algebra, degree by degree.

    Each degree splits into a constant part with coefficients in the unit
    group of the field (kept symbolic) and the integer part of the
    underlying simplicial binoid.
    """
    if delta.is_void or not delta.vertices:
        raise VoidComplex("need a complex with at least one vertex")
    constant = delta.cohomology_with_coefficients(symbol)
    integer = local_picard_formula(delta)
    return list(zip(constant, integer))


# ---------------------------------------------------------------------------
# general integral binoids


@dataclass(frozen=True)
class UnitSubgroup:
    """Units of a localization M_F, as a sublattice of the difference group."""

    ambient: DifferenceGroup
    basis: IntMatrix  # columns are independent generators in Gamma-coordinates
    face: Tuple[int, ...]
    complete: bool

    @property
    def rank(self) -> int:
        return self.basis.cols

    def columns(self) -> List[Tuple[int, ...]]:
        return [self.basis.column(j) for j in range(self.basis.cols)]

    def to_json(self) -> dict:
        return {
            "face": list(self.face),
            "rank": self.rank,
            "basis": self.basis.to_lists(),
            "complete": self.complete,
        }


def _dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def _in_lattice(basis: IntMatrix, vector: Tuple[int, ...]) -> bool:
    column = IntMatrix.from_rows([[x] for x in vector], cols=1)
    try:
        solve_columns(basis, column)
        return True
    except ValueError:
        return False


def _columns_matrix(rank: int, columns: Sequence[Tuple[int, ...]]) -> IntMatrix:
    rows = [[col[i] for col in columns] for i in range(rank)]
    return IntMatrix.from_rows(rows, cols=len(columns))


def _box_shell(rank: int, radius: int):
    for point in product(range(-radius, radius + 1), repeat=rank):
        if max((abs(x) for x in point), default=0) == radius:
            yield point


class _Membership:
    """Decides g in M_F = M + Z<F> by bounded search in the difference group.

    Shifts by face elements are limited to the search bound; what remains
    must be a nonnegative combination of generator images avoiding the
    infinity ideal.  The facet normals provide the descent that makes the
    enumeration finite.
    """

    def __init__(self, M: BinoidPresentation, gamma: DifferenceGroup, face, bound):
        self.bound = bound
        self.images = gamma.all_images()
        self.normals = cone_facets(gamma)
        self.weights = [
            sum(_dot(n, img) for n in self.normals) for img in self.images
        ]
        self.floors = [rel.lhs for rel in M.relations if rel.is_infinity]
        self.face = tuple(face)
        self.face_lattice = column_lattice_basis(
            _columns_matrix(gamma.rank, [self.images[f] for f in face])
        )
        self.small_first = sorted(range(-bound, bound + 1), key=abs)
        self.cache: Dict[Tuple[int, ...], bool] = {}

    def _representable(self, target: Tuple[int, ...]) -> bool:
        if target in self.cache:
            return self.cache[target]
        counts = [0] * len(self.images)

        def rec(idx: int, rem: Tuple[int, ...], weight: int) -> bool:
            if weight == 0:
                return not any(rem)
            if idx == len(self.images):
                return False
            if any(_dot(n, rem) < 0 for n in self.normals):
                return False
            img = self.images[idx]
            step = self.weights[idx]
            for c in range(weight // step + 1):
                counts[idx] = c
                if any(
                    all(counts[i] >= f[i] for i in range(len(counts)))
                    for f in self.floors
                ):
                    break  # the infinity ideal absorbs every larger exponent
                if rec(
                    idx + 1,
                    tuple(r - c * x for r, x in zip(rem, img)),
                    weight - c * step,
                ):
                    counts[idx] = 0
                    return True
            counts[idx] = 0
            return False

        total = sum(_dot(n, target) for n in self.normals)
        result = total >= 0 and rec(0, target, total)
        self.cache[target] = result
        return result

    def __call__(self, g: Tuple[int, ...]) -> bool:
        if self.face and _in_lattice(self.face_lattice, g):
            return True  # g lies in Z<F> itself
        for k in product(self.small_first, repeat=len(self.face)):
            shifted = tuple(
                x - sum(kf * self.images[f][i] for kf, f in zip(k, self.face))
                for i, x in enumerate(g)
            )
            if any(_dot(n, shifted) < 0 for n in self.normals):
                continue
            if self._representable(shifted):
                return True
        return False


def units_of_localization(
    M: BinoidPresentation,
    gamma: DifferenceGroup,
    face: Sequence[int],
    bound: int = 6,
) -> UnitSubgroup:
    """Subgroup of the difference group inverted by localizing at a face.

    Collects every g with g and -g in M_F inside the coordinate box of the
    given radius and returns the subgroup they generate.  The complete
    flag drops when a boundary-shell unit falls outside the subgroup found
    strictly inside, the sign that the bound was hit too early.
    """
    face = tuple(sorted(face))
    for rel in M.relations:
        if rel.is_infinity and rel.lhs_support() <= set(face):
            raise DegenerateLocalization(
                "localization kills the face: an infinity relation is supported on it"
            )
    member = _Membership(M, gamma, face, bound)
    r = gamma.rank
    zero_normals = [
        n
        for n in member.normals
        if all(_dot(n, member.images[f]) == 0 for f in face)
    ]

    found: List[Tuple[int, ...]] = []
    basis = IntMatrix.zero(r, 0)
    complete = True
    for radius in range(bound + 1):
        for g in _box_shell(r, radius):
            if any(_dot(n, g) != 0 for n in zero_normals):
                continue  # a normal vanishing on the face must vanish on units
            if not any(g):
                continue
            if _in_lattice(basis, g):
                continue
            if member(g) and member(tuple(-x for x in g)):
                if radius == bound:
                    complete = False
                found.append(g)
                basis = column_lattice_basis(_columns_matrix(r, found))
    return UnitSubgroup(gamma, basis, face, complete)


@dataclass(frozen=True)
class LocalPicardResult:
    """Čech output on the minimal cover: groups, complex, and search status."""

    groups: Tuple[FinAbGroup, ...]
    complete: bool
    cech: CechComplex
    cover: Tuple[Tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {
            "groups": [g.to_json() for g in self.groups],
            "complete": self.complete,
            "cover": [list(sup) for sup in self.cover],
            "complex": self.cech.to_json(),
        }


def local_picard_general(M: BinoidPresentation, bound: int = 6) -> LocalPicardResult:
    """Unit-sheaf Čech cohomology on the minimal cover of the punctured spectrum.

    Every intersection of basic opens of an integral binoid is nonempty,
    so the index complex is a full simplex.  Unit groups of smaller
    intersections are pushed into larger ones so the restriction maps stay
    solvable in the recorded bases; degree 1 is the local Picard group.
    """
    gamma = difference_group(M)
    S = compute_spec(M)
    cover = minimal_cover(S, punctured_spectrum(S))

    units: Dict[Tuple[int, ...], UnitSubgroup] = {}
    complete = True
    for size in range(1, len(cover) + 1):
        for J in combinations(range(len(cover)), size):
            face = tuple(sorted({i for j in J for i in cover[j]}))
            u = units_of_localization(M, gamma, face, bound)
            complete = complete and u.complete
            columns = u.columns()
            if size > 1:
                for l in range(size):
                    for inherited in units[J[:l] + J[l + 1 :]].columns():
                        if not _in_lattice(u.basis, inherited):
                            complete = False  # the box search missed this unit
                        columns.append(inherited)
                basis = column_lattice_basis(_columns_matrix(gamma.rank, columns))
                u = UnitSubgroup(gamma, basis, face, u.complete)
            units[J] = u

    labels = []
    offsets: Dict[Tuple[int, ...], int] = {}
    for size in range(1, len(cover) + 1):
        degree = []
        for J in combinations(range(len(cover)), size):
            offsets[J] = len(degree)
            degree.extend((J, t) for t in range(units[J].rank))
        labels.append(tuple(degree))

    diffs = []
    for size in range(1, len(cover)):
        rows = len(labels[size])
        cols = len(labels[size - 1])
        entries = [[0] * cols for _ in range(rows)]
        for K in combinations(range(len(cover)), size + 1):
            for l in range(size + 1):
                J = K[:l] + K[l + 1 :]
                block = solve_columns(units[K].basis, units[J].basis)
                sign = (-1) ** l
                for a in range(block.rows):
                    for b in range(block.cols):
                        entries[offsets[K] + a][offsets[J] + b] += sign * block.entry(a, b)
        diffs.append(IntMatrix.from_rows(entries, cols=cols))

    cech = CechComplex(tuple(labels), tuple(diffs))
    return LocalPicardResult(
        tuple(cech.cohomology()), complete, cech, tuple(cover)
    )


# ---------------------------------------------------------------------------
# monomial algebras


@dataclass(frozen=True)
class MonomialReport:
    """Reduced-part cohomology of a monomial algebra, radical or not."""

    presentation: BinoidPresentation
    complex: SimplicialComplex
    is_radical: bool
    degrees: Tuple[Tuple[GroupExpr, FinAbGroup], ...]
    nonvanishing_h1: bool
    unipotent_part: str = "NOT COMPUTED"

    def to_json(self) -> dict:
        return {
            "complex": [list(f) for f in self.complex.facets],
            "is_radical": self.is_radical,
            "degrees": [
                {"constant": expr.to_json(), "integer": part.to_json()}
                for expr, part in self.degrees
            ],
            "nonvanishing_h1": self.nonvanishing_h1,
            "unipotent_part": self.unipotent_part,
        }


def monomial_report(M: BinoidPresentation) -> MonomialReport:
    """Splitting report for the algebra of a monomial ideal.

    The radical complex carries the reduced cohomology; degree 1 of the
    reduced part already decides nonvanishing of the Picard group.  The
    unipotent contribution has no finite presentation, so it is reported
    untouched.
    """
    if not M.is_monomial():
        raise NotMonomialPresentation("all relations must send a monomial to infinity")
    delta = radical_complex(M)
    exponents = [rel.lhs for rel in M.relations]
    is_radical = all(
        any(all(r >= m for r, m in zip(radical, monomial)) for monomial in exponents)
        for radical in (tuple(min(e, 1) for e in exp) for exp in exponents)
    )
    degrees = tuple(stanley_reisner_cohomology(delta, "K*"))
    if len(degrees) > 1:
        h1_constant, h1_integer = degrees[1]
        nonvanishing = not (h1_constant.is_trivial and h1_integer.is_trivial)
    else:
        nonvanishing = False
    return MonomialReport(M, delta, is_radical, degrees, nonvanishing)
