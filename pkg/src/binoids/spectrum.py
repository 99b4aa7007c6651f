"""Prime spectra of finitely presented binoids as finite posets.

A subset of the generators spans a prime ideal exactly when every element
relation has both or neither side supported on it and every infinity
relation is supported on it.  The spectrum is the resulting union-closed
family, ordered by inclusion.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import FrozenSet, Iterable, List, Sequence, Set, Tuple

from .binoid import BinoidPresentation
from .errors import NotInSpec, NotOpen, NotPositive
from .simplicial import SimplicialComplex


@dataclass(frozen=True, order=True)
class PrimeIdeal:
    """A prime ideal, recorded by the sorted generator indices it contains."""

    generator_subset: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "generator_subset", tuple(sorted(self.generator_subset))
        )

    def __iter__(self):
        return iter(self.generator_subset)

    def __len__(self):
        return len(self.generator_subset)


@dataclass(frozen=True)
class SpecPoset:
    """All prime ideals of a presentation, sorted by size then lexicographically."""

    presentation: BinoidPresentation
    primes: Tuple[PrimeIdeal, ...]
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def position_of(self, prime: PrimeIdeal) -> int:
        if self._index is None:
            lookup = {p: i for i, p in enumerate(self.primes)}
            object.__setattr__(self, "_index", lookup)
        if prime not in self._index:
            raise NotInSpec(f"{prime.generator_subset} is not a prime ideal here")
        return self._index[prime]

    def __contains__(self, prime) -> bool:
        return isinstance(prime, PrimeIdeal) and any(p == prime for p in self.primes)


def _sort_key(prime: PrimeIdeal):
    return (len(prime.generator_subset), prime.generator_subset)


def compute_spec(M: BinoidPresentation) -> SpecPoset:
    """Enumerate the prime ideals of a positive presentation.

    Candidates are scanned by increasing size; a union of two known primes
    is admitted without rechecking the criterion.
    """
    n = M.generator_count
    element_masks = []
    infinity_masks = []
    for rel in M.relations:
        lhs = sum(1 << i for i in rel.lhs_support())
        if not lhs:
            raise NotPositive("relation with empty left-hand support")
        if rel.is_infinity:
            infinity_masks.append(lhs)
        else:
            rhs = sum(1 << i for i in rel.rhs_support())
            if not rhs:
                raise NotPositive("relation with empty right-hand support")
            element_masks.append((lhs, rhs))

    def satisfies_criterion(mask: int) -> bool:
        for lhs, rhs in element_masks:
            if bool(mask & lhs) != bool(mask & rhs):
                return False
        return all(mask & f for f in infinity_masks)

    found: List[int] = []
    known_unions: Set[int] = set()
    primes = []
    for size in range(n + 1):
        for subset in combinations(range(n), size):
            mask = sum(1 << i for i in subset)
            if mask in known_unions or satisfies_criterion(mask):
                for other in found:
                    known_unions.add(mask | other)
                found.append(mask)
                primes.append(PrimeIdeal(subset))
    return SpecPoset(M, tuple(sorted(primes, key=_sort_key)))


def _height_table(S: SpecPoset) -> dict:
    heights = {}
    for p in S.primes:  # sorted by size, so all proper subsets come first
        below = [
            heights[q]
            for q in S.primes
            if len(q) < len(p) and set(q.generator_subset) < set(p.generator_subset)
        ]
        heights[p] = max(below) + 1 if below else 0
    return heights


def height(S: SpecPoset, prime: PrimeIdeal) -> int:
    """Length of the longest chain of primes strictly below ``prime``."""
    S.position_of(prime)
    return _height_table(S)[prime]


def primes_of_height_at_most(S: SpecPoset, bound: int) -> Set[PrimeIdeal]:
    """Primes of height at most ``bound``; bound 1 gives the punctured Weil locus."""
    return {p for p, h in _height_table(S).items() if h <= bound}


def punctured_spectrum(S: SpecPoset) -> Set[PrimeIdeal]:
    """Every prime except the maximal ideal of the positive presentation."""
    full = tuple(range(S.presentation.generator_count))
    return {p for p in S.primes if p.generator_subset != full}


def minimal_neighborhood(S: SpecPoset, prime: PrimeIdeal) -> Tuple[int, ...]:
    """Support of the smallest basic open set containing ``prime``.

    Localizing at the sum of all generators outside the prime keeps
    exactly the primes contained in it.
    """
    S.position_of(prime)
    inside = set(prime.generator_subset)
    return tuple(i for i in range(S.presentation.generator_count) if i not in inside)


def open_subset(S: SpecPoset, support: Sequence[int]) -> Set[PrimeIdeal]:
    """Primes avoiding every generator in ``support`` (the set D(f))."""
    avoid = set(support)
    return {p for p in S.primes if avoid.isdisjoint(p.generator_subset)}


def _check_open(S: SpecPoset, opens: Iterable[PrimeIdeal]) -> Set[PrimeIdeal]:
    U = set(opens)
    for p in U:
        S.position_of(p)
    for q in S.primes:
        if q in U:
            continue
        if any(set(q.generator_subset) < set(p.generator_subset) for p in U):
            raise NotOpen("subset is not closed under passing to smaller primes")
    return U


def minimal_cover(S: SpecPoset, opens: Iterable[PrimeIdeal]) -> List[Tuple[int, ...]]:
    """Supports of the canonical smallest cover of an open set by basic opens.

    One basic open per maximal prime of the set; the support is the
    complement of that prime.  Returned in sorted order.
    """
    U = _check_open(S, opens)
    maximal = [
        p
        for p in U
        if not any(
            p is not q and set(p.generator_subset) < set(q.generator_subset)
            for q in U
        )
    ]
    return sorted(minimal_neighborhood(S, p) for p in maximal)


def nerve(S: SpecPoset, cover: Sequence[Sequence[int]]) -> SimplicialComplex:
    """Nerve of a list of basic opens, on 1-based vertices indexing the list.

    A set of indices spans a face when the corresponding opens intersect;
    indices whose open is empty are dropped.
    """
    opens = [open_subset(S, support) for support in cover]
    vertices = [i + 1 for i, U in enumerate(opens) if U]
    faces = []
    for size in range(1, len(vertices) + 1):
        for subset in combinations(vertices, size):
            common = set.intersection(*(opens[i - 1] for i in subset))
            if common:
                faces.append(subset)
    return SimplicialComplex.make(vertices, faces)


def connected_components(S: SpecPoset, opens: Iterable[PrimeIdeal]) -> int:
    """Number of connected components of an open set, via comparability."""
    U = sorted(_check_open(S, opens), key=_sort_key)
    parent = list(range(len(U)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a, p in enumerate(U):
        for b in range(a + 1, len(U)):
            sets = set(p.generator_subset), set(U[b].generator_subset)
            if sets[0] <= sets[1] or sets[1] <= sets[0]:
                parent[find(a)] = find(b)
    return len({find(i) for i in range(len(U))})


def _cover_relations(S: SpecPoset) -> List[Tuple[int, int]]:
    edges = []
    sets = [set(p.generator_subset) for p in S.primes]
    for a, small in enumerate(sets):
        for b, big in enumerate(sets):
            if not (len(small) < len(big) and small < big):
                continue
            if any(
                small < mid < big
                for mid in sets
                if len(small) < len(mid) < len(big)
            ):
                continue
            edges.append((a, b))
    return edges


def prime_label(S: SpecPoset, prime: PrimeIdeal) -> str:
    """Display form of a prime: generator names between angle brackets."""
    if not prime.generator_subset:
        return "<inf>"
    names = S.presentation.generator_names
    return "<" + ",".join(str(names[i]) for i in prime.generator_subset) + ">"


def to_dot(S: SpecPoset) -> str:
    """Hasse diagram of the spectrum in DOT format, maximal primes on top."""
    lines = ["digraph spec {", "  rankdir=BT;"]
    for i, p in enumerate(S.primes):
        lines.append(f'  p{i} [label="{prime_label(S, p)}"];')
    for a, b in _cover_relations(S):
        lines.append(f"  p{a} -> p{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
