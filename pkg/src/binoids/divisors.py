"""Weil divisors for integral, torsion-free, cancellative, positive binoids.

The generator images span a full-dimensional pointed cone in the
difference group.  Height-1 primes correspond to the facets of that cone,
valuations are the primitive facet normals, and the divisor class group is
the cokernel of the map sending the difference group to the divisor group
via all the valuations at once.
"""

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import List, Optional, Tuple

from .binoid import BinoidPresentation, DifferenceGroup, difference_group
from .errors import FacetPrimeMismatch, NotFullDimensional, NotPointed
from .exactalg import FinAbGroup, IntMatrix, cokernel, kernel_basis, smith_normal_form
from .spectrum import PrimeIdeal, compute_spec, height


def _dot(u: Tuple[int, ...], v: Tuple[int, ...]) -> int:
    return sum(a * b for a, b in zip(u, v))


def cone_facets(gamma: DifferenceGroup) -> List[Tuple[int, ...]]:
    """Primitive inner normals of the facets of cone(generator images).

    A candidate is the kernel vector of r-1 images; it survives when it is
    nonnegative on every image and its zero set still spans a hyperplane.
    """
    r = gamma.rank
    images = gamma.all_images()
    span = IntMatrix.from_rows([list(v) for v in images], cols=r)
    if smith_normal_form(span).rank() < r:
        raise NotFullDimensional("generator images do not span the full lattice")

    normals = set()
    for subset in combinations(range(len(images)), r - 1):
        wall = IntMatrix.from_rows([list(images[i]) for i in subset], cols=r)
        candidates = kernel_basis(wall)
        if candidates.cols != 1:
            continue  # images in the subset do not span a hyperplane
        normal = list(candidates.column(0))
        g = gcd(*normal) if len(normal) > 1 else abs(normal[0])
        normal = [x // g for x in normal]
        values = [_dot(tuple(normal), img) for img in images]
        if all(v <= 0 for v in values):
            normal = [-x for x in normal]
            values = [-v for v in values]
        if any(v < 0 for v in values):
            continue  # not a supporting hyperplane
        zero_span = IntMatrix.from_rows(
            [list(img) for img, v in zip(images, values) if v == 0], cols=r
        )
        if smith_normal_form(zero_span).rank() != r - 1:
            continue
        normals.add(tuple(normal))

    dual = IntMatrix.from_rows([list(n) for n in normals], cols=r)
    if smith_normal_form(dual).rank() < r:
        raise NotPointed("generator images contain a line")
    return sorted(normals)


@dataclass(frozen=True)
class ValuationMatrix:
    """Valuations of the generators, one row per height-1 prime."""

    matrix: IntMatrix
    row_primes: Tuple[PrimeIdeal, ...]
    normals: Tuple[Tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {
            "row_primes": [list(p.generator_subset) for p in self.row_primes],
            "values": self.matrix.to_lists(),
        }


def valuation_matrix(M: BinoidPresentation) -> ValuationMatrix:
    """Facet valuations matched to the height-1 primes of the spectrum.

    The row for a facet belongs to the prime consisting of the generators
    with positive value; anything short of a bijection raises.
    """
    gamma = difference_group(M)
    S = compute_spec(M)
    height_one = [p for p in S.primes if height(S, p) == 1]
    normals = cone_facets(gamma)
    if len(normals) != len(height_one):
        raise FacetPrimeMismatch(
            f"{len(normals)} facets against {len(height_one)} height-1 primes"
        )
    images = gamma.all_images()
    by_prime = {}
    for normal in normals:
        values = tuple(_dot(normal, img) for img in images)
        key = PrimeIdeal(tuple(i for i, v in enumerate(values) if v > 0))
        if key in by_prime:
            raise FacetPrimeMismatch("two facets select the same prime")
        by_prime[key] = (normal, values)
    if set(by_prime) != set(height_one):
        raise FacetPrimeMismatch("facet supports do not match the height-1 primes")
    ordered = sorted(height_one, key=lambda p: p.generator_subset)
    return ValuationMatrix(
        IntMatrix.from_rows([list(by_prime[p][1]) for p in ordered], cols=len(images)),
        tuple(ordered),
        tuple(by_prime[p][0] for p in ordered),
    )


def class_group(M: BinoidPresentation) -> FinAbGroup:
    """Divisor class group: cokernel of the valuation map on the difference group."""
    vm = valuation_matrix(M)
    gamma_rank = len(vm.normals[0]) if vm.normals else 0
    phi = IntMatrix.from_rows([list(n) for n in vm.normals], cols=gamma_rank)
    return cokernel(phi)


@dataclass(frozen=True)
class PrimeEvidence:
    """What certifies one height-1 prime: a value-1 element and a unit lattice."""

    prime: PrimeIdeal
    witness: Optional[Tuple[int, ...]]
    units_span_hyperplane: bool


@dataclass(frozen=True)
class RegularityReport:
    verdict: str  # "Certified" or "Unknown"
    evidence: Tuple[PrimeEvidence, ...]

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "evidence": [
                {
                    "prime": list(e.prime.generator_subset),
                    "witness": list(e.witness) if e.witness is not None else None,
                    "units_span_hyperplane": e.units_span_hyperplane,
                }
                for e in self.evidence
            ],
        }


def regular_in_codim1_check(M: BinoidPresentation) -> RegularityReport:
    """Sufficient criterion for regularity in codimension 1.

    Certifies a prime when some generator or 2-generator sum has valuation
    exactly 1 and the value-0 generators span a hyperplane.  Failure to
    certify is reported as Unknown, never as a negative.
    """
    gamma = difference_group(M)
    vm = valuation_matrix(M)
    n = M.generator_count
    candidates = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    for i, j in combinations(range(n), 2):
        candidates.append(tuple((j == k) + (i == k) for k in range(n)))
    candidates += [tuple(2 * (j == i) for j in range(n)) for i in range(n)]

    evidence = []
    for prime, row in zip(vm.row_primes, vm.matrix.to_lists()):
        witness = next(
            (c for c in candidates if _dot(c, tuple(row)) == 1), None
        )
        zero_span = IntMatrix.from_rows(
            [list(gamma.image_of(i)) for i, v in enumerate(row) if v == 0],
            cols=gamma.rank,
        )
        hyperplane = smith_normal_form(zero_span).rank() == gamma.rank - 1
        evidence.append(PrimeEvidence(prime, witness, hyperplane))
    certified = all(e.witness is not None and e.units_span_hyperplane for e in evidence)
    return RegularityReport("Certified" if certified else "Unknown", tuple(evidence))
