"""Spectra, Cech-Picard complexes, local Picard groups, and divisor class
groups of finitely presented binoids and their monomial algebras, computed
in exact integer arithmetic."""

from .binoid import (
    BinoidPresentation,
    DifferenceGroup,
    Relation,
    as_simplicial,
    difference_group,
    from_simplicial,
    radical_complex,
    smash_free,
)
from .cech import (
    CechComplex,
    LocalPicardResult,
    MonomialReport,
    UnitSubgroup,
    constant_cohomology,
    local_picard_cech,
    local_picard_formula,
    local_picard_general,
    monomial_report,
    pic_open_subset,
    picard_complex_simplicial,
    stanley_reisner_cohomology,
    units_of_localization,
)
from .divisors import (
    PrimeEvidence,
    RegularityReport,
    ValuationMatrix,
    class_group,
    cone_facets,
    regular_in_codim1_check,
    valuation_matrix,
)
from .errors import (
    BinoidsError,
    CompositionNonzero,
    DegenerateLocalization,
    FacetPrimeMismatch,
    NotAFace,
    NotFullDimensional,
    NotInSpec,
    NotIntegral,
    NotMonomialPresentation,
    NotOpen,
    NotPointed,
    NotPositive,
    NotSimplicialPresentation,
    ParseError,
    PreconditionError,
    Torsion,
    UnknownVertex,
    VoidComplex,
)
from .exactalg import (
    TRIVIAL_GROUP,
    FinAbGroup,
    GroupExpr,
    IntMatrix,
    SmithDecomposition,
    coefficient_cohomology,
    cohomology_of_complex,
    cokernel,
    column_lattice_basis,
    complex_cohomology,
    kernel_basis,
    smith_normal_form,
    solve_columns,
)
from .simplicial import SimplicialComplex
from .spectrum import (
    PrimeIdeal,
    SpecPoset,
    compute_spec,
    connected_components,
    height,
    minimal_cover,
    minimal_neighborhood,
    nerve,
    open_subset,
    prime_label,
    primes_of_height_at_most,
    punctured_spectrum,
    to_dot,
)

__version__ = "0.1.0"

__all__ = [
    "BinoidPresentation",
    "BinoidsError",
    "CechComplex",
    "CompositionNonzero",
    "DegenerateLocalization",
    "DifferenceGroup",
    "FacetPrimeMismatch",
    "FinAbGroup",
    "GroupExpr",
    "IntMatrix",
    "LocalPicardResult",
    "MonomialReport",
    "NotAFace",
    "NotFullDimensional",
    "NotInSpec",
    "NotIntegral",
    "NotMonomialPresentation",
    "NotOpen",
    "NotPointed",
    "NotPositive",
    "NotSimplicialPresentation",
    "ParseError",
    "PreconditionError",
    "PrimeEvidence",
    "PrimeIdeal",
    "RegularityReport",
    "Relation",
    "SimplicialComplex",
    "SmithDecomposition",
    "SpecPoset",
    "TRIVIAL_GROUP",
    "Torsion",
    "UnitSubgroup",
    "UnknownVertex",
    "ValuationMatrix",
    "VoidComplex",
    "as_simplicial",
    "class_group",
    "coefficient_cohomology",
    "cohomology_of_complex",
    "cokernel",
    "column_lattice_basis",
    "complex_cohomology",
    "compute_spec",
    "cone_facets",
    "connected_components",
    "constant_cohomology",
    "difference_group",
    "from_simplicial",
    "height",
    "kernel_basis",
    "local_picard_cech",
    "local_picard_formula",
    "local_picard_general",
    "minimal_cover",
    "minimal_neighborhood",
    "monomial_report",
    "nerve",
    "open_subset",
    "pic_open_subset",
    "picard_complex_simplicial",
    "prime_label",
    "primes_of_height_at_most",
    "punctured_spectrum",
    "radical_complex",
    "regular_in_codim1_check",
    "smash_free",
    "smith_normal_form",
    "solve_columns",
    "stanley_reisner_cohomology",
    "to_dot",
    "units_of_localization",
    "valuation_matrix",
]
