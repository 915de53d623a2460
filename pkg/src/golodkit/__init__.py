"""Exact ideal calculus and Golod-type homological checks over Q.

The package computes Groebner bases in positively weighted graded polynomial
rings, decides the strongly Golod containment test, manipulates monomial
ideals combinatorially, builds minimal free resolutions and Koszul homology,
and compares an actual bigraded Poincare series against its Serre-type upper
bound to classify ideals.
"""

from .calculus import (
    CorpusEntry,
    DerivativePairWitness,
    SandwichReport,
    StronglyGolodReport,
    SymbolicPowerResult,
    SymbolicPowerSpec,
    add_prime_power,
    builtin_corpus,
    check_colon_condition,
    derivative_ideal,
    maximal_ideal,
    power,
    sandwich_check,
    saturated_power,
    strongly_golod,
    symbolic_power,
    zariski_nagata_membership,
)
from .errors import (
    AlgebraError,
    ContainmentError,
    HomogeneityError,
    ImproperIdealError,
    ParseError,
    RingMismatchError,
    SaturationLimitError,
    ZeroColonError,
)
from .groebner import (
    Ideal,
    MonomialOrder,
    NormalForm,
    SaturationResult,
    colon,
    contains,
    intersect,
    module_syzygies,
    saturate,
    syzygies,
)
from .koszul import (
    HomologySummary,
    TrivialMultiplicationReport,
    derivative_cycle_check,
    koszul_homology,
    trivial_multiplication_check,
)
from .monomial import (
    Graph,
    MonomialIdeal,
    MonomialQuotientWitness,
    OddCycleReport,
    PrimaryDecomposition,
    cycle_graph,
    integral_closure,
    irreducible_decomposition,
    minimal_primary_components,
    minimal_primes,
    minimal_vertex_covers,
    odd_cycle_suite,
    path_graph,
    ring_for_vertices,
    squarefree_generated_ideal,
    squarefree_symbolic_power,
    strongly_golod_monomial,
    vertex_cover_ideal,
)
from .poincare import (
    BigradedSeries,
    GolodVerdict,
    actual_poincare,
    golod_verdict,
    serre_bound_series,
)
from .resolution import BettiTable, Resolution, betti_table, minimal_free_resolution
from .ring import GradingSpec, HomogeneityReport, Polynomial, parse_polynomial

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "BettiTable",
    "BigradedSeries",
    "ContainmentError",
    "CorpusEntry",
    "DerivativePairWitness",
    "GolodVerdict",
    "GradingSpec",
    "Graph",
    "HomogeneityError",
    "HomogeneityReport",
    "HomologySummary",
    "Ideal",
    "ImproperIdealError",
    "MonomialIdeal",
    "MonomialOrder",
    "MonomialQuotientWitness",
    "NormalForm",
    "OddCycleReport",
    "ParseError",
    "Polynomial",
    "PrimaryDecomposition",
    "Resolution",
    "RingMismatchError",
    "SandwichReport",
    "SaturationLimitError",
    "SaturationResult",
    "StronglyGolodReport",
    "SymbolicPowerResult",
    "SymbolicPowerSpec",
    "TrivialMultiplicationReport",
    "ZeroColonError",
    "actual_poincare",
    "add_prime_power",
    "betti_table",
    "builtin_corpus",
    "check_colon_condition",
    "colon",
    "contains",
    "cycle_graph",
    "derivative_cycle_check",
    "derivative_ideal",
    "golod_verdict",
    "integral_closure",
    "intersect",
    "irreducible_decomposition",
    "koszul_homology",
    "maximal_ideal",
    "minimal_free_resolution",
    "minimal_primary_components",
    "minimal_primes",
    "minimal_vertex_covers",
    "module_syzygies",
    "odd_cycle_suite",
    "parse_polynomial",
    "path_graph",
    "power",
    "ring_for_vertices",
    "sandwich_check",
    "saturate",
    "saturated_power",
    "serre_bound_series",
    "squarefree_generated_ideal",
    "squarefree_symbolic_power",
    "strongly_golod",
    "strongly_golod_monomial",
    "symbolic_power",
    "syzygies",
    "trivial_multiplication_check",
    "vertex_cover_ideal",
    "zariski_nagata_membership",
]
