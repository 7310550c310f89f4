"""Filtrations of monomial ideals and their b-divisors, in exact arithmetic."""
from .bdivisors import (
    Boundedness,
    Comparison,
    ConvexVertexSet,
    Extracted,
    Fan2D,
    FanPL,
    FromFiltration,
    Sampled,
    Scaled,
    ToricBDivisor,
    boundedness_constants,
    compare,
    evaluate,
    extract_filtration,
    is_cartier_on,
    maximal_ideal_divisor,
    vanishing_order,
    z_of_filtration,
    z_of_ideal,
)
from .correspondence import (
    CheckReport,
    b_divisoriality,
    check_continuity,
    check_extraction_inequality,
    check_injectivity,
    check_saturated_norm,
    check_saturated_roundtrip,
    main_inequality,
)
from .errors import ToricError
from .filtrations import (
    AxiomReport,
    Filtration,
    IdealPower,
    Intersect,
    RegionFiltration,
    Scale,
    ValuationFiltration,
    asymptotic_region,
    asymptotic_value,
    axioms_check,
    ideal_at,
    is_saturated,
    linear_boundedness,
    norm_value,
    saturate,
)
from .geometry import INFINITY, Region, enumerate_minimal_lattice_points, lp_minimize, region_membership
from .monomial import MonomialIdeal, Polynomial, ideal_membership, is_m_primary, minimal_generators, newton_region
from .valuations import Center, WeightVector, center, izumi_constants, value_of_ideal, value_of_monomial, value_of_polynomial

__version__ = "0.1.0"
