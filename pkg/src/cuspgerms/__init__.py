"""Exact holomorphy arithmetic for germs on monomial cusp curves.

The package answers, with certificates instead of floating point, questions
of the shape: which powers of a continuous germ on the cusp z1^p = z2^q are
restrictions of ambient holomorphic functions?  The same machinery glues
cusp models along a line and certifies that no single power works at every
site, computes per-region uniform power bounds, Weierstrass polynomials and
flatness orders for monomial data, and runs the dual-number (square-zero)
variant on the punctured line.
"""

from .curve import (
    CoveringData,
    CuspCurve,
    RadoGerm,
    RootBoundReport,
    WeakGenerationReport,
    WeierstrassPoly,
)
from .errors import (
    CuspGermsError,
    GermParseError,
    NoWitnessInRange,
    UndecidableAtTruncation,
    UnsupportedEssentialProduct,
)
from .germ import (
    CERTAINLY_NO,
    CERTAINLY_YES,
    Decision,
    GaussianRational,
    LaurentGerm,
    aggregate_decisions,
    parse_germ,
    unknown,
)
from .nagata import DualSection, LaurentObject, identity_section, nagata_mul, nagata_pow
from .semigroup import NumericalSemigroup
from .surgery import (
    GlobalSection,
    PowerCheckReport,
    Site,
    SurgeryCurve,
    check_section_power,
    make_global_rado,
    n_omega,
    no_global_power_witness,
    validate_star,
)

__all__ = [
    "CERTAINLY_NO",
    "CERTAINLY_YES",
    "CoveringData",
    "CuspCurve",
    "CuspGermsError",
    "Decision",
    "DualSection",
    "GaussianRational",
    "GermParseError",
    "GlobalSection",
    "LaurentGerm",
    "LaurentObject",
    "NoWitnessInRange",
    "NumericalSemigroup",
    "PowerCheckReport",
    "RadoGerm",
    "RootBoundReport",
    "Site",
    "SurgeryCurve",
    "UndecidableAtTruncation",
    "UnsupportedEssentialProduct",
    "WeakGenerationReport",
    "WeierstrassPoly",
    "aggregate_decisions",
    "check_section_power",
    "identity_section",
    "make_global_rado",
    "n_omega",
    "nagata_mul",
    "nagata_pow",
    "no_global_power_witness",
    "parse_germ",
    "unknown",
    "validate_star",
]

__version__ = "0.1.0"
