"""Exact-arithmetic census of symplectic hypergeometric pairs.

The package enumerates qualified pairs of cyclotomic-product polynomials,
builds the companion-matrix generators and the invariant symplectic form,
searches for witness words certifying arithmeticity, and verifies full
certificates, all over the integers and rationals.
"""

__version__ = "0.1.0"

from .certify import CertificateReport, verify_table, verify_witness
from .cyclotomic import (
    CycloFactorization,
    NotCyclotomicProduct,
    cyclotomic_poly,
    factorization_from_parameters,
    factorization_from_poly,
    parse_parameters,
)
from .hgroup import (
    GeneratorPair,
    InvariantFormError,
    SymplecticForm,
    build_generators,
    invariant_symplectic_form,
    transvection_vector,
)
from .pairs import (
    DEFAULT_CONVENTION,
    NotQualifiedError,
    PairClassification,
    QualifiedPair,
    canonical_representative,
    enumerate_qualified_pairs,
    initial_classification,
    is_qualified,
    make_pair,
)
from .poly import IntPoly
from .report import ReproductionReport, build_report
from .search import (
    NodeBudgetExceeded,
    SearchConfig,
    SearchOutcome,
    gcd_obstruction,
    reference_search,
    search_witness,
)
from .words import Word, WordSyntaxError, evaluate_word

__all__ = [
    "CertificateReport",
    "CycloFactorization",
    "DEFAULT_CONVENTION",
    "GeneratorPair",
    "IntPoly",
    "InvariantFormError",
    "NodeBudgetExceeded",
    "NotCyclotomicProduct",
    "NotQualifiedError",
    "PairClassification",
    "QualifiedPair",
    "ReproductionReport",
    "SearchConfig",
    "SearchOutcome",
    "SymplecticForm",
    "Word",
    "WordSyntaxError",
    "build_generators",
    "build_report",
    "canonical_representative",
    "cyclotomic_poly",
    "enumerate_qualified_pairs",
    "evaluate_word",
    "factorization_from_parameters",
    "factorization_from_poly",
    "gcd_obstruction",
    "initial_classification",
    "invariant_symplectic_form",
    "is_qualified",
    "make_pair",
    "parse_parameters",
    "reference_search",
    "search_witness",
    "transvection_vector",
    "verify_table",
    "verify_witness",
    "__version__",
]
