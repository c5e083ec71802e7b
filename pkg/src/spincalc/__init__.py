"""Exact invariants of surface bundles and Seifert fibered homology spheres.

The package computes Arf invariants of quadratic forms over F2, Bernoulli
denominators and divisibility bounds for kappa classes, closed-form
characteristic classes of low-genus universal families, and e-invariants of
flat bundles over Seifert fibered integral homology spheres, all in exact
arithmetic.
"""

from .errors import (
    CentralBehaviorError,
    DegeneratePairingError,
    DimensionMismatchError,
    DomainError,
    EnumerationCapError,
    InvalidFormError,
    InvalidSeifertDataError,
    MultiplicityError,
    SpincalcError,
    TorsionBoundError,
    WitnessSearchError,
)
from .exact_arith import (
    DivisibilityBound,
    ModZ,
    bernoulli_paper,
    bernoulli_quotient,
    divisor_oriented,
    divisor_spin,
    todd_coefficients,
    von_staudt_den,
    von_staudt_factorization,
)
from .f2_forms import (
    ArfValue,
    QuadraticForm,
    arf_basis,
    arf_gauss,
    count_by_arf,
    count_zeros,
    direct_sum,
    enumerate_forms,
    forms_isomorphic,
    normalize,
    random_symplectic,
    standard_gram,
    symplectic_basis,
)
from .char_classes import (
    RiemannRochDim,
    cokernel_dim,
    hp_infinity_kappa,
    lambda_kappa_difference,
    proj_bundle_kappa,
    riemann_roch_dim,
    serre_duality_check,
    sphere_kappa,
    sphere_kappa_in_quotient,
    sphere_lambda,
    torus_kappa,
    torus_lambda,
)
from .polynomials import IntPolynomial, QuotientedPolynomial
from .seifert import (
    EigenvalueProfile,
    FixedPointData,
    IcosahedralResult,
    RepSpec,
    SeifertData,
    e_general,
    e_simple,
    einvariant_document,
    icosahedral_example,
    is_integral_homology_sphere,
    multiplicity_solve,
    order_in_pi3,
    presentation,
    regular_increment,
    seifert_check_document,
    stabilized_e,
)

__version__ = "0.1.0"

__all__ = [
    "ArfValue",
    "CentralBehaviorError",
    "DegeneratePairingError",
    "DimensionMismatchError",
    "DivisibilityBound",
    "DomainError",
    "EigenvalueProfile",
    "EnumerationCapError",
    "FixedPointData",
    "IcosahedralResult",
    "IntPolynomial",
    "InvalidFormError",
    "InvalidSeifertDataError",
    "ModZ",
    "MultiplicityError",
    "QuadraticForm",
    "QuotientedPolynomial",
    "RepSpec",
    "RiemannRochDim",
    "SeifertData",
    "SpincalcError",
    "TorsionBoundError",
    "WitnessSearchError",
    "arf_basis",
    "arf_gauss",
    "bernoulli_paper",
    "bernoulli_quotient",
    "cokernel_dim",
    "count_by_arf",
    "count_zeros",
    "direct_sum",
    "divisor_oriented",
    "divisor_spin",
    "e_general",
    "e_simple",
    "einvariant_document",
    "enumerate_forms",
    "forms_isomorphic",
    "hp_infinity_kappa",
    "icosahedral_example",
    "is_integral_homology_sphere",
    "lambda_kappa_difference",
    "multiplicity_solve",
    "normalize",
    "order_in_pi3",
    "presentation",
    "proj_bundle_kappa",
    "random_symplectic",
    "regular_increment",
    "riemann_roch_dim",
    "seifert_check_document",
    "serre_duality_check",
    "sphere_kappa",
    "sphere_kappa_in_quotient",
    "sphere_lambda",
    "stabilized_e",
    "standard_gram",
    "symplectic_basis",
    "todd_coefficients",
    "torus_kappa",
    "torus_lambda",
    "von_staudt_den",
    "von_staudt_factorization",
]
