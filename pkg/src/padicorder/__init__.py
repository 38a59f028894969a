"""Exact p-adic arithmetic, Kronecker-style witness certificates,
Haar-measure integration on polydiscs, and projective-order
certification over PGL.
"""

from .errors import (
    DepthZero,
    DivisionByZero,
    MaxPrecisionExceeded,
    NonIntegralDensity,
    NonUnitJacobian,
    NotSquarefree,
    PadicOrderError,
    ParseError,
    PrecisionExhausted,
    ZeroRoot,
)
from .padic import INF, PAdicApprox, PPower, padic_valuation, rational_valuation
from .intpoly import (
    IntPolynomial,
    PROVEN,
    UNKNOWN,
    check_irreducible,
    cyclotomic,
    euler_phi,
    is_algebraic_integer,
    is_squarefree,
    poly_gcd,
    root_of_unity_order,
)
from .intervals import RationalInterval, kth_root_enclosure, p_power_enclosure
from .isolation import ComplexBox, isolate_roots
from .algnum import UNCHECKED, AlgebraicNumberSpec
from .places import (
    CONDITIONAL,
    SLOPE_CONVENTION,
    UNCONDITIONAL,
    NewtonPolygon,
    Place,
    RootOfUnity,
    Witness,
    WitnessCertificate,
    archimedean_witness,
    find_witness,
    newton_polygon,
    padic_witness,
    product_formula_check,
    verify_witness_certificate,
    witness_cert_from_doc,
    witness_result_to_doc,
)
from .haar import (
    Cylinder,
    MultiPoly,
    PolyDensity,
    PolyMap,
    change_of_variables_check,
    cylinder_measure,
    integrate,
    pushforward_cylinder_measure,
    scaling_law_check,
)
from .projaut import (
    OrderVerdict,
    ProjAutSpec,
    ShellSet,
    ball_measure,
    certify_diagonal,
    conjugation_operator,
    factor_out_cyclotomics,
    is_semisimple,
    linear_order,
    minimal_polynomial,
    projective_order,
    ratio_polynomial,
    sphere_measure,
    verify_shell_tiling,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraicNumberSpec",
    "ComplexBox",
    "CONDITIONAL",
    "Cylinder",
    "DepthZero",
    "DivisionByZero",
    "INF",
    "IntPolynomial",
    "MaxPrecisionExceeded",
    "MultiPoly",
    "NewtonPolygon",
    "NonIntegralDensity",
    "NonUnitJacobian",
    "NotSquarefree",
    "OrderVerdict",
    "PAdicApprox",
    "PPower",
    "PROVEN",
    "PadicOrderError",
    "ParseError",
    "Place",
    "PolyDensity",
    "PolyMap",
    "PrecisionExhausted",
    "ProjAutSpec",
    "RationalInterval",
    "RootOfUnity",
    "SLOPE_CONVENTION",
    "ShellSet",
    "UNCHECKED",
    "UNCONDITIONAL",
    "UNKNOWN",
    "Witness",
    "WitnessCertificate",
    "ZeroRoot",
    "archimedean_witness",
    "ball_measure",
    "certify_diagonal",
    "change_of_variables_check",
    "check_irreducible",
    "conjugation_operator",
    "cyclotomic",
    "cylinder_measure",
    "euler_phi",
    "factor_out_cyclotomics",
    "find_witness",
    "integrate",
    "is_algebraic_integer",
    "is_semisimple",
    "is_squarefree",
    "isolate_roots",
    "kth_root_enclosure",
    "linear_order",
    "minimal_polynomial",
    "newton_polygon",
    "p_power_enclosure",
    "padic_valuation",
    "padic_witness",
    "poly_gcd",
    "product_formula_check",
    "projective_order",
    "pushforward_cylinder_measure",
    "ratio_polynomial",
    "rational_valuation",
    "root_of_unity_order",
    "scaling_law_check",
    "sphere_measure",
    "verify_shell_tiling",
    "verify_witness_certificate",
    "witness_cert_from_doc",
    "witness_result_to_doc",
]
