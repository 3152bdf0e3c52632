"""Regularized multinomial coefficients on the signed Pascal lattice,
bilateral hypergeometric series, and numeric verification of the
bilateral binomial/trinomial/multinomial identities."""

from .gammakernel import (
    DivergentTermError,
    HLimitValue,
    PoleError,
    SignedLogValue,
    gamma_leading,
    log_gamma_signed,
    nearest_integer,
    pochhammer,
    principal_power,
)
from .lattice import (
    DIVERGENT,
    FINITE,
    NEGATIVE_PYRAMID,
    NONNEGATIVE,
    OFF_LATTICE,
    ZERO_BY_POLES,
    ZERO_SET,
    DivergentValueError,
    LayerTable,
    RegionTag,
    RegularizedValue,
    ResourceLimitError,
    classify_region,
    generate_layer,
    multinomial_coefficient,
    point_value,
    recurrence_residual,
    region_component_count,
    region_map,
)
from .bilateral import (
    CONVERGED,
    FAIL,
    INCONCLUSIVE,
    NOT_CONVERGING,
    PASS,
    SLOWLY_CONVERGING,
    H1Params,
    TruncationReport,
    VerificationReport,
    bilateral_binomial_rhs,
    convergence_exponent,
    evaluate_h1,
    generalized_binomial,
    h1_term,
    verify_bilateral_binomial,
)
from .expansion import (
    ModulusChainError,
    ModulusChainReport,
    MultiTruncationReport,
    ProbeReport,
    TheoremInstance,
    evaluate_multinomial,
    general_term,
    modulus_chain_residuals,
    nested_reduction,
    nested_reduction_report,
    symmetric_form,
    unit_sum_probe,
)
from .summation import CompensatedSum

__version__ = "0.1.0"

__all__ = [
    "CompensatedSum",
    "CONVERGED",
    "DIVERGENT",
    "DivergentTermError",
    "DivergentValueError",
    "FAIL",
    "FINITE",
    "H1Params",
    "HLimitValue",
    "INCONCLUSIVE",
    "LayerTable",
    "ModulusChainError",
    "ModulusChainReport",
    "MultiTruncationReport",
    "NEGATIVE_PYRAMID",
    "NONNEGATIVE",
    "NOT_CONVERGING",
    "OFF_LATTICE",
    "PASS",
    "PoleError",
    "ProbeReport",
    "RegionTag",
    "RegularizedValue",
    "ResourceLimitError",
    "SLOWLY_CONVERGING",
    "SignedLogValue",
    "TheoremInstance",
    "TruncationReport",
    "VerificationReport",
    "ZERO_BY_POLES",
    "ZERO_SET",
    "bilateral_binomial_rhs",
    "classify_region",
    "convergence_exponent",
    "evaluate_h1",
    "evaluate_multinomial",
    "gamma_leading",
    "general_term",
    "generalized_binomial",
    "generate_layer",
    "h1_term",
    "log_gamma_signed",
    "modulus_chain_residuals",
    "multinomial_coefficient",
    "nearest_integer",
    "nested_reduction",
    "nested_reduction_report",
    "point_value",
    "pochhammer",
    "principal_power",
    "recurrence_residual",
    "region_component_count",
    "region_map",
    "symmetric_form",
    "unit_sum_probe",
    "verify_bilateral_binomial",
]
