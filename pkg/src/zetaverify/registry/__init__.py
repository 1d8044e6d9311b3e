"""Catalog of identities and the machinery that checks them."""

from .catalog import (
    ASSEMBLIES,
    JET_TRANSITIONS,
    Assembly,
    ClosedFormCheck,
    ConjectureResidual,
    ExactFinite,
    Identity,
    JetTransition,
    NumericCVZ,
    NumericGeometric,
    NumericRichardson,
    Param,
    Side,
    catalog,
    lookup,
    strategy_name,
    transition,
)
from .closedform import Expr
from .verify import (
    FAIL,
    PASS,
    RESIDUAL,
    DomainError,
    JetCheck,
    JetPoleError,
    VerificationError,
    VerificationReport,
    assembly,
    check_assembly,
    jet_transition_check,
    linear_combination_check,
    sample_params,
    verify,
)

__all__ = [
    "Expr",
    "ASSEMBLIES",
    "JET_TRANSITIONS",
    "Assembly",
    "ClosedFormCheck",
    "ConjectureResidual",
    "ExactFinite",
    "Identity",
    "JetTransition",
    "NumericCVZ",
    "NumericGeometric",
    "NumericRichardson",
    "Param",
    "Side",
    "catalog",
    "lookup",
    "strategy_name",
    "transition",
    "FAIL",
    "PASS",
    "RESIDUAL",
    "DomainError",
    "JetCheck",
    "JetPoleError",
    "VerificationError",
    "VerificationReport",
    "assembly",
    "check_assembly",
    "jet_transition_check",
    "linear_combination_check",
    "sample_params",
    "verify",
]
