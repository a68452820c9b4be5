"""Finite idempotent semirings, valuations and integrality."""

from ._charone import (
    InvalidSemiring,
    ParseError,
    Semiring,
    bundled_corpus,
    congruences,
    contract,
    contraction_lemmas,
    extend_valuation,
    is_admissible,
    is_extensible,
    is_integral,
    is_quasiintegral,
    quasiintegral_closure,
    reduction_kernel,
    validate,
    valuation_orders,
)

__all__ = [
    "InvalidSemiring",
    "ParseError",
    "Semiring",
    "bundled_corpus",
    "congruences",
    "contract",
    "contraction_lemmas",
    "extend_valuation",
    "is_admissible",
    "is_extensible",
    "is_integral",
    "is_quasiintegral",
    "quasiintegral_closure",
    "reduction_kernel",
    "validate",
    "valuation_orders",
]
