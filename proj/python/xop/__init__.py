"""Exact exceptional Charlier, Meixner, Hermite and Laguerre polynomials."""

from ._core import (
    DomainError,
    NotFoundError,
    ParameterError,
    UnsupportedFamilyError,
    cli,
    eigenvalue,
    exceptional,
    minimal_order,
    paper_cases,
    recurrence,
    verify_duality,
    verify_paper,
)

__all__ = [
    "DomainError",
    "NotFoundError",
    "ParameterError",
    "UnsupportedFamilyError",
    "cli",
    "eigenvalue",
    "exceptional",
    "minimal_order",
    "paper_cases",
    "recurrence",
    "verify_duality",
    "verify_paper",
]
