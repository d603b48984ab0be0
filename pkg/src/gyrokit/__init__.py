"""gyrokit: finite gyrogroups as Cayley tables.

Axiom verification, subgyrogroups and cosets, quotients and normality,
commutator subgyrogroups, nuclei and the radical via the left multiplication
group, prime-index normality criteria, and an exhaustive small-order search.
"""

from .core import (
    AxiomError,
    AxiomReport,
    GyroTable,
    InternalConsistencyError,
    MalformedTableError,
    Perm,
    ResourceCapError,
    Violation,
    direct_product,
    verify_axioms,
)

__all__ = [
    "AxiomError",
    "AxiomReport",
    "GyroTable",
    "InternalConsistencyError",
    "MalformedTableError",
    "Perm",
    "ResourceCapError",
    "Violation",
    "direct_product",
    "verify_axioms",
]
