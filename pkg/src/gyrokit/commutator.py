"""Commutators and the commutator subgyrogroup.

The commutator [a, b] = -(a+b) + gyr[a, b](b+a) vanishes exactly when the
pair gyrocommutes.  The subgyrogroup G' it generates is invariant under
every automorphism and forms a group under the ambient operation; whether
G' is always normal is unsettled, so ``hunt_commutator_normality`` records
the answer per instance instead of assuming one.  The normal closure of G'
is the least normal subgyrogroup with gyrocommutative quotient and carries
the usual universal property, realized here by explicit table checks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import GyroTable, InternalConsistencyError
from .substructure import (
    DEFAULT_LATTICE_CAP,
    SubSet,
    generate,
    is_L_subgyrogroup,
    is_subgroup,
)
from .normality import Hom, check_hom, is_normal, normal_closure, try_quotient


def commutator(g: GyroTable, a: int, b: int) -> int:
    """[a, b] = -(a+b) + gyr[a, b](b+a)."""
    t = g.table
    return t[g.neg(t[a][b])][g.gyr(a, b)(t[b][a])]


def commutator_subgyrogroup(g: GyroTable) -> SubSet:
    """The subgyrogroup generated by all commutators.

    It is always gyration-invariant (an L-subgyrogroup) and associative
    (a subgroup); both are asserted, as is the equivalence of triviality
    with gyrocommutativity."""
    comms = {commutator(g, a, b) for a in g.elements() for b in g.elements()}
    derived = generate(g, comms)
    if not is_L_subgyrogroup(g, derived):
        raise InternalConsistencyError("commutator subgyrogroup is not gyration invariant")
    if not is_subgroup(g, derived):
        raise InternalConsistencyError("commutator subgyrogroup is not a subgroup")
    if (derived.members == (0,)) != g.is_gyrocommutative():
        raise InternalConsistencyError(
            "trivial commutators must coincide with gyrocommutativity"
        )
    return derived


def nc_commutator(g: GyroTable, cap: int = DEFAULT_LATTICE_CAP) -> SubSet:
    """Normal closure of the commutator subgyrogroup.

    The quotient by it must be gyrocommutative and it must itself be a
    subgroup; both are asserted here.  Its minimality over the whole normal
    lattice is a separate sweep-level check."""
    derived = commutator_subgyrogroup(g)
    closure = normal_closure(g, derived.members, cap=cap)
    q = try_quotient(g, closure)
    if not q.table.is_gyrocommutative():
        raise InternalConsistencyError("quotient by the closure is not gyrocommutative")
    if not is_subgroup(g, closure):
        raise InternalConsistencyError("closure of the commutators is not a subgroup")
    if (closure.members == (0,)) != g.is_gyrocommutative():
        raise InternalConsistencyError(
            "trivial closure must coincide with gyrocommutativity"
        )
    return closure


def check_universal_property(g: GyroTable, phi: Hom) -> Hom:
    """Factor a homomorphism into a gyrocommutative target through the
    quotient by the closure of the commutators.

    Returns the induced map on the quotient table.  Uniqueness is verified
    by exhausting, per coset, every codomain value consistent with the
    factoring equation."""
    if phi.domain is not g and phi.domain != g:
        raise ValueError("homomorphism domain mismatch")
    if not phi.codomain.is_gyrocommutative():
        raise ValueError("codomain is not gyrocommutative")
    if not check_hom(phi):
        raise ValueError("not a homomorphism")

    closure = nc_commutator(g)
    if not closure.as_set() <= {a for a in g.elements() if phi.map[a] == 0}:
        raise InternalConsistencyError("closure not contained in the kernel")

    q = try_quotient(g, closure)
    k = q.table.order
    induced: list[int | None] = [None] * k
    for i in range(k):
        coset = q.cosets.cosets[i]
        candidates = [
            v
            for v in phi.codomain.elements()
            if all(phi.map[a] == v for a in coset)
        ]
        if len(candidates) != 1:
            raise InternalConsistencyError(
                f"coset {i} admits {len(candidates)} factoring values, expected exactly 1"
            )
        induced[i] = candidates[0]
    factored = Hom(q.table, phi.codomain, tuple(induced))
    if not check_hom(factored):
        raise InternalConsistencyError("factored map is not a homomorphism")
    if any(factored.map[q.projection(a)] != phi.map[a] for a in g.elements()):
        raise InternalConsistencyError("factored map does not recover the original")
    return factored


@dataclass(frozen=True)
class HuntRecord:
    name: str
    order: int
    commutator_members: tuple[int, ...]
    commutators_normal: bool


def hunt_commutator_normality(named_tables) -> list[HuntRecord]:
    """Record, per instance, whether the commutator subgyrogroup is normal.

    A False entry would be a notable finding; no outcome is asserted."""
    records = []
    for name, table in named_tables:
        derived = commutator_subgyrogroup(table)
        records.append(
            HuntRecord(name, table.order, derived.members, is_normal(table, derived))
        )
    return records
