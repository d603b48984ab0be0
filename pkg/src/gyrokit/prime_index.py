"""Prime-index subgyrogroups: equivalent multiple-membership conditions,
coset ladders, the smallest-prime precondition, and normality criteria.

For a subgyrogroup H of prime index p, three conditions are equivalent:
p.a lands in H for every outside element; some multiple n.a with no prime
divisor below p lands in H; and none of a, 2a, ..., (p-1)a lands in H.
When p is additionally the smallest prime dividing the order, normality of
H is equivalent to the existence of an outside element y whose coset ladder
i.y + H is invariant under every gyration; index 2 plus gyration invariance
of H itself already forces normality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import GyroTable, InternalConsistencyError
from .substructure import (
    CosetFamily,
    _require_subgyrogroup,
    left_coset,
    left_cosets,
)
from .normality import is_normal


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


def least_prime_factor(m: int) -> int:
    if m < 2:
        raise ValueError("need m >= 2")
    d = 2
    while d * d <= m:
        if m % d == 0:
            return d
        d += 1
    return m


def _prime_index_setup(g: GyroTable, subset) -> tuple[frozenset, int]:
    h = _require_subgyrogroup(g, subset)
    p = len(left_cosets(g, h).cosets)
    if not is_prime(p):
        raise ValueError(f"index {p} is not prime")
    return h, p


def check_condition_p(g: GyroTable, subset) -> bool:
    """p.a in H for every a outside H, p the (prime) index."""
    h, p = _prime_index_setup(g, subset)
    return all(g.int_multiple(p, a) in h for a in g.elements() if a not in h)


def check_condition_n(g: GyroTable, subset) -> tuple[bool, dict[int, int]]:
    """For each outside a, the least n in 1..|G| with n.a in H and no prime
    divisor below p; returns (all found, witness map)."""
    h, p = _prime_index_setup(g, subset)
    witnesses: dict[int, int] = {}
    for a in g.elements():
        if a in h:
            continue
        for n in range(1, g.order + 1):
            if g.int_multiple(n, a) not in h:
                continue
            if any(is_prime(d) and n % d == 0 for d in range(2, p)):
                continue
            witnesses[a] = n
            break
        else:
            return False, witnesses
    return True, witnesses


def check_condition_multiples(g: GyroTable, subset) -> bool:
    """a, 2a, ..., (p-1)a all outside H for every a outside H."""
    h, p = _prime_index_setup(g, subset)
    return all(
        g.int_multiple(i, a) not in h
        for a in g.elements()
        if a not in h
        for i in range(1, p)
    )


@dataclass(frozen=True)
class EquivalenceReport:
    index: int
    condition_p: bool
    condition_n: bool
    condition_multiples: bool
    witnesses: tuple[tuple[int, int], ...]

    @property
    def all_equal(self) -> bool:
        return self.condition_p == self.condition_n == self.condition_multiples

    @property
    def theorem_violation(self) -> bool:
        # the three conditions are provably equivalent at prime index, so a
        # disagreement can only mean an implementation bug
        return not self.all_equal


def equivalence_report(g: GyroTable, subset) -> EquivalenceReport:
    """Evaluate all three conditions and flag any disagreement."""
    _, p = _prime_index_setup(g, subset)
    cond_p = check_condition_p(g, subset)
    cond_n, witnesses = check_condition_n(g, subset)
    cond_m = check_condition_multiples(g, subset)
    return EquivalenceReport(
        p, cond_p, cond_n, cond_m, tuple(sorted(witnesses.items()))
    )


def coset_ladder(g: GyroTable, subset, a: int) -> CosetFamily:
    """The cosets 0+H, a+H, ..., (p-1)a+H, verified distinct and exhaustive."""
    h, p = _prime_index_setup(g, subset)
    if a in h:
        raise ValueError(f"{a} lies in the subgyrogroup")
    report = equivalence_report(g, subset)
    if not (report.condition_p or report.condition_n or report.condition_multiples):
        raise ValueError("multiple-membership conditions fail; no ladder")
    ladder = [left_coset(g, h, g.int_multiple(i, a)) for i in range(p)]
    if len(set(ladder)) != p:
        raise InternalConsistencyError("ladder cosets are not pairwise distinct")
    if set().union(*ladder) != set(g.elements()):
        raise InternalConsistencyError("ladder does not cover the carrier")
    family = left_cosets(g, h)
    if set(ladder) != set(frozenset(c) for c in family.cosets):
        raise InternalConsistencyError("ladder disagrees with the coset family")
    return family


def smallest_prime_precondition(g: GyroTable, subset) -> bool:
    """Whether the index equals the least prime factor of the order; when it
    does, the divisor-restricted multiple condition must hold."""
    _, p = _prime_index_setup(g, subset)
    holds = g.order > 1 and p == least_prime_factor(g.order)
    if holds:
        ok, _ = check_condition_n(g, subset)
        if not ok:
            raise InternalConsistencyError(
                "smallest-prime index but the multiple condition fails"
            )
    return holds


def gyration_invariant_witnesses(g: GyroTable, subset) -> list[int]:
    """All outside elements y whose ladder cosets i.y + H are invariant
    under every gyration (recorded as data, least first)."""
    h, p = _prime_index_setup(g, subset)
    gyrations = [g.gyr(a, b) for a in g.elements() for b in g.elements()]
    out = []
    for y in g.elements():
        if y in h:
            continue
        cosets = [left_coset(g, h, g.int_multiple(i, y)) for i in range(p)]
        if all(
            frozenset(gy(x) for x in coset) <= coset
            for coset in cosets
            for gy in gyrations
        ):
            out.append(y)
    return out


def normality_by_gyration_invariance(g: GyroTable, subset) -> tuple[bool, int | None]:
    """Decide normality through ladder invariance under gyrations.

    Requires the index to be the smallest prime dividing the order; the
    answer is asserted against the quotient-based normality decision."""
    _, p = _prime_index_setup(g, subset)
    if g.order == 1 or p != least_prime_factor(g.order):
        raise ValueError(
            f"index {p} is not the smallest prime factor of {g.order}; criterion not applicable"
        )
    witnesses = gyration_invariant_witnesses(g, subset)
    found = bool(witnesses)
    witness = witnesses[0] if found else None
    if found != is_normal(g, subset):
        raise InternalConsistencyError(
            "ladder-invariance answer disagrees with the quotient decision"
        )
    return found, witness


def index_two_normality(g: GyroTable, subset) -> bool:
    """At index 2, gyration invariance of H alone forces normality.

    Returns whether the invariance hypothesis holds; when it does, the
    normality conclusion is asserted."""
    h, p = _prime_index_setup(g, subset)
    if p != 2:
        raise ValueError(f"index is {p}, not 2")
    invariant = all(
        frozenset(g.gyr(a, b)(x) for x in h) <= h
        for a in g.elements()
        for b in g.elements()
    )
    if invariant and not is_normal(g, subset):
        raise InternalConsistencyError("index-2 gyration invariance without normality")
    return invariant
