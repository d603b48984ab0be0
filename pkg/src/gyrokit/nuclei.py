"""Nuclei, the left multiplication group, twisted subgroups, and the radical.

Left translations L_a embed the gyrogroup into the symmetric group on its
carrier; lmlt(G) is the group they generate, materialized as an explicit
element set by breadth-first closure.  Within it live three distinguished
sets:

  * L(G) itself, a twisted subgroup (1 in X, inverse-closed, xyx-closed);
  * the intersection of all translated copies L_a L(G), which coincides
    with the translations of the left nucleus;
  * the set of forward translation products whose reversed product is the
    identity, computed by closing pairs (L_a, L_a^-1) under componentwise
    composition: a word maps to (forward product, inverse of the reversed
    product), word concatenation is exactly componentwise composition, so
    the pairs with identity second coordinate are precisely the forward
    products of words whose reversal collapses.

The radical is the preimage of that last set under a -> L_a.  Nuclei are
computed twice, from the associativity definition and from the gyration
characterization, and the two must agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import GyroTable, InternalConsistencyError, Perm, ResourceCapError
from .substructure import SubSet, is_L_subgyrogroup, is_subgroup

DEFAULT_PERM_CAP = 10**6
DEFAULT_PAIR_CAP = 10**6
DEFAULT_ORACLE_WORD_LEN = 6


@dataclass(frozen=True)
class PermGroup:
    """An explicit finite permutation group: generators plus full closure."""

    degree: int
    generators: tuple[Perm, ...]
    elements: frozenset[Perm]
    cap: int

    @classmethod
    def generated(cls, generators, cap: int = DEFAULT_PERM_CAP) -> "PermGroup":
        gens = tuple(generators)
        if not gens:
            raise ValueError("need at least one generator")
        degree = gens[0].degree
        els = set(gens)
        els.add(Perm.identity(degree))
        frontier = list(els)
        while frontier:
            new = []
            for g in gens:
                for x in frontier:
                    y = g * x
                    if y not in els:
                        els.add(y)
                        new.append(y)
                        if len(els) > cap:
                            raise ResourceCapError(
                                "perm_cap",
                                f"closure exceeded {cap} elements ({len(els)} so far)",
                            )
            frontier = new
        return cls(degree, gens, frozenset(els), cap)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Perm) -> bool:
        return p in self.elements


@dataclass(frozen=True)
class TwistedReport:
    is_twisted: bool
    violations: tuple  # (x, y, kind) with kind in {identity, inverse, xyx}


def left_translations(g: GyroTable) -> list[Perm]:
    """The rows of the table as permutations; index 0 gives the identity."""
    return [g.left_translation(a) for a in g.elements()]


def lmlt(g: GyroTable, cap: int = DEFAULT_PERM_CAP) -> PermGroup:
    """The group generated by all left translations."""
    return PermGroup.generated(left_translations(g), cap=cap)


def is_twisted_subgroup(group: PermGroup, subset) -> TwistedReport:
    """Check identity membership, inverse closure, and xyx closure."""
    xs = frozenset(subset)
    if not xs <= group.elements:
        raise ValueError("subset is not contained in the group")
    violations = []
    if Perm.identity(group.degree) not in xs:
        violations.append((None, None, "identity"))
    for x in sorted(xs):
        if x.inverse() not in xs:
            violations.append((x, None, "inverse"))
    for x in sorted(xs):
        for y in sorted(xs):
            if x * y * x not in xs:
                violations.append((x, y, "xyx"))
    return TwistedReport(not violations, tuple(violations))


def _normal_under_generators(group: PermGroup, subset: frozenset) -> bool:
    return all(
        g * x * g.inverse() in subset for g in group.generators for x in subset
    )


def lg_sharp(g: GyroTable, cap: int = DEFAULT_PERM_CAP) -> frozenset:
    """Intersection of the translated copies L_a L(G) inside lmlt(G).

    Asserted to coincide with the translations of the left nucleus and to
    be a normal subgroup of lmlt(G)."""
    translations = left_translations(g)
    lg = frozenset(translations)
    result = lg  # a = 0 term
    for a in g.elements():
        la = translations[a]
        result &= frozenset(la * lx for lx in lg)
    if not result <= lg:
        raise InternalConsistencyError("translated-copy intersection left L(G)")
    nucleus_translations = frozenset(
        translations[a] for a in left_nucleus(g).members
    )
    if result != nucleus_translations:
        raise InternalConsistencyError(
            "translated-copy intersection differs from nucleus translations"
        )
    group = lmlt(g, cap=cap)
    if not _closed_subgroup(result):
        raise InternalConsistencyError("translated-copy intersection is not a subgroup")
    if not _normal_under_generators(group, result):
        raise InternalConsistencyError("translated-copy intersection is not normal")
    return result


def _closed_subgroup(perms: frozenset) -> bool:
    if not perms:
        return False
    return all(p * q in perms for p in perms for q in perms) and all(
        p.inverse() in perms for p in perms
    )


def lg_prime(g: GyroTable, cap: int = DEFAULT_PAIR_CAP) -> frozenset:
    """Forward products of translation words whose reversed product is the
    identity, via the doubled closure of {(L_a, L_a^-1)}."""
    translations = left_translations(g)
    seeds = [(la, la.inverse()) for la in translations]
    pairs = set(seeds)
    frontier = list(pairs)
    while frontier:
        new = []
        for f1, r1 in seeds:
            for f2, r2 in frontier:
                pair = (f1 * f2, r1 * r2)
                if pair not in pairs:
                    pairs.add(pair)
                    new.append(pair)
                    if len(pairs) > cap:
                        raise ResourceCapError(
                            "pair_cap", f"doubled closure exceeded {cap} pairs"
                        )
        frontier = new
    ident = Perm.identity(g.order)
    result = frozenset(f for f, r in pairs if r == ident)
    if not _closed_subgroup(result):
        raise InternalConsistencyError("reversal-kernel set is not a subgroup")
    sharp = lg_sharp(g)
    if not result <= sharp:
        raise InternalConsistencyError(
            "reversal-kernel set is not inside the translated-copy intersection"
        )
    if not _normal_under_generators(lmlt(g), result):
        raise InternalConsistencyError("reversal-kernel set is not normal")
    return result


def lg_prime_word_oracle(g: GyroTable, max_len: int = DEFAULT_ORACLE_WORD_LEN) -> frozenset:
    """Independent bounded oracle: enumerate all translation words up to the
    given length and keep forward products whose reversed product is the
    identity.  Used to validate the doubled-closure construction."""
    translations = left_translations(g)
    ident = Perm.identity(g.order)
    found = set()
    frontier = [(la, la) for la in translations]  # (forward, reversed)
    for f, r in frontier:
        if r == ident:
            found.add(f)
    for _ in range(max_len - 1):
        new = []
        for f, r in frontier:
            for la in translations:
                nf = f * la  # append letter: forward grows on the right
                nr = la * r  # reversed product grows on the left
                new.append((nf, nr))
                if nr == ident:
                    found.add(nf)
        frontier = new
        # dedupe pairs to keep the frontier from exploding
        frontier = list(dict.fromkeys(frontier))
    return frozenset(found)


def _nucleus_by_associativity(g: GyroTable, position: str) -> frozenset:
    t = g.table
    els = range(g.order)
    if position == "left":
        return frozenset(
            a for a in els if all(t[a][t[b][c]] == t[t[a][b]][c] for b in els for c in els)
        )
    if position == "middle":
        return frozenset(
            b for b in els if all(t[a][t[b][c]] == t[t[a][b]][c] for a in els for c in els)
        )
    return frozenset(
        c for c in els if all(t[a][t[b][c]] == t[t[a][b]][c] for a in els for b in els)
    )


def _nucleus_by_gyrations(g: GyroTable, position: str) -> frozenset:
    els = range(g.order)
    if position == "left":
        return frozenset(a for a in els if all(g.gyr(a, b).is_identity() for b in els))
    if position == "middle":
        return frozenset(b for b in els if all(g.gyr(a, b).is_identity() for a in els))
    return frozenset(
        c for c in els if all(g.gyr(a, b)(c) == c for a in els for b in els)
    )


def _nucleus(g: GyroTable, position: str) -> SubSet:
    by_assoc = _nucleus_by_associativity(g, position)
    by_gyr = _nucleus_by_gyrations(g, position)
    if by_assoc != by_gyr:
        raise InternalConsistencyError(
            f"{position} nucleus: associativity and gyration forms disagree "
            f"({sorted(by_assoc)} vs {sorted(by_gyr)})"
        )
    nucleus = SubSet.of(g, by_assoc)
    if not is_L_subgyrogroup(g, nucleus) or not is_subgroup(g, nucleus):
        raise InternalConsistencyError(f"{position} nucleus is not an L-subgroup")
    return nucleus


def left_nucleus(g: GyroTable) -> SubSet:
    return _nucleus(g, "left")


def middle_nucleus(g: GyroTable) -> SubSet:
    nucleus = _nucleus(g, "middle")
    if nucleus.members != left_nucleus(g).members:
        raise InternalConsistencyError("left and middle nuclei differ")
    return nucleus


def right_nucleus(g: GyroTable) -> SubSet:
    return _nucleus(g, "right")


def radical(g: GyroTable, cap: int = DEFAULT_PAIR_CAP) -> SubSet:
    """Elements whose translation lies in the reversal kernel of L(G).

    Contained in the left nucleus, a subgroup, and normal; all asserted."""
    from .normality import is_normal

    core_set = lg_prime(g, cap=cap)
    members = [a for a in g.elements() if g.left_translation(a) in core_set]
    rad = SubSet.of(g, members)
    if not rad.as_set() <= left_nucleus(g).as_set():
        raise InternalConsistencyError("radical escapes the left nucleus")
    if not is_subgroup(g, rad):
        raise InternalConsistencyError("radical is not a subgroup")
    if not is_normal(g, rad):
        raise InternalConsistencyError("radical is not normal")
    return rad
