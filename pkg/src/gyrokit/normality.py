"""Normality via quotient construction.

A subgyrogroup N is normal exactly when it is the kernel of a homomorphism.
``try_quotient`` decides this directly: it checks gyration invariance,
builds the left-coset partition, confirms the coset operation and the
induced gyrations are independent of representatives, and verifies the
induced table against the axioms.  Success yields the quotient together
with its projection, whose kernel is N by construction; each failure step
carries a witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import GyroTable, InternalConsistencyError, verify_axioms
from .substructure import (
    DEFAULT_LATTICE_CAP,
    CosetFamily,
    SubSet,
    _members,
    _require_subgyrogroup,
    enumerate_subgyrogroups,
    left_coset,
    left_cosets,
    right_coset,
    NotPartition,
)


@dataclass(frozen=True)
class Hom:
    """A candidate structure-preserving map between gyrogroup tables."""

    domain: GyroTable
    codomain: GyroTable
    map: tuple[int, ...]

    def __post_init__(self):
        if len(self.map) != self.domain.order:
            raise ValueError("map length must equal the domain order")
        for v in self.map:
            if not 0 <= v < self.codomain.order:
                raise ValueError(f"image {v} out of codomain range")

    def __call__(self, a: int) -> int:
        return self.map[a]


def check_hom(phi: Hom) -> bool:
    """True iff phi(a+b) = phi(a)+phi(b) for all pairs.

    When the map is a homomorphism it must also commute with gyrations,
    which is asserted as a sanity check."""
    g, k, f = phi.domain, phi.codomain, phi.map
    tg, tk = g.table, k.table
    for a in g.elements():
        fa = f[a]
        for b in g.elements():
            if f[tg[a][b]] != tk[fa][f[b]]:
                return False
    for a in g.elements():
        for b in g.elements():
            gy_g = g.gyr(a, b)
            gy_k = k.gyr(f[a], f[b])
            if any(f[gy_g(c)] != gy_k(f[c]) for c in g.elements()):
                raise InternalConsistencyError(
                    "homomorphism does not commute with gyrations"
                )
    return True


def kernel(phi: Hom) -> SubSet:
    """Preimage of 0; always a normal subgyrogroup (verified)."""
    if not check_hom(phi):
        raise ValueError("not a homomorphism")
    ker = SubSet.of(phi.domain, [a for a in phi.domain.elements() if phi.map[a] == 0])
    if not is_normal(phi.domain, ker):
        raise InternalConsistencyError("kernel failed the normality decision")
    return ker


def image(phi: Hom) -> SubSet:
    """The image set, a subgyrogroup of the codomain (verified)."""
    if not check_hom(phi):
        raise ValueError("not a homomorphism")
    img = SubSet.of(phi.codomain, set(phi.map))
    from .substructure import is_subgyrogroup

    if not is_subgyrogroup(phi.codomain, img):
        raise InternalConsistencyError("image is not a subgyrogroup")
    return img


class NotNormal(Exception):
    """Quotient construction failed; carries the first violated step."""

    def __init__(self, step: str, witness: tuple, message: str):
        super().__init__(f"{step}: {message} (witness {witness})")
        self.step = step
        self.witness = witness


@dataclass(frozen=True)
class Quotient:
    parent: GyroTable
    normal_members: tuple[int, ...]
    cosets: CosetFamily
    table: GyroTable
    projection: Hom


def try_quotient(g: GyroTable, subset) -> Quotient:
    """Build the quotient by N or raise NotNormal with a witness.

    Steps: gyration invariance of N, coset partition, representative
    independence of the coset operation, descent of gyrations, and the
    axiom check of the induced table.  On success N is exactly the kernel
    of the projection, so the decision is sound; any kernel passes all
    steps, so it is complete."""
    n_set = _require_subgyrogroup(g, subset)

    for a in g.elements():
        for b in g.elements():
            gy = g.gyr(a, b)
            if frozenset(gy(x) for x in n_set) != n_set:
                raise NotNormal(
                    "gyr-invariance", (a, b), "gyration does not fix the subgyrogroup"
                )

    try:
        family = left_cosets(g, n_set)
    except NotPartition as exc:
        raise NotNormal(
            "partition", (exc.coset_a, exc.coset_b), "left cosets do not partition"
        ) from exc

    ci = [0] * g.order
    for i, coset in enumerate(family.cosets):
        for x in coset:
            ci[x] = i
    reps = family.representatives
    k = len(reps)

    table = [[ci[g.table[reps[i]][reps[j]]] for j in range(k)] for i in range(k)]
    for a in g.elements():
        for b in g.elements():
            if ci[g.table[a][b]] != table[ci[a]][ci[b]]:
                raise NotNormal(
                    "representative-independence",
                    (a, b),
                    "coset operation depends on representatives",
                )

    ref = [
        [[ci[g.gyr(reps[i], reps[j])(reps[m])] for m in range(k)] for j in range(k)]
        for i in range(k)
    ]
    for a in g.elements():
        for b in g.elements():
            gy = g.gyr(a, b)
            row = ref[ci[a]][ci[b]]
            for c in g.elements():
                if ci[gy(c)] != row[ci[c]]:
                    raise NotNormal(
                        "gyration-descent", (a, b, c), "gyrations do not descend to cosets"
                    )

    report = verify_axioms(table)
    if not report.passed:
        raise NotNormal("axioms", (), f"induced table fails axioms: {report.summary()}")

    quotient_table = GyroTable(table, check=False)
    projection = Hom(g, quotient_table, tuple(ci))
    if not check_hom(projection):
        raise InternalConsistencyError("projection is not a homomorphism")
    if frozenset(a for a in g.elements() if ci[a] == 0) != n_set:
        raise InternalConsistencyError("projection kernel differs from the subgyrogroup")
    return Quotient(
        parent=g,
        normal_members=tuple(sorted(n_set)),
        cosets=family,
        table=quotient_table,
        projection=projection,
    )


def is_normal(g: GyroTable, subset) -> bool:
    try:
        try_quotient(g, subset)
        return True
    except NotNormal:
        return False


def intersect_normals(g: GyroTable, normals: Sequence) -> SubSet:
    """Intersection of verified normal subgyrogroups, realized as the kernel
    of the componentwise map into the product of the quotients and
    cross-checked against the plain set intersection."""
    if not normals:
        raise ValueError("need at least one normal subgyrogroup")
    quotients = []
    for n in normals:
        try:
            quotients.append(try_quotient(g, n))
        except NotNormal as exc:
            raise ValueError(f"input is not normal: {exc}") from exc

    plain = frozenset(_members(normals[0])).intersection(*[_members(n) for n in normals[1:]])
    zero_tuple = tuple(0 for _ in quotients)
    product_kernel = frozenset(
        a
        for a in g.elements()
        if tuple(q.projection(a) for q in quotients) == zero_tuple
    )
    if product_kernel != plain:
        raise InternalConsistencyError("product-map kernel differs from set intersection")
    # componentwise map preserves the operation in each coordinate
    for q in quotients:
        for a in g.elements():
            for b in g.elements():
                if q.projection(g.table[a][b]) != q.table.table[q.projection(a)][q.projection(b)]:
                    raise InternalConsistencyError("componentwise map is not a homomorphism")
    result = SubSet.of(g, plain)
    if not is_normal(g, result):
        raise InternalConsistencyError("intersection of normals failed normality")
    return result


def normal_closure(g: GyroTable, seed: Iterable[int], cap: int = DEFAULT_LATTICE_CAP) -> SubSet:
    """The least normal subgyrogroup containing the seed, by filtering the
    enumerated lattice through the normality decision and intersecting."""
    seed = set(seed)
    if not seed:
        raise ValueError("seed must be nonempty")
    lattice = enumerate_subgyrogroups(g, cap=cap)
    containing = [s for s in lattice if seed <= s.as_set() and is_normal(g, s)]
    if not containing:
        raise InternalConsistencyError("no normal subgyrogroup contains the seed")
    closure = frozenset(containing[0].as_set()).intersection(
        *[s.as_set() for s in containing[1:]]
    )
    result = SubSet.of(g, closure)
    if not seed <= result.as_set():
        raise InternalConsistencyError("closure does not contain the seed")
    if not is_normal(g, result):
        raise InternalConsistencyError("closure is not normal")
    return result


def check_sufficient_normality(g: GyroTable, subset) -> bool:
    """Sufficient condition: inner gyrations trivial on one side, gyration
    invariance, and coset symmetry.  When it holds, normality must follow
    and is asserted."""
    h = _require_subgyrogroup(g, subset)
    ident = tuple(range(g.order))
    cond1 = all(g.gyr(x, a).images == ident for x in h for a in g.elements())
    cond2 = all(
        frozenset(g.gyr(a, b)(x) for x in h) <= h
        for a in g.elements()
        for b in g.elements()
    )
    cond3 = all(left_coset(g, h, a) == right_coset(g, h, a) for a in g.elements())
    ok = cond1 and cond2 and cond3
    if ok and not is_normal(g, h):
        raise InternalConsistencyError("sufficient condition held but normality failed")
    return ok


def induced_isomorphism(phi: Hom) -> Hom:
    """First-isomorphism construction: the induced map from the quotient by
    the kernel onto the image, verified bijective onto the image table."""
    ker = kernel(phi)
    q = try_quotient(phi.domain, ker)
    img = image(phi)
    # image as a table in its own right, indexed by ascending members
    order_map = {m: i for i, m in enumerate(img.members)}
    img_table = GyroTable(
        [
            [order_map[phi.codomain.table[a][b]] for b in img.members]
            for a in img.members
        ],
        check=False,
    )
    induced = [0] * q.table.order
    for a in phi.domain.elements():
        induced[q.projection(a)] = order_map[phi.map[a]]
    hom = Hom(q.table, img_table, tuple(induced))
    if not check_hom(hom):
        raise InternalConsistencyError("induced map is not a homomorphism")
    if sorted(induced) != list(range(q.table.order)) or q.table.order != img_table.order:
        raise InternalConsistencyError("induced map is not a bijection onto the image")
    return hom
