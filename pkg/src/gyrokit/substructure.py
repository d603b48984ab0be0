"""Subgyrogroups, generated closures, left cosets, and the full lattice.

A subgyrogroup is a nonempty subset containing 0 and closed under the
operation and negation; gyration closure then comes for free because
gyr[a, b] c = -(a+b) + (a + (b+c)) stays inside.  Left cosets of an
arbitrary subgyrogroup need not partition the carrier, so ``left_cosets``
raises ``NotPartition`` with an overlapping pair instead of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import GyroTable, ResourceCapError

DEFAULT_LATTICE_CAP = 64


@dataclass(frozen=True)
class SubSet:
    """A subset of a gyrogroup carrier, members strictly ascending."""

    parent: GyroTable
    members: tuple[int, ...]

    @classmethod
    def of(cls, parent: GyroTable, members: Iterable[int]) -> "SubSet":
        ms = sorted(set(members))
        for m in ms:
            if not 0 <= m < parent.order:
                raise ValueError(f"member {m} out of range 0..{parent.order - 1}")
        return cls(parent, tuple(ms))

    def as_set(self) -> frozenset:
        return frozenset(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


class NotPartition(Exception):
    """Left cosets failed to partition the carrier."""

    def __init__(self, coset_a: tuple, coset_b: tuple):
        super().__init__(
            f"left cosets overlap without being equal: {list(coset_a)} vs {list(coset_b)}"
        )
        self.coset_a = coset_a
        self.coset_b = coset_b


@dataclass(frozen=True)
class CosetFamily:
    """Pairwise-disjoint left cosets covering the carrier, sorted by their
    least element (the representative)."""

    parent: GyroTable
    subgroup_members: tuple[int, ...]
    cosets: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]

    def coset_index_of(self, x: int) -> int:
        for i, coset in enumerate(self.cosets):
            if x in coset:
                return i
        raise ValueError(f"{x} not covered")


def _members(subset) -> frozenset:
    if isinstance(subset, SubSet):
        return subset.as_set()
    return frozenset(subset)


def generate(g: GyroTable, seed: Iterable[int]) -> SubSet:
    """The least subgyrogroup containing the seed: close seed and 0 under
    the operation and negation to a fixed point."""
    seed = set(seed)
    if not seed:
        raise ValueError("seed must be nonempty")
    table, neg = g.table, g.inv
    closed = {0} | seed
    frontier = list(closed)
    while frontier:
        nxt = []
        for a in frontier:
            na = neg[a]
            if na not in closed:
                closed.add(na)
                nxt.append(na)
        for a in list(closed):
            row = table[a]
            for b in list(closed):
                c = row[b]
                if c not in closed:
                    closed.add(c)
                    nxt.append(c)
        frontier = nxt
    return SubSet.of(g, closed)


def is_subgyrogroup(g: GyroTable, subset) -> bool:
    """0 present and closed under the operation and negation."""
    s = _members(subset)
    if 0 not in s:
        return False
    return all(g.inv[a] in s for a in s) and all(g.table[a][b] in s for a in s for b in s)


def _require_subgyrogroup(g: GyroTable, subset) -> frozenset:
    s = _members(subset)
    if not is_subgyrogroup(g, s):
        raise ValueError(f"not a subgyrogroup: {sorted(s)}")
    return s


def is_L_subgyrogroup(g: GyroTable, subset) -> bool:
    """gyr[a, h](H) = H for every a in the carrier and h in H."""
    h = _require_subgyrogroup(g, subset)
    return all(
        frozenset(g.gyr(a, x)(m) for m in h) == h for a in g.elements() for x in h
    )


def is_subgroup(g: GyroTable, subset) -> bool:
    """Whether the restricted operation is associative on the subgyrogroup."""
    h = _require_subgyrogroup(g, subset)
    t = g.table
    return all(t[t[a][b]][c] == t[a][t[b][c]] for a in h for b in h for c in h)


def left_coset(g: GyroTable, subset, a: int) -> frozenset:
    return frozenset(g.table[a][x] for x in _members(subset))


def right_coset(g: GyroTable, subset, a: int) -> frozenset:
    return frozenset(g.table[x][a] for x in _members(subset))


def left_cosets(g: GyroTable, subset) -> CosetFamily:
    """All left cosets a + H; raises NotPartition when they overlap."""
    h = _require_subgyrogroup(g, subset)
    seen: dict[frozenset, tuple] = {}
    membership: dict[int, frozenset] = {}
    for a in g.elements():
        coset = left_coset(g, h, a)
        for x in coset:
            prev = membership.get(x)
            if prev is not None and prev != coset:
                raise NotPartition(tuple(sorted(prev)), tuple(sorted(coset)))
            membership[x] = coset
        seen[coset] = tuple(sorted(coset))
    cosets = sorted(seen.values(), key=lambda c: c[0])
    return CosetFamily(
        parent=g,
        subgroup_members=tuple(sorted(h)),
        cosets=tuple(cosets),
        representatives=tuple(c[0] for c in cosets),
    )


def index(g: GyroTable, subset) -> int:
    """Number of left cosets, defined only when they partition the carrier."""
    return len(left_cosets(g, subset).cosets)


def enumerate_subgyrogroups(g: GyroTable, cap: int = DEFAULT_LATTICE_CAP) -> list[SubSet]:
    """Every subgyrogroup, via pairwise joins of one-element closures to a
    fixed point; sorted by size then members."""
    if g.order > cap:
        raise ResourceCapError("lattice_cap", f"order {g.order} exceeds lattice cap {cap}")
    found: set[tuple[int, ...]] = set()
    for a in g.elements():
        found.add(generate(g, [a]).members)
    changed = True
    while changed:
        changed = False
        current = sorted(found)
        for i, s in enumerate(current):
            for t in current[i + 1 :]:
                if set(s) <= set(t) or set(t) <= set(s):
                    continue
                join = generate(g, set(s) | set(t)).members
                if join not in found:
                    found.add(join)
                    changed = True
    return [SubSet(g, ms) for ms in sorted(found, key=lambda ms: (len(ms), ms))]
