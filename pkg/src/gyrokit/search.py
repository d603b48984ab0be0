"""Exhaustive backtracking enumeration of gyrogroup tables of small order,
plus isomorphism testing, canonical forms, and automorphism groups.

The search assigns left-translation rows one at a time (row 0 is the
identity), so row bijectivity holds structurally.  Partial assignments are
pruned by facts every gyrogroup table satisfies:

  * column entries are distinct (right translations are bijections too);
  * a (+) 0 = a, so column 0 of row a is a;
  * the row of -a is the inverse permutation of the row of a, which forces
    one later row outright whenever a row places its 0;
  * on fully determined data, every gyration in translation form
    L(a+b)^-1 . La . Lb must preserve the operation and satisfy the left
    loop property.

Every surviving leaf is re-verified from scratch with the full axiom check,
so the pruning only needs to be sound, never exact.  Optional symmetry
breaking discards prefixes that are provably not the lexicographically least
relabeling of any completion; each isomorphism class keeps at least its
minimal table, and canonical-form deduplication runs afterwards regardless.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import permutations

from .core import (
    GyroTable,
    InternalConsistencyError,
    Perm,
    ResourceCapError,
    verify_axioms,
)

DEFAULT_AUT_CAP = 16
DEFAULT_CANON_CAP = 8

MODE_EXHAUSTIVE = "exhaustive"
MODE_FIRST_NONASSOCIATIVE = "first_nonassociative"


@dataclass(frozen=True)
class SearchConfig:
    order: int
    mode: str = MODE_EXHAUSTIVE
    max_results: int | None = None
    time_budget: float | None = None  # seconds
    symmetry_breaking: bool = True

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be >= 1")
        if self.mode not in (MODE_EXHAUSTIVE, MODE_FIRST_NONASSOCIATIVE):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.max_results is not None and self.max_results < 1:
            raise ValueError("max_results must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time_budget must be positive")


@dataclass
class SearchResult:
    tables: tuple[GyroTable, ...]
    complete: bool  # False when the time budget cut the search short
    leaves: int = 0
    nodes: int = 0


class _Budget(Exception):
    pass


def _inverse_tuple(p: tuple) -> tuple:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


class _Search:
    def __init__(self, config: SearchConfig):
        self.config = config
        n = config.order
        self.n = n
        self.rows: list[tuple | None] = [tuple(range(n))] + [None] * (n - 1)
        self.invs: list[tuple | None] = [self.rows[0]] + [None] * (n - 1)
        self.col_used = [set((c,)) for c in range(n)]  # row 0 pre-placed
        self.forced: dict[int, tuple] = {}
        self.deadline = None
        if config.time_budget is not None:
            self.deadline = time.monotonic() + config.time_budget
        self.nodes = 0
        self.leaves = 0
        self.found: list[GyroTable] = []
        self.stop = False

    # -- candidate rows -------------------------------------------------------

    def _row_candidates(self, a: int):
        """Column-compatible permutation rows for element a, in lex order."""
        n = self.n
        if a in self.forced:
            p = self.forced[a]
            if all(p[c] not in self.col_used[c] for c in range(1, n)):
                yield p
            return
        col_used = self.col_used
        prefix = [a]
        free = [True] * n
        free[a] = False

        def extend(c: int):
            if c == n:
                yield tuple(prefix)
                return
            used_c = col_used[c]
            for v in range(n):
                if free[v] and v not in used_c:
                    free[v] = False
                    prefix.append(v)
                    yield from extend(c + 1)
                    prefix.pop()
                    free[v] = True

        yield from extend(1)

    # -- pruning checks -------------------------------------------------------

    def _pair_ok(self, a: int, p: tuple) -> tuple | None:
        """Inverse-pairing constraints for placing row p at index a.

        Returns the row index that this placement forces (or -1 for none),
        or None when the placement is inconsistent."""
        c = p.index(0)  # the left inverse of c is a; row c must be p^-1
        if c < a:
            if self.rows[c] != _inverse_tuple(p):
                return None
            return -1
        if c == a:
            if p != _inverse_tuple(p):
                return None
            return -1
        if c in self.forced and self.forced[c] != _inverse_tuple(p):
            return None
        return c

    def _partial_ok(self, k: int) -> bool:
        """Translation-form gyration checks over rows 0..k."""
        n, rows, invs = self.n, self.rows, self.invs
        for x in range(1, k + 1):
            rx = rows[x]
            for y in range(1, k + 1):
                t = rx[y]
                if t > k:
                    continue
                ry = rows[y]
                qt = invs[t]
                g = [qt[rx[ry[c]]] for c in range(n)]
                # left loop property against row t (+) y when available
                u = rows[t][y]
                if u <= k:
                    qu = invs[u]
                    rt = rows[t]
                    if any(qu[rt[c]] != qt[rx[c]] for c in range(n)):
                        return False
                # the gyration must preserve the operation where determined
                for v in range(k + 1):
                    gv = g[v]
                    if gv > k:
                        continue
                    rv = rows[v]
                    rgv = rows[gv]
                    if any(g[rv[w]] != rgv[g[w]] for w in range(n)):
                        return False
        return True

    def _prefix_lex_minimal(self, k: int) -> bool:
        """False iff some relabeling fixing 0 makes the assigned region of
        the table lexicographically smaller, comparing only cells that are
        determined on both sides.  Keeps at least the minimal table of every
        isomorphism class."""
        n, rows = self.n, self.rows
        fwd: list[int | None] = [None] * n  # original -> new
        bwd: list[int | None] = [None] * n  # new -> original
        fwd[0] = 0
        bwd[0] = 0

        def smaller_from(x: int, y: int) -> bool:
            if x > k:
                return False  # comparison ran past the determined region
            if y == self.n:
                return smaller_from(x + 1, 0)
            a = bwd[x]
            if a is None:
                for cand in range(1, k + 1):
                    if fwd[cand] is None:
                        fwd[cand] = x
                        bwd[x] = cand
                        if smaller_from(x, y):
                            fwd[cand] = None
                            bwd[x] = None
                            return True
                        fwd[cand] = None
                        bwd[x] = None
                return False
            if rows[a] is None:
                return False  # pinned to an unassigned row: cell undetermined
            b = bwd[y]
            if b is None:
                for cand in range(1, n):
                    if fwd[cand] is None:
                        fwd[cand] = y
                        bwd[y] = cand
                        if smaller_from(x, y):
                            fwd[cand] = None
                            bwd[y] = None
                            return True
                        fwd[cand] = None
                        bwd[y] = None
                return False
            w = rows[a][b]
            t = rows[x][y]
            v = fwd[w]
            if v is not None:
                if v < t:
                    return True
                if v > t:
                    return False
                return smaller_from(x, y + 1)
            if any(bwd[u] is None for u in range(t)):
                return True  # map w below t and win immediately
            if bwd[t] is None:
                fwd[w] = t
                bwd[t] = w
                result = smaller_from(x, y + 1)
                fwd[w] = None
                bwd[t] = None
                return result
            return False

        return not smaller_from(1, 0)

    # -- the tree -------------------------------------------------------------

    def _leaf(self):
        rows = [r for r in self.rows if r is not None]
        self.leaves += 1
        report = verify_axioms(rows)
        if not report.passed:
            return
        table = GyroTable(rows, check=False)
        if self.config.mode == MODE_FIRST_NONASSOCIATIVE:
            if table.is_group():
                return
            # re-verify from scratch before emitting
            if not verify_axioms([list(r) for r in rows]).passed:
                return
            self.found.append(table)
            self.stop = True
            return
        self.found.append(table)

    def _dfs(self, a: int):
        if self.stop:
            return
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise _Budget
        if a == self.n:
            self._leaf()
            return
        self.nodes += 1
        for p in self._row_candidates(a):
            forced_row = self._pair_ok(a, p)
            if forced_row is None:
                continue
            self.rows[a] = p
            self.invs[a] = _inverse_tuple(p)
            for c in range(1, self.n):
                self.col_used[c].add(p[c])
            if forced_row >= 0:
                self.forced[forced_row] = self.invs[a]
            try:
                if self._partial_ok(a) and (
                    not self.config.symmetry_breaking or self._prefix_lex_minimal(a)
                ):
                    self._dfs(a + 1)
            finally:
                if forced_row >= 0:
                    del self.forced[forced_row]
                for c in range(1, self.n):
                    self.col_used[c].discard(p[c])
                self.rows[a] = None
                self.invs[a] = None
            if self.stop:
                return

    def run(self) -> SearchResult:
        complete = True
        try:
            self._dfs(1)
        except _Budget:
            complete = False
        tables = self.found
        if self.config.mode == MODE_EXHAUSTIVE:
            canon = sorted({canonical_form(t, cap=self.n).table for t in tables})
            tables = [GyroTable(rows, check=False) for rows in canon]
        if self.config.max_results is not None:
            tables = tables[: self.config.max_results]
        return SearchResult(tuple(tables), complete, self.leaves, self.nodes)


def run_search(config: SearchConfig) -> SearchResult:
    """Enumerate gyrogroup tables of the configured order.

    Exhaustive mode returns one canonical table per isomorphism class, in
    lexicographic order.  First-nonassociative mode stops at the first
    verified table that is not a group."""
    return _Search(config).run()


# -- isomorphism layer ---------------------------------------------------------


def are_isomorphic(g: GyroTable, h: GyroTable) -> tuple[bool, Perm | None]:
    """Backtracking search for an operation-preserving bijection fixing 0.

    The witness, when found, is re-verified by a full scan."""
    if g.order != h.order:
        return False, None
    n = g.order
    tg, th = g.table, h.table
    phi: list[int | None] = [None] * n
    used = [False] * n
    phi[0] = 0
    used[0] = True

    def consistent(upto: int) -> bool:
        for a in range(upto + 1):
            fa = phi[a]
            if fa is None:
                continue
            for b in range(n):
                fb = phi[b]
                if fb is None:
                    continue
                ft = phi[tg[a][b]]
                if ft is not None and th[fa][fb] != ft:
                    return False
        return True

    def extend(x: int) -> bool:
        if x == n:
            return True
        for v in range(n):
            if not used[v]:
                phi[x] = v
                used[v] = True
                if consistent(x) and extend(x + 1):
                    return True
                phi[x] = None
                used[v] = False
        return False

    if not extend(1):
        return False, None
    witness = Perm(phi)  # full scan re-verification
    assert all(
        th[witness(a)][witness(b)] == witness(tg[a][b]) for a in range(n) for b in range(n)
    )
    return True, witness


def automorphisms(g: GyroTable, cap: int = DEFAULT_AUT_CAP) -> list[Perm]:
    """All operation-preserving bijections (each fixes 0), sorted.

    The result is verified to be a group under composition and to contain
    every gyration of the table."""
    n = g.order
    if n > cap:
        raise ResourceCapError("aut_cap", f"order {n} exceeds automorphism cap {cap}")
    found, _ = _all_isomorphisms(g, g)
    auts = set(found)
    if not all(p * q in auts for p in auts for q in auts) or not all(
        p.inverse() in auts for p in auts
    ):
        raise InternalConsistencyError("automorphisms do not form a group")
    if any(g.gyr(a, b) not in auts for a in range(n) for b in range(n)):
        raise InternalConsistencyError("a gyration is missing from the automorphisms")
    return sorted(found)


def _all_isomorphisms(g: GyroTable, h: GyroTable) -> tuple[list[Perm], int]:
    n = g.order
    tg, th = g.table, h.table
    phi: list[int | None] = [None] * n
    used = [False] * n
    phi[0] = 0
    used[0] = True
    out: list[Perm] = []
    nodes = 0

    def ok_after(x: int) -> bool:
        for a in range(x + 1):
            fa = phi[a]
            if fa is None:
                continue
            for b in range(x + 1):
                fb = phi[b]
                if fb is None:
                    continue
                ft = phi[tg[a][b]]
                if ft is not None and th[fa][fb] != ft:
                    return False
        return True

    def extend(x: int):
        nonlocal nodes
        nodes += 1
        if x == n:
            out.append(Perm(list(phi)))
            return
        for v in range(n):
            if not used[v]:
                phi[x] = v
                used[v] = True
                if ok_after(x):
                    extend(x + 1)
                phi[x] = None
                used[v] = False

    extend(1)
    return out, nodes


def canonical_form(g: GyroTable, cap: int = DEFAULT_CANON_CAP) -> GyroTable:
    """The lexicographically least relabeling of the table fixing 0.

    Two tables are isomorphic iff their canonical forms are identical."""
    n = g.order
    if n > cap:
        raise ResourceCapError("canon_cap", f"order {n} exceeds canonical-form cap {cap}")
    t = g.table
    best = None
    for rest in permutations(range(1, n)):
        sigma = (0,) + rest  # original -> new
        inv = _inverse_tuple(sigma)
        relabeled = tuple(
            tuple(sigma[t[inv[x]][inv[y]]] for y in range(n)) for x in range(n)
        )
        if best is None or relabeled < best:
            best = relabeled
    return GyroTable(best, check=False)
