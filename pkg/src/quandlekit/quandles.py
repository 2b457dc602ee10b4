"""Finite quandles as validated operation tables on {0..n-1}.

A quandle satisfies
  (I)   a*a = a
  (II)  for each b, a -> a*b is a bijection
  (III) (a*b)*c = (a*c)*(b*c)
Tables are immutable once validated, so they can be shared freely by
enumeration workers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

from .errors import GuardExceeded, InputError
from .groups import FiniteGroup

ISO_SIZE_CAP = 12


@dataclass
class ValidationReport:
    passed: bool
    failures: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.passed


def verify_axioms(table) -> ValidationReport:
    """Check quandle axioms I-III exhaustively; report first violation of each."""
    n = len(table)
    for row in table:
        if len(row) != n:
            raise InputError("table is not square")
        for e in row:
            if not isinstance(e, int) or not (0 <= e < n):
                raise InputError(f"table entry {e!r} out of range 0..{n - 1}")
    failures = []
    for a in range(n):
        if table[a][a] != a:
            failures.append(f"axiom I fails at a={a}: {a}*{a}={table[a][a]}")
            break
    for b in range(n):
        col = [table[a][b] for a in range(n)]
        if len(set(col)) != n:
            failures.append(f"axiom II fails at b={b}: column {col} is not a permutation")
            break
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[table[a][c]][table[b][c]]:
            failures.append(
                f"axiom III fails at (a,b,c)=({a},{b},{c}): "
                f"({a}*{b})*{c} != ({a}*{c})*({b}*{c})")
            break
    return ValidationReport(passed=not failures, failures=failures)


@dataclass(frozen=True)
class FiniteQuandle:
    table: tuple[tuple[int, ...], ...]
    label: str = ""

    @property
    def size(self) -> int:
        return len(self.table)

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def _inv_table(self) -> tuple[tuple[int, ...], ...]:
        # inv[a][b] = the unique c with c*b = a
        n = self.size
        inv = [[0] * n for _ in range(n)]
        for c in range(n):
            for b in range(n):
                inv[self.table[c][b]][b] = c
        return tuple(tuple(row) for row in inv)

    def inv_op(self, a: int, b: int) -> int:
        """a op-bar b: the unique c with c*b = a."""
        return self._inv_table[a][b]

    def elements(self) -> range:
        return range(self.size)


def quandle_from_table(table, label: str = "") -> FiniteQuandle:
    report = verify_axioms(table)
    if not report:
        raise InputError("not a quandle: " + "; ".join(report.failures))
    return FiniteQuandle(table=tuple(tuple(row) for row in table), label=label)


def make_trivial(n: int) -> FiniteQuandle:
    if n < 1:
        raise InputError("quandle size must be positive")
    return FiniteQuandle(tuple(tuple(a for _ in range(n)) for a in range(n)), label=f"T{n}")


def make_dihedral(n: int) -> FiniteQuandle:
    if n < 1:
        raise InputError("quandle size must be positive")
    table = tuple(tuple((2 * j - i) % n for j in range(n)) for i in range(n))
    return FiniteQuandle(table, label=f"R{n}")


def make_alexander(n: int, t: int) -> FiniteQuandle:
    """Z_n with a*b = t*a + (1-t)*b; t must be a unit mod n."""
    import math
    if n < 1:
        raise InputError("modulus must be positive")
    if math.gcd(t, n) != 1:
        raise InputError(f"t={t} is not a unit mod {n}")
    table = tuple(tuple((t * a + (1 - t) * b) % n for b in range(n)) for a in range(n))
    return FiniteQuandle(table, label=f"Alex({n},{t})")


def make_conj(g: FiniteGroup, subset=None, power: int = 1) -> FiniteQuandle:
    """Quandle on a conjugation-closed subset with a*b = b^m a b^-m."""
    elems = list(range(g.size)) if subset is None else list(subset)
    index = {e: i for i, e in enumerate(elems)}
    table = []
    for a in elems:
        row = []
        for b in elems:
            c = g.conj(a, b, power)
            if c not in index:
                raise InputError(
                    f"subset not closed under conjugation: {a}*{b}={c} is outside")
            row.append(index[c])
        table.append(tuple(row))
    return FiniteQuandle(tuple(table), label=f"Conj({g.label or g.size},m={power})")


def make_core(g: FiniteGroup) -> FiniteQuandle:
    """Core quandle of a group: a*b = b a^-1 b."""
    n = g.size
    table = tuple(
        tuple(g.mul[g.mul[b][g.inv[a]]][b] for b in range(n)) for a in range(n))
    return FiniteQuandle(table, label=f"Core({g.label or n})")


def _profile(q: FiniteQuandle, a: int):
    # crude isomorphism invariant of one element: sorted fixed-point and
    # orbit-size data of the column permutation plus row multiset
    n = q.size
    col = tuple(q.table[x][a] for x in range(n))
    fixed = sum(1 for x in range(n) if col[x] == x)
    row_counts = tuple(sorted(
        len([b for b in range(n) if q.table[a][b] == c]) for c in set(q.table[a])))
    return (fixed, row_counts)


def is_isomorphic(q1: FiniteQuandle, q2: FiniteQuandle) -> Optional[tuple[int, ...]]:
    """Search for a table-preserving bijection q1 -> q2 (None if there is none)."""
    if q1.size != q2.size:
        return None
    n = q1.size
    if n > ISO_SIZE_CAP:
        raise GuardExceeded(f"isomorphism search capped at size {ISO_SIZE_CAP}, got {n}")
    p1 = [_profile(q1, a) for a in range(n)]
    p2 = [_profile(q2, a) for a in range(n)]
    if sorted(p1) != sorted(p2):
        return None
    phi = [-1] * n
    used = [False] * n

    def consistent(a: int) -> bool:
        for b in range(n):
            if phi[b] < 0:
                continue
            ab = q1.table[a][b]
            ba = q1.table[b][a]
            if phi[ab] >= 0 and q2.table[phi[a]][phi[b]] != phi[ab]:
                return False
            if phi[ba] >= 0 and q2.table[phi[b]][phi[a]] != phi[ba]:
                return False
        return True

    def search(a: int) -> bool:
        if a == n:
            return True
        for img in range(n):
            if used[img] or p1[a] != p2[img]:
                continue
            phi[a] = img
            used[img] = True
            if consistent(a) and search(a + 1):
                return True
            phi[a] = -1
            used[img] = False
        return False

    if search(0):
        return tuple(phi)
    return None
