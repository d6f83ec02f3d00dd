"""Finite doodle switches given by multiplication tables.

Elements are the 1-based indices ``1..n``; ``table[i-1][j-1]`` is the index
of ``x_i . x_j`` (row = left operand).  A doodle switch satisfies

1.  ``a.b == b.a`` iff ``a == b``;
2a. for every ``b`` the map ``u -> u.b`` is a bijection (columns are
    permutations);
2b. ``S(a, b) = (b.a, a.b)`` is a bijection of ordered pairs.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Optional, Sequence


class SwitchInputError(ValueError):
    """Raised for malformed tables (not square, entries out of range)."""


class InvalidSwitchError(ValueError):
    """Raised when an operation needs a valid switch and gets an invalid one."""


@dataclass(frozen=True)
class AxiomReport:
    status: str  # "valid" | "invalid"
    axiom: Optional[str] = None  # "1" | "2a" | "2b"
    witness: Optional[tuple] = None

    @property
    def valid(self) -> bool:
        return self.status == "valid"

    def describe(self) -> str:
        if self.valid:
            return "valid"
        return f"axiom {self.axiom} violated at {_fmt_witness(self.witness)}"


def _fmt_witness(w) -> str:
    return "(" + ",".join(str(x) if not isinstance(x, tuple) else _fmt_witness(x) for x in w) + ")"


def _check_shape(table) -> tuple[tuple[int, ...], ...]:
    rows = [tuple(r) for r in table]
    n = len(rows)
    if n == 0:
        raise SwitchInputError("empty table")
    for i, row in enumerate(rows, 1):
        if len(row) != n:
            raise SwitchInputError(f"row {i} has {len(row)} entries, expected {n}")
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= n:
                raise SwitchInputError(f"entry {v!r} in row {i} outside 1..{n}")
    return tuple(rows)


def verify_axioms(table: Sequence[Sequence[int]]) -> AxiomReport:
    """Check the three axioms; report the first violation in scan order 1, 2a, 2b."""
    rows = _check_shape(table)
    n = len(rows)
    for i in range(n):
        for j in range(n):
            if i != j and rows[i][j] == rows[j][i]:
                return AxiomReport("invalid", "1", (min(i, j) + 1, max(i, j) + 1))
    seen_col: list[dict[int, int]] = [{} for _ in range(n)]
    for i in range(n):
        for j in range(n):
            v = rows[i][j]
            if v in seen_col[j]:
                return AxiomReport("invalid", "2a", (seen_col[j][v] + 1, i + 1, j + 1))
            seen_col[j][v] = i
    seen_pair: dict[tuple[int, int], tuple[int, int]] = {}
    for i in range(n):
        for j in range(n):
            img = (rows[j][i], rows[i][j])
            if img in seen_pair:
                return AxiomReport("invalid", "2b", (seen_pair[img], (i + 1, j + 1)))
            seen_pair[img] = (i + 1, j + 1)
    return AxiomReport("valid")


@dataclass(frozen=True)
class DerivedOps:
    """Secondary operations of a switch, all 1-based.

    ``dot_inv[x-1][y-1]`` is the unique ``u`` with ``u.y == x``;
    ``bullet`` is read off ``S^-1(x, y) = (y*x, x*y)``;
    ``bullet_inv[x-1][y-1] = x . (y dot_inv x)``; ``t[x-1] = x.x``.
    """

    dot_inv: tuple[tuple[int, ...], ...]
    bullet: tuple[tuple[int, ...], ...]
    bullet_inv: tuple[tuple[int, ...], ...]
    t: tuple[int, ...]
    t_inv: tuple[int, ...]


@dataclass(frozen=True)
class FiniteDoodleSwitch:
    table: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        rows = _check_shape(self.table)
        object.__setattr__(self, "table", rows)
        report = verify_axioms(rows)
        if not report.valid:
            raise InvalidSwitchError(report.describe())

    @classmethod
    def unchecked(cls, table, name: str = "") -> "FiniteDoodleSwitch":
        """Build without axiom verification (tables already known to be valid)."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "table", tuple(tuple(r) for r in table))
        object.__setattr__(obj, "name", name)
        return obj

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a - 1][b - 1]

    def s_map(self, a: int, b: int) -> tuple[int, int]:
        return s_map(self, a, b)

    def derived(self) -> DerivedOps:
        return derived_ops(self)

    def zero_based(self) -> list[list[int]]:
        return [[v - 1 for v in row] for row in self.table]

    def idempotents(self) -> list[int]:
        """Elements ``c`` with ``c.c == c`` (each gives a constant coloring)."""
        return [c for c in range(1, self.order + 1) if self.mul(c, c) == c]

    def __str__(self) -> str:
        return format_switch(self)


def s_map(T: FiniteDoodleSwitch, a: int, b: int) -> tuple[int, int]:
    n = T.order
    if not (1 <= a <= n and 1 <= b <= n):
        raise SwitchInputError(f"elements ({a},{b}) outside 1..{n}")
    return T.table[b - 1][a - 1], T.table[a - 1][b - 1]


def derived_ops(T: FiniteDoodleSwitch) -> DerivedOps:
    if not verify_axioms(T.table).valid:
        raise InvalidSwitchError("derived operations need a valid switch")
    n = T.order
    tab = T.table
    dot_inv = [[0] * n for _ in range(n)]
    for y in range(n):
        for u in range(n):
            dot_inv[tab[u][y] - 1][y] = u + 1
    # S(a,b) = (c,d)  <=>  (a,b) = (d*c, c*d)
    bullet = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            c, d = tab[b][a], tab[a][b]
            bullet[d - 1][c - 1] = a + 1
            bullet[c - 1][d - 1] = b + 1
    bullet_inv = [[tab[x][dot_inv[y][x] - 1] for y in range(n)] for x in range(n)]
    t = [tab[x][x] for x in range(n)]
    t_inv = [0] * n
    for x, tx in enumerate(t):
        t_inv[tx - 1] = x + 1
    return DerivedOps(
        dot_inv=tuple(map(tuple, dot_inv)),
        bullet=tuple(map(tuple, bullet)),
        bullet_inv=tuple(map(tuple, bullet_inv)),
        t=tuple(t),
        t_inv=tuple(t_inv),
    )


def identity_violations(T: FiniteDoodleSwitch) -> list[tuple[str, int, int]]:
    """Check the inverse laws of the derived operations on every pair.

    The laws are ``S(S^-1(x, y)) = (x, y)``, ``S^-1(S(x, y)) = (x, y)``,
    right cancellation for ``.``/``.^-1`` in both orders, the same for
    ``*``/``*^-1``, and ``t^-1(x) = x*x``.  Returns ``(law, x, y)`` for each
    failure; an empty list means all hold.
    """
    d = derived_ops(T)
    m = T.mul

    def op(tab, a, b):
        return tab[a - 1][b - 1]

    bad = []
    rng = range(1, T.order + 1)
    for x in rng:
        if d.t_inv[x - 1] != op(d.bullet, x, x):
            bad.append(("t_inv", x, x))
        for y in rng:
            sinv = (op(d.bullet, y, x), op(d.bullet, x, y))
            if s_map(T, *sinv) != (x, y):
                bad.append(("S.S^-1", x, y))
            a, b = s_map(T, x, y)
            if (op(d.bullet, b, a), op(d.bullet, a, b)) != (x, y):
                bad.append(("S^-1.S", x, y))
            if op(d.dot_inv, m(x, y), y) != x:
                bad.append(("(x.y)./y", x, y))
            if m(op(d.dot_inv, x, y), y) != x:
                bad.append(("(x./y).y", x, y))
            if op(d.bullet_inv, op(d.bullet, x, y), y) != x:
                bad.append(("(x*y)*/y", x, y))
            if op(d.bullet, op(d.bullet_inv, x, y), y) != x:
                bad.append(("(x*/y)*y", x, y))
    return bad


def is_r3_compatible(T: FiniteDoodleSwitch) -> tuple[bool, Optional[tuple[int, int, int]]]:
    """Check ``(a.b).(c.b) == (a.c).(b.c)`` for all triples.

    Returns ``(True, None)`` or ``(False, first violating (a, b, c))``.
    """
    m = T.mul
    rng = range(1, T.order + 1)
    for a, b, c in itertools.product(rng, repeat=3):
        if m(m(a, b), m(c, b)) != m(m(a, c), m(b, c)):
            return False, (a, b, c)
    return True, None


def conjugate(T: FiniteDoodleSwitch, perm: Sequence[int]) -> FiniteDoodleSwitch:
    """Relabel elements by ``x -> perm[x-1]``; the result is isomorphic to ``T``."""
    n = T.order
    new = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            new[perm[i] - 1][perm[j] - 1] = perm[T.table[i][j] - 1]
    return FiniteDoodleSwitch.unchecked(new)


def are_isomorphic(T1: FiniteDoodleSwitch, T2: FiniteDoodleSwitch) -> Optional[tuple[int, ...]]:
    """Find ``phi`` (as a tuple, ``phi[x-1]``) with ``phi(x.y) = phi(x).phi(y)``, or None."""
    n = T1.order
    if n != T2.order:
        return None
    if sorted(_profile(T1)) != sorted(_profile(T2)):
        return None
    a, b = T1.table, T2.table
    phi = [0] * n
    used = [False] * n

    def consistent(k: int) -> bool:
        # every product among the first k+1 elements whose value is also assigned
        for i in range(k + 1):
            for j in ((k,) if i < k else range(k + 1)):
                for x, y in ((i, j), (j, i)):
                    v = a[x][y] - 1
                    if v <= k and b[phi[x]][phi[y]] - 1 != phi[v]:
                        return False
        return True

    def extend(k: int) -> bool:
        if k == n:
            return True
        for cand in range(n):
            if used[cand]:
                continue
            phi[k] = cand
            used[cand] = True
            if consistent(k) and extend(k + 1):
                return True
            used[cand] = False
        return False

    if extend(0):
        return tuple(p + 1 for p in phi)
    return None


def _profile(T: FiniteDoodleSwitch) -> list[tuple[int, int]]:
    # isomorphism-invariant per-element data: t-cycle length and row fixpoints
    n = T.order
    out = []
    for x in range(1, n + 1):
        y, k = T.mul(x, x), 1
        while y != x:
            y, k = T.mul(y, y), k + 1
        out.append((k, sum(1 for z in range(1, n + 1) if T.mul(x, z) == x)))
    return out


def projection_switch(n: int) -> FiniteDoodleSwitch:
    """``x.y = x``; a valid switch of every order."""
    return FiniteDoodleSwitch.unchecked([[i + 1] * n for i in range(n)], name=f"proj{n}")


def canonical_table(table: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    n = len(table)
    best = None
    for perm in itertools.permutations(range(n)):
        new = [[0] * n for _ in range(n)]
        for i in range(n):
            pi = perm[i]
            row = table[i]
            for j in range(n):
                new[pi][perm[j]] = perm[row[j] - 1] + 1
        cand = tuple(map(tuple, new))
        if best is None or cand < best:
            best = cand
    return best


def enumerate_switches(n: int, up_to_iso: bool = False) -> list[FiniteDoodleSwitch]:
    """All valid switch tables of order ``n`` in row-major lexicographic order.

    With ``up_to_iso`` only the lexicographically least table of each
    isomorphism class is kept.  Order 4 is instant; order 5 takes seconds
    up to isomorphism and holds ~9.4 million tables without it.
    """
    if not isinstance(n, int) or n < 1:
        raise SwitchInputError(f"order must be a positive integer, got {n!r}")
    from . import kernels

    out = []
    for flat in kernels.enumerate_tables(n, up_to_iso):
        tab = tuple(tuple(v + 1 for v in flat[r * n:(r + 1) * n]) for r in range(n))
        out.append(FiniteDoodleSwitch.unchecked(tab))
    for k, T in enumerate(out):
        object.__setattr__(T, "name", f"S{n}.{k + 1}")
    return out


def brute_force_switches(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Filter every n x n table through verify_axioms (oracle; n <= 3)."""
    for flat in itertools.product(range(1, n + 1), repeat=n * n):
        tab = tuple(flat[r * n:(r + 1) * n] for r in range(n))
        if verify_axioms(tab).valid:
            yield tab


# -- text format -----------------------------------------------------------

def parse_switch(text: str) -> tuple[tuple[int, ...], ...]:
    """Parse the switch file format: first line n, then n rows; '#' comments."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise SwitchInputError("empty switch file")
    try:
        n = int(lines[0])
        rows = [tuple(int(tok) for tok in ln.split()) for ln in lines[1:]]
    except ValueError as exc:
        raise SwitchInputError(f"non-integer token: {exc}") from None
    if n < 1 or len(rows) != n:
        raise SwitchInputError(f"declared order {n} but found {len(rows)} rows")
    return _check_shape(rows)


def format_switch(T) -> str:
    table = T.table if isinstance(T, FiniteDoodleSwitch) else T
    lines = [str(len(table))] + [" ".join(str(v) for v in row) for row in table]
    return "\n".join(lines) + "\n"


def load_switch(path) -> FiniteDoodleSwitch:
    path = Path(path)
    return FiniteDoodleSwitch(parse_switch(path.read_text()), name=path.stem)
