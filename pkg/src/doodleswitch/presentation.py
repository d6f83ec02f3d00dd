"""Fundamental and doubled fundamental doodle-switch presentations; coloring counts.

A relation ``(l, x, y)`` stands for ``l = x . y``.  At a crossing whose
positive passage goes ``p -> p'`` and negative passage ``q -> q'`` the
fundamental presentation has

    p = p' . q        q' = q . p'

(equivalently ``S(q, p') = (p, q')``), and the doubled presentation, with an
upper generator ``x.o`` and a lower generator ``x.u`` per semiarc, has

    p.o  = p'.u . q.u      q'.o = q.u . p'.u
    q.o  = q'.u . p.u      p'.o = p.u . q'.u
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from . import kernels
from .gauss import GaussCode, crossings, semiarcs
from .switch import FiniteDoodleSwitch

DEFAULT_LIST_CAP = 10**6
BRUTE_FORCE_GUARD = 10**8


class CapExceeded(RuntimeError):
    """Raised instead of silently truncating a listing or an exhaustive scan."""


@dataclass(frozen=True)
class SwitchPresentation:
    generators: tuple[str, ...]
    relations: tuple[tuple[int, int, int], ...]  # indices into generators

    def __post_init__(self):
        k = len(self.generators)
        for rel in self.relations:
            if len(rel) != 3 or not all(0 <= g < k for g in rel):
                raise ValueError(f"relation {rel} references undeclared generators")

    def named_relations(self) -> list[tuple[str, str, str]]:
        g = self.generators
        return [(g[l], g[x], g[y]) for l, x, y in self.relations]

    def relation_set(self) -> frozenset:
        return frozenset(self.named_relations())

    def __str__(self) -> str:
        rels = ", ".join(f"{l} = {x}.{y}" for l, x, y in self.named_relations())
        return f"<{', '.join(self.generators)} | {rels}>"


@dataclass(frozen=True)
class Coloring:
    assignment: dict

    def values(self, generators: Sequence[str]) -> tuple[int, ...]:
        return tuple(self.assignment[g] for g in generators)


def fds(D: GaussCode) -> SwitchPresentation:
    gens = tuple(str(a.id) for a in semiarcs(D))
    rels = []
    for cr in crossings(D):
        P, Q = cr.positive, cr.negative
        rels.append((P.inc, P.out, Q.inc))
        rels.append((Q.out, Q.inc, P.out))
    return SwitchPresentation(gens, tuple(rels))


def upper(arc: int) -> int:
    return 2 * arc


def lower(arc: int) -> int:
    return 2 * arc + 1


def dfds(D: GaussCode) -> SwitchPresentation:
    gens = tuple(f"{a.id}.{s}" for a in semiarcs(D) for s in ("o", "u"))
    rels = []
    for cr in crossings(D):
        P, Q = cr.positive, cr.negative
        rels.append((upper(P.inc), lower(P.out), lower(Q.inc)))
        rels.append((upper(Q.out), lower(Q.inc), lower(P.out)))
        rels.append((upper(Q.inc), lower(Q.out), lower(P.inc)))
        rels.append((upper(P.out), lower(P.inc), lower(Q.out)))
    return SwitchPresentation(gens, tuple(rels))


# -- counting ----------------------------------------------------------------

@functools.lru_cache(maxsize=4096)
def _flat_tables(table: tuple[tuple[int, ...], ...]) -> tuple[list[int], list[int]]:
    n = len(table)
    mul = [table[x][y] - 1 for x in range(n) for y in range(n)]
    div = [0] * (n * n)
    for u in range(n):
        for y in range(n):
            div[mul[u * n + y] * n + y] = u
    return mul, div


@dataclass(frozen=True)
class Plan:
    """Static elimination order: branch on some generators, derive the rest."""

    var: tuple[int, ...]
    kind: tuple[int, ...]
    srca: tuple[int, ...]
    srcb: tuple[int, ...]
    check_start: tuple[int, ...]
    checks: tuple[int, ...]

    @property
    def branches(self) -> int:
        return sum(1 for k in self.kind if k == kernels.BRANCH)


def make_plan(variables: Sequence[int], relations: Sequence[tuple[int, int, int]]) -> Plan:
    """Order ``variables`` so that each is derived from a relation when possible.

    ``l`` follows from ``x, y`` by multiplication, ``x`` from ``l, y`` by
    right division.  Otherwise branch on the unassigned variable touching
    the most relations with an assigned member (ties: more relations, then
    lower index).
    """
    rels = [tuple(r) for r in relations]
    occ: dict[int, list[int]] = {v: [] for v in variables}
    for ri, (l, x, y) in enumerate(rels):
        for g in {l, x, y}:
            occ[g].append(ri)
    assigned: set[int] = set()
    done_rel = [False] * len(rels)
    var, kind, sa, sb = [], [], [], []
    checks_per_step: list[list[int]] = []

    def settle(v: int, source: Optional[int]) -> None:
        assigned.add(v)
        step_checks = []
        for ri in occ[v]:
            if done_rel[ri] or not all(g in assigned for g in rels[ri]):
                continue
            done_rel[ri] = True
            if ri != source:
                step_checks.append(ri)
        checks_per_step.append(step_checks)

    def derivable() -> Optional[tuple[int, int, int, int, int]]:
        for ri, (l, x, y) in enumerate(rels):
            if done_rel[ri]:
                continue
            if l not in assigned and x in assigned and y in assigned:
                return l, kernels.MUL, x, y, ri
            if x not in assigned and x != y and l in assigned and y in assigned:
                return x, kernels.DIV, l, y, ri
        return None

    remaining = list(variables)
    while len(assigned) < len(remaining):
        d = derivable()
        if d is not None:
            v, kd, a, b, ri = d
            var.append(v); kind.append(kd); sa.append(a); sb.append(b)
            settle(v, ri)
            continue
        best, best_key = None, None
        for v in remaining:
            if v in assigned:
                continue
            touching = sum(1 for ri in occ[v] if any(g in assigned for g in rels[ri]))
            key = (-touching, -len(occ[v]), v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        var.append(best); kind.append(kernels.BRANCH); sa.append(0); sb.append(0)
        settle(best, None)
    starts = [0]
    flat: list[int] = []
    for cs in checks_per_step:
        for ri in cs:
            flat.extend(rels[ri])
        starts.append(starts[-1] + len(cs))
    return Plan(tuple(var), tuple(kind), tuple(sa), tuple(sb), tuple(starts), tuple(flat))


def _blocks(P: SwitchPresentation) -> tuple[int, list[tuple[list[int], list[tuple[int, int, int]]]]]:
    """Split into connected pieces; returns (#isolated generators, pieces)."""
    k = len(P.generators)
    parent = list(range(k))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    used = [False] * k
    for l, x, y in P.relations:
        used[l] = used[x] = used[y] = True
        for g in (x, y):
            ra, rb = find(l), find(g)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for g in range(k):
        if used[g]:
            groups.setdefault(find(g), []).append(g)
    rels_by: dict[int, list] = {r: [] for r in groups}
    for rel in P.relations:
        rels_by[find(rel[0])].append(rel)
    isolated = sum(1 for u in used if not u)
    return isolated, [(groups[r], rels_by[r]) for r in sorted(groups)]


@functools.lru_cache(maxsize=1024)
def _plans(P: SwitchPresentation) -> tuple[int, tuple[Plan, ...]]:
    isolated, pieces = _blocks(P)
    return isolated, tuple(make_plan(gens, rels) for gens, rels in pieces)


def count_colorings(P: SwitchPresentation, T: FiniteDoodleSwitch) -> int:
    """Number of assignments generators -> T satisfying every relation."""
    n = T.order
    mul, div = _flat_tables(T.table)
    isolated, plans = _plans(P)
    total = n**isolated
    for plan in plans:
        c = kernels.count_plan(n, mul, div, plan.var, plan.kind, plan.srca, plan.srcb,
                               plan.check_start, plan.checks)
        if c == 0:
            return 0
        total *= c
    return total


def col(D: GaussCode, T: FiniteDoodleSwitch) -> int:
    return count_colorings(fds(D), T)


def count_doubled_colorings(D: GaussCode, T: FiniteDoodleSwitch) -> int:
    return count_colorings(dfds(D), T)


dcol = count_doubled_colorings


def brute_force_count(P: SwitchPresentation, T: FiniteDoodleSwitch,
                      guard: int = BRUTE_FORCE_GUARD) -> int:
    """Scan all ``n**k`` assignments; independent of the elimination planner."""
    n, k = T.order, len(P.generators)
    if n**k > guard:
        raise CapExceeded(f"{n}**{k} assignments exceed the brute-force guard {guard}")
    mul, _ = _flat_tables(T.table)
    flat = [g for rel in P.relations for g in rel]
    return kernels.brute_force(n, mul, k, flat)


def _iter_plan(plan: Plan, n: int, mul: list[int], div: list[int], nvars: int) -> Iterator[list[int]]:
    val = [0] * nvars
    steps = len(plan.var)

    def rec(k):
        if k == steps:
            yield list(val)
            return
        kd = plan.kind[k]
        v = plan.var[k]
        if kd == kernels.BRANCH:
            cands = range(n)
        elif kd == kernels.MUL:
            cands = (mul[val[plan.srca[k]] * n + val[plan.srcb[k]]],)
        else:
            cands = (div[val[plan.srca[k]] * n + val[plan.srcb[k]]],)
        for c in cands:
            val[v] = c
            ok = True
            for r in range(plan.check_start[k], plan.check_start[k + 1]):
                l, x, y = plan.checks[3 * r:3 * r + 3]
                if val[l] != mul[val[x] * n + val[y]]:
                    ok = False
                    break
            if ok:
                yield from rec(k + 1)

    yield from rec(0)


def list_colorings(P: SwitchPresentation, T: FiniteDoodleSwitch,
                   cap: int = DEFAULT_LIST_CAP) -> list[Coloring]:
    """All colorings, sorted lexicographically by generator order.

    Refuses with :class:`CapExceeded` when there are more than ``cap``.
    """
    total = count_colorings(P, T)
    if total > cap:
        raise CapExceeded(f"{total} colorings exceed the listing cap {cap}")
    n = T.order
    mul, div = _flat_tables(T.table)
    k = len(P.generators)
    plan = make_plan(range(k), P.relations)
    rows = sorted(tuple(v + 1 for v in vals) for vals in _iter_plan(plan, n, mul, div, k))
    return [Coloring(dict(zip(P.generators, row))) for row in rows]


def simplify(P: SwitchPresentation) -> SwitchPresentation:
    """Drop duplicate relations and eliminate generators defined by a single relation.

    A generator that occurs exactly once overall, as ``l`` or as ``x`` of
    ``l = x.y``, is uniquely determined by the others (product, resp. right
    division), so removing it with its relation keeps every coloring count.
    """
    rels = list(dict.fromkeys(P.relations))
    alive = set(range(len(P.generators)))
    changed = True
    while changed:
        changed = False
        counts: dict[int, int] = {}
        for rel in rels:
            for g in rel:
                counts[g] = counts.get(g, 0) + 1
        for i, (l, x, y) in enumerate(rels):
            victim = None
            if counts.get(l) == 1:
                victim = l
            elif counts.get(x) == 1:
                victim = x
            if victim is not None:
                del rels[i]
                alive.discard(victim)
                changed = True
                break
    keep = sorted(alive)
    index = {g: i for i, g in enumerate(keep)}
    gens = tuple(P.generators[g] for g in keep)
    new_rels = tuple((index[l], index[x], index[y]) for l, x, y in rels)
    return SwitchPresentation(gens, new_rels)
