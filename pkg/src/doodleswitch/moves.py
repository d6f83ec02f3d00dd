"""R1 and R2 moves as rewrites of signed Gauss codes, and seeded random walks.

Virtual moves are identities on Gauss codes, so only R1 and R2 appear.

* R1 splices two adjacent passages of a fresh crossing (either sign order).
* R2 splices a block ``v w`` at one site and ``v w`` (parallel) or ``w v``
  (antiparallel) at another.  Along each block the two passages have
  opposite signs; the block at the first site carries signs ``(s, -s)``.

Walks use :class:`random.Random` (Mersenne Twister) seeded with the given
integer, so a (code, steps, seed, cap) tuple always replays identically.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .gauss import GaussCode, Visit, canonical_form, fresh_symbols

DEFAULT_SIZE_CAP = 12


class MoveNotApplicable(ValueError):
    pass


@dataclass(frozen=True)
class MoveEvent:
    kind: str  # "R1+", "R1-", "R2+", "R2-"
    labels: tuple[str, ...]
    site: tuple[int, ...] = ()
    variant: Optional[str] = None  # "parallel" | "antiparallel"
    sign: int = 1

    def to_line(self) -> str:
        if self.kind == "R1+":
            c, p = self.site
            return f"R1+ {c} {p} {_tok(self.labels[0], self.sign)}"
        if self.kind == "R1-":
            return f"R1- {self.labels[0]}"
        if self.kind == "R2+":
            c1, p1, c2, p2 = self.site
            v, w = self.labels
            return f"R2+ {c1} {p1} {c2} {p2} {self.variant} {_tok(v, self.sign)} {_tok(w, -self.sign)}"
        return f"R2- {self.labels[0]} {self.labels[1]}"

    @classmethod
    def from_line(cls, line: str) -> "MoveEvent":
        f = line.split()
        try:
            if f[0] == "R1+":
                sym, sign = _untok(f[3])
                return cls("R1+", (sym,), (int(f[1]), int(f[2])), None, sign)
            if f[0] == "R1-":
                return cls("R1-", (f[1],))
            if f[0] == "R2+":
                v, sv = _untok(f[6])
                w, sw = _untok(f[7])
                if sv == sw or f[5] not in ("parallel", "antiparallel"):
                    raise ValueError(line)
                return cls("R2+", (v, w), tuple(int(x) for x in f[1:5]), f[5], sv)
            if f[0] == "R2-":
                return cls("R2-", (f[1], f[2]))
        except (IndexError, ValueError):
            pass
        raise ValueError(f"unparseable move event: {line!r}")


def _tok(sym: str, sign: int) -> str:
    return sym if sign > 0 else f"{sym}^-1"


def _untok(tok: str) -> tuple[str, int]:
    if tok.endswith("^-1"):
        return tok[:-3], -1
    return tok, 1


def _splice(comp: tuple[Visit, ...], pos: int, block: list[Visit]) -> tuple[Visit, ...]:
    return comp[:pos] + tuple(block) + comp[pos:]


def _check_site(D: GaussCode, comp: int, pos: int) -> None:
    if not 0 <= comp < D.n_components:
        raise MoveNotApplicable(f"no component {comp}")
    if not 0 <= pos <= len(D.components[comp]):
        raise MoveNotApplicable(f"position {pos} outside component {comp}")


def r1_insert(D: GaussCode, component: int, position: int, fresh_symbol: str,
              sign: int = 1) -> GaussCode:
    _check_site(D, component, position)
    if fresh_symbol in D.symbols:
        raise MoveNotApplicable(f"symbol {fresh_symbol!r} already used")
    comps = list(D.components)
    block = [Visit(fresh_symbol, sign), Visit(fresh_symbol, -sign)]
    comps[component] = _splice(comps[component], position, block)
    return GaussCode(tuple(comps))


def _locate(D: GaussCode, symbol: str) -> list[tuple[int, int]]:
    return [(ci, i) for ci, comp in enumerate(D.components)
            for i, v in enumerate(comp) if v.symbol == symbol]


def _adjacent(D: GaussCode, a: tuple[int, int], b: tuple[int, int]) -> bool:
    """True if passage b immediately follows passage a on the same component."""
    if a[0] != b[0]:
        return False
    k = len(D.components[a[0]])
    return k > 1 and (a[1] + 1) % k == b[1]


def _remove(D: GaussCode, positions) -> GaussCode:
    drop = set(positions)
    return GaussCode(tuple(tuple(v for i, v in enumerate(comp) if (ci, i) not in drop)
                           for ci, comp in enumerate(D.components)))


def r1_applicable(D: GaussCode, symbol: str) -> bool:
    occ = _locate(D, symbol)
    return len(occ) == 2 and (_adjacent(D, occ[0], occ[1]) or _adjacent(D, occ[1], occ[0]))


def r1_delete(D: GaussCode, symbol: str) -> GaussCode:
    occ = _locate(D, symbol)
    if not occ:
        raise MoveNotApplicable(f"no crossing {symbol!r}")
    if not r1_applicable(D, symbol):
        raise MoveNotApplicable(f"passages of {symbol!r} are not adjacent")
    return _remove(D, occ)


def r2_blocks(v: str, w: str, variant: str, sign: int) -> tuple[list[Visit], list[Visit]]:
    first = [Visit(v, sign), Visit(w, -sign)]
    if variant == "parallel":
        second = [Visit(v, -sign), Visit(w, sign)]
    elif variant == "antiparallel":
        second = [Visit(w, sign), Visit(v, -sign)]
    else:
        raise ValueError(f"unknown R2 variant {variant!r}")
    return first, second


def r2_insert(D: GaussCode, site1: tuple[int, int], site2: tuple[int, int], variant: str,
              fresh_pair: tuple[str, str], sign: int = 1) -> GaussCode:
    """Splice the two blocks before passage ``site1`` and ``site2`` (component, position).

    Positions refer to ``D``; when both sites are the same, the first block
    comes first.
    """
    v, w = fresh_pair
    if v == w or v in D.symbols or w in D.symbols:
        raise MoveNotApplicable("R2 needs two distinct fresh symbols")
    _check_site(D, *site1)
    _check_site(D, *site2)
    b1, b2 = r2_blocks(v, w, variant, sign)
    comps = list(D.components)
    if site1[0] == site2[0]:
        c = site1[0]
        comp = comps[c]
        if site1[1] <= site2[1]:
            comp = _splice(comp, site2[1], b2)
            comp = _splice(comp, site1[1], b1)
        else:
            comp = _splice(comp, site1[1], b1)
            comp = _splice(comp, site2[1], b2)
        comps[c] = comp
    else:
        comps[site1[0]] = _splice(comps[site1[0]], site1[1], b1)
        comps[site2[0]] = _splice(comps[site2[0]], site2[1], b2)
    return GaussCode(tuple(comps))


def _r2_match(D: GaussCode, v: str, w: str):
    """Find two blocks pairing each passage of v with an adjacent passage of w."""
    if v == w:
        return None
    pv, pw = _locate(D, v), _locate(D, w)
    if len(pv) != 2 or len(pw) != 2:
        return None
    for wa, wb in ((pw[0], pw[1]), (pw[1], pw[0])):
        blocks = []
        for vp, wp in ((pv[0], wa), (pv[1], wb)):
            if _adjacent(D, vp, wp):
                blocks.append((vp, wp, "vw"))
            elif _adjacent(D, wp, vp):
                blocks.append((vp, wp, "wv"))
            else:
                break
        else:
            comp = D.components
            # both passages of a block with the same sign: not a bigon
            if all(comp[vp[0]][vp[1]].sign != comp[wp[0]][wp[1]].sign for vp, wp, _ in blocks):
                return blocks
    return None


def r2_applicable(D: GaussCode, v: str, w: str) -> bool:
    return _r2_match(D, v, w) is not None


def r2_delete(D: GaussCode, v: str, w: str) -> GaussCode:
    blocks = _r2_match(D, v, w)
    if blocks is None:
        raise MoveNotApplicable(f"no R2 bigon on crossings {v!r}, {w!r}")
    return _remove(D, [p for b in blocks for p in b[:2]])


def apply_event(D: GaussCode, ev: MoveEvent) -> GaussCode:
    if ev.kind == "R1+":
        return r1_insert(D, ev.site[0], ev.site[1], ev.labels[0], ev.sign)
    if ev.kind == "R1-":
        return r1_delete(D, ev.labels[0])
    if ev.kind == "R2+":
        c1, p1, c2, p2 = ev.site
        return r2_insert(D, (c1, p1), (c2, p2), ev.variant, ev.labels, ev.sign)
    if ev.kind == "R2-":
        return r2_delete(D, *ev.labels)
    raise ValueError(ev.kind)


def replay(D: GaussCode, events) -> GaussCode:
    for ev in events:
        D = apply_event(D, ev)
    return canonical_form(D)


def applicable_moves(D: GaussCode, size_cap: int = DEFAULT_SIZE_CAP) -> list[MoveEvent]:
    """Every applicable move instance, in a fixed order."""
    moves: list[MoveEvent] = []
    n = D.n_crossings
    sites = [(ci, p) for ci, comp in enumerate(D.components) for p in range(max(1, len(comp)))]
    if n + 1 <= size_cap:
        (s,) = fresh_symbols(D.symbols, 1)
        for c, p in sites:
            for sign in (1, -1):
                moves.append(MoveEvent("R1+", (s,), (c, p), None, sign))
    if n + 2 <= size_cap:
        v, w = fresh_symbols(D.symbols, 2)
        for i, s1 in enumerate(sites):
            for s2 in sites[i:]:
                for variant in ("parallel", "antiparallel"):
                    for sign in (1, -1):
                        moves.append(MoveEvent("R2+", (v, w), s1 + s2, variant, sign))
    syms = D.symbols
    for s in syms:
        if r1_applicable(D, s):
            moves.append(MoveEvent("R1-", (s,)))
    for i, v in enumerate(syms):
        for w in syms[i + 1:]:
            if r2_applicable(D, v, w):
                moves.append(MoveEvent("R2-", (v, w)))
    return moves


def random_walk(D: GaussCode, steps: int, seed: int,
                size_cap: int = DEFAULT_SIZE_CAP) -> tuple[GaussCode, list[MoveEvent]]:
    """Apply ``steps`` moves drawn uniformly from the applicable instances.

    Returns the canonical form of the final code and the event log; replaying
    the log from ``D`` with :func:`replay` reproduces it.
    """
    if steps < 0:
        raise ValueError("steps must be non-negative")
    rng = random.Random(seed)
    events = []
    cur = D
    for _ in range(steps):
        options = applicable_moves(cur, size_cap)
        if not options:
            break
        ev = options[rng.randrange(len(options))]
        cur = apply_event(cur, ev)
        events.append(ev)
    return canonical_form(cur), events
