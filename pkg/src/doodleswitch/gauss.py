"""Signed Gauss codes as the combinatorial model of virtual diagrams.

A code is a tuple of components; each component is the cyclic sequence of
real-crossing passages met while traversing it.  Virtual crossings are not
recorded: any code is realised by a virtual diagram, unique up to virtual
moves.

Every crossing is passed twice, once positively and once negatively.  At the
positive passage the other branch crosses from right to left.  In text the
negative passage is written ``x^-1``; when neither occurrence of a symbol is
marked, its first occurrence is taken as positive, so ``a b c b a c`` is the
word ``a b c b^-1 a^-1 c^-1``.

Semiarc ``k`` of a component leaves passage ``k`` and enters passage
``k+1`` (cyclically).  Global semiarc ids number components in order.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence


class GaussCodeError(ValueError):
    pass


class Visit(NamedTuple):
    symbol: str
    sign: int  # +1 or -1

    def token(self, marked: bool) -> str:
        return f"{self.symbol}^-1" if marked else self.symbol


_TOKEN = re.compile(r"^([A-Za-z0-9_.']+?)(\^-1|\^\{-1\})?$")
EMPTY_TOKEN = "o"


@dataclass(frozen=True)
class GaussCode:
    components: tuple[tuple[Visit, ...], ...]

    def __post_init__(self):
        comps = tuple(tuple(Visit(str(s), int(e)) for s, e in comp) for comp in self.components)
        object.__setattr__(self, "components", comps)
        _validate(comps)

    @property
    def symbols(self) -> list[str]:
        """Crossing symbols in first-visit order."""
        seen: dict[str, None] = {}
        for comp in self.components:
            for v in comp:
                seen.setdefault(v.symbol, None)
        return list(seen)

    @property
    def n_crossings(self) -> int:
        return sum(len(c) for c in self.components) // 2

    @property
    def n_semiarcs(self) -> int:
        return sum(max(1, len(c)) for c in self.components)

    @property
    def n_components(self) -> int:
        return len(self.components)

    def arc_offsets(self) -> list[int]:
        offs, k = [], 0
        for comp in self.components:
            offs.append(k)
            k += max(1, len(comp))
        return offs

    def __str__(self) -> str:
        return serialize(self)


def _validate(comps) -> None:
    if not comps:
        raise GaussCodeError("a code needs at least one component")
    seen: dict[str, list[int]] = {}
    for comp in comps:
        for sym, sign in comp:
            if sign not in (1, -1):
                raise GaussCodeError(f"sign of {sym!r} must be +1 or -1")
            if not _TOKEN.match(sym) or sym == EMPTY_TOKEN or "^" in sym:
                raise GaussCodeError(f"bad crossing symbol {sym!r}")
            seen.setdefault(sym, []).append(sign)
    for sym, signs in seen.items():
        if len(signs) != 2:
            raise GaussCodeError(f"crossing {sym!r} occurs {len(signs)} time(s), expected 2")
        if signs[0] == signs[1]:
            raise GaussCodeError(f"crossing {sym!r} needs one positive and one negative passage")


def parse(text: str) -> GaussCode:
    """Parse ``comp / comp / ...``; ``o`` is a crossing-free component."""
    lines = [ln.split("#", 1)[0] for ln in text.splitlines()]
    body = " ".join(lines).strip()
    if not body:
        raise GaussCodeError("empty Gauss code")
    raw: list[list[tuple[str, bool]]] = []
    for part in body.split("/"):
        toks = part.split()
        if not toks:
            raise GaussCodeError("empty component; write 'o' for a crossing-free loop")
        if toks == [EMPTY_TOKEN]:
            raw.append([])
            continue
        comp = []
        for tok in toks:
            m = _TOKEN.match(tok)
            if not m or tok == EMPTY_TOKEN:
                raise GaussCodeError(f"bad token {tok!r}")
            comp.append((m.group(1), m.group(2) is not None))
        raw.append(comp)
    marks: dict[str, list[bool]] = {}
    for comp in raw:
        for sym, neg in comp:
            marks.setdefault(sym, []).append(neg)
    for sym, ms in marks.items():
        if len(ms) != 2:
            raise GaussCodeError(f"crossing {sym!r} occurs {len(ms)} time(s), expected 2")
        if all(ms):
            raise GaussCodeError(f"both passages of {sym!r} are marked ^-1")
    first_done: set[str] = set()
    comps = []
    for comp in raw:
        out = []
        for sym, neg in comp:
            if any(marks[sym]):
                sign = -1 if neg else 1
            else:
                sign = 1 if sym not in first_done else -1
            first_done.add(sym)
            out.append(Visit(sym, sign))
        comps.append(tuple(out))
    return GaussCode(tuple(comps))


def serialize(D: GaussCode) -> str:
    """Inverse of :func:`parse`; marks a passage only when its first occurrence is negative."""
    first_neg = set()
    seen = set()
    for comp in D.components:
        for v in comp:
            if v.symbol not in seen:
                seen.add(v.symbol)
                if v.sign < 0:
                    first_neg.add(v.symbol)
    parts = []
    for comp in D.components:
        if not comp:
            parts.append(EMPTY_TOKEN)
            continue
        parts.append(" ".join(v.token(v.symbol in first_neg and v.sign < 0) for v in comp))
    return " / ".join(parts)


# -- semiarcs and crossings ------------------------------------------------

@dataclass(frozen=True)
class Semiarc:
    id: int
    component: int
    # passage indices (tail, head) within the component; None for a loop
    span: Optional[tuple[int, int]]


class Transit(NamedTuple):
    inc: int  # incoming semiarc id
    out: int  # outgoing semiarc id
    sign: int
    component: int
    position: int


@dataclass(frozen=True)
class CrossingTransits:
    crossing: str
    transit1: Transit
    transit2: Transit

    @property
    def positive(self) -> Transit:
        return self.transit1 if self.transit1.sign > 0 else self.transit2

    @property
    def negative(self) -> Transit:
        return self.transit2 if self.transit1.sign > 0 else self.transit1

    # local labels of the four semiarcs around the crossing
    @property
    def a(self) -> int:
        return self.transit1.inc

    @property
    def b(self) -> int:
        return self.transit2.inc

    @property
    def c(self) -> int:
        return self.transit2.out

    @property
    def d(self) -> int:
        return self.transit1.out


def semiarcs(D: GaussCode) -> list[Semiarc]:
    out = []
    for ci, (off, comp) in enumerate(zip(D.arc_offsets(), D.components)):
        k = len(comp)
        if k == 0:
            out.append(Semiarc(off, ci, None))
        else:
            out.extend(Semiarc(off + i, ci, (i, (i + 1) % k)) for i in range(k))
    return out


def crossings(D: GaussCode) -> list[CrossingTransits]:
    """One record per crossing, in first-visit order."""
    transits: dict[str, list[Transit]] = {}
    for ci, (off, comp) in enumerate(zip(D.arc_offsets(), D.components)):
        k = len(comp)
        for i, v in enumerate(comp):
            transits.setdefault(v.symbol, []).append(
                Transit(off + (i - 1) % k, off + i, v.sign, ci, i)
            )
    return [CrossingTransits(s, t[0], t[1]) for s, t in transits.items()]


# -- combinators -----------------------------------------------------------

def fresh_symbols(taken: Iterable[str], count: int, stem: str = "x") -> list[str]:
    taken = set(taken)
    out, k = [], 1
    while len(out) < count:
        s = f"{stem}{k}"
        if s not in taken:
            out.append(s)
            taken.add(s)
        k += 1
    return out


def disjoint_union(D1: GaussCode, D2: GaussCode) -> GaussCode:
    clash = [s for s in D2.symbols if s in set(D1.symbols)]
    fresh = fresh_symbols(set(D1.symbols) | set(D2.symbols), len(clash))
    ren = dict(zip(clash, fresh))
    comps2 = tuple(tuple(Visit(ren.get(v.symbol, v.symbol), v.sign) for v in c) for c in D2.components)
    return GaussCode(D1.components + comps2)


def relabel(D: GaussCode, mapping: dict[str, str]) -> GaussCode:
    return GaussCode(tuple(tuple(Visit(mapping.get(v.symbol, v.symbol), v.sign) for v in c)
                           for c in D.components))


def canonical_label(k: int) -> str:
    return "abcdefghijklmnpqrstuvwxyz"[k] if k < 25 else f"c{k}"


def canonical_form(D: GaussCode) -> GaussCode:
    """Least representative under rotations, component order and relabelling.

    Labels are assigned in first-visit order; the comparison key is the tuple
    of component encodings, so crossing-free loops sort first.
    """
    comps = D.components
    best: list = [None, None]

    def encode(comp, rot, labels):
        k = len(comp)
        labels = dict(labels)
        enc = []
        for i in range(k):
            v = comp[(rot + i) % k]
            if v.symbol not in labels:
                labels[v.symbol] = len(labels)
            enc.append(2 * labels[v.symbol] + (0 if v.sign > 0 else 1))
        return tuple(enc), labels

    def search(remaining, prefix, labels, order):
        if not remaining:
            key = tuple(prefix)
            if best[0] is None or key < best[0]:
                best[0], best[1] = key, list(order)
            return
        cands = []
        for idx in remaining:
            comp = comps[idx]
            rots = range(len(comp)) if comp else (0,)
            for r in rots:
                enc, lab = encode(comp, r, labels)
                cands.append((enc, idx, r, lab))
        low = min(c[0] for c in cands)
        # prune: this branch cannot beat an already found key with a larger prefix
        if best[0] is not None and tuple(prefix) + (low,) > best[0][: len(prefix) + 1]:
            return
        seen_states = set()
        for enc, idx, r, lab in cands:
            if enc != low:
                continue
            state = (idx, tuple(sorted(lab.items())))
            if state in seen_states:
                continue
            seen_states.add(state)
            search([i for i in remaining if i != idx], prefix + [enc], lab, order + [(idx, r)])

    search(list(range(len(comps))), [], {}, [])
    out = []
    for enc in best[0]:
        out.append(tuple(Visit(canonical_label(e // 2), 1 if e % 2 == 0 else -1) for e in enc))
    return GaussCode(tuple(out))


def reverse_component(D: GaussCode, index: int) -> GaussCode:
    """Reverse the orientation of one component (passage signs are kept)."""
    comps = list(D.components)
    comps[index] = tuple(reversed(comps[index]))
    return GaussCode(tuple(comps))


def mirror(D: GaussCode, symbols: Optional[Iterable[str]] = None) -> GaussCode:
    """Swap the positive and negative passage of the given crossings (default: all)."""
    flip = set(D.symbols if symbols is None else symbols)
    return GaussCode(tuple(tuple(Visit(v.symbol, -v.sign if v.symbol in flip else v.sign) for v in c)
                           for c in D.components))


def random_code(rng: random.Random, n_crossings: int, n_components: int = 1,
                allow_empty: bool = True) -> GaussCode:
    """A uniformly shuffled signed code with the given sizes (labels a, b, ...)."""
    syms = [canonical_label(k) for k in range(n_crossings)]
    visits = [s for s in syms for _ in range(2)]
    rng.shuffle(visits)
    if n_components <= 1:
        parts = [visits]
    else:
        if allow_empty:
            cuts = sorted(rng.randint(0, len(visits)) for _ in range(n_components - 1))
        elif len(visits) < n_components:
            raise GaussCodeError("not enough passages for non-empty components")
        else:
            cuts = sorted(rng.sample(range(1, len(visits)), n_components - 1))
        bounds = [0] + cuts + [len(visits)]
        parts = [visits[bounds[i]:bounds[i + 1]] for i in range(n_components)]
    first_sign = {s: rng.choice((1, -1)) for s in syms}
    seen: set[str] = set()
    comps = []
    for part in parts:
        comp = []
        for s in part:
            comp.append(Visit(s, first_sign[s] if s not in seen else -first_sign[s]))
            seen.add(s)
        comps.append(tuple(comp))
    return GaussCode(tuple(comps))


def from_words(words: Sequence[Sequence[tuple[str, int]]]) -> GaussCode:
    return GaussCode(tuple(tuple(Visit(s, e) for s, e in w) for w in words))
