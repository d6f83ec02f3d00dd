"""Combinatorial double coverings of signed Gauss codes.

Every semiarc ``x`` lifts to an upper copy ``(x, 0)`` and a lower copy
``(x, 1)``; every crossing ``v`` lifts to two crossings ``v.1`` and ``v.2``.
A :class:`CoverVariant` fixes how the lifted strands are routed through the
two lifted crossings.  The variant recorded in :data:`SELECTED_VARIANT` is the
one for which the fundamental presentation of the cover coincides with the
doubled presentation of the base, checked by comparing coloring counts
(:func:`select_variant`; log in ``assets/cover_variant.json``).
"""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from .gauss import GaussCode, Visit, crossings, random_code, semiarcs
from .moves import DEFAULT_SIZE_CAP, random_walk
from .presentation import col, dcol
from .switch import FiniteDoodleSwitch

ASSET = Path(__file__).with_name("assets") / "cover_variant.json"


@dataclass(frozen=True, order=True)
class CoverVariant:
    # lift of the positive strand's incoming semiarc that enters copy 1: 1 upper, 2 lower
    lift_routing: int = 1
    # chirality of copy 2: "mirror" puts the base's negative strand on its positive passage
    k2_form: str = "mirror"
    # "swap": a lifted strand changes level when passing a lifted crossing
    gluing: str = "swap"

    def describe(self) -> str:
        return f"lift_routing={self.lift_routing} k2_form={self.k2_form} gluing={self.gluing}"


ALL_VARIANTS = tuple(
    CoverVariant(r, k, g)
    for r, k, g in itertools.product((1, 2), ("mirror", "same"), ("keep", "swap"))
)

SELECTED_VARIANT = CoverVariant(lift_routing=1, k2_form="mirror", gluing="swap")


def _passages(D: GaussCode, variant: CoverVariant):
    """Lifted passages as (symbol, sign, in_lift, out_lift); lifts are (arc, level)."""
    r = 0 if variant.lift_routing == 1 else 1
    g = 1 if variant.gluing == "swap" else 0
    out = []
    for cr in crossings(D):
        P, Q = cr.positive, cr.negative
        # copy 1: positive strand enters at level r
        out.append((f"{cr.crossing}.1", 1, (P.inc, r), (P.out, r ^ g)))
        out.append((f"{cr.crossing}.1", -1, (Q.inc, 1 - r), (Q.out, (1 - r) ^ g)))
        # copy 2: the remaining lifts
        s = -1 if variant.k2_form == "mirror" else 1
        out.append((f"{cr.crossing}.2", s, (P.inc, 1 - r), (P.out, (1 - r) ^ g)))
        out.append((f"{cr.crossing}.2", -s, (Q.inc, r), (Q.out, r ^ g)))
    return out


def lift_cover(D: GaussCode, variant: CoverVariant = SELECTED_VARIANT
               ) -> tuple[GaussCode, dict[int, tuple[int, int]]]:
    """Build the cover and report which lift of which base semiarc each cover semiarc is."""
    head: dict[tuple[int, int], tuple[str, int, tuple[int, int]]] = {}
    for sym, sign, lin, lout in _passages(D, variant):
        head[lin] = (sym, sign, lout)
    lifts = [(a.id, lvl) for a in semiarcs(D) for lvl in (0, 1)]
    seen: set[tuple[int, int]] = set()
    comps: list[tuple[Visit, ...]] = []
    arc_of: list[list[tuple[int, int]]] = []
    for start in lifts:
        if start in seen:
            continue
        if start not in head:
            seen.add(start)
            comps.append(())
            arc_of.append([start])
            continue
        visits, outs = [], []
        cur = start
        while cur not in seen:
            seen.add(cur)
            sym, sign, nxt = head[cur]
            visits.append(Visit(sym, sign))
            outs.append(nxt)
            cur = nxt
        comps.append(tuple(visits))
        arc_of.append(outs)
    code = GaussCode(tuple(comps))
    label = {}
    for off, arcs in zip(code.arc_offsets(), arc_of):
        for i, lift in enumerate(arcs):
            label[off + i] = lift
    return code, label


def double_cover(D: GaussCode, variant: CoverVariant = SELECTED_VARIANT) -> GaussCode:
    return lift_cover(D, variant)[0]


@dataclass
class VariantTrial:
    variant: CoverVariant
    passed: bool
    checks: int
    counterexample: Optional[dict] = None


class NoPassingVariant(RuntimeError):
    def __init__(self, trials: list[VariantTrial]):
        self.trials = trials
        lines = [f"{t.variant.describe()}: {t.counterexample}" for t in trials]
        super().__init__("no cover variant matches doubled colorings:\n" + "\n".join(lines))


def trial_variant(variant: CoverVariant, diagrams: Sequence[GaussCode],
                  switches: Sequence[FiniteDoodleSwitch]) -> VariantTrial:
    checks = 0
    for D in diagrams:
        C = double_cover(D, variant)
        for T in switches:
            checks += 1
            got, want = col(C, T), dcol(D, T)
            if got != want:
                return VariantTrial(variant, False, checks, {
                    "diagram": str(D), "switch": [list(r) for r in T.table],
                    "col_cover": got, "dcol": want})
    return VariantTrial(variant, True, checks)


def select_variant(diagrams: Sequence[GaussCode], switches: Sequence[FiniteDoodleSwitch],
                   variants: Sequence[CoverVariant] = ALL_VARIANTS
                   ) -> tuple[CoverVariant, list[VariantTrial]]:
    """First variant (in sorted order) with col(cover(D), T) == dcol(D, T) on the battery."""
    if not diagrams or not switches:
        raise ValueError("batteries must be non-empty")
    trials = [trial_variant(v, diagrams, switches) for v in sorted(variants)]
    for t in trials:
        if t.passed:
            return t.variant, trials
    raise NoPassingVariant(trials)


@dataclass
class CoverInvarianceReport:
    ok: bool
    seed: int
    steps: int
    walked: str
    events: list[str] = field(default_factory=list)
    mismatches: list[dict] = field(default_factory=list)


def cover_invariance_check(D: GaussCode, walk_seed: int, steps: int,
                   switches: Sequence[FiniteDoodleSwitch],
                   variant: CoverVariant = SELECTED_VARIANT,
                   size_cap: int = DEFAULT_SIZE_CAP) -> CoverInvarianceReport:
    """Compare coloring counts of the covers of ``D`` and of a random walk from ``D``."""
    D2, events = random_walk(D, steps, walk_seed, size_cap)
    C1, C2 = double_cover(D, variant), double_cover(D2, variant)
    bad = []
    for T in switches:
        a, b = col(C1, T), col(C2, T)
        if a != b:
            bad.append({"switch": [list(r) for r in T.table], "before": a, "after": b})
    return CoverInvarianceReport(not bad, walk_seed, steps, str(D2), [e.to_line() for e in events], bad)


# -- the recorded selection run ----------------------------------------------

SELECTION_SEED = 20240401


def selection_battery() -> tuple[list[GaussCode], list[FiniteDoodleSwitch]]:
    """Diagrams and switches used for the recorded variant selection."""
    from .data import example_diagrams, example_switches
    from .switch import enumerate_switches, projection_switch

    rng = random.Random(SELECTION_SEED)
    diagrams = list(example_diagrams().values())
    while len(diagrams) < 24:
        n = rng.randint(1, 6)
        diagrams.append(random_code(rng, n, rng.randint(1, 2)))
    switches = list(example_switches().values()) + [projection_switch(2), projection_switch(3)]
    switches += enumerate_switches(3, up_to_iso=True)
    return diagrams, switches


def run_selection() -> dict:
    diagrams, switches = selection_battery()
    try:
        chosen, trials = select_variant(diagrams, switches)
        status = "selected"
    except NoPassingVariant as exc:
        chosen, trials, status = None, exc.trials, "quarantined"
    return {
        "status": status,
        "variant": asdict(chosen) if chosen else None,
        "battery": {
            "seed": SELECTION_SEED,
            "diagrams": [str(D) for D in diagrams],
            "switches": [[list(r) for r in T.table] for T in switches],
        },
        "trials": [
            {"variant": asdict(t.variant), "passed": t.passed, "checks": t.checks,
             "counterexample": t.counterexample}
            for t in trials
        ],
    }


def load_selection(path: Optional[Path] = None) -> dict:
    """The recorded selection run (honours ``DOODLE_ASSET_DIR``)."""
    from .data import asset_dir

    return json.loads(Path(path or asset_dir() / ASSET.name).read_text())


def cover_available() -> bool:
    """False when the recorded selection found no passing variant."""
    try:
        return load_selection()["status"] == "selected"
    except (OSError, KeyError, ValueError):
        return False


def variant_from_record(record: dict) -> CoverVariant:
    return CoverVariant(**record["variant"])


if __name__ == "__main__":
    ASSET.write_text(json.dumps(run_selection(), indent=2) + "\n")
    print(ASSET.read_text().split('"battery"')[0])
