"""Shipped example switches and diagrams.

``DOODLE_ASSET_DIR`` replaces the built-in asset directory.
"""
from __future__ import annotations

import os
from pathlib import Path

from .gauss import GaussCode, parse
from .switch import FiniteDoodleSwitch, load_switch

SWITCH_NAMES = ("T", "Tprime", "Tdoubleprime")
DIAGRAM_NAMES = ("U", "d31")


def asset_dir() -> Path:
    env = os.environ.get("DOODLE_ASSET_DIR")
    return Path(env) if env else Path(__file__).with_name("assets")


def example_switches() -> dict[str, FiniteDoodleSwitch]:
    return {name: load_switch(asset_dir() / f"{name}.switch") for name in SWITCH_NAMES}


def example_diagrams() -> dict[str, GaussCode]:
    return {name: load_diagram(asset_dir() / f"{name}.gauss") for name in DIAGRAM_NAMES}


def load_diagram(path) -> GaussCode:
    return parse(Path(path).read_text())


def resolve(arg: str, suffix: str) -> Path | None:
    """An existing path, or the asset named ``arg`` (with or without suffix)."""
    p = Path(arg)
    if p.is_file():
        return p
    for cand in (asset_dir() / arg, asset_dir() / f"{arg}{suffix}"):
        if cand.is_file():
            return cand
    return None
