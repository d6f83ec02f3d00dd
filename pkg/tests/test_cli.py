import json
import shutil
import subprocess
import sys

import pytest

from doodleswitch.cli import main
from doodleswitch.data import asset_dir
from doodleswitch.gauss import parse


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def files(tmp_path):
    (tmp_path / "sym.switch").write_text("2\n1 2\n2 1\n")
    (tmp_path / "ragged.switch").write_text("2\n1 2\n2\n")
    (tmp_path / "k.gauss").write_text("a a\n")
    (tmp_path / "bad.gauss").write_text("a b a\n")
    return tmp_path


def test_check_switch(capsys, files):
    assert run(capsys, "check-switch", str(asset_dir() / "T.switch"))[:2] == (0, "valid\n")
    code, out, _ = run(capsys, "check-switch", str(files / "sym.switch"))
    assert (code, out) == (1, "axiom 1 violated at (1,2)\n")
    assert run(capsys, "check-switch", str(files / "ragged.switch"))[0] == 2
    assert run(capsys, "check-switch", str(files / "missing.switch"))[0] == 2


def test_table(capsys):
    code, out, _ = run(capsys, "table", "U", "d31")
    assert code == 0
    assert out.splitlines() == [
        "invariant,U,d31",
        "col(T),4,2", "col(Tprime),3,1", "col(Tdoubleprime),3,1",
        "dcol(T),16,16", "dcol(Tprime),9,9", "dcol(Tdoubleprime),9,9",
    ]
    assert run(capsys, "table")[1] == "invariant\n"
    code, out, _ = run(capsys, "table", "d31", "a a", "--switch", "Tprime")
    assert out.splitlines() == ["invariant,d31,a a", "col(Tprime),1,3", "dcol(Tprime),9,9"]


def test_color_commands(capsys, files):
    assert run(capsys, "color", "d31", "--switch", "T", "--switch", "Tprime")[1] == "2\n1\n"
    assert run(capsys, "dcolor", "U", "--switch", "T")[1] == "16\n"
    out = run(capsys, "color", str(files / "k.gauss"), "--switch", "T", "--csv")[1]
    assert out == "switch,col\nT,4\n"
    assert run(capsys, "color", "d31")[0] == 2
    assert run(capsys, "color", str(files / "bad.gauss"), "--switch", "T")[0] == 2
    assert run(capsys, "color", "d31", "--switch", str(files / "sym.switch"))[0] == 2


def test_list_colorings(capsys):
    code, out, _ = run(capsys, "list-colorings", "d31", "--switch", "T")
    assert out.splitlines() == ["0,1,2,3,4,5", "1,1,1,1,1,1", "3,3,3,3,3,3"]
    out = run(capsys, "list-colorings", "U", "--switch", "T", "--doubled")[1]
    lines = out.splitlines()
    assert lines[0] == "0.o,0.u" and len(lines) == 17
    assert run(capsys, "list-colorings", "U", "--switch", "T", "--doubled", "--cap", "3")[0] == 1
    assert run(capsys, "list-colorings", "U", "--switch", "T", "--cap", "0")[0] == 2


def test_enum(capsys):
    code, out, _ = run(capsys, "enum-switches", "1")
    assert code == 0 and out.count("# S1.") == 1
    out = run(capsys, "enum-switches", "3", "--up-to-iso")[1]
    assert out.count("# S3.") == 7
    assert run(capsys, "enum-switches", "0")[0] == 2


def test_fuzz(capsys):
    code, out, _ = run(capsys, "fuzz", "--seed", "1", "--trials", "10", "--steps", "50")
    assert code == 0
    assert out.strip().endswith("failures=0")
    assert run(capsys, "fuzz", "--trials", "-1")[0] == 2


def test_cover(capsys):
    code, out, _ = run(capsys, "cover", "U")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("# ") and "gluing=swap" in lines[0]
    assert lines[1] == "o / o"
    code, out, _ = run(capsys, "cover", "d31")
    assert code == 0 and parse(out.splitlines()[1]).n_crossings == 6


def test_cover_quarantined(capsys, tmp_path, monkeypatch):
    for f in asset_dir().iterdir():
        if f.is_file():
            shutil.copy(f, tmp_path / f.name)
    (tmp_path / "cover_variant.json").write_text(json.dumps({"status": "quarantined"}))
    monkeypatch.setenv("DOODLE_ASSET_DIR", str(tmp_path))
    code, out, err = run(capsys, "cover", "U")
    assert code == 1 and out == "" and "quarantined" in err
    assert run(capsys, "dcolor", "U", "--switch", "T")[1] == "16\n"


def test_distinguish(capsys):
    code, out, _ = run(capsys, "distinguish", "d31", "d31")
    assert code == 0 and out.startswith("none")
    code, out, _ = run(capsys, "distinguish", "U", "d31")
    head = out.splitlines()[0]
    assert head.startswith("# S3.") and "col" in head
    code, out, _ = run(capsys, "distinguish", "U", "a a", "--max-order", "4")
    assert out.startswith("none")


def test_deterministic_output(capsys):
    a = run(capsys, "fuzz", "--seed", "7", "--trials", "3", "--steps", "20")
    b = run(capsys, "fuzz", "--seed", "7", "--trials", "3", "--steps", "20")
    assert a == b


def test_asset_dir_override(capsys, tmp_path, monkeypatch):
    (tmp_path / "X.switch").write_text("1\n1\n")
    monkeypatch.setenv("DOODLE_ASSET_DIR", str(tmp_path))
    assert run(capsys, "color", "o", "--switch", "X")[1] == "1\n"
    assert run(capsys, "color", "o", "--switch", "T")[0] == 2


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "nope")[0] == 2


def test_console_entry():
    r = subprocess.run([sys.executable, "-m", "doodleswitch.cli", "check-switch", "T"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "valid\n"
