from __future__ import annotations

import subprocess
import sys

import pytest

from planecycles.cli import BAD_INPUT, NO, OK, main
from planecycles.model import format_instance, parse_cycles, parse_instance
from planecycles.generate import GenSpec, generate


def fields(text: str) -> dict[str, str]:
    out = {}
    for line in text.splitlines():
        key, _, value = line.lstrip("# ").partition(": ")
        out[key] = value
    return out


@pytest.fixture
def hexagon(tmp_path):
    p = tmp_path / "hex.txt"
    p.write_text("2 0 0\n1 2 1\n-1 2 0\n-2 0 1\n-1 -2 0\n1 -2 1\n")
    return p


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, fields(capsys.readouterr().out)


def test_detect(capsys, hexagon, tmp_path):
    code, f = run(capsys, "detect", hexagon, "-o", tmp_path / "c.txt")
    assert code == OK and f["nonrainbow_cycle"] == "yes"
    assert f["witness"].startswith("C1")
    assert "time_s" in f
    assert len(parse_cycles((tmp_path / "c.txt").read_text())[0]) == 4


def test_detect_negative(capsys, tmp_path):
    p = tmp_path / "sep.txt"
    p.write_text("0 0 0\n1 1 0\n2 0 0\n0 50 1\n1 51 1\n2 50 1\n")
    code, f = run(capsys, "detect", p)
    assert code == NO and f["nonrainbow_cycle"] == "no"


def test_shorten_round_trip(capsys, hexagon, tmp_path):
    cyc = tmp_path / "in.txt"
    cyc.write_text("0 1 2 3 4 5\n")
    out = tmp_path / "out.txt"
    code, f = run(capsys, "shorten", hexagon, "--cycle", cyc, "-o", out)
    assert code == OK and f["length"] == "4" and f["step1"].startswith("chord")
    code, f = run(capsys, "validate", hexagon, "--cycle", out)
    assert code == OK and f["cycle0"].startswith("valid length=4")


def test_shorten_rejects_invalid_cycle(capsys, hexagon, tmp_path):
    cyc = tmp_path / "in.txt"
    cyc.write_text("0 2 1 3 4 5\n")
    code, f = run(capsys, "shorten", hexagon, "--cycle", cyc)
    assert code == BAD_INPUT and "invalid" in f["error"]


def test_validate_reports_violation(capsys, hexagon, tmp_path):
    cyc = tmp_path / "c.txt"
    cyc.write_text("0 1 2 3 4 5\n0 2 1 3\n")
    code, f = run(capsys, "validate", hexagon, "--cycle", cyc)
    assert code == NO
    assert f["cycle0"].startswith("valid") and f["cycle1"].startswith("invalid coloring")


def test_hamilton(capsys, hexagon):
    code, f = run(capsys, "hamilton", hexagon, "--construct")
    assert code == OK and f["hamiltonian"] == "yes" and f["method"] == "near_convex"
    assert sorted(map(int, f["cycle"].split())) == list(range(6))


def test_hamilton_rejects_three_colors(capsys, tmp_path):
    p = tmp_path / "tri.txt"
    p.write_text("0 0 0\n4 0 1\n0 3 2\n")
    code, _ = run(capsys, "hamilton", p)
    assert code == BAD_INPUT


def test_nested_all(capsys, tmp_path):
    inst = tmp_path / "n.txt"
    inst.write_text(format_instance(generate(GenSpec("zone_pairs", n=4, seed=1))))
    code, f = run(capsys, "nested", inst, "--t", "all", "-o", tmp_path / "c.txt")
    assert code == OK
    assert {k for k in f if k.startswith("cycle_")} == {"cycle_4", "cycle_6", "cycle_8"}
    assert [len(c) for c in parse_cycles((tmp_path / "c.txt").read_text())] == [4, 6, 8]


def test_nested_bad_blues(capsys, hexagon):
    code, f = run(capsys, "nested", hexagon, "--t", "2", "--blues", "1,3")
    assert code == BAD_INPUT and "size" in f["error"]


def test_enumerate(capsys, hexagon):
    code, f = run(capsys, "enumerate", hexagon)
    assert code == OK and int(f["total"]) == int(f["length_4"]) + int(f["length_6"])


def test_gen_stdout_is_parseable(capsys):
    code = main(["gen", "--kind", "random", "--n", "8", "--colors", "3", "--seed", "2"])
    out = capsys.readouterr().out
    assert code == OK
    assert len(parse_instance(out)) == 8


def test_missing_file_and_bad_instance(capsys, tmp_path):
    code, f = run(capsys, "detect", tmp_path / "nope.txt")
    assert code == BAD_INPUT
    bad = tmp_path / "bad.txt"
    bad.write_text("")
    code = main(["detect", str(bad)])
    captured = capsys.readouterr()
    assert code == BAD_INPUT
    assert "error: " in captured.out and "planecycles detect" in captured.err


def test_render_and_figure(capsys, hexagon, tmp_path):
    svg = tmp_path / "h.svg"
    code, _ = run(capsys, "render", hexagon, "-o", svg)
    assert code == OK and svg.read_text().lstrip().startswith("<?xml")
    fig = tmp_path / "d.svg"
    code, _ = run(capsys, "detect", hexagon, "--figure", fig)
    assert code == OK and "<svg" in fig.read_text()


def test_module_entry_point(hexagon):
    proc = subprocess.run([sys.executable, "-m", "planecycles", "detect", str(hexagon)],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "witness: C1" in proc.stdout
