"""End-to-end checks of the arrgraph command line tool."""

import json
import os
import subprocess
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

CLI = os.environ.get("ARRGRAPH_CLI", "arrgraph")
FIXTURES = os.environ.get("ARRGRAPH_FIXTURES")


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True)


def test_check_seq_accepts():
    r = run("check-seq", "4", "3", "3", "2", "2", "2")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["accepted"]
    assert out["plan"]["n"] == 4


def test_check_seq_rejects_with_exit_1():
    r = run("check-seq", "4", "4", "2", "2", "2", "2")
    assert r.returncode == 1
    out = json.loads(r.stdout)
    assert not out["accepted"]
    assert out["reason"] == "PARITY"


def test_check_seq_bad_input_is_exit_2():
    r = run("check-seq", "4", "three", "2")
    assert r.returncode == 2
    assert "error" in r.stderr


def test_realize_analyze_pipe():
    r = run("realize", "4", "3", "3", "2", "2", "2")
    assert r.returncode == 0
    a = run("analyze", "-", stdin=r.stdout)
    assert a.returncode == 0
    report = json.loads(a.stdout)
    assert report["degree_sequence"] == [4, 3, 3, 2, 2, 2]
    assert report["diameter"] == 2


def test_realize_rejection():
    r = run("realize", "2", "2")
    assert r.returncode == 1
    assert not json.loads(r.stdout)["accepted"]


def test_analyze_wiring_text_and_json(tmp_path: Path):
    r = run("analyze", "-", stdin="3: 1 2 1")
    assert r.returncode == 0
    assert json.loads(r.stdout)["diameter"] == 1

    p = tmp_path / "w.json"
    p.write_text(json.dumps({"n": 3, "swaps": [1, 2, 1]}))
    r = run("analyze", str(p))
    assert r.returncode == 0
    assert json.loads(r.stdout)["radius"] == 1


def test_analyze_rejects_invalid_diagram():
    r = run("analyze", "-", stdin="3: 1 1 2")
    assert r.returncode == 1
    assert "rejected" in r.stderr


def test_analyze_garbage_is_exit_2():
    r = run("analyze", "-", stdin="{not json")
    assert r.returncode == 2


def test_analyze_dot_format():
    r = run("analyze", "-", "--format", "dot", stdin="3: 1 2 1")
    assert r.returncode == 0
    assert r.stdout.startswith("graph arrangement {")


def test_enumerate_to_stdout_and_dir(tmp_path: Path):
    r = run("enumerate", "3")
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert lines == ["3: 1 2 1", "3: 2 1 2"]

    out = tmp_path / "diagrams"
    r = run("enumerate", "4", "--out", str(out))
    assert r.returncode == 0
    files = sorted(out.glob("wiring_n4_*.json"))
    assert len(files) == 16
    first = json.loads(files[0].read_text())
    assert first["swaps"] == [1, 2, 1, 3, 2, 1]


def test_enumerate_n6_needs_flag():
    r = run("enumerate", "6")
    assert r.returncode == 2
    assert "--allow-n6" in r.stderr


def test_verify():
    r = run("verify", "--n-max", "4")
    assert r.returncode == 0
    report = json.loads(r.stdout)
    assert report["ok"]
    assert report["total_instances"] == 18

    r = run("verify", "--n-max", "4", "--claims", "diameter,identities")
    assert r.returncode == 0
    assert json.loads(r.stdout)["claims"] == ["identities", "diameter"]

    r = run("verify", "--n-max", "4", "--claim", "no-such")
    assert r.returncode == 2


def test_render_svg_parses(tmp_path: Path):
    p = tmp_path / "pic.svg"
    r = run("render", "-", "--out", str(p), "--mark-outer", stdin="4: 1 2 1 3 2 1")
    assert r.returncode == 0
    root = ET.parse(p).getroot()
    assert root.tag.endswith("svg")
    ns = {"s": "http://www.w3.org/2000/svg"}
    assert len(root.findall(".//s:circle", ns)) == 6


def test_realize_svg_side_output(tmp_path: Path):
    p = tmp_path / "arr.svg"
    r = run("realize", "4", "3", "3", "2", "2", "2", "--svg", str(p))
    assert r.returncode == 0
    assert ET.parse(p).getroot().tag.endswith("svg")


@pytest.mark.skipif(FIXTURES is None, reason="fixture dir not exported")
def test_two_switch_fixture_is_replayable():
    data = json.loads((Path(FIXTURES) / "two_switch_witness.json").read_text())
    d = data["diagram"]
    r = run("analyze", "-", stdin=json.dumps(d))
    assert r.returncode == 0
    assert json.loads(r.stdout)["degree_sequence"] == [4, 3, 3, 2, 2, 2]
    assert len(data["xy"]) == 2 and len(data["zw"]) == 2
