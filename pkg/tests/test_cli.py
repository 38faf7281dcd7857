import json
import re

import pytest

from hexatile import formulas
from hexatile.cli import main
from hexatile.matchoracle import BUDGET_ENV


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_examples(capsys):
    assert run(capsys, "count", "--class", "cs", "--n", "2", "--x", "3", "--method", "formula")[:2] == (0, "8\n")
    assert run(capsys, "count", "--class", "base", "--a", "2", "--b", "2", "--c", "2", "--method", "brute")[1] == "20\n"
    assert run(capsys, "count", "--class", "tssc", "--size", "6", "--method", "formula")[1] == "7\n"


CASES = [
    ("base", "--a", "2", "--b", "3", "--c", "1"),
    ("cs", "--n", "2", "--x", "2"),
    ("cs", "--n", "3", "--x", "0"),
    ("cstc", "--n", "4", "--x", "2"),
    ("cssc", "--size", "4"),
    ("tssc", "--size", "4"),
    ("sc", "--a", "2", "--c", "2"),
    ("sc", "--a", "2", "--c", "3"),
    ("sc", "--a", "3", "--c", "2"),
    ("la", "--n", "2", "--x", "2"),
    ("lb", "--n", "2", "--x", "1"),
    ("lc", "--n", "2", "--x", "1"),
]


@pytest.mark.parametrize("case", CASES, ids=lambda c: " ".join(c))
def test_count_methods_agree(capsys, case):
    cls, *params = case
    outs = {run(capsys, "count", "--class", cls, *params, "--method", m)[1] for m in ("formula", "det", "brute")}
    assert len(outs) == 1


def test_count_tc_methods(capsys):
    assert run(capsys, "count", "--class", "tc", "--a", "3", "--b", "1")[1] == "5\n"
    assert run(capsys, "count", "--class", "tc", "--a", "3", "--b", "1", "--method", "brute")[1] == "5\n"
    assert run(capsys, "count", "--class", "tc", "--a", "3", "--b", "1", "--method", "det")[0] == 2


def test_count_rational_output(capsys):
    assert run(capsys, "count", "--class", "la", "--n", "1", "--x", "1", "--method", "brute")[1] == "1/2\n"


def test_count_parity_zero(capsys):
    code, out, err = run(capsys, "count", "--class", "cstc", "--n", "3", "--x", "2")
    assert (code, out) == (0, "0\n") and "note" in err
    code, out, err = run(capsys, "count", "--class", "sc", "--a", "3", "--c", "3", "--method", "brute")
    assert (code, out) == (0, "0\n") and "note" in err


def test_count_usage_and_resource(capsys, monkeypatch):
    assert run(capsys, "count", "--class", "cs", "--n", "2")[0] == 2
    assert run(capsys, "count", "--class", "nope")[0] == 2
    monkeypatch.setenv(BUDGET_ENV, "10")
    assert run(capsys, "count", "--class", "base", "--a", "2", "--b", "2", "--c", "2", "--method", "brute")[0] == 3


def test_verify_single_json(capsys):
    code, out, _ = run(capsys, "verify", "--id", "I4.5a", "--n", "1", "--x", "3", "--json")
    doc = json.loads(out)
    assert code == 0
    assert (doc["lhs"], doc["rhs"], doc["ok"]) == ("11", "11", True)


def test_verify_all_json(capsys):
    code, out, _ = run(capsys, "verify", "--all", "--max-n", "2", "--max-x", "2", "--json")
    doc = json.loads(out)
    assert code == 0 and isinstance(doc, list) and doc
    assert all(r["ok"] for r in doc)
    for r in doc:
        for side in ("lhs", "rhs"):
            assert re.fullmatch(r"-?\d+(/\d+)?", r[side])


def test_verify_usage(capsys):
    assert run(capsys, "verify", "--id", "bogus")[0] == 2
    assert run(capsys, "verify")[0] == 2
    assert run(capsys, "verify", "--id", "I3.1", "--n", "2")[0] == 2
    assert run(capsys, "verify", "--id", "I3.1", "--n", "9", "--x", "9", "--brute", "always")[0] == 3


def test_verify_poly_text(capsys):
    code, out, _ = run(capsys, "verify", "--id", "I3.3", "--n", "2")
    assert code == 0 and "x + 5" in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    real = formulas.detK_closed
    monkeypatch.setattr(formulas, "detK_closed", lambda n, x, y: real(n, x, y) * 2)
    code, out, _ = run(capsys, "verify", "--id", "I2.2", "--n", "2", "--x", "1", "--y", "1", "--json")
    assert code == 1 and json.loads(out)["ok"] is False


def _svg(capsys, *argv):
    code, out, _ = run(capsys, "render", *argv)
    assert code == 0
    return out


def test_render_examples(capsys, tmp_path):
    path = tmp_path / "h.svg"
    run(capsys, "render", "--region", "hexagon", "--a", "2", "--b", "2", "--c", "2", "--out", str(path))
    assert path.read_text().count('class="lozenge"') == 12
    svg = _svg(capsys, "--region", "hexagon", "--a", "1", "--b", "1", "--c", "1", "--tiling-index", "1")
    assert svg.count('class="lozenge"') == 3
    svg = _svg(capsys, "--region", "cored", "--n", "1", "--x", "1")
    assert svg.count('class="lozenge"') == 6 and svg.count('class="hole"') == 1


def test_render_markers_and_document(capsys):
    svg = _svg(capsys, "--region", "A", "--n", "2", "--x", "1")
    assert svg.count('class="marker"') == 2
    assert svg.startswith("<?xml") and 'version="1.1"' in svg and svg.rstrip().endswith("</svg>")
    import xml.etree.ElementTree as ET

    ET.fromstring(svg.split("\n", 1)[1])


def test_render_deterministic(capsys):
    args = ("--region", "cored", "--n", "2", "--x", "1", "--tiling-index", "3")
    assert _svg(capsys, *args) == _svg(capsys, *args)


def test_render_bad_index(capsys):
    assert run(capsys, "render", "--region", "hexagon", "--a", "1", "--b", "1", "--c", "1", "--tiling-index", "2")[0] == 2
