import json

import pytest

from tilting.core import golden
from tilting.core.errors import InvalidInput
from tilting.core.golden import run_golden
from tilting.core.scalars import qint
from tilting.core.tiltcell import main
from tilting.utils.config import parse_signs
from tilting.utils.logging import mismatch, setup_events_logger


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def document(out):
    """The JSON document in out; log lines may surround it."""
    doc, _ = json.JSONDecoder().raw_decode(out[out.index('{\n  "header"'):])
    return doc


def test_help(capsys):
    code, out = run(capsys, "-h")
    assert code == 0
    assert "Usage" in out
    assert main([]) == 0


def test_decompose(capsys):
    code, out = run(capsys, "decompose", "--l", "3", "--power", "3")
    assert code == 0
    doc = document(out)
    assert doc["header"]["context"] == "l=3"
    assert doc["decomposition"] == {"3": 1, "1": 1}
    assert doc["end_dimension"] == 5


def test_decompose_tensor(capsys):
    code, out = run(capsys, "decompose", "--l", "3", "--tensor", "1,2")
    assert code == 0
    assert document(out)["decomposition"] == {"3": 1}


def test_output_is_deterministic(capsys):
    first = document(run(capsys, "decompose", "--generic", "--power", "4")[1])
    second = document(run(capsys, "decompose", "--generic", "--power", "4")[1])
    assert first == second


@pytest.mark.parametrize("argv", [
    ["decompose", "--l", "4", "--power", "3"],
    ["decompose", "--l", "3", "--generic", "--power", "3"],
    ["decompose", "--q", "1/0", "--power", "3"],
    ["frobnicate"],
    ["tl"],
    ["tl", "jw"],
    ["decompose", "--l", "3"],
    ["decompose", "--power", "3", "--format", "xml"],
    ["tl", "compose", "--tl.diagrams", "2; (1,4) (2,3)"],
    ["tl", "jw", "--tl.eps", "+,-,-"],
    ["linkage", "--generic", "--root.lam", "1"],
])
def test_invalid_input_exits_2(capsys, argv):
    assert main(argv) == 2


def test_cellbasis(capsys):
    code, out = run(capsys, "cellbasis", "--l", "3", "--power", "3")
    assert code == 0
    doc = document(out)
    assert doc["poset"] == [1, 3]
    assert doc["dimension"] == 5
    assert doc["degrees"] == [0, 1, 1, 2, 0]
    assert doc["verification"]["passed"]
    assert doc["involution"][1] == ["1,1,2", "1,2,1"]


def test_cellbasis_of_tilting_tensor(capsys):
    code, out = run(capsys, "cellbasis", "--l", "3", "--tensor", "3")
    assert code == 0
    assert document(out)["dimension"] == 2


def test_simples_csv(capsys):
    code, out = run(capsys, "simples", "--generic", "--power", "3", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert "lam,dimC,gramRank,m_lam,agree" in lines
    assert "1,2,2,2,True" in lines
    assert "3,1,1,1,True" in lines


def test_tl_jw(capsys, generic):
    code, out = run(capsys, "tl", "jw", "--power", "2")
    assert code == 0
    doc = document(out)
    assert (doc["bottom"], doc["top"]) == (2, 2)
    assert len(doc["terms"]) == 2


def test_tl_jw_pole_exits_1(capsys):
    assert main(["tl", "jw", "--l", "3", "--power", "3"]) == 1


def test_tl_compose(capsys, generic):
    u = "2; (1,2) (3,4)"
    code, out = run(capsys, "tl", "compose", "--tl.diagrams", f"{u}|{u}")
    assert code == 0
    assert document(out)["terms"] == [[u, qint(2, generic).to_text()]]


def test_tl_pullback(capsys):
    code, out = run(capsys, "tl", "pullback", "--l", "3", "--power", "3")
    assert code == 0
    doc = document(out)
    assert doc["verification"]["passed"]
    assert doc["degrees"] == [0, 1, 1, 2, 0]


def test_linkage(capsys):
    code, out = run(capsys, "linkage", "--l", "3", "--root.lam", "1")
    assert code == 0
    doc = document(out)
    assert doc["linkage_class"] == [1, 3, 7, 9, 13, 15, 19]
    assert not doc["singular"]
    assert doc["alcove"] == 0


def test_a2(capsys):
    assert main(["a2", "--format", "pretty"]) == 0


def test_parse_signs():
    assert parse_signs("+1,-1,+1") == (1, -1, 1)
    assert parse_signs("+,-") == (1, -1)
    assert parse_signs("++-") == (1, 1, -1)
    assert parse_signs("") is None
    with pytest.raises(InvalidInput):
        parse_signs("+,x")


def test_golden_subset_and_events(tmp_path):
    events = setup_events_logger(str(tmp_path), 10 ** 6)
    names = ["TL basis counts", "tableaux to half diagrams"]
    frame = run_golden(events=events, names=names)
    assert list(frame.name) == names
    assert frame.ok.all()
    lines = (tmp_path / "events.log").read_text().splitlines()
    assert [line.split(" | ")[1:3] for line in lines] == [["TL basis counts", "match"],
                                                          ["tableaux to half diagrams", "match"]]
    assert all(line.endswith(" | -") for line in lines)


def test_events_record_the_differing_entries(tmp_path, monkeypatch):
    events = setup_events_logger(str(tmp_path), 10 ** 6)
    monkeypatch.setattr(golden, "CHECKS", [("V^3 degrees", lambda cache: ({(1, 0): 0, (1, 1): 1}, {(1, 0): 0, (1, 1): 0}))])
    assert not run_golden(events=events).ok.any()
    line = (tmp_path / "events.log").read_text().splitlines()[-1]
    assert " | V^3 degrees | MISMATCH | " in line
    assert line.endswith('{"(1, 1)": [1, 0]}')
    assert mismatch([0, 1], [0, 1]) == {}


def test_reproduce_graded_degrees(capsys, monkeypatch):
    keep = [(name, fn) for name, fn in golden.CHECKS if "degrees" in name]
    assert keep
    monkeypatch.setattr(golden, "CHECKS", keep)
    code, out = run(capsys, "reproduce")
    assert code == 0
    assert document(out)["passed"]


def test_reproduce(capsys, monkeypatch):
    keep = [(name, fn) for name, fn in golden.CHECKS if name == "TL basis counts"]
    monkeypatch.setattr(golden, "CHECKS", keep)
    code, out = run(capsys, "reproduce")
    assert code == 0
    assert document(out)["passed"]


def test_reproduce_reports_mismatch(capsys, monkeypatch):
    monkeypatch.setattr(golden, "CHECKS", [("broken", lambda cache: (1, 2))])
    code, out = run(capsys, "reproduce")
    assert code == 1
    doc = document(out)
    assert not doc["passed"]
    assert doc["checks"][0]["name"] == "broken"


def test_output_file_holds_only_the_document(tmp_path, capsys):
    paths = [tmp_path / "first.json", tmp_path / "second.json"]
    for path in paths:
        code = main(["cellbasis", "--l", "3", "--power", "3", "--output", str(path), "--logging.debug"])
        assert code == 0
    capsys.readouterr()
    texts = [path.read_text() for path in paths]
    assert texts[0] == texts[1]
    doc = json.loads(texts[0])
    assert doc["header"]["context"] == "l=3"
    assert doc["verification"]["passed"]
