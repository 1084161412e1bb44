import json

import pytest

from coserial.cli import main
from coserial.fixtures import fixture_text


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_crown_exits_zero(capsys, write):
    code, out, _ = run(capsys, "classify", write("c.q", fixture_text("crown", 3)))
    data = json.loads(out)
    assert code == 0
    assert data["components"][0]["shape"] == "ATilde_3"
    assert data["hom_computable"]["value"] is False


def test_classify_finite_dimensional_flag(capsys, write):
    path = write("c.q", fixture_text("crown", 2))
    _, out, _ = run(capsys, "classify", "--finite-dimensional", path)
    assert json.loads(out)["hom_computable"]["value"] is True


def test_classify_vee_exits_one(capsys, write):
    code, out, _ = run(capsys, "classify", write("v.q", fixture_text("vee")))
    assert code == 1
    assert json.loads(out)["right_serial"]["witness"]["vertex"] == "3"


def test_malformed_input_exits_two_with_line(capsys, write):
    code, _, err = run(capsys, "classify", write("bad.q", "vertex a\narrow a b\n"))
    assert code == 2 and "line 2" in err


def test_missing_file_exits_two(capsys, tmp_path):
    code, _, err = run(capsys, "classify", str(tmp_path / "nope.q"))
    assert code == 2 and err.startswith("error:")


def test_localize_triangle(capsys, write):
    code, out, _ = run(capsys, "localize", write("t.q", fixture_text("triangle")), "--keep", "1,3")
    dsl, evidence = out.split("---\n")
    assert code == 0
    assert "arrow 1 3 2 2" in dsl
    assert json.loads(evidence)["arrows"][0]["label"] == [2, 2]


def test_localize_evidence_file(capsys, write, tmp_path):
    target = tmp_path / "ev.json"
    code, out, _ = run(capsys, "localize", write("t.q", fixture_text("triangle")), "--keep", "1,3",
                       "--evidence", str(target))
    assert code == 0 and "---" not in out
    assert json.loads(target.read_text())["finite"] is True


def test_localize_infinite_exits_one(capsys, write):
    text = "vertex x\nvertex t\nvertex z\narrow x t\narrow t t\narrow t z\n"
    code, _, err = run(capsys, "localize", write("i.q", text), "--keep", "x,z")
    assert code == 1 and "infinite" in err


def test_arq_verify(capsys, write, tmp_path):
    dot = tmp_path / "ar.dot"
    code, out, err = run(capsys, "arq", write("c.q", fixture_text("crown", 2)), "--depth", "3", "--verify",
                         "--dot", str(dot))
    data = json.loads(out)
    assert code == 0
    assert data["tube_rank"] == 2
    assert all(r["ok"] for r in data["verification"]["results"])
    assert "verified 6/6" in err
    assert "style=dashed" in dot.read_text()


def test_arq_refuses_non_serial(capsys, write):
    code, _, err = run(capsys, "arq", write("v.q", fixture_text("vee")), "--depth", "2")
    assert code == 1
    assert '"vertex": "3"' in err


def test_arq_rejects_bad_depth(capsys, write):
    code, _, _ = run(capsys, "arq", write("l.q", fixture_text("line", 2)), "--depth", "0")
    assert code == 2


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "eg", "--seed", "3")
    assert code == 0 and out.startswith("[PASS] criterion 11")


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nonsense")
    assert code == 2 and "unknown suite" in err


def test_gen_matches_fixture_text(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "window-left", "2")
    assert code == 0 and out == fixture_text("window-left", 2)
    target = tmp_path / "l.q"
    run(capsys, "gen", "line", "3", "-o", str(target))
    assert target.read_text() == fixture_text("line", 3)


def test_gen_unknown_name(capsys):
    code, _, err = run(capsys, "gen", "hexagon")
    assert code == 2 and "unknown fixture" in err


def test_output_is_deterministic(capsys, write):
    path = write("w.q", fixture_text("window-biinfinite", 2))
    first = run(capsys, "arq", path, "--depth", "3")
    second = run(capsys, "arq", path, "--depth", "3")
    assert first == second


def test_no_command_exits_two(capsys):
    assert main([]) == 2
