import json
import subprocess
import sys

import pytest

from pclsa.cli import main
from pclsa.corpus import CORPUS


@pytest.fixture
def graph_file(tmp_path):
    def write(name, raw=None):
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(raw if raw is not None else CORPUS[name].to_json()))
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_chromatic_apex_edge(capsys, graph_file):
    code, out, _ = run(capsys, "chromatic", "--graph", graph_file("apex_edge"), "--m", '{"1": 2, "2": 1}')
    assert code == 0
    assert out.splitlines() == ["q^3/2 - q^2/2", "2*C(q,2) + 3*C(q,3)"]


def test_chromatic_json(capsys, graph_file):
    code, out, _ = run(
        capsys, "chromatic", "--graph", graph_file("apex_edge"), "--m", '{"1": 2, "2": 1}', "--format", "json"
    )
    data = json.loads(out)
    assert code == 0
    assert data["coeff_of_q"] == "0"
    assert data["coefficients"] == ["0", "0", "-1/2", "1/2"]


def test_chromatic_single_even_vertex(capsys, graph_file):
    path = graph_file("point", {"vertices": ["a"], "edges": [], "odd": [], "isotropic": []})
    code, out, _ = run(capsys, "chromatic", "--graph", path, "--m", '{"a": 2}')
    assert code == 0 and out.splitlines()[1] == "C(q,2)"


def test_chromatic_brute_value(capsys, graph_file):
    path = graph_file("iso", {"vertices": ["i"], "edges": [], "odd": ["i"], "isotropic": ["i"]})
    code, out, _ = run(capsys, "chromatic", "--graph", path, "--m", '{"i": 2}', "--engine", "brute", "--q", "3")
    assert code == 0 and out.strip() == "6"


def test_engine_inapplicable(capsys):
    code, _, err = run(capsys, "chromatic", "--graph", "c4_mixed", "--m", '{"1":1,"2":1,"3":1,"4":1}', "--engine", "peo")
    assert code == 3 and "not applicable" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["chromatic", "--graph", "apex_edge", "--m", '{"9": 1}'],
        ["chromatic", "--graph", "apex_edge", "--m", "not json"],
        ["chromatic", "--graph", "apex_edge", "--m", "{}"],
        ["chromatic", "--graph", "apex_edge", "--m", '{"1": 1}', "--engine", "magic"],
        ["chromatic", "--graph", "/no/such/file.json", "--m", '{"1": 1}'],
        ["mult", "--graph", "apex_edge"],
        ["roots", "--graph", "apex_edge", "--height", "0"],
        ["bogus"],
    ],
)
def test_invalid_input(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_invalid_graph_file(capsys, graph_file):
    path = graph_file("bad", {"vertices": ["a", "b"], "edges": [], "odd": [], "isotropic": ["a"]})
    code, _, err = run(capsys, "verify", "--graph", path)
    assert code == 2 and "IsotropicNotOdd" in err


def test_mult_examples(capsys):
    code, out, _ = run(capsys, "mult", "--graph", "apex_edge", "--m", '{"1": 1}', "--format", "json")
    assert json.loads(out)["mult"] == 1 and json.loads(out)["classification"] == "SimpleRoot"
    _, out, _ = run(capsys, "mult", "--graph", "apex_edge", "--m", '{"1": 2, "2": 1}', "--format", "json")
    assert json.loads(out)["mult"] == 0 and json.loads(out)["classification"] == "NotRoot"
    _, out, _ = run(capsys, "mult", "--graph", "iso_path3", "--m", '{"1": 2, "2": 2, "3": 2}')
    data = json.loads(out)
    assert data["mult"] == 1 and data["classification"] == "GenericRoot"
    assert data["flags"]["is_star_element"]


def test_roots_listing(capsys):
    code, out, _ = run(capsys, "roots", "--graph", "odd_edge", "--height", "2", "--format", "json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert {"m": {"1": 2}, "mult": 1, "parity": "even"} in rows
    assert {"m": {"1": 1, "2": 1}, "mult": 1, "parity": "even"} in rows


def test_series_indep_path(capsys, graph_file):
    code, out, _ = run(capsys, "series", "indep", "--graph", graph_file("path4"), "--format", "json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert {"exponent": {"2": 1, "4": 3}, "coefficient": "1"} in rows


def test_series_racg_edge(capsys):
    _, out, _ = run(capsys, "series", "racg", "--graph", "even_edge", "--length", "3", "--format", "json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert {"exponent": {"1": 1, "2": 1}, "coefficient": "2"} in rows


def test_series_ug_hilbert_isotropic_vertex(capsys, graph_file):
    path = graph_file("iso", {"vertices": ["i"], "edges": [], "odd": ["i"], "isotropic": ["i"]})
    _, out, _ = run(capsys, "series", "ug-hilbert", "--graph", path, "--format", "json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows == [{"exponent": {}, "coefficient": "1"}, {"exponent": {"i": 1}, "coefficient": "1"}]


def test_series_poincare(capsys):
    _, out, _ = run(capsys, "series", "poincare", "--graph", "even_edge", "--length", "3")
    assert out.splitlines() == ['{"t": 0}\t1', '{"t": 1}\t2', '{"t": 2}\t2', '{"t": 3}\t2']


def test_series_guard(capsys):
    code, _, err = run(capsys, "series", "ug-hilbert", "--graph", "paw", "--cap-degree", "11")
    assert code == 4 and "guard" in err


def test_verify_fixture_full_inversion(capsys, graph_file):
    code, out, _ = run(capsys, "verify", "--graph", graph_file("path4"), "--K", "1,2,3,4")
    assert code == 0
    assert all(line.startswith("PASS") for line in out.splitlines())
    assert any("inversion lemma" in line for line in out.splitlines())


def test_verify_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "--graph", "iso_edge", "--format", "json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert {r["property"] for r in rows} >= {"denominator identity", "inversion lemma", "coxeter growth"}
    assert all(set(r) == {"graph", "property", "ok", "checked", "counterexample", "detail"} for r in rows)


def test_output_is_byte_stable(capsys):
    argv = ["series", "ug-hilbert", "--graph", "paw", "--cap-degree", "4", "--format", "json"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "pclsa", "mult", "--graph", "iso_edge", "--m", '{"1": 2, "2": 2}', "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["classification"] == "NotRoot"


def test_verify_whole_corpus(capsys):
    code, out, _ = run(capsys, "verify", "--corpus")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 8 * len(CORPUS)
    assert all(line.startswith("PASS") for line in lines)


def test_verify_reports_failures(capsys, monkeypatch):
    import pclsa.verify as verify

    monkeypatch.setattr(verify, "SERIES_POWERS", (2,))
    real = verify.marked_chromatic

    def broken(g, m):
        return real(g, m) + 1 if sum(m) == 3 else real(g, m)

    monkeypatch.setattr(verify, "marked_chromatic", broken)
    code, out, _ = run(capsys, "verify", "--graph", "even_edge")
    assert code == 1
    assert any(line.startswith("FAIL") and "first counterexample" in line for line in out.splitlines())
