import io
import json
import os
import subprocess
import sys

import pytest

from acrkit import network
from acrkit.cli import EXIT_INPUT, EXIT_INVARIANT, EXIT_OK, EXIT_UNCLASSIFIED, main

SF1 = "# species: A B\nB -> A\nA + B -> 2B\n"
DISGUISED_SF2 = "5A + B -> 7A\n5A + 3B -> A + 5B\n"
INDEPENDENT_VECTORS = "3A + 5B -> A + 6B\nA + 3B -> 3A + B\n"
CYCLE = "A -> B\nB -> 0\n0 -> A\n"


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_analyze_json(write):
    code, out = run("analyze", "--json", write("sf1.txt", SF1))
    assert code == EXIT_OK
    rep = json.loads(out)
    assert rep["schema"] == "acrkit.report/1"
    assert rep["verdict"]["status"] == "StableACR"
    assert rep["verdict"]["witness"] == "A"
    assert rep["linkage"]["deficiency"] == 1


def test_analyze_text_and_vacuous(write):
    code, out = run("analyze", write("rev.txt", INDEPENDENT_VECTORS))
    assert code == EXIT_OK
    assert "status: VacuousACR_NoPositiveSteadyState" in out


def test_analyze_with_oracle_samples(write):
    code, out = run("analyze", "--json", "--samples", "5", write("p.txt", DISGUISED_SF2))
    rep = json.loads(out)
    assert code == EXIT_OK
    assert rep["verdict"]["status"] == "ACR"
    assert rep["oracle"]["all_samples_acr"] is True
    assert len(rep["oracle"]["samples"]) == 5


def test_require_classification(write):
    path = write("cyc.txt", CYCLE)
    assert run("analyze", path)[0] == EXIT_OK
    assert run("analyze", "--require-classification", path)[0] == EXIT_UNCLASSIFIED
    assert run("canonicalize", path)[0] == EXIT_UNCLASSIFIED


@pytest.mark.parametrize("text", ["", "A -> -> B\n", "A -> A\n"])
def test_input_errors(write, text, capsys):
    assert run("analyze", write("bad.txt", text))[0] == EXIT_INPUT
    assert "acrkit: error:" in capsys.readouterr().err


def test_missing_file():
    assert run("analyze", "/nonexistent/net.txt")[0] == EXIT_INPUT


def test_canonicalize_then_replay(write, tmp_path):
    src = write("p.txt", DISGUISED_SF2)
    trace = str(tmp_path / "trace.json")
    code, out = run("canonicalize", src, "--trace-out", trace)
    assert code == EXIT_OK and "GeneralizedSF(2)" in out
    code, out = run("ops", src, trace)
    assert code == EXIT_OK
    assert network(out.split("# rate constants")[0]) == network("# species: A B\nB -> A\n2A + B -> A + 2B")
    assert "k2 = 1/2*k2'" in out


def test_bare_step_list(write):
    # the disguised SF(2) network just before its final translation
    net = write("mid.txt", "# species: A B\nA + 5B -> 2A + 4B\n3A + 5B -> 2A + 6B\n")
    steps = write("t.json", json.dumps([{"op": "Translate", "params": {"z": [-1, -4]}}]))
    code, out = run("ops", net, steps)
    assert code == EXIT_OK
    assert network(out.split("# rate constants")[0]) == network("# species: A B\nB -> A\n2A + B -> A + 2B")


def test_step_index_in_error(write, capsys):
    steps = write("t.json", json.dumps([{"op": "Translate", "params": {"z": [-9, 0]}}]))
    assert run("ops", write("p.txt", DISGUISED_SF2), steps)[0] == EXIT_INPUT
    assert "step 0" in capsys.readouterr().err


def test_tampered_trace_is_invariant_violation(write, tmp_path):
    src = write("p.txt", DISGUISED_SF2)
    trace = tmp_path / "trace.json"
    run("canonicalize", src, "--trace-out", str(trace))
    data = json.loads(trace.read_text())
    data["target"] = "A -> B\n"
    trace.write_text(json.dumps(data))
    assert run("ops", src, str(trace))[0] == EXIT_INVARIANT


def test_tikz_coordinates(write):
    code, out = run("diagram", "--format", "tikz-coords", write("sf1.txt", SF1))
    assert code == EXIT_OK
    assert "\\draw[->] (0,1) -- (1,0);" in out and "\\draw[->] (1,1) -- (0,2);" in out
    code, out = run("diagram", "--format", "tikz-coords", write("p.txt", DISGUISED_SF2))
    assert "\\draw[->] (5,1) -- (7,0);" in out and "\\draw[->] (5,3) -- (1,5);" in out


def test_diagram_species_limit(write, capsys):
    path = write("four.txt", "A -> B\nC -> D\n")
    assert run("diagram", "--format", "svg", path)[0] == EXIT_INPUT
    assert "at most 3 species" in capsys.readouterr().err
    code, out = run("diagram", "--format", "dot", path)
    assert code == EXIT_OK and out.startswith("digraph")


def test_svg_output_file(write, tmp_path):
    dest = tmp_path / "fig.svg"
    assert run("diagram", "--format", "svg", "-o", str(dest), write("c.txt", "A -> B\nB + C -> 2A\n"))[0] == EXIT_OK
    assert dest.read_text().startswith("<svg")


def test_oracle_fixed_kappa(write):
    code, out = run("oracle", "--json", "--kappa", "3,2", write("p.txt", DISGUISED_SF2))
    rep = json.loads(out)
    assert code == EXIT_OK
    assert rep["species"] == "B"
    assert rep["polynomial"] == "-3*B + 4*B^3"
    assert len(rep["roots"]) == 1


def test_oracle_kappa_count_mismatch(write):
    assert run("oracle", "--kappa", "1,2,3", write("p.txt", DISGUISED_SF2))[0] == EXIT_INPUT


def test_json_is_reproducible(write):
    path = write("p.txt", DISGUISED_SF2)
    first = run("analyze", "--json", "--samples", "6", "--seed", "11", path)[1]
    second = run("analyze", "--json", "--samples", "6", "--seed", "11", path)[1]
    other = run("analyze", "--json", "--samples", "6", "--seed", "12", path)[1]
    assert first == second
    assert first != other


def test_seed_from_environment(write):
    path = write("p.txt", DISGUISED_SF2)
    env = dict(os.environ, ACRKIT_SEED="11")
    proc = subprocess.run([sys.executable, "-m", "acrkit.cli", "analyze", "--json", "--samples", "6", path],
                          capture_output=True, text=True, env=env, check=True)
    assert proc.stdout == run("analyze", "--json", "--samples", "6", "--seed", "11", path)[1]


def test_enumerate():
    code, out = run("enumerate", "--json", "--species", "1", "--reactions", "2", "--max-coeff", "2")
    rep = json.loads(out)
    assert code == EXIT_OK
    assert sum(rep["statuses"].values()) == rep["networks"]
    assert rep["networks"] > 0
