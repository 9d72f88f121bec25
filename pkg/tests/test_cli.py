import json
import subprocess
import sys

import pytest

from edgerank.axioms.fixtures import ranking_example
from edgerank.cli import main
from edgerank.multigraph import Graph, dump_graph, load_graph


@pytest.fixture
def fig1(tmp_path):
    p = tmp_path / "fig1.json"
    assert main(["fixture", "--name", "fig1", "--output", str(p)]) == 0
    return p


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _write(tmp_path, g, name="g.json"):
    p = tmp_path / name
    p.write_text(dump_graph(g))
    return p


def test_fixture_fig1(fig1):
    assert load_graph(fig1) == ranking_example()


def test_fixture_to_stdout(capsys):
    code, out, _ = run(capsys, "fixture", "--name", "star", "--x", "6", "--k", "3")
    assert code == 0 and len(json.loads(out)["edges"]) == 3


def test_compute_table(capsys, fig1):
    code, out, _ = run(capsys, "compute", "--measure", "pagerank", "--alpha", "0.9",
                       "--input", str(fig1), "--format", "table")
    assert code == 0
    rows = {line.split()[0]: line.split()[-1] for line in out.splitlines()[1:]}
    assert rows["e2"] == "3.55" and rows["e3"] == "6.80" and rows["e7"] == "3.22"


def test_compute_nodes(capsys, fig1):
    code, out, _ = run(capsys, "compute", "--measure", "pagerank", "--alpha", "0.9",
                       "--input", str(fig1), "--nodes", "--format", "json")
    vals = json.loads(out)["values"]
    assert code == 0 and round(vals["v1"], 2) == 7.09 and round(vals["v3"], 2) == 12.89


def test_compute_json_full_precision(capsys, fig1):
    code, out, _ = run(capsys, "compute", "--measure", "pagerank", "--alpha", "0.9",
                       "--input", str(fig1))
    doc = json.loads(out)
    assert doc["measure"] == "edge-pagerank" and doc["params"]["alpha"] == 0.9
    assert abs(doc["values"]["e3"] - 6.8016) < 1e-4


def test_compute_csv(capsys, fig1):
    code, out, _ = run(capsys, "compute", "--measure", "betweenness", "--input", str(fig1),
                       "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "id,value" and len(lines) == 9


def test_compute_gtom_undefined(capsys, tmp_path):
    p = _write(tmp_path, Graph({"u": 1, "v": 0}, {"e": ("u", "v")}))
    code, out, _ = run(capsys, "compute", "--measure", "gtom", "--input", str(p), "--format", "table")
    assert code == 0 and "undefined" in out


def test_compute_eigenedge_out_of_class(capsys, tmp_path):
    p = _write(tmp_path, Graph({"u": 1, "v": 0}, {"e": ("u", "v")}))
    code, _, err = run(capsys, "compute", "--measure", "eigenedge", "--input", str(p))
    assert code == 3 and err.count("\n") == 1


def test_compute_bad_alpha(capsys, fig1):
    code, _, err = run(capsys, "compute", "--measure", "pagerank", "--alpha", "1.0", "--input", str(fig1))
    assert code == 1 and err.startswith("edgerank: usage:")


@pytest.mark.parametrize("argv", [
    [], ["compute"], ["bogus"], ["compute", "--measure", "gtom", "--alpha", "0.5", "--input", "x"],
    ["compute", "--measure", "pagerank", "--input", "x"],
    ["check", "--measure", "pagerank", "--alpha", "0.5", "--axiom", "nope"],
    ["check", "--measure", "pagerank", "--alpha", "0.5", "--tol-pre", "1e-7"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and err.count("\n") == 1


def test_invalid_graph(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"nodes": [{"id": "a", "weight": -1}], "edges": []}))
    code, _, err = run(capsys, "compute", "--measure", "pagerank", "--alpha", "0.5", "--input", str(p))
    assert code == 2 and err.startswith("edgerank: invalid-graph:")


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "compute", "--measure", "gtom", "--input", str(tmp_path / "none.json"))
    assert code == 2 and err.count("\n") == 1


def test_rank_ranking_example(capsys, fig1):
    code, out, _ = run(capsys, "rank", "--measure", "pagerank", "--alpha", "0.9",
                       "--incoming", "v4", "--input", str(fig1))
    assert code == 0
    assert [line.split()[0] for line in out.splitlines()[1:]] == ["e3", "e2", "e7"]


def test_rank_no_in_edges(capsys, tmp_path):
    p = _write(tmp_path, Graph({"u": 1, "v": 0}, {"e": ("u", "v")}))
    code, out, _ = run(capsys, "rank", "--measure", "pagerank", "--alpha", "0.5",
                       "--incoming", "u", "--input", str(p))
    assert code == 0 and out == ""


def test_rank_unknown_node(capsys, fig1):
    code, _, _ = run(capsys, "rank", "--measure", "pagerank", "--alpha", "0.9",
                     "--incoming", "zz", "--input", str(fig1))
    assert code == 2


def test_surf_close_to_compute(capsys, fig1):
    code, out, _ = run(capsys, "surf", "--alpha", "0.9", "--walks", "1000000", "--seed", "1",
                       "--input", str(fig1), "--format", "json")
    est = json.loads(out)
    assert code == 0 and "stderr" in est
    _, out, _ = run(capsys, "compute", "--measure", "pagerank", "--alpha", "0.9", "--input", str(fig1))
    exact = json.loads(out)["values"]
    assert all(abs(est["values"][e] - v) / v < 0.02 for e, v in exact.items())


def test_surf_table_has_stderr(capsys, fig1):
    code, out, _ = run(capsys, "surf", "--alpha", "0.5", "--walks", "1000", "--input", str(fig1))
    assert code == 0 and out.splitlines()[0].split() == ["edge", "estimate", "stderr"]


def test_check_pagerank_all_pass(capsys):
    code, out, _ = run(capsys, "check", "--measure", "pagerank", "--alpha", "0.9", "--axiom", "all",
                       "--trials", "20", "--seed", "42", "--format", "json")
    reports = json.loads(out)
    assert code == 0 and len(reports) == 6
    assert all(r["counterexample"] is None for r in reports)


def test_check_eigenedge_counterexample(capsys):
    code, out, _ = run(capsys, "check", "--measure", "eigenedge", "--axiom", "edge-multiplication",
                       "--trials", "10000", "--seed", "7", "--format", "json")
    (rep,) = json.loads(out)
    assert code == 4 and rep["counterexample"]["witness"]["graph"]["edges"]


def test_matrix_table(capsys):
    code, out, _ = run(capsys, "matrix", "--trials", "3", "--seed", "7")
    lines = out.splitlines()
    assert code == 4  # rivals are violated within a handful of trials
    assert lines[0].split()[0] == "measure" and len(lines[0].split()) == 7
    assert sum(1 for line in lines[2:9] if line.strip()) == 7


def test_linegraph_writes_sidecar(capsys, fig1, tmp_path):
    out = tmp_path / "lg.json"
    code, _, _ = run(capsys, "linegraph", "--input", str(fig1), "--output", str(out))
    assert code == 0
    lg = load_graph(out)
    side = json.loads((tmp_path / "lg.provenance.json").read_text())
    assert set(side) == set(lg.edges)
    assert all(lg.edges[k] == tuple(v) for k, v in side.items())


def test_heuchenne_outputs(capsys, tmp_path):
    p = tmp_path / "f5s.json"
    main(["fixture", "--name", "fig5-swapped", "--output", str(p)])
    code, out, _ = run(capsys, "heuchenne", "--input", str(p), "--all")
    assert code == 0 and "witness a=e1 c=e6 b=e3 d=e8" in out.splitlines()
    q = tmp_path / "f5.json"
    main(["fixture", "--name", "fig5", "--output", str(q)])
    lg = tmp_path / "lg5.json"
    main(["linegraph", "--input", str(q), "--output", str(lg)])
    code, out, _ = run(capsys, "heuchenne", "--input", str(lg))
    assert code == 0 and out.strip() == "ok"


def test_gen_compute_roundtrip_deterministic(capsys, tmp_path):
    outs = []
    for name in ("a.json", "b.json"):
        p = tmp_path / name
        assert main(["gen", "--seed", "12", "--output", str(p)]) == 0
        capsys.readouterr()
        run(capsys, "compute", "--measure", "pagerank", "--alpha", "0.85", "--input", str(p))
        outs.append((p.read_bytes(), capsys.readouterr()))
    assert outs[0][0] == outs[1][0]


def test_gen_compute_byte_identical(capsys, tmp_path):
    results = []
    for _ in range(2):
        p = tmp_path / "g.json"
        main(["gen", "--class", "strongly-connected", "--seed", "3", "--output", str(p)])
        code, out, _ = run(capsys, "compute", "--measure", "seeley", "--input", str(p))
        results.append((p.read_bytes(), out))
    assert results[0] == results[1]


def test_gen_katz_needs_alpha(capsys):
    assert run(capsys, "gen", "--class", "katz")[0] == 1


def test_seed_from_environment(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("EDGERANK_SEED", "5")
    main(["gen", "--output", str(tmp_path / "env.json")])
    main(["gen", "--seed", "5", "--output", str(tmp_path / "flag.json")])
    assert (tmp_path / "env.json").read_bytes() == (tmp_path / "flag.json").read_bytes()
    monkeypatch.setenv("EDGERANK_SEED", "x")
    assert run(capsys, "gen")[0] == 1


def test_module_entry_point_exit_codes(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("[]")
    proc = subprocess.run([sys.executable, "-m", "edgerank", "compute", "--measure", "gtom",
                           "--input", str(p)], capture_output=True, text=True)
    assert proc.returncode == 2
    assert proc.stdout == "" and len(proc.stderr.splitlines()) == 1
    proc = subprocess.run([sys.executable, "-m", "edgerank", "--version"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("edgerank ")
