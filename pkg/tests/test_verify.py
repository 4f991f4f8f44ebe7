from chromnbc import verify as vf
from chromnbc.corpus import digraph_corpus, graph_corpus, matroid_corpus
from chromnbc.graph import Graph, complete_graph
from chromnbc.matroid import MoebiusTable, uniform_matroid
from chromnbc.symfunc import IntPolynomial

CHECK_NAMES = {name for name, _ in vf.GRAPH_CHECKS + vf.MATROID_CHECKS + vf.DIGRAPH_CHECKS}


def test_corpus_sizes():
    assert len(graph_corpus()) == 1 + 1 + 2 + 8 + 64 + 8
    assert len(digraph_corpus()) == 21
    names = [n for n, _ in matroid_corpus()]
    assert "loop" in names and "U2,5" in names and len(names) == len(set(names))


def test_builtin_corpus_passes():
    report = vf.verify_corpus()
    assert report.ok, [c.witness for c in report.failures][:3]
    assert {c.name for c in report.checks} == CHECK_NAMES
    assert report.lines()[-1].startswith(f"summary: {len(report.checks)} checks, 0 failed")


def test_report_is_deterministic():
    a, b = vf.RunReport(7), vf.RunReport(7)
    for r in (a, b):
        vf.verify_graphs(r, [("K4", complete_graph(4))])
    assert a.lines() == b.lines()


def test_broken_implementation_is_caught(monkeypatch):
    monkeypatch.setattr(vf.ch, "chromatic_polynomial_subset", lambda g: IntPolynomial([1]))
    report = vf.RunReport(1)
    vf.verify_graphs(report, [("K3", complete_graph(3))])
    failed = {c.name for c in report.failures}
    assert "chromatic.oracle_agreement" in failed
    assert any(line.startswith("FAIL chromatic.oracle_agreement") for line in report.lines())


def test_wrong_moebius_is_caught(monkeypatch):
    real = vf.moebius_table
    monkeypatch.setattr(vf, "moebius_table", lambda lat: MoebiusTable({k: v + 1 for k, v in real(lat).items()}))
    report = vf.RunReport(1)
    vf.verify_matroids(report, [("U2,3", uniform_matroid(2, 3))])
    assert "matroid.moebius" in {c.name for c in report.failures}


def test_skips_large_coloring_checks():
    g = Graph([str(i) for i in range(1, 12)], [("1", "2")])
    report = vf.RunReport(0)
    vf.verify_graphs(report, [("big", g)])
    assert report.ok
    assert any(c.skipped for c in report.checks)
    assert any("skipped" in line for line in report.lines())
