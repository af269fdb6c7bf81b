import pytest

import indgap


def test_graph6_round_trip():
    g = indgap.parse_graph6("Bg")
    assert g.order() == 3
    assert g.edges() == [(0, 1), (1, 2)]
    assert indgap.encode_graph6(g) == "Bg"
    assert indgap.encode_graph6(indgap.Graph()) == "?"
    with pytest.raises(ValueError):
        indgap.parse_graph6("Bh")


def test_graph_construction():
    g = indgap.Graph(3, [(0, 1), (1, 2), (0, 1)])
    assert g.size() == 2
    assert g == indgap.family("path", 3)
    assert g.adjacent(0, 1)
    with pytest.raises(ValueError):
        indgap.Graph(2, [(1, 1)])


def test_independence_report():
    r = indgap.independence_report(indgap.family("cycle", 13))
    assert (r.alpha, r.imin, r.gap) == (6, 5, 1)
    assert len(r.alpha_witness) == 6
    assert indgap.gap_class(indgap.family("cycle", 12)) == "gap>=2"
    with pytest.raises(indgap.OracleBudgetExceeded):
        indgap.independence_report(indgap.family("cycle", 60), node_budget=5)


def test_classification():
    c = indgap.classify(indgap.family("fig3"))
    assert c.g2 == [0, 3]
    assert c.g1 == [6, 8]
    assert c.g0 == [10, 11]
    assert c.n0 == 2
    assert c.type_of(0) == 2
    assert indgap.classify(indgap.Graph(2, [(0, 1)])).max_type is None


def test_well_covered_and_girth():
    assert indgap.is_well_covered_girth6(indgap.family("cycle", 7))
    assert not indgap.is_well_covered_girth6(indgap.family("path", 6))
    assert indgap.girth(indgap.family("path", 5)) is None
    assert indgap.girth(indgap.family("fig3")) == 6
    with pytest.raises(ValueError):
        indgap.is_well_covered_girth6(indgap.family("cycle", 5))


def test_recognize():
    d = indgap.recognize(indgap.family("cycle", 6))
    assert d.awc
    assert d.reason == "structural-match"
    assert not indgap.recognize(indgap.family("cycle", 12), crosscheck_n=20)
    with pytest.raises(indgap.OutOfContract):
        indgap.recognize(indgap.family("cycle", 7))


def test_recognize_matches_oracle_on_small_corpus():
    graphs = indgap.exhaustive(8, girth_floor=6, forbid=[7], connected=True)
    assert len(graphs) == 57
    for g in graphs:
        assert indgap.recognize(g).awc == (indgap.independence_report(g).gap == 1)


def test_random_graphs_are_deterministic():
    a = indgap.random_girth_graph(12, 6, [7], 14, 1)
    b = indgap.random_girth_graph(12, 6, [7], 14, 1)
    assert a == b
    assert indgap.girth(a) is None or indgap.girth(a) >= 6
