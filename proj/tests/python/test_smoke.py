import pytest

import tempograph as tg


def test_round_trip_text():
    text = "t undirected 3\ne 0 1 1 2\ne 1 2 3\n"
    g = tg.parse_graph(text)
    assert g.vertex_count == 3
    assert tg.cost(g) == 3
    assert tg.format_graph(g) == text
    assert tg.parse_graph(tg.format_graph(g)) == g


def test_foremost_agrees_with_oracle():
    g = tg.TemporalGraph(4)
    g.add_edge(0, 1, [1])
    g.add_edge(1, 2, [2, 5])
    g.add_edge(2, 3, [3])
    res = tg.foremost(g, 0)
    oracle = tg.foremost_oracle(g, 0)
    assert res.arrival == oracle.arrival == [0, 1, 2, 3]
    j = tg.reconstruct(res, 3)
    assert tg.validate_journey(g, j)


def test_spanning_tree_design():
    g = tg.TemporalGraph(6)
    for u, v in [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]:
        g.add_edge(u, v, [])
    d = tg.spanning_tree_labelling(g, 0)
    assert tg.cost(d.labelling) == 10
    assert tg.is_temporally_connected(d.labelling)


def test_star_and_hypercube():
    star = tg.star_optimal_labelling(5)
    assert tg.cost(star) == 7
    assert tg.is_temporally_connected(star)
    cube = tg.hypercube_design(3)
    assert tg.cost(cube.labelling) == 12
    assert tg.is_slse(cube.labelling)
    j = tg.hypercube_journey(cube, 0, 7)
    assert tg.validate_journey(cube.labelling, j)
    assert j.arrival_time == 12


def test_removal():
    star = tg.star_optimal_labelling(5)
    exact = tg.removal_profit_exact(star)
    assert exact.exact
    assert exact.profit == 0
    assert tg.is_minimal(star)


def test_gadget_round_trip():
    phi = tg.parse_formula("p mxor3 2 3\n1 2\n1 2\n2 1\n")
    gadget = tg.build_gadget(phi)
    assert gadget.graph.vertex_count == 21
    assert tg.cost(gadget.graph) == 74
    tau = [False, True]
    kept = tg.assignment_to_labelling(phi, tau)
    assert tg.is_temporally_connected(kept)
    assert tg.verify_necessary_labels(phi, kept).all_ok()
    back = tg.labelling_to_assignment(phi, kept)
    assert tg.satisfied_count(phi, back) >= tg.satisfied_count(phi, tau)


def test_sparsify():
    part = tg.partition_labels(9)
    assert [tuple(r) for r in part.ranges] == [(1, 2), (3, 4), (5, 6), (7, 9)]
    _, report = tg.clique_router_sparsify(64, 8, 1.0, 7)
    assert report.kept_labels == 741
    _, report = tg.gnp_router_sparsify(128, 0.5, 8, 7)
    assert report.kept_labels >= 0


def test_invalid_input_raises():
    g = tg.TemporalGraph(2)
    with pytest.raises(ValueError):
        g.add_edge(0, 0, [1])
    with pytest.raises(RuntimeError):
        tg.parse_formula("p mxor3 3 4\n")
