
import pytest

from discut.circular_arc import (
    ARCS_UNRESOLVED,
    ArcModel,
    connectify_partition,
    covering_small_clique,
    greedy_induced_cycle,
    normalize,
    parse_arcs,
    recognize_arcs,
    rightmost_neighbor,
    solve_circular_arc,
    validate_arc_model,
)
from discut.errors import InvalidInput
from discut.generators import GeneratorSpec, complete, complete_bipartite, cycle, generate, petersen, star
from discut.graph import build_graph, components, diameter
from discut.oracle import check_partition, oracle_disconnected_cut
from discut.verdict import Answer, DisconnectedPartition

C4_ARCS = ArcModel(((7, 2), (1, 4), (3, 6), (5, 8)))  # A, B, C, D
C5_ARCS = ArcModel(((1, 4), (3, 6), (5, 8), (7, 10), (9, 2)))
K4_ARCS = ArcModel(((1, 5), (3, 7), (6, 2), (8, 4)))


def test_validate_c4_model():
    assert validate_arc_model(cycle(4), C4_ARCS) is None
    assert validate_arc_model(complete(4), C4_ARCS) == (0, 2)


def test_duplicate_endpoints_rejected():
    with pytest.raises(InvalidInput):
        ArcModel(((1, 1), (2, 3))).check_endpoints()
    with pytest.raises(InvalidInput):
        parse_arcs("2\n1 1\n2 3\n")


def test_parse_arcs_roundtrip():
    assert parse_arcs(C4_ARCS.to_text()) == C4_ARCS
    with pytest.raises(InvalidInput):
        parse_arcs("3\n1 2\n")


def test_normalize_moves_first_left_to_one():
    raw = ArcModel(((2, 5), (4, 1), (6, 3)))
    m = normalize(raw)
    assert min(l for l, _ in m.arcs) == 1
    assert m.graph() == raw.graph()


def test_rightmost_neighbor():
    assert rightmost_neighbor(cycle(4), C4_ARCS, 0) == 1
    g = build_graph(2, [])
    assert rightmost_neighbor(g, ArcModel(((1, 2), (3, 4))), 0) is None


def test_covering_small_clique():
    two = ArcModel(((1, 4), (3, 2)))
    g2 = two.graph()
    assert covering_small_clique(g2, two) == (0, 1)
    tri = ArcModel(((1, 4), (3, 6), (5, 2)))
    assert sorted(covering_small_clique(tri.graph(), tri)) == [0, 1, 2]
    assert covering_small_clique(cycle(4), C4_ARCS) is None


def test_greedy_cycles():
    assert sorted(greedy_induced_cycle(cycle(4), C4_ARCS)) == [0, 1, 2, 3]
    assert sorted(greedy_induced_cycle(cycle(5), C5_ARCS)) == [0, 1, 2, 3, 4]
    intervals = ArcModel(((1, 10), (2, 3), (4, 5), (6, 7), (8, 9)))
    assert greedy_induced_cycle(intervals.graph(), intervals) is None


def test_solve_named():
    v = solve_circular_arc(cycle(4), C4_ARCS)
    assert v.answer is Answer.YES and check_partition(cycle(4), v.certificate) is None
    v = solve_circular_arc(cycle(5), C5_ARCS)
    assert v.answer is Answer.YES and check_partition(cycle(5), v.certificate) is None
    assert K4_ARCS.graph() == complete(4)
    v = solve_circular_arc(complete(4), K4_ARCS)
    assert v.answer is Answer.NO and v.reason == "diameter-1"
    intervals = ArcModel(((1, 10), (2, 3), (4, 5), (6, 7), (8, 9)))
    assert solve_circular_arc(intervals.graph(), intervals).answer is Answer.NO


def test_solve_rejects_wrong_model():
    with pytest.raises(InvalidInput):
        solve_circular_arc(complete(4), C4_ARCS)


def test_connectify():
    p = DisconnectedPartition.of([0], [1], [2], [3])
    assert connectify_partition(cycle(4), C4_ARCS, p) == p
    c5p = DisconnectedPartition.of([0], [1], [2, 3], [4])
    assert connectify_partition(cycle(5), C5_ARCS, c5p) == c5p


def test_connectify_scattered_partitions():
    done = 0
    for s in range(400):
        gen = generate(GeneratorSpec("proper-circular-arc", 10 + s % 5, density=0.2 + 0.1 * (s % 4), seed=s))
        g = gen.graph
        if diameter(g) != 2:
            continue
        v = oracle_disconnected_cut(g)
        if not v.is_yes:
            continue
        q = connectify_partition(g, gen.arcs, v.certificate)
        assert check_partition(g, q) is None
        assert all(len(components(g, m)) == 1 for m in q.masks())
        done += 1
    assert done > 0


def test_recognize_examples():
    for g in (cycle(4), star(3), cycle(5), complete(4)):
        m = recognize_arcs(g)
        assert isinstance(m, ArcModel) and validate_arc_model(g, m) is None
    assert recognize_arcs(complete_bipartite(2, 3)) is None
    assert recognize_arcs(complete_bipartite(3, 3)) is None
    assert recognize_arcs(petersen()) is None


def test_recognize_budget():
    assert recognize_arcs(petersen(), budget=5) is ARCS_UNRESOLVED
