import pytest

from discut.errors import InvalidInput
from discut.generators import complete, complete_bipartite, cycle, gadget6, octahedron, petersen
from discut.oracle import (
    all_disconnected_partitions,
    check_partition,
    find_partition_cycle,
    is_induced_cycle,
    oracle_disconnected_cut,
    oracle_wjoins,
)
from discut.verdict import Answer, DisconnectedPartition

C5 = cycle(5)


def test_check_partition_examples():
    c4 = cycle(4)
    assert check_partition(c4, DisconnectedPartition.of([0], [1], [2], [3])) is None
    bad = check_partition(c4, DisconnectedPartition.of([0], [1], [3], [2]))
    assert bad.code == "edge-V2-V4" and bad.witness == (1, 2)
    empty = check_partition(c4, DisconnectedPartition.of([0, 2], [1], [], [3]))
    assert empty.code == "empty-part"


def test_check_partition_coverage_and_overlap():
    c4 = cycle(4)
    assert check_partition(c4, DisconnectedPartition.of([0], [1], [2], [])) is not None
    assert check_partition(c4, DisconnectedPartition.of([0], [1, 0], [2], [3])) is not None


def test_oracle_named():
    v = oracle_disconnected_cut(cycle(4))
    assert v.answer is Answer.YES and v.certificate.as_lists() == [[0], [1], [2], [3]]
    for g in (C5, complete_bipartite(3, 3), petersen()):
        v = oracle_disconnected_cut(g)
        assert v.answer is Answer.YES and check_partition(g, v.certificate) is None
    assert oracle_disconnected_cut(complete(4)).answer is Answer.NO
    assert oracle_disconnected_cut(octahedron()).answer is Answer.NO


def test_oracle_scalar_and_vector_agree():
    for n in range(2, 9):
        for g in (cycle(n), complete(n)) if n >= 3 else (complete(n),):
            a = oracle_disconnected_cut(g, vectorize=True)
            b = oracle_disconnected_cut(g, vectorize=False)
            assert a.answer is b.answer


def test_oracle_budget_gives_unresolved():
    v = oracle_disconnected_cut(complete(24), budget=1000)
    assert v.answer is Answer.UNRESOLVED and v.reason == "budget-exceeded"


def test_oracle_needs_connected():
    from discut.graph import build_graph

    with pytest.raises(InvalidInput):
        oracle_disconnected_cut(build_graph(3, [(0, 1)]))


def test_all_partitions_are_valid():
    ps = all_disconnected_partitions(C5)
    assert ps
    assert all(check_partition(C5, p) is None for p in ps)


def test_oracle_wjoins():
    found = oracle_wjoins(gadget6())
    masks = {(frozenset(w.A), frozenset(w.B)) for w in found}
    assert (frozenset({0, 1}), frozenset({2, 3})) in masks or (frozenset({2, 3}), frozenset({0, 1})) in masks
    target = [w for w in found if {frozenset(w.A), frozenset(w.B)} == {frozenset({0, 1}), frozenset({2, 3})}]
    assert target[0].proper
    assert oracle_wjoins(C5) == []
    assert oracle_wjoins(complete(4)) == []


def test_find_partition_cycle_examples():
    c4 = cycle(4)
    cyc = find_partition_cycle(c4, DisconnectedPartition.of([0], [1], [2], [3]))
    assert sorted(cyc) == [0, 1, 2, 3]
    # C5 on 0..4 with parts {0},{1},{2,3},{4}
    cyc = find_partition_cycle(C5, DisconnectedPartition.of([0], [1], [2, 3], [4]))
    assert sorted(cyc) == [0, 1, 2, 3, 4]
    k33 = complete_bipartite(3, 3)
    v = oracle_disconnected_cut(k33)
    cyc = find_partition_cycle(k33, v.certificate)
    assert len(cyc) == 4 and is_induced_cycle(k33, cyc)


def test_partition_enumeration_matches_labelling_count():
    from itertools import product

    from discut.generators import complete_bipartite, path

    for g in (cycle(4), cycle(5), cycle(6), path(4), complete_bipartite(2, 3)):
        brute = 0
        for lab in product(range(4), repeat=g.n - 1):
            lab = (0,) + lab
            p = DisconnectedPartition.of([[v for v in range(g.n) if lab[v] == k] for k in range(4)])
            brute += check_partition(g, p) is None
        assert len(all_disconnected_partitions(g)) == brute
