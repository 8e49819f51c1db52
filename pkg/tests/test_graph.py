import math

import pytest

from discut.errors import InvalidInput
from discut.generators import complete, complete_bipartite, cycle, diamond, octahedron, path, star
from discut.graph import (
    NEEDS_DIAMETER_TWO,
    build_graph,
    classify_by_diameter,
    complement,
    complete_multipartite_classes,
    diameter,
    disconnected_neighbourhood_witness,
    dominating_vertex,
    find_induced_pattern,
    has_distinct_neighbourhoods,
    independence_exceeds_three,
    is_connected,
    nested_pair,
    neighbourhood_partition,
    universal_pair,
)
from discut.oracle import check_partition
from discut.verdict import Answer


def test_build_graph_basic_cases():
    c4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert c4.n == 4 and c4.m == 4
    one = build_graph(1, [])
    assert one.n == 1 and one.m == 0
    dup = build_graph(3, [(0, 1), (1, 0)])
    assert dup.m == 1


def test_build_graph_rejects_bad_edges():
    with pytest.raises(InvalidInput):
        build_graph(3, [(0, 3)])
    with pytest.raises(InvalidInput):
        build_graph(3, [(1, 1)])


def test_diameter_values():
    assert diameter(complete(4)) == 1
    assert diameter(cycle(5)) == 2
    assert diameter(build_graph(2, [])) == math.inf


def test_classify_by_diameter():
    v = classify_by_diameter(complete(5))
    assert v.answer is Answer.NO and v.reason == "diameter-1"
    p4 = path(4)
    v = classify_by_diameter(p4)
    assert v.answer is Answer.YES
    assert v.certificate.as_lists() == [[0], [1], [2], [3]]
    assert check_partition(p4, v.certificate) is None
    assert classify_by_diameter(cycle(4)) is NEEDS_DIAMETER_TWO
    assert not NEEDS_DIAMETER_TWO


def test_dominating_vertex():
    assert dominating_vertex(star(3)) == 0
    assert dominating_vertex(cycle(5)) is None
    assert dominating_vertex(complete(4)) is not None


def test_disconnected_neighbourhood():
    c4 = cycle(4)
    u, comps = disconnected_neighbourhood_witness(c4)
    assert u == 0 and sorted(comps) == [1 << 1, 1 << 3]
    p = neighbourhood_partition(c4, u, comps)
    # V1 = {u}, V2 = first component, V3 = non-neighbours, V4 = the rest
    assert p.as_lists() == [[0], [1], [2], [3]]
    assert check_partition(c4, p) is None
    k33 = complete_bipartite(3, 3)
    w = disconnected_neighbourhood_witness(k33)
    assert w is not None
    assert check_partition(k33, neighbourhood_partition(k33, *w)) is None
    assert disconnected_neighbourhood_witness(complete(4)) is None


def test_find_induced_pattern():
    assert sorted(find_induced_pattern(star(3), "claw")) == [0, 1, 2, 3]
    assert find_induced_pattern(cycle(5), "2P2") is None
    p4 = find_induced_pattern(cycle(5), "P4")
    assert p4 is not None and len(set(p4)) == 4
    assert find_induced_pattern(build_graph(3, [(0, 1)]), "claw") is None


def test_independence_exceeds_three():
    assert independence_exceeds_three(cycle(8)) == (0, 2, 4, 6)
    assert independence_exceeds_three(cycle(5)) is None
    assert independence_exceeds_three(complete(4)) is None


def test_complement():
    c = complement(cycle(4))
    assert c.m == 2 and all(c.degree(v) == 1 for v in range(4))
    c5 = complement(cycle(5))
    assert c5.m == 5 and all(c5.degree(v) == 2 for v in range(5))
    assert complement(complete(4)).m == 0


def test_complete_multipartite_classes():
    cls = complete_multipartite_classes(complete_bipartite(3, 3))
    assert sorted(c.bit_count() for c in cls) == [3, 3]
    cls = complete_multipartite_classes(octahedron())
    assert sorted(c.bit_count() for c in cls) == [2, 2, 2]
    assert complete_multipartite_classes(cycle(5)) is None


def test_universal_pair():
    # smallest u first: {0, 2} dominates P4 0-1-2-3 with witnesses 1 and 3
    assert universal_pair(path(4)) == (0, 2, 1, 3)
    u, v, x, y = universal_pair(path(4))
    assert x != y and path(4).has_edge(u, x) and path(4).has_edge(v, y)
    assert universal_pair(path(3)) is None
    assert universal_pair(star(3)) is None


def test_nested_pair_general_and_adjacent():
    assert nested_pair(path(3)) == (0, 1)
    assert nested_pair(cycle(5)) is None
    # non-adjacent twins of C4 are nested; the adjacent-only variant skips them
    assert nested_pair(cycle(4)) == (0, 2)
    assert nested_pair(cycle(4), adjacent_only=True) is None
    # in the diamond (2, 3 non-adjacent) the false twins are (2, 3); the true twins (0, 1)
    assert nested_pair(diamond()) == (0, 1)
    assert nested_pair(diamond(), adjacent_only=True) == (0, 1)


def test_distinct_neighbourhoods():
    assert has_distinct_neighbourhoods(cycle(5))
    assert not has_distinct_neighbourhoods(path(3))


def test_is_connected():
    assert is_connected(cycle(6))
    assert not is_connected(build_graph(3, [(0, 1)]))
