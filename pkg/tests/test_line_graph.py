import pytest

from discut.errors import InvalidInput, PreconditionViolation
from discut.generators import complete, cycle, octahedron, path, star
from discut.graph import build_graph, diameter, find_induced_pattern
from discut.line_graph import (
    ROOT_UNRESOLVED,
    RootMap,
    dominating_edge,
    is_triangle_or_star,
    line_graph_of,
    reconstruct_root,
    root_is_2p2_free,
    roundtrip_ok,
    solve_line_graph,
)
from discut.oracle import check_partition, oracle_disconnected_cut
from discut.verdict import Answer


def iso_small(g, h):
    from itertools import permutations

    if (g.n, g.m) != (h.n, h.m):
        return False
    es = set(g.edges())
    for perm in permutations(range(h.n)):
        if all(tuple(sorted((perm[a], perm[b]))) in es for a, b in h.edges()):
            return True
    return False


def test_line_graph_examples():
    assert iso_small(line_graph_of(path(4))[0], path(3))
    assert iso_small(line_graph_of(star(3))[0], complete(3))
    assert iso_small(line_graph_of(cycle(5))[0], cycle(5))
    assert iso_small(line_graph_of(complete(4))[0], octahedron())


def test_line_graph_of_edgeless():
    with pytest.raises(InvalidInput):
        line_graph_of(build_graph(3, []))


def test_reconstruct_examples():
    rm = reconstruct_root(path(3))
    assert iso_small(rm.root, path(4)) and roundtrip_ok(path(3), rm)
    rm = reconstruct_root(complete(3))
    assert rm.root.m == 3 and roundtrip_ok(complete(3), rm)
    assert reconstruct_root(star(3)) is None


def test_reconstruct_budget():
    l, _ = line_graph_of(complete(7))
    assert reconstruct_root(l, budget=3) is ROOT_UNRESOLVED


def test_root_2p2():
    assert root_is_2p2_free(cycle(5))
    assert not root_is_2p2_free(path(5))
    assert root_is_2p2_free(complete(4))
    with pytest.raises(PreconditionViolation):
        root_is_2p2_free(star(4))


def test_triangle_or_star():
    assert is_triangle_or_star(complete(3))
    assert is_triangle_or_star(star(5))
    assert not is_triangle_or_star(cycle(4))


def test_dominating_edge_needs_vertex_cover():
    # every vertex of C4 is next to edge 01, yet edge 23 avoids it
    assert dominating_edge(cycle(4)) is None
    assert dominating_edge(complete(4)) is None
    k4e = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    assert dominating_edge(k4e) == (0, 1)


def test_solve_line_examples():
    v = solve_line_graph(cycle(5))
    assert v.answer is Answer.YES and check_partition(cycle(5), v.certificate) is None
    assert solve_line_graph(complete(3)).answer is Answer.NO
    o = octahedron()
    assert solve_line_graph(o).answer is Answer.NO
    assert oracle_disconnected_cut(o).answer is Answer.NO
    v = solve_line_graph(cycle(4))
    assert v.answer is Answer.YES and check_partition(cycle(4), v.certificate) is None


def test_solve_line_rejects_bad_root_map():
    rm = RootMap(path(4), ((0, 1), (1, 2), (2, 3)))
    with pytest.raises(InvalidInput):
        solve_line_graph(cycle(3), rm)
    with pytest.raises(InvalidInput):
        solve_line_graph(star(3))


def test_diameter_two_iff_root_2p2_free():
    from discut.generators import random_connected_root
    import random

    rng = random.Random(3)
    for _ in range(150):
        r = random_connected_root(rng.randint(3, 7), rng.uniform(0.2, 0.9), rng)
        if is_triangle_or_star(r):
            continue
        l, _ = line_graph_of(r)
        assert (diameter(l) <= 2) == (find_induced_pattern(r, "2P2") is None)
