import random

import pytest

from discut.config import Budgets
from discut.errors import InvalidInput, OutOfScope
from discut.generators import (
    GeneratorSpec,
    complete,
    complete_bipartite,
    cycle,
    gadget6,
    generate,
    octahedron,
    paw,
    path,
    petersen,
    star,
)
from discut.graph import build_graph, find_induced_pattern, independence_exceeds_three
from discut.line_graph import line_graph_of
from discut.oracle import check_partition, oracle_disconnected_cut
from discut.pipeline import c4_compaction_clawfree, c4_contractibility_clawfree, solve_auto, solve_claw_free
from discut.verdict import Answer

YES, NO = Answer.YES, Answer.NO


def test_claw_free_named():
    v, _ = solve_claw_free(cycle(5))
    assert v.answer is YES
    v, _ = solve_claw_free(cycle(7))
    assert v.answer is YES and v.reason == "diameter-ge-3"
    assert solve_claw_free(complete(4))[0].answer is NO


def test_claw_rejected():
    with pytest.raises(InvalidInput) as exc:
        solve_claw_free(star(3))
    assert sorted(exc.value.witness) == [0, 1, 2, 3]


def test_gadget_through_structural_path():
    g = gadget6()
    assert find_induced_pattern(g, "claw") is None
    # alpha = 2, so the small-independence branch answers before any reduction
    v, trace = solve_claw_free(g, small=0)
    assert v.answer is YES and check_partition(g, v.certificate) is None
    assert v.route == "clawfree/small-independence" and len(trace) == 0


def test_structural_path_on_line_graphs_with_large_alpha():
    rng = random.Random(5)
    pm = [(0, 1), (2, 3), (4, 5), (6, 7)]
    done = reductions = 0
    while done < 15:
        es = set(pm)
        for i in range(4):
            for j in range(i + 1, 4):
                a, b = rng.choice(pm[i]), rng.choice(pm[j])
                es.add((min(a, b), max(a, b)))
        allp = [(u, v) for u in range(8) for v in range(u + 1, 8)]
        es.update(rng.sample(allp, rng.randint(0, 8)))
        root = build_graph(8, sorted(es))
        if find_induced_pattern(root, "2P2") is not None or root.m > 22:
            continue
        l, _ = line_graph_of(root)
        if independence_exceeds_three(l) is None:
            continue
        v, trace = solve_claw_free(l, small=0)
        assert v.answer is oracle_disconnected_cut(l).answer
        assert not v.notes["oracle_fallback"]
        if v.is_yes:
            assert check_partition(l, v.certificate) is None
        reductions += len(trace)
        done += 1
    assert reductions > 0


def test_solve_auto_named():
    cases = {
        "C4": (cycle(4), YES), "C5": (cycle(5), YES), "K4": (complete(4), NO), "K5": (complete(5), NO),
        "P4": (path(4), YES), "paw": (paw(), NO), "K33": (complete_bipartite(3, 3), YES),
        "Petersen": (petersen(), YES), "octahedron": (octahedron(), NO), "star": (star(5), NO),
    }
    for name, (g, want) in cases.items():
        v = solve_auto(g)
        assert v.answer is want, name
        if v.is_yes:
            assert check_partition(g, v.certificate) is None


def test_solve_auto_needs_connected():
    with pytest.raises(InvalidInput):
        solve_auto(build_graph(3, [(0, 1)]))


def test_user_arcs_used_and_checked():
    gen = generate(GeneratorSpec("proper-circular-arc", 15, density=0.4, seed=3))
    v, _ = solve_claw_free(gen.graph, arcs=gen.arcs, small=0)
    assert v.answer is oracle_disconnected_cut(gen.graph).answer
    from discut.circular_arc import ArcModel

    with pytest.raises(InvalidInput):
        solve_claw_free(gen.graph, arcs=ArcModel(((1, 2), (3, 4))))


def test_unresolved_on_small_budget():
    # a dense claw-free graph on 40 vertices after the oracle is starved
    g = complete(40)
    assert solve_claw_free(g)[0].answer is NO  # diameter 1: no budget needed
    v = solve_auto(cycle(5), budgets=Budgets(oracle=3))
    assert v.answer is Answer.UNRESOLVED


def test_c4_aliases():
    for f in (c4_contractibility_clawfree, c4_compaction_clawfree):
        assert f(cycle(5)).answer is YES
        assert f(gadget6()).answer is YES
        with pytest.raises(OutOfScope):
            f(complete(5))
        with pytest.raises(OutOfScope):
            f(star(3))
        with pytest.raises(OutOfScope):
            f(path(5))


def test_big_line_graph_fast():
    import time

    from discut.generators import complete as kn

    l, _ = line_graph_of(kn(25))
    t = time.time()
    v, _ = solve_claw_free(l)
    assert v.answer is NO and not v.notes["oracle_fallback"]
    assert time.time() - t < 60
