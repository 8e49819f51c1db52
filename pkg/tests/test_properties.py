from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import graphs
from discut.circular_arc import parse_arcs, validate_arc_model
from discut.generators import GeneratorSpec, generate
from discut.graph import complement, diameter, find_induced_pattern, has_distinct_neighbourhoods, nested_pair
from discut.hfree import dispatch_hfree
from discut.io import parse_instance, write_instance
from discut.line_graph import line_graph_of, reconstruct_root, roundtrip_ok, solve_line_graph
from discut.oracle import check_partition, oracle_disconnected_cut, oracle_wjoins
from discut.pipeline import solve_auto
from discut.reductions import ReductionTrace, detect_proper_wjoin, lift_certificate, remove_nested_exhaustively
from discut.wjoin import is_proper, is_wjoin


@given(graphs(max_n=9))
def test_oracle_yes_is_checkable(g):
    v = oracle_disconnected_cut(g)
    if v.is_yes:
        assert check_partition(g, v.certificate) is None


@given(graphs(max_n=9))
def test_oracle_routes_agree(g):
    assert oracle_disconnected_cut(g, vectorize=True).answer is oracle_disconnected_cut(g, vectorize=False).answer


@given(graphs(max_n=9))
def test_solve_auto_matches_oracle(g):
    v = solve_auto(g)
    assert v.answer is oracle_disconnected_cut(g).answer
    if v.is_yes:
        assert check_partition(g, v.certificate) is None


@given(graphs(min_n=2, max_n=9))
def test_dispatch_matches_oracle(g):
    assume(find_induced_pattern(g, "claw") is not None)
    assert dispatch_hfree(g).answer is oracle_disconnected_cut(g).answer


@given(graphs(max_n=9, connected=False))
def test_complement_is_an_involution(g):
    assert complement(complement(g)) == g


@given(graphs(max_n=9, connected=False))
def test_instance_file_roundtrip(g):
    assert parse_instance(write_instance(g)) == g


@given(graphs(min_n=3, max_n=9))
def test_nested_removal_preserves_answer_and_diameter(g):
    assume(diameter(g) == 2)
    want = oracle_disconnected_cut(g)
    h, trace = remove_nested_exhaustively(g)
    assert has_distinct_neighbourhoods(h)
    assert diameter(h) <= 2
    got = oracle_disconnected_cut(h)
    assert got.answer is want.answer
    if got.is_yes:
        assert check_partition(g, lift_certificate(trace, got.certificate)) is None


def strip_nested(g, adjacent_only):
    while True:
        pair = nested_pair(g, adjacent_only=adjacent_only)
        if pair is None:
            return g
        g = g.induced(g.full & ~(1 << pair[0]))[0]


@given(graphs(min_n=4, max_n=9))
def test_detector_agrees_with_enumeration(g):
    g = strip_nested(g, adjacent_only=True)
    assume(g.n >= 3)
    w = detect_proper_wjoin(g)
    found = oracle_wjoins(g)
    assert (w is None) == (not found)
    if w is not None:
        a, b = w.masks
        assert is_wjoin(g, a, b) and is_proper(g, a, b)


@given(graphs(min_n=4, max_n=9))
def test_wjoins_proper_under_distinct_neighbourhoods(g):
    g = strip_nested(g, adjacent_only=False)
    assert all(w.proper for w in oracle_wjoins(g))


@given(graphs(min_n=2, max_n=7))
def test_line_roundtrip_and_answer(root):
    l, rm = line_graph_of(root)
    back = reconstruct_root(l)
    assert back and roundtrip_ok(l, back)
    assert solve_line_graph(l, rm).answer is oracle_disconnected_cut(l).answer


@given(st.integers(3, 12), st.integers(0, 10**6), st.floats(0.0, 1.0))
def test_generated_arc_models_are_valid(n, seed, density):
    gen = generate(GeneratorSpec("proper-circular-arc", n, density=density, seed=seed))
    assert validate_arc_model(gen.graph, gen.arcs) is None
    assert parse_arcs(gen.arcs.to_text()) == gen.arcs


def test_empty_trace_lift():
    from discut.verdict import DisconnectedPartition

    p = DisconnectedPartition.of([0], [1], [2], [3])
    assert lift_certificate(ReductionTrace(), p) == p
