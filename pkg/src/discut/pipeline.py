"""The claw-free orchestrator, the automatic dispatcher and the C4 aliases."""

import logging
from typing import Optional, Tuple

from .circular_arc import ARCS_UNRESOLVED, ArcModel, recognize_arcs, solve_circular_arc, validate_arc_model
from .config import DEFAULT_BUDGETS, Budgets
from .errors import InternalError, InvalidInput, OutOfScope
from .graph import (
    Graph,
    classify_by_diameter,
    diameter,
    find_induced_pattern,
    independence_exceeds_three,
    is_connected,
    nested_pair,
)
from .hfree import dispatch_hfree, solve_small_independence
from .line_graph import reconstruct_root, solve_line_graph
from .oracle import check_partition, oracle_disconnected_cut
from .reductions import ReductionTrace, contract_wjoin, detect_proper_wjoin, lift_certificate, make_unshatterable, remove_vertex
from .verdict import Verdict

log = logging.getLogger(__name__)

SMALL = 13  # the structure theorem needs more than 13 vertices


def _require_connected(g: Graph) -> None:
    if g.n == 0 or not is_connected(g):
        raise InvalidInput("the graph must be connected and non-empty")


def _final_stage(cur: Graph, arcs: Optional[ArcModel], orig, budgets: Budgets) -> Tuple[Verdict, bool]:
    """Line graph, then circular-arc, then the audited oracle fallback."""
    rm = reconstruct_root(cur, budget=budgets.root)
    if rm:
        return solve_line_graph(cur, rm, oracle_budget=budgets.oracle), False
    model = None
    if arcs is not None:
        sub = arcs.restrict(orig)
        if validate_arc_model(cur, sub) is None:
            model = sub
    if model is None:
        found = recognize_arcs(cur, budget=budgets.recognition)
        if found is not None and found is not ARCS_UNRESOLVED:
            model = found
    if model is not None:
        return solve_circular_arc(cur, model), False
    log.warning("reduced graph on %d vertices is neither a recognised line graph nor circular-arc", cur.n)
    return oracle_disconnected_cut(cur, budget=budgets.oracle), True


def solve_claw_free(
    g: Graph, budgets: Budgets = DEFAULT_BUDGETS, arcs: Optional[ArcModel] = None, *, small: int = SMALL
) -> Tuple[Verdict, ReductionTrace]:
    """Decide a connected claw-free graph; ``small`` lowers the oracle cutoff for testing."""
    _require_connected(g)
    claw = find_induced_pattern(g, "claw")
    if claw is not None:
        raise InvalidInput("graph contains an induced claw %s" % (claw,), witness=claw)
    if arcs is not None and arcs.n != g.n:
        raise InvalidInput("arc model has %d arcs for %d vertices" % (arcs.n, g.n))
    trace = ReductionTrace()
    cur = g
    orig = list(range(g.n))
    fallback = False
    left_diameter_two = False
    while True:
        # the diameter test is exact, so it runs before the small-graph oracle
        d = classify_by_diameter(cur)
        if d:
            if trace.steps:
                left_diameter_two = True
                log.info("left diameter 2 after %d reductions (%s)", len(trace), d.reason)
            v = d.with_route("diameter")
            break
        if cur.n <= small:
            v = oracle_disconnected_cut(cur, budget=budgets.oracle)
            break
        if independence_exceeds_three(cur) is None:
            v = solve_small_independence(cur, budgets)
            break
        pair = nested_pair(cur, adjacent_only=True)
        if pair is not None:
            cur, st = remove_vertex(cur, *pair)
        else:
            w = detect_proper_wjoin(cur)
            if w is None:
                v, fallback = _final_stage(cur, arcs, orig, budgets)
                break
            w = make_unshatterable(cur, w)
            cur, st = contract_wjoin(cur, w)
        trace.append(st)
        orig = [orig[o] for o in st.old]
    notes = dict(v.notes)
    notes.update(reductions=len(trace), oracle_fallback=fallback, reduced_n=cur.n)
    if left_diameter_two:
        notes["left_diameter_two"] = True
    cert = v.certificate
    if v.is_yes:
        cert = lift_certificate(trace, cert)
        bad = check_partition(g, cert)
        if bad is not None:
            raise InternalError("lifted certificate fails: %s" % bad, witness=bad.witness, graph=cur)
    route = "clawfree/" + (v.route or "oracle")
    return Verdict(v.answer, cert, v.reason, route, notes), trace


def solve_auto(g: Graph, budgets: Budgets = DEFAULT_BUDGETS, arcs: Optional[ArcModel] = None) -> Verdict:
    _require_connected(g)
    if find_induced_pattern(g, "claw") is None:
        v, trace = solve_claw_free(g, budgets, arcs)
        v.notes["trace"] = trace
        return v
    return dispatch_hfree(g, budgets)


def _c4_scope(g: Graph) -> None:
    if g.n == 0 or not is_connected(g):
        raise OutOfScope("needs a connected graph")
    if diameter(g) != 2:
        raise OutOfScope("needs diameter exactly 2")
    claw = find_induced_pattern(g, "claw")
    if claw is not None:
        raise OutOfScope("needs a claw-free graph", witness=claw)


def c4_contractibility_clawfree(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> Verdict:
    """C4-contractibility on claw-free graphs of diameter 2 equals Disconnected Cut."""
    _c4_scope(g)
    return solve_claw_free(g, budgets)[0].with_route("c4-contractibility")


def c4_compaction_clawfree(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> Verdict:
    """C4-compaction on claw-free graphs of diameter 2 equals Disconnected Cut."""
    _c4_scope(g)
    return solve_claw_free(g, budgets)[0].with_route("c4-compaction")
