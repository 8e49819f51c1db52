"""Solvers for H-free classes with |H| = 4 and the dispatcher over them."""

from typing import Optional

from .bits import iter_bits, lowest
from .config import DEFAULT_BUDGETS, Budgets
from .errors import InternalError, PreconditionViolation
from .graph import (
    Graph,
    classify_by_diameter,
    complement,
    complete_multipartite_classes,
    components,
    disconnected_neighbourhood_witness,
    dominating_vertex,
    find_induced_pattern,
    is_connected,
    neighbourhood_partition,
    universal_pair,
    universal_pair_partition,
)
from .oracle import check_partition, oracle_disconnected_cut
from .verdict import (
    COMPLEMENT_COMPONENTS,
    COMPLETE_GRAPH,
    COMPLETE_MULTIPARTITE,
    DISCONNECTED_NEIGHBOURHOOD,
    DOMINATING_VERTEX,
    NO_UNIVERSAL_PAIR,
    TOO_FEW_VERTICES,
    UNIVERSAL_PAIR,
    DisconnectedPartition,
    Verdict,
    no,
    yes,
)


def _connected(g: Graph, who: str) -> None:
    if g.n == 0 or not is_connected(g):
        raise PreconditionViolation("%s needs a connected graph" % who)


def _checked(g: Graph, v: Verdict) -> Verdict:
    if v.is_yes:
        bad = check_partition(g, v.certificate)
        if bad is not None:
            raise InternalError("%s certificate fails: %s" % (v.route, bad), witness=bad.witness, graph=g)
    return v


def _by_diameter(g: Graph, route: str) -> Optional[Verdict]:
    v = classify_by_diameter(g)
    return v.with_route(route) if v else None


def _neighbourhood_yes(g: Graph, route: str) -> Optional[Verdict]:
    w = disconnected_neighbourhood_witness(g)
    if w is None:
        return None
    u, comps = w
    return yes(neighbourhood_partition(g, u, comps), DISCONNECTED_NEIGHBOURHOOD, route=route, vertex=u)


def solve_triangle_free(g: Graph) -> Verdict:
    route = "triangle-free"
    _connected(g, route)
    t = find_induced_pattern(g, "C3")
    if t is not None:
        raise PreconditionViolation("triangle present", witness=t)
    v = _by_diameter(g, route)
    if v is not None:
        return v
    if dominating_vertex(g) is not None:
        return no(DOMINATING_VERTEX, route=route)
    for u in range(g.n):
        if g.degree(u) >= 2:
            # an independent neighbourhood of size two or more is disconnected
            comps = [1 << w for w in iter_bits(g.adj[u])]
            return _checked(g, yes(neighbourhood_partition(g, u, comps), DISCONNECTED_NEIGHBOURHOOD, route=route, vertex=u))
    return no(COMPLETE_GRAPH, route=route)  # only K2 is left


def solve_paw_free(g: Graph) -> Verdict:
    route = "paw-free"
    _connected(g, route)
    if find_induced_pattern(g, "C3") is None:
        return solve_triangle_free(g).with_route(route)
    classes = complete_multipartite_classes(g)
    if classes is None or len(classes) < 3:
        raise PreconditionViolation("graph with a triangle is not complete multipartite; not paw-free")
    return no(COMPLETE_MULTIPARTITE, route=route, classes=len(classes))


def _split_components(g: Graph, mask: int):
    cs = components(g, mask)
    rest = 0
    for c in cs[1:]:
        rest |= c
    return cs[0], rest


def _two_sided(g: Graph, d1: int, d2: int, route: str) -> Verdict:
    """Yes iff g[d1] and g[d2] are both disconnected (d1, d2 complete to each other)."""
    if d1.bit_count() < 2 or d2.bit_count() < 2:
        return no(COMPLEMENT_COMPONENTS, route=route)
    if len(components(g, d1)) < 2 or len(components(g, d2)) < 2:
        return no(COMPLEMENT_COMPONENTS, route=route)
    a1, a3 = _split_components(g, d1)
    a2, a4 = _split_components(g, d2)
    return _checked(g, yes(DisconnectedPartition.from_masks((a1, a2, a3, a4)), COMPLEMENT_COMPONENTS, route=route))


def _multipartite_complement_certificate(g: Graph, classes) -> Optional[DisconnectedPartition]:
    """g is a disjoint union of the cliques ``classes``; split them into four parts."""
    big = [c for c in classes if c.bit_count() >= 2]
    if big:
        c = big[0]
        a = lowest(c)
        others = [d for d in classes if d != c]
        rest = 0
        for d in others[1:]:
            rest |= d
        if not rest:
            return None
        return DisconnectedPartition.from_masks((1 << a, c & ~(1 << a), others[0], rest))
    if len(classes) >= 4:
        rest = 0
        for d in classes[3:]:
            rest |= d
        return DisconnectedPartition.from_masks((classes[0], classes[1], classes[2], rest))
    return None


def solve_copaw_free(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> Verdict:
    route = "copaw-free"
    _connected(g, route)
    if g.n < 4:
        return no(TOO_FEW_VERTICES, route=route)
    h = complement(g)
    comps = components(h)
    if len(comps) > 2:
        return no(COMPLEMENT_COMPONENTS, route=route, components=len(comps))
    if len(comps) == 2:
        return _two_sided(g, comps[0], comps[1], route)
    if find_induced_pattern(h, "C3") is None:
        return solve_small_independence(g, budgets).with_route(route)
    classes = complete_multipartite_classes(h)
    if classes is None:
        raise PreconditionViolation("complement is neither triangle-free nor complete multipartite; not co-paw-free")
    # g is then a disjoint union of cliques, which a connected g cannot be
    p = _multipartite_complement_certificate(g, classes)
    if p is None:
        raise InternalError("no split of the complement classes", graph=g)
    return _checked(g, yes(p, COMPLETE_MULTIPARTITE, route=route))


def solve_diamond_free(g: Graph) -> Verdict:
    route = "diamond-free"
    _connected(g, route)
    if dominating_vertex(g) is not None:
        return no(DOMINATING_VERTEX, route=route)
    v = _neighbourhood_yes(g, route)
    if v is not None:
        return _checked(g, v)
    return no(COMPLETE_GRAPH, route=route)


def solve_2p2_free(g: Graph) -> Verdict:
    route = "2p2-free"
    _connected(g, route)
    h = complement(g)
    up = universal_pair(h)
    if up is None:
        return no(NO_UNIVERSAL_PAIR, route=route)
    return _checked(g, yes(universal_pair_partition(h, *up), UNIVERSAL_PAIR, route=route, pair=list(up[:2])))


def solve_p4_free(g: Graph) -> Verdict:
    route = "p4-free"
    _connected(g, route)
    if g.n < 2:
        return no(COMPLETE_GRAPH, route=route)
    comps = components(complement(g))
    if len(comps) > 2:
        return no(COMPLEMENT_COMPONENTS, route=route, components=len(comps))
    if len(comps) == 1:
        raise PreconditionViolation("connected graph with a connected complement is not P4-free")
    return _two_sided(g, comps[0], comps[1], route)


def solve_small_independence(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> Verdict:
    route = "small-independence"
    _connected(g, route)
    v = oracle_disconnected_cut(g, budget=budgets.oracle)
    return v.with_route(route)


# --------------------------------------------------------------- dispatcher

def dispatch_hfree(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> Verdict:
    """Route to the first supported class g belongs to; fixed priority."""
    _connected(g, "dispatch_hfree")
    v = _by_diameter(g, "diameter")
    if v is not None:
        return v
    absent = lambda pid: find_induced_pattern(g, pid) is None  # noqa: E731
    if absent("P4"):
        return solve_p4_free(g)
    if absent("paw"):
        return solve_paw_free(g)
    if absent("diamond"):
        return solve_diamond_free(g)
    if absent("P1+P3"):
        return solve_copaw_free(g, budgets)
    if absent("2P2"):
        return solve_2p2_free(g)
    if absent("claw"):
        from .pipeline import solve_claw_free

        return solve_claw_free(g, budgets)[0]
    # 4P1-free, and the co-diamond / co-claw classes, go to the exact search
    # whenever alpha <= 3; everything else is left to the oracle
    if absent("4P1"):
        return solve_small_independence(g, budgets)
    return oracle_disconnected_cut(g, budget=budgets.oracle)
