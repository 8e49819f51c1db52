"""Disconnected Cut on line graphs, decided on the root graph."""

import sys
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .bits import iter_bits, lowest
from .errors import InvalidInput, PreconditionViolation
from .graph import (
    Graph,
    build_graph,
    classify_by_diameter,
    complement,
    components,
    diameter,
    find_induced_pattern,
    is_connected,
    neighbourhood_partition,
    universal_pair,
    universal_pair_partition,
)
from .oracle import DEFAULT_ORACLE_BUDGET, check_partition, oracle_disconnected_cut
from .verdict import (
    CASE_ANALYSIS,
    COMPLETE_GRAPH,
    DISCONNECTED_NEIGHBOURHOOD,
    DOMINATING_EDGE,
    NO_UNIVERSAL_PAIR,
    UNIVERSAL_PAIR,
    Answer,
    DisconnectedPartition,
    Verdict,
    no,
    unresolved,
    yes,
)

DEFAULT_ROOT_BUDGET = 10 ** 6


@dataclass(frozen=True)
class RootMap:
    root: Graph
    edge_of: Tuple[Tuple[int, int], ...]  # L-vertex -> root edge (a < b)


def line_graph_of(g: Graph) -> Tuple[Graph, RootMap]:
    es = g.edges()
    if not es:
        raise InvalidInput("line graph of an edgeless graph")
    at = [0] * g.n
    for i, (u, v) in enumerate(es):
        at[u] |= 1 << i
        at[v] |= 1 << i
    adj = [(at[u] | at[v]) & ~(1 << i) for i, (u, v) in enumerate(es)]
    return Graph(len(es), adj), RootMap(g, tuple(es))


class _RootsUnresolved:
    def __repr__(self):
        return "RootsUnresolved"

    def __bool__(self):
        return False


ROOT_UNRESOLVED = _RootsUnresolved()


class _Out(Exception):
    pass


def _bfs_order(l: Graph) -> List[int]:
    order = [0]
    seen = 1
    i = 0
    while i < len(order):
        for w in iter_bits(l.adj[order[i]] & ~seen):
            seen |= 1 << w
            order.append(w)
        i += 1
    return order


def reconstruct_root(l: Graph, budget: int = DEFAULT_ROOT_BUDGET):
    """RootMap of a connected line graph, None if l is not one.

    Vertices are placed in BFS order. A new vertex e must share an endpoint r1
    with an already placed neighbour; the placed neighbours not at r1 then fix
    the other endpoint r2, or r2 is a fresh root vertex. Everything placed at
    r1 or r2 must be exactly the placed neighbourhood of e.
    """
    if l.n == 0 or not is_connected(l):
        raise InvalidInput("reconstruct_root needs a connected, non-empty graph")
    order = _bfs_order(l)
    ends: List[Optional[Tuple[int, int]]] = [None] * l.n
    at: List[int] = []  # root vertex -> mask of placed L-vertices
    count = [0]

    def place(k: int, placed: int) -> bool:
        count[0] += 1
        if count[0] > budget:
            raise _Out()
        if k == len(order):
            return True
        e = order[k]
        P = l.adj[e] & placed
        p = lowest(P)  # BFS order guarantees one for k > 0
        for r1 in ends[p]:
            rest = P & ~at[r1]
            if rest:
                cand = None
                for q in iter_bits(rest):
                    s = set(ends[q])
                    cand = s if cand is None else cand & s
                    if not cand:
                        break
                options = sorted(c for c in (cand or ()) if c != r1)
            else:
                options = [None]
            for r2 in options:
                fresh = r2 is None
                if fresh:
                    r2 = len(at)
                    at.append(0)
                elif at[r1] & at[r2]:
                    continue  # parallel edge
                if (at[r1] | at[r2]) == P:
                    ends[e] = (r1, r2)
                    at[r1] |= 1 << e
                    at[r2] |= 1 << e
                    if place(k + 1, placed | (1 << e)):
                        return True
                    at[r1] &= ~(1 << e)
                    at[r2] &= ~(1 << e)
                    ends[e] = None
                if fresh:
                    at.pop()
        return False

    first = order[0]
    ends[first] = (0, 1)
    at.extend([1 << first, 1 << first])
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * l.n + 100))
    try:
        ok = place(1, 1 << first)
    except _Out:
        return ROOT_UNRESOLVED
    finally:
        sys.setrecursionlimit(old)
    if not ok:
        return None
    edges = [tuple(sorted(ends[e])) for e in range(l.n)]
    root = build_graph(len(at), edges)
    rm = RootMap(root, tuple(edges))
    if not roundtrip_ok(l, rm):
        return None
    return rm


def roundtrip_ok(l: Graph, rm: RootMap) -> bool:
    es = rm.edge_of
    if len(set(es)) != len(es) or len(es) != l.n:
        return False
    for i in range(l.n):
        for j in range(i + 1, l.n):
            share = bool(set(es[i]) & set(es[j]))
            if share != l.has_edge(i, j):
                return False
    return True


def _nonisolated(g: Graph) -> Graph:
    return g.induced(sum(1 << v for v in range(g.n) if g.adj[v]))[0]


def is_triangle_or_star(root: Graph) -> bool:
    g = _nonisolated(root)
    if g.n == 3 and g.m == 3:
        return True
    return any(g.degree(v) == g.m for v in range(g.n)) and g.m >= 1


def root_is_2p2_free(root: Graph) -> bool:
    if is_triangle_or_star(root):
        raise PreconditionViolation("root is a triangle or a star")
    return find_induced_pattern(root, "2P2") is None


def dominating_edge(g: Graph) -> Optional[Tuple[int, int]]:
    """Edge uv whose image dominates L(g): every edge of g touches u or v.

    Dominating the vertices of g is not enough (root C4 has such an edge, yet
    L(C4) = C4 has a cut); what L needs is a vertex cover {u, v}.
    """
    for u, v in g.edges():
        rest = g.full & ~(1 << u) & ~(1 << v)
        if all(not (g.adj[w] & rest) for w in iter_bits(rest)):
            return (u, v)
    return None


def _edge_index(rm: RootMap):
    return {e: i for i, e in enumerate(rm.edge_of)}


def _lift_root_partition(l: Graph, rm: RootMap, w: DisconnectedPartition) -> Optional[DisconnectedPartition]:
    """L-partition from a root partition W1..W4 (0-based cyclic).

    A root vertex in W_k may only see edges of classes k-1 and k. An edge
    W_k-W_{k+1} therefore gets class k; an edge inside W_k gets k-1 or k.
    Any such labelling is valid once all four classes are used.
    """
    part = {}
    for k, s in enumerate(w.parts):
        for v in s:
            part[v] = k
    forced = [0] * 4
    free = []  # (edge index, (k-1, k))
    for i, (a, b) in enumerate(rm.edge_of):
        ka, kb = part[a], part[b]
        if ka == kb:
            free.append((i, ((ka - 1) % 4, ka)))
        elif (kb - ka) % 4 == 1:
            forced[ka] |= 1 << i
        elif (ka - kb) % 4 == 1:
            forced[kb] |= 1 << i
        else:
            return None
    classes = list(forced)
    missing = [k for k in range(4) if not classes[k]]
    # give each missing class a distinct free edge that allows it
    chosen = {}

    def assign(idx):
        if idx == len(missing):
            return True
        k = missing[idx]
        for i, opts in free:
            if i in chosen or k not in opts:
                continue
            chosen[i] = k
            if assign(idx + 1):
                return True
            del chosen[i]
        return False

    if not assign(0):
        return None
    for i, opts in free:
        classes[chosen.get(i, opts[1])] |= 1 << i
    p = DisconnectedPartition.from_masks(classes)
    return p if check_partition(l, p) is None else None


def _symmetries(p: DisconnectedPartition):
    parts = p.parts
    for rot in range(4):
        for flip in (False, True):
            idx = [(rot + (-k if flip else k)) % 4 for k in range(4)]
            yield DisconnectedPartition(tuple(parts[i] for i in idx))


def _root_partitions(root: Graph):
    gb = complement(root)
    full = gb.full
    for u in range(gb.n):
        for v in range(u + 1, gb.n):
            if gb.closed(u) | gb.closed(v) != full:
                continue
            nu = gb.adj[u] & ~(1 << v)
            nv = gb.adj[v] & ~(1 << u)
            for x in iter_bits(nu):
                for y in iter_bits(nv & ~(1 << x)):
                    yield universal_pair_partition(gb, u, v, x, y)
                    yield universal_pair_partition(gb, v, u, y, x)


def line_certificate(l: Graph, rm: RootMap, limit: int = 64) -> Optional[DisconnectedPartition]:
    tried = 0
    for w in _root_partitions(rm.root):
        if check_partition(rm.root, w) is not None:
            continue
        for s in _symmetries(w):
            p = _lift_root_partition(l, rm, s)
            if p is not None:
                return p
        tried += 1
        if tried >= limit:
            break
    return None


def solve_line_graph(l: Graph, rm: Optional[RootMap] = None, oracle_budget: int = DEFAULT_ORACLE_BUDGET) -> Verdict:
    route = "line-graph"
    if l.n == 0 or not is_connected(l):
        raise InvalidInput("solve_line_graph needs a connected graph")
    if rm is None:
        rm = reconstruct_root(l)
        if not rm:
            raise InvalidInput("input is not a line graph" if rm is None else "root reconstruction exceeded its budget")
    elif not roundtrip_ok(l, rm):
        raise InvalidInput("root map does not match the graph")
    root = _nonisolated(rm.root)
    if is_triangle_or_star(root):
        return no(COMPLETE_GRAPH, route=route)
    if find_induced_pattern(root, "2P2") is not None:
        v = classify_by_diameter(l)
        if not v or v.answer is not Answer.YES:
            raise PreconditionViolation("root has an induced 2P2 but L has diameter < 3")
        return v.with_route(route)
    rm = RootMap(root, tuple(tuple(sorted(e)) for e in _relabel_edges(rm, root)))
    de = dominating_edge(root)
    if de is not None:
        return no(DOMINATING_EDGE, route=route, edge=list(de))
    idx = _edge_index(rm)
    for u, v in root.edges():
        if root.degree(u) >= 2 and root.degree(v) >= 2 and not (root.adj[u] & root.adj[v]):
            e = idx[(u, v)]
            comps = components(l, l.adj[e])
            p = neighbourhood_partition(l, e, comps)
            return yes(p, DISCONNECTED_NEIGHBOURHOOD, route=route, edge=[u, v])
    d = diameter(root)
    if d == 1:
        return no(CASE_ANALYSIS, route=route, root_diameter=1)
    if d >= 3:
        return no(CASE_ANALYSIS, route=route, root_diameter=3)
    if universal_pair(complement(root)) is None:
        return no(NO_UNIVERSAL_PAIR, route=route)
    p = line_certificate(l, rm)
    if p is not None:
        return yes(p, UNIVERSAL_PAIR, route=route)
    ov = oracle_disconnected_cut(l, budget=oracle_budget)
    if ov.answer is Answer.YES:
        return yes(ov.certificate, UNIVERSAL_PAIR, route=route, certificate_from="oracle")
    if ov.answer is Answer.NO:
        # the root says yes, exhaustive search says no: the equivalence failed
        raise PreconditionViolation("root has a cut but the line graph has none")
    return unresolved(route=route, note="certificate search exceeded budget")


def _relabel_edges(rm: RootMap, root: Graph):
    # _nonisolated keeps vertex order; map old labels onto the compacted ones
    used = sorted({x for e in rm.edge_of for x in e})
    pos = {v: i for i, v in enumerate(used)}
    return [(pos[a], pos[b]) for a, b in rm.edge_of]
