"""Brute-force ground truth: the partition checker and exhaustive searches.

Nothing in here is clever on purpose. The solvers are tested against it.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import List, Optional, Tuple

import numpy as np

from .bits import from_iter, iter_bits, lowest
from .errors import InternalError, InvalidInput
from .graph import Graph, components, diameter, is_connected
from .verdict import (
    ORACLE,
    Answer,
    DisconnectedPartition,
    Verdict,
    no,
    unresolved,
    yes,
)

DEFAULT_ORACLE_BUDGET = 1 << 22
VECTOR_LIMIT = 22


@dataclass(frozen=True)
class PartitionViolation:
    code: str  # empty-part | overlap | uncovered | edge-V1-V3 | edge-V2-V4
    witness: tuple

    def __str__(self):
        return "%s %s" % (self.code, self.witness)


def check_partition(g: Graph, p: DisconnectedPartition) -> Optional[PartitionViolation]:
    """None if p is a disconnected partition of g, else the first violation."""
    parts = [sorted(s) for s in p.parts]
    for s in parts:
        for v in s:
            if not 0 <= v < g.n:
                raise InvalidInput("vertex %r outside 0..%d" % (v, g.n - 1), witness=(v,))
    for i, s in enumerate(parts):
        if not s:
            return PartitionViolation("empty-part", (i + 1,))
    owner = {}
    for i, s in enumerate(parts):
        for v in s:
            if v in owner:
                return PartitionViolation("overlap", (v, owner[v] + 1, i + 1))
            owner[v] = i
    for v in range(g.n):
        if v not in owner:
            return PartitionViolation("uncovered", (v,))
    # V2/V4 first, then V1/V3
    for a, b, code in ((1, 3, "edge-V2-V4"), (0, 2, "edge-V1-V3")):
        for u in parts[a]:
            for w in parts[b]:
                if g.has_edge(u, w):
                    return PartitionViolation(code, (u, w))
    return None


def is_valid_partition(g: Graph, p: Optional[DisconnectedPartition]) -> bool:
    return p is not None and check_partition(g, p) is None


def partition_from_cut(g: Graph, cut: int) -> DisconnectedPartition:
    """Split a disconnected cut U (and V-U) into the four-part form."""
    cu = components(g, cut)
    cr = components(g, g.full & ~cut)
    if len(cu) < 2 or len(cr) < 2:
        raise InternalError("not a disconnected cut", witness=cut, graph=g)
    rest_u = cut & ~cu[0]
    rest_r = (g.full & ~cut) & ~cr[0]
    return DisconnectedPartition.from_masks((cu[0], cr[0], rest_u, rest_r))


# --------------------------------------------------------- subset enumeration

@lru_cache(maxsize=None)
def _layers(n: int) -> Tuple[np.ndarray, ...]:
    allm = np.arange(1 << n, dtype=np.int64)
    pc = np.zeros(1 << n, dtype=np.int64)
    for v in range(n):
        pc += (allm >> v) & 1
    return tuple(allm[pc == k] for k in range(n + 1))


def connected_table(g: Graph) -> np.ndarray:
    """conn[S] for every S, via the non-cut-vertex recurrence, layer by layer."""
    n = g.n
    conn = np.zeros(1 << n, dtype=bool)
    layers = _layers(n)
    conn[0] = True
    conn[layers[1]] = True
    adj = np.array(g.adj, dtype=np.int64)
    for k in range(2, n + 1):
        lay = layers[k]
        acc = np.zeros(lay.shape[0], dtype=bool)
        for v in range(n):
            bit = np.int64(1 << v)
            has = (lay & bit) != 0
            sub = lay[has]
            ok = conn[sub ^ bit] & ((sub & adj[v]) != 0)
            acc[has] |= ok
        conn[lay] = acc
    return conn


def _first_in_order(cands: np.ndarray, n: int) -> int:
    # lexicographic order on sorted tuples: keep sets containing the smallest
    # vertex that any of them contains, and repeat
    c = cands
    for v in range(n):
        if c.shape[0] == 1:
            break
        has = c[(c >> v) & 1 == 1]
        if has.shape[0]:
            c = has
    return int(c[0])


def _cut_vectorized(g: Graph) -> Optional[int]:
    n = g.n
    conn = connected_table(g)
    disc = ~conn
    both = disc & disc[::-1]
    both[0] = both[-1] = False
    if not both.any():
        return None
    for lay in _layers(n)[2:n - 1]:
        hit = lay[both[lay]]
        if hit.shape[0]:
            return _first_in_order(hit, n)
    raise InternalError("unreachable: witness outside layers", graph=g)


def _cut_iterative(g: Graph, budget: int) -> Tuple[Optional[int], bool]:
    """Returns (cut or None, exhausted)."""
    n = g.n
    full = g.full
    seen = 0
    for k in range(1, n):
        for combo in combinations(range(n), k):
            seen += 1
            if seen > budget:
                return None, False
            if k < 2 or k > n - 2:
                continue
            u = from_iter(combo)
            if not is_connected(g, u) and not is_connected(g, full & ~u):
                return u, True
    return None, True


def oracle_disconnected_cut(g: Graph, budget: int = DEFAULT_ORACLE_BUDGET, vectorize: bool = True) -> Verdict:
    if g.n == 0 or not is_connected(g):
        raise InvalidInput("oracle needs a connected graph")
    total = (1 << g.n) - 2
    if vectorize and g.n <= VECTOR_LIMIT and total <= budget:
        cut = _cut_vectorized(g)
    else:
        cut, done = _cut_iterative(g, budget)
        if cut is None and not done:
            return unresolved(route="oracle", subsets_examined=budget)
    if cut is None:
        return no(ORACLE, route="oracle")
    return yes(partition_from_cut(g, cut), ORACLE, route="oracle")


def has_disconnected_cut(g: Graph) -> bool:
    v = oracle_disconnected_cut(g, budget=1 << 62)
    return v.answer is Answer.YES


def _two_groupings(comps: List[int]):
    """Splits of a component list into (group with comps[0], non-empty rest)."""
    rest = comps[1:]
    for code in range(1 << len(rest)):
        first, second = comps[0], 0
        for i, c in enumerate(rest):
            if code >> i & 1:
                second |= c
            else:
                first |= c
        if second:
            yield first, second


def all_disconnected_partitions(g: Graph, limit: Optional[int] = None) -> List[DisconnectedPartition]:
    """Disconnected partitions with 0 in V1, by cut set U = V1 + V3 (n <= 16).

    Every partition is listed once up to the symmetries that move vertex 0
    out of V1.
    """
    if g.n > 16:
        raise InvalidInput("partition enumeration limited to n <= 16")
    out = []
    full = g.full
    for u in range(1, full, 2):  # vertex 0 always in U
        cu = components(g, u)
        if len(cu) < 2:
            continue
        w = full & ~u
        cw = components(g, w)
        if len(cw) < 2:
            continue
        for v1, v3 in _two_groupings(cu):
            for v2, v4 in _two_groupings(cw):
                for a, b in ((v2, v4), (v4, v2)):
                    out.append(DisconnectedPartition.from_masks((v1, a, v3, b)))
                    if limit is not None and len(out) >= limit:
                        return out
    return out


# ------------------------------------------------------------------ W-joins

def _cliques(g: Graph) -> List[int]:
    out = []

    def grow(cur, cand):
        out.append(cur)
        for v in iter_bits(cand):
            grow(cur | (1 << v), cand & g.adj[v] & ~((1 << (v + 1)) - 1))

    for v in range(g.n):
        grow(1 << v, g.adj[v] & ~((1 << (v + 1)) - 1))
    return out


def _uniform(g: Graph, x: int, s: List[int]) -> bool:
    hits = sum(1 for y in s if g.has_edge(x, y))
    return hits == 0 or hits == len(s)


def _mixed(g: Graph, x: int, s: List[int]) -> bool:
    return not _uniform(g, x, s)


def oracle_wjoins(g: Graph):
    """Every W-join (A, B) with min(A) < min(B), found by exhaustive search."""
    from .wjoin import WJoin

    if g.n > 12:
        raise InvalidInput("oracle_wjoins is limited to n <= 12")
    cl = _cliques(g)
    found = []
    for am in cl:
        A = list(iter_bits(am))
        for bm in cl:
            if am & bm or lowest(am) > lowest(bm):
                continue
            B = list(iter_bits(bm))
            if len(A) + len(B) <= 2:
                continue
            cross = sum(1 for a in A for b in B if g.has_edge(a, b))
            if cross == 0 or cross == len(A) * len(B):
                continue
            ok = True
            for x in range(g.n):
                if am >> x & 1 or bm >> x & 1:
                    continue
                if not (_uniform(g, x, A) and _uniform(g, x, B)):
                    ok = False
                    break
            if not ok:
                continue
            proper = all(_mixed(g, a, B) for a in A) and all(_mixed(g, b, A) for b in B)
            found.append(WJoin(frozenset(A), frozenset(B), proper))
    found.sort(key=lambda w: (sorted(w.A), sorted(w.B)))
    return found


# ---------------------------------------------------------- partition cycle

def _common(g: Graph, a: int, b: int, within: int) -> Optional[int]:
    c = g.adj[a] & g.adj[b] & within
    return lowest(c) if c else None


def find_partition_cycle(g: Graph, p: DisconnectedPartition) -> Tuple[int, ...]:
    """Induced C4 or C5 meeting all four parts, built along the constructive proof."""
    if check_partition(g, p) is not None:
        raise InvalidInput("partition is not valid on this graph")
    if diameter(g) != 2:
        raise InvalidInput("find_partition_cycle needs diameter 2")
    masks = p.masks()
    full = g.full
    part = [0] * g.n
    for i, m in enumerate(masks):
        for v in iter_bits(m):
            part[v] = i
    u1 = lowest(masks[0])
    u3 = lowest(masks[2])
    u2 = _common(g, u1, u3, full)
    if u2 is None:
        raise InternalError("no common neighbour at diameter 2", graph=g)
    x = part[u2]  # 1 or 3 (0-based)
    y = (x + 2) % 4
    u4 = lowest(masks[y])
    a = _common(g, u2, u4, full)
    if a is None:
        raise InternalError("no common neighbour at diameter 2", graph=g)
    z = part[a]  # 0 or 2
    c = u3 if z == 0 else u1  # the one in the part opposite to a
    b, d = u2, u4
    if g.has_edge(c, d):
        cyc = (a, b, c, d)
    else:
        w = _common(g, c, d, full)
        if w is None:
            raise InternalError("no common neighbour at diameter 2", graph=g)
        if g.has_edge(a, w):
            cyc = (a, b, c, w)
        elif g.has_edge(b, w):
            cyc = (a, b, w, d)
        else:
            cyc = (a, b, c, w, d)
    if not is_induced_cycle(g, cyc) or {part[v] for v in cyc} != {0, 1, 2, 3}:
        raise InternalError("partition cycle construction failed", witness=cyc, graph=g)
    return cyc


def is_induced_cycle(g: Graph, cyc) -> bool:
    k = len(cyc)
    if k < 3 or len(set(cyc)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = (j - i) in (1, k - 1)
            if g.has_edge(cyc[i], cyc[j]) != adjacent:
                return False
    return True
