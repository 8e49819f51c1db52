"""Immutable bitset graphs and the structural primitives used by the solvers."""

import math
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .bits import iter_bits, lowest
from .errors import InvalidInput
from .verdict import (
    DIAMETER_1,
    DIAMETER_GE_3,
    DisconnectedPartition,
    no,
    yes,
)


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is an int whose set bits are the neighbours of v. Instances are
    treated as immutable; every operation returns a new graph.
    """

    __slots__ = ("n", "adj", "m", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        self.n = n
        self.adj = tuple(adj)
        self.m = sum(a.bit_count() for a in self.adj) // 2
        self._hash = None

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbours(self, v: int) -> List[int]:
        return list(iter_bits(self.adj[v]))

    def closed(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def edges(self) -> List[Tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def induced(self, mask: int) -> Tuple["Graph", List[int]]:
        """Subgraph induced by ``mask``, relabelled in increasing order.

        Returns the graph and the list mapping new index -> old index.
        """
        old = list(iter_bits(mask))
        pos = {v: i for i, v in enumerate(old)}
        adj = []
        for v in old:
            a = 0
            for w in iter_bits(self.adj[v] & mask):
                a |= 1 << pos[w]
            adj.append(a)
        return Graph(len(old), adj), old

    def delete(self, mask: int) -> Tuple["Graph", List[int]]:
        return self.induced(self.full & ~mask)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self):
        return "Graph(n=%d, edges=%s)" % (self.n, self.edges())


def build_graph(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    if n < 0:
        raise InvalidInput("negative vertex count")
    adj = [0] * n
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidInput("endpoint out of range: (%d, %d)" % (u, v), witness=(u, v))
        if u == v:
            raise InvalidInput("self-loop at %d" % u, witness=(u, v))
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, [full & ~a & ~(1 << v) for v, a in enumerate(g.adj)])


# ---------------------------------------------------------------- connectivity

def component_of(g: Graph, v: int, mask: Optional[int] = None) -> int:
    if mask is None:
        mask = g.full
    seen = 1 << v
    frontier = seen
    while frontier:
        nxt = 0
        for w in iter_bits(frontier):
            nxt |= g.adj[w]
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components(g: Graph, mask: Optional[int] = None) -> List[int]:
    """Components of g[mask] as bitmasks, ordered by smallest vertex."""
    if mask is None:
        mask = g.full
    out = []
    rest = mask
    while rest:
        c = component_of(g, lowest(rest), mask)
        out.append(c)
        rest &= ~c
    return out


def is_connected(g: Graph, mask: Optional[int] = None) -> bool:
    if mask is None:
        mask = g.full
    if mask == 0:
        return True
    return component_of(g, lowest(mask), mask) == mask


def bfs_layers(g: Graph, s: int) -> List[int]:
    """Distance layers from s (layer d = vertices at distance d)."""
    layers = [1 << s]
    seen = 1 << s
    while True:
        nxt = 0
        for w in iter_bits(layers[-1]):
            nxt |= g.adj[w]
        nxt &= ~seen
        if not nxt:
            return layers
        seen |= nxt
        layers.append(nxt)


def distance(g: Graph, u: int, v: int) -> float:
    for d, layer in enumerate(bfs_layers(g, u)):
        if layer >> v & 1:
            return d
    return math.inf


def eccentricity(g: Graph, s: int) -> float:
    layers = bfs_layers(g, s)
    reached = 0
    for layer in layers:
        reached |= layer
    if reached != g.full:
        return math.inf
    return len(layers) - 1


def diameter(g: Graph) -> float:
    if g.n == 0:
        raise InvalidInput("empty graph has no diameter")
    if g.n > 1 and not is_connected(g):
        return math.inf
    best = 0
    for s in range(g.n):
        e = eccentricity(g, s)
        if e > best:
            best = e
    return best


def far_pair(g: Graph, at_least: int = 3) -> Optional[Tuple[int, int]]:
    """Some pair (u, v) at distance >= at_least, smallest u first."""
    for u in range(g.n):
        layers = bfs_layers(g, u)
        if len(layers) > at_least:
            return u, lowest(layers[at_least])
    return None


class _NeedsDiameterTwo:
    def __repr__(self):
        return "NeedsDiameterTwoWork"

    def __bool__(self):
        return False


NEEDS_DIAMETER_TWO = _NeedsDiameterTwo()


def distance_three_partition(g: Graph, u: int, v: int) -> DisconnectedPartition:
    nu = g.adj[u]
    rest = g.full & ~nu & ~(1 << u) & ~(1 << v)
    return DisconnectedPartition.from_masks((1 << u, nu, rest, 1 << v))


def classify_by_diameter(g: Graph):
    """Verdict for diameter 1 or >= 3, else the NEEDS_DIAMETER_TWO marker."""
    if g.n == 0 or not is_connected(g):
        raise InvalidInput("classify_by_diameter needs a connected graph")
    if all(g.closed(v) == g.full for v in range(g.n)):
        return no(DIAMETER_1)
    pair = far_pair(g, 3)
    if pair is not None:
        return yes(distance_three_partition(g, *pair), DIAMETER_GE_3)
    return NEEDS_DIAMETER_TWO


# ------------------------------------------------------------- neighbourhoods

def dominating_vertex(g: Graph) -> Optional[int]:
    full = g.full
    for v in range(g.n):
        if g.closed(v) == full:
            return v
    return None


def disconnected_neighbourhood_witness(g: Graph) -> Optional[Tuple[int, List[int]]]:
    """First non-dominating vertex whose neighbourhood is disconnected.

    Returns (u, component masks of g[N(u)]).
    """
    full = g.full
    for u in range(g.n):
        if g.closed(u) == full:
            continue
        comps = components(g, g.adj[u])
        if len(comps) >= 2:
            return u, comps
    return None


def neighbourhood_partition(g: Graph, u: int, comps: Sequence[int]) -> DisconnectedPartition:
    """Certificate for a non-dominating u with a disconnected neighbourhood.

    V1={u}, V2=first component, V3=non-neighbours, V4=other components.
    """
    others = 0
    for c in comps[1:]:
        others |= c
    far = g.full & ~g.closed(u)
    return DisconnectedPartition.from_masks((1 << u, comps[0], far, others))


# ------------------------------------------------------------------- patterns

PATTERNS: Dict[str, Tuple[int, Tuple[Tuple[int, int], ...]]] = {
    "C3": (3, ((0, 1), (1, 2), (0, 2))),
    "C4": (4, ((0, 1), (1, 2), (2, 3), (0, 3))),
    "C5": (5, ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4))),
    "P4": (4, ((0, 1), (1, 2), (2, 3))),
    "claw": (4, ((0, 1), (0, 2), (0, 3))),
    "paw": (4, ((0, 1), (1, 2), (0, 2), (0, 3))),
    "diamond": (4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3))),
    "2P2": (4, ((0, 1), (2, 3))),
    "P1+P3": (4, ((1, 2), (2, 3))),
    "2P1+P2": (4, ((2, 3),)),
    "C3+P1": (4, ((1, 2), (2, 3), (1, 3))),
    "4P1": (4, ()),
    "K4": (4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))),
}


def pattern_graph(pid: str) -> Graph:
    k, edges = PATTERNS[pid]
    return build_graph(k, edges)


def _match(g: Graph, k: int, padj: Sequence[int], mapped: List[int], cand_first: int):
    i = len(mapped)
    if i == k:
        return tuple(mapped)
    cand = cand_first if i == 0 else g.full
    for j, w in enumerate(mapped):
        if padj[i] >> j & 1:
            cand &= g.adj[w]
        else:
            cand &= ~g.adj[w] & ~(1 << w)
    for v in iter_bits(cand):
        mapped.append(v)
        r = _match(g, k, padj, mapped, cand_first)
        if r is not None:
            return r
        mapped.pop()
    return None


def find_induced_pattern(g: Graph, pid: str) -> Optional[Tuple[int, ...]]:
    """An induced copy of the named pattern, as a vertex tuple in pattern order."""
    if pid not in PATTERNS:
        raise InvalidInput("unknown pattern %r" % pid)
    k, edges = PATTERNS[pid]
    if g.n < k:
        return None
    padj = [0] * k
    for a, b in edges:
        padj[a] |= 1 << b
        padj[b] |= 1 << a
    return _match(g, k, padj, [], g.full)


def is_claw_free(g: Graph) -> bool:
    return find_induced_pattern(g, "claw") is None


def independence_exceeds_three(g: Graph) -> Optional[Tuple[int, int, int, int]]:
    return find_induced_pattern(g, "4P1")


# ------------------------------------------------------ multipartite / pairs

def complete_multipartite_classes(g: Graph) -> Optional[List[int]]:
    """Classes (as masks) if g is complete k-partite with k >= 2."""
    if g.n < 2:
        return None
    classes = components(complement(g))
    if len(classes) < 2:
        return None
    for c in classes:
        for v in iter_bits(c):
            # independent inside, complete to everything else
            if g.adj[v] != g.full & ~c:
                return None
    return classes


def universal_pair(g: Graph) -> Optional[Tuple[int, int, int, int]]:
    """A dominating pair (u, v) with distinct private witnesses x~u, y~v.

    Returns (u, v, x, y) with the smallest u, then v.
    """
    full = g.full
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.closed(u) | g.closed(v) != full:
                continue
            nu = g.adj[u] & ~(1 << v)
            nv = g.adj[v] & ~(1 << u)
            if not nu or not nv:
                continue
            x = lowest(nu)
            rest = nv & ~(1 << x)
            if rest:
                return u, v, x, lowest(rest)
            # nv == {x}: try another x
            alt = nu & ~(1 << x)
            if alt:
                return u, v, lowest(alt), x
    return None


def universal_pair_partition(g_bar: Graph, u: int, v: int, x: int, y: int) -> DisconnectedPartition:
    """Partition of the complement of ``g_bar`` built from a universal pair of g_bar.

    V1={u}, V2={v}; V3 gets x and the rest of N(u), V4 gets y and the remainder.
    """
    nu = g_bar.adj[u]
    rest = g_bar.full & ~(1 << u) & ~(1 << v)
    v3 = (nu & rest & ~(1 << y)) | (1 << x)
    v4 = rest & ~v3
    return DisconnectedPartition.from_masks((1 << u, 1 << v, v3, v4))


def nested_pair(g: Graph, adjacent_only: bool = False) -> Optional[Tuple[int, int]]:
    """Smallest u, then smallest v, with N(u)-{v} contained in N(v)-{u}.

    With ``adjacent_only`` v must also be a neighbour of u.
    """
    full = g.full
    for u in range(g.n):
        cand = g.adj[u] if adjacent_only else full & ~(1 << u)
        for w in iter_bits(g.adj[u]):
            cand &= g.closed(w)
            if not cand:
                break
        if cand:
            return u, lowest(cand)
    return None


def has_distinct_neighbourhoods(g: Graph) -> bool:
    """No adjacent pair with nested neighbourhoods."""
    return nested_pair(g, adjacent_only=True) is None


def is_cobipartite(g: Graph) -> bool:
    """True if the vertices split into two cliques (complement 2-colourable)."""
    full = g.full
    colour = {}
    for s in range(g.n):
        if s in colour:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in iter_bits(full & ~g.adj[x] & ~(1 << x)):
                if y not in colour:
                    colour[y] = 1 - colour[x]
                    stack.append(y)
                elif colour[y] == colour[x]:
                    return False
    return True


def is_clique(g: Graph, mask: int) -> bool:
    for v in iter_bits(mask):
        if (g.adj[v] | (1 << v)) & mask != mask:
            return False
    return True
