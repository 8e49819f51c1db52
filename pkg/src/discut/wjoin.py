"""W-join value type and bitmask predicates for it."""

from dataclasses import dataclass
from typing import FrozenSet, List, Optional

from .bits import from_iter, iter_bits, lowest
from .graph import Graph, is_clique


@dataclass(frozen=True)
class WJoin:
    A: FrozenSet[int]
    B: FrozenSet[int]
    proper: bool = False
    unshatterable: Optional[bool] = None

    @property
    def masks(self):
        return from_iter(self.A), from_iter(self.B)

    def __repr__(self):
        flags = []
        if self.proper:
            flags.append("proper")
        if self.unshatterable:
            flags.append("unshatterable")
        return "WJoin(A=%s, B=%s%s)" % (sorted(self.A), sorted(self.B), (", " + ",".join(flags)) if flags else "")


def union_inter(g: Graph, s: int):
    u, i = 0, -1
    for v in iter_bits(s):
        u |= g.adj[v]
        i &= g.adj[v]
    return u, i & g.full


def mixed_on(g: Graph, s: int) -> int:
    """Vertices outside s adjacent to some but not all of s."""
    u, i = union_inter(g, s)
    return u & ~i & ~s


def is_wjoin(g: Graph, a: int, b: int) -> bool:
    if not a or not b or a & b:
        return False
    if a.bit_count() + b.bit_count() <= 2:
        return False
    if not (is_clique(g, a) and is_clique(g, b)):
        return False
    cross = 0
    complete = True
    for v in iter_bits(a):
        c = g.adj[v] & b
        cross |= c
        if c != b:
            complete = False
    if not cross or complete:
        return False
    outside = ~(a | b)
    return not ((mixed_on(g, a) | mixed_on(g, b)) & outside)


def is_proper(g: Graph, a: int, b: int) -> bool:
    for v in iter_bits(a):
        c = g.adj[v] & b
        if c == 0 or c == b:
            return False
    for v in iter_bits(b):
        c = g.adj[v] & a
        if c == 0 or c == a:
            return False
    return True


def cross_components(g: Graph, a: int, b: int) -> List[int]:
    """Components of the bipartite graph of A-B edges only."""
    mask = a | b
    comps = []
    rest = mask
    while rest:
        s = lowest(rest)
        seen = 1 << s
        frontier = seen
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                other = b if a >> v & 1 else a
                nxt |= g.adj[v] & other
            nxt &= ~seen
            seen |= nxt
            frontier = nxt
        comps.append(seen)
        rest &= ~seen
    return comps


def induces_c4(g: Graph, a: int, b: int) -> bool:
    if a.bit_count() != 2 or b.bit_count() != 2:
        return False
    # two cliques of size 2 with a perfect cross matching
    return all((g.adj[v] & b).bit_count() == 1 for v in iter_bits(a)) and all(
        (g.adj[v] & a).bit_count() == 1 for v in iter_bits(b)
    )


def is_partitionable(g: Graph, a: int, b: int) -> bool:
    return len(cross_components(g, a, b)) >= 2


def make(g: Graph, a: int, b: int, unshatterable=None) -> WJoin:
    return WJoin(frozenset(iter_bits(a)), frozenset(iter_bits(b)), is_proper(g, a, b), unshatterable)
