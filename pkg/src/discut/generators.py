"""Seeded instance generators and a few named graphs."""

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .bits import iter_bits
from .errors import InvalidInput
from .graph import Graph, build_graph, complement, components, is_connected

KINDS = ("gnp", "line-of-random", "proper-circular-arc", "complement-of-triangle-free", "wjoin-gadget")


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    n: int
    density: float = 0.5
    seed: int = 0


@dataclass(frozen=True)
class Generated:
    graph: Graph
    arcs: Optional[object] = None  # ArcModel for proper-circular-arc
    root: Optional[Graph] = None  # the random root for line-of-random


def _rng(spec: GeneratorSpec) -> random.Random:
    # string seeding is stable across runs and platforms
    return random.Random("%s|%d|%s|%d" % (spec.kind, spec.n, Fraction(spec.density).limit_denominator(10**6), spec.seed))


def _connect(n: int, edges: set, rng: random.Random) -> None:
    g = build_graph(n, edges)
    comps = components(g)
    while len(comps) > 1:
        a = rng.choice(list(iter_bits(comps[0])))
        b = rng.choice(list(iter_bits(comps[1])))
        edges.add((min(a, b), max(a, b)))
        g = build_graph(n, edges)
        comps = components(g)


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    edges = set()
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    _connect(n, edges, rng)
    return build_graph(n, edges)


def line_graph_edges(root: Graph) -> Tuple[int, List[Tuple[int, int]]]:
    es = root.edges()
    at = {}
    for i, (u, v) in enumerate(es):
        at.setdefault(u, []).append(i)
        at.setdefault(v, []).append(i)
    out = set()
    for inc in at.values():
        for i in range(len(inc)):
            for j in range(i + 1, len(inc)):
                out.add((inc[i], inc[j]))
    return len(es), sorted(out)


def random_connected_root(m: int, density: float, rng: random.Random) -> Graph:
    """Connected graph with exactly m edges; density picks the vertex count."""
    kmin = 2
    while kmin * (kmin - 1) // 2 < m:
        kmin += 1
    kmax = m + 1
    k = int(round(kmax - density * (kmax - kmin)))
    k = max(kmin, min(kmax, k))
    order = list(range(k))
    rng.shuffle(order)
    edges = set()
    for i in range(1, k):
        a = order[i]
        b = order[rng.randrange(i)]
        edges.add((min(a, b), max(a, b)))
    pool = [(u, v) for u in range(k) for v in range(u + 1, k) if (u, v) not in edges]
    rng.shuffle(pool)
    for e in pool[: m - len(edges)]:
        edges.add(e)
    return build_graph(k, edges)


def proper_arc_model(n: int, density: float, rng: random.Random):
    """Equal-length arcs at random positions, as an ArcModel on 1..2n."""
    from .circular_arc import ArcModel, normalize

    length = 0.08 + 0.5 * density
    scale = 1 << 40
    while True:
        starts = rng.sample(range(scale), n)
        ln = int(length * scale)
        pts = []
        for i, s in enumerate(starts):
            pts.append((s, i, 0))
            pts.append(((s + ln) % scale, i, 1))
        if len({p[0] for p in pts}) < 2 * n:
            continue
        pts.sort()
        l = [0] * n
        r = [0] * n
        for rank, (_, i, kind) in enumerate(pts, start=1):
            if kind == 0:
                l[i] = rank
            else:
                r[i] = rank
        model = normalize(ArcModel(tuple(zip(l, r))))
        g = model.graph()
        if is_connected(g):
            return g, model


def triangle_free(n: int, p: float, rng: random.Random) -> Graph:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    adj = [0] * n
    for u, v in pairs:
        if rng.random() >= p:
            continue
        if adj[u] & adj[v]:
            continue
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def wjoin_gadget(n: int, density: float, rng: random.Random) -> Graph:
    """Two cliques A, B with a mixed cross pattern, p over A, q over B, p~q.

    n=6 gives the prism a1 a2 b1 b2 p q (A={0,1}, B={2,3}, p=4, q=5).
    Larger n widens A and B (each row keeps its matching edge and a non-edge,
    so every vertex stays mixed); an odd leftover becomes a vertex r adjacent
    to p and q.
    """
    if n < 6:
        raise InvalidInput("wjoin-gadget needs n >= 6")
    k = (n - 2) // 2
    extra = n - 2 - 2 * k
    A = list(range(k))
    B = list(range(k, 2 * k))
    p, q = 2 * k, 2 * k + 1
    edges = set()
    for grp in (A, B):
        for i in range(len(grp)):
            for j in range(i + 1, len(grp)):
                edges.add((grp[i], grp[j]))
    for i in range(k):
        edges.add((A[i], B[i]))
    if k > 2:
        for i in range(k):
            for j in range(k):
                if i != j and j != (i + 1) % k and rng.random() < density:
                    edges.add((min(A[i], B[j]), max(A[i], B[j])))
    for a in A:
        edges.add((a, p))
    for b in B:
        edges.add((b, q))
    edges.add((p, q))
    rs = list(range(2 * k + 2, 2 * k + 2 + extra))
    for r in rs:
        edges.add((p, r))
        edges.add((q, r))
    return build_graph(n, edges)


def generate(spec: GeneratorSpec) -> Generated:
    if spec.n < 1:
        raise InvalidInput("n must be positive")
    if spec.kind not in KINDS:
        raise InvalidInput("unknown generator kind %r" % spec.kind)
    if not 0 <= spec.density <= 1:
        raise InvalidInput("density must lie in [0, 1]")
    rng = _rng(spec)
    if spec.kind == "gnp":
        return Generated(gnp(spec.n, spec.density, rng))
    if spec.kind == "line-of-random":
        root = random_connected_root(spec.n, spec.density, rng)
        m, edges = line_graph_edges(root)
        return Generated(build_graph(m, edges), root=root)
    if spec.kind == "proper-circular-arc":
        g, model = proper_arc_model(spec.n, spec.density, rng)
        return Generated(g, arcs=model)
    if spec.kind == "complement-of-triangle-free":
        for _ in range(1000):
            g = complement(triangle_free(spec.n, spec.density, rng))
            if is_connected(g):
                return Generated(g)
        raise InvalidInput("could not draw a connected complement of a triangle-free graph")
    return Generated(wjoin_gadget(spec.n, spec.density, rng))


# ---------------------------------------------------------------- named graphs

def cycle(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def octahedron() -> Graph:
    return complement(build_graph(6, [(0, 1), (2, 3), (4, 5)]))


def paw() -> Graph:
    return build_graph(4, [(0, 1), (1, 2), (0, 2), (0, 3)])


def diamond() -> Graph:
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def gadget6() -> Graph:
    return wjoin_gadget(6, 0.0, random.Random(0))


def gadget_matching(k: int) -> Graph:
    """A={0..k-1}, B={k..2k-1}, cross edges a_i b_i only, p=2k over A, q=2k+1 over B."""
    n = 2 * k + 2
    edges = set()
    for base in (0, k):
        for i in range(k):
            for j in range(i + 1, k):
                edges.add((base + i, base + j))
    for i in range(k):
        edges.add((i, k + i))
        edges.add((i, 2 * k))
        edges.add((k + i, 2 * k + 1))
    edges.add((2 * k, 2 * k + 1))
    return build_graph(n, edges)
