"""Answer-preserving reductions and the trace that lifts certificates back."""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .bits import iter_bits, lowest
from .errors import InternalError
from .graph import Graph, is_clique, nested_pair
from .oracle import check_partition
from .verdict import DisconnectedPartition
from .wjoin import WJoin, cross_components, induces_c4, is_proper, is_wjoin, make, mixed_on


@dataclass(frozen=True)
class NestedRemoval:
    u: int
    v: int


@dataclass(frozen=True)
class WJoinContraction:
    A: Tuple[int, ...]
    B: Tuple[int, ...]
    a: int
    b: int


@dataclass(frozen=True)
class ReductionStep:
    """One reduction; ``kind`` uses labels of ``before``.

    ``old`` maps each vertex of the reduced graph to its label in ``before``.
    """

    kind: object
    before: Graph
    old: Tuple[int, ...]


@dataclass
class ReductionTrace:
    steps: List[ReductionStep] = field(default_factory=list)

    def __len__(self):
        return len(self.steps)

    def append(self, step: ReductionStep) -> None:
        self.steps.append(step)

    def extend(self, other: "ReductionTrace") -> None:
        self.steps.extend(other.steps)

    def to_original(self, upto: int) -> List[int]:
        """Map from labels of the graph before step ``upto`` to original labels."""
        if not self.steps:
            return []
        m = list(range(self.steps[0].before.n))
        for st in self.steps[:upto]:
            m = [m[o] for o in st.old]
        return m

    def to_json(self) -> List[dict]:
        out = []
        for i, st in enumerate(self.steps):
            lab = self.to_original(i)
            k = st.kind
            if isinstance(k, NestedRemoval):
                out.append({"kind": "nested", "u": lab[k.u], "v": lab[k.v]})
            else:
                out.append({
                    "kind": "wjoin",
                    "A": sorted(lab[x] for x in k.A),
                    "B": sorted(lab[x] for x in k.B),
                    "a": lab[k.a],
                    "b": lab[k.b],
                })
        return out


def remove_vertex(g: Graph, u: int, v: int) -> Tuple[Graph, ReductionStep]:
    h, old = g.delete(1 << u)
    return h, ReductionStep(NestedRemoval(u, v), g, tuple(old))


def remove_nested_exhaustively(g: Graph) -> Tuple[Graph, ReductionTrace]:
    """Delete u for the smallest adjacent nested pair (u, v) until none is left.

    Only adjacent pairs are used: deleting one of two false twins can lose the
    cut (C4 becomes P3).
    """
    trace = ReductionTrace()
    cur = g
    while True:
        pair = nested_pair(cur, adjacent_only=True)
        if pair is None:
            return cur, trace
        cur, st = remove_vertex(cur, *pair)
        trace.append(st)


# ------------------------------------------------------------- W-join search

def _closure(g: Graph, a: int, b: int) -> Optional[Tuple[int, int]]:
    """Grow (A, B) by forcing mixed vertices to the opposite side.

    Returns the fixpoint, or None when a vertex is mixed on both sides or a
    side stops being a clique.
    """
    while True:
        ma = mixed_on(g, a) & ~b
        mb = mixed_on(g, b) & ~a
        if ma & mb:
            return None
        if not ma and not mb:
            return a, b
        if ma:
            for v in iter_bits(ma):
                if g.adj[v] & b != b:
                    return None
            if not is_clique(g, ma):
                return None
            b |= ma
        if mb:
            for v in iter_bits(mb):
                if g.adj[v] & a != a:
                    return None
            if not is_clique(g, mb):
                return None
            a |= mb


def detect_wjoin_masks(g: Graph) -> Optional[Tuple[int, int]]:
    """Smallest-seed W-join as masks; must be called on distinct neighbourhoods.

    Every W-join side of size two or more contains an edge; seeding with that
    edge as A and growing by forcing never leaves the W-join, and the fixpoint
    is itself a W-join.
    """
    for a in range(g.n):
        for a2 in iter_bits(g.adj[a] >> (a + 1) << (a + 1)):
            res = _closure(g, (1 << a) | (1 << a2), 0)
            if res is None:
                continue
            A, B = res
            if is_wjoin(g, A, B):
                return (A, B) if lowest(A) < lowest(B) else (B, A)
    return None


def detect_proper_wjoin(g: Graph) -> Optional[WJoin]:
    res = detect_wjoin_masks(g)
    if res is None:
        return None
    return make(g, *res)


def make_unshatterable(g: Graph, w: WJoin) -> WJoin:
    a, b = w.masks
    while True:
        if not is_wjoin(g, a, b) or not is_proper(g, a, b):
            raise InternalError("not a proper W-join", witness=(sorted(iter_bits(a)), sorted(iter_bits(b))), graph=g)
        if induces_c4(g, a, b):
            return make(g, a, b, unshatterable=True)
        comps = cross_components(g, a, b)
        if len(comps) == 1:
            return make(g, a, b, unshatterable=True)
        if len(comps) >= 3:
            keep = (a | b) & ~comps[0]
        else:
            # the larger side; ties go to the one with the smaller vertex
            keep = max(comps, key=lambda c: (c.bit_count(), -lowest(c)))
        a, b = a & keep, b & keep


def contract_wjoin(g: Graph, w: WJoin) -> Tuple[Graph, ReductionStep]:
    """G_ab for the first a in A with a cross edge and its lowest B-neighbour b.

    The answer is preserved only under the hypotheses of the contraction
    lemma, which exclude cobipartite graphs (see ``is_cobipartite``); the
    prism gadget is cobipartite and happens to keep its answer, other
    cobipartite inputs need not. The pipeline never gets here with one,
    since cobipartite graphs have independence number at most 2.
    """
    A, B = w.masks
    pick = None
    for a in iter_bits(A):
        nb = g.adj[a] & B
        if nb:
            pick = (a, lowest(nb))
            break
    if pick is None:
        raise InternalError("W-join with no cross edge", graph=g)
    a, b = pick
    drop = (A & ~(1 << a)) | (B & ~(1 << b))
    h, old = g.delete(drop)
    kind = WJoinContraction(tuple(iter_bits(A)), tuple(iter_bits(B)), a, b)
    return h, ReductionStep(kind, g, tuple(old))


def unstep(step: ReductionStep, p: DisconnectedPartition) -> DisconnectedPartition:
    old = step.old
    parts = [set(old[v] for v in s) for s in p.parts]

    def where(x):
        for i, s in enumerate(parts):
            if x in s:
                return i
        raise InternalError("vertex missing from lifted partition", witness=x, graph=step.before)

    k = step.kind
    if isinstance(k, NestedRemoval):
        parts[where(k.v)].add(k.u)
    else:
        ia, ib = where(k.a), where(k.b)
        parts[ia].update(k.A)
        parts[ib].update(k.B)
    q = DisconnectedPartition.of(parts)
    bad = check_partition(step.before, q)
    if bad is not None:
        raise InternalError("lifted certificate fails: %s" % bad, witness=bad.witness, graph=step.before)
    return q


def lift_certificate(trace: ReductionTrace, p: DisconnectedPartition) -> DisconnectedPartition:
    for st in reversed(trace.steps):
        p = unstep(st, p)
    return p
