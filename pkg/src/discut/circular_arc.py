"""Disconnected Cut on circular-arc graphs: models, the greedy cycle, forced
placement and the 2-SAT finisher."""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .bits import iter_bits
from .errors import InternalError, InvalidInput
from .graph import Graph, classify_by_diameter, components, is_connected
from .oracle import check_partition, find_partition_cycle, is_induced_cycle
from .twosat import TwoSatInstance, twosat_solve
from .verdict import (
    COVERING_CLIQUE,
    NO_CONSISTENT_GUESS,
    NO_INDUCED_LONG_CYCLE,
    TWOSAT,
    DisconnectedPartition,
    Verdict,
    no,
    yes,
)

DEFAULT_RECOGNITION_BUDGET = 10 ** 7


@dataclass(frozen=True)
class ArcModel:
    """arcs[v] = (l, r): the arc runs clockwise from l to r on positions 1..2n."""

    arcs: Tuple[Tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.arcs)

    @property
    def size(self) -> int:
        return 2 * len(self.arcs)

    def check_endpoints(self) -> None:
        pts = sorted(p for a in self.arcs for p in a)
        if pts != list(range(1, self.size + 1)):
            raise InvalidInput("arc endpoints must be exactly 1..%d" % self.size)

    def offset(self, a: int, b: int) -> int:
        return (b - a) % self.size

    def contains(self, v: int, x: int) -> bool:
        l, r = self.arcs[v]
        return self.offset(l, x) <= self.offset(l, r)

    def intersects(self, u: int, v: int) -> bool:
        lu, ru = self.arcs[u]
        lv, rv = self.arcs[v]
        return self.contains(u, lv) or self.contains(v, lu)

    def graph(self) -> Graph:
        self.check_endpoints()
        adj = [0] * self.n
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if self.intersects(u, v):
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        return Graph(self.n, adj)

    def restrict(self, keep: Sequence[int]) -> "ArcModel":
        """Model of the induced subgraph on ``keep`` (new index i = keep[i])."""
        pts = sorted(p for v in keep for p in self.arcs[v])
        rank = {p: i + 1 for i, p in enumerate(pts)}
        return normalize(ArcModel(tuple((rank[self.arcs[v][0]], rank[self.arcs[v][1]]) for v in keep)))

    def to_text(self) -> str:
        lines = [str(self.n)] + ["%d %d" % a for a in self.arcs]
        return "\n".join(lines) + "\n"


def normalize(model: ArcModel) -> ArcModel:
    """Rotate so that the first left endpoint sits at position 1."""
    if model.n == 0:
        return model
    first = min(l for l, _ in model.arcs)
    s = model.size
    shift = first - 1
    return ArcModel(tuple((((l - 1 - shift) % s) + 1, ((r - 1 - shift) % s) + 1) for l, r in model.arcs))


def parse_arcs(text: str) -> ArcModel:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise InvalidInput("arc file is empty")
    lineno, head = rows[0]
    if len(head) != 1 or not head[0].lstrip("-").isdigit():
        raise InvalidInput("line %d: expected arc count" % lineno)
    n = int(head[0])
    if n < 0:
        raise InvalidInput("line %d: negative arc count" % lineno)
    if len(rows) - 1 != n:
        raise InvalidInput("expected %d arc lines, found %d" % (n, len(rows) - 1))
    arcs = []
    for lineno, toks in rows[1:]:
        if len(toks) != 2 or not all(t.isdigit() for t in toks):
            raise InvalidInput("line %d: expected two positive integers" % lineno)
        arcs.append((int(toks[0]), int(toks[1])))
    model = ArcModel(tuple(arcs))
    model.check_endpoints()
    return model


def validate_arc_model(g: Graph, model: ArcModel) -> Optional[Tuple[int, int]]:
    """None if the model represents g, else the first mismatching pair."""
    if model.n != g.n:
        raise InvalidInput("arc model has %d arcs for %d vertices" % (model.n, g.n))
    model.check_endpoints()
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if model.intersects(u, v) != g.has_edge(u, v):
                return (u, v)
    return None


# ------------------------------------------------------------ greedy routines

def rightmost_neighbor(g: Graph, model: ArcModel, v: int) -> Optional[int]:
    """Neighbour whose right end reaches furthest clockwise past r_v.

    Only neighbours ending strictly between r_v and l_v (clockwise) count.
    """
    lv, rv = model.arcs[v]
    gap = model.offset(rv, lv)
    best, best_d = None, 0
    for w in iter_bits(g.adj[v]):
        d = model.offset(rv, model.arcs[w][1])
        if 0 < d < gap and d > best_d:
            best, best_d = w, d
    return best


def covers_circle(model: ArcModel, vs: Sequence[int]) -> bool:
    s = model.size
    covered = 0
    for v in vs:
        l, r = model.arcs[v]
        for k in range(model.offset(l, r)):
            covered |= 1 << ((l - 1 + k) % s)
    return covered == (1 << s) - 1


def covering_small_clique(g: Graph, model: ArcModel) -> Optional[Tuple[int, ...]]:
    # a partner covering the whole complement of v is invisible to the
    # rightmost-neighbour walk, so pairs are checked directly
    for u, w in g.edges():
        if covers_circle(model, (u, w)):
            return (u, w)
    for v in range(g.n):
        v1 = rightmost_neighbor(g, model, v)
        if v1 is None:
            continue
        v2 = rightmost_neighbor(g, model, v1)
        if v2 is None or not (g.closed(v) >> v2 & 1):
            continue
        wit = (v, v1) if v2 == v else (v, v1, v2)
        if covers_circle(model, wit):
            return wit
    return None


def greedy_walk_cycle(g: Graph, model: ArcModel, start: int) -> Optional[Tuple[int, ...]]:
    seen = {}
    walk = []
    v = start
    while v is not None and v not in seen:
        seen[v] = len(walk)
        walk.append(v)
        v = rightmost_neighbor(g, model, v)
    if v is None:
        return None
    cyc = tuple(walk[seen[v]:])
    return cyc if len(cyc) >= 4 and is_induced_cycle(g, cyc) else None


def greedy_induced_cycle(g: Graph, model: ArcModel) -> Optional[Tuple[int, ...]]:
    for s in range(g.n):
        c = greedy_walk_cycle(g, model, s)
        if c is not None:
            return c
    return None


# ---------------------------------------------------------- the main solver

def _guesses(cyc: Tuple[int, ...]) -> List[List[int]]:
    """Seed sets, as masks in cycle order, one list per guess."""
    if len(cyc) == 4:
        return [[1 << v for v in cyc]]
    out = []
    for i in range(5):
        # merge cyc[i] and cyc[i+1]; the merged set comes first
        j = (i + 1) % 5
        seeds = [(1 << cyc[i]) | (1 << cyc[j])]
        for k in range(2, 5):
            seeds.append(1 << cyc[(i + k) % 5])
        out.append(seeds)
    return out


def _touching(g: Graph, u: int, sets: List[int]) -> List[int]:
    return [i for i in range(4) if g.adj[u] & sets[i]]


def place_from_seeds(g: Graph, seeds: List[int]) -> Optional[DisconnectedPartition]:
    """Forced placement to a fixpoint, then 2-SAT over the leftovers."""
    sets = list(seeds)
    placed = 0
    for s in sets:
        placed |= s
    while True:
        changed = False
        for u in iter_bits(g.full & ~placed):
            t = _touching(g, u, sets)
            if len(t) == 4:
                return None
            target = None
            for i in t:
                if (i + 2) % 4 in t:
                    if (i + 1) % 4 in t:
                        target = (i + 1) % 4
                    elif (i + 3) % 4 in t:
                        target = (i + 3) % 4
                    else:
                        raise InternalError("vertex meets two opposite sets only", witness=(u, i), graph=g)
                    break
            if target is not None:
                sets[target] |= 1 << u
                placed |= 1 << u
                changed = True
        if not changed:
            break
    inst = TwoSatInstance()
    var = {}
    opts = {}
    for u in iter_bits(g.full & ~placed):
        t = _touching(g, u, sets)
        if len(t) != 2 or (t[1] - t[0]) % 4 not in (1, 3):
            raise InternalError("leftover vertex does not meet exactly two consecutive sets", witness=(u, tuple(t)), graph=g)
        i = t[0] if (t[1] - t[0]) % 4 == 1 else t[1]
        opts[u] = (i, (i + 1) % 4)
        xa, xb = inst.new_var(), inst.new_var()
        var[u] = {i: xa, (i + 1) % 4: xb}
        inst.add((xa, True), (xb, True))
        inst.add((xa, False), (xb, False))
    for u in opts:
        for v in iter_bits(g.adj[u]):
            if v not in opts or v < u:
                continue
            for i in opts[u]:
                for j in opts[v]:
                    if (i - j) % 4 == 2:
                        inst.add((var[u][i], False), (var[v][j], False))
    val = twosat_solve(inst)
    if val is None:
        return None
    for u, (i, j) in opts.items():
        sets[i if val[var[u][i]] else j] |= 1 << u
    return DisconnectedPartition.from_masks(sets)


def solve_circular_arc(g: Graph, model: ArcModel) -> Verdict:
    bad = validate_arc_model(g, model)
    if bad is not None:
        raise InvalidInput("arc model does not match the graph at pair %s" % (bad,), witness=bad)
    if g.n == 0 or not is_connected(g):
        raise InvalidInput("solve_circular_arc needs a connected graph")
    v = classify_by_diameter(g)
    if v:
        return v.with_route("circular-arc")
    wit = covering_small_clique(g, model)
    if wit is not None:
        return no(COVERING_CLIQUE, route="circular-arc", witness=list(wit))
    cyc = greedy_induced_cycle(g, model)
    if cyc is None:
        return no(NO_INDUCED_LONG_CYCLE, route="circular-arc")
    if len(cyc) not in (4, 5):
        raise InternalError("greedy cycle of length %d at diameter 2" % len(cyc), witness=cyc, graph=g)
    for seeds in _guesses(cyc):
        p = place_from_seeds(g, seeds)
        if p is None:
            continue
        bad = check_partition(g, p)
        if bad is not None:
            raise InternalError("circular-arc certificate fails: %s" % bad, witness=bad.witness, graph=g)
        return yes(p, TWOSAT, route="circular-arc", cycle=list(cyc))
    return no(NO_CONSISTENT_GUESS, route="circular-arc", cycle=list(cyc))


def connectify_partition(g: Graph, model: ArcModel, p: DisconnectedPartition) -> DisconnectedPartition:
    """Reassign a valid partition so that every part is connected."""
    if validate_arc_model(g, model) is not None:
        raise InvalidInput("arc model does not match the graph")
    cyc = find_partition_cycle(g, p)
    masks = p.masks()
    d = [0, 0, 0, 0]
    for i in range(4):
        hit = [v for v in cyc if masks[i] >> v & 1]
        if not hit:
            raise InternalError("partition cycle misses a part", graph=g)
        d[i] = 0
        for c in components(g, masks[i]):
            if c >> hit[0] & 1:
                d[i] = c
    core = d[0] | d[1] | d[2] | d[3]
    out = list(d)
    for v in iter_bits(g.full & ~core):
        t = [i for i in range(4) if g.adj[v] & d[i]]
        if len(t) != 1:
            raise InternalError("leftover vertex meets %d component arcs" % len(t), witness=(v,), graph=g)
        out[t[0]] |= 1 << v
    q = DisconnectedPartition.from_masks(out)
    bad = check_partition(g, q)
    if bad is not None:
        raise InternalError("connected partition fails: %s" % bad, witness=bad.witness, graph=g)
    return q


# ------------------------------------------------------------ recognition

class _ArcsUnresolved:
    def __repr__(self):
        return "ArcsUnresolved"

    def __bool__(self):
        return False


ARCS_UNRESOLVED = _ArcsUnresolved()


class _BudgetOut(Exception):
    pass


class _Sweep:
    """Exact search over clockwise endpoint orders.

    Cut the circle just before l_s. The arcs over the cut (``wrap``) form a
    clique inside N(s); each has a first segment that closes at r_w and a
    second one that opens at l_w and runs to the end. Closing is never a
    choice: a plain arc closes as soon as it has met all its neighbours, and a
    first segment stays open until an opening non-neighbour or its own reopen
    forces it shut. Only the order of openings is searched.
    """

    def __init__(self, g: Graph, budget: int):
        self.g = g
        self.budget = budget
        self.expansions = 0

    def tick(self):
        self.expansions += 1
        if self.expansions > self.budget:
            raise _BudgetOut()

    def run(self, s: int, wrap: int) -> Optional[List[Tuple[str, int]]]:
        g = self.g
        met = [0] * g.n
        for w in iter_bits(wrap):
            met[w] = wrap & ~(1 << w)
        self.wrap = wrap
        self.dead = set()
        unopened = g.full & ~wrap
        return self._open(s, 0, wrap, 0, 0, unopened, met, first=True)

    def _open(self, x, act, phase0, reopened, finished, unopened, met, first=False):
        """Try opening x next; returns the remaining event list or None."""
        g = self.g
        nb = g.adj[x]
        ev = []
        if self.wrap >> x & 1:
            live = act | (phase0 & ~(1 << x)) | reopened
            if live & ~nb or unopened & ~nb:
                return None
            if finished & nb & ~met[x]:
                return None
            if phase0 >> x & 1:
                ev.append(("r", x))
            phase0 &= ~(1 << x)
            reopened |= 1 << x
        else:
            if not first and not (unopened >> x & 1):
                return None
            shut = phase0 & ~nb
            for w in iter_bits(shut):
                ev.append(("r", w))
            phase0 &= nb
            live = act | phase0 | reopened
            if live & ~nb or finished & nb:
                return None
            unopened &= ~(1 << x)
            act |= 1 << x
        ev.append(("l", x))
        met = list(met)
        met[x] |= live
        for y in iter_bits(live):
            met[y] |= 1 << x
        rest = self._step(act, phase0, reopened, finished, unopened, met)
        return None if rest is None else ev + rest

    def _step(self, act, phase0, reopened, finished, unopened, met):
        g = self.g
        self.tick()
        ev = []
        closing = 0
        for v in iter_bits(act):
            if met[v] == g.adj[v]:
                closing |= 1 << v
                ev.append(("r", v))
        act &= ~closing
        finished |= closing
        pending = self.wrap & ~reopened  # wrap arcs still to reopen
        for v in iter_bits(act):
            if g.adj[v] & ~met[v] & ~(unopened | (pending & ~phase0)):
                return None
        for w in iter_bits(reopened):
            if g.adj[w] & ~met[w] & ~(unopened | act | pending):
                return None
        if not unopened and not pending:
            if act:
                return None
            if any(met[w] != g.adj[w] for w in iter_bits(self.wrap)):
                return None
            return ev
        key = (act, phase0, reopened, unopened, tuple(met[v] for v in iter_bits(act | self.wrap)))
        if key in self.dead:
            return None
        for x in iter_bits(unopened | pending):
            res = self._open(x, act, phase0, reopened, finished, unopened, met)
            if res is not None:
                return ev + res
        self.dead.add(key)
        return None


def _wrap_sets(g: Graph, s: int) -> List[int]:
    out = []

    def grow(cur, cand):
        out.append(cur)
        for v in iter_bits(cand):
            grow(cur | (1 << v), cand & g.adj[v] & ~((2 << v) - 1))

    grow(0, g.adj[s])
    out.sort(key=lambda m: (m.bit_count(), m))
    return out


def model_from_events(n: int, events: List[Tuple[str, int]]) -> ArcModel:
    l = [0] * n
    r = [0] * n
    for pos, (kind, v) in enumerate(events, start=1):
        if kind == "l":
            l[v] = pos
        else:
            r[v] = pos
    return ArcModel(tuple(zip(l, r)))


def recognize_arcs(g: Graph, budget: int = DEFAULT_RECOGNITION_BUDGET):
    """A circular-arc model of g, None if g has none, ARCS_UNRESOLVED on budget."""
    if g.n == 0:
        return ArcModel(())
    s = min(range(g.n), key=lambda v: (g.degree(v), v))
    sweep = _Sweep(g, budget)
    try:
        for wrap in _wrap_sets(g, s):
            events = sweep.run(s, wrap)
            if events is None:
                continue
            model = model_from_events(g.n, events)
            bad = validate_arc_model(g, model)
            if bad is not None:
                raise InternalError("recognized model mismatches at %s" % (bad,), witness=bad, graph=g)
            return normalize(model)
    except _BudgetOut:
        return ARCS_UNRESOLVED
    return None
