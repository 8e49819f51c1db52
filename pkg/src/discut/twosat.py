"""2-SAT via strongly connected components of the implication graph."""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

Literal = Tuple[int, bool]  # (variable, polarity); (x, False) is "not x"


@dataclass
class TwoSatInstance:
    nvars: int = 0
    clauses: List[Tuple[Literal, Literal]] = field(default_factory=list)

    def new_var(self) -> int:
        self.nvars += 1
        return self.nvars - 1

    def add(self, a: Literal, b: Literal) -> None:
        for v, _ in (a, b):
            if not 0 <= v < self.nvars:
                raise ValueError("clause references unknown variable %d" % v)
        self.clauses.append((a, b))


def _node(lit: Literal) -> int:
    v, pos = lit
    return 2 * v + (0 if pos else 1)


def twosat_solve(inst: TwoSatInstance) -> Optional[List[bool]]:
    n2 = 2 * inst.nvars
    out = [[] for _ in range(n2)]
    for a, b in inst.clauses:
        na, nb = _node(a), _node(b)
        out[na ^ 1].append(nb)  # not a -> b
        out[nb ^ 1].append(na)
    # iterative Tarjan; components come out in reverse topological order
    index = [-1] * n2
    low = [0] * n2
    comp = [-1] * n2
    on = [False] * n2
    stack = []
    counter = 0
    ncomp = 0
    for root in range(n2):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on[v] = True
            if i < len(out[v]):
                work.append((v, i + 1))
                w = out[v][i]
                if index[w] == -1:
                    work.append((w, 0))
                elif on[w]:
                    low[v] = min(low[v], index[w])
                continue
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
            if work:
                p = work[-1][0]
                low[p] = min(low[p], low[v])
    val = []
    for x in range(inst.nvars):
        if comp[2 * x] == comp[2 * x + 1]:
            return None
        # Tarjan numbers sinks first; a literal is true if it comes later topologically
        val.append(comp[2 * x] < comp[2 * x + 1])
    return val


def satisfies(inst: TwoSatInstance, val: List[bool]) -> bool:
    return all(val[a[0]] == a[1] or val[b[0]] == b[1] for a, b in inst.clauses)
