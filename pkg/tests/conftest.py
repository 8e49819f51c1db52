import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from discut.graph import Graph, build_graph, is_connected

settings.register_profile("default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# criterion number -> (passed, detail); filled by test_acceptance
ACCEPTANCE = {}


@st.composite
def graphs(draw, min_n=1, max_n=9, connected=True):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, c in zip(pairs, chosen) if c]
    if connected:
        # chain the components through their lowest vertices
        g = build_graph(n, edges)
        seen = [False] * n
        reps = []
        for v in range(n):
            if not seen[v]:
                reps.append(v)
                stack = [v]
                seen[v] = True
                while stack:
                    x = stack.pop()
                    for w in g.neighbours(x):
                        if not seen[w]:
                            seen[w] = True
                            stack.append(w)
        edges += [(reps[i], reps[i + 1]) for i in range(len(reps) - 1)]
    return build_graph(n, edges)


def random_connected(n: int, p: float, rng: random.Random) -> Graph:
    while True:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = build_graph(n, edges)
        if is_connected(g):
            return g


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line("criterion %d: %s  %s" % (k, "PASS" if ok else "FAIL", detail))
