"""Command-line entry point: ``discut solve|verify|gen|oracle``."""

import argparse
import json
import math
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Tuple

from .circular_arc import ARCS_UNRESOLVED, parse_arcs, recognize_arcs, solve_circular_arc
from .config import DEFAULT_BUDGETS, Budgets
from .errors import DiscutError, InternalError, InvalidInput
from .generators import KINDS, GeneratorSpec, generate
from .graph import Graph, diameter, independence_exceeds_three
from .hfree import (
    solve_2p2_free,
    solve_copaw_free,
    solve_diamond_free,
    solve_p4_free,
    solve_paw_free,
    solve_small_independence,
    solve_triangle_free,
)
from .io import dumps, parse_certificate, read_instance, result_document, write_instance
from .line_graph import reconstruct_root, solve_line_graph
from .oracle import check_partition, oracle_disconnected_cut
from .pipeline import solve_auto, solve_claw_free
from .verdict import Answer, Verdict

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INVALID = 2
EXIT_UNRESOLVED = 3
EXIT_INTERNAL = 4

CLASSES = (
    "auto",
    "triangle-free",
    "paw-free",
    "copaw-free",
    "diamond-free",
    "2p2-free",
    "p4-free",
    "small-independence",
    "clawfree",
    "circular-arc",
    "line",
    "oracle",
)


def _budgets(n: Optional[int]) -> Budgets:
    return DEFAULT_BUDGETS if n is None else Budgets.uniform(n)


def _read_arcs(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_arcs(fh.read())
    except OSError as exc:
        raise InvalidInput("cannot read %s: %s" % (path, exc))
    except InvalidInput as exc:
        raise InvalidInput("%s: %s" % (path, exc.message), witness=exc.witness)


def run_class(name: str, g: Graph, budgets: Budgets, arcs=None) -> Tuple[Verdict, list]:
    """Solve with the named route; returns the verdict and the serialized trace."""
    if g.n == 0:
        raise InvalidInput("empty graph")
    if name == "auto":
        v = solve_auto(g, budgets, arcs)
        tr = v.notes.pop("trace", None)
        return v, tr.to_json() if tr is not None else []
    if name == "clawfree":
        v, tr = solve_claw_free(g, budgets, arcs)
        return v, tr.to_json()
    if name == "oracle":
        return oracle_disconnected_cut(g, budget=budgets.oracle), []
    if name == "circular-arc":
        model = arcs
        if model is None:
            model = recognize_arcs(g, budget=budgets.recognition)
            if model is ARCS_UNRESOLVED:
                return Verdict(Answer.UNRESOLVED, None, "budget-exceeded", "circular-arc"), []
            if model is None:
                raise InvalidInput("graph is not a circular-arc graph")
        return solve_circular_arc(g, model), []
    if name == "line":
        rm = reconstruct_root(g, budget=budgets.root)
        if rm is None:
            raise InvalidInput("graph is not a line graph")
        if not rm:
            return Verdict(Answer.UNRESOLVED, None, "budget-exceeded", "line-graph"), []
        return solve_line_graph(g, rm, oracle_budget=budgets.oracle), []
    table = {
        "triangle-free": lambda: solve_triangle_free(g),
        "paw-free": lambda: solve_paw_free(g),
        "copaw-free": lambda: solve_copaw_free(g, budgets),
        "diamond-free": lambda: solve_diamond_free(g),
        "2p2-free": lambda: solve_2p2_free(g),
        "p4-free": lambda: solve_p4_free(g),
        "small-independence": lambda: solve_small_independence(g, budgets),
    }
    if name not in table:
        raise InvalidInput("unknown class %r" % name)
    return table[name](), []


def _stats(g: Graph, v: Verdict, elapsed: float) -> dict:
    d = diameter(g)
    return {
        "n": g.n,
        "m": g.m,
        "diameter": None if d == math.inf else int(d),
        "alpha_gt_3": independence_exceeds_three(g) is not None,
        "reductions": int(v.notes.get("reductions", 0)),
        "elapsed_ms": int(round(elapsed * 1000)),
    }


def solve_file(path: str, cls: str, budget: Optional[int], arcs_path: Optional[str], certify: bool) -> Tuple[int, dict]:
    g = read_instance(path)
    arcs = _read_arcs(arcs_path) if arcs_path else None
    if arcs is not None and arcs.n != g.n:
        raise InvalidInput("arc model has %d arcs for %d vertices" % (arcs.n, g.n))
    t0 = time.perf_counter()
    v, trace = run_class(cls, g, _budgets(budget), arcs)
    elapsed = time.perf_counter() - t0
    if v.is_yes and certify:
        bad = check_partition(g, v.certificate)
        if bad is not None:
            raise InternalError("certificate failed verification: %s" % bad, witness=bad.witness, graph=g)
    doc = result_document(v, trace, _stats(g, v, elapsed))
    if v.notes.get("oracle_fallback"):
        doc["stats"]["oracle_fallback"] = True
    return (EXIT_UNRESOLVED if v.answer is Answer.UNRESOLVED else EXIT_OK), doc


def _human(doc: dict) -> str:
    lines = ["answer: %s" % doc["answer"], "reason: %s" % doc["reason"], "class: %s" % doc["class"]]
    if "partition" in doc:
        for i, p in enumerate(doc["partition"], start=1):
            lines.append("V%d: %s" % (i, " ".join(map(str, p))))
    st = doc["stats"]
    lines.append("n=%s m=%s diameter=%s reductions=%s elapsed_ms=%s" % (st.get("n"), st.get("m"), st.get("diameter"), st.get("reductions"), st.get("elapsed_ms")))
    return "\n".join(lines)


def _error(exc: Exception) -> int:
    if isinstance(exc, InternalError):
        print("error: internal-error: %s" % exc.message, file=sys.stderr)
        if exc.graph is not None:
            print("reduced graph:\n" + write_instance(exc.graph), file=sys.stderr, end="")
        return EXIT_INTERNAL
    if isinstance(exc, DiscutError):
        msg = "error: %s: %s" % (exc.code, exc.message)
        if exc.witness is not None:
            msg += " (witness %s)" % (exc.witness,)
        print(msg, file=sys.stderr)
        return EXIT_INVALID
    raise exc


def _batch_one(args) -> Tuple[str, int, Optional[dict], Optional[str]]:
    path, cls, budget, certify = args
    try:
        code, doc = solve_file(path, cls, budget, None, certify)
        return path, code, doc, None
    except InternalError as exc:
        return path, EXIT_INTERNAL, None, "internal-error: %s" % exc.message
    except DiscutError as exc:
        return path, EXIT_INVALID, None, "%s: %s" % (exc.code, exc.message)


def cmd_solve(a) -> int:
    if a.batch:
        files = sorted(os.path.join(a.batch, f) for f in os.listdir(a.batch) if os.path.isfile(os.path.join(a.batch, f)))
        jobs = [(f, a.cls, a.budget, a.certify) for f in files]
        if a.jobs > 1:
            with ProcessPoolExecutor(max_workers=a.jobs) as ex:
                results = list(ex.map(_batch_one, jobs))
        else:
            results = [_batch_one(j) for j in jobs]
        worst = 0
        for path, code, doc, err in results:
            row = {"file": os.path.basename(path), "exit": code}
            if doc is not None:
                row["result"] = doc
            if err is not None:
                row["error"] = err
            print(dumps(row))
            worst = max(worst, code)
        return worst
    if not a.input:
        print("error: invalid-input: --input or --batch is required", file=sys.stderr)
        return EXIT_INVALID
    try:
        code, doc = solve_file(a.input, a.cls, a.budget, a.arcs, a.certify)
    except Exception as exc:  # noqa: BLE001 - mapped to exit codes
        return _error(exc)
    print(dumps(doc) if a.json else _human(doc))
    return code


def cmd_verify(a) -> int:
    try:
        g = read_instance(a.input)
        try:
            with open(a.certificate, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InvalidInput("cannot read %s: %s" % (a.certificate, exc))
        p = parse_certificate(text)
        try:
            doc = json.loads(text)
        except ValueError:
            doc = None
        if isinstance(doc, dict):
            n_doc = doc.get("stats", {}).get("n") if isinstance(doc.get("stats"), dict) else None
            if n_doc is not None and n_doc != g.n:
                raise InvalidInput("certificate is for n=%s, graph has n=%d" % (n_doc, g.n))
        bad = check_partition(g, p)
    except Exception as exc:  # noqa: BLE001
        return _error(exc)
    if bad is None:
        print("valid")
        return EXIT_OK
    print("violation: %s witness %s" % (bad.code, list(bad.witness)))
    return EXIT_VIOLATION


def cmd_gen(a) -> int:
    try:
        res = generate(GeneratorSpec(a.model, a.n, a.density, a.seed))
    except DiscutError as exc:
        return _error(exc)
    comments = ["model %s n %d seed %d density %s" % (a.model, a.n, a.seed, a.density)]
    if res.arcs is not None and not a.arcs_out:
        comments.append("arcs (clockwise l r, one per vertex):")
        comments.extend("arc %d %d %d" % (v, l, r) for v, (l, r) in enumerate(res.arcs.arcs))
    sys.stdout.write(write_instance(res.graph, comments))
    if res.arcs is not None and a.arcs_out:
        with open(a.arcs_out, "w", encoding="utf-8") as fh:
            fh.write(res.arcs.to_text())
    return EXIT_OK


def cmd_oracle(a) -> int:
    try:
        g = read_instance(a.input)
        t0 = time.perf_counter()
        v = oracle_disconnected_cut(g, budget=a.budget if a.budget is not None else DEFAULT_BUDGETS.oracle)
        doc = result_document(v, [], _stats(g, v, time.perf_counter() - t0))
    except Exception as exc:  # noqa: BLE001
        return _error(exc)
    print(dumps(doc))
    return EXIT_UNRESOLVED if v.answer is Answer.UNRESOLVED else EXIT_OK


def _nonneg(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="discut", description="Decide whether a graph has a disconnected cut.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve one instance or a directory of instances")
    s.add_argument("--input", help="instance file")
    s.add_argument("--arcs", help="circular-arc model file for the instance")
    s.add_argument("--class", dest="cls", default="auto", choices=CLASSES)
    s.add_argument("--budget", type=_nonneg, help="work limit for exhaustive and search steps")
    s.add_argument("--json", action="store_true", help="print the result document as JSON")
    s.add_argument("--certify", action="store_true", help="re-check yes certificates before printing")
    s.add_argument("--batch", metavar="DIR", help="solve every file in DIR, one JSON line each")
    s.add_argument("--jobs", type=int, default=1, help="worker processes for --batch")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check a certificate against an instance")
    v.add_argument("--input", required=True)
    v.add_argument("--certificate", required=True)
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gen", help="emit a seeded random instance")
    g.add_argument("--model", required=True, help="one of: " + ", ".join(KINDS))
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--density", type=float, default=0.5)
    g.add_argument("--arcs-out", help="write the arc model here (proper-circular-arc only)")
    g.set_defaults(func=cmd_gen)

    o = sub.add_parser("oracle", help="exhaustive search within a subset budget")
    o.add_argument("--input", required=True)
    o.add_argument("--budget", type=_nonneg)
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    return a.func(a)


if __name__ == "__main__":
    sys.exit(main())
