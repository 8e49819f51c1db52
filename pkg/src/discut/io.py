"""Instance files, certificate files and result documents."""

import json
from typing import Iterable, List, Optional

from .errors import InvalidInput
from .graph import Graph, build_graph
from .verdict import DisconnectedPartition, Verdict


def _int_token(tok: str, lineno: int, col: int, what: str) -> int:
    if not tok.isdigit():
        raise InvalidInput("line %d, column %d: expected %s, found %r" % (lineno, col, what, tok), witness=(lineno, col))
    return int(tok)


def _tokens(line: str):
    """(column, token) pairs, 1-based columns."""
    out = []
    i = 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        out.append((i + 1, line[i:j]))
        i = j
    return out


def parse_instance(text: str) -> Graph:
    header = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        toks = _tokens(raw)
        if len(toks) != 2:
            what = "header 'n m'" if header is None else "edge 'u v'"
            raise InvalidInput("line %d: expected %s, found %d fields" % (lineno, what, len(toks)), witness=(lineno, 1))
        if header is None:
            n = _int_token(toks[0][1], lineno, toks[0][0], "vertex count")
            m = _int_token(toks[1][1], lineno, toks[1][0], "edge count")
            header = (n, m, lineno)
            continue
        n = header[0]
        u = _int_token(toks[0][1], lineno, toks[0][0], "vertex")
        v = _int_token(toks[1][1], lineno, toks[1][0], "vertex")
        for val, (col, _) in ((u, toks[0]), (v, toks[1])):
            if val >= n:
                raise InvalidInput("line %d, column %d: vertex %d outside 0..%d" % (lineno, col, val, n - 1), witness=(lineno, col))
        if u == v:
            raise InvalidInput("line %d: self-loop at %d" % (lineno, u), witness=(lineno, 1))
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InvalidInput("line %d: duplicate edge %d %d" % (lineno, u, v), witness=(lineno, 1))
        seen.add(key)
        edges.append(key)
    if header is None:
        raise InvalidInput("empty instance: missing header 'n m'", witness=(1, 1))
    n, m, hl = header
    if len(edges) != m:
        raise InvalidInput("header on line %d declares %d edges, found %d" % (hl, m, len(edges)), witness=(hl, 1))
    return build_graph(n, edges)


def read_instance(path: str) -> Graph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise InvalidInput("cannot read %s: %s" % (path, exc))
    try:
        return parse_instance(text)
    except InvalidInput as exc:
        raise InvalidInput("%s: %s" % (path, exc.message), witness=exc.witness)


def write_instance(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = ["# " + c for c in comments]
    lines.append("%d %d" % (g.n, g.m))
    lines.extend("%d %d" % e for e in g.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------- result documents

def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def result_document(v: Verdict, trace_json: Optional[List[dict]] = None, stats: Optional[dict] = None) -> dict:
    doc = {
        "answer": v.answer.value,
        "reason": v.reason,
        "class": v.route,
        "trace": trace_json or [],
        "stats": stats or {},
    }
    if v.is_yes:
        doc["partition"] = v.certificate.as_lists()
    return doc


def parse_certificate(text: str) -> DisconnectedPartition:
    """A result document with a partition, or a bare list of four vertex lists."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput("certificate is not JSON: line %d, column %d: %s" % (exc.lineno, exc.colno, exc.msg), witness=(exc.lineno, exc.colno))
    if isinstance(data, dict):
        if "partition" not in data:
            raise InvalidInput("certificate document has no partition (answer %r)" % data.get("answer"))
        data = data["partition"]
    if not (isinstance(data, list) and len(data) == 4 and all(isinstance(p, list) for p in data)):
        raise InvalidInput("partition must be a list of four vertex lists")
    for p in data:
        for v in p:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise InvalidInput("partition entries must be non-negative integers, found %r" % (v,))
    return DisconnectedPartition.of(*data)
