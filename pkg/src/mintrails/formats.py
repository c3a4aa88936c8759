"""Graph documents (JSON and a small DOT subset) and trail notation.

JSON graph document::

    {"nodes": ["a", "b", "c"], "edges": [["a", "b"], ["c", "b"]]}

Accepted DOT subset::

    digraph NAME { a -> b; b -> c [color=red]; d; }

Node statements, edge statements (chains allowed), semicolons, ``//`` and
``/* */`` comments, and bracketed attribute lists (ignored). Anything else is
a :class:`ParseError`.
"""
from __future__ import annotations

import json
import re
from typing import Union

from .dag import Dag, build_dag
from .errors import ParseError
from .trails import Direction, Trail


def graph_to_doc(d: Dag) -> dict:
    return {"nodes": d.names(), "edges": [[d.name(u), d.name(v)] for u, v in d.arcs]}


def dumps_graph(d: Dag, indent=None) -> str:
    return json.dumps(graph_to_doc(d), indent=indent)


def graph_from_doc(doc) -> Dag:
    if not isinstance(doc, dict) or not isinstance(doc.get("nodes"), list):
        raise ParseError('graph document needs a "nodes" list')
    edges = doc.get("edges", [])
    if not isinstance(edges, list):
        raise ParseError('"edges" must be a list')
    names = [str(s) for s in doc["nodes"]]
    index = {}
    for i, s in enumerate(names):
        index.setdefault(s, i)
    arcs = []
    for k, e in enumerate(edges):
        if not (isinstance(e, (list, tuple)) and len(e) == 2):
            raise ParseError(f"edge #{k} must be a [from, to] pair")
        try:
            arcs.append((index[str(e[0])], index[str(e[1])]))
        except KeyError as exc:
            raise ParseError(f"edge #{k} mentions unknown node {exc.args[0]!r}") from None
    return build_dag(len(names), arcs, names)


_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r]+|\n)
  | (?P<comment>//[^\n]*|/\*.*?\*/)
  | (?P<arrow>->)
  | (?P<undirected>--)
  | (?P<punct>[{}\[\];,=])
  | (?P<id>[A-Za-z_\u0080-\uffff][A-Za-z0-9_\u0080-\uffff]*|-?(?:\.\d+|\d+(?:\.\d*)?))
  | (?P<string>"(?:[^"\\]|\\.)*")
    """,
    re.VERBOSE | re.DOTALL,
)

_KEYWORDS = {"graph", "node", "edge", "subgraph", "strict", "digraph"}


def _tokenize(text):
    pos, line, col = 0, 1, 1
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind, value = m.lastgroup, m.group()
        if kind == "id" and value.lower() in _KEYWORDS:
            kind = "keyword"
            value = value.lower()
        if kind == "string":
            value = value[1:-1].replace('\\"', '"')
            kind = "id"
        if kind not in ("ws", "comment"):
            out.append((kind, value, line, col))
        newlines = m.group().count("\n")
        if newlines:
            line += newlines
            col = len(m.group()) - m.group().rfind("\n")
        else:
            col += len(m.group())
        pos = m.end()
    out.append(("eof", "", line, col))
    return out


def parse_dot(text: str) -> Dag:
    toks = _tokenize(text)
    i = 0

    def peek():
        return toks[i]

    def expect(kind, value=None):
        nonlocal i
        k, v, ln, co = toks[i]
        if k != kind or (value is not None and v != value):
            want = value or kind
            raise ParseError(f"expected {want!r}, found {v or k!r}", ln, co)
        i += 1
        return v

    if peek()[:2] == ("keyword", "strict"):
        i += 1
    expect("keyword", "digraph")
    if peek()[0] == "id":
        i += 1
    expect("punct", "{")

    names: list[str] = []
    index: dict[str, int] = {}
    arcs = []

    def node(label):
        if label not in index:
            index[label] = len(names)
            names.append(label)
        return index[label]

    def skip_attrs():
        nonlocal i
        while peek()[:2] == ("punct", "["):
            i += 1
            while True:
                k, v, ln, co = peek()
                if k == "eof":
                    raise ParseError("unterminated attribute list", ln, co)
                i += 1
                if (k, v) == ("punct", "]"):
                    break

    while True:
        k, v, ln, co = peek()
        if (k, v) == ("punct", "}"):
            i += 1
            break
        if (k, v) == ("punct", ";"):
            i += 1
            continue
        if k != "id":
            raise ParseError(f"unsupported statement starting with {v or k!r}", ln, co)
        chain = [node(expect("id"))]
        while peek()[0] == "arrow":
            i += 1
            chain.append(node(expect("id")))
        if peek()[0] == "undirected":
            raise ParseError("undirected edges are not supported", *peek()[2:])
        skip_attrs()
        arcs.extend(zip(chain, chain[1:]))
        if peek()[:2] == ("punct", ";"):
            i += 1
    expect("eof")
    return build_dag(len(names), arcs, names)


def parse_graph(data: Union[bytes, str], fmt: str = "auto") -> Dag:
    """Read a graph in ``json`` or ``dot`` format (``auto`` sniffs the first character)."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    if fmt == "auto":
        fmt = "json" if text.lstrip().startswith("{") else "dot"
    if fmt == "json":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from None
        return graph_from_doc(doc)
    if fmt == "dot":
        return parse_dot(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def to_dot(d: Dag, name: str = "g") -> str:
    lines = [f"digraph {name} {{"]
    lines += [f'  "{d.name(v)}";' for v in range(d.n)]
    lines += [f'  "{d.name(u)}" -> "{d.name(v)}";' for u, v in d.arcs]
    lines.append("}")
    return "\n".join(lines) + "\n"


_ARROW = re.compile(r"\s*(->|<-)\s*")


def parse_trail(text: str, d: Dag) -> Trail:
    """Inverse of :meth:`Trail.render`; checks every arrow against ``d``."""
    parts = _ARROW.split(text.strip())
    names, arrows = parts[0::2], parts[1::2]
    nodes = tuple(d.index(s.strip()) for s in names)
    dirs = tuple(Direction(a) for a in arrows)
    t = Trail(nodes, dirs)
    for u, v, s in zip(nodes, nodes[1:], dirs):
        ok = d.has_arc(u, v) if s is Direction.FORWARD else d.has_arc(v, u)
        if not ok:
            raise ParseError(f"no arc for step {d.name(u)} {s.value} {d.name(v)}")
    return t


def parse_node_list(text: str, d: Dag) -> list[int]:
    """Comma-separated labels; the empty string is the empty set."""
    return [d.index(s.strip()) for s in text.split(",") if s.strip()]
