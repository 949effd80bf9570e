"""Line-oriented text format for graphs, embeddings and reduced instances.

::

    graph <name>
    v <id> [label=<kind:idx,...>]
    e <id1> <id2> [color=+|-|0]
    rot <id>: <n1> <n2> ...
    meta problem <tag>
    meta n <n>
    meta clause <j> <lit> ...
    meta s <id> / meta t <id>
    meta k <i> <k_i>
    map a <i> <j> <vertex id> block=<b>

Blank lines and ``#`` comments are ignored.  Ids that look like integers
are read back as integers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .gadgets import ReducedInstance
from .graph import MINUS, NEUTRAL, PLUS, Graph, VertexLabel, edge
from .sat import PlanarCnf

_INT = re.compile(r"-?\d+\Z")
_COLOR_OUT = {PLUS: "+", MINUS: "-", NEUTRAL: "0"}
_COLOR_IN = {"+": PLUS, "-": MINUS, "0": NEUTRAL}


class FormatError(ValueError):
    pass


def _tok(v) -> str:
    s = str(v)
    if not s or any(c.isspace() for c in s):
        raise FormatError(f"id {v!r} is not a single token")
    return s


def _id(tok: str):
    return int(tok) if _INT.match(tok) else tok


def format_graph(g: Graph, rot=None) -> list[str]:
    lines = [f"graph {g.name}"]
    for v in g:
        lab = g.label(v)
        lines.append(f"v {_tok(v)}" + (f" label={lab}" if lab is not None else ""))
    for u, v in g.edge_pairs():
        c = g.color(edge(u, v))
        lines.append(f"e {_tok(u)} {_tok(v)}" + (f" color={_COLOR_OUT[c]}" if c != NEUTRAL else ""))
    if rot is not None:
        for v in g:
            lines.append(f"rot {_tok(v)}: " + " ".join(_tok(x) for x in rot[v]))
    return lines


@dataclass
class Document:
    graph: Graph
    rotation: dict | None
    meta: list[list[str]] = field(default_factory=list)
    maps: list[list[str]] = field(default_factory=list)


def parse(text: str) -> Document:
    name = "G"
    verts: list = []
    labels: dict = {}
    edges: list = []
    colors: dict = {}
    rot: dict = {}
    meta: list[list[str]] = []
    maps: list[list[str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        head = parts[0]
        try:
            if head == "graph":
                name = parts[1] if len(parts) > 1 else name
            elif head == "v":
                v = _id(parts[1])
                verts.append(v)
                for opt in parts[2:]:
                    key, _, val = opt.partition("=")
                    if key != "label":
                        raise FormatError(f"unknown vertex attribute {key!r}")
                    labels[v] = VertexLabel.parse(val)
            elif head == "e":
                u, v = _id(parts[1]), _id(parts[2])
                edges.append((u, v))
                for opt in parts[3:]:
                    key, _, val = opt.partition("=")
                    if key != "color" or val not in _COLOR_IN:
                        raise FormatError(f"bad edge attribute {opt!r}")
                    colors[edge(u, v)] = _COLOR_IN[val]
            elif head == "rot":
                if not parts[1].endswith(":"):
                    raise FormatError("rotation line needs '<id>:'")
                rot[_id(parts[1][:-1])] = tuple(_id(x) for x in parts[2:])
            elif head == "meta":
                meta.append(parts[1:])
            elif head == "map":
                maps.append(parts[1:])
            else:
                raise FormatError(f"unknown record {head!r}")
        except (IndexError, ValueError) as exc:
            raise FormatError(f"line {lineno}: {exc or 'truncated record'}") from exc
    g = Graph(verts, edges, labels, colors, name=name)
    return Document(g, rot or None, meta, maps)


def format_embedded_graph(g: Graph, rot=None) -> str:
    return "\n".join(format_graph(g, rot)) + "\n"


def parse_embedded_graph(text: str) -> tuple[Graph, dict | None]:
    doc = parse(text)
    return doc.graph, doc.rotation


# -- reduced instances ------------------------------------------------------------


def format_instance(inst: ReducedInstance) -> str:
    lines = format_graph(inst.graph, inst.rotation)
    phi = inst.phi
    lines.append(f"meta problem {inst.problem}")
    lines.append(f"meta n {phi.n}")
    for j, c in enumerate(phi.clauses, start=1):
        lits = sorted(c, key=lambda x: (abs(x), x))
        lines.append(f"meta clause {j}" + "".join(f" {x}" for x in lits))
    if inst.s is not None:
        lines.append(f"meta s {_tok(inst.s)}")
        lines.append(f"meta t {_tok(inst.t)}")
    for i in sorted(inst.k):
        lines.append(f"meta k {i} {inst.k[i]}")
    for (i, j), (a, block) in sorted(inst.amap.items()):
        lines.append(f"map a {i} {j} {_tok(a)} block={block}")
    return "\n".join(lines) + "\n"


def parse_instance(text: str) -> ReducedInstance:
    doc = parse(text)
    problem = None
    n = 0
    clauses: dict[int, frozenset] = {}
    s = t = None
    k: dict[int, int] = {}
    for rec in doc.meta:
        key = rec[0]
        if key == "problem":
            problem = rec[1]
        elif key == "n":
            n = int(rec[1])
        elif key == "clause":
            clauses[int(rec[1])] = frozenset(int(x) for x in rec[2:])
        elif key == "s":
            s = _id(rec[1])
        elif key == "t":
            t = _id(rec[1])
        elif key == "k":
            k[int(rec[1])] = int(rec[2])
        else:
            raise FormatError(f"unknown meta key {key!r}")
    if problem is None:
        raise FormatError("instance lacks 'meta problem'")
    if doc.rotation is None:
        raise FormatError("instance lacks a rotation system")
    amap = {}
    for rec in doc.maps:
        if rec[0] != "a" or len(rec) != 5 or not rec[4].startswith("block="):
            raise FormatError(f"bad map record {' '.join(rec)!r}")
        amap[(int(rec[1]), int(rec[2]))] = (_id(rec[3]), int(rec[4][len("block=") :]))
    phi = PlanarCnf(n, tuple(clauses[j] for j in sorted(clauses)))
    return ReducedInstance(doc.graph, doc.rotation, problem, phi, k, s, t, amap)


# -- DOT ------------------------------------------------------------------------------

_DOT_COLOR = {PLUS: "blue", MINUS: "red"}


def _esc(x) -> str:
    return str(x).replace("\\", "\\\\").replace('"', '\\"')


def _quote(x) -> str:
    return f'"{_esc(x)}"'


def to_dot(g: Graph, s=None, t=None) -> str:
    """Graphviz rendering; layout is left to the renderer."""
    lines = [f"graph {_quote(g.name)} {{"]
    for v in g:
        lab = g.label(v)
        text = _esc(v) + (f"\\n{_esc(lab)}" if lab is not None else "")
        extra = ", shape=doublecircle" if v is not None and v in (s, t) else ""
        lines.append(f'  {_quote(v)} [label="{text}"{extra}];')
    for u, v in g.edge_pairs():
        c = g.color(edge(u, v))
        attr = f' [color={_DOT_COLOR[c]}, sign="{_COLOR_OUT[c]}"]' if c != NEUTRAL else ""
        lines.append(f"  {_quote(u)} -- {_quote(v)}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
