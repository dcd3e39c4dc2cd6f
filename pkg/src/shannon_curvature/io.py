"""Reading and writing graphs and vertex maps.

Two graph formats are accepted:

* JSON ``{"vertices": [names...], "edges": [[a, b], ...]}``
* plain edge lists, one ``a b`` pair per line (``#`` starts a comment);
  vertices are inferred in order of first appearance.

Vertex names read from files are strings.  On output, product labels such as
``(0, (1, 2))`` are rendered as ``"(0,(1,2))"``.
"""

import json
from pathlib import Path

from .errors import InvalidGraphError
from .graph import Graph


def vertex_name(v):
    if isinstance(v, tuple):
        return "(" + ",".join(vertex_name(x) for x in v) + ")"
    return str(v)


def graph_to_dict(g):
    return {
        "vertices": [vertex_name(v) for v in g.vertices],
        "edges": [[vertex_name(a), vertex_name(b)] for a, b in g.edges()],
    }


def graph_from_dict(data):
    if not isinstance(data, dict) or "vertices" not in data:
        raise InvalidGraphError("graph JSON needs a 'vertices' list")
    vertices = [str(v) for v in data["vertices"]]
    edges = []
    for e in data.get("edges", []):
        if len(e) != 2:
            raise InvalidGraphError("edge %r is not a pair" % (e,))
        edges.append((str(e[0]), str(e[1])))
    return Graph(vertices, edges)


def parse_edge_list(text):
    vertices, seen, edges = [], set(), []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        # a lone name declares an isolated vertex
        if len(parts) > 2:
            raise InvalidGraphError("line %d: expected 'a b'" % lineno)
        for p in parts:
            if p not in seen:
                seen.add(p)
                vertices.append(p)
        if len(parts) == 2:
            edges.append(tuple(parts))
    return Graph(vertices, edges)


def load_graph(path):
    text = Path(path).read_text()
    if str(path).endswith(".json") or text.lstrip().startswith("{"):
        return graph_from_dict(json.loads(text))
    return parse_edge_list(text)


def dump_graph(g, path=None):
    text = json.dumps(graph_to_dict(g), indent=2)
    if path is not None:
        Path(path).write_text(text + "\n")
    return text


def load_vertex_map(path_or_text, g):
    """Read a JSON object mapping vertex name to vertex name over ``g``.

    Names are matched against ``vertex_name`` of the vertices of ``g``.
    """
    text = path_or_text
    if not str(text).lstrip().startswith("{"):
        text = Path(path_or_text).read_text()
    raw = json.loads(text)
    by_name = {vertex_name(v): v for v in g.vertices}
    try:
        return {by_name[str(k)]: by_name[str(v)] for k, v in raw.items()}
    except KeyError as exc:
        raise InvalidGraphError("vertex map names unknown vertex %s" % exc) from None
