"""
Serialization of graphs, orientations and certificates.

Edge-list text:

    # comment
    vertices: a b c
    a b
    b c

JSON: {"vertices": [...], "edges": [[u, v], ...]}. Orientations are one
"u -> v" line per arc. DOT output is plain text for the graphviz tools.
"""
import json
import logging
import os
from typing import Dict, Iterable, List, Optional, Sequence

from .errors import GraphError, GraphFormatError
from .graph_core import Graph, build_graph
from .semitransitive import Certificate, Orientation, orient
from .validation import InputValidator

logger = logging.getLogger(__name__)

def _strip(text: str) -> List[str]:
    lines = []
    for raw in InputValidator.sanitize_input(text).splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines

def parse_edge_list(text: str) -> Graph:
    lines = _strip(text)
    if not lines or not lines[0].startswith("vertices:"):
        raise GraphFormatError("Edge list must start with a 'vertices:' line")
    vertices = lines[0][len("vertices:"):].split()
    edges = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"Edge line {lineno} must hold two labels: {line!r}")
        edges.append(tuple(parts))
    try:
        return build_graph(vertices, edges)
    except GraphError as e:
        raise GraphFormatError(f"Invalid graph in edge list: {str(e)}")

def dump_edge_list(g: Graph) -> str:
    lines = ["vertices: " + " ".join(g.vertices)]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"

def graph_to_dict(g: Graph) -> Dict:
    return {"vertices": list(g.vertices), "edges": [list(e) for e in g.edges]}

def parse_graph_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphFormatError(f"Invalid JSON: {str(e)}")
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise GraphFormatError("Graph JSON needs 'vertices' and 'edges'")
    try:
        return build_graph(data["vertices"], [tuple(e) for e in data["edges"]])
    except (GraphError, TypeError) as e:
        raise GraphFormatError(f"Invalid graph in JSON: {str(e)}")

def dump_graph_json(g: Graph) -> str:
    return json.dumps(graph_to_dict(g), indent=2) + "\n"

def load_graph(path: str) -> Graph:
    """Read a graph file; .json is JSON, anything else is an edge list."""
    if not os.path.exists(path):
        raise GraphFormatError(f"Graph file not found: {path}")
    with open(path, "r", encoding="utf-8") as f:
        text = f.read()
    g = parse_graph_json(text) if path.endswith(".json") else parse_edge_list(text)
    logger.info(f"Loaded {g} from {path}")
    return g

def save_graph(g: Graph, path: str) -> None:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(dump_graph_json(g) if path.endswith(".json") else dump_edge_list(g))
    logger.info(f"Wrote {g} to {path}")

def dump_orientation(d: Orientation) -> str:
    return "".join(f"{u} -> {v}\n" for u, v in d.arcs)

def parse_orientation(text: str, base: Graph) -> Orientation:
    arcs = []
    for line in _strip(text):
        parts = [p.strip() for p in line.split("->")]
        if len(parts) != 2 or not all(parts):
            raise GraphFormatError(f"Orientation line must look like 'u -> v': {line!r}")
        arcs.append(tuple(parts))
    return orient(base, arcs)

def certificate_to_json(cert: Certificate) -> str:
    return json.dumps(cert.to_dict(), indent=2) + "\n"

def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'

def _rank_groups(groups: Optional[Iterable[Sequence[str]]]) -> List[str]:
    lines = []
    for group in groups or ():
        members = " ".join(_quote(v) + ";" for v in group)
        lines.append(f"   {{ rank = same; {members} }}")
    return lines

def graph_to_dot(g: Graph, name: str = "G", groups: Optional[Iterable[Sequence[str]]] = None) -> str:
    """Undirected DOT text; each of groups is drawn on one rank."""
    lines = [f"graph {_quote(name)} {{"]
    lines.extend(f"   {_quote(v)};" for v in g.vertices)
    lines.extend(_rank_groups(groups))
    lines.extend(f"   {_quote(u)} -- {_quote(v)};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"

def orientation_to_dot(d: Orientation, name: str = "D", groups: Optional[Iterable[Sequence[str]]] = None) -> str:
    lines = [f"digraph {_quote(name)} {{"]
    lines.extend(f"   {_quote(v)};" for v in d.base.vertices)
    lines.extend(_rank_groups(groups))
    lines.extend(f"   {_quote(u)} -> {_quote(v)};" for u, v in d.arcs)
    lines.append("}")
    return "\n".join(lines) + "\n"
