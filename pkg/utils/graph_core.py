"""
Labeled simple graphs: construction, the standard and named families,
line graphs, Mycielski graphs and embedding search.

Graphs are immutable. Every operation that "changes" a graph returns a new one.
"""
import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import GraphError, UnknownVertexError, ValidationError
from .validation import InputValidator, validate_label

logger = logging.getLogger(__name__)

Edge = Tuple[str, str]

@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph with canonically ordered vertices and edges."""

    vertices: Tuple[str, ...]
    edges: Tuple[Edge, ...]

    @cached_property
    def index(self) -> Dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def adjacency(self) -> Dict[str, FrozenSet[str]]:
        nbrs: Dict[str, set] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    @cached_property
    def edge_set(self) -> FrozenSet[FrozenSet[str]]:
        return frozenset(frozenset(e) for e in self.edges)

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.edges)

    def has_vertex(self, v: str) -> bool:
        return v in self.index

    def require_vertex(self, v: str) -> str:
        if v not in self.index:
            raise UnknownVertexError(f"Unknown vertex {v!r}")
        return v

    def has_edge(self, u: str, v: str) -> bool:
        return v in self.adjacency.get(u, ())

    def neighbors(self, v: str) -> List[str]:
        """Neighbors of v in vertex order."""
        self.require_vertex(v)
        return sorted(self.adjacency[v], key=self.index.__getitem__)

    def degree(self, v: str) -> int:
        self.require_vertex(v)
        return len(self.adjacency[v])

    def edge_key(self, u: str, v: str) -> Edge:
        """The canonical (position-ordered) form of the edge uv."""
        self.require_vertex(u)
        self.require_vertex(v)
        if not self.has_edge(u, v):
            raise GraphError(f"No edge between {u!r} and {v!r}")
        return (u, v) if self.index[u] < self.index[v] else (v, u)

    def __str__(self) -> str:
        return f"Graph(|V|={self.order}, |E|={self.size})"

def _canonical_edges(vertices: Sequence[str], pairs: Iterable[Tuple[str, str]]) -> Tuple[Edge, ...]:
    index = {v: i for i, v in enumerate(vertices)}
    seen = set()
    edges = []
    for pair in pairs:
        if len(pair) != 2:
            raise GraphError(f"Edge {pair!r} must have exactly two endpoints")
        u, v = (validate_label(x) for x in pair)
        for x in (u, v):
            if x not in index:
                raise UnknownVertexError(f"Edge {u}-{v} has unknown endpoint {x!r}")
        if u == v:
            raise GraphError(f"Loop at vertex {u!r} is not allowed")
        key = frozenset((u, v))
        if key in seen:
            raise GraphError(f"Duplicate edge {u}-{v}")
        seen.add(key)
        edges.append((u, v) if index[u] < index[v] else (v, u))
    edges.sort(key=lambda e: (index[e[0]], index[e[1]]))
    return tuple(edges)

def build_graph(vertices: Iterable, edges: Iterable[Tuple]) -> Graph:
    """
    Build a canonical simple graph.

    Args:
        vertices: Labels in the order that fixes the canonical form
        edges: Unordered label pairs

    Returns:
        Graph with every edge ordered by vertex position

    Raises:
        GraphError: duplicate label, loop or duplicate edge
        UnknownVertexError: an endpoint is not a vertex
    """
    labels = [validate_label(v) for v in vertices]
    seen = set()
    for v in labels:
        if v in seen:
            raise GraphError(f"Duplicate vertex label {v!r}")
        seen.add(v)
    return Graph(tuple(labels), _canonical_edges(labels, edges))

def empty_graph(n: int) -> Graph:
    InputValidator.validate_range("n", n, 0)
    return build_graph([str(i) for i in range(1, n + 1)], [])

def cycle(n: int) -> Graph:
    InputValidator.validate_range("n", n, 3)
    labels = [str(i) for i in range(1, n + 1)]
    return build_graph(labels, [(labels[i], labels[(i + 1) % n]) for i in range(n)])

def path(n: int) -> Graph:
    InputValidator.validate_range("n", n, 1)
    labels = [str(i) for i in range(1, n + 1)]
    return build_graph(labels, [(labels[i], labels[i + 1]) for i in range(n - 1)])

def complete(n: int) -> Graph:
    InputValidator.validate_range("n", n, 1)
    labels = [str(i) for i in range(1, n + 1)]
    return build_graph(labels, combinations(labels, 2))

def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n} on the sides 1..m and 1'..n'."""
    InputValidator.validate_range("m", m, 1)
    InputValidator.validate_range("n", n, 1)
    left = [str(i) for i in range(1, m + 1)]
    right = [f"{j}'" for j in range(1, n + 1)]
    return build_graph(left + right, [(u, v) for u in left for v in right])

def k4_prime() -> Graph:
    """K_4 on 1..4 with a pendant vertex y attached to 1."""
    core = ["1", "2", "3", "4"]
    return build_graph(core + ["y"], list(combinations(core, 2)) + [("1", "y")])

def k4_prime_edge_names() -> Dict[Edge, str]:
    """Edge names a12 ... a34, a1y as used for the vertices of L(K_4')."""
    g = k4_prime()
    return {e: f"a{e[0]}{e[1]}" for e in g.edges}

# W_5' edges keyed by their figure names; v5 is the rim vertex the hub misses
_W5_PRIME_EDGES = {
    "e1": ("v1", "v5"),
    "e2": ("v1", "v2"),
    "e3": ("v2", "v3"),
    "e4": ("v3", "v4"),
    "e5": ("v4", "v5"),
    "b1": ("v1", "h"),
    "b2": ("v2", "h"),
    "b3": ("v3", "h"),
    "b4": ("v4", "h"),
}

def w5_prime() -> Graph:
    """The 5-cycle v1..v5 plus a hub h adjacent to v1..v4 only."""
    return build_graph(["v1", "v2", "v3", "v4", "v5", "h"], _W5_PRIME_EDGES.values())

def w5_prime_edge_names() -> Dict[Edge, str]:
    g = w5_prime()
    return {g.edge_key(u, v): name for name, (u, v) in _W5_PRIME_EDGES.items()}

def graph_a() -> Graph:
    """
    The 7-vertex graph A. The two unlabeled vertices of its drawing are
    encoded as 5 (the "n" vertex) and 6 (the "n+1" vertex).
    """
    return build_graph(
        ["1", "2", "3", "4", "5", "6", "0"],
        [("1", "2"), ("2", "3"), ("3", "4"), ("1", "5"), ("4", "5"), ("1", "6"),
         ("3", "6"), ("4", "6"), ("2", "0"), ("3", "0"), ("4", "0"), ("5", "0")],
    )

def relabel(g: Graph, mapping: Mapping[str, str]) -> Graph:
    """Rename vertices; labels missing from mapping are kept."""
    rename = {v: validate_label(mapping.get(v, v)) for v in g.vertices}
    return build_graph([rename[v] for v in g.vertices], [(rename[u], rename[v]) for u, v in g.edges])

def mycielski(g: Graph) -> Graph:
    """
    The Mycielski graph of g: originals, primed shadows i' and the apex 0.

    Raises:
        GraphError: g is empty or already uses a reserved label
    """
    if g.order == 0:
        raise GraphError("Mycielski construction needs a nonempty graph")
    shadows = [f"{v}'" for v in g.vertices]
    reserved = set(shadows) | {"0"}
    clash = sorted(reserved & set(g.vertices), key=str)
    if clash:
        raise GraphError(f"Label collision with reserved Mycielski names: {', '.join(clash)}")
    edges: List[Edge] = list(g.edges)
    edges.extend((f"{v}'", "0") for v in g.vertices)
    for u, v in g.edges:
        edges.append((u, f"{v}'"))
        edges.append((v, f"{u}'"))
    result = build_graph(list(g.vertices) + shadows + ["0"], edges)
    logger.debug(f"mycielski: {g} -> {result}")
    return result

def line_graph(g: Graph, names: Optional[Mapping[Edge, str]] = None) -> Graph:
    """
    The line graph of g.

    Args:
        g: Host graph with at least one edge
        names: Optional vertex name for each canonical edge; defaults to "l(u,v)"

    Returns:
        Graph whose vertices follow g's canonical edge order
    """
    if g.size == 0:
        raise GraphError("Line graph of a graph without edges is undefined")
    if names is None:
        label = {e: f"l({e[0]},{e[1]})" for e in g.edges}
    else:
        missing = [e for e in g.edges if e not in names]
        if missing:
            raise GraphError(f"No name given for edge {missing[0][0]}-{missing[0][1]}")
        label = {e: names[e] for e in g.edges}
    incident: Dict[str, List[Edge]] = {v: [] for v in g.vertices}
    for e in g.edges:
        incident[e[0]].append(e)
        incident[e[1]].append(e)
    pairs = []
    for v in g.vertices:
        for e, f in combinations(incident[v], 2):
            pairs.append((label[e], label[f]))
    return build_graph([label[e] for e in g.edges], pairs)

def iterated_line_graph(g: Graph, k: int) -> Graph:
    """L^k(g) with L^1 = L and L^{k+1} = L(L^k)."""
    InputValidator.validate_range("k", k, 1)
    for _ in range(k):
        g = line_graph(g)
    return g

def induced_subgraph(g: Graph, subset: Iterable[str]) -> Graph:
    keep = set()
    for v in subset:
        keep.add(g.require_vertex(validate_label(v)))
    vertices = [v for v in g.vertices if v in keep]
    return Graph(tuple(vertices), tuple(e for e in g.edges if e[0] in keep and e[1] in keep))

def degree_sequence(g: Graph) -> Tuple[int, ...]:
    return tuple(sorted((len(g.adjacency[v]) for v in g.vertices), reverse=True))

def triangles(g: Graph) -> List[Tuple[str, str, str]]:
    """All triangles, each listed once in vertex order."""
    found = []
    for u, v in g.edges:
        for w in g.adjacency[u] & g.adjacency[v]:
            if g.index[w] > g.index[v]:
                found.append((u, v, w))
    return sorted(found, key=lambda t: tuple(g.index[x] for x in t))

def is_connected(g: Graph) -> bool:
    if g.order == 0:
        return True
    seen = {g.vertices[0]}
    queue = deque(seen)
    while queue:
        for w in g.adjacency[queue.popleft()]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.order

def small_graphs(max_vertices: int) -> List[Graph]:
    """All non-isomorphic graphs on 1..max_vertices vertices, labeled 1..n."""
    import networkx as nx

    InputValidator.validate_range("max_vertices", max_vertices, 1, 7)
    graphs = []
    for atlas_graph in nx.graph_atlas_g():
        n = atlas_graph.number_of_nodes()
        if n == 0 or n > max_vertices:
            continue
        labels = [str(i + 1) for i in range(n)]
        graphs.append(build_graph(labels, [(labels[u], labels[v]) for u, v in atlas_graph.edges()]))
    return graphs

class EmbeddingMode(str, Enum):
    SUBGRAPH = "subgraph"
    INDUCED = "induced"

@dataclass(frozen=True)
class Embedding:
    """Injective map from the vertices of a pattern into a host graph."""

    mapping: Tuple[Tuple[str, str], ...]
    mode: EmbeddingMode

    def as_dict(self) -> Dict[str, str]:
        return dict(self.mapping)

    def image(self) -> List[str]:
        return [v for _, v in self.mapping]

def embedding_holds(h: Graph, g: Graph, mapping: Mapping[str, str], mode: EmbeddingMode) -> bool:
    """Check an embedding directly against both graphs."""
    if set(mapping) != set(h.vertices) or len(set(mapping.values())) != len(mapping):
        return False
    if not all(g.has_vertex(v) for v in mapping.values()):
        return False
    for x, y in combinations(h.vertices, 2):
        host_edge = g.has_edge(mapping[x], mapping[y])
        if h.has_edge(x, y) and not host_edge:
            return False
        if mode is EmbeddingMode.INDUCED and not h.has_edge(x, y) and host_edge:
            return False
    return True

def _matching_order(h: Graph) -> List[str]:
    # Most-connected-to-mapped first, then highest degree, then vertex order
    remaining = list(h.vertices)
    order: List[str] = []
    placed = set()
    while remaining:
        best = max(
            remaining,
            key=lambda v: (len(h.adjacency[v] & placed), len(h.adjacency[v]), -h.index[v]),
        )
        order.append(best)
        placed.add(best)
        remaining.remove(best)
    return order

def find_embedding(h: Graph, g: Graph, mode="subgraph") -> Optional[Embedding]:
    """
    Search for an embedding of pattern h into host g by backtracking.

    Args:
        h: Pattern graph
        g: Host graph
        mode: "subgraph" (edges preserved) or "induced" (edges and non-edges preserved)

    Returns:
        The first embedding in canonical search order, or None when none exists
    """
    try:
        mode = EmbeddingMode(mode)
    except ValueError:
        raise ValidationError(f"Unknown embedding mode {mode!r}")
    if h.order > g.order or h.size > g.size:
        return None
    if degree_sequence(h) and degree_sequence(g)[0] < degree_sequence(h)[0]:
        return None

    order = _matching_order(h)
    mapping: Dict[str, str] = {}
    used = set()

    def candidates(x: str) -> List[str]:
        anchors = [mapping[y] for y in h.adjacency[x] if y in mapping]
        if anchors:
            pool = set(g.adjacency[anchors[0]])
            for a in anchors[1:]:
                pool &= g.adjacency[a]
            return sorted(pool, key=g.index.__getitem__)
        return list(g.vertices)

    def extend(pos: int) -> bool:
        if pos == len(order):
            return True
        x = order[pos]
        need = len(h.adjacency[x])
        for c in candidates(x):
            if c in used or len(g.adjacency[c]) < need:
                continue
            if mode is EmbeddingMode.INDUCED and any(
                g.has_edge(c, mapping[y]) for y in mapping if not h.has_edge(x, y)
            ):
                continue
            mapping[x] = c
            used.add(c)
            if extend(pos + 1):
                return True
            del mapping[x]
            used.discard(c)
        return False

    if not extend(0):
        logger.debug(f"No {mode.value} embedding of {h} into {g}")
        return None
    if not embedding_holds(h, g, mapping, mode):
        raise GraphError("Embedding search returned an invalid mapping")
    return Embedding(tuple((x, mapping[x]) for x in h.vertices), mode)

def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.size != h.size or degree_sequence(g) != degree_sequence(h):
        return False
    return (
        find_embedding(g, h, EmbeddingMode.INDUCED) is not None
        and find_embedding(h, g, EmbeddingMode.INDUCED) is not None
    )
