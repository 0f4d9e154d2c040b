from hypothesis import strategies as st

from utils.graph_core import build_graph
from utils.semitransitive import orient


@st.composite
def graphs(draw, max_vertices=7):
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    labels = [str(i) for i in range(1, n + 1)]
    pairs = [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(labels, [p for p, k in zip(pairs, keep) if k])


@st.composite
def orientations(draw, acyclic=False, max_vertices=6):
    g = draw(graphs(max_vertices=max_vertices))
    if acyclic:
        rank = {v: i for i, v in enumerate(draw(st.permutations(g.vertices)))}
        return orient(g, [(u, v) if rank[u] < rank[v] else (v, u) for u, v in g.edges])
    flips = draw(st.lists(st.booleans(), min_size=g.size, max_size=g.size))
    return orient(g, [(v, u) if flip else (u, v) for (u, v), flip in zip(g.edges, flips)])
