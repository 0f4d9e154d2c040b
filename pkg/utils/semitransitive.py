"""
Orientations of graphs and the semi-transitivity test.

A graph is word-representable exactly when it admits an orientation with
no directed cycle and no shortcut. This module verifies such orientations
(between-set algorithm plus a brute-force path oracle) and decides
representability by backtracking search with certificates.
"""
import heapq
import logging
import os
import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import islice
from multiprocessing import Manager
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .errors import CertificateError, CyclicOrientationError, OrientationError, WordError
from .graph_core import (
    Edge, Embedding, EmbeddingMode, Graph, find_embedding, induced_subgraph,
    k4_prime, triangles, w5_prime,
)
from .validation import InputValidator, check_scale
from .words import Word

logger = logging.getLogger(__name__)

Arc = Tuple[str, str]

@dataclass(frozen=True)
class Orientation:
    """A total orientation: one arc per edge of base, listed in base edge order."""

    base: Graph
    arcs: Tuple[Arc, ...]

    @cached_property
    def arc_set(self) -> FrozenSet[Arc]:
        return frozenset(self.arcs)

    @cached_property
    def successors(self) -> Dict[str, Tuple[str, ...]]:
        out: Dict[str, List[str]] = {v: [] for v in self.base.vertices}
        for u, v in self.arcs:
            out[u].append(v)
        idx = self.base.index
        return {v: tuple(sorted(s, key=idx.__getitem__)) for v, s in out.items()}

    def has_arc(self, u: str, v: str) -> bool:
        return (u, v) in self.arc_set

    def out_degree(self, v: str) -> int:
        return len(self.successors[self.base.require_vertex(v)])

    @property
    def reversed(self) -> "Orientation":
        return Orientation(self.base, tuple((v, u) for u, v in self.arcs))

    def __str__(self) -> str:
        return f"Orientation(|V|={self.base.order}, |A|={len(self.arcs)})"

def _directed_arcs(base: Graph, arcs: Iterable[Sequence[str]]) -> Dict[Edge, Arc]:
    chosen: Dict[Edge, Arc] = {}
    for arc in arcs:
        if len(arc) != 2:
            raise OrientationError(f"Arc {arc!r} must have a tail and a head")
        u, v = arc
        base.require_vertex(u)
        base.require_vertex(v)
        if not base.has_edge(u, v):
            raise OrientationError(f"Arc {u}->{v} is not an edge of the base graph")
        key = base.edge_key(u, v)
        if key in chosen:
            raise OrientationError(f"Edge {key[0]}-{key[1]} is directed twice")
        chosen[key] = (u, v)
    return chosen

def orient(base: Graph, arcs: Iterable[Sequence[str]]) -> Orientation:
    """
    Build a total orientation.

    Raises:
        OrientationError: an arc is not an edge, an edge is directed twice or left undirected
    """
    chosen = _directed_arcs(base, arcs)
    missing = [e for e in base.edges if e not in chosen]
    if missing:
        raise OrientationError(f"Edge {missing[0][0]}-{missing[0][1]} has no direction")
    return Orientation(base, tuple(chosen[e] for e in base.edges))

@dataclass(frozen=True)
class PartialOrientation:
    base: Graph
    directed: Tuple[Arc, ...]

    @cached_property
    def free(self) -> Tuple[Edge, ...]:
        done = {self.base.edge_key(u, v) for u, v in self.directed}
        return tuple(e for e in self.base.edges if e not in done)

def partial_orientation(base: Graph, arcs: Iterable[Sequence[str]] = ()) -> PartialOrientation:
    chosen = _directed_arcs(base, arcs)
    return PartialOrientation(base, tuple(chosen[e] for e in base.edges if e in chosen))

def topological_order(d: Orientation) -> Optional[List[str]]:
    """Kahn's algorithm, ties broken by vertex order; None when d has a cycle."""
    idx = d.base.index
    indegree = {v: 0 for v in d.base.vertices}
    for _, v in d.arcs:
        indegree[v] += 1
    heap = [idx[v] for v, k in indegree.items() if k == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = d.base.vertices[heapq.heappop(heap)]
        order.append(v)
        for w in d.successors[v]:
            indegree[w] -= 1
            if indegree[w] == 0:
                heapq.heappush(heap, idx[w])
    return order if len(order) == d.base.order else None

def is_acyclic(d: Orientation) -> bool:
    return topological_order(d) is not None

@dataclass(frozen=True)
class ShortcutWitness:
    """
    A directed path v0..vk (k >= 3) with the arc v0->vk, and a pair i < j
    other than (0, k) with no arc vi->vj.
    """

    path: Tuple[str, ...]
    missing_pair: Tuple[int, int]

    @property
    def shortcutting_edge(self) -> Arc:
        return (self.path[0], self.path[-1])

    def holds_in(self, d: Orientation) -> bool:
        p = self.path
        i, j = self.missing_pair
        k = len(p) - 1
        return (
            k >= 3
            and len(set(p)) == len(p)
            and all(d.has_arc(a, b) for a, b in zip(p, p[1:]))
            and d.has_arc(p[0], p[-1])
            and 0 <= i < j <= k
            and (i, j) != (0, k)
            and not d.has_arc(p[i], p[j])
        )

    def __str__(self) -> str:
        i, j = self.missing_pair
        return f"{' -> '.join(self.path)} (shortcut {self.path[0]}->{self.path[-1]}, no arc {self.path[i]}->{self.path[j]})"

def _witness(d: Orientation, path: Sequence[str], i: int, j: int) -> ShortcutWitness:
    witness = ShortcutWitness(tuple(path), (i, j))
    if not witness.holds_in(d):
        raise OrientationError(f"Invalid shortcut witness {witness}")
    return witness

def _reachability(d: Orientation, order: List[str]) -> Tuple[np.ndarray, np.ndarray]:
    n = d.base.order
    idx = d.base.index
    arc = np.zeros((n, n), dtype=bool)
    for u, v in d.arcs:
        arc[idx[u], idx[v]] = True
    # reflexive closure, filled sinks first
    reach = np.eye(n, dtype=bool)
    for v in reversed(order):
        i = idx[v]
        for w in d.successors[v]:
            reach[i] |= reach[idx[w]]
    return arc, reach

def _walk(d: Orientation, reach: np.ndarray, a: str, b: str) -> List[str]:
    idx = d.base.index
    walk = [a]
    while walk[-1] != b:
        walk.append(next(s for s in d.successors[walk[-1]] if reach[idx[s], idx[b]]))
    return walk

def _require_acyclic(d: Orientation) -> List[str]:
    order = topological_order(d)
    if order is None:
        raise CyclicOrientationError("Shortcuts are only defined for acyclic orientations")
    return order

def find_shortcut(d: Orientation) -> Optional[ShortcutWitness]:
    """
    Find a shortcut using between-sets.

    For each arc u->v let B be the vertices lying on a directed u..v path.
    The arc shortcuts nothing iff every x reaching y inside B carries the arc
    x->y. A violating pair is spliced into the path u..x..y..v.

    Raises:
        CyclicOrientationError: d has a directed cycle
    """
    order = _require_acyclic(d)
    arc, reach = _reachability(d, order)
    idx = d.base.index
    for u, v in d.arcs:
        between = np.flatnonzero(reach[idx[u]] & reach[:, idx[v]])
        if len(between) < 4:
            continue
        sub = reach[np.ix_(between, between)] & ~arc[np.ix_(between, between)]
        np.fill_diagonal(sub, False)
        bad = np.argwhere(sub)
        if len(bad) == 0:
            continue
        x, y = (d.base.vertices[between[k]] for k in bad[0])
        path = _walk(d, reach, u, x) + _walk(d, reach, x, y)[1:] + _walk(d, reach, y, v)[1:]
        return _witness(d, path, path.index(x), path.index(y))
    return None

def find_shortcut_bruteforce(d: Orientation, override: Optional[bool] = None) -> Optional[ShortcutWitness]:
    """Enumerate every directed path on at least four vertices; the oracle for find_shortcut."""
    from .config import load_settings

    check_scale("brute-force shortcut vertices", d.base.order, load_settings().guards.max_bruteforce_vertices, override)
    _require_acyclic(d)

    def missing(path: List[str]) -> Optional[Tuple[int, int]]:
        k = len(path) - 1
        for i in range(k):
            for j in range(i + 1, k + 1):
                if (i, j) != (0, k) and not d.has_arc(path[i], path[j]):
                    return i, j
        return None

    def extend(path: List[str]) -> Optional[ShortcutWitness]:
        if len(path) >= 4 and d.has_arc(path[0], path[-1]):
            pair = missing(path)
            if pair is not None:
                return _witness(d, path, *pair)
        for w in d.successors[path[-1]]:
            path.append(w)
            found = extend(path)
            path.pop()
            if found is not None:
                return found
        return None

    for v in d.base.vertices:
        found = extend([v])
        if found is not None:
            return found
    return None

def reachability_matrix(d: Orientation) -> np.ndarray:
    """Reflexive-transitive closure by repeated boolean squaring; cycles allowed."""
    n = d.base.order
    idx = d.base.index
    reach = np.eye(n, dtype=bool)
    for u, v in d.arcs:
        reach[idx[u], idx[v]] = True
    while True:
        step = reach | ((reach.astype(np.int64) @ reach.astype(np.int64)) > 0)
        if np.array_equal(step, reach):
            return reach
        reach = step

def directed_path(d: Orientation, a: str, b: str) -> Optional[List[str]]:
    """A shortest directed a..b path, preferring earlier vertices, or None."""
    d.base.require_vertex(a)
    d.base.require_vertex(b)
    parent: Dict[str, Optional[str]] = {a: None}
    queue = deque([a])
    while queue:
        v = queue.popleft()
        if v == b:
            walk = [b]
            while parent[walk[-1]] is not None:
                walk.append(parent[walk[-1]])
            return walk[::-1]
        for w in d.successors[v]:
            if w not in parent:
                parent[w] = v
                queue.append(w)
    return None

def is_semi_transitive(d: Orientation) -> bool:
    if not is_acyclic(d):
        return False
    return find_shortcut(d) is None

def restrict_orientation(d: Orientation, subset: Iterable[str]) -> Orientation:
    sub = induced_subgraph(d.base, subset)
    keep = set(sub.vertices)
    return Orientation(sub, tuple(a for a in d.arcs if a[0] in keep and a[1] in keep))

def reverse_orientation(d: Orientation) -> Orientation:
    return d.reversed

def is_transitive_tournament(d: Orientation, order: Sequence[str]) -> bool:
    """Every pair of order is an arc pointing forward."""
    return all(d.has_arc(order[i], order[j]) for i in range(len(order)) for j in range(i + 1, len(order)))

def orientation_from_word(w: Word, g: Graph) -> Orientation:
    """Orient each edge from the letter whose first occurrence in w comes first."""
    first: Dict[str, int] = {}
    for pos, x in enumerate(w.letters):
        first.setdefault(x, pos)
    absent = [v for v in g.vertices if v not in first]
    if absent:
        raise WordError(f"Vertex {absent[0]!r} does not occur in the word")
    return Orientation(g, tuple((u, v) if first[u] < first[v] else (v, u) for u, v in g.edges))

class Verdict(str, Enum):
    REPRESENTABLE = "representable"
    NON_REPRESENTABLE = "non_representable"

@dataclass(frozen=True)
class ExhaustionRecord:
    """Search effort; per_worker counts branches per pool process, the parent's frontier expansion in slot 0."""
    branches_explored: int
    per_worker: Tuple[int, ...]
    symmetry_note: str

    def to_dict(self) -> Dict:
        return {
            "branches_explored": self.branches_explored,
            "per_worker": list(self.per_worker),
            "symmetry_note": self.symmetry_note,
        }

PINNED_NOTE = "first edge direction pinned (reversing every arc preserves semi-transitivity)"
FIXED_NOTE = "no pinning: partial orientation supplied"

@dataclass(frozen=True)
class Certificate:
    verdict: Verdict
    witness: Optional[Orientation] = None
    exhaustion: Optional[ExhaustionRecord] = None

    def verify(self, g: Optional[Graph] = None) -> "Certificate":
        """Re-check the certificate in-process; returns self or raises CertificateError."""
        if self.verdict is Verdict.REPRESENTABLE:
            if self.witness is None or not is_semi_transitive(self.witness):
                raise CertificateError("Witness orientation is not semi-transitive")
            if g is not None and self.witness.base != g:
                raise CertificateError("Witness orients a different graph")
        elif self.exhaustion is None or self.exhaustion.branches_explored <= 0:
            raise CertificateError("Non-representability needs an exhaustion record")
        return self

    def to_dict(self) -> Dict:
        data: Dict = {"verdict": self.verdict.value}
        if self.witness is not None:
            data["witness"] = [list(a) for a in self.witness.arcs]
        if self.exhaustion is not None:
            data["exhaustion"] = self.exhaustion.to_dict()
        return data

class SearchCancelled(Exception):
    """Raised inside a worker once another worker has found a solution."""
    pass

def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low

@dataclass
class _State:
    arcs: List[Tuple[int, int]]
    decided: List[bool]
    desc: List[int]
    anc: List[int]

class OrientationSearch:
    """
    Backtracking over edge directions with bitset reachability.

    An arc is legal when it closes no cycle and completes no shortcut whose
    missing pair is a non-edge. The most constrained free edge is branched
    on first; ties go to canonical edge order.
    """

    def __init__(self, g: Graph, stop_event=None, progress_every: int = 20000):
        self.g = g
        self.n = g.order
        idx = g.index
        self.edges = [(idx[u], idx[v]) for u, v in g.edges]
        self.edge_id = {frozenset(e): k for k, e in enumerate(self.edges)}
        adj = [0] * self.n
        for a, b in self.edges:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        full = (1 << self.n) - 1
        self.nonadj = [full & ~adj[i] & ~(1 << i) for i in range(self.n)]
        self.stop_event = stop_event
        self.progress_every = max(1, progress_every)
        self.branches = 0

    def root(self, fixed: Iterable[Arc] = ()) -> Optional[_State]:
        state = _State([], [False] * len(self.edges), [1 << i for i in range(self.n)], [1 << i for i in range(self.n)])
        idx = self.g.index
        for u, v in fixed:
            t, h = idx[u], idx[v]
            if not self.legal(state, t, h):
                return None
            state = self.apply(state, t, h)
        return state

    def legal(self, state: _State, t: int, h: int) -> bool:
        desc, anc = state.desc, state.anc
        if desc[h] >> t & 1:
            return False
        anc_t, desc_h = anc[t], desc[h]
        new_desc = desc[:]
        for x in _bits(anc_t):
            new_desc[x] |= desc_h
        new_anc = anc[:]
        for y in _bits(desc_h):
            new_anc[y] |= anc_t
        for p, q in state.arcs + [(t, h)]:
            if not (anc_t >> p & 1 and desc_h >> q & 1):
                continue
            between = new_desc[p] & new_anc[q]
            for x in _bits(between):
                if new_desc[x] & between & self.nonadj[x]:
                    return False
        return True

    def apply(self, state: _State, t: int, h: int) -> _State:
        desc, anc = state.desc[:], state.anc[:]
        anc_t, desc_h = state.anc[t], state.desc[h]
        for x in _bits(anc_t):
            desc[x] |= desc_h
        for y in _bits(desc_h):
            anc[y] |= anc_t
        decided = state.decided[:]
        decided[self.edge_id[frozenset((t, h))]] = True
        return _State(state.arcs + [(t, h)], decided, desc, anc)

    def _tick(self) -> None:
        self.branches += 1
        if self.branches % 1024 == 0 and self.stop_event is not None and self.stop_event.is_set():
            raise SearchCancelled()
        if self.branches % self.progress_every == 0:
            logger.debug(f"orientation search on {self.g}: {self.branches} branches")

    def choices(self, state: _State, pin: bool) -> Optional[List[Tuple[int, int]]]:
        """Legal directions of the most constrained free edge; [] when complete, None when dead."""
        best: Optional[List[Tuple[int, int]]] = None
        for k, (a, b) in enumerate(self.edges):
            if state.decided[k]:
                continue
            options = [(t, h) for t, h in ((a, b), (b, a)) if self.legal(state, t, h)]
            if not options:
                return None
            if best is None or len(options) < len(best):
                best = options
                if len(best) == 1:
                    break
        if best is None:
            return []
        return best[:1] if pin else best

    def solutions(self, state: _State, pin: bool = False) -> Iterator[List[Arc]]:
        self._tick()
        options = self.choices(state, pin)
        if options is None:
            return
        if not options:
            yield [(self.g.vertices[t], self.g.vertices[h]) for t, h in state.arcs]
            return
        for t, h in options:
            yield from self.solutions(self.apply(state, t, h))

    def frontier(self, state: _State, pin: bool, size: int) -> List[_State]:
        """Split the tree breadth-first into at least size subtrees, in depth-first order."""
        layer = [state]
        first = True
        while len(layer) < size:
            expanded: List[_State] = []
            grew = False
            for s in layer:
                options = self.choices(s, pin and first)
                self.branches += 1
                if options is None:
                    continue
                if not options:
                    expanded.append(s)
                    continue
                grew = True
                expanded.extend(self.apply(s, t, h) for t, h in options)
            layer = expanded
            first = False
            if not grew:
                break
        return layer

def _search_subtree(g: Graph, arcs: List[Arc], stop_event, progress_every: int):
    search = OrientationSearch(g, stop_event, progress_every)
    try:
        state = search.root(arcs)
        found = None if state is None else next(search.solutions(state), None)
    except SearchCancelled:
        return None, search.branches, os.getpid()
    if found is not None:
        stop_event.set()
    return found, search.branches, os.getpid()

def tally_by_process(results: Iterable[Tuple[int, int]], workers: int) -> List[int]:
    """
    Sum branch counts per pool process.

    Args:
        results: (process id, branches) per finished subtree
        workers: Number of pool processes

    Returns:
        One count per worker slot; slots follow first appearance of each process id
    """
    slots: Dict[int, int] = {}
    counts = [0] * workers
    for pid, branches in results:
        if pid not in slots:
            # a replaced pool process reuses slots round-robin
            slots[pid] = len(slots) % workers
        counts[slots[pid]] += branches
    return counts

def _run_parallel(g: Graph, workers: int, progress_every: int) -> Tuple[Optional[List[Arc]], Tuple[int, ...]]:
    planner = OrientationSearch(g, progress_every=progress_every)
    root = planner.root()
    tasks = planner.frontier(root, pin=True, size=2 * workers)
    labels = g.vertices
    subtrees = [[(labels[t], labels[h]) for t, h in s.arcs] for s in tasks]
    logger.info(f"Split orientation search on {g} into {len(subtrees)} subtrees over {workers} workers")

    found: Optional[List[Arc]] = None
    results: List[Tuple[int, int]] = []
    with Manager() as manager:
        stop_event = manager.Event()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_search_subtree, g, arcs, stop_event, progress_every) for arcs in subtrees]
            # lowest subtree index wins among finished subtrees
            for future in futures:
                solution, branches, pid = future.result()
                results.append((pid, branches))
                if solution is not None and found is None:
                    found = solution
    per_worker = tally_by_process(results, workers)
    # frontier expansion runs in the parent before the pool starts
    per_worker[0] += planner.branches
    return found, tuple(per_worker)

def _search(g: Graph, fixed: Optional[PartialOrientation], workers: int) -> Tuple[Optional[Orientation], ExhaustionRecord]:
    from .config import load_settings

    settings = load_settings()
    InputValidator.validate_range("workers", workers, 1)
    if fixed is not None and fixed.base != g:
        raise OrientationError("Partial orientation belongs to a different graph")
    fixed_arcs = list(fixed.directed) if fixed is not None else []
    pin = not fixed_arcs
    note = PINNED_NOTE if pin else FIXED_NOTE

    started = time.time()
    if workers > 1 and pin and g.size > 0:
        arcs, per_worker = _run_parallel(g, workers, settings.progress_every)
    else:
        search = OrientationSearch(g, progress_every=settings.progress_every)
        root = search.root(fixed_arcs)
        arcs = None if root is None else next(search.solutions(root, pin=pin), None)
        per_worker = (search.branches,)

    record = ExhaustionRecord(sum(per_worker), per_worker, note)
    logger.info(
        f"Orientation search on {g}: {'found' if arcs is not None else 'exhausted'} "
        f"after {record.branches_explored} branches in {time.time() - started:.2f}s"
    )
    if arcs is None:
        return None, record
    d = orient(g, arcs)
    if not is_semi_transitive(d):
        raise CertificateError("Search produced an orientation that fails re-verification")
    return d, record

def find_semi_transitive(
    g: Graph,
    fixed: Optional[PartialOrientation] = None,
    workers: int = 1,
    override: Optional[bool] = None,
) -> Optional[Orientation]:
    """
    Search for a semi-transitive orientation of g extending fixed.

    Args:
        g: Graph to orient
        fixed: Arcs every solution must contain
        workers: Processes for the unfixed search
        override: Lift the edge-count guard; None reads WORDREP_GUARD_OVERRIDE

    Returns:
        A verified orientation, or None when none exists
    """
    from .config import load_settings

    if fixed is None or not fixed.directed:
        check_scale("search edges", g.size, load_settings().guards.max_search_edges, override)
    else:
        check_scale("free edges", len(fixed.free), load_settings().guards.max_free_edges, override)
    return _search(g, fixed, workers)[0]

def decide_word_representable(g: Graph, workers: int = 1, override: Optional[bool] = None) -> Certificate:
    from .config import load_settings

    check_scale("search edges", g.size, load_settings().guards.max_search_edges, override)
    witness, record = _search(g, None, workers)
    if witness is not None:
        certificate = Certificate(Verdict.REPRESENTABLE, witness=witness)
    else:
        certificate = Certificate(Verdict.NON_REPRESENTABLE, exhaustion=record)
    return certificate.verify(g)

def enumerate_completions(p: PartialOrientation, limit: int, override: Optional[bool] = None) -> List[Orientation]:
    """All semi-transitive extensions of p, up to limit, in search order."""
    from .config import load_settings

    settings = load_settings()
    InputValidator.validate_range("limit", limit, 1)
    check_scale("free edges", len(p.free), settings.guards.max_free_edges, override)
    search = OrientationSearch(p.base, progress_every=settings.progress_every)
    root = search.root(p.directed)
    if root is None:
        return []
    found = [orient(p.base, arcs) for arcs in islice(search.solutions(root), limit)]
    for d in found:
        if not is_semi_transitive(d):
            raise CertificateError("Completion fails re-verification")
    logger.debug(f"{len(found)} completion(s) of {len(p.directed)} fixed arcs after {search.branches} branches")
    return found

@dataclass(frozen=True)
class Obstruction:
    """A known pattern inside g that rules out a representable line graph."""

    name: str
    embedding: Optional[Embedding] = None
    note: str = ""

def find_line_graph_obstruction(g: Graph) -> Optional[Obstruction]:
    """
    Look for a subgraph of g forcing L(g) to be non-representable.

    L(h) is an induced subgraph of L(g) whenever h is a subgraph of g, so
    K_4' or W_5' inside g is enough. A connected g on five or more vertices
    containing K_4 always contains K_4' and is reported under that name.
    """
    for name, pattern in (("k4-prime", k4_prime()), ("w5-prime", w5_prime())):
        found = find_embedding(pattern, g, EmbeddingMode.SUBGRAPH)
        if found is not None:
            return Obstruction(name, found, f"{name} is a subgraph; L(g) is not word-representable")
    return None

def find_mycielski_line_obstruction(g: Graph) -> Optional[Obstruction]:
    """A triangle in g puts L(mycielski(C_3)) inside L(mycielski(g)), which is then non-representable."""
    tri = triangles(g)
    if not tri:
        return None
    mapping = tuple(zip(("1", "2", "3"), tri[0]))
    return Obstruction(
        "triangle",
        Embedding(mapping, EmbeddingMode.SUBGRAPH),
        f"triangle {'-'.join(tri[0])}; L(mycielski(g)) is not word-representable",
    )
