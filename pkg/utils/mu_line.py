"""
Line graphs of Mycielski graphs of odd cycles and their orientation D.

Edges of mycielski(C_{2n+1}) are named c(i,j) for cycle edges and a(i,j')
for edges between an unprimed vertex i (0 is the apex) and a shadow j'.
The line graph splits into the a-vertices (a rook's graph restricted to the
existing labels) and the c-vertices (a cycle). D orients the a-part like a
rook's graph, the c-part as a chain ending in c(1,2), and every edge between
the parts toward the c-part.
"""
import logging
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .errors import ValidationError
from .graph_core import Edge, Graph, complete_bipartite, cycle, line_graph, mycielski
from .semitransitive import (
    Orientation, directed_path, is_transitive_tournament, reachability_matrix, restrict_orientation,
)
from .validation import InputValidator

logger = logging.getLogger(__name__)

CYCLE = "cycle"
BIPARTITE = "bipartite"

_LABEL_RE = re.compile(r"^(?:c\((\d+),(\d+)\)|a\((\d+),(\d+)'\))$")

@dataclass(frozen=True)
class EdgeLabel:
    kind: str
    i: int
    j: int

    @classmethod
    def parse(cls, text: str) -> "EdgeLabel":
        m = _LABEL_RE.match(text)
        if not m:
            raise ValidationError(f"Not an edge label: {text!r}")
        if m.group(1) is not None:
            return cls(CYCLE, int(m.group(1)), int(m.group(2)))
        return cls(BIPARTITE, int(m.group(3)), int(m.group(4)))

    def __str__(self) -> str:
        if self.kind == CYCLE:
            return f"c({self.i},{self.j})"
        return f"a({self.i},{self.j}')"

def c(i: int, j: int) -> str:
    return str(EdgeLabel(CYCLE, min(i, j), max(i, j)))

def a(i: int, j: int) -> str:
    return str(EdgeLabel(BIPARTITE, i, j))

def _check_n(n: int, minimum: int = 1) -> int:
    return InputValidator.validate_range("n", n, minimum)

def _succ(i: int, size: int) -> int:
    return i % size + 1

def _pred(i: int, size: int) -> int:
    return (i - 2) % size + 1

def labeled_mu_cycle(n: int) -> Tuple[Graph, Dict[Edge, EdgeLabel]]:
    """mycielski(C_{2n+1}) with every edge labeled; 8n+4 edges."""
    _check_n(n)
    g = mycielski(cycle(2 * n + 1))
    labels: Dict[Edge, EdgeLabel] = {}
    for u, v in g.edges:
        if u.endswith("'") or v.endswith("'"):
            plain, shadow = (v, u) if u.endswith("'") else (u, v)
            labels[(u, v)] = EdgeLabel(BIPARTITE, int(plain), int(shadow[:-1]))
        else:
            i, j = sorted((int(u), int(v)))
            labels[(u, v)] = EdgeLabel(CYCLE, i, j)
    return g, labels

def line_of_mu(n: int) -> Graph:
    g, labels = labeled_mu_cycle(n)
    return line_graph(g, {e: str(lab) for e, lab in labels.items()})

def b_part(n: int) -> List[str]:
    return [v for v in line_of_mu(n).vertices if v.startswith("a(")]

def c_part(n: int) -> List[str]:
    return [v for v in line_of_mu(n).vertices if v.startswith("c(")]

def _rook_arc(x: EdgeLabel, y: EdgeLabel) -> Tuple[EdgeLabel, EdgeLabel]:
    # rows point to larger primed index, columns to smaller unprimed index
    if x.i == y.i:
        return (x, y) if x.j < y.j else (y, x)
    if x.j == y.j:
        return (x, y) if x.i > y.i else (y, x)
    raise ValidationError(f"{x} and {y} share no index")

def rook_orientation(m: int, n: int, first_row: int = 1) -> Orientation:
    """
    The rook orientation of L(K_{m,n}) on vertices a(i,j') with rows
    first_row..first_row+m-1 and columns 1..n.
    """
    InputValidator.validate_range("m", m, 1)
    InputValidator.validate_range("n", n, 1)
    g = complete_bipartite(m, n)
    names = {(u, v): a(int(u) + first_row - 1, int(v[:-1])) for u, v in g.edges}
    lg = line_graph(g, names)
    arcs = []
    for u, v in lg.edges:
        tail, head = _rook_arc(EdgeLabel.parse(u), EdgeLabel.parse(v))
        arcs.append((str(tail), str(head)))
    return Orientation(lg, tuple(arcs))

def _chain_arcs(n: int) -> set:
    size = 2 * n + 1
    arcs = {(c(i + 1, i + 2), c(i, i + 1)) for i in range(1, 2 * n)}
    arcs.add((c(1, size), c(1, 2)))
    arcs.add((c(2 * n, size), c(1, size)))
    return arcs

def orientation_d(n: int) -> Orientation:
    """
    Orientation D of L(mycielski(C_{2n+1})) for n >= 2.

    a-vertices follow the rook rules with the apex row 0 lowest, c-vertices
    follow the chain c(i+1,i+2) -> c(i,i+1), and a-c edges point to c.
    """
    _check_n(n, 2)
    lg = line_of_mu(n)
    chain = _chain_arcs(n)
    arcs = []
    for u, v in lg.edges:
        x, y = EdgeLabel.parse(u), EdgeLabel.parse(v)
        if x.kind == BIPARTITE and y.kind == BIPARTITE:
            tail, head = _rook_arc(x, y)
            arcs.append((str(tail), str(head)))
        elif x.kind == CYCLE and y.kind == CYCLE:
            if (u, v) in chain:
                arcs.append((u, v))
            elif (v, u) in chain:
                arcs.append((v, u))
            else:
                raise ValidationError(f"No chain rule orients {u}-{v}")
        else:
            arcs.append((u, v) if x.kind == BIPARTITE else (v, u))
    d = Orientation(lg, tuple(arcs))
    logger.debug(f"orientation_d(n={n}): {d}")
    return d

def restricted_to_b(n: int, d: Optional[Orientation] = None) -> Orientation:
    return restrict_orientation(d or orientation_d(n), b_part(n))

def restricted_to_c(n: int, d: Optional[Orientation] = None) -> Orientation:
    return restrict_orientation(d or orientation_d(n), c_part(n))

@dataclass(frozen=True)
class LevelSets:
    rows: Dict[int, Tuple[str, ...]]
    columns: Dict[int, Tuple[str, ...]]

def level_sets(n: int) -> LevelSets:
    """Rows L_i (shared unprimed index, 0..2n+1) and columns L'_j (shared primed index, 1..2n+1)."""
    _check_n(n)
    size = 2 * n + 1
    rows: Dict[int, List[str]] = {i: [] for i in range(size + 1)}
    columns: Dict[int, List[str]] = {j: [] for j in range(1, size + 1)}
    for v in b_part(n):
        lab = EdgeLabel.parse(v)
        rows[lab.i].append(v)
        columns[lab.j].append(v)
    return LevelSets({i: tuple(sorted(r)) for i, r in rows.items()}, {j: tuple(sorted(col)) for j, col in columns.items()})

def expected_level_sets(n: int) -> LevelSets:
    """Level sets written out from the index rules, for cross-checking level_sets."""
    _check_n(n)
    size = 2 * n + 1
    rows = {0: tuple(sorted(a(0, j) for j in range(1, size + 1)))}
    for i in range(1, size + 1):
        rows[i] = tuple(sorted({a(i, _pred(i, size)), a(i, _succ(i, size))}))
    columns = {
        j: tuple(sorted({a(0, j), a(_pred(j, size), j), a(_succ(j, size), j)}))
        for j in range(1, size + 1)
    }
    return LevelSets(rows, columns)

def clique_witnesses(n: int) -> List[Tuple[str, Tuple[str, ...]]]:
    """The 4-cliques mixing both parts, each in the order D orients it transitively."""
    _check_n(n, 2)
    size = 2 * n + 1
    cliques = [
        ("a(1,*)+c(1,2n+1)", (a(1, 2), a(1, size), c(1, size), c(1, 2))),
        ("a(2,*)+c(2,3)", (a(2, 1), a(2, 3), c(2, 3), c(1, 2))),
    ]
    for i in range(2, 2 * n):
        cliques.append((f"a({i + 1},*)+c({i + 1},{i + 2})", (a(i + 1, i), a(i + 1, i + 2), c(i + 1, i + 2), c(i, i + 1))))
    cliques.append(("a(2n+1,*)+c(2n,2n+1)", (a(size, 1), a(size, 2 * n), c(2 * n, size), c(1, size))))
    return cliques

@dataclass(frozen=True)
class ClauseResult:
    clause: str
    passed: bool
    detail: str = ""
    counterexample: Tuple[str, ...] = ()

    def to_dict(self) -> Dict:
        return {"passed": self.passed, "detail": self.detail, "counterexample": list(self.counterexample)}

@dataclass(frozen=True)
class RemarkReport:
    n: int
    clauses: Tuple[ClauseResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.clauses)

    def clause(self, name: str) -> ClauseResult:
        for r in self.clauses:
            if r.clause == name:
                return r
        raise KeyError(name)

    def to_dict(self) -> Dict:
        return {"n": self.n, "passed": self.passed, "clauses": {r.clause: r.to_dict() for r in self.clauses}}

class _Reach:
    def __init__(self, d: Orientation):
        self.d = d
        self.idx = d.base.index
        self.matrix = reachability_matrix(d)

    def __call__(self, x: str, y: str) -> bool:
        return bool(self.matrix[self.idx[x], self.idx[y]])

def _no_paths(name: str, reach: _Reach, pairs) -> ClauseResult:
    for sources, targets in pairs:
        for x in sources:
            for y in targets:
                if x != y and reach(x, y):
                    path = directed_path(reach.d, x, y)
                    return ClauseResult(name, False, f"path {x} ~> {y}", tuple(path))
    return ClauseResult(name, True)

def _all_paths(name: str, reach: _Reach, pairs) -> ClauseResult:
    for sources, targets in pairs:
        for x in sources:
            for y in targets:
                if not reach(x, y):
                    return ClauseResult(name, False, f"no path {x} ~> {y}", (x, y))
    return ClauseResult(name, True)

def check_remarks(n: int, d: Optional[Orientation] = None) -> RemarkReport:
    """
    Evaluate the level-set reachability facts on D (or a supplied variant of it).

    Column clauses (R4.iii, R4.iv) are taken on the a-part without the apex
    row L_0, whose own row arcs run from L'_i to L'_{i+1}.
    """
    _check_n(n, 2)
    size = 2 * n + 1
    d = d or orientation_d(n)
    reach = _Reach(d)
    levels = level_sets(n)
    rows = levels.rows

    upper = restrict_orientation(d, [v for v in b_part(n) if EdgeLabel.parse(v).i != 0])
    upper_reach = _Reach(upper)
    cols = {j: tuple(v for v in col if EdgeLabel.parse(v).i != 0) for j, col in levels.columns.items()}

    results = [
        _no_paths("R4.i", reach, [(rows[i], rows[j]) for i in range(size + 1) for j in range(i + 1, size + 1)]),
        _no_paths("R4.ii", reach, [(rows[i], rows[i - 1]) for i in range(2, size + 1)]),
        _no_paths("R4.iii", upper_reach, [(cols[i], cols[j]) for i in range(1, size + 1) for j in range(1, i)]),
        _no_paths("R4.iv", upper_reach, [(cols[i], cols[i + 1]) for i in range(1, 2 * n + 1)]),
        _all_paths(
            "R5",
            reach,
            [(rows[j], (c(i, i + 1),)) for i in range(2, 2 * n + 1) for j in range(i, size + 1)]
            + [(rows[j], (c(1, size),)) for j in (1, 2 * n, size)],
        ),
        _all_paths(
            "R5.chain",
            reach,
            [((c(i, i + 1),), (c(j, j + 1),)) for i in range(1, 2 * n + 1) for j in range(1, i)],
        ),
    ]

    c_vertices = set(c_part(n))
    back = [(u, v) for u, v in d.arcs if u in c_vertices and v not in c_vertices]
    if back:
        results.append(ClauseResult("R6", False, f"arc {back[0][0]} -> {back[0][1]}", back[0]))
    else:
        results.append(ClauseResult("R6", True))

    for name, order in clique_witnesses(n):
        if not is_transitive_tournament(d, order):
            results.append(ClauseResult("cliques", False, f"{name} is not transitive in order", order))
            break
    else:
        results.append(ClauseResult("cliques", True))

    report = RemarkReport(n, tuple(results))
    logger.info(f"check_remarks(n={n}): {'pass' if report.passed else 'fail'}")
    return report

def reference_arcs_n2() -> List[Tuple[str, str]]:
    """
    Arc list of D for n=2, written out row by row, column by column and part by part.

    Derived from the construction rules. The hand-drawn arc list for n=2 differs:
    row 0 points at the source of columns 1, 2 and 3, and is joined to the sources of
    columns 4 and 5 in both directions. It also lacks a(4,5')->a(1,5'). That version
    contains the cycle a(3,2')->a(1,2')->a(0,2')->a(3,2').
    """
    arcs: List[Tuple[str, str]] = []
    rows = {1: (2, 5), 2: (1, 3), 3: (2, 4), 4: (3, 5), 5: (1, 4)}
    for i, (j1, j2) in rows.items():
        arcs.append((a(i, j1), a(i, j2)))
    for j1 in range(1, 6):
        for j2 in range(j1 + 1, 6):
            arcs.append((a(0, j1), a(0, j2)))
    columns = {1: (5, 2), 2: (3, 1), 3: (4, 2), 4: (5, 3), 5: (4, 1)}
    for j, (hi, lo) in columns.items():
        arcs.extend([(a(hi, j), a(lo, j)), (a(hi, j), a(0, j)), (a(lo, j), a(0, j))])
    arcs.extend([
        (c(2, 3), c(1, 2)), (c(3, 4), c(2, 3)), (c(4, 5), c(3, 4)), (c(4, 5), c(1, 5)), (c(1, 5), c(1, 2)),
    ])
    into = {
        c(1, 2): (a(1, 5), a(1, 2), a(2, 1), a(2, 3)),
        c(2, 3): (a(2, 3), a(2, 1), a(3, 4), a(3, 2)),
        c(3, 4): (a(3, 4), a(3, 2), a(4, 5), a(4, 3)),
        c(4, 5): (a(4, 5), a(4, 3), a(5, 4), a(5, 1)),
        c(1, 5): (a(5, 1), a(5, 4), a(1, 2), a(1, 5)),
    }
    for head, tails in into.items():
        arcs.extend((t, head) for t in tails)
    return arcs
