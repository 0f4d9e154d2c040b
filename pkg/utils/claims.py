"""
Executable claims checked by verify-paper.

Each check returns a ClaimResult. claims_for_scope() turns a scope name into
an ordered list of (name, thunk) tasks so callers can time and report each
check on its own line.
"""
import logging
import time
from dataclasses import dataclass
from functools import partial
from itertools import product
from typing import Callable, Dict, List, Tuple

import numpy as np

from .config import Settings
from .errors import ValidationError
from .graph_core import (
    EmbeddingMode, build_graph, complete, cycle, degree_sequence, find_embedding, graph_a, is_connected, k4_prime,
    line_graph, mycielski, small_graphs, w5_prime,
)
from .mu_line import (
    check_remarks, expected_level_sets, level_sets, line_of_mu, orientation_d,
    reference_arcs_n2, rook_orientation,
)
from .semitransitive import (
    Orientation, Verdict, decide_word_representable, enumerate_completions, find_line_graph_obstruction, find_shortcut,
    find_shortcut_bruteforce, is_acyclic, is_semi_transitive, partial_orientation,
)
from .words import (
    cyclic_shift, eval_statement, exists, forall, random_uniform_word, represented_graph,
    represents, reverse,
)

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class ClaimResult:
    claim: str
    passed: bool
    detail: str = ""
    elapsed: float = 0.0

    def to_dict(self) -> Dict:
        # timings are left out so reports compare equal across runs
        return {"claim": self.claim, "passed": self.passed, "detail": self.detail}

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.claim}: {self.detail} ({self.elapsed:.2f}s)"

def _decided_non_representable(claim: str, g, workers: int) -> ClaimResult:
    cert = decide_word_representable(g, workers=workers)
    if cert.verdict is Verdict.NON_REPRESENTABLE:
        return ClaimResult(claim, True, f"non_representable after {cert.exhaustion.branches_explored} branches")
    return ClaimResult(claim, False, "search found a semi-transitive orientation")

def line_k4_prime_non_representable(workers: int = 1) -> ClaimResult:
    return _decided_non_representable("L(K4') non-representable", line_graph(k4_prime()), workers)

def line_w5_prime_non_representable(workers: int = 1) -> ClaimResult:
    return _decided_non_representable("L(W5') non-representable", line_graph(w5_prime()), workers)

def mycielski_cycle_non_representable(m: int, workers: int = 1) -> ClaimResult:
    return _decided_non_representable(f"mycielski(C{m}) non-representable", mycielski(cycle(m)), workers)

def d_semi_transitive(n: int) -> ClaimResult:
    d = orientation_d(n)
    claim = f"D semi-transitive (n={n})"
    if not is_semi_transitive(d):
        return ClaimResult(claim, False, "D has a cycle or a shortcut")
    if n == 2 and set(d.arcs) != set(reference_arcs_n2()):
        extra = sorted(set(d.arcs) - set(reference_arcs_n2()))
        return ClaimResult(claim, False, f"arc set differs from the written-out D, e.g. {extra[:1]}")
    return ClaimResult(claim, True, f"{d.base.order} vertices, {len(d.arcs)} arcs")

def d_acyclic(n: int) -> ClaimResult:
    ok = is_acyclic(orientation_d(n))
    return ClaimResult(f"D acyclic (n={n})", ok, "topological order exists" if ok else "directed cycle")

def d_shortcut_free(n: int) -> ClaimResult:
    witness = find_shortcut(orientation_d(n))
    return ClaimResult(f"D shortcut-free (n={n})", witness is None, "no shortcut" if witness is None else str(witness))

def _embedding_claim(h, g, mode: EmbeddingMode) -> Tuple[bool, str]:
    found = find_embedding(h, g, mode)
    if found is None:
        return False, f"no {mode.value} embedding"
    return True, f"{mode.value} embedding found"

def line_w5_prime_in_line_mu_c3() -> ClaimResult:
    ok, detail = _embedding_claim(line_graph(w5_prime()), line_of_mu(1), EmbeddingMode.INDUCED)
    return ClaimResult("L(W5') induced in L(mycielski(C3))", ok, detail)

def line_k5_contains_line_k4_prime() -> ClaimResult:
    ok1, d1 = _embedding_claim(k4_prime(), complete(5), EmbeddingMode.SUBGRAPH)
    ok2, d2 = _embedding_claim(line_graph(k4_prime()), line_graph(complete(5)), EmbeddingMode.INDUCED)
    return ClaimResult("L(K5) contains L(K4')", ok1 and ok2, f"K4' in K5: {d1}; L(K4') in L(K5): {d2}")

def line_k4_representable(workers: int = 1) -> ClaimResult:
    cert = decide_word_representable(line_graph(complete(4)), workers=workers)
    ok = cert.verdict is Verdict.REPRESENTABLE
    return ClaimResult("L(K4) representable", ok, "verified witness orientation" if ok else "search exhausted")

def graph_a_claims(workers: int = 1) -> ClaimResult:
    g = graph_a()
    cert = decide_word_representable(g, workers=workers)
    ok1 = cert.verdict is Verdict.NON_REPRESENTABLE
    ok2, d2 = _embedding_claim(w5_prime(), g, EmbeddingMode.SUBGRAPH)
    ok3, d3 = _embedding_claim(line_graph(w5_prime()), line_graph(g), EmbeddingMode.INDUCED)
    detail = f"verdict {cert.verdict.value}; W5' in A: {d2}; L(W5') in L(A): {d3}"
    return ClaimResult("graph A non-representable, L(A) not a counterexample", ok1 and ok2 and ok3, detail)

def line_squared_obstructions() -> ClaimResult:
    """Connected 6-vertex graphs with a vertex of degree >= 4: L(g) contains K4', so L(L(g)) is non-representable."""
    claim = "L^2 of 6-vertex graphs with a degree-4 vertex non-representable"
    checked = 0
    for g in small_graphs(6):
        if g.order != 6 or not is_connected(g) or degree_sequence(g)[0] < 4:
            continue
        checked += 1
        found = find_line_graph_obstruction(line_graph(g))
        if found is None or found.name != "k4-prime":
            return ClaimResult(claim, False, f"no K4' in L(g) for g with edges {list(g.edges)}")
    return ClaimResult(claim, True, f"{checked} graphs")

# 4-cycle a-b-c-d with a->b, b->c fixed and no edge ac; the chord bd is absent or fixed either way
COMPLETION_VARIANTS: Dict[str, Tuple[List[Tuple[str, str]], List[Tuple[str, str]]]] = {
    "c4": ([("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")], [("a", "b"), ("b", "c")]),
    "c4+b->d": ([("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("b", "d")], [("a", "b"), ("b", "c"), ("b", "d")]),
    "c4+d->b": ([("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("b", "d")], [("a", "b"), ("b", "c"), ("d", "b")]),
}

def completion_configuration(variant: str):
    if variant not in COMPLETION_VARIANTS:
        raise ValidationError(f"Unknown completion variant {variant!r}")
    edges, fixed = COMPLETION_VARIANTS[variant]
    g = build_graph(["a", "b", "c", "d"], edges)
    return partial_orientation(g, fixed)

def unique_completion(variant: str) -> ClaimResult:
    completions = enumerate_completions(completion_configuration(variant), limit=8)
    claim = f"unique completion ({variant})"
    if len(completions) != 1:
        return ClaimResult(claim, False, f"{len(completions)} completions")
    d = completions[0]
    ok = d.has_arc("a", "d") and d.has_arc("d", "c")
    return ClaimResult(claim, ok, "a->d, d->c" if ok else "completion orients cd/da differently")

def statement_laws(seed: int, words: int) -> ClaimResult:
    """Over random uniform words: open wedges satisfy both exists-statements, triangles exactly one forall."""
    rng = np.random.default_rng(seed)
    checked = 0
    for _ in range(words):
        size = int(rng.integers(3, 8))
        k = int(rng.integers(2, 4))
        alphabet = [f"x{i}" for i in range(size)]
        w = random_uniform_word(alphabet, k, rng)
        g = represented_graph(w, alphabet)
        cyc = w.as_cyclic()
        for x in alphabet:
            nbrs = g.neighbors(x)
            for i, y in enumerate(nbrs):
                for z in nbrs[i + 1:]:
                    checked += 1
                    if g.has_edge(y, z):
                        if eval_statement(cyc, forall(x, y, z)) == eval_statement(cyc, forall(x, z, y)):
                            return ClaimResult("statement laws", False, f"triangle {x}{y}{z} in {w}")
                    elif not (eval_statement(cyc, exists(x, y, z)) and eval_statement(cyc, exists(x, z, y))):
                        return ClaimResult("statement laws", False, f"wedge {y}-{x}-{z} in {w}")
    return ClaimResult("statement laws", True, f"{words} words, {checked} vertex triples")

def word_invariances(seed: int, pairs: int) -> ClaimResult:
    rng = np.random.default_rng(seed)
    for _ in range(pairs):
        size = int(rng.integers(2, 7))
        k = int(rng.integers(1, 4))
        alphabet = [f"x{i}" for i in range(size)]
        w = random_uniform_word(alphabet, k, rng)
        g = represented_graph(w, alphabet)
        if not represents(reverse(w), g):
            return ClaimResult("word invariances", False, f"reversal of {w}")
        for j in range(len(w)):
            if not represents(cyclic_shift(w, j), g):
                return ClaimResult("word invariances", False, f"shift {j} of {w}")
    return ClaimResult("word invariances", True, f"{pairs} (word, graph) pairs")

def _acyclic_orientations(g):
    for bits in product((False, True), repeat=g.size):
        d = Orientation(g, tuple((v, u) if flip else (u, v) for (u, v), flip in zip(g.edges, bits)))
        if is_acyclic(d):
            yield d

def shortcut_oracles_agree(max_vertices: int) -> ClaimResult:
    compared = 0
    for g in small_graphs(max_vertices):
        for d in _acyclic_orientations(g):
            compared += 1
            if (find_shortcut(d) is None) != (find_shortcut_bruteforce(d) is None):
                return ClaimResult("shortcut oracles agree", False, f"disagree on {d.arcs}")
    return ClaimResult("shortcut oracles agree", True, f"{compared} acyclic orientations")

def rook_semi_transitive(max_side: int) -> ClaimResult:
    for m in range(1, max_side + 1):
        for n in range(1, max_side + 1):
            if not is_semi_transitive(rook_orientation(m, n)):
                return ClaimResult("rook orientations", False, f"L(K{m},{n}) fails")
    return ClaimResult("rook orientations", True, f"all m, n <= {max_side}")

def level_sets_and_remarks(n: int) -> ClaimResult:
    claim = f"level sets and reachability remarks (n={n})"
    if level_sets(n) != expected_level_sets(n):
        return ClaimResult(claim, False, "level sets differ from the index rules")
    report = check_remarks(n)
    failed = [r for r in report.clauses if not r.passed]
    if failed:
        return ClaimResult(claim, False, f"{failed[0].clause}: {failed[0].detail}")
    return ClaimResult(claim, True, f"{len(report.clauses)} clauses")

def _n_range(pair: Tuple[int, int]) -> range:
    return range(pair[0], pair[1] + 1)

SCOPES = ("all", "lemma1", "theorem1", "theorem2", "remarks", "prop1", "lemma2", "survey-claims")

def claims_for_scope(scope: str, settings: Settings) -> List[Tuple[str, Callable[[], ClaimResult]]]:
    """Ordered (name, thunk) tasks for a verify-paper scope."""
    if scope not in SCOPES:
        raise ValidationError(f"Unknown scope {scope!r}; expected one of {', '.join(SCOPES)}")
    v = settings.verify
    workers = settings.workers
    groups: Dict[str, List[Tuple[str, Callable[[], ClaimResult]]]] = {
        "lemma1": [("lemma1", partial(line_k4_prime_non_representable, workers))],
        "theorem1": [("theorem1", partial(line_w5_prime_non_representable, workers))],
        "theorem2": (
            [(f"theorem2[n={n}]", partial(d_semi_transitive, n)) for n in _n_range(v.theorem2_n)]
            + [(f"lemma3[n={n}]", partial(d_acyclic, n)) for n in _n_range(v.theorem2_n)]
            + [(f"lemma4[n={n}]", partial(d_shortcut_free, n)) for n in _n_range(v.theorem2_n)]
        ),
        "remarks": (
            [("remark2", line_w5_prime_in_line_mu_c3), ("rook", partial(rook_semi_transitive, v.rook_max))]
            + [(f"remarks[n={n}]", partial(level_sets_and_remarks, n)) for n in _n_range(v.remarks_n)]
        ),
        "prop1": [
            ("prop1", partial(statement_laws, v.seed, v.prop1_words)),
            ("invariance", partial(word_invariances, v.seed, v.invariance_pairs)),
        ],
        "lemma2": [(f"lemma2[{name}]", partial(unique_completion, name)) for name in COMPLETION_VARIANTS],
        "survey-claims": [
            ("mycielski-c3", partial(mycielski_cycle_non_representable, 3, workers)),
            ("mycielski-c5", partial(mycielski_cycle_non_representable, 5, workers)),
            ("line-k5", line_k5_contains_line_k4_prime),
            ("line-k4", partial(line_k4_representable, workers)),
            ("graph-a", partial(graph_a_claims, workers)),
            ("line-squared", line_squared_obstructions),
            ("oracles", partial(shortcut_oracles_agree, v.oracle_max_vertices)),
        ],
    }
    if scope == "all":
        return [task for name in SCOPES[1:] for task in groups[name]]
    return groups[scope]

def run_claim(name: str, task: Callable[[], ClaimResult]) -> ClaimResult:
    started = time.time()
    result = task()
    elapsed = time.time() - started
    logger.info(f"claim {name}: {'pass' if result.passed else 'FAIL'} in {elapsed:.2f}s")
    return ClaimResult(result.claim, result.passed, result.detail, elapsed)
