"""
Words over vertex labels.

Alternation and representation read a word linearly; the cyclic
exists/forall statements read it written on a circle. The view is a field
of the word and is never inferred.
"""
import logging
from collections import Counter
from dataclasses import dataclass, replace
from enum import Enum
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import StatementError, WordError, ValidationError
from .graph_core import Graph, build_graph
from .validation import InputValidator, check_scale, validate_label

logger = logging.getLogger(__name__)

class WordView(str, Enum):
    LINEAR = "linear"
    CYCLIC = "cyclic"

@dataclass(frozen=True)
class Word:
    letters: Tuple[str, ...]
    view: WordView = WordView.LINEAR

    @classmethod
    def of(cls, letters: Iterable, view: WordView = WordView.LINEAR) -> "Word":
        return cls(tuple(validate_label(x) for x in letters), WordView(view))

    def as_cyclic(self) -> "Word":
        return replace(self, view=WordView.CYCLIC)

    def as_linear(self) -> "Word":
        return replace(self, view=WordView.LINEAR)

    def alphabet(self) -> List[str]:
        """Distinct letters in order of first occurrence."""
        return list(dict.fromkeys(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self)

def parse_word(text: str, view: WordView = WordView.LINEAR) -> Word:
    """Parse a whitespace-separated label sequence."""
    text = InputValidator.sanitize_input(text)
    return Word.of(text.split(), view)

def format_word(w: Word) -> str:
    return " ".join(w.letters)

def _require_view(w: Word, view: WordView, operation: str) -> None:
    if w.view is not view:
        raise WordError(f"{operation} needs a {view.value} word, got a {w.view.value} one")

def restrict(w: Word, letters: Iterable[str]) -> Word:
    keep = set(letters)
    return Word(tuple(x for x in w.letters if x in keep), w.view)

def alternates(w: Word, a: str, b: str) -> bool:
    _require_view(w, WordView.LINEAR, "alternates")
    sub = restrict(w, (a, b)).letters
    return all(x != y for x, y in zip(sub, sub[1:]))

def represented_graph(w: Word, vertices: Sequence[str]) -> Graph:
    """The graph on vertices whose edges are the alternating pairs of w."""
    _require_view(w, WordView.LINEAR, "represented_graph")
    present = set(w.letters)
    absent = [v for v in vertices if v not in present]
    if absent:
        raise WordError(f"Letter {absent[0]!r} does not occur in the word")
    # one pass per letter pair over positions
    positions = {v: [] for v in vertices}
    for i, x in enumerate(w.letters):
        if x in positions:
            positions[x].append(i)
    edges = [(a, b) for a, b in combinations(vertices, 2) if _positions_alternate(positions[a], positions[b])]
    return build_graph(vertices, edges)

def _positions_alternate(pa: List[int], pb: List[int]) -> bool:
    if abs(len(pa) - len(pb)) > 1:
        return False
    merged = sorted([(p, 0) for p in pa] + [(p, 1) for p in pb])
    return all(x[1] != y[1] for x, y in zip(merged, merged[1:]))

def represents(w: Word, g: Graph) -> bool:
    missing = [v for v in g.vertices if v not in set(w.letters)]
    if missing:
        raise WordError(f"Vertex {missing[0]!r} does not occur in the word")
    return represented_graph(w, g.vertices) == g

def is_k_uniform(w: Word) -> Optional[int]:
    """k if every letter occurs exactly k times, else None."""
    counts = set(Counter(w.letters).values())
    if len(counts) != 1:
        return None
    return counts.pop()

def cyclic_shift(w: Word, k: int) -> Word:
    if not w.letters:
        return w
    k %= len(w.letters)
    return Word(w.letters[k:] + w.letters[:k], w.view)

def reverse(w: Word) -> Word:
    return Word(tuple(reversed(w.letters)), w.view)

class Quantifier(str, Enum):
    EXISTS = "exists"
    FORALL = "forall"

@dataclass(frozen=True)
class Statement:
    """exists(a b c a) / forall(a b c a): b left of c between consecutive pivots a."""

    kind: Quantifier
    pivot: str
    left: str
    right: str

    def __post_init__(self):
        if len({self.pivot, self.left, self.right}) != 3:
            raise StatementError(f"Statement letters must be pairwise distinct: {self.pivot}, {self.left}, {self.right}")

    def __str__(self) -> str:
        symbol = "E" if self.kind is Quantifier.EXISTS else "A"
        return f"{symbol}({self.pivot} {self.left} {self.right} {self.pivot})"

def exists(a: str, b: str, c: str) -> Statement:
    return Statement(Quantifier.EXISTS, a, b, c)

def forall(a: str, b: str, c: str) -> Statement:
    return Statement(Quantifier.FORALL, a, b, c)

def parse_statement(text: str) -> Statement:
    """Parse "exists a b c" / "forall a b c" (E and A accepted as kinds)."""
    parts = InputValidator.sanitize_input(text).split()
    if len(parts) != 4 or not InputValidator.validate_pattern(parts[0], "statement_kind"):
        raise ValidationError(f"Statement must look like 'exists a b c', got {text!r}")
    kind = Quantifier.EXISTS if parts[0] in ("exists", "E") else Quantifier.FORALL
    return Statement(kind, *(validate_label(p) for p in parts[1:]))

def _gaps(w: Word, pivot: str) -> List[Tuple[str, ...]]:
    at = [i for i, x in enumerate(w.letters) if x == pivot]
    if len(at) < 2:
        raise StatementError(f"Pivot {pivot!r} occurs {len(at)} time(s); at least two are needed")
    gaps = [w.letters[i + 1:j] for i, j in zip(at, at[1:])]
    gaps.append(w.letters[at[-1] + 1:] + w.letters[:at[0]])
    return gaps

def _left_of(gap: Sequence[str], b: str, c: str) -> bool:
    seen_b = False
    for x in gap:
        if x == b:
            seen_b = True
        elif x == c and seen_b:
            return True
    return False

def eval_statement(w: Word, s: Statement) -> bool:
    _require_view(w, WordView.CYCLIC, "eval_statement")
    hits = (_left_of(gap, s.left, s.right) for gap in _gaps(w, s.pivot))
    return any(hits) if s.kind is Quantifier.EXISTS else all(hits)

class _UniformWordSearch:
    """Left-to-right construction of k-uniform words with alternation pruning."""

    def __init__(self, g: Graph, k: int):
        self.g = g
        self.k = k
        self.n = g.order
        idx = g.index
        self.adj = [0] * self.n
        for u, v in g.edges:
            self.adj[idx[u]] |= 1 << idx[v]
            self.adj[idx[v]] |= 1 << idx[u]
        full = (1 << self.n) - 1
        self.nonadj = [full & ~self.adj[i] & ~(1 << i) for i in range(self.n)]
        self.nodes = 0

    def run(self) -> Optional[List[int]]:
        remaining = [self.k] * self.n
        since = [0] * self.n
        broken = [0] * self.n
        word: List[int] = []
        # pinning the first letter is safe: uniform representants are closed under cyclic shift
        if self._place(0, remaining, since, broken, 0, word):
            return word
        return None

    def _place(self, z, remaining, since, broken, seen, word) -> bool:
        self.nodes += 1
        if seen >> z & 1:
            if self.adj[z] & ~since[z]:
                return False
            fresh = self.nonadj[z] & ~since[z]
        else:
            fresh = 0
        remaining = remaining[:]
        remaining[z] -= 1
        broken = broken[:]
        if fresh:
            broken[z] |= fresh
            for y in _bits(fresh):
                broken[y] |= 1 << z
        if remaining[z] == 0:
            for y in _bits(self.nonadj[z]):
                if remaining[y] == 0 and not broken[z] >> y & 1:
                    return False
        since = [s | (1 << z) for s in since]
        since[z] = 0
        seen |= 1 << z
        word.append(z)
        if len(word) == self.k * self.n:
            return True
        for nxt in range(self.n):
            if remaining[nxt] and self._place(nxt, remaining, since, broken, seen, word):
                return True
        word.pop()
        return False

def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low

def find_uniform_word(g: Graph, k_max: int, override: Optional[bool] = None) -> Optional[Word]:
    """
    Smallest-k uniform word representing g, by exhaustive enumeration.

    Args:
        g: Graph with at most 8 vertices
        k_max: Largest uniformity tried (at most 3)
        override: Lift the scale guards; None reads WORDREP_GUARD_OVERRIDE

    Returns:
        A k-uniform representing word with the smallest k <= k_max, or None
    """
    from .config import load_settings

    guards = load_settings().guards
    check_scale("word search vertices", g.order, guards.max_word_vertices, override)
    check_scale("word search k", k_max, guards.max_word_k, override)
    InputValidator.validate_range("k_max", k_max, 1)
    if g.order == 0:
        return Word(())
    for k in range(1, k_max + 1):
        search = _UniformWordSearch(g, k)
        found = search.run()
        logger.debug(f"uniform word search k={k} on {g}: {search.nodes} nodes")
        if found is not None:
            w = Word(tuple(g.vertices[i] for i in found))
            if not represents(w, g):
                raise WordError("Uniform word search produced a non-representing word")
            logger.info(f"Found {k}-uniform word for {g}")
            return w
    return None

def random_uniform_word(alphabet: Sequence[str], k: int, rng: np.random.Generator) -> Word:
    """A uniformly shuffled k-uniform word over alphabet."""
    InputValidator.validate_range("k", k, 1)
    letters = np.array([x for x in alphabet for _ in range(k)], dtype=object)
    return Word(tuple(rng.permutation(letters).tolist()))

def random_word(alphabet: Sequence[str], length: int, rng: np.random.Generator) -> Word:
    """A word of the given length in which every letter of alphabet occurs."""
    InputValidator.validate_range("length", length, len(alphabet))
    extra = rng.choice(np.array(list(alphabet), dtype=object), size=length - len(alphabet)).tolist()
    letters = np.array(list(alphabet) + extra, dtype=object)
    return Word(tuple(rng.permutation(letters).tolist()))
