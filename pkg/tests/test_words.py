from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from utils.errors import ScaleGuardError, StatementError, ValidationError, WordError
from utils.graph_core import build_graph, complete, cycle, empty_graph
from utils.words import (
    Quantifier, Word, WordView, alternates, cyclic_shift, eval_statement, exists, find_uniform_word,
    forall, is_k_uniform, parse_statement, parse_word, random_uniform_word, random_word, represented_graph,
    represents, restrict, reverse,
)


def w(text, view=WordView.LINEAR):
    return Word.of(list(text), view)


@st.composite
def uniform_words(draw, max_letters=5, max_k=3):
    size = draw(st.integers(min_value=1, max_value=max_letters))
    k = draw(st.integers(min_value=1, max_value=max_k))
    alphabet = [chr(ord("a") + i) for i in range(size)]
    return Word(tuple(draw(st.permutations(alphabet * k))))


@st.composite
def words(draw, max_letters=4, max_length=10):
    size = draw(st.integers(min_value=1, max_value=max_letters))
    alphabet = [chr(ord("a") + i) for i in range(size)]
    extra = draw(st.lists(st.sampled_from(alphabet), max_size=max_length - size))
    return Word(tuple(draw(st.permutations(alphabet + extra))))


def test_parse_and_format():
    word = parse_word("x1 x2 x1\tx3")
    assert word.letters == ("x1", "x2", "x1", "x3")
    assert str(word) == "x1 x2 x1 x3"
    assert word.alphabet() == ["x1", "x2", "x3"]


def test_restrict():
    assert restrict(w("abdcbadac"), {"a", "b", "c"}).letters == tuple("abcbaac")
    assert restrict(w("abc"), set()).letters == ()
    assert restrict(w("abca"), {"a", "b", "c"}) == w("abca")


def test_alternates():
    assert alternates(w("abab"), "a", "b")
    assert not alternates(w("abba"), "a", "b")
    assert not alternates(w("abcbaac"), "a", "c")
    with pytest.raises(WordError):
        alternates(w("abab", WordView.CYCLIC), "a", "b")


def test_represented_graph():
    assert represented_graph(w("abcabc"), ["a", "b", "c"]) == build_graph(["a", "b", "c"], [("a", "b"), ("a", "c"), ("b", "c")])
    assert represented_graph(w("aabbcc"), ["a", "b", "c"]).size == 0
    assert represented_graph(w("ababc"), ["a", "b", "c"]).edges == (("a", "b"),)
    with pytest.raises(WordError):
        represented_graph(w("ab"), ["a", "b", "c"])


def test_represents():
    k2 = build_graph(["a", "b"], [("a", "b")])
    assert represents(w("ab"), k2)
    assert represents(w("abab"), k2)
    assert not represents(w("abba"), k2)
    with pytest.raises(WordError):
        represents(w("aa"), k2)


def test_uniformity_and_symmetries():
    assert is_k_uniform(w("abcabc")) == 2
    assert is_k_uniform(w("aab")) is None
    assert is_k_uniform(w("ab")) == 1
    assert cyclic_shift(w("abcd"), 1) == w("bcda")
    assert cyclic_shift(w("abcd"), 0) == w("abcd")
    assert cyclic_shift(w("abcd"), -1) == w("dabc")
    assert reverse(w("abc")) == w("cba")


def test_statement_examples():
    abcabc = w("abcabc").as_cyclic()
    assert eval_statement(abcabc, forall("a", "b", "c"))
    assert not eval_statement(abcabc, exists("a", "c", "b"))
    abccba = w("abccba").as_cyclic()
    assert eval_statement(abccba, exists("a", "b", "c"))
    assert not eval_statement(abccba, forall("a", "b", "c"))


def test_statement_wraps_around():
    # the gap after the last pivot continues at the start of the word
    word = w("cabab").as_cyclic()
    assert eval_statement(word, exists("a", "b", "c"))


def test_statement_errors():
    with pytest.raises(WordError):
        eval_statement(w("abcabc"), forall("a", "b", "c"))
    with pytest.raises(StatementError):
        eval_statement(w("abc").as_cyclic(), exists("a", "b", "c"))
    with pytest.raises(StatementError):
        exists("a", "a", "c")


def test_parse_statement():
    s = parse_statement("forall a b c")
    assert s.kind is Quantifier.FORALL and (s.pivot, s.left, s.right) == ("a", "b", "c")
    assert str(parse_statement("E x y z")) == "E(x y z x)"
    with pytest.raises(ValidationError):
        parse_statement("sometimes a b c")
    with pytest.raises(ValidationError):
        parse_statement("exists a b")


def test_find_uniform_word_examples():
    found = find_uniform_word(complete(3), 1)
    assert found is not None and len(found) == 3
    found = find_uniform_word(cycle(4), 2)
    assert found is not None and is_k_uniform(found) == 2 and represents(found, cycle(4))
    assert find_uniform_word(empty_graph(2), 1) is None
    found = find_uniform_word(empty_graph(2), 2)
    assert found is not None and represents(found, empty_graph(2))
    assert find_uniform_word(empty_graph(0), 1) == Word(())


def test_find_uniform_word_guards():
    with pytest.raises(ScaleGuardError):
        find_uniform_word(empty_graph(9), 1, override=False)
    with pytest.raises(ScaleGuardError):
        find_uniform_word(cycle(4), 4, override=False)


def test_random_words():
    rng = np.random.default_rng(7)
    word = random_uniform_word(["a", "b", "c"], 3, rng)
    assert is_k_uniform(word) == 3 and set(word.letters) == {"a", "b", "c"}
    word = random_word(["a", "b", "c"], 8, rng)
    assert len(word) == 8 and set(word.letters) == {"a", "b", "c"}
    with pytest.raises(ValidationError):
        random_word(["a", "b", "c"], 2, rng)


@settings(max_examples=100, deadline=None)
@given(words())
def test_represented_graph_matches_pairwise_alternation(word):
    letters = word.alphabet()
    g = represented_graph(word, letters)
    for a, b in combinations(letters, 2):
        assert g.has_edge(a, b) == alternates(word, a, b)


@settings(max_examples=100, deadline=None)
@given(uniform_words(), st.integers(min_value=0, max_value=20))
def test_uniform_words_survive_reversal_and_shift(word, shift):
    g = represented_graph(word, sorted(word.alphabet()))
    assert represents(reverse(word), g)
    assert represents(cyclic_shift(word, shift), g)


@settings(max_examples=100, deadline=None)
@given(uniform_words(max_letters=6, max_k=3).filter(lambda x: is_k_uniform(x) >= 2))
def test_statement_laws(word):
    g = represented_graph(word, sorted(word.alphabet()))
    cyc = word.as_cyclic()
    for x in g.vertices:
        for y, z in combinations(g.neighbors(x), 2):
            if g.has_edge(y, z):
                assert eval_statement(cyc, forall(x, y, z)) != eval_statement(cyc, forall(x, z, y))
            else:
                assert eval_statement(cyc, exists(x, y, z)) and eval_statement(cyc, exists(x, z, y))
