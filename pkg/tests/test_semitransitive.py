import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from utils.errors import CertificateError, CyclicOrientationError, OrientationError, ScaleGuardError
from utils.graph_core import (
    build_graph, complete, complete_bipartite, cycle, graph_a, is_connected, k4_prime, line_graph, mycielski,
    small_graphs, w5_prime,
)
from utils.semitransitive import (
    FIXED_NOTE, PINNED_NOTE, Certificate, ExhaustionRecord, Orientation, Verdict, decide_word_representable,
    directed_path, enumerate_completions, find_line_graph_obstruction, find_mycielski_line_obstruction,
    find_semi_transitive, find_shortcut, find_shortcut_bruteforce, is_acyclic, is_semi_transitive,
    is_transitive_tournament, orient, orientation_from_word, partial_orientation, reachability_matrix,
    restrict_orientation, reverse_orientation, tally_by_process, topological_order,
)
from utils.claims import COMPLETION_VARIANTS, completion_configuration
from utils.words import Word, find_uniform_word, represented_graph

from strategies import orientations


def path_with_chord():
    g = build_graph(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")])
    return orient(g, [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")])


def transitive(g):
    return orient(g, [(u, v) for u, v in g.edges])


def to_nx(d):
    h = nx.DiGraph()
    h.add_nodes_from(d.base.vertices)
    h.add_edges_from(d.arcs)
    return h


def test_orient_validation():
    g = cycle(3)
    with pytest.raises(OrientationError):
        orient(g, [("1", "2"), ("2", "3")])
    with pytest.raises(OrientationError):
        orient(complete_bipartite(1, 2), [("1", "1'"), ("1'", "2'")])
    with pytest.raises(OrientationError):
        orient(g, [("1", "2"), ("2", "1"), ("2", "3"), ("3", "1")])


def test_orientation_is_stored_in_edge_order():
    g = cycle(3)
    d = orient(g, [("1", "3"), ("2", "3"), ("1", "2")])
    assert d.arcs == (("1", "2"), ("1", "3"), ("2", "3"))
    assert d.successors["1"] == ("2", "3")
    assert d.reversed.has_arc("3", "1")


def test_acyclicity():
    cyclic = orient(cycle(3), [("1", "2"), ("2", "3"), ("3", "1")])
    assert not is_acyclic(cyclic)
    assert topological_order(cyclic) is None
    assert not is_semi_transitive(cyclic)
    with pytest.raises(CyclicOrientationError):
        find_shortcut(cyclic)
    assert topological_order(transitive(complete(4))) == ["1", "2", "3", "4"]
    empty = Orientation(build_graph([], []), ())
    assert topological_order(empty) == [] and is_semi_transitive(empty)


def test_textbook_shortcut():
    d = path_with_chord()
    witness = find_shortcut(d)
    assert witness is not None
    assert witness.path == ("a", "b", "c", "d")
    assert witness.shortcutting_edge == ("a", "d")
    assert witness.missing_pair in {(0, 2), (1, 3)}
    assert witness.holds_in(d)
    assert find_shortcut_bruteforce(d) is not None
    assert not is_semi_transitive(d)


def test_transitive_orientations_have_no_shortcut():
    for n in range(1, 7):
        d = transitive(complete(n))
        assert find_shortcut(d) is None
        assert is_semi_transitive(d)
        assert is_transitive_tournament(d, d.base.vertices)
    assert find_shortcut_bruteforce(transitive(complete(5))) is None


def test_bruteforce_guard():
    with pytest.raises(ScaleGuardError):
        find_shortcut_bruteforce(transitive(complete(13)), override=False)


def test_restriction_and_reversal():
    d = transitive(complete(4))
    assert restrict_orientation(d, d.base.vertices) == d
    sub = restrict_orientation(d, ["1", "3", "4"])
    assert is_transitive_tournament(sub, ["1", "3", "4"])
    assert reverse_orientation(d).has_arc("4", "1")


def test_directed_path_and_reachability():
    d = path_with_chord()
    assert directed_path(d, "a", "c") == ["a", "b", "c"]
    assert directed_path(d, "c", "a") is None
    cyclic = orient(cycle(3), [("1", "2"), ("2", "3"), ("3", "1")])
    assert reachability_matrix(cyclic).all()


def test_certificate_verification():
    d = path_with_chord()
    with pytest.raises(CertificateError):
        Certificate(Verdict.REPRESENTABLE, witness=d).verify()
    with pytest.raises(CertificateError):
        Certificate(Verdict.NON_REPRESENTABLE).verify()
    ok = Certificate(Verdict.REPRESENTABLE, witness=transitive(complete(3)))
    assert ok.verify(complete(3)) is ok
    with pytest.raises(CertificateError):
        ok.verify(complete(4))
    record = ExhaustionRecord(10, (10,), PINNED_NOTE)
    data = Certificate(Verdict.NON_REPRESENTABLE, exhaustion=record).to_dict()
    assert data == {
        "verdict": "non_representable",
        "exhaustion": {"branches_explored": 10, "per_worker": [10], "symmetry_note": PINNED_NOTE},
    }


def test_line_k4_prime_is_not_representable():
    g = line_graph(k4_prime())
    assert find_semi_transitive(g) is None
    cert = decide_word_representable(g)
    assert cert.verdict is Verdict.NON_REPRESENTABLE
    assert cert.exhaustion.branches_explored > 0
    assert cert.exhaustion.symmetry_note == PINNED_NOTE


def test_line_k4_is_representable():
    g = line_graph(complete(4))
    d = find_semi_transitive(g)
    assert d is not None and is_semi_transitive(d) and d.base == g
    cert = decide_word_representable(g)
    assert cert.verdict is Verdict.REPRESENTABLE
    assert len(cert.to_dict()["witness"]) == g.size


@pytest.mark.parametrize(
    "g, verdict",
    [
        (cycle(5), Verdict.REPRESENTABLE),
        (complete_bipartite(3, 3), Verdict.REPRESENTABLE),
        (graph_a(), Verdict.NON_REPRESENTABLE),
        (mycielski(cycle(3)), Verdict.NON_REPRESENTABLE),
    ],
)
def test_decide_examples(g, verdict):
    assert decide_word_representable(g).verdict is verdict


@pytest.mark.slow
def test_line_w5_prime_is_not_representable():
    assert decide_word_representable(line_graph(w5_prime())).verdict is Verdict.NON_REPRESENTABLE


@pytest.mark.slow
def test_mycielski_c5_is_not_representable():
    assert decide_word_representable(mycielski(cycle(5))).verdict is Verdict.NON_REPRESENTABLE


def test_parallel_search_agrees_with_serial():
    g = line_graph(k4_prime())
    cert = decide_word_representable(g, workers=2)
    assert cert.verdict is Verdict.NON_REPRESENTABLE
    assert len(cert.exhaustion.per_worker) == 2
    assert cert.exhaustion.branches_explored == sum(cert.exhaustion.per_worker)
    assert decide_word_representable(cycle(5), workers=2).verdict is Verdict.REPRESENTABLE


def test_branches_are_credited_to_the_process_that_ran_them():
    results = [(4101, 5), (4202, 3), (4101, 2), (4202, 1)]
    assert tally_by_process(results, 2) == [7, 4]
    assert tally_by_process([(4101, 5), (4101, 6)], 3) == [11, 0, 0]
    assert tally_by_process([(1, 1), (2, 2), (3, 4)], 2) == [5, 2]


def test_search_guard():
    with pytest.raises(ScaleGuardError):
        find_semi_transitive(complete(8), override=False)
    with pytest.raises(ScaleGuardError):
        decide_word_representable(complete(8), override=False)


@pytest.mark.parametrize("variant", sorted(COMPLETION_VARIANTS))
def test_forced_completion_is_unique(variant):
    completions = enumerate_completions(completion_configuration(variant), limit=8)
    assert len(completions) == 1
    assert completions[0].has_arc("a", "d") and completions[0].has_arc("d", "c")


def test_completions_of_fully_oriented_inputs():
    d = transitive(complete(4))
    assert enumerate_completions(partial_orientation(d.base, d.arcs), limit=4) == [d]
    cyclic = partial_orientation(cycle(3), [("1", "2"), ("2", "3"), ("3", "1")])
    assert enumerate_completions(cyclic, limit=4) == []


def test_fixed_arcs_are_respected():
    g = cycle(4)
    fixed = partial_orientation(g, [("2", "1")])
    d = find_semi_transitive(g, fixed)
    assert d is not None and d.has_arc("2", "1")
    assert FIXED_NOTE != PINNED_NOTE


def test_line_graph_obstructions():
    found = find_line_graph_obstruction(complete(5))
    assert found is not None and found.name == "k4-prime"
    found = find_line_graph_obstruction(graph_a())
    assert found is not None and found.name == "w5-prime"
    assert find_line_graph_obstruction(cycle(5)) is None
    assert find_mycielski_line_obstruction(cycle(5)) is None
    found = find_mycielski_line_obstruction(complete(3))
    assert found is not None and found.embedding.image() == ["1", "2", "3"]


def test_connected_graphs_with_k4_report_k4_prime():
    checked = 0
    for g in small_graphs(6):
        if g.order < 5 or not is_connected(g):
            continue
        h = nx.Graph(list(g.edges))
        if max(len(c) for c in nx.find_cliques(h)) < 4:
            continue
        checked += 1
        found = find_line_graph_obstruction(g)
        assert found is not None and found.name == "k4-prime", g.edges
    assert checked


@pytest.mark.slow
def test_search_and_word_search_agree_on_five_vertices():
    for g in small_graphs(5):
        cert = decide_word_representable(g)
        word = find_uniform_word(g, 3)
        assert (word is not None) == (cert.verdict is Verdict.REPRESENTABLE)
        if word is not None:
            assert represented_graph(word, g.vertices) == g


@settings(max_examples=150, deadline=None)
@given(orientations(acyclic=True))
def test_shortcut_finders_agree(d):
    fast = find_shortcut(d)
    slow = find_shortcut_bruteforce(d)
    assert (fast is None) == (slow is None)
    if fast is not None:
        assert fast.holds_in(d)


@settings(max_examples=150, deadline=None)
@given(orientations())
def test_acyclicity_matches_networkx(d):
    assert is_acyclic(d) == nx.is_directed_acyclic_graph(to_nx(d))


@settings(max_examples=100, deadline=None)
@given(orientations())
def test_reachability_matches_networkx(d):
    reach = reachability_matrix(d)
    h = to_nx(d)
    for x in d.base.vertices:
        for y in d.base.vertices:
            assert bool(reach[d.base.index[x], d.base.index[y]]) == nx.has_path(h, x, y)


@settings(max_examples=100, deadline=None)
@given(orientations(acyclic=True), st.data())
def test_semi_transitivity_is_hereditary_and_reversible(d, data):
    if not is_semi_transitive(d):
        return
    assert is_semi_transitive(reverse_orientation(d))
    subset = data.draw(st.sets(st.sampled_from(d.base.vertices)))
    assert is_semi_transitive(restrict_orientation(d, subset))


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=2, max_value=5), st.integers(min_value=1, max_value=3), st.data())
def test_word_orientation_is_semi_transitive(size, k, data):
    alphabet = [chr(ord("a") + i) for i in range(size)]
    word = Word(tuple(data.draw(st.permutations(alphabet * k))))
    g = represented_graph(word, alphabet)
    assert is_semi_transitive(orientation_from_word(word, g))


@settings(max_examples=40, deadline=None)
@given(orientations(max_vertices=5))
def test_search_finds_a_verified_orientation(d):
    # every graph on at most five vertices is word-representable
    found = find_semi_transitive(d.base)
    assert found is not None and is_semi_transitive(found)
