import json

import pytest

from utils.errors import GraphFormatError, OrientationError
from utils.formats import (
    certificate_to_json, dump_edge_list, dump_graph_json, dump_orientation, graph_to_dot, load_graph,
    orientation_to_dot, parse_edge_list, parse_graph_json, parse_orientation, save_graph,
)
from utils.graph_core import build_graph, cycle, k4_prime, mycielski
from utils.semitransitive import Verdict, decide_word_representable, orient


def test_parse_edge_list_with_comments():
    text = "# triangle\nvertices: a b c\na b  # first\nb c\n\nc a\n"
    g = parse_edge_list(text)
    assert g == build_graph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])


@pytest.mark.parametrize(
    "text",
    [
        "a b\n",
        "vertices: a b\na b c\n",
        "vertices: a b\na a\n",
        "vertices: a b\na z\n",
    ],
)
def test_parse_edge_list_rejects(text):
    with pytest.raises(GraphFormatError):
        parse_edge_list(text)


def test_edge_list_text():
    assert dump_edge_list(cycle(3)) == "vertices: 1 2 3\n1 2\n1 3\n2 3\n"
    g = mycielski(cycle(5))
    assert parse_edge_list(dump_edge_list(g)) == g


def test_graph_json():
    g = k4_prime()
    data = json.loads(dump_graph_json(g))
    assert data["vertices"] == ["1", "2", "3", "4", "y"]
    assert ["1", "y"] in data["edges"]
    assert parse_graph_json(dump_graph_json(g)) == g
    with pytest.raises(GraphFormatError):
        parse_graph_json("{not json")
    with pytest.raises(GraphFormatError):
        parse_graph_json('{"vertices": ["a"]}')
    with pytest.raises(GraphFormatError):
        parse_graph_json('{"vertices": ["a"], "edges": [["a", "a"]]}')


@pytest.mark.parametrize("name", ["g.json", "nested/g.txt"])
def test_save_and_load(tmp_path, name):
    g = mycielski(cycle(3))
    target = str(tmp_path / name)
    save_graph(g, target)
    assert load_graph(target) == g


def test_load_missing_file(tmp_path):
    with pytest.raises(GraphFormatError):
        load_graph(str(tmp_path / "missing.txt"))


def test_orientation_text():
    g = cycle(3)
    d = orient(g, [("1", "2"), ("2", "3"), ("1", "3")])
    text = dump_orientation(d)
    assert text == "1 -> 2\n1 -> 3\n2 -> 3\n"
    assert parse_orientation(text, g) == d
    with pytest.raises(GraphFormatError):
        parse_orientation("1 2\n", g)
    with pytest.raises(OrientationError):
        parse_orientation("1 -> 2\n", g)


def test_certificate_json():
    cert = decide_word_representable(cycle(3))
    data = json.loads(certificate_to_json(cert))
    assert data["verdict"] == Verdict.REPRESENTABLE.value
    assert len(data["witness"]) == 3


def test_dot_output():
    text = graph_to_dot(cycle(3), "C3", [["1", "2"]])
    assert text.startswith('graph "C3" {')
    assert '"1" -- "2";' in text
    assert '{ rank = same; "1"; "2"; }' in text
    d = orient(cycle(3), [("1", "2"), ("2", "3"), ("1", "3")])
    text = orientation_to_dot(d)
    assert text.startswith('digraph "D" {')
    assert '"2" -> "3";' in text
    assert graph_to_dot(build_graph(['a"b'], []), "q").count('"a\\"b"') == 1
