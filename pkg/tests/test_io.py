import pytest
from hypothesis import given

from cbmg.digraph import Digraph
from cbmg.errors import InputError, ParseError
from cbmg.io import dumps_graph, format_edgelist, graph_from_dict, loads_graph, parse_edgelist, to_dot

from fixtures import bipartite_digraphs, digraphs, t1


def test_json_layout():
    text = dumps_graph(t1())
    assert text.endswith("\n")
    data = loads_graph(text)
    assert data == t1()
    assert '"color": "A"' in text


def test_uncolored_json():
    g = Digraph.from_edges([("a", "b")])
    assert loads_graph(dumps_graph(g)) == g
    assert "color" not in dumps_graph(g)


def test_malformed_json():
    with pytest.raises(ParseError):
        loads_graph("{not json")
    with pytest.raises(InputError):
        graph_from_dict({"edges": []})
    with pytest.raises(InputError):
        graph_from_dict({"vertices": [{"id": "a", "color": "A"}, {"id": "b"}]})
    with pytest.raises(InputError):
        graph_from_dict({"vertices": [{"id": "a"}], "edges": [["a", "z"]]})


def test_edgelist():
    g = parse_edgelist("# comment\na\tb\nb\tc  # trailing\nz\n")
    assert g.edges() == [("a", "b"), ("b", "c")]
    assert "z" in g
    assert parse_edgelist(format_edgelist(g)) == g
    with pytest.raises(ParseError):
        parse_edgelist("a\tb\tc\n")


def test_dot_export():
    dot = to_dot(t1())
    assert dot.count("->") == 3
    assert '"x1" -> "y1";' in dot and '"y1" -> "x1";' in dot
    assert "fillcolor=" in dot


@given(bipartite_digraphs())
def test_export_import_export_is_byte_identical(g):
    first = dumps_graph(g)
    assert dumps_graph(loads_graph(first)) == first


@given(digraphs())
def test_edgelist_round_trip(g):
    assert parse_edgelist(format_edgelist(g)) == g
