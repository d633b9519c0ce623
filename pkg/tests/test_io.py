import pytest
from hypothesis import given, settings

from demkit.families import generate
from demkit.io import GraphFormatError, parse_graph, read_graph_file, write_graph, write_graph_file
from strategies import graphs


def test_triangle():
    G = parse_graph("3 3\n0 1\n1 2\n0 2\n")
    assert G == generate("complete:3")


def test_comments_and_blank_lines():
    G = parse_graph("# header comment\n\n2 1\n# edge follows\n1 0\n")
    assert G.edges == ((0, 1),)


@pytest.mark.parametrize("text, line, fragment", [
    ("2 1\n0 0\n", 2, "loop"),
    ("3 1\n0 x\n", 2, "integer"),
    ("3 1\n0 1 2\n", 2, "expected 2"),
    ("2 1\n0 5\n", 2, "out of range"),
    ("3 2\n0 1\n1 0\n", 3, "duplicate"),
    ("3 1\n0 1\n1 2\n", 3, "more than"),
    ("bad\n", 1, "expected 2"),
])
def test_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(GraphFormatError, match=fragment) as info:
        parse_graph(text)
    assert info.value.line == line


def test_count_mismatch():
    with pytest.raises(GraphFormatError, match="declares 3"):
        parse_graph("4 3\n0 1\n")


def test_missing_header():
    with pytest.raises(GraphFormatError):
        parse_graph("# nothing\n")


def test_canonical_output():
    assert write_graph(parse_graph("3 2\n2 1\n1 0\n")) == "3 2\n0 1\n1 2\n"


def test_file_round_trip(tmp_path):
    G = generate("g8_star")
    path = tmp_path / "g.txt"
    write_graph_file(G, path)
    assert read_graph_file(path) == G


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=12))
def test_round_trip(G):
    text = write_graph(G)
    assert parse_graph(text) == G
    assert write_graph(parse_graph(text)) == text
