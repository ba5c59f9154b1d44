import io
import random

import networkx as nx
import pytest

from injchrom.codec import Graph6Error, parse_graph6, read_stream, to_graph6_str, write_graph6, write_stream
from injchrom.graphcore import Graph

from oracles import random_graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def reference_graph6(g: Graph) -> bytes:
    return nx.to_graph6_bytes(to_nx(g), header=False).strip()


def test_examples():
    assert parse_graph6("Bw") == Graph.complete(3)
    assert parse_graph6("A?") == Graph.empty(2)
    assert to_graph6_str(Graph.complete(3)) == "Bw"
    assert to_graph6_str(Graph.empty(1)) == "@"
    # cross-check the hand values against the reference encoder
    for g in (Graph.complete(3), Graph.empty(2), Graph.empty(1)):
        assert write_graph6(g) == reference_graph6(g)


@pytest.mark.parametrize("bad", ["B\x20", "Bw\x7f", "B", "Bww", "Bx", "~~??????????", ""])
def test_malformed(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_header_and_stream():
    assert list(read_stream([b">>graph6<<", b"Bw"])) == [Graph.complete(3)]
    assert list(read_stream([b">>graph6<<Bw\n"])) == [Graph.complete(3)]
    assert list(read_stream(io.BytesIO(b""))) == []
    two = list(read_stream(io.BytesIO(b"Bw\nA?\n")))
    assert two == [Graph.complete(3), Graph.empty(2)]
    with pytest.raises(Graph6Error) as e:
        list(read_stream([b"Bw", b"B!"]))
    assert e.value.lineno == 2


def test_write_stream():
    buf = io.BytesIO()
    assert write_stream([Graph.complete(3)] * 2, buf, header=True) == 2
    assert buf.getvalue() == b">>graph6<<Bw\nBw\n"


def test_round_trip_random_against_reference():
    rng = random.Random(7)
    for _ in range(1000):
        n = rng.randint(0, 20)
        g = random_graph(n, rng.random(), rng)
        s = write_graph6(g)
        assert s == reference_graph6(g)
        assert all(63 <= b <= 126 for b in s)
        assert parse_graph6(s) == g


@pytest.mark.parametrize("n", [62, 63, 100])
def test_size_field_boundaries(n):
    rng = random.Random(n)
    g = random_graph(n, 0.1, rng)
    s = write_graph6(g)
    assert s == reference_graph6(g)
    assert len(s) - (n * (n - 1) // 2 + 5) // 6 == (1 if n <= 62 else 4)
    assert parse_graph6(s) == g
    assert nx.utils.edges_equal(sorted(nx.from_graph6_bytes(s).edges()), sorted(g.edges()))


def test_padding_bits_zero():
    rng = random.Random(3)
    for n in range(2, 30):
        g = random_graph(n, 0.9, rng)
        s = write_graph6(g)
        nbits = n * (n - 1) // 2
        pad = (-nbits) % 6
        assert (s[-1] - 63) & ((1 << pad) - 1) == 0


def test_eight_byte_size_rejected():
    with pytest.raises(Graph6Error):
        parse_graph6(b"~~" + b"?" * 6)
