import pytest
from hypothesis import given

from sgcrit import sgio
from sgcrit.constructions import GalleryId, gallery
from sgcrit.errors import DuplicateEdge, FormatError, LoopEdge, VertexOutOfRange
from sgcrit.sgraph import SignedGraph, SignedMultiGraph

import gen

GALLERY = list(GalleryId.FIXED) + ["cminus:4", "cplus:6", "g2k1:2", "gprime:2"]


def test_canonical_text():
    G = SignedGraph(3, [(2, 0, -1), (0, 1, 1)])
    assert sgio.dumps(G) == "sg 1\nn 3\ne 0 1 +\ne 0 2 -\n"


def test_comments_and_whitespace():
    G = sgio.loads("# a path\nsg 1\n  n 3   \ne 1 0 -  # trailing\ne 1 2 +\n")
    assert G.edges == ((0, 1, -1), (1, 2, 1))


def test_multigraph_magic():
    M = sgio.loads("sgm 1\nn 2\ne 0 1 +\ne 0 1 -\n")
    assert isinstance(M, SignedMultiGraph) and M.m == 2


def test_stream():
    text = sgio.dumps(SignedGraph(2, [(0, 1, 1)])) + "\n" + sgio.dumps(SignedGraph(1))
    assert [G.n for G in sgio.loads_all(text)] == [2, 1]
    with pytest.raises(FormatError):
        sgio.loads(text)


@pytest.mark.parametrize("bad", [
    "", "sg 2\nn 1\n", "sg 1\ne 0 1 +\n", "sg 1\nn 2\ne 0 1 *\n", "sg 1\nn x\n",
    "sg 1\nn 2\nq 1\n",
])
def test_malformed(bad):
    with pytest.raises(FormatError):
        sgio.loads(bad)


@pytest.mark.parametrize("bad,error", [
    ("sg 1\nn 2\ne 0 1 +\ne 1 0 -\n", DuplicateEdge),
    ("sg 1\nn 2\ne 0 0 +\n", LoopEdge),
    ("sg 1\nn 2\ne 0 5 +\n", VertexOutOfRange),
])
def test_invalid_graph_keeps_specific_error(bad, error):
    with pytest.raises(error, match="line 1"):
        sgio.loads(bad)


@pytest.mark.parametrize("gid", GALLERY)
def test_gallery_round_trip_is_byte_identical(gid):
    text = sgio.dumps(gallery(gid))
    assert sgio.dumps(sgio.loads(text)) == text


@given(gen.signed_graphs(max_n=8, multi=True))
def test_round_trip(G):
    assert sgio.loads(sgio.dumps(G)) == G


def test_file_io(tmp_path):
    G = gallery("what")
    path = tmp_path / "w.sg"
    sgio.dump(G, path)
    assert path.read_bytes() == sgio.dumps(G).encode()
    assert sgio.load(path) == G
