import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qp2l.graph_core import ColoredGraph, Instance, edge
from qp2l.transforms import (BookEmbedding, TrackLayout, book_from_json,
                             book_to_track, drawing_from_json, track_from_json,
                             track_to_book, track_to_drawing, verify_book,
                             verify_quasi_planar, verify_track)


def sample_book():
    colors = {"b1": "black", "b2": "black", "r1": "red", "r2": "red"}
    pages = {edge("b1", "r1"): 1, edge("b1", "r2"): 1,
             edge("b2", "r1"): 2, edge("b2", "r2"): 1}
    return BookEmbedding(spine=("b1", "b2", "r2", "r1"), pages=pages,
                         colors=colors)


def sample_instance():
    g = ColoredGraph(black=["b1", "b2"], red=["r1", "r2"],
                     edges=[("b1", "r1"), ("b1", "r2"),
                            ("b2", "r1"), ("b2", "r2")])
    return Instance(graph=g, black_order=("b1", "b2"))


def test_verify_book_accepts_valid():
    assert verify_book(sample_instance(), sample_book())


def test_verify_book_rejects_wrong_black_order():
    inst = sample_instance()
    be = sample_book()
    flipped = Instance(graph=inst.graph, black_order=("b2", "b1"))
    # K22 is symmetric, so both orders are realizable; break the symmetry
    # by checking an actually-crossing page assignment instead
    bad = BookEmbedding(spine=be.spine,
                        pages={e: 1 for e in be.pages}, colors=be.colors)
    assert not verify_book(inst, bad)
    assert verify_book(flipped, be)  # reflection of the circle is allowed


def test_verify_book_rejects_split_class():
    be = sample_book()
    broken = BookEmbedding(spine=("b1", "r2", "b2", "r1"), pages=be.pages,
                           colors=be.colors)
    assert not verify_book(sample_instance(), broken)


def test_verify_book_rejects_missing_page():
    be = sample_book()
    pages = dict(be.pages)
    pages.pop(edge("b1", "r1"))
    assert not verify_book(sample_instance(),
                           BookEmbedding(be.spine, pages, be.colors))


def test_book_track_roundtrip():
    be = sample_book()
    tl = book_to_track(be)
    assert tl.xi1 == ("b1", "b2")
    assert tl.xi2 == ("r1", "r2")  # red spine order reversed
    back = track_to_book(tl, colors=be.colors)
    assert back.spine == be.spine
    assert back.pages == be.pages


def test_track_verifier_catches_same_color_crossing():
    tl = TrackLayout(xi1=("b1", "b2"), xi2=("r1", "r2"),
                     omega={edge("b1", "r2"): 1, edge("b2", "r1"): 1})
    assert not verify_track(tl)
    tl2 = TrackLayout(xi1=("b1", "b2"), xi2=("r1", "r2"),
                      omega={edge("b1", "r2"): 1, edge("b2", "r1"): 2})
    assert verify_track(tl2)


def test_drawing_chain():
    tl = book_to_track(sample_book())
    d = track_to_drawing(tl)
    assert verify_quasi_planar(d)
    assert set(d.x_black) == {"b1", "b2"}
    assert set(d.x_red) == {"r1", "r2"}


def test_quasi_planar_rejects_triple_crossing():
    from qp2l.transforms import TwoLevelDrawing

    d = TwoLevelDrawing(x_black={"a": 0, "b": 1, "c": 2},
                        x_red={"x": 0, "y": 1, "z": 2},
                        edges=(edge("a", "z"), edge("b", "y"),
                               edge("c", "x")))
    assert not verify_quasi_planar(d)


def test_json_roundtrips():
    be = sample_book()
    back = book_from_json(be.to_json(), be.colors)
    assert back.spine == be.spine and back.pages == be.pages

    tl = book_to_track(be)
    tback = track_from_json(tl.to_json())
    assert tback.xi1 == tl.xi1 and tback.xi2 == tl.xi2
    assert tback.omega == tl.omega

    d = track_to_drawing(tl)
    dback = drawing_from_json(d.to_json())
    assert dback.x_black == d.x_black and dback.x_red == d.x_red
    assert set(dback.edges) == set(d.edges)


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 5), st.integers(2, 5), st.data())
def test_valid_books_survive_the_representation_chain(nb, nr, data):
    # build a non-crossing two-page book directly, then walk it through
    # track and drawing form; every verifier along the way must accept
    blacks = [f"b{i}" for i in range(nb)]
    reds = [f"r{i}" for i in range(nr)]
    pages = {}
    for page in (1, 2):
        i = j = 0
        pages[edge(blacks[0], reds[0])] = pages.get(
            edge(blacks[0], reds[0]), page)
        while i < nb - 1 or j < nr - 1:
            if j == nr - 1 or (i < nb - 1 and data.draw(st.booleans())):
                i += 1
            else:
                j += 1
            pages.setdefault(edge(blacks[i], reds[j]), page)
    g = ColoredGraph(black=blacks, red=reds, edges=sorted(pages))
    inst = Instance(graph=g, black_order=tuple(blacks))
    be = BookEmbedding(spine=tuple(blacks) + tuple(reversed(reds)),
                       pages=pages, colors=dict(g.color))
    assert verify_book(inst, be)
    tl = book_to_track(be)
    assert verify_track(tl)
    assert verify_quasi_planar(track_to_drawing(tl))
