import pytest

from qp2l.graph_core import ColoredGraph, edge
from qp2l.planar_embed import (EmbeddingError, NonPlanarWitness,
                               RotationEmbedding, enumerate_embeddings, flip,
                               restrict)
from qp2l.planar_embed import test_planarity as planarity


def k4_embedding():
    # planar K4: vertex d inside triangle abc
    return RotationEmbedding({
        "a": ("b", "d", "c"),
        "b": ("c", "d", "a"),
        "c": ("a", "d", "b"),
        "d": ("a", "b", "c"),
    })


def bip(blacks, reds, edges):
    return ColoredGraph(black=list(blacks), red=list(reds),
                        edges=list(edges))


def test_k4_face_count():
    e = k4_embedding()
    assert len(e.faces) == 4  # euler: 4 - 6 + f = 2


def test_duplicate_neighbor_rejected():
    with pytest.raises(EmbeddingError):
        RotationEmbedding({"a": ("b", "b"), "b": ("a", "a")})


def test_nonplanar_rotation_rejected():
    # K5 has no planar rotation system
    names = "abcde"
    with pytest.raises(EmbeddingError):
        RotationEmbedding({v: tuple(u for u in names if u != v)
                           for v in names})


def test_face_of_inverse_of_faces():
    e = k4_embedding()
    for f in e.faces:
        for he in f.half_edges():
            assert e.face_of[he] == f.id


def test_planarity_accepts_k22():
    g = bip("ab", "xy", [("a", "x"), ("a", "y"), ("b", "x"), ("b", "y")])
    e = planarity(g)
    assert isinstance(e, RotationEmbedding)
    assert len(e.faces) == 2


def test_planarity_rejects_k33_with_witness():
    g = bip("abc", "xyz", [(b, r) for b in "abc" for r in "xyz"])
    w = planarity(g)
    assert isinstance(w, NonPlanarWitness)
    assert w.kind == "K33"
    assert w.edges <= {edge(b, r) for b in "abc" for r in "xyz"}


def test_planarity_rejects_k5_with_witness():
    class Shim:
        vertices = list("abcde")
        edges = [edge(u, v) for i, u in enumerate("abcde")
                 for v in "abcde"[i + 1:]]

    w = planarity(Shim())
    assert isinstance(w, NonPlanarWitness)
    assert w.kind == "K5"


def test_flip_is_an_involution():
    e = k4_embedding()
    assert flip(flip(e)).rotation == e.rotation
    assert len(flip(e).faces) == len(e.faces)


def test_restrict_drops_edges():
    e = k4_embedding()
    sub = [("a", "b"), ("b", "c"), ("c", "a")]
    r = restrict(e, sub)
    assert r.rotation["d"] == ()
    assert len(r.faces) == 2
    with pytest.raises(EmbeddingError):
        restrict(e, [("a", "zzz")])


def shim(vertices, edges):
    from types import SimpleNamespace

    adj = {v: [] for v in vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return SimpleNamespace(vertices=list(vertices),
                           edges=[edge(u, v) for u, v in edges], adj=adj)


def test_enumerate_embeddings_k4_unique():
    # K4 has a unique embedding up to reflection
    g = shim("abcd", [(u, v) for i, u in enumerate("abcd")
                      for v in "abcd"[i + 1:]])
    embs = list(enumerate_embeddings(g))
    assert len(embs) == 1


def test_enumerate_embeddings_counts_cycle_plus_chord():
    # a 4-cycle with a pendant vertex on one corner: the pendant can sit in
    # either face, but those embeddings are reflections of each other
    g = shim("abcdp", [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d"),
                       ("a", "p")])
    embs = list(enumerate_embeddings(g))
    assert len(embs) == 1


def test_enumeration_guard():
    g = shim([f"v{i}" for i in range(11)], [])
    with pytest.raises(EmbeddingError):
        list(enumerate_embeddings(g))


def test_enumerated_embeddings_are_planar_and_distinct():
    g = bip("abc", "xy",
            [("a", "x"), ("b", "x"), ("c", "x"), ("a", "y"), ("b", "y"),
             ("c", "y")])
    embs = list(enumerate_embeddings(g))
    keys = {e.canonical_key() for e in embs}
    assert len(keys) == len(embs)
    for e in embs:  # reflections were deduplicated
        assert e.reflection_key() not in keys - {e.canonical_key()}
    for e in embs:
        # euler check on a connected graph
        assert len(e.faces) == len(g.edges) - len(g.vertices) + 2
