import os

import pytest

from qp2l.graph_core import InputError, edge
from qp2l.hardness import (LeveledDrawing, LeveledInstance, decide_olp,
                           extract_leveling, frame, matching_edges,
                           reduce_olp, verify_leveling)
from qp2l.oracle import GuardError, oracle_saturator
from qp2l.planar_embed import test_planarity as planarity


def path_instance():
    return LeveledInstance(vertices=["s", "a", "t"],
                           edges=[("s", "a"), ("a", "t")],
                           k=3, v1="s", vk="t")


def test_leveled_instance_validation():
    with pytest.raises(InputError):
        LeveledInstance(vertices=["s", "t"], edges=[("s", "t")],
                        k=2, v1="s", vk="t")
    with pytest.raises(InputError):
        LeveledInstance(vertices=["s", "a", "t"],
                        edges=[("s", "a")],  # disconnected
                        k=3, v1="s", vk="t")
    with pytest.raises(InputError):
        LeveledInstance(vertices=["s", "a", "t"],
                        edges=[("s", "a"), ("a", "t")],
                        k=3, v1="s", vk="a")  # different parts


def test_frame_shape():
    g = frame(3)
    assert len(g.vertices) == 6 * 3 + 6
    e = planarity(g)
    lengths = sorted(len(f) for f in e.faces)
    assert lengths[-1] == 4  # k=3: the "large" face is itself a quad
    g5 = frame(5)
    e5 = planarity(g5)
    assert sorted(len(f) for f in e5.faces)[-1] == 2 * 5 - 2


def test_frame_rejects_even_or_small_k():
    with pytest.raises(InputError):
        frame(2)
    with pytest.raises(InputError):
        frame(1)


def test_frame_has_unique_saturator_containing_matching():
    os.environ["QP2L_GUARD_OVERRIDE"] = "1"
    try:
        g = frame(3)
        cyc = oracle_saturator(g)
    finally:
        del os.environ["QP2L_GUARD_OVERRIDE"]
    assert cyc is not None
    from qp2l.oracle import saturator_edges

    es = set(saturator_edges(g, cyc))
    assert set(matching_edges(3)) <= es


def test_reduction_renames_and_glues():
    li = path_instance()
    g = reduce_olp(li)
    assert "v1" in g and "v3" in g and "h_a" in g
    assert edge("v1", "h_a") in g.edges
    assert edge("v3", "h_a") in g.edges
    # frame vertices all survive
    assert set(frame(3).vertices) <= set(g.vertices)


def test_extract_and_verify_leveling_roundtrip():
    li = path_instance()
    g = reduce_olp(li)
    os.environ["QP2L_GUARD_OVERRIDE"] = "1"
    try:
        cyc = oracle_saturator(g)
    finally:
        del os.environ["QP2L_GUARD_OVERRIDE"]
    assert cyc is not None
    ld = extract_leveling(g, li, cyc)
    assert verify_leveling(li, ld)
    assert ld.gamma == {"s": 1, "a": 2, "t": 3}


def test_verify_leveling_rejects_inversion():
    # two disjoint s-t paths through levels 2..4 of a 5-level instance
    li = LeveledInstance(
        vertices=["s", "a", "b", "c", "d", "e", "f", "t"],
        edges=[("s", "a"), ("s", "b"), ("a", "c"), ("b", "d"),
               ("c", "e"), ("d", "f"), ("e", "t"), ("f", "t")],
        k=5, v1="s", vk="t")
    gamma = {"s": 1, "a": 2, "b": 2, "c": 3, "d": 3, "e": 4, "f": 4, "t": 5}
    ok = LeveledDrawing(gamma=gamma,
                        orders=[["s"], ["a", "b"], ["c", "d"],
                                ["e", "f"], ["t"]])
    assert verify_leveling(li, ok)
    crossed = LeveledDrawing(gamma=gamma,
                             orders=[["s"], ["a", "b"], ["d", "c"],
                                     ["e", "f"], ["t"]])
    assert not verify_leveling(li, crossed)
    incomplete = LeveledDrawing(gamma=gamma,
                                orders=[["s"], ["a"], ["c", "d"],
                                        ["e", "f"], ["t"]])
    assert not verify_leveling(li, incomplete)


def test_decide_olp_positive_and_negative():
    assert decide_olp(path_instance())
    li = LeveledInstance(
        vertices=["s", "a", "b", "t", "c", "d"],
        edges=[("s", "a"), ("a", "t"), ("s", "b"), ("b", "t"),
               ("s", "c"), ("c", "d"), ("d", "a"), ("d", "b")],
        k=3, v1="s", vk="t")
    # d sits on level 3 but is not vk, and no other placement satisfies
    # its three level-2 neighbors
    assert decide_olp(li) is False


def test_decide_olp_guard():
    vs = ["s", "t"] + [f"m{i}" for i in range(9)]
    li = LeveledInstance(vertices=vs,
                         edges=[("s", m) for m in vs[2:]] +
                               [(m, "t") for m in vs[2:]],
                         k=3, v1="s", vk="t")
    with pytest.raises(GuardError):
        decide_olp(li)
    os.environ["QP2L_GUARD_OVERRIDE"] = "1"
    try:
        assert decide_olp(li) is True
    finally:
        del os.environ["QP2L_GUARD_OVERRIDE"]


def test_reduction_soundness_small():
    """Positive and negative leveled instances agree with the reduced
    saturator decision."""
    pos = path_instance()
    neg = LeveledInstance(
        vertices=["s", "a", "b", "t", "c", "d"],
        edges=[("s", "a"), ("a", "t"), ("s", "b"), ("b", "t"),
               ("s", "c"), ("c", "d"), ("d", "a"), ("d", "b")],
        k=3, v1="s", vk="t")
    os.environ["QP2L_GUARD_OVERRIDE"] = "1"
    try:
        for li, want in ((pos, True), (neg, False)):
            g = reduce_olp(li)
            cyc = oracle_saturator(g)
            assert (cyc is not None) == want == decide_olp(li)
            if cyc is not None:
                assert verify_leveling(li, extract_leveling(g, li, cyc))
    finally:
        del os.environ["QP2L_GUARD_OVERRIDE"]
