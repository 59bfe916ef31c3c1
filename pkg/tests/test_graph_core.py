import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qp2l.graph_core import (ColoredGraph, InputError, Instance,
                             black_saturation, edge, instance_to_json,
                             normalize, parse_instance, reinsert)
from qp2l.transforms import verify_book


def k22(order=("b1", "b2")):
    g = ColoredGraph(black=["b1", "b2"], red=["r1", "r2"],
                     edges=[("b1", "r1"), ("b1", "r2"),
                            ("b2", "r1"), ("b2", "r2")])
    return Instance(graph=g, black_order=order)


def test_edge_is_canonical():
    assert edge("b", "a") == edge("a", "b") == ("a", "b")


def test_rejects_red_red_edge():
    with pytest.raises(InputError):
        ColoredGraph(black=["b"], red=["r1", "r2"],
                     edges=[("r1", "r2")])


def test_rejects_parallel_edges():
    g = ColoredGraph(black=["b"], red=["r"], edges=[("b", "r")])
    with pytest.raises(InputError):
        g.add_edge("r", "b")


def test_instance_rejects_black_black_edge():
    with pytest.raises(InputError):
        Instance(graph=ColoredGraph(black=["b1", "b2"], red=["r"],
                                    edges=[("b1", "b2")]),
                 black_order=("b1", "b2"))


def test_instance_requires_complete_order():
    g = ColoredGraph(black=["b1", "b2"], red=["r"], edges=[("b1", "r")])
    with pytest.raises(InputError):
        Instance(graph=g, black_order=("b1",))


def test_parse_roundtrip():
    inst = k22()
    back = parse_instance(instance_to_json(inst))
    assert back.black_order == inst.black_order
    assert back.graph.edges == inst.graph.edges
    assert back.graph.color == inst.graph.color


def test_parse_rejects_garbage():
    with pytest.raises((InputError, ValueError)):
        parse_instance("{not json")
    with pytest.raises(InputError):
        parse_instance(json.dumps({"black": ["b"], "red": ["b"],
                                   "edges": [], "order": ["b"]}))


def test_black_saturation_adds_path():
    h = black_saturation(k22())
    assert ("b1", "b2") in h.graph.edges
    assert h.black_path == (("b1", "b2"),)
    assert h.black_order == ("b1", "b2")


def test_black_saturation_rejects_preexisting_path_edge():
    from types import SimpleNamespace

    h = black_saturation(k22())
    shim = SimpleNamespace(graph=h.graph, black_order=("b1", "b2"))
    with pytest.raises(InputError):
        black_saturation(shim)


def test_tiny_shortcut_two_blacks():
    inst = k22()
    norm, plan = normalize(inst)
    assert plan.trivial_answer is not None
    be = reinsert(plan.trivial_answer, plan)
    assert verify_book(inst, be)


def test_tiny_shortcut_two_reds_many_blacks():
    g = ColoredGraph(black=["b1", "b2", "b3", "b4"], red=["r1", "r2"],
                     edges=[(b, r) for b in ["b1", "b2", "b3", "b4"]
                            for r in ["r1", "r2"]])
    inst = Instance(graph=g, black_order=("b2", "b4", "b1", "b3"))
    _, plan = normalize(inst)
    be = reinsert(plan.trivial_answer, plan)
    assert verify_book(inst, be)


def test_normalize_keeps_one_pendant_per_black():
    g = ColoredGraph(black=["b1", "b2", "b3"],
                     red=["r1", "r2", "r3", "p", "q"],
                     edges=[("b1", "r1"), ("b2", "r2"), ("b3", "r3"),
                            ("b2", "r1"), ("b2", "r3"),
                            ("b1", "p"), ("b1", "q")])
    inst = Instance(graph=g, black_order=("b1", "b2", "b3"))
    norm, plan = normalize(inst)
    assert plan.trivial_answer is None
    kept, gone = plan.removed_trivials["b1"]
    assert kept == "p" and gone == ["q"]
    assert "q" not in norm.graph.vertices


def test_normalize_drops_isolated_and_reinserts():
    g = ColoredGraph(black=["b1", "b2", "b3", "z"],
                     red=["r1", "r2", "r3", "i"],
                     edges=[("b1", "r1"), ("b2", "r2"), ("b3", "r3"),
                            ("b1", "r2"), ("b2", "r3")])
    inst = Instance(graph=g, black_order=("b1", "z", "b2", "b3"))
    norm, plan = normalize(inst)
    assert plan.isolated_blacks == [(1, "z")]
    assert plan.isolated_reds == ["i"]
    assert "z" not in norm.graph.vertices


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 2), st.integers(1, 6), st.data())
def test_tiny_books_always_verify(nb, nr, data):
    # any instance with <=2 blacks is a yes-instance; the direct book must
    # check out against the original instance after reinsertion
    blacks = [f"b{i}" for i in range(nb)]
    reds = [f"r{i}" for i in range(nr)]
    pairs = [(b, r) for b in blacks for r in reds]
    chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True))
    g = ColoredGraph(black=blacks, red=reds, edges=chosen)
    order = tuple(data.draw(st.permutations(blacks)))
    inst = Instance(graph=g, black_order=order)
    _, plan = normalize(inst)
    assert plan.trivial_answer is not None
    assert verify_book(inst, reinsert(plan.trivial_answer, plan))
