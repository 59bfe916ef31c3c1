import itertools
import os

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qp2l.graph_core import ColoredGraph, Instance, edge
from qp2l.oracle import (GuardError, count_saturators, oracle_b2befo,
                         oracle_saturator, saturator_edges)
from qp2l.transforms import verify_book


def inst(blacks, reds, edges, order=None):
    g = ColoredGraph(black=list(blacks), red=list(reds), edges=list(edges))
    return Instance(graph=g, black_order=tuple(order or blacks))


def test_oracle_accepts_k22():
    i = inst(["b1", "b2"], ["r1", "r2"],
             [(b, r) for b in ("b1", "b2") for r in ("r1", "r2")])
    be = oracle_b2befo(i)
    assert be is not None
    assert verify_book(i, be)


def test_oracle_rejects_k33():
    i = inst(["b1", "b2", "b3"], ["r1", "r2", "r3"],
             [(b, r) for b in ("b1", "b2", "b3") for r in ("r1", "r2", "r3")])
    assert oracle_b2befo(i) is None


def test_oracle_depends_on_black_order():
    # a caterpillar spine: b1-r12-b2, b2-r23-b3, each red also pinned by an
    # extra black neighbor; swapping b2 and b3 forces a crossing pattern
    blacks = ["b1", "b2", "b3"]
    reds = ["r12", "r23", "x", "y", "z"]
    edges = [("b1", "r12"), ("b2", "r12"), ("b2", "r23"), ("b3", "r23"),
             ("b1", "x"), ("b2", "x"), ("b2", "y"), ("b3", "y"),
             ("b1", "z"), ("b3", "z")]
    good = inst(blacks, reds, edges, order=("b1", "b2", "b3"))
    assert oracle_b2befo(good) is not None
    bad = inst(blacks, reds, edges, order=("b2", "b1", "b3"))
    # might still be feasible; assert only that both runs terminate with a
    # verified or absent witness
    be = oracle_b2befo(bad)
    if be is not None:
        assert verify_book(bad, be)


def test_oracle_guard_and_override():
    blacks = ["b"]
    reds = [f"r{i}" for i in range(10)]
    i = inst(blacks, reds, [("b", r) for r in reds])
    with pytest.raises(GuardError):
        oracle_b2befo(i)
    os.environ["QP2L_GUARD_OVERRIDE"] = "1"
    try:
        assert oracle_b2befo(i) is not None
    finally:
        del os.environ["QP2L_GUARD_OVERRIDE"]


def brute_force_b2befo(i):
    """Literal definition: try every red order and two-page assignment."""
    g = i.graph
    reds = sorted(g.red_vertices())
    m = len(i.black_order)
    bpos = {b: k for k, b in enumerate(i.black_order)}
    es = sorted(g.edges)
    for perm in itertools.permutations(reds):
        pos = dict(bpos)
        pos.update({r: m + k for k, r in enumerate(perm)})
        conflict = []
        for a in range(len(es)):
            for b in range(a + 1, len(es)):
                (u1, v1), (u2, v2) = es[a], es[b]
                if {u1, v1} & {u2, v2}:
                    continue
                p1, q1 = sorted((pos[u1], pos[v1]))
                p2, q2 = sorted((pos[u2], pos[v2]))
                if (p1 < p2 < q1) != (p1 < q2 < q1):
                    conflict.append((a, b))
        color = {}
        ok = True
        for a in range(len(es)):
            if a in color:
                continue
            color[a] = 0
            stack = [a]
            while stack and ok:
                x = stack.pop()
                for (u, v) in conflict:
                    if x in (u, v):
                        y = v if x == u else u
                        if y not in color:
                            color[y] = 1 - color[x]
                            stack.append(y)
                        elif color[y] == color[x]:
                            ok = False
                            break
            if not ok:
                break
        if ok:
            return True
    return False


@settings(max_examples=120, deadline=None)
@given(st.integers(2, 3), st.integers(2, 3), st.data())
def test_oracle_matches_literal_definition(m, p, data):
    blacks = [f"b{i}" for i in range(m)]
    reds = [f"r{i}" for i in range(p)]
    pool = [(b, r) for b in blacks for r in reds]
    chosen = data.draw(st.lists(st.sampled_from(pool), min_size=m + p - 1,
                                unique=True))
    g = ColoredGraph(black=blacks, red=reds, edges=chosen)
    i = Instance(graph=g, black_order=tuple(blacks))
    be = oracle_b2befo(i)
    assert (be is not None) == brute_force_b2befo(i)
    if be is not None:
        assert verify_book(i, be)


def test_saturator_on_planar_cycle_union():
    # C4 with one chordless attachment stays planar under any saturator
    g = ColoredGraph(black=["b1", "b2"], red=["r1", "r2"],
                     edges=[("b1", "r1"), ("b1", "r2"),
                            ("b2", "r1"), ("b2", "r2")])
    cyc = oracle_saturator(g)
    assert cyc is not None
    es = saturator_edges(g, cyc)
    assert len(es) == 4
    # the cycle alternates color runs: blacks first, then reds
    assert [v[0] for v in cyc] == ["b", "b", "r", "r"]


def test_saturator_rejects_k33():
    g = ColoredGraph(black=["b1", "b2", "b3"], red=["r1", "r2", "r3"],
                     edges=[(b, r) for b in ("b1", "b2", "b3")
                            for r in ("r1", "r2", "r3")])
    assert oracle_saturator(g) is None
    assert count_saturators(g) == 0


def test_count_saturators_on_k22():
    g = ColoredGraph(black=["b1", "b2"], red=["r1", "r2"],
                     edges=[("b1", "r1"), ("b1", "r2"),
                            ("b2", "r1"), ("b2", "r2")])
    # two edge sets: the red run closes through either diagonal pairing
    assert count_saturators(g) == 2


def test_count_saturators_counts_edge_sets_not_traversals():
    # a path b1-r1 with extra isolated-ish star: small sanity count
    g = ColoredGraph(black=["b1", "b2"], red=["r1", "r2", "r3"],
                     edges=[("b1", "r1"), ("b1", "r2"), ("b1", "r3"),
                            ("b2", "r1"), ("b2", "r2"), ("b2", "r3")])
    # choose the middle red (3 ways) and which end red meets which black
    # (2 ways); reflections are identified, traversal direction is not a
    # second factor because the edge set already encodes it
    assert count_saturators(g) == 6


def test_saturator_guard():
    g = ColoredGraph(black=[f"b{i}" for i in range(8)],
                     red=[f"r{i}" for i in range(7)],
                     edges=[(f"b{i}", f"r{i}") for i in range(7)])
    with pytest.raises(GuardError):
        oracle_saturator(g)
