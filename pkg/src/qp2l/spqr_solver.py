"""The full decision-and-construction pipeline for fixed-black-order
two-level quasi-planarity.

``solve`` normalizes the instance, adds the black path, rejects nonplanar
saturations, splits the result into augmented path components, runs the
SPQR-tree solver on each nontrivial component, and merges the per-component
books back into a book embedding of the original instance. ``None`` means
no two-page book embedding with the prescribed black spine order exists.
"""

from __future__ import annotations

import sys
import threading
from types import SimpleNamespace

from .characterize import book_from_good
from .graph_core import (RED, _tiny_book, black_saturation, normalize,
                         reinsert)
from .decompose import merge_solutions, rb_augmented_components
from .planar_embed import NonPlanarWitness, test_planarity
from .spqr.solve import construct_neat, solve_component


def _component_book(comp_inst, stats=None):
    blacks = comp_inst.black_order
    reds = comp_inst.graph.red_vertices()
    if len(blacks) <= 2 or len(reds) <= 2:
        return _tiny_book(comp_inst)
    n = len(comp_inst.graph.vertices)
    sol = _in_big_stack(solve_component, comp_inst, n)
    if sol is None:
        return None
    if stats is not None:
        kinds = stats.setdefault("spqr_nodes", {})
        sizes = stats.setdefault("admissible_sizes", [])
        for node in sol.tree.nodes:
            kinds[node.kind] = kinds.get(node.kind, 0) + 1
            if node.index != sol.tree.root:
                sizes.append(len(node.admissible))
    emb, cert = _in_big_stack(construct_neat, sol, n)
    return book_from_good(sol.hshim, emb, cert)


def _in_big_stack(fn, arg, n):
    """Run fn(arg) on a thread with a large stack when the input is deep
    enough for the recursive construction pass to matter."""
    if n <= 1500:
        return fn(arg)
    box = {}

    def work():
        try:
            box["val"] = fn(arg)
        except BaseException as exc:  # noqa: BLE001 - reraised below
            box["err"] = exc

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 4 * n + 1000))
    threading.stack_size(512 * 1024 * 1024)
    t = threading.Thread(target=work)
    t.start()
    t.join()
    sys.setrecursionlimit(old_limit)
    if "err" in box:
        raise box["err"]
    return box["val"]


def solve(inst, stats=None):
    """A two-page book embedding of ``inst`` with its black order on the
    spine, or None when there is none. ``stats``, when given, collects
    component and tree counters for reporting."""
    inst, plan = normalize(inst)
    if plan.trivial_answer is not None:
        return reinsert(plan.trivial_answer, plan)
    h = black_saturation(inst)
    if isinstance(test_planarity(h.graph), NonPlanarWitness):
        if stats is not None:
            stats["reason"] = "nonplanar saturation"
        return None
    comps = rb_augmented_components(h)
    if stats is not None:
        stats["components"] = len(comps)
    books = []
    for comp in comps:
        be = _component_book(comp.instance, stats)
        if be is None:
            return None
        books.append(be)
    return reinsert(merge_solutions(comps, books), plan)
