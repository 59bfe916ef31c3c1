"""Divide and conquer along the block-cut tree of the saturated graph.

With every red vertex attached to a black one and the black path present,
all cut vertices are black and the blocks containing two or more black
vertices line up in a path ordered by the prescribed black order. Pendant
(one black, one red) blocks hang off that path. Each path block, augmented
with the pendant reds assigned to it, is solved independently; the per-block
books are then concatenated into one.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .graph_core import BLACK, RED, ColoredGraph, Instance, InputError, edge
from .transforms import BookEmbedding


@dataclass
class BlockCutTree:
    blocks: list           # vertex frozensets, path blocks first in order
    cut_vertices: set
    path_blocks: list      # indices into blocks, in black-order position
    trivial_blocks: list   # indices of pendant black-red blocks
    attach: dict           # trivial block index -> its black vertex


@dataclass
class Component:
    instance: Instance
    shared_left: object    # cut black shared with the previous component
    shared_right: object   # cut black shared with the next component


def block_cut_tree(h):
    """Blocks of the saturated graph, split into the path of multi-black
    blocks and the pendant one-black-one-red blocks."""
    g = h.graph
    nxg = nx.Graph()
    nxg.add_nodes_from(g.vertices)
    nxg.add_edges_from(g.edges)
    if not nx.is_connected(nxg):
        raise InputError("saturated graph is disconnected")
    blocks = [frozenset(b) for b in nx.biconnected_components(nxg)]
    cuts = set(nx.articulation_points(nxg))
    bad = [v for v in cuts if g.color[v] != BLACK]
    if bad:
        raise InputError(f"red cut vertices {sorted(bad)}")

    pos = {b: i for i, b in enumerate(h.black_order)}
    path_idx = []
    trivial_idx = []
    attach = {}
    for i, blk in enumerate(blocks):
        bs = [v for v in blk if g.color[v] == BLACK]
        rs = [v for v in blk if g.color[v] == RED]
        if len(bs) == 1 and len(rs) == 1:
            trivial_idx.append(i)
            attach[i] = bs[0]
        else:
            path_idx.append(i)
    path_idx.sort(key=lambda i: min(pos[v] for v in blocks[i]
                                    if g.color[v] == BLACK))

    # the multi-black blocks must chain along the black order, overlapping
    # in exactly the shared cut vertex
    prev_hi = None
    for i in path_idx:
        ps = sorted(pos[v] for v in blocks[i] if g.color[v] == BLACK)
        if ps != list(range(ps[0], ps[-1] + 1)):
            raise InputError("block holds a non-contiguous black range")
        if prev_hi is not None and ps[0] != prev_hi:
            raise InputError("blocks do not chain along the black order")
        prev_hi = ps[-1]
    return BlockCutTree(blocks=blocks, cut_vertices=cuts, path_blocks=path_idx,
                        trivial_blocks=trivial_idx, attach=attach)


def rb_augmented_components(h, tree=None):
    """One sub-instance per path block, each augmented with the pendant reds
    hanging off its black vertices. A pendant at a shared cut vertex goes to
    the lower-indexed component."""
    g = h.graph
    tree = tree or block_cut_tree(h)
    pos = {b: i for i, b in enumerate(h.black_order)}
    claimed = set()
    comps = []
    path_edges = set(h.black_path)
    for k, i in enumerate(tree.path_blocks):
        blk = tree.blocks[i]
        blacks = sorted((v for v in blk if g.color[v] == BLACK),
                        key=pos.__getitem__)
        reds = sorted(v for v in blk if g.color[v] == RED)
        pend = []
        for j in tree.trivial_blocks:
            if tree.attach[j] in blk and j not in claimed:
                claimed.add(j)
                pend.extend(v for v in tree.blocks[j] if g.color[v] == RED)
        sub = ColoredGraph(black=blacks, red=sorted(reds + pend))
        for u, v in g.edges:
            if u in sub and v in sub and edge(u, v) not in path_edges:
                sub.add_edge(u, v)
        inst = Instance(graph=sub, black_order=tuple(blacks))
        comps.append(Component(
            instance=inst,
            shared_left=blacks[0] if k > 0 else None,
            shared_right=blacks[-1] if k + 1 < len(tree.path_blocks) else None,
        ))
    return comps


def _aligned_runs(be, order):
    """Rotate/reflect the circular spine so the black run reads exactly as
    the given order; returns the red run that follows it."""
    colors = be.colors
    spine = list(be.spine)
    n = len(spine)
    blacks = [v for v in spine if colors[v] == BLACK]
    if sorted(blacks) != sorted(order):
        raise InputError("component book covers the wrong black vertices")
    for cand in (spine, list(reversed(spine))):
        if len(blacks) == n:
            if order[0] in cand:
                i = cand.index(order[0])
                rot = cand[i:] + cand[:i]
                if rot == list(order):
                    return []
            continue
        i = next(j for j in range(n)
                 if colors[cand[j]] == BLACK and colors[cand[j - 1]] == RED)
        rot = cand[i:] + cand[:i]
        if rot[:len(order)] == list(order):
            return rot[len(order):]
    raise InputError("component book does not respect the black order")


def merge_solutions(components, books):
    """Concatenate per-component books: black runs in component order with
    shared cut blacks written once, red runs in reverse component order.

    Any edge of one component has both endpoints outside (or on the border
    of) the contiguous spine arc of any later component, so no new crossings
    appear and the per-component pages carry over unchanged.
    """
    if len(components) != len(books):
        raise InputError("component/book count mismatch")
    spine_blacks = []
    red_runs = []
    pages = {}
    colors = {}
    for comp, be in zip(components, books):
        order = comp.instance.black_order
        reds = _aligned_runs(be, order)
        start = 1 if comp.shared_left is not None else 0
        spine_blacks.extend(order[start:])
        red_runs.append(reds)
        pages.update(be.pages)
        colors.update({v: comp.instance.graph.color[v]
                       for v in comp.instance.graph.vertices})
    spine = spine_blacks + [r for run in reversed(red_runs) for r in run]
    return BookEmbedding(spine=tuple(spine), pages=pages, colors=colors)


def solve_by_decomposition(inst, component_solver):
    """None if any component is infeasible, else the merged book."""
    from .graph_core import black_saturation

    h = black_saturation(inst)
    comps = rb_augmented_components(h)
    books = []
    for comp in comps:
        be = component_solver(comp.instance)
        if be is None:
            return None
        books.append(be)
    return merge_solutions(comps, books)
