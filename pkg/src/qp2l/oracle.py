"""Brute-force ground truth.

Two independent deciders: a red-order search for the fixed-black-order
problem (with pages decided by conflict-graph bipartiteness) and a
Hamiltonian-cycle search for the unconstrained problem (a cycle visiting
each color class consecutively whose union with the graph stays planar).
Both are exact within their size guards.
"""

from __future__ import annotations

import os

import networkx as nx

from .graph_core import BLACK, RED, edge
from .transforms import BookEmbedding


class GuardError(RuntimeError):
    """Instance exceeds the brute-force size guard."""


def _guard(condition, msg):
    if not condition and not os.environ.get("QP2L_GUARD_OVERRIDE"):
        raise GuardError(msg)


class ConflictGraph:
    """Edges of the instance, with a conflict for every pair whose four
    endpoints alternate around the spine."""

    def __init__(self, edges):
        self.nodes = list(edges)
        self.conflicts = []

    def add_conflict(self, e, f):
        self.conflicts.append((e, f))

    def bipartition(self):
        """2-coloring of the conflict graph, or None."""
        adj = {e: [] for e in self.nodes}
        for e, f in self.conflicts:
            adj[e].append(f)
            adj[f].append(e)
        color = {}
        for s in self.nodes:
            if s in color:
                continue
            color[s] = 1
            stack = [s]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in color:
                        color[y] = 3 - color[x]
                        stack.append(y)
                    elif color[y] == color[x]:
                        return None
        return color


class _ParityDSU:
    """Union-find with parity and rollback (union by size, no compression)."""

    def __init__(self, items):
        self.parent = {x: x for x in items}
        self.par = {x: 0 for x in items}
        self.size = {x: 1 for x in items}
        self.trail = []

    def find(self, x):
        p = 0
        while self.parent[x] != x:
            p ^= self.par[x]
            x = self.parent[x]
        return x, p

    def union_diff(self, a, b):
        """Constrain a and b to opposite sides. False if contradictory."""
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            return pa != pb
        if self.size[ra] < self.size[rb]:
            ra, rb, pa, pb = rb, ra, pb, pa
        self.parent[rb] = ra
        self.par[rb] = pa ^ pb ^ 1
        self.size[ra] += self.size[rb]
        self.trail.append(rb)
        return True

    def mark(self):
        return len(self.trail)

    def rollback(self, mark):
        while len(self.trail) > mark:
            rb = self.trail.pop()
            ra = self.parent[rb]
            self.size[ra] -= self.size[rb]
            self.parent[rb] = rb
            self.par[rb] = 0


def _alternate(p1, q1, p2, q2):
    """Do chords (p1,q1), (p2,q2) with distinct circle positions alternate?"""
    lo, hi = (p1, q1) if p1 < q1 else (q1, p1)
    return ((lo < p2 < hi) + (lo < q2 < hi)) == 1


def oracle_b2befo(inst):
    """Search all red spine orders; pages via conflict bipartiteness.

    Returns a verified book embedding or None. Exponential in the number of
    red vertices; guarded at 9 (QP2L_GUARD_OVERRIDE lifts the guard).
    """
    g = inst.graph
    reds = sorted(g.red_vertices())
    _guard(len(reds) <= 9, f"{len(reds)} red vertices exceeds oracle guard (9)")
    m = len(inst.black_order)
    bpos = {b: i for i, b in enumerate(inst.black_order)}
    # incident edges per red, as (black position, canonical edge)
    red_edges = {r: sorted((bpos[b], edge(b, r)) for b in g.adj[r]) for r in reds}
    dsu = _ParityDSU(list(g.edges))

    placed = []            # reds in spine order
    placed_pos = {}        # red -> spine position (m, m+1, ...)

    def conflicts_ok(r):
        pr = placed_pos[r]
        for pb, e in red_edges[r]:
            for r2 in placed[:-1]:
                pr2 = placed_pos[r2]
                for pb2, e2 in red_edges[r2]:
                    if pb2 == pb:
                        continue
                    if _alternate(pb, pr, pb2, pr2):
                        if not dsu.union_diff(e, e2):
                            return False
        return True

    def search(remaining):
        if not remaining:
            return True
        for r in sorted(remaining):
            placed.append(r)
            placed_pos[r] = m + len(placed) - 1
            mk = dsu.mark()
            if conflicts_ok(r) and search(remaining - {r}):
                return True
            dsu.rollback(mk)
            del placed_pos[r]
            placed.pop()
        return False

    if not search(frozenset(reds)):
        return None
    pages = {}
    for e in g.edges:
        root, parity = dsu.find(e)
        pages[e] = 1 + parity
    spine = tuple(inst.black_order) + tuple(placed)
    return BookEmbedding(spine=spine, pages=pages, colors=dict(g.color))


def _cycle_edges(blacks, reds):
    cyc = list(blacks) + list(reds)
    return [edge(cyc[i - 1], cyc[i]) for i in range(len(cyc))]


def _saturator_search(g, count_all=False, limit=None, deadline=None):
    """Enumerate Hamiltonian cycles with each color class consecutive such
    that the union with g stays planar. Rotation is absorbed by the run
    representation; reflection is killed by an endpoint ordering rule."""
    import time

    blacks = sorted(g.black_vertices())
    reds = sorted(g.red_vertices())
    n = len(blacks) + len(reds)
    if n < 3 or not blacks or not reds:
        return [] if count_all else None

    work = nx.Graph()
    work.add_nodes_from(g.vertices)
    work.add_edges_from(g.edges)

    found = []

    def with_edge(u, v):
        """Add (u,v) unless already present; return a token for undo, or
        None when the union goes nonplanar."""
        fresh = not work.has_edge(u, v)
        if fresh:
            work.add_edge(u, v)
        if not nx.check_planarity(work, counterexample=False)[0]:
            if fresh:
                work.remove_edge(u, v)
            return None
        return (u, v) if fresh else ()

    def drop(token):
        if token:
            work.remove_edge(*token)

    blacks_order = []
    rorder = []

    def extend_reds(remaining):
        if deadline is not None and time.monotonic() > deadline:
            raise TimeoutError("saturator search deadline exceeded")
        if not remaining:
            tok = with_edge(rorder[-1], blacks_order[0])
            if tok is None:
                return False
            found.append(tuple(blacks_order) + tuple(rorder))
            drop(tok)
            return not count_all
        for r in sorted(remaining):
            prev = rorder[-1] if rorder else blacks_order[-1]
            tok = with_edge(prev, r)
            if tok is None:
                continue
            rorder.append(r)
            done = extend_reds(remaining - {r})
            rorder.pop()
            drop(tok)
            if done:
                return True
        return False

    def extend_blacks(remaining):
        if deadline is not None and time.monotonic() > deadline:
            raise TimeoutError("saturator search deadline exceeded")
        if not remaining:
            if len(blacks_order) >= 2 and blacks_order[0] > blacks_order[-1]:
                return False  # reflection: keep one representative per cycle
            return extend_reds(frozenset(reds))
        for b in sorted(remaining):
            tok = with_edge(blacks_order[-1], b)
            if tok is None:
                continue
            blacks_order.append(b)
            done = extend_blacks(remaining - {b})
            blacks_order.pop()
            drop(tok)
            if done:
                return True
        return False

    # A cycle with both classes consecutive is the pair (black run, red run);
    # cycle rotation never changes the runs, so only reflection needs care.
    for first in blacks:
        blacks_order[:] = [first]
        if extend_blacks(frozenset(blacks) - {first}):
            break
        if limit is not None and len(found) >= limit:
            break

    if count_all:
        if len(blacks) == 1 and len(reds) >= 2:
            # with a single black, reflection reverses the red run instead
            found[:] = [c for c in found if c[1] <= c[-1]]
        return found
    return found[0] if found else None


def oracle_saturator(g):
    """First saturating cycle of g, as a vertex sequence (black run then red
    run), or None."""
    _guard(len(g.vertices) <= 14,
           f"{len(g.vertices)} vertices exceeds saturator guard (14)")
    return _saturator_search(g, count_all=False)


def count_saturators(g, deadline=None):
    """Exact number of distinct saturating cycles (as edge sets)."""
    _guard(len(g.vertices) <= 14,
           f"{len(g.vertices)} vertices exceeds saturator guard (14)")
    cycles = _saturator_search(g, count_all=True, deadline=deadline)
    distinct = {frozenset(_cycle_edges(c[:len(g.black_vertices())],
                                       c[len(g.black_vertices()):]))
                for c in cycles}
    return len(distinct)


def saturator_edges(g, cycle):
    m = len(g.black_vertices())
    return _cycle_edges(cycle[:m], cycle[m:])
