"""Hardness machinery: the rigid frame gadget, the reduction from
odd-leveled planarity to saturator existence, and leveling extraction.

The frame is a subdivision of a triconnected planar quadrangulation-like
graph built from two nested cycles; it admits exactly one saturating cycle,
whose chords through the large inner face form a non-crossing matching
(v_i, x_i). Gluing a leveled-planarity instance onto v_1 and v_k forces its
vertices into those chords, one level per chord.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field

from .graph_core import BLACK, RED, ColoredGraph, InputError, edge
from .oracle import GuardError


@dataclass
class LeveledInstance:
    vertices: list
    edges: list
    k: int
    v1: str
    vk: str

    def __post_init__(self):
        if self.k % 2 == 0 or self.k < 1:
            raise InputError("level count must be odd and positive")
        if self.v1 not in self.vertices or self.vk not in self.vertices:
            raise InputError("designated vertices missing")
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges:
            if u not in adj or v not in adj or u == v:
                raise InputError(f"bad edge ({u!r},{v!r})")
            adj[u].add(v)
            adj[v].add(u)
        self.adj = adj
        part = _two_color(adj, self.vertices[0])
        if part is None:
            raise InputError("graph is not bipartite")
        if len(part) != len(self.vertices):
            raise InputError("graph is disconnected")
        if part[self.v1] != part[self.vk]:
            raise InputError("designated vertices in different parts")
        self.part = part


@dataclass
class LeveledDrawing:
    gamma: dict            # vertex -> level in 1..k
    orders: list           # per level, the vertex list in order

    def xi(self, i):
        return {v: j + 1 for j, v in enumerate(self.orders[i - 1])}


def _two_color(adj, start):
    color = {start: 0}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in color:
                color[y] = 1 - color[x]
                stack.append(y)
            elif color[y] == color[x]:
                return None
    return color


def frame(k):
    """The rigid gadget on 6k+6 vertices: nested inner/outer cycles tied by
    spokes, degree-2 subdivision vertices u_i / y_i, and outer rungs.

    The result is bipartite and planar with exactly one face of length
    2k-2 (the inner cycle) and quadrilateral faces everywhere else, which
    pins its planar embedding up to a flip.
    """
    if k < 3 or k % 2 == 0:
        raise InputError("frame parameter must be odd and at least 3")
    half = (k + 1) // 2

    def v(i):
        return f"v{i}"

    def x(i):
        if i == 1:
            return v(1)
        if i == k:
            return v(k)
        return f"x{i}"

    def w(i):
        return f"w{i}"

    def z(i):
        return f"z{i}"

    edges = []
    inner = [v(i) for i in range(1, k + 1)] + [x(i) for i in range(k - 1, 1, -1)]
    edges += [(inner[i - 1], inner[i]) for i in range(len(inner))]
    outer = [w(i) for i in range(-1, k + 3)] + [z(i) for i in range(k + 1, -1, -1)]
    edges += [(outer[i - 1], outer[i]) for i in range(len(outer))]
    for i in range(0, half):
        edges += [(w(i), v(i + 1)), (z(i), x(i + 1))]
    for i in range(half, k + 1):
        edges += [(v(i), w(i + 1)), (x(i), z(i + 1))]
    for i in range(1, half):
        edges += [(w(i - 1), f"u{i}"), (f"u{i}", v(i + 1)),
                  (z(i - 1), f"y{i}"), (f"y{i}", x(i + 1))]
    for i in range(half + 1, k + 1):
        edges += [(w(i + 1), f"u{i}"), (f"u{i}", v(i - 1)),
                  (z(i + 1), f"y{i}"), (f"y{i}", x(i - 1))]
    edges += [(w(-1), "u0"), ("u0", v(1)),
              (w(k + 2), f"u{k + 1}"), (f"u{k + 1}", v(k)),
              (w(half - 1), f"u{half}"), (f"u{half}", w(half + 1)),
              (z(half - 1), f"y{half}"), (f"y{half}", z(half + 1))]
    edges += [(z(i), w(i + 1)) for i in range(0, k + 1)]

    adj = {}
    for a, b in edges:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    if len(adj) != 6 * k + 6:
        raise InputError("gadget vertex count is off")
    part = _two_color(adj, v(1))
    if part is None or len(part) != len(adj):
        raise InputError("gadget is not connected bipartite")
    g = ColoredGraph(black=sorted(a for a in adj if part[a] == 0),
                     red=sorted(a for a in adj if part[a] == 1))
    for a, b in edges:
        g.add_edge(a, b)
    _check_face_profile(g, k)
    return g


def _check_face_profile(g, k):
    from .planar_embed import NonPlanarWitness, test_planarity

    e = test_planarity(g)
    if isinstance(e, NonPlanarWitness):
        raise InputError("gadget is not planar")
    lengths = sorted(len(f) for f in e.faces)
    want = [4] * (len(e.faces) - 1) + [2 * k - 2]
    if lengths != sorted(want):
        raise InputError(f"gadget face profile off: {lengths}")


def matching_edges(k):
    """The inner-face chords of the unique saturating cycle."""
    return [edge(f"v{i}", f"x{i}") for i in range(2, k)]


def reduce_olp(li):
    """Glue the leveled instance onto the frame by identifying its two
    designated vertices with v_1 and v_k of the gadget."""
    g = frame(li.k)
    rename = {}
    for a in li.vertices:
        if a == li.v1:
            rename[a] = "v1"
        elif a == li.vk:
            rename[a] = f"v{li.k}"
        else:
            rename[a] = f"h_{a}"
            if rename[a] in g:
                raise InputError(f"vertex name clash for {a!r}")
    base = li.part[li.v1]
    black = [rename[a] for a in li.vertices
             if li.part[a] == base and rename[a] not in g]
    red = [rename[a] for a in li.vertices
           if li.part[a] != base and rename[a] not in g]
    out = ColoredGraph(black=sorted(g.black_vertices()) + sorted(black),
                       red=sorted(g.red_vertices()) + sorted(red))
    for a, b in g.edges:
        out.add_edge(a, b)
    for a, b in li.edges:
        out.add_edge(rename[a], rename[b])
    return out


def extract_leveling(g, li, sat):
    """Read a leveling off a saturating cycle of the reduced graph.

    The cycle must contain, for each inner chord slot i, a subpath between
    v_i and x_i whose internal vertices all come from the glued instance;
    those internal vertices get level i, ordered from the v_i side.
    """
    from .oracle import saturator_edges

    sat_edges = set(saturator_edges(g, sat))
    if any(u not in g or v not in g for u, v in sat_edges):
        raise InputError("cycle references unknown vertices")
    if len(sat) != len(g.vertices) or len(set(sat)) != len(sat):
        raise InputError("not a spanning cycle")

    k = li.k
    fr = set(frame(k).vertices)
    n = len(sat)
    gamma = {li.v1: 1, li.vk: k}
    orders = [[] for _ in range(k)]
    orders[0] = [li.v1]
    orders[k - 1] = [li.vk]
    back = {}
    for a in li.vertices:
        if a == li.v1:
            back["v1"] = a
        elif a == li.vk:
            back[f"v{k}"] = a
        else:
            back[f"h_{a}"] = a

    i = 0
    while i < n:
        if sat[i] in fr:
            i += 1
            continue
        j = i
        seg = []
        while j < n and sat[j] not in fr:
            seg.append(sat[j])
            j += 1
        a, b = sat[i - 1], sat[j % n]
        pair = {a, b}
        lvl = None
        for t in range(2, k):
            if pair == {f"v{t}", f"x{t}"}:
                lvl = t
                break
        if lvl is None:
            raise InputError(f"glued vertices between {a!r} and {b!r}")
        if a != f"v{lvl}":
            seg.reverse()
        for s in seg:
            gamma[back[s]] = lvl
        orders[lvl - 1] = [back[s] for s in seg]
        i = j
    if set(gamma) != set(li.vertices):
        raise InputError("cycle does not place every glued vertex")
    return LeveledDrawing(gamma=gamma, orders=orders)


def verify_leveling(li, ld):
    """The drawing conditions: levels in range with the designated vertices
    alone on the end levels, edges spanning consecutive levels, complete
    per-level orders, and no inversion between independent edges joining the
    same pair of adjacent levels."""
    k = li.k
    if set(ld.gamma) != set(li.vertices):
        return False
    if any(not 1 <= ld.gamma[a] <= k for a in li.vertices):
        return False
    if [a for a in li.vertices if ld.gamma[a] == 1] != [li.v1]:
        return False
    if [a for a in li.vertices if ld.gamma[a] == k] != [li.vk]:
        return False
    for u, v in li.edges:
        if abs(ld.gamma[u] - ld.gamma[v]) != 1:
            return False
    if len(ld.orders) != k:
        return False
    for i in range(1, k + 1):
        level = {a for a in li.vertices if ld.gamma[a] == i}
        if set(ld.orders[i - 1]) != level or len(ld.orders[i - 1]) != len(level):
            return False
    for a in range(1, k):
        xi_a, xi_b = ld.xi(a), ld.xi(a + 1)
        span = []
        for u, v in li.edges:
            if ld.gamma[u] == a + 1:
                u, v = v, u
            if ld.gamma[u] == a and ld.gamma[v] == a + 1:
                span.append((u, v))
        for (u, v), (p, q) in itertools.combinations(span, 2):
            if u == p or v == q:
                continue
            if (xi_a[u] - xi_a[p]) * (xi_b[v] - xi_b[q]) < 0:
                return False
    return True


def decide_olp(li):
    """Brute force over level assignments and per-level orders."""
    if len(li.vertices) > 10 and not os.environ.get("QP2L_GUARD_OVERRIDE"):
        raise GuardError(
            f"{len(li.vertices)} vertices exceeds leveling guard (10)")
    k = li.k
    rest = [a for a in li.vertices if a not in (li.v1, li.vk)]
    base = {li.v1: 1, li.vk: k}

    def assign(idx, gamma):
        if idx == len(rest):
            return orders_exist(gamma)
        a = rest[idx]
        for lvl in range(2, k):
            ok = all(abs(lvl - gamma[b]) == 1
                     for b in li.adj[a] if b in gamma)
            if ok:
                gamma[a] = lvl
                if assign(idx + 1, gamma):
                    return True
                del gamma[a]
        return False

    def orders_exist(gamma):
        if any(abs(gamma[u] - gamma[v]) != 1 for u, v in li.edges):
            return False
        levels = [[a for a in li.vertices if gamma[a] == i]
                  for i in range(1, k + 1)]
        if len(levels[0]) != 1 or len(levels[-1]) != 1:
            return False

        def fill(i, orders):
            if i == k:
                return True
            for perm in itertools.permutations(levels[i]):
                orders.append(list(perm))
                ld = LeveledDrawing(gamma=dict(gamma),
                                    orders=orders + [[]] * (k - i - 1))
                if _no_inversion(li, ld, i) and fill(i + 1, orders):
                    return True
                orders.pop()
            return False

        return fill(1, [levels[0]])

    def _no_inversion(li2, ld, i):
        # only the freshly fixed pair (i, i+1) needs checking
        xi_a, xi_b = ld.xi(i), ld.xi(i + 1)
        span = []
        for u, v in li2.edges:
            if ld.gamma[u] == i + 1:
                u, v = v, u
            if ld.gamma[u] == i and ld.gamma[v] == i + 1:
                span.append((u, v))
        for (u, v), (p, q) in itertools.combinations(span, 2):
            if u == p or v == q:
                continue
            if (xi_a[u] - xi_a[p]) * (xi_b[v] - xi_b[q]) < 0:
                return False
        return True

    return assign(0, dict(base))
