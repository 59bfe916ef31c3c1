"""Colored graphs, problem instances, black saturation and normalization.

Vertex ids are opaque strings. Edges are stored as sorted 2-tuples so that
``edge(u, v) == edge(v, u)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field


BLACK = "black"
RED = "red"


class InputError(ValueError):
    """Raised for malformed or contract-violating input."""


def edge(u, v):
    """Canonical (sorted) representation of an undirected edge."""
    if u == v:
        raise InputError(f"self-loop at {u!r}")
    return (u, v) if u < v else (v, u)


class ColoredGraph:
    """Simple undirected graph whose vertices are colored black or red.

    Edges join different colors, except that black-black edges are allowed
    (they arise from saturation and from skeleton machinery). Red-red edges
    are always rejected.
    """

    __slots__ = ("vertices", "color", "edges", "adj")

    def __init__(self, black=(), red=(), edges=()):
        self.color = {}
        for v in black:
            if v in self.color:
                raise InputError(f"duplicate vertex id {v!r}")
            self.color[v] = BLACK
        for v in red:
            if v in self.color:
                raise InputError(f"duplicate vertex id {v!r}")
            self.color[v] = RED
        self.vertices = tuple(self.color)
        self.edges = set()
        self.adj = {v: [] for v in self.vertices}
        for u, v in edges:
            self.add_edge(u, v)

    def add_edge(self, u, v):
        if u not in self.color or v not in self.color:
            raise InputError(f"edge ({u!r},{v!r}) references unknown vertex")
        if self.color[u] == RED and self.color[v] == RED:
            raise InputError(f"red-red edge ({u!r},{v!r})")
        e = edge(u, v)
        if e in self.edges:
            raise InputError(f"parallel edge ({u!r},{v!r})")
        self.edges.add(e)
        self.adj[u].append(v)
        self.adj[v].append(u)

    def black_vertices(self):
        return [v for v in self.vertices if self.color[v] == BLACK]

    def red_vertices(self):
        return [v for v in self.vertices if self.color[v] == RED]

    def degree(self, v):
        return len(self.adj[v])

    def copy(self):
        g = ColoredGraph()
        g.color = dict(self.color)
        g.vertices = tuple(self.vertices)
        g.edges = set(self.edges)
        g.adj = {v: list(nbrs) for v, nbrs in self.adj.items()}
        return g

    def subgraph(self, vertex_subset):
        keep = set(vertex_subset)
        g = ColoredGraph(
            black=[v for v in self.vertices if v in keep and self.color[v] == BLACK],
            red=[v for v in self.vertices if v in keep and self.color[v] == RED],
        )
        for u, v in self.edges:
            if u in keep and v in keep:
                g.add_edge(u, v)
        return g

    def __contains__(self, v):
        return v in self.color

    def __repr__(self):
        return (f"ColoredGraph({len(self.black_vertices())} black, "
                f"{len(self.red_vertices())} red, {len(self.edges)} edges)")


@dataclass(frozen=True)
class Instance:
    """A bipartite colored graph plus the prescribed order of its black
    vertices."""

    graph: ColoredGraph
    black_order: tuple

    def __post_init__(self):
        blacks = self.graph.black_vertices()
        if sorted(self.black_order) != sorted(blacks) or \
                len(set(self.black_order)) != len(self.black_order):
            raise InputError("black order is not a permutation of the black vertices")
        for u, v in self.graph.edges:
            if self.graph.color[u] == self.graph.color[v]:
                raise InputError(f"same-color edge ({u!r},{v!r}) in instance")

    @property
    def index(self):
        """Dense integer index per vertex id (blacks first, in order)."""
        ids = list(self.black_order) + sorted(self.graph.red_vertices())
        return {v: i for i, v in enumerate(ids)}


@dataclass(frozen=True)
class SaturatedGraph:
    """The instance graph plus the path through the black vertices in the
    prescribed order."""

    graph: ColoredGraph
    black_path: tuple
    origin: Instance

    @property
    def black_order(self):
        return self.origin.black_order


@dataclass
class ReinsertionPlan:
    """What normalization removed, and how to put it back into a solution."""

    removed_trivials: dict = field(default_factory=dict)  # black id -> (kept red, [removed reds])
    isolated_reds: list = field(default_factory=list)
    isolated_blacks: list = field(default_factory=list)  # (position in pi_b, id)
    original_black_order: tuple = ()
    trivial_answer: object = None  # BookEmbedding when the tiny-class shortcut fires


def parse_instance(text):
    """Decode the JSON instance format:
    {"black": [...], "red": [...], "edges": [[u,v],...], "order": [...]}.
    """
    import json

    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError("instance must be a JSON object")
    for key in ("black", "red", "edges", "order"):
        if key not in data:
            raise InputError(f"missing key {key!r}")
    black, red = data["black"], data["red"]
    if not all(isinstance(v, str) for v in black + red):
        raise InputError("vertex ids must be strings")
    g = ColoredGraph(black=black, red=red)
    for e in data["edges"]:
        if not (isinstance(e, list) and len(e) == 2):
            raise InputError(f"bad edge record {e!r}")
        u, v = e
        if g.color.get(u) == g.color.get(v):
            raise InputError(f"same-color edge ({u!r},{v!r})")
        g.add_edge(u, v)
    return Instance(graph=g, black_order=tuple(data["order"]))


def instance_to_json(inst):
    import json

    return json.dumps({
        "black": list(inst.black_order),
        "red": sorted(inst.graph.red_vertices()),
        "edges": sorted([list(e) for e in inst.graph.edges]),
        "order": list(inst.black_order),
    })


def black_saturation(inst):
    """Add the path b_1 .. b_m through the black vertices."""
    g = inst.graph.copy()
    path = []
    order = inst.black_order
    for a, b in zip(order, order[1:]):
        if edge(a, b) in g.edges:
            raise InputError(f"black-black edge ({a!r},{b!r}) already present")
        g.add_edge(a, b)
        path.append(edge(a, b))
    return SaturatedGraph(graph=g, black_path=tuple(path), origin=inst)


def _tiny_book(inst):
    """Direct construction when there are at most 2 black or at most 2 red
    vertices.

    Edges sharing an endpoint never cross, so with <=2 blacks a page per
    black works (reds in any order), and with <=2 reds a page per red works.
    """
    from .transforms import BookEmbedding

    g = inst.graph
    blacks = list(inst.black_order)
    reds = sorted(g.red_vertices())
    spine = blacks + list(reversed(reds))
    pages = {}
    if len(blacks) <= 2:
        side = {b: i + 1 for i, b in enumerate(blacks)}
        for u, v in g.edges:
            b = u if g.color[u] == BLACK else v
            pages[edge(u, v)] = side[b]
    else:
        side = {r: i + 1 for i, r in enumerate(reds)}
        for u, v in g.edges:
            r = u if g.color[u] == RED else v
            pages[edge(u, v)] = side[r]
    colors = dict(g.color)
    return BookEmbedding(spine=tuple(spine), pages=pages, colors=colors)


def normalize(inst):
    """Apply the standing assumptions: drop isolated vertices, shortcut the
    tiny classes, and keep at most one degree-1 red neighbor per black.

    Returns (normalized instance, reinsertion plan).
    """
    g = inst.graph
    plan = ReinsertionPlan(original_black_order=inst.black_order)

    isolated = [v for v in g.vertices if g.degree(v) == 0]
    if isolated:
        iso = set(isolated)
        for pos, b in enumerate(inst.black_order):
            if b in iso:
                plan.isolated_blacks.append((pos, b))
        plan.isolated_reds = sorted(v for v in iso if g.color[v] == RED)
        g = g.subgraph([v for v in g.vertices if v not in iso])
        inst = Instance(graph=g, black_order=tuple(
            b for b in inst.black_order if b not in iso))

    blacks = g.black_vertices()
    reds = g.red_vertices()
    if len(blacks) <= 2 or len(reds) <= 2:
        plan.trivial_answer = _tiny_book(inst)
        return inst, plan

    removed = set()
    for b in inst.black_order:
        leaves = sorted(r for r in g.adj[b]
                        if g.color[r] == RED and g.degree(r) == 1)
        if len(leaves) > 1:
            plan.removed_trivials[b] = (leaves[0], leaves[1:])
            removed.update(leaves[1:])
    if removed:
        g = g.subgraph([v for v in g.vertices if v not in removed])
        inst = Instance(graph=g, black_order=inst.black_order)
    return inst, plan


def reinsert(be, plan):
    """Undo the normalization on a book embedding of the normalized instance."""
    from .transforms import BookEmbedding

    pages = dict(be.pages)
    colors = dict(be.colors)

    # Canonicalize the circular spine: black run first, in forward order.
    kept_order = [b for b in plan.original_black_order
                  if b not in {x for _, x in plan.isolated_blacks}]
    blacks = [v for v in be.spine if colors.get(v) == BLACK]
    reds = [v for v in be.spine if colors.get(v) == RED]
    n = len(be.spine)
    spine = list(be.spine)
    if blacks and kept_order:
        start = None
        for i, v in enumerate(spine):
            if colors[v] == BLACK and colors[spine[i - 1]] != BLACK:
                start = i
                break
        if start is None:  # all black
            start = spine.index(kept_order[0])
        spine = spine[start:] + spine[:start]
        if spine[:len(blacks)] != kept_order:
            spine = list(reversed(spine))
            i = next(i for i, v in enumerate(spine)
                     if colors[v] == BLACK and colors[spine[i - 1]] != BLACK) \
                if len(blacks) < n else spine.index(kept_order[0])
            spine = spine[i:] + spine[:i]
        if spine[:len(blacks)] != kept_order:
            raise InputError("spine black run does not match the prescribed order")
        blacks = spine[:len(blacks)]
        reds = spine[len(blacks):]

    for b, (kept, gone) in plan.removed_trivials.items():
        if kept not in reds:
            raise InputError(f"kept leaf {kept!r} missing from spine")
        i = reds.index(kept)
        for r in reversed(gone):
            reds.insert(i + 1, r)
            pages[edge(b, r)] = pages[edge(b, kept)]
            colors[r] = RED

    # Isolated vertices have no edges, so any legal slot works: reds at the
    # end of the red run, blacks at their prescribed positions.
    reds.extend(plan.isolated_reds)
    for r in plan.isolated_reds:
        colors[r] = RED
    for pos, b in plan.isolated_blacks:
        blacks.insert(pos, b)
        colors[b] = BLACK
    if plan.original_black_order and blacks != list(plan.original_black_order):
        raise InputError("reinserted black run does not match the prescribed order")
    return BookEmbedding(spine=tuple(blacks + reds), pages=pages, colors=colors)
