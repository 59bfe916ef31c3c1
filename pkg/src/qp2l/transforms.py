"""The three equivalent output representations and their verifiers.

A two-page book embedding with both color classes consecutive on the spine,
a (2,2)-track layout, and a two-level drawing carry the same information;
the conversions here are lossless and purely combinatorial.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph_core import BLACK, RED, edge


@dataclass
class BookEmbedding:
    spine: tuple
    pages: dict          # canonical edge -> 1 | 2
    colors: dict = field(default_factory=dict)

    def edge_key(self, e):
        u, v = e
        return f"{u}|{v}"

    def to_json(self):
        import json

        return json.dumps({
            "spine": list(self.spine),
            "pages": {self.edge_key(e): p for e, p in sorted(self.pages.items())},
        })


@dataclass
class TrackLayout:
    xi1: tuple           # order of the black class
    xi2: tuple           # order of the red class
    omega: dict          # canonical edge -> 1 | 2

    def to_json(self):
        import json

        return json.dumps({
            "xi1": list(self.xi1),
            "xi2": list(self.xi2),
            "omega": {f"{u}|{v}": w for (u, v), w in sorted(self.omega.items())},
        })


@dataclass
class TwoLevelDrawing:
    x_black: dict        # black vertex -> abscissa (integer rank)
    x_red: dict          # red vertex -> abscissa
    edges: tuple = ()    # canonical edges, each with one endpoint per level

    def to_json(self):
        import json

        return json.dumps({
            "xb": {v: x for v, x in sorted(self.x_black.items())},
            "xr": {v: x for v, x in sorted(self.x_red.items())},
            "edges": sorted([list(e) for e in self.edges]),
        })


def book_from_json(text, colors):
    """Inverse of BookEmbedding.to_json; colors come from the instance."""
    import json

    data = json.loads(text)
    pages = {edge(*k.split("|", 1)): p for k, p in data["pages"].items()}
    return BookEmbedding(spine=tuple(data["spine"]), pages=pages,
                         colors=dict(colors))


def track_from_json(text):
    import json

    data = json.loads(text)
    omega = {edge(*k.split("|", 1)): w for k, w in data["omega"].items()}
    return TrackLayout(xi1=tuple(data["xi1"]), xi2=tuple(data["xi2"]),
                       omega=omega)


def drawing_from_json(text):
    import json

    data = json.loads(text)
    return TwoLevelDrawing(x_black=dict(data["xb"]), x_red=dict(data["xr"]),
                           edges=tuple(edge(u, v) for u, v in data["edges"]))


def _runs(be):
    """Split the spine into its black run and red run (in spine order)."""
    blacks = [v for v in be.spine if be.colors.get(v) == BLACK]
    reds = [v for v in be.spine if be.colors.get(v) == RED]
    return blacks, reds


def _circular_consecutive(spine, members):
    members = set(members)
    if not members or len(members) == len(spine):
        return True
    n = len(spine)
    # count boundaries between member and non-member going around the circle
    switches = sum(1 for i in range(n)
                   if (spine[i] in members) != (spine[(i + 1) % n] in members))
    return switches == 2


def _crossing_pairs_on_spine(spine, page_edges):
    """Yield pairs of same-page edges whose endpoints alternate on the circle."""
    pos = {v: i for i, v in enumerate(spine)}
    edges = list(page_edges)
    for i in range(len(edges)):
        a, b = edges[i]
        pa, pb = pos[a], pos[b]
        if pa > pb:
            pa, pb = pb, pa
        for j in range(i + 1, len(edges)):
            c, d = edges[j]
            if c in (a, b) or d in (a, b):
                continue
            ins = (pa < pos[c] < pb) + (pa < pos[d] < pb)
            if ins == 1:
                yield edges[i], edges[j]


def verify_book(inst, be):
    """Validity of a book embedding for the given instance: spine covers the
    vertices, the classes are consecutive, the black class follows the
    prescribed order, and no two same-page edges alternate."""
    g = inst.graph
    if sorted(be.spine) != sorted(g.vertices):
        return False
    if len(set(be.spine)) != len(be.spine):
        return False
    blacks_on_spine = [v for v in be.spine if g.color[v] == BLACK]
    if not _circular_consecutive(be.spine, blacks_on_spine):
        return False
    # prescribed order, up to rotation and reflection of the circle
    order = list(inst.black_order)
    if blacks_on_spine != order and blacks_on_spine != list(reversed(order)):
        # the run may straddle the ends of the linear spine; re-read it circularly
        n = len(be.spine)
        start = None
        for i in range(n):
            if g.color[be.spine[i]] == BLACK and g.color[be.spine[i - 1]] == RED:
                start = i
                break
        if start is None:
            # spine is entirely black: any rotation/reflection of the order
            doubled = order + order
            rev = list(reversed(order)) * 2
            lin = list(be.spine)
            return any(doubled[i:i + n] == lin for i in range(n)) or \
                any(rev[i:i + n] == lin for i in range(n))
        run = [be.spine[(start + k) % n] for k in range(len(order))]
        if [v for v in run if g.color[v] == BLACK] != run:
            return False
        if run != order and run != list(reversed(order)):
            return False
    for e in g.edges:
        if e not in be.pages or be.pages[e] not in (1, 2):
            return False
    for page in (1, 2):
        page_edges = [e for e in g.edges if be.pages[e] == page]
        for _ in _crossing_pairs_on_spine(be.spine, page_edges):
            return False
    return True


def book_to_track(be):
    """Black order kept, red spine order reversed, edge colors = pages."""
    blacks, reds = _runs(be)
    return TrackLayout(xi1=tuple(blacks), xi2=tuple(reversed(reds)),
                       omega=dict(be.pages))


def track_to_book(tl, colors=None):
    spine = tuple(tl.xi1) + tuple(reversed(tl.xi2))
    colors = colors or {**{v: BLACK for v in tl.xi1}, **{v: RED for v in tl.xi2}}
    return BookEmbedding(spine=spine, pages=dict(tl.omega), colors=colors)


def verify_track(tl):
    """No two same-colored edges may cross: with u,v on track 1 and x,y on
    track 2, edges (u,x),(v,y) cross iff the orders flip between tracks."""
    p1 = {v: i for i, v in enumerate(tl.xi1)}
    p2 = {v: i for i, v in enumerate(tl.xi2)}
    for e, w in tl.omega.items():
        if w not in (1, 2):
            return False
    edges = sorted(tl.omega)
    for i in range(len(edges)):
        a = edges[i]
        ua, xa = (a[0], a[1]) if a[0] in p1 else (a[1], a[0])
        if ua not in p1 or xa not in p2:
            return False
        for j in range(i + 1, len(edges)):
            b = edges[j]
            if tl.omega[a] != tl.omega[b]:
                continue
            ub, xb = (b[0], b[1]) if b[0] in p1 else (b[1], b[0])
            if ua == ub or xa == xb:
                continue
            if (p1[ua] - p1[ub]) * (p2[xa] - p2[xb]) < 0:
                return False
    return True


def track_to_drawing(tl):
    """Integer ranks as abscissas; edges become straight segments."""
    return TwoLevelDrawing(
        x_black={v: i for i, v in enumerate(tl.xi1)},
        x_red={v: i for i, v in enumerate(tl.xi2)},
        edges=tuple(sorted(tl.omega)),
    )


def _segments_cross(d, a, b):
    ua, xa = (a[0], a[1]) if a[0] in d.x_black else (a[1], a[0])
    ub, xb = (b[0], b[1]) if b[0] in d.x_black else (b[1], b[0])
    if ua == ub or xa == xb:
        return False
    return (d.x_black[ua] - d.x_black[ub]) * (d.x_red[xa] - d.x_red[xb]) < 0


def verify_quasi_planar(d):
    """No three segments may pairwise cross."""
    es = list(d.edges)
    for v, x in d.x_black.items():
        if not isinstance(x, int):
            return False
    if len(set(d.x_black.values())) != len(d.x_black):
        return False
    if len(set(d.x_red.values())) != len(d.x_red):
        return False
    n = len(es)
    crossing = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            crossing[i][j] = crossing[j][i] = _segments_cross(d, es[i], es[j])
    for i in range(n):
        for j in range(i + 1, n):
            if not crossing[i][j]:
                continue
            for k in range(j + 1, n):
                if crossing[i][k] and crossing[j][k]:
                    return False
    return True
