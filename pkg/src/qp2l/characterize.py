"""Good embeddings: the auxiliary red-vertex/red-face graph, the caterpillar
test, and the extraction of a two-page book embedding from a good embedding.

The extraction follows the constructive sufficiency argument: conceptually
merge the auxiliary graph into the embedding, add the two end edges
(b_1, r') and (b_m, r''), drop the face vertices again, and route a red path
face by face; the spine is the resulting Hamiltonian cycle and the pages are
read off the rotations at the black vertices. Face vertices are never
materialized; everything is computed on face walks.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph_core import BLACK, RED, edge
from .transforms import BookEmbedding


@dataclass
class AuxiliaryGraph:
    red_vertices: set
    red_faces: set                 # face ids
    edges: set                     # (red vertex, face id) pairs

    def adjacency(self):
        adj = {("r", v): set() for v in self.red_vertices}
        adj.update({("f", f): set() for f in self.red_faces})
        for v, f in self.edges:
            adj[("r", v)].add(("f", f))
            adj[("f", f)].add(("r", v))
        return adj


@dataclass
class CaterpillarCertificate:
    backbone: list                 # alternating node tags, faces at the ends
    leaves: dict                   # backbone node -> sorted list of leaf nodes


@dataclass
class GoodCertificate:
    caterpillar: CaterpillarCertificate
    r_prime: str
    r_dprime: str
    witness_faces: tuple           # (face shared with b_1, face shared with b_m)


def face_walk_vertices(e, fid):
    """The (single) boundary walk of a face as a cyclic vertex list."""
    walks = e.faces[fid].walks
    out = []
    for w in walks:
        out.extend(u for (u, v) in w)
    return out


def auxiliary_graph(h, e, red_set=None):
    """Red faces are those incident to at least two distinct red vertices;
    the auxiliary graph joins each red vertex to the red faces it touches."""
    g = h.graph
    reds = set(red_set) if red_set is not None else set(g.red_vertices())
    red_faces = set()
    aux_edges = set()
    for f in e.faces:
        on_face = {u for w in f.walks for (u, v) in w if u in reds}
        if len(on_face) >= 2:
            red_faces.add(f.id)
            aux_edges.update((v, f.id) for v in on_face)
    return AuxiliaryGraph(red_vertices=reds, red_faces=red_faces, edges=aux_edges)


def caterpillar_backbone(adj):
    """Caterpillar recognition on an adjacency-dict graph.

    Returns a certificate whose backbone is the path induced by the non-leaf
    nodes (a single node for stars and single-vertex trees), or None.
    """
    if not adj:
        return None
    nodes = list(adj)
    # connected?
    seen = {nodes[0]}
    stack = [nodes[0]]
    edge_count = 0
    while stack:
        x = stack.pop()
        edge_count += len(adj[x])
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != len(nodes) or edge_count != 2 * (len(nodes) - 1):
        return None  # disconnected or cyclic
    internal = [x for x in nodes if len(adj[x]) >= 2]
    if not internal:
        backbone = [min(nodes)]
    else:
        sub = {x: [y for y in adj[x] if y in set(internal)] for x in internal}
        ends = [x for x in internal if len(sub[x]) <= 1]
        if len(internal) == 1:
            backbone = internal
        else:
            if len(ends) != 2 or any(len(sub[x]) > 2 for x in internal):
                return None
            backbone = [min(ends)]
            prev = None
            while len(backbone) < len(internal):
                nxt = [y for y in sub[backbone[-1]] if y != prev]
                if len(nxt) != 1:
                    return None
                prev = backbone[-1]
                backbone.append(nxt[0])
    on_backbone = set(backbone)
    leaves = {}
    for x in backbone:
        ls = sorted(y for y in adj[x] if y not in on_backbone)
        if ls:
            leaves[x] = ls
    return CaterpillarCertificate(backbone=backbone, leaves=leaves)


def _shares_face(e, a, b):
    return sorted(e.vertex_face_incidence[a] & e.vertex_face_incidence[b])


def is_good(h, e):
    """Certificate iff the auxiliary graph is a caterpillar whose backbone
    spans every red face, with distinct leaf reds at the two backbone ends
    that share faces with the first and last black vertex."""
    aux = auxiliary_graph(h, e)
    cert = caterpillar_backbone(aux.adjacency())
    if cert is None:
        return None
    backbone = cert.backbone
    if any(tag == "f" for tag, _ in backbone) is False and aux.red_faces:
        return None
    if {("f", f) for f in aux.red_faces} - set(backbone):
        return None  # backbone must span all red faces
    if not backbone or backbone[0][0] != "f" or backbone[-1][0] != "f":
        return None
    deg = {}
    for v, f in aux.edges:
        deg[v] = deg.get(v, 0) + 1
    b1 = h.black_order[0]
    bm = h.black_order[-1]

    def leaf_candidates(face_node, b):
        f = face_node[1]
        cands = []
        for v, fi in aux.edges:
            if fi == f and deg.get(v, 0) == 1:
                shared = _shares_face(e, v, b)
                if shared:
                    cands.append((v, shared[0]))
        return sorted(cands)

    for bb in (backbone, list(reversed(backbone))):
        front = leaf_candidates(bb[0], b1)
        back = leaf_candidates(bb[-1], bm)
        for rp, wf1 in front:
            for rd, wfk in back:
                if rp != rd:
                    cat = CaterpillarCertificate(backbone=bb, leaves=cert.leaves)
                    return GoodCertificate(caterpillar=cat, r_prime=rp,
                                           r_dprime=rd, witness_faces=(wf1, wfk))
    return None


# -- book extraction ------------------------------------------------------


def _first_index(walk, v, start=0):
    for i in range(start, len(walk)):
        if walk[i] == v:
            return i
    raise ValueError(f"{v!r} not on walk")


def _sectors_of_face(walk, attach_pos):
    """Intervals of walk indices between cyclically consecutive attachment
    positions (the faces a hub vertex would split this face into)."""
    t = len(attach_pos)
    n = len(walk)
    out = []
    for j in range(t):
        a = attach_pos[j]
        b = attach_pos[(j + 1) % t]
        span = (b - a) % n or n
        out.append([(a + s) % n for s in range(span + 1)])
    return out


def _end_options(g, e, aux, walk, face_id, black, leaf_set):
    """All ways to tie an end black to a leaf red of its backbone-end face:
    an existing edge, a chord in a shared non-red face, or a chord inside
    the sector of the split end face that contains the black vertex.

    Yields (red, priority, detail) with detail describing the insertion.
    """
    opts = []
    for r in sorted(leaf_set):
        if edge(black, r) in g.edges:
            opts.append((r, 0, ("edge",)))
            continue
        nonred = [f for f in _shares_face(e, black, r) if f not in aux.red_faces]
        if nonred:
            opts.append((r, 1, ("nonred", nonred[0])))
    attach = {v for v, f in aux.edges if f == face_id}
    attach_pos = sorted(min(i for i, x in enumerate(walk) if x == v)
                        for v in attach)
    for sector_idx, interval in enumerate(_sectors_of_face(walk, attach_pos)):
        interior = interval[1:-1]
        bposs = [i for i in interior if walk[i] == black]
        if not bposs:
            continue
        bpos = bposs[0]
        for i in interval:
            r = walk[i]
            if r in leaf_set:
                opts.append((r, 2, ("sector", sector_idx, bpos, i, tuple(interval))))
    dedup = {}
    for r, pri, detail in sorted(opts, key=lambda o: (o[0], o[1])):
        if r not in dedup:
            dedup[r] = (r, pri, detail)
    return sorted(dedup.values(), key=lambda o: (o[0], o[1]))


def _cut_pockets(walk, cuts):
    """Apply sector chords: drop everything strictly between each chord's
    endpoint positions inside its sector."""
    drop = set()
    for bpos, rpos, interval in cuts:
        ia, ib = interval.index(bpos), interval.index(rpos)
        lo, hi = sorted((ia, ib))
        drop.update(interval[lo + 1:hi])
    return [v for i, v in enumerate(walk) if i not in drop]


def _route_face(walk, v_from, v_to, reds, visited):
    """Internal reds of the face in routing order: sweep the boundary in the
    direction that reaches the far end last, one arc then the other."""
    n = len(walk)
    start = _first_index(walk, v_from)
    fwd = [walk[(start + s) % n] for s in range(n)]
    bwd = [walk[(start - s) % n] for s in range(n)]
    df = next(s for s in range(1, n) if fwd[s] == v_to) if v_to in fwd[1:] else None
    db = next(s for s in range(1, n) if bwd[s] == v_to)
    seq = fwd if (df or 0) >= db else bwd
    t = next(s for s in range(1, n) if seq[s] == v_to)
    arc_a, arc_b = [], []
    for s in range(1, t):
        v = seq[s]
        if v in reds and v not in visited and v not in (v_from, v_to):
            visited.add(v)
            arc_a.append(v)
    for s in range(t + 1, n):
        v = seq[s]
        if v in reds and v not in visited and v not in (v_from, v_to):
            visited.add(v)
            arc_b.append(v)
    return arc_a + list(reversed(arc_b))


def book_from_good(h, e, cert):
    """Spine and pages of a two-page book embedding from a good embedding."""
    g = h.graph
    order = h.black_order
    b1, bm = order[0], order[-1]
    aux = auxiliary_graph(h, e)
    backbone = cert.caterpillar.backbone
    faces_on_bb = [x[1] for x in backbone if x[0] == "f"]
    reds_on_bb = [x[1] for x in backbone if x[0] == "r"]
    reds = set(g.red_vertices())

    walks = {f: face_walk_vertices(e, f) for f in faces_on_bb}
    rotation = {v: list(nbrs) for v, nbrs in e.rotation.items()}

    def insert_at_corner(black, red, walk, bpos):
        prev = walk[bpos - 1]
        i = rotation[black].index(prev)
        rotation[black].insert(i + 1, red)

    f_first, f_last = backbone[0][1], backbone[-1][1]
    deg = {}
    for v, f in aux.edges:
        deg[v] = deg.get(v, 0) + 1
    leaves_of = lambda fid: {v for v, f in aux.edges
                             if f == fid and deg.get(v) == 1}
    opts1 = _end_options(g, e, aux, walks[f_first], f_first, b1,
                         leaves_of(f_first))
    opts2 = _end_options(g, e, aux, walks[f_last], f_last, bm,
                         leaves_of(f_last))
    chosen = None
    for r1, _, d1 in opts1:
        for r2, _, d2 in opts2:
            if r1 == r2:
                continue
            if f_first == f_last and d1[0] == "sector" and \
                    d2[0] == "sector" and d1[1] == d2[1]:
                continue  # one sector cannot host both end chords
            chosen = ((r1, d1), (r2, d2))
            break
        if chosen:
            break
    if chosen is None:
        raise ValueError("no compatible pair of end reds")
    (rp, det1), (rd, det2) = chosen

    cuts = {f: [] for f in walks}
    for black, red, det, fid in ((b1, rp, det1, f_first),
                                 (bm, rd, det2, f_last)):
        if det[0] == "edge":
            continue
        if det[0] == "nonred":
            w = face_walk_vertices(e, det[1])
            insert_at_corner(black, red, w, _first_index(w, black))
            continue
        _, _, bpos, rpos, interval = det
        insert_at_corner(black, red, walks[fid], bpos)
        cuts[fid].append((bpos, rpos, list(interval)))
    for fid, cs in cuts.items():
        if cs:
            walks[fid] = _cut_pockets(walks[fid], cs)

    # route the red path face by face
    ends = [rp] + reds_on_bb + [rd]
    visited = set(ends)
    red_order = [rp]
    for i, f in enumerate(faces_on_bb):
        internal = _route_face(walks[f], ends[i], ends[i + 1], reds, visited)
        red_order.extend(internal)
        red_order.append(ends[i + 1])
    if sorted(red_order) != sorted(reds):
        raise ValueError("red path does not span the red vertices")

    spine = list(order) + list(reversed(red_order))

    # pages from the rotations at the black vertices
    pages = {}
    for i, b in enumerate(order):
        if len(order) == 1:
            inn, out = rp, rd
        elif i == 0:
            inn, out = rp, order[1]
        elif i == len(order) - 1:
            inn, out = order[i - 1], rd
        else:
            inn, out = order[i - 1], order[i + 1]
        rot = rotation[b]
        n = len(rot)
        oi = rot.index(out)
        page_one = set()
        s = (oi + 1) % n
        while rot[s] != inn:
            page_one.add(rot[s])
            s = (s + 1) % n
        for x in g.adj[b]:
            pages[edge(b, x)] = 1 if x in page_one else 2
        if edge(b, inn) in g.edges:
            pages[edge(b, inn)] = 1
        if edge(b, out) in g.edges and g.color[out] == RED:
            pages[edge(b, out)] = 1
    pages = {e2: p for e2, p in pages.items() if e2 in h.origin.graph.edges}
    return BookEmbedding(spine=tuple(spine), pages=pages, colors=dict(g.color))
