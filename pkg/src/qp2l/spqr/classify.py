"""Classification of pertinent-graph embeddings into the type catalog.

A realization is a planar embedding of a pertinent graph closed off by a
degree-2 black marker vertex: the path (u, marker, v) stands in for the
rest of the graph, and the two faces incident to it are the left and
right outer faces. The classifier builds the auxiliary graph of red
vertices versus red faces, verifies its caterpillar structure, and maps
the features (component count, red outer faces, internal red faces) plus
the per-family refinements onto the catalog, also computing toward which
outer faces the embedding counts as flipped. Red leaves hanging off a
pole into an outer face are undecided and stay out of the auxiliary
graph; their placement is resolved only at the very end of the top-down
construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..graph_core import RED
from ..planar_embed import OuterFacePair
from .types import BOTH_FLIPPED


@dataclass
class Realization:
    """An embedded pertinent graph with its closing marker path."""

    emb: object                    # RotationEmbedding incl. the marker vertex
    u: object                      # black pole
    v: object                      # second pole
    marker: object                 # degree-2 stand-in for the rest graph
    node_type: str                 # RE/RF/BE/BP/BB/BF
    color: dict = None             # vertex -> color; the marker counts black
    b_star: object = None          # last black-path vertex, when inside


@dataclass
class TypeWitness:
    aux: dict                      # adjacency: red vertex / face id -> set
    outer_pair: OuterFacePair
    backbone_ends: tuple = None    # ends of the main backbone
    u_neighbors: tuple = None      # (u_left, u_right)
    q_path_ends: tuple = None      # first/last red face on the pole path
    flip: frozenset = frozenset()


class _Ctx:
    __slots__ = ("ell", "arr", "reds", "undecided", "f_reds", "faces_a",
                 "adj", "comps", "backbones", "outer_in_a", "internal_in_a",
                 "f1", "f2", "f3", "fo_v", "main_backbone", "u_neighbors",
                 "q_path", "q_path_ends")


def type_of_realization(real):
    """The embedding type of a realization plus its witness, or None when
    the embedding violates the structure required of extensible embeddings."""
    c = _analyze(real)
    if c is None:
        return None
    nt = real.node_type
    if nt == "RE":
        t = _classify_re(real, c)
    elif nt == "BE":
        t = _classify_be(real, c)
    elif nt == "RF":
        t = _classify_rf(real, c)
    elif nt == "BF":
        t = _classify_bf(real, c)
    elif nt in ("BP", "BB"):
        t = _classify_bpbb(real, c)
    else:
        raise ValueError(f"unknown node type {nt!r}")
    if t is None:
        return None
    bb = c.main_backbone
    witness = TypeWitness(
        aux=c.adj,
        outer_pair=OuterFacePair(left=c.ell, right=c.arr),
        backbone_ends=(bb[0], bb[-1]) if bb else None,
        u_neighbors=c.u_neighbors,
        q_path_ends=c.q_path_ends,
        flip=_flips(real, c, t))
    return t, witness


# -- shared analysis -------------------------------------------------------


def _analyze(real):
    emb = real.emb
    u, v, m = real.u, real.v, real.marker
    if (u, m) not in emb.face_of or (m, u) not in emb.face_of:
        return None
    c = _Ctx()
    c.ell = emb.face_of[(u, m)]
    c.arr = emb.face_of[(m, u)]
    if c.ell == c.arr:
        return None
    c.fo_v = emb.vertex_face_incidence
    color = real.color or {}
    c.reds = set()
    c.undecided = set()
    for w in emb.vertices():
        if w == m or color.get(w) != RED:
            continue
        if emb.degree(w) == 1:
            nbr = emb.rotation[w][0]
            if nbr in (u, v) and emb.face_of[(w, nbr)] in (c.ell, c.arr):
                c.undecided.add(w)
                continue
        c.reds.add(w)
    c.f_reds = {}
    for f in emb.faces:
        inc = {x for x in f.vertices() if x in c.reds}
        if inc:
            c.f_reds[f.id] = inc
    c.faces_a = set()
    for fid, inc in c.f_reds.items():
        if fid in (c.ell, c.arr):
            if len(inc) >= 2 or (len(inc) == 1
                                 and real.node_type in ("BP", "BB")):
                c.faces_a.add(fid)
        elif len(inc) >= 2:
            c.faces_a.add(fid)
    c.adj = {x: set() for x in c.reds | c.faces_a}
    for fid in c.faces_a:
        for x in c.f_reds[fid]:
            c.adj[fid].add(x)
            c.adj[x].add(fid)

    c.comps = []
    seen = set()
    for s in c.adj:
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            for y in c.adj[x]:
                if y not in comp:
                    comp.add(y)
                    seen.add(y)
                    stack.append(y)
        c.comps.append(comp)
    c.backbones = []
    for comp in c.comps:
        ne = sum(len(c.adj[x] & comp) for x in comp) // 2
        if ne != len(comp) - 1:
            return None  # a cycle can never sit inside a caterpillar
        bb = {x for x in comp if x in c.faces_a or len(c.adj[x]) >= 2}
        if not bb:
            c.backbones.append([next(iter(comp))])
            continue
        path = _order_path(bb, c.adj)
        if path is None:
            return None
        c.backbones.append(path)

    c.outer_in_a = [f for f in (c.ell, c.arr) if f in c.faces_a]
    c.internal_in_a = c.faces_a - {c.ell, c.arr}
    c.f1 = len(c.comps)
    c.f2 = len(c.outer_in_a)
    c.f3 = bool(c.internal_in_a)
    c.main_backbone = None
    for comp, bb in zip(c.comps, c.backbones):
        if comp & c.internal_in_a:
            c.main_backbone = bb
            break
    if c.main_backbone is None and c.backbones:
        c.main_backbone = c.backbones[0]
    c.u_neighbors = None
    c.q_path = None
    c.q_path_ends = None
    return c


def _order_path(bb, adj):
    if len(bb) == 1:
        return [next(iter(bb))]
    sub = {x: [y for y in adj[x] if y in bb] for x in bb}
    ends = [x for x in bb if len(sub[x]) <= 1]
    if len(ends) != 2 or any(len(n) > 2 for n in sub.values()):
        return None
    path = [ends[0]]
    prev = None
    while True:
        nxt = [y for y in sub[path[-1]] if y != prev]
        if not nxt:
            break
        prev = path[-1]
        path.append(nxt[0])
    return path if len(path) == len(bb) else None


def _tree_path(adj, a, b):
    if a not in adj or b not in adj:
        return None
    prev = {a: None}
    stack = [a]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in prev:
                prev[y] = x
                stack.append(y)
    if b not in prev:
        return None
    path = []
    x = b
    while x is not None:
        path.append(x)
        x = prev[x]
    return path


def _end_leaf_shares(c, f, bm):
    """Is some leaf of the auxiliary graph at face f on a common face with bm?"""
    return any(c.fo_v[x] & c.fo_v[bm] for x in c.adj.get(f, ())
               if len(c.adj[x]) == 1)


def _relevant_ends(c, bb, bm, internal_ok, first_internal=True):
    """Extensibility filter for embeddings with internal red faces.

    One backbone end must be a face with an attached leaf sharing a face
    with the inner black endpoint bm, and the other end must either be an
    outer face or an internal face accepted by internal_ok."""
    e1, e2 = bb[0], bb[-1]
    for a, b in ((e1, e2), (e2, e1)):
        if a in c.reds or (first_internal and a in (c.ell, c.arr)):
            continue
        if not _end_leaf_shares(c, a, bm):
            continue
        if b in (c.ell, c.arr) or (b not in c.reds and internal_ok(b)):
            return True
    return False


def _pole_flanks(real, c, p):
    """The reds flanking the marker in the rotation at pole p.

    The predecessor side touches the left outer face, the successor side
    the right one; undecided trivials in between are skipped."""
    rot = real.emb.rotation[p]
    i = rot.index(real.marker)
    n = len(rot)

    def scan(step):
        for k in range(1, n):
            x = rot[(i + step * k) % n]
            if x == real.marker:
                return None
            if x in c.reds:
                return x
        return None

    return scan(-1), scan(1)


# -- per-family classification ---------------------------------------------


def _classify_re(real, c):
    if c.reds == {real.v} and not c.faces_a:
        return "RE"
    return None


def _classify_be(real, c):
    if c.f2 or c.f1 != 1:
        return None
    u, v = real.u, real.v
    rot = real.emb.rotation
    middles = {x for x in c.reds if u in rot[x] and v in rot[x]}
    if not middles:
        return None
    for x in c.reds - middles:
        if not (real.emb.degree(x) == 1 and rot[x][0] in (u, v)):
            return None
    c.u_neighbors = _pole_flanks(real, c, u)
    return "BE_slim" if len(middles) == 1 else "BE_fat"


def _classify_rf(real, c):
    if c.f1 != 1:
        return None
    v, bm = real.v, real.b_star
    if bm is None:
        return None
    bm_internal = not ({c.ell, c.arr} & c.fo_v[bm])
    if not c.f3:
        if c.f2 == 0:
            return "RFN0A" if bm_internal else "RFN0B"
        if c.f2 == 1:
            fnon = c.arr if c.outer_in_a[0] == c.ell else c.ell
            inc = fnon in c.fo_v[bm]
            sh = any(x != v and (c.fo_v[x] & c.fo_v[bm]) for x in c.reds)
            return {(True, True): "RFN1A", (True, False): "RFN1B",
                    (False, True): "RFN1C",
                    (False, False): "RFN1D"}[(inc, sh)]
        return "RFN2"
    bb = c.main_backbone
    if not _relevant_ends(c, bb, bm,
                          lambda f: v in c.f_reds.get(f, ())
                          and len(c.adj.get(v, ())) == 1):
        return None
    if c.f2 == 0:
        return "RFI0"
    if c.f2 == 1:
        fo = c.outer_in_a[0]
        if len(bb) < 2 or fo not in (bb[0], bb[-1]):
            return None
        f_star = bb[0] if bb[-1] == fo else bb[-1]
        if f_star in c.reds or f_star in (c.ell, c.arr):
            return None
        path = _tree_path(c.adj, f_star, v)
        if path is None:
            return None
        return "RFI1A" if fo in path else "RFI1B"
    outer_ends = {bb[0], bb[-1]} & {c.ell, c.arr}
    if len(bb) < 2 or len(outer_ends) != 1:
        return None
    return "RFI2"


def _classify_bf(real, c):
    if c.f1 != 1:
        return None
    u, bm = real.u, real.b_star
    if bm is None:
        return None
    emb = real.emb
    u_ell, u_r = _pole_flanks(real, c, u)
    if u_ell is None or u_r is None:
        return None
    c.u_neighbors = (u_ell, u_r)
    ufaces = c.fo_v[u] - {c.ell, c.arr}
    if not ufaces <= c.faces_a:
        return None  # every internal face at u must be red
    q_reds = {x for x in emb.rotation[u]
              if x in c.reds and emb.degree(x) >= 2}
    c.q_path = ufaces | q_reds
    c.q_path_ends = (
        next((f for f in ufaces if u_ell in c.f_reds.get(f, ())), None),
        next((f for f in ufaces if u_r in c.f_reds.get(f, ())), None))
    bm_internal = not ({c.ell, c.arr} & c.fo_v[bm])
    if not c.f3:
        if u_ell != u_r:
            return None
        if c.f2 == 0:
            return "BFN0A" if bm_internal else "BFN0B"
        if c.f2 == 1:
            fnon = c.arr if c.outer_in_a[0] == c.ell else c.ell
            inc = fnon in c.fo_v[bm]
            sh = any(x != u_ell and (c.fo_v[x] & c.fo_v[bm])
                     for x in c.reds)
            return {(True, True): "BFN1A", (True, False): "BFN1B",
                    (False, True): "BFN1C",
                    (False, False): "BFN1D"}[(inc, sh)]
        return "BFN2"
    bb = c.main_backbone
    ends = {bb[0], bb[-1]}
    if not _relevant_ends(c, bb, bm,
                          lambda f: any(w in c.f_reds.get(f, ())
                                        and len(c.adj.get(w, ())) == 1
                                        for w in (u_ell, u_r)),
                          first_internal=False):
        return None

    def shares_leaf(f):
        return any(c.fo_v[x] & c.fo_v[bm] for x in c.adj.get(f, ())
                   if len(c.adj[x]) == 1)

    if c.f2 == 0:
        if not bm_internal and ends <= c.q_path:
            return "BFI0A"
        return "BFI0B"
    if c.f2 == 1:
        fo = c.outer_in_a[0]
        fnon = c.arr if fo == c.ell else c.ell
        u_fo = u_r if fo == c.arr else u_ell
        if set(bb) <= c.q_path | {fo}:
            if fo not in ends or len(bb) < 2:
                return None
            f_star = bb[0] if bb[-1] == fo else bb[-1]
            if fnon in c.fo_v[bm]:
                return "BFI1A" if shares_leaf(fo) else "BFI1B"
            s_star, s_out = shares_leaf(f_star), shares_leaf(fo)
            if s_star and s_out:
                return "BFI1E"
            if s_star:
                return "BFI1C"
            if s_out:
                return "BFI1D"
            return None
        if any(x in c.reds and x != u_fo and fo in c.fo_v[x] for x in bb):
            return "BFI1F"
        return "BFI1G"
    if set(bb) <= c.q_path | {c.ell, c.arr}:
        return "BFI2A"
    return "BFI2B"


def _classify_bpbb(real, c):
    nt = real.node_type
    if nt == "BP" and c.f1 == 0:
        return "BP1"
    if c.f1 not in (1, 2):
        return None
    singles = 0
    for comp, bb in zip(c.comps, c.backbones):
        outs = [f for f in (c.ell, c.arr) if f in comp]
        if len(outs) != 1:
            return None  # each caterpillar hangs off exactly one outer face
        if bb[0] != outs[0] and bb[-1] != outs[0]:
            return None
        if len(bb) == 1:
            singles += 1
    if c.f1 == 2 and singles == 0:
        return None
    if c.f3:
        bm = real.b_star
        if bm is None or (nt == "BP" and bm != real.v):
            return None
        if not any(f in c.internal_in_a and _end_leaf_shares(c, f, bm)
                   for bb in c.backbones for f in (bb[0], bb[-1])):
            return None
    digit = {(1, False): "2", (2, False): "3",
             (1, True): "4", (2, True): "5"}[(c.f1, c.f3)]
    return nt + digit


# -- flip computation ------------------------------------------------------


_RED_OUTER = frozenset(
    {"RFN1A", "RFN1B", "RFN1C", "RFN1D", "RFI1A", "RFI1B",
     "BP2", "BB2", "BP4", "BB4",
     "BFN1A", "BFN1B", "BFN1C", "BFN1D",
     "BFI1A", "BFI1B", "BFI1C", "BFI1D", "BFI1E", "BFI1F", "BFI1G"})
_SINGLE_BACKBONE = frozenset({"BP5", "BB5"})
_BACKBONE_END = frozenset({"RFI2", "BFI2B"})
_UX_LEAF = frozenset({"BFI0B"})
_BM_OUTER = frozenset({"RFN0B", "BFN0B", "BFI0A"})
_RED_SHARES_BM = frozenset({"RFN2", "BB3", "BFN2", "BFI2A"})


def _flips(real, c, t):
    if t in BOTH_FLIPPED:
        return frozenset({"l", "r"})
    bm = real.b_star
    out = set()
    for name, fid in (("l", c.ell), ("r", c.arr)):
        if t in _RED_OUTER:
            hit = fid in c.faces_a
        elif t in _SINGLE_BACKBONE:
            hit = any(fid in comp and bb == [fid]
                      for comp, bb in zip(c.comps, c.backbones))
        elif t in _BACKBONE_END:
            bb = c.main_backbone
            hit = fid in (bb[0], bb[-1])
        elif t in _UX_LEAF:
            ux = c.u_neighbors[0 if name == "l" else 1]
            bb = c.main_backbone
            hit = (len(c.adj[ux]) == 1
                   and bool(c.adj[ux] & {bb[0], bb[-1]}))
        elif t in _BM_OUTER:
            hit = fid in c.fo_v[bm]
        elif t in _RED_SHARES_BM:
            hit = any(fid in c.fo_v[x] and (c.fo_v[x] & c.fo_v[bm])
                      for x in c.reds)
        else:
            raise ValueError(f"no flip rule for {t!r}")
        if hit:
            out.add(name)
    return frozenset(out)
