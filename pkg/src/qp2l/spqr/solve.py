"""Per-node embedding configurations and the two tree passes of the solver.

Bottom-up, every non-root tree node collects an *admissible* dictionary
mapping embedding types to one configuration realizing each: a left-to-right
order of the parallel edges (P-nodes), a (type, flip) per virtual edge, and a
designated skeleton face per trivial-bearing internal vertex. A candidate
configuration is scored by assembling a stand-in plane graph in which every
virtual edge is replaced by the frozen gadget of the chosen type, and feeding
it to the classifier, which is the sole arbiter of which type, if any, the
configuration realizes. Top-down, the same assembly routine, fed recursively
constructed child embeddings instead of gadgets, produces a good embedding of
the component.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import SimpleNamespace

from ..characterize import is_good
from ..graph_core import BLACK, RED, InputError
from ..planar_embed import (EmbeddingError, NonPlanarWitness,
                            RotationEmbedding, test_planarity)
from .classify import Realization, type_of_realization
from .gadgets import GADGETS, MARKER as GMARK
from .tree import build_spqr
from .types import outer_red_count

# Closing marker vertex of every assembled pertinent graph. The NUL byte
# keeps it clear of instance vertex ids.
MARK = "\x00mark"

_BOTH = frozenset(("l", "r"))


@dataclass
class Config:
    """One realizable embedding configuration of a tree node."""

    choices: dict                    # skeleton edge index -> (type, flip)
    triv_face: dict                  # internal vertex -> skeleton face id
    order: tuple = None              # P-nodes: edge indices left to right
    flip: frozenset = _BOTH          # flip sides of the scored realization


# -- embedded skeletons ------------------------------------------------------


class _Skel:
    """A planar-embedded skeleton, the parent edge replaced by the marker
    path, with face bookkeeping over edge-instance slots (so that the
    parallel edges of P-nodes stay apart)."""

    def __init__(self, node, slots, ends):
        self.node = node
        self.slots = slots           # vertex -> list of instance keys
        self.ends = ends             # instance key -> (a, b)
        pos = {}
        for w, lst in slots.items():
            for i, k in enumerate(lst):
                pos[(k, w)] = i
        self.faces = []              # face id -> walk of (key, tail)
        self.face_of = {}
        seen = set()
        for w in slots:
            for k in slots[w]:
                start = (k, w)
                if start in seen:
                    continue
                walk = []
                cur = start
                while cur not in seen:
                    seen.add(cur)
                    walk.append(cur)
                    ck, tail = cur
                    a, b = ends[ck]
                    head = b if tail == a else a
                    lst = slots[head]
                    nk = lst[(pos[(ck, head)] + 1) % len(lst)]
                    cur = (nk, head)
                fid = len(self.faces)
                self.faces.append(walk)
                for he in walk:
                    self.face_of[he] = fid
        u = node.poles[0]
        self.ell = self.face_of[("mu", u)]
        self.arr = self.face_of[("mu", MARK)]

    def corner_face(self, w, i):
        """Face of the corner just before slot i at vertex w."""
        return self.face_of[(self.slots[w][i], w)]

    def vertex_faces(self, w):
        return {self.corner_face(w, i) for i in range(len(self.slots[w]))}

    def edge_faces(self, j):
        a, b = self.ends[j]
        return (self.face_of[(j, a)], self.face_of[(j, b)])

    def face_vertices(self, fid):
        return {tail for _, tail in self.faces[fid]}

    def face_edge_keys(self, fid):
        return [k for k, _ in self.faces[fid]]


def _skel_s(node):
    (e0, e1) = node.skel_edges
    u, v = node.poles
    shared = ({e0.u, e0.v} & {e1.u, e1.v})
    if len(shared) != 1:
        raise InputError("series skeleton is not a two-edge path")
    w = shared.pop()
    ju = 0 if u in (e0.u, e0.v) else 1
    jv = 1 - ju
    slots = {u: [ju, "mu"], w: [ju, jv], v: [jv, "mv"], MARK: ["mu", "mv"]}
    ends = {ju: (u, w), jv: (w, v), "mu": (u, MARK), "mv": (MARK, v)}
    return _Skel(node, slots, ends), w


def _skel_p(node, order):
    u, v = node.poles
    slots = {u: list(order) + ["mu"],
             v: list(reversed(order)) + ["mv"],
             MARK: ["mu", "mv"]}
    ends = {j: (u, v) for j in order}
    ends["mu"] = (u, MARK)
    ends["mv"] = (MARK, v)
    return _Skel(node, slots, ends)


def _skel_r(node):
    u, v = node.poles
    verts = sorted(node.skel_vertices())
    pairs = [(se.u, se.v) for se in node.skel_edges] + [(u, MARK), (MARK, v)]
    shim = SimpleNamespace(vertices=verts + [MARK], edges=pairs)
    emb = test_planarity(shim)
    if isinstance(emb, NonPlanarWitness):
        raise InputError("rigid skeleton is not planar")
    key = {}
    for j, se in enumerate(node.skel_edges):
        key[(se.u, se.v)] = key[(se.v, se.u)] = j
    key[(u, MARK)] = key[(MARK, u)] = "mu"
    key[(v, MARK)] = key[(MARK, v)] = "mv"
    slots = {w: [key[(w, x)] for x in emb.rotation[w]]
             for w in emb.rotation}
    ends = {j: (se.u, se.v) for j, se in enumerate(node.skel_edges)}
    ends["mu"] = (u, MARK)
    ends["mv"] = (MARK, v)
    return _Skel(node, slots, ends)


# -- assembly ----------------------------------------------------------------


def _assemble(tree, g, node, skel, choices, triv_face, trivials, expand, b_m):
    """Rotation system of the (stand-in or real) pertinent graph plus marker.

    ``expand`` maps (child index, type, flip, edge index) to the child's
    neighbor sequences at its poles, its inner rotations and colors, and the
    inner stand-in of the last black-path vertex when the child holds it.
    """
    u, v = node.poles
    rot = {}
    color = {}
    seqs = {}
    b_star = None
    for j, se in enumerate(node.skel_edges):
        child = tree.nodes[se.child]
        t, x = choices[j]
        seq_u, seq_v, inner_rot, inner_col, bst = expand(se.child, t, x, j)
        cu, cv = child.poles
        seqs[(j, cu)] = seq_u
        seqs[(j, cv)] = seq_v
        rot.update(inner_rot)
        color.update(inner_col)
        if bst is not None and child.node_type in ("RF", "BB", "BF"):
            b_star = bst
    for w in skel.slots:
        if w == MARK:
            continue
        parts = []
        for k in skel.slots[w]:
            parts.append([MARK] if k in ("mu", "mv") else list(seqs[(k, w)]))
        if w in triv_face:
            fid = triv_face[w]
            i = next(i for i in range(len(skel.slots[w]))
                     if skel.corner_face(w, i) == fid)
            for r in trivials[w]:
                rot[r] = [w]
                color[r] = RED
            parts[i] = list(trivials[w]) + parts[i]
        rot[w] = [x for p in parts for x in p]
        color[w] = g.color[w]
    rot[MARK] = [u, v]
    color[MARK] = BLACK
    if b_star is None and b_m in skel.slots:
        b_star = b_m
    return rot, color, b_star


def _expand_gadget(tree, child_idx, t, x, j):
    child = tree.nodes[child_idx]
    cu, cv = child.poles
    if child.kind == "Q":
        return [cv], [cu], {}, {}, None
    gad = GADGETS[t]
    rotg = gad["rotation"]
    if x not in gad["flip"]:
        rotg = {w: tuple(reversed(ns)) for w, ns in rotg.items()}
    rename = {gad["u"]: cu, gad["v"]: cv}
    for w in rotg:
        if w not in rename and w != GMARK:
            rename[w] = f"{j}\x00{w}"

    def seq_at(p):
        lst = list(rotg[p])
        i = lst.index(GMARK)
        return [rename[y] for y in lst[i + 1:] + lst[:i]]

    inner_rot = {}
    inner_col = {}
    for w, ns in rotg.items():
        if w in (GMARK, gad["u"], gad["v"]):
            continue
        inner_rot[rename[w]] = [rename[y] for y in ns]
        inner_col[rename[w]] = BLACK if w.startswith("b") else RED
    bst = rename[gad["b_star"]] if gad["b_star"] is not None else None
    return seq_at(gad["u"]), seq_at(gad["v"]), inner_rot, inner_col, bst


def _score(tree, g, node, skel, choices, triv_face, trivials, b_m, out,
           order=None):
    """Assemble a candidate configuration with gadgets, classify it, and
    record the first configuration found per realized type."""
    def expand(child_idx, t, x, j):
        return _expand_gadget(tree, child_idx, t, x, j)

    rot, color, bst = _assemble(tree, g, node, skel, choices, triv_face,
                                trivials, expand, b_m)
    try:
        emb = RotationEmbedding(rot)
    except EmbeddingError:
        return
    real = Realization(emb=emb, u=node.poles[0], v=node.poles[1], marker=MARK,
                       node_type=node.node_type, color=color, b_star=bst)
    got = type_of_realization(real)
    if got is None:
        return
    t, wit = got
    if t not in out:
        out[t] = Config(choices=dict(choices), triv_face=dict(triv_face),
                        order=tuple(order) if order is not None else None,
                        flip=wit.flip)


# -- per-kind enumeration ----------------------------------------------------


def _adm_q(tree, g, node):
    t = "RE" if g.color[node.poles[1]] == RED else "BP1"
    return {t: Config(choices={}, triv_face={})}


def _adm_s(tree, g, node, trivials, b_m):
    skel, w = _skel_s(node)
    adm = [tree.nodes[se.child].admissible for se in node.skel_edges]
    fws = [None]
    if w in trivials:
        fws = [skel.ell, skel.arr]
    out = {}
    for t0 in sorted(adm[0]):
        for x0 in ("l", "r"):
            for t1 in sorted(adm[1]):
                for x1 in ("l", "r"):
                    for fw in fws:
                        tf = {} if fw is None else {w: fw}
                        _score(tree, g, node, skel,
                               {0: (t0, x0), 1: (t1, x1)}, tf, trivials,
                               b_m, out)
    return out


def _adm_p(tree, g, node, trivials, b_m):
    idx = range(len(node.skel_edges))
    children = [tree.nodes[se.child] for se in node.skel_edges]
    adm = [c.admissible for c in children]
    out = {}
    if g.color[node.poles[1]] == RED:
        if len(node.skel_edges) != 2:
            return out
        for order in ((0, 1), (1, 0)):
            for t0 in sorted(adm[0]):
                for x0 in ("l", "r"):
                    for t1 in sorted(adm[1]):
                        for x1 in ("l", "r"):
                            _score(tree, g, node, _skel_p(node, order),
                                   {0: (t0, x0), 1: (t1, x1)}, {},
                                   trivials, b_m, out, order=order)
        return out

    slim = [j for j in idx if children[j].node_type == "BE"]
    big = [j for j in idx if children[j].node_type != "BE"]
    if any("BE_slim" not in adm[j] for j in slim) or len(big) > 2:
        return out
    base = {j: ("BE_slim", "l") for j in slim}
    if not big:
        _score(tree, g, node, _skel_p(node, tuple(slim)), base, {},
               trivials, b_m, out, order=tuple(slim))
        return out
    if len(big) == 1:
        e1 = big[0]
        for a in (0, 1):
            if a > len(slim):
                continue
            order = tuple(slim[:a]) + (e1,) + tuple(slim[a:])
            for t1 in sorted(adm[e1]):
                for x1 in ("l", "r"):
                    _score(tree, g, node, _skel_p(node, order),
                           dict(base, **{e1: (t1, x1)}), {},
                           trivials, b_m, out, order=order)
        return out
    for e1, e2 in (tuple(big), tuple(reversed(big))):
        for a in (0, 1):
            for b in (0, 1):
                if a + b > len(slim):
                    continue
                order = (tuple(slim[:a]) + (e1,) + tuple(slim[a:a + b])
                         + (e2,) + tuple(slim[a + b:]))
                for t1 in sorted(adm[e1]):
                    for x1 in ("l", "r"):
                        for t2 in sorted(adm[e2]):
                            for x2 in ("l", "r"):
                                _score(tree, g, node, _skel_p(node, order),
                                       dict(base, **{e1: (t1, x1),
                                                     e2: (t2, x2)}), {},
                                       trivials, b_m, out, order=order)
    return out


def _adm_r(tree, g, node, trivials, b_m):
    skel = _skel_r(node)
    idx = range(len(node.skel_edges))
    children = [tree.nodes[se.child] for se in node.skel_edges]
    adm = [c.admissible for c in children]
    ntypes = [c.node_type for c in children]
    u, v = node.poles

    intrinsic = set()
    for fid in range(len(skel.faces)):
        redv = sum(1 for w in skel.face_vertices(fid)
                   if w != MARK and g.color[w] == RED)
        bef = sum(1 for k in skel.face_edge_keys(fid)
                  if isinstance(k, int) and ntypes[k] in ("BE", "BF"))
        outer = fid in (skel.ell, skel.arr)
        if redv >= 2 or bef >= 2 or (redv and bef):
            intrinsic.add(fid)
        elif outer and node.node_type in ("BP", "BB") and (redv or bef):
            intrinsic.add(fid)

    tverts = [w for w in skel.slots
              if w not in (u, v, MARK) and w in trivials]

    tails = [j for j in idx if ntypes[j] in ("RF", "BB", "BF")]
    e_m = tails[0] if tails else None
    if e_m is None and b_m in skel.slots:
        bp_at = [j for j in idx if ntypes[j] == "BP"
                 and b_m in (node.skel_edges[j].u, node.skel_edges[j].v)]
        if len(bp_at) != 1:
            return {}
        e_m = bp_at[0]

    def reddens(j, t, x):
        k = outer_red_count(t)
        if k == 0:
            return frozenset()
        fa, fb = skel.edge_faces(j)
        if k == 2:
            return frozenset((fa, fb))
        cu = children[j].poles[0]
        red_side = skel.face_of[(j, cu)] if x == "r" else \
            skel.face_of[(j, children[j].poles[1])]
        return frozenset((red_side,))

    def soft(j):
        return any(outer_red_count(t) > 0 for t in adm[j])

    xs = [None]
    if e_m is not None:
        xs += [f for f in set(skel.edge_faces(e_m))
               if f not in (skel.ell, skel.arr) and f not in intrinsic]
    ys = [None] + [f for f in (skel.ell, skel.arr) if f not in intrinsic]

    out = {}
    for x in xs:
        for y in ys:
            _r_pair(tree, g, node, skel, children, adm, ntypes, e_m,
                    intrinsic, tverts, trivials, b_m, reddens, soft,
                    x, y, out)
    return out


def _r_pair(tree, g, node, skel, children, adm, ntypes, e_m, intrinsic,
            tverts, trivials, b_m, reddens, soft, x, y, out):
    """Configurations whose reddened non-intrinsic faces are exactly x, y."""
    idx = range(len(node.skel_edges))
    targets = [f for f in (x, y) if f is not None]
    allowed = intrinsic | set(targets)

    def options(j, need=None):
        opts = [(t, xf) for t in sorted(adm[j]) for xf in ("l", "r")
                if reddens(j, t, xf) <= allowed]
        if need is not None:
            opts = [o for o in opts if need <= reddens(j, *o)]
        return opts

    # pick one reddener per target
    cand = {}
    for f in targets:
        cv = [("v", w) for w in sorted(tverts, key=str)
              if f in skel.vertex_faces(w)]
        ce = [("e", j) for j in skel.face_edge_keys(f)
              if isinstance(j, int) and soft(j) and options(j, {f})]
        ce.sort(key=lambda c: (c[1] == e_m, c[1]))
        cand[f] = cv + ce
        if not cand[f]:
            return

    sel = {}
    if len(targets) == 2:
        f1, f2 = targets
        pair = next(((a, b) for a in cand[f1] for b in cand[f2] if a != b),
                    None)
        if pair is None:
            el = cand[f1][0]
            if el[0] == "v" or not options(el[1], {f1, f2}):
                return
            sel[el] = {f1, f2}
        else:
            sel[pair[0]] = {f1}
            sel[pair[1]] = {f2}
    elif targets:
        sel[cand[targets[0]][0]] = {targets[0]}

    choices = {}
    triv_face = {}
    em_opts = None
    for el, need in sel.items():
        if el[0] == "v":
            triv_face[el[1]] = next(iter(need))
            continue
        j = el[1]
        opts = options(j, need)
        if not opts:
            return
        if j == e_m:
            em_opts = opts
        else:
            choices[j] = min(opts, key=lambda o: (outer_red_count(o[0]),) + o)

    for j in idx:
        if j in choices or (e_m is not None and j == e_m):
            continue
        opts = options(j)
        if not opts:
            return
        choices[j] = min(opts, key=lambda o: (outer_red_count(o[0]),) + o)
    if e_m is not None and em_opts is None:
        em_opts = options(e_m)
        if not em_opts:
            return

    for w in tverts:
        if w in triv_face:
            continue
        fs = skel.vertex_faces(w)
        pick = next((f for f in sorted(fs) if f in intrinsic),
                    next((f for f in sorted(fs) if f in targets), None))
        if pick is None:
            return
        triv_face[w] = pick

    if e_m is None:
        _score(tree, g, node, skel, choices, triv_face, trivials, b_m, out)
        return
    for t, xf in em_opts:
        _score(tree, g, node, skel, dict(choices, **{e_m: (t, xf)}),
               triv_face, trivials, b_m, out)


# -- the two passes ----------------------------------------------------------


def compute_admissible(tree, g, border, trivials):
    """Bottom-up pass; False as soon as some node admits no embedding type."""
    b_m = border[-1]
    for i in tree.postorder():
        node = tree.nodes[i]
        if node.index == tree.root:
            continue
        if node.kind == "Q":
            node.admissible = _adm_q(tree, g, node)
        elif node.kind == "S":
            node.admissible = _adm_s(tree, g, node, trivials, b_m)
        elif node.kind == "P":
            node.admissible = _adm_p(tree, g, node, trivials, b_m)
        else:
            node.admissible = _adm_r(tree, g, node, trivials, b_m)
        if not node.admissible:
            return False
    return True


def _build_full(tree, g, node, cfg, trivials, b_m):
    """Top-down substitution: the real embedded pertinent graph of node."""
    if node.kind == "S":
        skel, _ = _skel_s(node)
    elif node.kind == "P":
        skel = _skel_p(node, cfg.order)
    else:
        skel = _skel_r(node)

    def expand(child_idx, t, xf, j):
        child = tree.nodes[child_idx]
        cu, cv = child.poles
        if child.kind == "Q":
            return [cv], [cu], {}, {}, None
        ccfg = child.admissible[t]
        rotc, colc, bstc = _build_full(tree, g, child, ccfg, trivials, b_m)
        if xf not in ccfg.flip:
            rotc = {w: list(reversed(ns)) for w, ns in rotc.items()}

        def seq_at(p):
            lst = list(rotc[p])
            i = lst.index(MARK)
            return lst[i + 1:] + lst[:i]

        su, sv = seq_at(cu), seq_at(cv)
        inner = {w: list(ns) for w, ns in rotc.items()
                 if w not in (cu, cv, MARK)}
        icol = {w: colc[w] for w in inner}
        return su, sv, inner, icol, bstc

    return _assemble(tree, g, node, skel, cfg.choices, cfg.triv_face,
                     trivials, expand, b_m)


@dataclass
class ComponentSolution:
    """A positive answer for one rb-augmented component: the tree with one
    stored configuration per (node, admissible type), the chosen type of the
    root child, and the context needed to construct the embedding."""

    tree: object
    tau_type: str
    trivials: dict          # black vertex -> its pendant reds, sorted
    hshim: object           # .graph = component + black path, .black_order
    hm2: object             # the graph without pendant reds
    border: tuple


def solve_component(comp_inst):
    """The bottom-up pass on one rb-augmented component (at least three
    blacks and three reds). None iff some node's admissible set is empty."""
    cg = comp_inst.graph
    border = comp_inst.black_order
    full_g = cg.copy()
    for a, b in zip(border, border[1:]):
        full_g.add_edge(a, b)
    trivials = {}
    for r in full_g.vertices:
        if full_g.color[r] == RED and full_g.degree(r) == 1:
            trivials.setdefault(full_g.adj[r][0], []).append(r)
    for ts in trivials.values():
        ts.sort()
    keep = [w for w in full_g.vertices
            if not (full_g.color[w] == RED and full_g.degree(w) == 1)]
    hm2 = full_g.subgraph(keep)
    tree = build_spqr(hm2, border)
    if not compute_admissible(tree, hm2, border, trivials):
        return None
    tau = tree.nodes[tree.nodes[tree.root].children[0]]
    hshim = SimpleNamespace(graph=full_g, black_order=border,
                            origin=comp_inst)
    return ComponentSolution(tree=tree, tau_type=min(tau.admissible),
                             trivials=trivials, hshim=hshim, hm2=hm2,
                             border=border)


def construct_neat(sol):
    """The top-down pass: a good embedding of the component plus its
    certificate. Tries the chosen root-child type first and the remaining
    admissible types defensively; the pendant reds of the first two path
    vertices, undecided during the bottom-up pass, go next to the closing
    path edge on whichever side extends."""
    tree, trivials = sol.tree, sol.trivials
    tau = tree.nodes[tree.nodes[tree.root].children[0]]
    border = sol.border
    b1, b2 = border[0], border[1]
    t1s = trivials.get(b1, [])
    t2s = trivials.get(b2, [])
    types = [sol.tau_type] + sorted(t for t in tau.admissible
                                    if t != sol.tau_type)
    for t in types:
        cfg = tau.admissible[t]
        rot0, _, _ = _build_full(tree, sol.hm2, tau, cfg, trivials,
                                 border[-1])
        rot0 = {w: list(ns) for w, ns in rot0.items() if w != MARK}
        rot0[b1][rot0[b1].index(MARK)] = b2
        rot0[b2][rot0[b2].index(MARK)] = b1
        for p1 in ((0, 1) if t1s else (0,)):
            for p2 in ((0, 1) if t2s else (0,)):
                rot = {w: list(ns) for w, ns in rot0.items()}
                i = rot[b1].index(b2)
                rot[b1][i + p1:i + p1] = t1s
                i = rot[b2].index(b1)
                rot[b2][i + p2:i + p2] = t2s
                for r in t1s:
                    rot[r] = [b1]
                for r in t2s:
                    rot[r] = [b2]
                try:
                    emb = RotationEmbedding(rot)
                except EmbeddingError:
                    continue
                cert = is_good(sol.hshim, emb)
                if cert is not None:
                    return emb, cert
    raise RuntimeError("no admissible root-child type extends; "
                       "the bottom-up pass accepted in error")


def is_neat(h, emb, tree):
    """Is emb a good embedding in which every pendant red sits in a face
    that survives to the skeleton embedding of its black vertex's proper
    allocation node? For the two poles of the root that means a face next
    to the closing path edge."""
    if is_good(h, emb) is None:
        return False
    g = h.graph
    border = h.black_order
    b1, b2 = border[0], border[1]
    pend = [(r, g.adj[r][0]) for r in g.vertices
            if g.color[r] == RED and g.degree(r) == 1]
    if not pend:
        return True
    pendset = {r for r, _ in pend}

    pert_verts = {}
    for i in tree.postorder():
        n = tree.nodes[i]
        if n.kind == "Q":
            pert_verts[i] = set(n.real_edge)
        else:
            pert_verts[i] = set().union(*(pert_verts[c] for c in n.children))
    pert_edges = {}
    for i in tree.postorder():
        n = tree.nodes[i]
        if n.kind == "Q":
            pert_edges[i] = {frozenset(n.real_edge)}
        else:
            pert_edges[i] = set().union(*(pert_edges[c] for c in n.children))

    pan = {}                 # black vertex -> proper allocation node index
    for n in tree.nodes:
        if n.index == tree.root:
            continue
        for w in n.skel_vertices():
            if w not in n.poles:
                pan.setdefault(w, n.index)

    for r, b in pend:
        fr = emb.face_of[(r, b)]
        walk = list(emb.faces[fr].half_edges())
        if b in (b1, b2):
            if not any({a, c} == {b1, b2} for a, c in walk):
                return False
            continue
        mu = tree.nodes[pan[b]]
        for se in mu.skel_edges:
            if b not in (se.u, se.v):
                continue
            child = tree.nodes[se.child]
            if child.kind == "Q":
                continue
            pe = pert_edges[se.child]
            pv = pert_verts[se.child]
            inside = True
            for a, c in walk:
                if a in pendset or c in pendset:
                    p = c if a in pendset else a
                    if p not in pv:
                        inside = False
                        break
                elif frozenset((a, c)) not in pe:
                    inside = False
                    break
            if inside:
                return False
    return True
