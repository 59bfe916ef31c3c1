"""Structural tests for the triconnected-component split and the SPQR tree.

The triconnectivity result is compared against a brute-force splitter that
tries every separation pair and merges same-kind components, per the
classical definition. The tree checks recompute every node invariant
(pole orientation, pertinent-edge separation, node typing) from scratch.
"""

import itertools
import random
from collections import Counter
from types import SimpleNamespace

import pytest

from qp2l.graph_core import (BLACK, RED, ColoredGraph, Instance,
                             black_saturation, edge, normalize)
from qp2l.decompose import rb_augmented_components
from qp2l.planar_embed import NonPlanarWitness, enumerate_embeddings
from qp2l.planar_embed import test_planarity as planarity
from qp2l.spqr.classify import type_of_realization
from qp2l.spqr.tree import build_spqr
from qp2l.spqr.triconnectivity import triconnected_components
from qp2l.spqr.types import (EMB_TYPES, NODE_EMB_TYPES, NODE_TYPE_OF,
                             outer_red_count)


# -- brute-force triconnected components ----------------------------------


def _sep_classes(verts, edges, a, b):
    rest = [v for v in verts if v not in (a, b)]
    comp = {}
    adj = {v: [] for v in rest}
    for u, v, _ in edges:
        if u in adj and v in adj:
            adj[u].append(v)
            adj[v].append(u)
    cid = 0
    for v in rest:
        if v in comp:
            continue
        stack = [v]
        comp[v] = cid
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp[y] = cid
                    stack.append(y)
        cid += 1
    classes = {}
    singles = []
    for i, (u, v, _) in enumerate(edges):
        if u in comp:
            classes.setdefault(comp[u], []).append(i)
        elif v in comp:
            classes.setdefault(comp[v], []).append(i)
        else:
            singles.append([i])
    return list(classes.values()) + singles


def _brute_split(verts, edges, counter):
    verts = sorted(set(verts))
    n = len(verts)
    if n == 2:
        return [(verts, edges)]
    deg = {v: 0 for v in verts}
    for u, v, _ in edges:
        deg[u] += 1
        deg[v] += 1
    if all(d == 2 for d in deg.values()) and len(edges) == n:
        return [(verts, edges)]
    for a, b in itertools.combinations(verts, 2):
        cls = _sep_classes(verts, edges, a, b)
        if len(cls) < 2:
            continue
        k = len(cls)
        for mask in range(1, 2 ** k - 1):
            e1 = [i for j in range(k) if mask >> j & 1 for i in cls[j]]
            e2 = [i for j in range(k) if not mask >> j & 1 for i in cls[j]]
            if len(e1) < 2 or len(e2) < 2:
                continue
            counter[0] += 1
            lab = ("bv", counter[0])
            part1 = [edges[i] for i in e1] + [(a, b, lab)]
            part2 = [edges[i] for i in e2] + [(a, b, lab)]
            out = []
            for part in (part1, part2):
                vs = sorted({x for u, v, _ in part for x in (u, v)})
                out.extend(_brute_split(vs, part, counter))
            return out
    return [(verts, edges)]


def _kind_of(verts, edges):
    if len(verts) == 2:
        return "bond"
    deg = {}
    for u, v, _ in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    return "polygon" if all(d == 2 for d in deg.values()) else "rigid"


def brute_tricomp(n, edge_list):
    edges = [(u, v, i) for i, (u, v) in enumerate(edge_list)]
    counter = [0]
    comps = _brute_split(list(range(n)), edges, counter)
    kinds = [_kind_of(vs, es) for vs, es in comps]
    owner = {}
    for i, (vs, es) in enumerate(comps):
        for u, v, lab in es:
            if isinstance(lab, tuple):
                owner.setdefault(lab, []).append(i)
    parent = list(range(len(comps)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    dropped = set()
    for lab, cc in owner.items():
        a, b = find(cc[0]), find(cc[1])
        if a != b and kinds[a] == kinds[b] and kinds[a] in ("bond", "polygon"):
            parent[b] = a
            dropped.add(lab)
    merged = {}
    for i, (vs, es) in enumerate(comps):
        merged.setdefault(find(i), []).extend(
            e for e in es if e[2] not in dropped)
    sigs = []
    for es in merged.values():
        vs = sorted({x for u, v, _ in es for x in (u, v)})
        real = sorted(lab for _, _, lab in es if not isinstance(lab, tuple))
        nvirt = sum(1 for _, _, lab in es if isinstance(lab, tuple))
        sigs.append((_kind_of(vs, es), tuple(vs), tuple(real), nvirt))
    return sorted(sigs)


def ht_tricomp(n, edge_list):
    comps, ends = triconnected_components(n, edge_list)
    sigs = []
    for kind, es in comps:
        vs = sorted({x for e in es for x in ends[e]})
        real = sorted(e for e in es if e < len(edge_list))
        nvirt = sum(1 for e in es if e >= len(edge_list))
        sigs.append((kind, tuple(vs), tuple(real), nvirt))
    return sorted(sigs)


def random_biconnected(rng, n, extra):
    verts = list(range(n))
    rng.shuffle(verts)
    edges = set()
    for i in range(n):
        u, v = verts[i], verts[(i + 1) % n]
        edges.add((min(u, v), max(u, v)))
    pool = [(u, v) for u in range(n) for v in range(u + 1, n)
            if (u, v) not in edges]
    rng.shuffle(pool)
    for e in pool[:extra]:
        edges.add(e)
    return sorted(edges)


def test_k4_is_one_rigid_component():
    el = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    assert ht_tricomp(4, el) == [("rigid", (0, 1, 2, 3),
                                  (0, 1, 2, 3, 4, 5), 0)]


def test_cycle_is_one_polygon():
    el = [(0, 1), (1, 2), (2, 3), (3, 0)]
    assert ht_tricomp(4, el) == [("polygon", (0, 1, 2, 3), (0, 1, 2, 3), 0)]


def test_theta_graph_splits_into_bond_and_polygons():
    # two vertices joined by three internally disjoint paths of length 2
    el = [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]
    sigs = ht_tricomp(5, el)
    kinds = sorted(k for k, _, _, _ in sigs)
    assert kinds == ["bond", "polygon", "polygon", "polygon"]


def test_triconnected_components_match_brute_force():
    rng = random.Random(20260823)
    tested = 0
    while tested < 250:
        n = rng.randint(4, 8)
        el = random_biconnected(rng, n, rng.randint(0, n))
        if len(el) < 3:
            continue
        assert ht_tricomp(n, el) == brute_tricomp(n, el), el
        tested += 1


# -- SPQR tree over component graphs --------------------------------------


def _component_trees(rng):
    mb = rng.randint(3, 6)
    p = rng.randint(3, 6)
    blacks = [f"b{i}" for i in range(mb)]
    reds = [f"r{i}" for i in range(p)]
    all_e = [(b, r) for b in blacks for r in reds]
    k = rng.randint(mb + p - 1, min(len(all_e), 2 * (mb + p)))
    edges = rng.sample(all_e, k)
    g = ColoredGraph(black=blacks, red=reds, edges=edges)
    if any(g.degree(v) == 0 for v in g.vertices):
        return
    order = blacks[:]
    rng.shuffle(order)
    inst, plan = normalize(Instance(graph=g, black_order=tuple(order)))
    if plan.trivial_answer is not None:
        return
    h = black_saturation(inst)
    if isinstance(planarity(h.graph), NonPlanarWitness):
        return
    for comp in rb_augmented_components(h):
        cg = comp.instance.graph
        border = comp.instance.black_order
        keep = [v for v in cg.vertices
                if not (cg.color[v] == RED and cg.degree(v) == 1)]
        hm2 = cg.subgraph(keep)
        for a, b in zip(border, border[1:]):
            hm2.add_edge(a, b)
        if len(hm2.edges) < 3 or len(border) < 3:
            continue
        yield hm2, border, build_spqr(hm2, border)


def _check_tree(tree, g, border):
    nodes = tree.nodes
    pos = {b: i for i, b in enumerate(border)}
    m = len(border)
    reals = [n.real_edge for n in nodes if n.kind == "Q"]
    assert sorted(reals) == sorted(g.edges)
    pert = {}
    for i in list(tree.postorder()):
        n = nodes[i]
        pert[i] = ({n.real_edge} if n.kind == "Q"
                   else set().union(*(pert[c] for c in n.children)))
    for n in nodes:
        if n.index == tree.root:
            continue
        u, v = n.poles
        assert g.color[u] == BLACK
        if g.color[v] == BLACK:
            assert pos[u] < pos[v]
        pe = pert[n.index]
        inner = {x for e in pe for x in e} - {u, v}
        outer = {x for e in set(g.edges) - pe for x in e} - {u, v}
        assert not (inner & outer)

        def pedge(i):
            return edge(border[i], border[i + 1])

        if g.color[v] == RED:
            i = pos[u]
            want = "RF" if (i + 1 < m and pedge(i) in pe) else "RE"
        else:
            i, j = pos[u], pos[v]
            want = {(0, 0): "BE", (1, 0): "BP", (1, 1): "BB",
                    (0, 1): "BF"}[(int(pedge(i) in pe),
                                   int(j + 1 < m and pedge(j) in pe))]
        assert n.node_type == want
        if n.kind == "S":
            assert len(n.skel_edges) == 2
        if n.kind == "P":
            assert all({e.u, e.v} == {u, v} for e in n.skel_edges)
    root_child = nodes[nodes[tree.root].children[0]]
    assert root_child.node_type == "BF"


def test_spqr_tree_invariants_hold_on_random_components():
    rng = random.Random(7)
    seen = 0
    while seen < 120:
        for g, border, tree in _component_trees(rng) or ():
            _check_tree(tree, g, border)
            seen += 1


# -- embedding-type taxonomy ----------------------------------------------


def test_type_table_is_consistent():
    assert len(EMB_TYPES) == 41
    assert set(NODE_TYPE_OF) == set(EMB_TYPES)
    for nt, ts in NODE_EMB_TYPES.items():
        assert all(NODE_TYPE_OF[t] == nt for t in ts)
    for t in EMB_TYPES:
        assert outer_red_count(t) in (0, 1, 2)


# -- classifier over restrictions of good embeddings -----------------------

MARK = "##m"


def _pole_rotation(full, pert_nbrs, trivs):
    core = [x for x in full if x not in trivs]
    flags = [x in pert_nbrs for x in core]
    if not any(flags) or all(flags):
        return None
    m = len(core)
    if sum(1 for i in range(m) if flags[i] and not flags[(i + 1) % m]) != 1:
        return None
    s = next(i for i in range(m) if flags[i] and not flags[(i - 1) % m])
    e = next(i for i in range(m) if flags[i] and not flags[(i + 1) % m])
    i0, i1 = full.index(core[s]), full.index(core[e])
    if i0 <= i1:
        seg, rest = full[i0:i1 + 1], full[i1 + 1:] + full[:i0]
    else:
        seg, rest = full[i0:] + full[:i1 + 1], full[i1 + 1:i0]
    return ([x for x in seg if x in pert_nbrs or x in trivs]
            + [x for x in rest if x in trivs] + [MARK])


def _realization_of(emb, g, border, node, pert_edges):
    from qp2l.planar_embed import RotationEmbedding
    from qp2l.spqr.classify import Realization

    u, v = node.poles
    pverts = {x for e in pert_edges for x in e}
    trivs = {t for t in g.vertices
             if g.color[t] == RED and g.degree(t) == 1
             and next(iter(g.adj[t])) in pverts}
    keep = pert_edges | {edge(t, next(iter(g.adj[t]))) for t in trivs}
    rot = {}
    for w in pverts | trivs:
        if w in (u, v):
            continue
        rot[w] = [x for x in emb.rotation[w] if edge(w, x) in keep]
    for pnode in (u, v):
        pn = {x for x in g.adj[pnode] if edge(pnode, x) in pert_edges}
        tv = {x for x in g.adj[pnode] if x in trivs}
        r = _pole_rotation(list(emb.rotation[pnode]), pn, tv)
        if r is None:
            return None
        rot[pnode] = r
    rot[MARK] = [u, v]
    color = {w: g.color.get(w, BLACK) for w in rot}
    color[MARK] = BLACK
    bm = border[-1]
    return Realization(emb=RotationEmbedding(rot), u=u, v=v, marker=MARK,
                       node_type=node.node_type, color=color,
                       b_star=bm if bm in rot else None)


def test_every_good_restriction_classifies_to_its_node_type():
    from qp2l.characterize import is_good

    rng = random.Random(3)
    hist = Counter()
    checked = 0
    while checked < 250:
        mb = rng.randint(3, 5)
        p = rng.randint(2, 5)
        blacks = [f"b{i}" for i in range(mb)]
        reds = [f"r{i}" for i in range(p)]
        pool = [(b, r) for b in blacks for r in reds]
        k = rng.randint(mb + p - 1, min(len(pool), 2 * (mb + p)))
        g = ColoredGraph(black=blacks, red=reds,
                         edges=rng.sample(pool, k))
        if any(g.degree(v) == 0 for v in g.vertices):
            continue
        order = blacks[:]
        rng.shuffle(order)
        inst, plan = normalize(Instance(graph=g, black_order=tuple(order)))
        if plan.trivial_answer is not None:
            continue
        h = black_saturation(inst)
        if isinstance(planarity(h.graph), NonPlanarWitness):
            continue
        for comp in rb_augmented_components(h):
            cg = comp.instance.graph
            border = comp.instance.black_order
            full_g = cg.copy()
            for a, b in zip(border, border[1:]):
                full_g.add_edge(a, b)
            if len(border) < 3 or len(full_g.vertices) > 9:
                continue
            keep = [v for v in full_g.vertices
                    if not (full_g.color[v] == RED
                            and full_g.degree(v) == 1)]
            hm2 = full_g.subgraph(keep)
            if len(hm2.edges) < 3:
                continue
            tree = build_spqr(hm2, border)
            hshim = SimpleNamespace(graph=full_g, black_order=border,
                                    origin=comp.instance)
            pert = {}
            for i in list(tree.postorder()):
                n = tree.nodes[i]
                pert[i] = ({edge(*n.real_edge)} if n.kind == "Q"
                           else set().union(*(pert[c] for c in n.children)))
            for emb in enumerate_embeddings(full_g):
                if is_good(hshim, emb) is None:
                    continue
                for n in tree.nodes:
                    if n.index == tree.root:
                        continue
                    real = _realization_of(emb, full_g, border, n,
                                           pert[n.index])
                    assert real is not None, "non-contiguous pertinent arc"
                    got = type_of_realization(real)
                    assert got is not None, "unclassifiable restriction"
                    tname, wit = got
                    assert NODE_TYPE_OF[tname] == n.node_type
                    assert wit.flip
                    hist[tname] += 1
                    checked += 1
    assert len(hist) >= 10  # the sample must exercise a spread of types
