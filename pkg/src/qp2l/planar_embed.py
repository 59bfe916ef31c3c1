"""Combinatorial planar embeddings (rotation systems).

An embedding is a cyclic order of neighbors per vertex. Faces are traversed
with the convention that the half-edge following (u, v) is (v, w) where w is
the neighbor after u in the rotation at v. For disconnected graphs the
components' outer walks are merged into a single outer face so that
|V| - |E| + |F| = 1 + #components.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

import networkx as nx

from .graph_core import edge


class EmbeddingError(ValueError):
    pass


@dataclass(frozen=True)
class NonPlanarWitness:
    """A forbidden-subdivision witness."""

    edges: frozenset
    kind: str  # "K5" or "K33"


@dataclass(frozen=True)
class OuterFacePair:
    left: int
    right: int


class Face:
    __slots__ = ("id", "walks")

    def __init__(self, fid, walks):
        self.id = fid
        self.walks = tuple(tuple(w) for w in walks)

    def half_edges(self):
        for w in self.walks:
            yield from w

    def vertices(self):
        """Incident vertices with multiplicity."""
        return [u for w in self.walks for (u, v) in w]

    def __len__(self):
        return sum(len(w) for w in self.walks)

    def __repr__(self):
        return f"Face({self.id}, {self.walks})"


class RotationEmbedding:
    """Immutable rotation system with face bookkeeping."""

    def __init__(self, rotation, outer_face=None, check_planar=True):
        self.rotation = {v: tuple(nbrs) for v, nbrs in rotation.items()}
        self._pos = {}
        for v, nbrs in self.rotation.items():
            for i, u in enumerate(nbrs):
                if (v, u) in self._pos:
                    raise EmbeddingError(f"duplicate neighbor {u!r} at {v!r}")
                self._pos[(v, u)] = i
        for (v, u) in self._pos:
            if (u, v) not in self._pos:
                raise EmbeddingError(f"half-edge ({u!r},{v!r}) missing its twin")
        walks, comp_of_walk, comps = self._trace_walks()
        if check_planar:
            noniso = [v for v in self.rotation if self.rotation[v]]
            n_edges = len(self._pos) // 2
            if len(walks) != n_edges - len(noniso) + 2 * len(comps):
                raise EmbeddingError("rotation system is not planar (genus > 0)")
        self.faces = []
        self.face_of = {}  # half-edge -> face id
        if outer_face is None:
            outer_walks = []
            seen_comp = set()
            inner = []
            for w, c in zip(walks, comp_of_walk):
                if c not in seen_comp:
                    seen_comp.add(c)
                    outer_walks.append(w)
                else:
                    inner.append(w)
            self.faces.append(Face(0, outer_walks))
            for w in inner:
                self.faces.append(Face(len(self.faces), [w]))
            self.outer_face = 0
        else:
            # outer_face given as a half-edge that must lie on the outer face
            target = outer_face
            outer_walks = []
            rest = []
            seen_comp = set()
            target_comp = None
            for w, c in zip(walks, comp_of_walk):
                if target in w:
                    outer_walks.append(w)
                    target_comp = c
            if not outer_walks:
                raise EmbeddingError(f"half-edge {target!r} not found")
            seen_comp.add(target_comp)
            for w, c in zip(walks, comp_of_walk):
                if target in w:
                    continue
                if c not in seen_comp:
                    seen_comp.add(c)
                    outer_walks.append(w)
                else:
                    rest.append(w)
            self.faces.append(Face(0, outer_walks))
            for w in rest:
                self.faces.append(Face(len(self.faces), [w]))
            self.outer_face = 0
        for f in self.faces:
            for he in f.half_edges():
                self.face_of[he] = f.id
        self.vertex_face_incidence = {v: set() for v in self.rotation}
        for f in self.faces:
            for w in f.walks:
                for (u, v) in w:
                    self.vertex_face_incidence[u].add(f.id)
        for v in self.rotation:
            if not self.rotation[v]:  # isolated vertices share the outer face
                self.vertex_face_incidence[v].add(self.outer_face)

    def _trace_walks(self):
        pos = self._pos
        rot = self.rotation
        unvisited = set(pos)
        walks = []
        comp_of_walk = []
        comp = {}
        comps = []
        for v in rot:
            if v in comp or not rot[v]:
                continue
            cid = len(comps)
            comps.append(cid)
            stack = [v]
            comp[v] = cid
            while stack:
                x = stack.pop()
                for y in rot[x]:
                    if y not in comp:
                        comp[y] = cid
                        stack.append(y)
        while unvisited:
            he = min(unvisited)
            walk = []
            cur = he
            while True:
                walk.append(cur)
                unvisited.discard(cur)
                u, v = cur
                nbrs = rot[v]
                cur = (v, nbrs[(pos[(v, u)] + 1) % len(nbrs)])
                if cur == he:
                    break
            walks.append(walk)
            comp_of_walk.append(comp[he[0]])
        return walks, comp_of_walk, comps

    # -- queries ---------------------------------------------------------

    def vertices(self):
        return list(self.rotation)

    def edges(self):
        return {edge(u, v) for (u, v) in self._pos}

    def next_half_edge(self, u, v):
        nbrs = self.rotation[v]
        return (v, nbrs[(self._pos[(v, u)] + 1) % len(nbrs)])

    def face_vertices(self, fid):
        return self.faces[fid].vertices()

    def faces_of_vertex(self, v):
        return self.vertex_face_incidence[v]

    def degree(self, v):
        return len(self.rotation[v])

    def canonical_key(self):
        return tuple(sorted((v, nbrs) for v, nbrs in self.rotation.items()))

    def reflection_key(self):
        """Key invariant under reversing every rotation."""
        fwd = self.canonical_key()
        rev = tuple(sorted((v, tuple(reversed(nbrs)))
                           for v, nbrs in self.rotation.items()))
        return min(fwd, rev)


def faces(e):
    """Face walks as vertex lists with multiplicity (spec-facing helper)."""
    return [f.vertices() for f in e.faces]


def test_planarity(g):
    """RotationEmbedding on success, NonPlanarWitness otherwise."""
    h = nx.Graph()
    # sorted insertion keeps the returned embedding independent of hash
    # randomization, so downstream output is reproducible across runs
    h.add_nodes_from(sorted(g.vertices))
    h.add_edges_from(sorted(g.edges))
    ok, cert = nx.check_planarity(h, counterexample=True)
    if not ok:
        degs = dict(cert.degree())
        kind = "K5" if max(degs.values()) >= 4 else "K33"
        return NonPlanarWitness(
            edges=frozenset(edge(u, v) for u, v in cert.edges()), kind=kind)
    rotation = {v: cert.get_data().get(v, []) for v in g.vertices}
    return RotationEmbedding(rotation)


def flip(e):
    """Reverse every rotation. Involution; faces are in bijection."""
    rot = {v: tuple(reversed(nbrs)) for v, nbrs in e.rotation.items()}
    outer = None
    for w in e.faces[e.outer_face].walks:
        if w:
            u, v = w[0]
            outer = (v, u)
            break
    return RotationEmbedding(rot, outer_face=outer)


def restrict(e, sub):
    """Embedding induced on a subset of edges (all vertices kept)."""
    sub = {edge(u, v) for u, v in sub}
    missing = sub - e.edges()
    if missing:
        raise EmbeddingError(f"absent edges in restriction: {sorted(missing)}")
    rot = {v: tuple(u for u in nbrs if edge(u, v) in sub)
           for v, nbrs in e.rotation.items()}
    return RotationEmbedding(rot)


def _cyclic_orders(nbrs):
    """All cyclic orders of nbrs, anchored at the first element."""
    if len(nbrs) <= 2:
        yield tuple(nbrs)
        return
    head, rest = nbrs[0], nbrs[1:]
    for perm in itertools.permutations(rest):
        yield (head,) + perm


def enumerate_embeddings(g, cap=None):
    """Every planar rotation system of g, up to reflection.

    Brute force over products of cyclic orders filtered by the genus count;
    guarded to 10 vertices.
    """
    if len(g.vertices) > 10 and not os.environ.get("QP2L_GUARD_OVERRIDE"):
        raise EmbeddingError(
            f"{len(g.vertices)} vertices exceeds enumeration guard (10)")
    verts = [v for v in g.vertices if g.adj[v]]
    iso = [v for v in g.vertices if not g.adj[v]]
    n_edges = len(g.edges)

    # component count over non-isolated vertices
    comp = {}
    ncomp = 0
    for v in verts:
        if v in comp:
            continue
        ncomp += 1
        stack = [v]
        comp[v] = ncomp
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y not in comp:
                    comp[y] = ncomp
                    stack.append(y)
    target_faces = n_edges - len(verts) + 2 * ncomp

    choices = [list(_cyclic_orders(tuple(sorted(g.adj[v])))) for v in verts]
    produced = 0
    for combo in itertools.product(*choices):
        key_rev = tuple(_anchor(tuple(reversed(c))) for c in combo)
        if key_rev < tuple(combo):
            continue  # the reflected system is the representative
        rot = dict(zip(verts, combo))
        if _count_walks(rot) != target_faces:
            continue
        for v in iso:
            rot[v] = ()
        emb = RotationEmbedding(rot, check_planar=False)
        yield emb
        produced += 1
        if cap is not None and produced >= cap:
            return


def _anchor(cyc):
    """Rotate a cyclic tuple so its minimum element comes first."""
    if not cyc:
        return cyc
    i = cyc.index(min(cyc))
    return cyc[i:] + cyc[:i]


def _count_walks(rot):
    pos = {}
    for v, nbrs in rot.items():
        for i, u in enumerate(nbrs):
            pos[(v, u)] = i
    unvisited = set(pos)
    walks = 0
    while unvisited:
        he = next(iter(unvisited))
        cur = he
        while True:
            unvisited.discard(cur)
            u, v = cur
            nbrs = rot[v]
            cur = (v, nbrs[(pos[(v, u)] + 1) % len(nbrs)])
            if cur == he:
                break
        walks += 1
    return walks
