"""Rooted SPQR trees over a biconnected component of the saturated graph.

The tree is rooted at the Q-node of the first black-path edge of the
component. Every real edge is a leaf Q-node; S-nodes are rebalanced into a
left-leaning chain so that each has exactly two children. Each non-root node
carries ordered poles (the black pole first; if both poles are black, the
one earlier on the black path first) and a node type describing how the
black path interacts with its pertinent graph:

- RE / RF: red second pole, without / with the tail of the black path inside;
- BE: both poles black, no black-path edge inside;
- BP: the black path runs pole to pole inside;
- BB: pole to pole and the tail ends inside;
- BF: only the tail ends inside.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..graph_core import BLACK, RED, InputError, edge
from .triconnectivity import TriconnectivityError, triconnected_components


@dataclass
class SkelEdge:
    u: object
    v: object
    child: int          # child node index in the tree

    @property
    def ends(self):
        return (self.u, self.v)


@dataclass
class SpqrNode:
    index: int
    kind: str                      # Q, S, P, R
    poles: tuple = None            # (u, v); u black
    parent: int = None
    skel_edges: list = field(default_factory=list)   # excludes the parent edge
    real_edge: tuple = None        # Q-nodes only
    node_type: str = None          # RE/RF/BE/BP/BB/BF
    admissible: dict = None        # EmbType name -> configuration (solver)
    tin: int = 0
    tout: int = 0

    @property
    def children(self):
        return [e.child for e in self.skel_edges if e.child is not None]

    def skel_vertices(self):
        vs = {self.poles[0], self.poles[1]}
        for e in self.skel_edges:
            vs.add(e.u)
            vs.add(e.v)
        return vs


@dataclass
class SpqrTree:
    nodes: list
    root: int                      # the Q-node of (b_1, b_2)

    def __iter__(self):
        return iter(self.nodes)

    def postorder(self):
        out = []
        stack = [self.root]
        while stack:
            i = stack.pop()
            out.append(i)
            stack.extend(self.nodes[i].children)
        return reversed(out)


def build_spqr(g, black_order):
    """Rooted SPQR tree of a biconnected component graph.

    ``black_order`` is the component's black vertices in path order; the
    reference edge is the path edge between the first two.
    """
    if len(black_order) < 3:
        raise InputError("component must contain at least three black vertices")
    ref = edge(black_order[0], black_order[1])
    if ref not in g.edges:
        raise InputError("reference edge missing from component")
    verts = sorted(g.vertices)
    vid = {v: i for i, v in enumerate(verts)}
    edge_list = sorted(g.edges)
    if len(edge_list) < 3:
        raise InputError("component too small for an SPQR tree")
    try:
        comps, ends_int = triconnected_components(
            len(verts), [(vid[a], vid[b]) for a, b in edge_list])
    except TriconnectivityError as exc:
        raise InputError(str(exc)) from exc
    ends = [(verts[a], verts[b]) for a, b in ends_int]
    n_real = len(edge_list)
    ref_eid = edge_list.index(ref)

    owner = {}
    for ci, (kind, es) in enumerate(comps):
        for e in es:
            owner.setdefault(e, []).append(ci)

    nodes = []

    def new_node(kind, poles=None, parent=None, real_edge=None):
        node = SpqrNode(index=len(nodes), kind=kind, poles=poles,
                        parent=parent, real_edge=real_edge)
        nodes.append(node)
        return node

    root = new_node("Q", poles=(black_order[0], black_order[1]),
                    real_edge=ref)

    pos = {b: i for i, b in enumerate(black_order)}

    def orient_poles(a, b):
        ca, cb = g.color[a], g.color[b]
        if ca == RED and cb == RED:
            raise InputError(f"red-red split pair ({a!r},{b!r})")
        if ca == RED:
            return (b, a)
        if cb == RED:
            return (a, b)
        return (a, b) if pos[a] < pos[b] else (b, a)

    kind_map = {"bond": "P", "polygon": "S", "rigid": "R"}
    tasks = []                     # (eid, from_component, parent_idx, setter)

    def child_task(e, ci, parent_idx, skel_edge):
        tasks.append((e, ci, parent_idx, skel_edge))

    def attach(ci, parent_eid, parent_idx):
        """Materialize component ci, entered through edge parent_eid."""
        kind, es = comps[ci]
        rest = [e for e in es if e != parent_eid]
        a, b = ends[parent_eid]
        if kind == "polygon":
            return attach_polygon(ci, rest, a, b, parent_idx)
        node = new_node(kind_map[kind], poles=orient_poles(a, b),
                        parent=parent_idx)
        for e in rest:
            se = SkelEdge(*ends[e], child=None)
            node.skel_edges.append(se)
            child_task(e, ci, node.index, se)
        return node.index

    def attach_polygon(ci, rest, a, b, parent_idx):
        """Binarize a cycle into a left-leaning chain of 2-child S-nodes."""
        adj = {}
        for e in rest:
            x, y = ends[e]
            adj.setdefault(x, []).append((y, e))
            adj.setdefault(y, []).append((x, e))
        path = []          # (edge id, far endpoint) from a towards b
        cur, prev = a, None
        while cur != b:
            nxts = [(y, e) for (y, e) in adj[cur] if y != prev]
            if len(nxts) != 1:
                raise InputError("polygon walk is off")
            nxt, e = nxts[0]
            path.append((e, nxt))
            prev, cur = cur, nxt
        chain = []
        left, parent = a, parent_idx
        for k in range(len(path) - 1):
            s = new_node("S", poles=orient_poles(left, b), parent=parent)
            chain.append(s)
            parent = s.index
            left = path[k][1]
        left = a
        for k, s in enumerate(chain):
            e, x = path[k]
            se = SkelEdge(left, x, child=None)
            s.skel_edges.append(se)
            child_task(e, ci, s.index, se)
            if k + 1 < len(chain):
                s.skel_edges.append(SkelEdge(x, b, child=chain[k + 1].index))
            else:
                e2, _ = path[k + 1]
                se2 = SkelEdge(x, b, child=None)
                s.skel_edges.append(se2)
                child_task(e2, ci, s.index, se2)
            left = x
        return chain[0].index

    first = owner[ref_eid][0]
    root_se = SkelEdge(black_order[0], black_order[1], child=None)
    root.skel_edges.append(root_se)
    child_task(ref_eid, None, root.index, root_se)
    while tasks:
        e, ci, parent_idx, se = tasks.pop()
        if e < n_real and (ci is not None or parent_idx != root.index):
            q = new_node("Q", poles=orient_poles(*ends[e]),
                         parent=parent_idx, real_edge=edge(*ends[e]))
            se.child = q.index
            continue
        other = [c for c in owner[e] if c != ci]
        if len(other) != 1:
            raise InputError("virtual edge sharing is off")
        se.child = attach(other[0], e, parent_idx)
    tree = SpqrTree(nodes=nodes, root=root.index)
    _euler(tree)
    _classify_all(tree, g, black_order)
    return tree


def _euler(tree):
    t = 0
    stack = [(tree.root, False)]
    while stack:
        i, done = stack.pop()
        node = tree.nodes[i]
        if done:
            node.tout = t
            t += 1
            continue
        node.tin = t
        t += 1
        stack.append((i, True))
        for c in node.children:
            stack.append((c, False))


def _classify_all(tree, g, black_order):
    """Assign node types per the pole colors and the black-path membership."""
    pos = {b: i for i, b in enumerate(black_order)}
    m = len(black_order)
    path_q = {}
    for node in tree.nodes:
        if node.kind == "Q" and node.index != tree.root:
            a, b = node.real_edge
            if g.color[a] == BLACK and g.color[b] == BLACK:
                i = min(pos[a], pos[b])
                path_q[i] = node.index

    def in_pert(mu, i):
        """Is the black-path edge (b_i, b_{i+1}) inside pert(mu)?"""
        if i is None or i + 1 >= m or i not in path_q:
            return False  # the reference edge always lies outside pert
        q = tree.nodes[path_q[i]]
        nd = tree.nodes[mu]
        return nd.tin <= q.tin and q.tout <= nd.tout

    for node in tree.nodes:
        if node.index == tree.root:
            continue
        u, v = node.poles
        if g.color[u] != BLACK:
            raise InputError("first pole is not black")
        if g.color[v] == RED:
            node.node_type = "RF" if in_pert(node.index, pos[u]) else "RE"
        else:
            i, j = pos[u], pos[v]
            puv = in_pert(node.index, i)
            pv = in_pert(node.index, j)
            if puv and pv:
                node.node_type = "BB"
            elif puv:
                node.node_type = "BP"
            elif pv:
                node.node_type = "BF"
            else:
                node.node_type = "BE"
    _assert_structure(tree)


def _assert_structure(tree):
    child = tree.nodes[tree.root].children
    if len(child) != 1:
        raise InputError("root must have exactly one child")
    if tree.nodes[child[0]].node_type != "BF":
        raise InputError("child of the root must be of type BF")
    for node in tree.nodes:
        if node.kind == "Q":
            continue
        if node.kind == "S" and len(node.skel_edges) != 2:
            raise InputError("S-node not binarized")
        finals = [e for e in node.skel_edges
                  if tree.nodes[e.child].node_type in ("RF", "BF", "BB")]
        if len(finals) > 1:
            raise InputError("two tail-holding virtual edges in one skeleton")
        _assert_black_path(tree, node)


def _assert_black_path(tree, node):
    """BP/BB skeleton edges must form a path through the skeleton blacks."""
    deg = {}
    for e in node.skel_edges:
        if tree.nodes[e.child].node_type in ("BP", "BB"):
            deg[e.u] = deg.get(e.u, 0) + 1
            deg[e.v] = deg.get(e.v, 0) + 1
    if any(d > 2 for d in deg.values()):
        raise InputError("black skeleton edges branch")
    ends_odd = [v for v, d in deg.items() if d == 1]
    if deg and len(ends_odd) != 2:
        raise InputError("black skeleton edges form a cycle")
