"""Split components of a biconnected graph (Hopcroft-Tarjan style).

The input is a simple biconnected graph over integer vertices ``0..n-1``
given as an edge list. ``split_components`` returns the split components as
lists of edge ids, where ids past the input range denote virtual edges;
every virtual id occurs in exactly two components. ``triconnected_components``
additionally merges bonds with bonds and polygons with polygons that share a
virtual edge, yielding the unique triconnected components (the skeleton
material for an SPQR tree).

The implementation follows the classical three-pass palm-tree algorithm:
a first DFS computing lowpoints, a bucket sort of the adjacency lists into
acceptable order, a path-generating second DFS, and the path-search pass
that maintains the edge and triple stacks and performs the splits.
"""

from __future__ import annotations

import heapq
import sys
import threading

TREE, FROND, REMOVED = 1, 2, 3
_EOS = None


class TriconnectivityError(ValueError):
    pass


def split_components(n, edge_list):
    """Split a simple biconnected graph into its split components.

    Returns ``(components, ends)``: components as lists of edge ids and
    ``ends[eid] = (u, v)`` over the original vertex ids (virtual edges
    included). Runs in a worker thread with a large stack so the recursive
    passes survive deep graphs.
    """
    if n < 2 or len(edge_list) < 3:
        raise TriconnectivityError("graph too small to split")
    if n <= 1500:
        return _Splitter(n, edge_list).run()
    box = {}

    def work():
        try:
            box["val"] = _Splitter(n, edge_list).run()
        except BaseException as exc:  # noqa: BLE001 - reraised below
            box["err"] = exc

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 4 * n + 1000))
    threading.stack_size(512 * 1024 * 1024)
    t = threading.Thread(target=work)
    t.start()
    t.join()
    sys.setrecursionlimit(old_limit)
    if "err" in box:
        raise box["err"]
    return box["val"]


def triconnected_components(n, edge_list):
    """Merged triconnected components as ``(kind, edge_ids)`` pairs with
    kind in {"bond", "polygon", "rigid"}, plus the ends table."""
    comps, ends = split_components(n, edge_list)
    kinds = [_component_kind(c, ends) for c in comps]

    owner = {}
    for i, c in enumerate(comps):
        for e in c:
            if e >= len(edge_list):
                owner.setdefault(e, []).append(i)
    parent = list(range(len(comps)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    dropped = set()
    for e, cc in owner.items():
        if len(cc) != 2:
            raise TriconnectivityError(f"virtual edge {e} in {len(cc)} components")
        a, b = find(cc[0]), find(cc[1])
        if a != b and kinds[a] == kinds[b] and kinds[a] in ("bond", "polygon"):
            parent[b] = a
            dropped.add(e)

    merged = {}
    for i, c in enumerate(comps):
        merged.setdefault(find(i), []).extend(
            e for e in c if e not in dropped)
    out = []
    for root, es in merged.items():
        out.append((_component_kind(es, ends), sorted(es)))
    return out, ends


def _component_kind(edge_ids, ends):
    verts = set()
    deg = {}
    for e in edge_ids:
        u, v = ends[e]
        verts.update((u, v))
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if len(verts) == 2:
        return "bond"
    if all(d == 2 for d in deg.values()):
        return "polygon"
    return "rigid"


class _Splitter:
    def __init__(self, n, edge_list):
        self.n = n
        self.m = len(edge_list)
        self.ends = [tuple(e) for e in edge_list]
        seen = set()
        for u, v in self.ends:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise TriconnectivityError(f"bad edge ({u},{v})")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise TriconnectivityError(f"parallel input edge ({u},{v})")
            seen.add(key)
        self.status = [0] * self.m
        self.starts_path = [False] * self.m

    # -- pass 1: palm tree -------------------------------------------------

    def _dfs1(self):
        n, m = self.n, self.m
        inc = [[] for _ in range(n)]
        for e, (u, v) in enumerate(self.ends):
            inc[u].append(e)
            inc[v].append(e)
        self.num = [0] * n
        self.vertex_of_num = [0] * (n + 1)
        self.lowpt1 = [0] * n          # stored as dfs numbers
        self.lowpt2 = [0] * n
        self.nd = [1] * n
        self.parent1 = [-1] * n
        counter = [0]

        def rec(u):
            counter[0] += 1
            self.num[u] = counter[0]
            self.vertex_of_num[counter[0]] = u
            self.lowpt1[u] = self.lowpt2[u] = self.num[u]
            for e in inc[u]:
                if self.status[e]:
                    continue
                a, b = self.ends[e]
                w = b if a == u else a
                if self.num[w] == 0:
                    self.status[e] = TREE
                    self.ends[e] = (u, w)
                    self.parent1[w] = u
                    rec(w)
                    self.nd[u] += self.nd[w]
                    if self.lowpt1[w] < self.lowpt1[u]:
                        self.lowpt2[u] = min(self.lowpt1[u], self.lowpt2[w])
                        self.lowpt1[u] = self.lowpt1[w]
                    elif self.lowpt1[w] == self.lowpt1[u]:
                        self.lowpt2[u] = min(self.lowpt2[u], self.lowpt2[w])
                    else:
                        self.lowpt2[u] = min(self.lowpt2[u], self.lowpt1[w])
                else:
                    self.status[e] = FROND
                    self.ends[e] = (u, w)
                    if self.num[w] < self.lowpt1[u]:
                        self.lowpt2[u] = self.lowpt1[u]
                        self.lowpt1[u] = self.num[w]
                    elif self.num[w] > self.lowpt1[u]:
                        self.lowpt2[u] = min(self.lowpt2[u], self.num[w])

        rec(0)
        if counter[0] != n:
            raise TriconnectivityError("graph is disconnected")

    # -- pass 2: acceptable adjacency order --------------------------------

    def _sort_adjacency(self):
        buckets = [[] for _ in range(3 * self.n + 3)]
        for e in range(self.m):
            v, w = self.ends[e]
            if self.status[e] == FROND:
                phi = 3 * self.num[w] + 1
            elif self.lowpt2[w] < self.num[v]:
                phi = 3 * self.lowpt1[w]
            else:
                phi = 3 * self.lowpt1[w] + 2
            buckets[phi].append(e)
        self.adj = [[] for _ in range(self.n)]
        for bucket in buckets:
            for e in bucket:
                self.adj[self.ends[e][0]].append(e)

    # -- pass 3: paths, newnum, highpoints ----------------------------------

    def _pathfinder(self):
        self.newnum = [0] * self.n
        self.high_raw = [[] for _ in range(self.n)]  # frond ids, per target
        state = {"m": self.n, "newpath": True}

        def rec(v):
            self.newnum[v] = state["m"] - self.nd[v] + 1
            for e in self.adj[v]:
                if state["newpath"]:
                    self.starts_path[e] = True
                    state["newpath"] = False
                w = self.ends[e][1]
                if self.status[e] == TREE:
                    rec(w)
                    state["m"] -= 1
                else:
                    self.high_raw[w].append(e)
                    state["newpath"] = True

        rec(0)

    # -- relabel everything into newnum space (1..n) ------------------------

    def _relabel(self):
        n = self.n
        nn = self.newnum
        self.orig_of_nn = [0] * (n + 1)
        for v in range(n):
            self.orig_of_nn[nn[v]] = v
        num_to_nn = [0] * (n + 1)
        for v in range(n):
            num_to_nn[self.num[v]] = nn[v]

        self.E = [(nn[a], nn[b]) for (a, b) in self.ends]  # oriented
        self.PARENT = [0] * (n + 1)
        self.ND = [0] * (n + 1)
        self.LOWPT1 = [0] * (n + 1)
        self.LOWPT2 = [0] * (n + 1)
        self.ADJ = [[] for _ in range(n + 1)]
        self.HIGH = [[] for _ in range(n + 1)]
        self.tree_edge_to = [-1] * (n + 1)
        self.degree = [0] * (n + 1)
        self.outv = [0] * (n + 1)
        for v in range(n):
            i = nn[v]
            self.PARENT[i] = nn[self.parent1[v]] if self.parent1[v] >= 0 else 0
            self.ND[i] = self.nd[v]
            self.LOWPT1[i] = num_to_nn[self.lowpt1[v]]
            self.LOWPT2[i] = num_to_nn[self.lowpt2[v]]
            self.ADJ[i] = list(self.adj[v])
            self.HIGH[i] = [(-self.E[e][0], e) for e in self.high_raw[v]]
            heapq.heapify(self.HIGH[i])
        for e in range(self.m):
            a, b = self.E[e]
            self.degree[a] += 1
            self.degree[b] += 1
            if self.status[e] == TREE:
                self.outv[a] += 1
                self.tree_edge_to[b] = e

    # -- pass 4: path search -------------------------------------------------

    def _new_virtual(self, a, b, status):
        e = len(self.E)
        self.E.append((a, b))
        self.status.append(status)
        self.starts_path.append(False)
        self.degree[a] += 1
        self.degree[b] += 1
        if status == TREE:
            self.outv[a] += 1
        return e

    def _emit(self, comp, keep):
        self.components.append(list(comp))
        for e in comp:
            if e == keep:
                continue
            a, b = self.E[e]
            self.degree[a] -= 1
            self.degree[b] -= 1
            if self.status[e] == TREE:
                self.outv[a] -= 1
            self.status[e] = REMOVED

    def _make_tree_edge(self, e, a, b):
        self.status[e] = TREE
        self.E[e] = (a, b)
        self.PARENT[b] = a
        self.tree_edge_to[b] = e
        self.outv[a] += 1
        self.extra[a].append(e)

    def _high(self, v):
        h = self.HIGH[v]
        while h and self.status[h[0][1]] == REMOVED:
            heapq.heappop(h)
        return -h[0][0] if h else 0

    def _first_live_out(self, w):
        for lst in (self.extra[w], self.ADJ[w]):
            for e in lst:
                if self.status[e] in (TREE, FROND) and self.E[e][0] == w:
                    return e
        return None

    def _path_search(self, v):
        estack, tstack = self.estack, self.tstack
        for e in list(self.ADJ[v]):
            if self.status[e] == REMOVED:
                continue
            w = self.E[e][1]
            started = self.starts_path[e]
            if self.status[e] == TREE:
                if started:
                    y = 0
                    deleted = False
                    last_b = 0
                    while tstack and tstack[-1] is not _EOS and \
                            tstack[-1][1] > self.LOWPT1[w]:
                        h, a, b = tstack.pop()
                        y = max(y, h)
                        deleted = True
                        last_b = b
                    if not deleted:
                        tstack.append((w + self.ND[w] - 1, self.LOWPT1[w], v))
                    else:
                        tstack.append((max(y, w + self.ND[w] - 1),
                                       self.LOWPT1[w], last_b))
                    tstack.append(_EOS)
                self._path_search(w)
                e = self.tree_edge_to[w]  # may have been replaced by a bond
                estack.append(e)
                w = self._type2_loop(v, w)
                self._type1_check(v, w)
                if started:
                    while tstack and tstack.pop() is not _EOS:
                        pass
                while tstack and tstack[-1] is not _EOS and \
                        tstack[-1][1] != v and tstack[-1][2] != v and \
                        self._high(v) > tstack[-1][0]:
                    tstack.pop()
            else:
                if started:
                    y = 0
                    deleted = False
                    last_b = 0
                    while tstack and tstack[-1] is not _EOS and \
                            tstack[-1][1] > w:
                        h, a, b = tstack.pop()
                        y = max(y, h)
                        deleted = True
                        last_b = b
                    if not deleted:
                        tstack.append((v, w, v))
                    else:
                        tstack.append((y, w, last_b))
                estack.append(e)

    def _type2_loop(self, v, w):
        estack, tstack = self.estack, self.tstack
        while v != 1:
            deg2 = False
            if self.degree[w] == 2:
                out = self._first_live_out(w)
                deg2 = out is not None and self.status[out] == TREE \
                    and self.E[out][1] > w
            ttop = tstack[-1] if tstack and tstack[-1] is not _EOS else None
            if not deg2 and not (ttop and ttop[1] == v):
                break
            if ttop and ttop[1] == v and self.PARENT[ttop[2]] == ttop[1]:
                tstack.pop()
                continue
            e_ab = None
            if deg2:
                e1 = estack.pop()
                e2 = estack.pop()
                a2, b2 = self.E[e2]
                x = b2 if a2 == w else a2
                e_virt = self._new_virtual(v, x, 0)
                self._emit([e1, e2, e_virt], keep=e_virt)
                if estack and set(self.E[estack[-1]]) == {v, x}:
                    e_ab = estack.pop()
            else:
                h, a, b = tstack.pop()
                comp = []
                while estack:
                    x1, y1 = self.E[estack[-1]]
                    if not (a <= x1 <= h and a <= y1 <= h):
                        break
                    if {x1, y1} == {a, b}:
                        e_ab = estack.pop()
                    else:
                        comp.append(estack.pop())
                e_virt = self._new_virtual(a, b, 0)
                comp.append(e_virt)
                self._emit(comp, keep=e_virt)
                x = b
            if e_ab is not None:
                e_old = e_virt
                e_virt = self._new_virtual(v, x, 0)
                self._emit([e_ab, e_old, e_virt], keep=e_virt)
            estack.append(e_virt)
            self._make_tree_edge(e_virt, v, x)
            w = x
        return w

    def _type1_check(self, v, w):
        estack = self.estack
        if not (self.LOWPT2[w] >= v and self.LOWPT1[w] < v and
                (self.PARENT[v] != 1 or self.outv[v] >= 2)):
            return
        lo, hi = w, w + self.ND[w] - 1
        comp = []
        while estack:
            x1, y1 = self.E[estack[-1]]
            if not (lo <= x1 <= hi or lo <= y1 <= hi):
                break
            comp.append(estack.pop())
        u = self.LOWPT1[w]
        e_virt = self._new_virtual(v, u, 0)
        comp.append(e_virt)
        self._emit(comp, keep=e_virt)
        if estack and set(self.E[estack[-1]]) == {v, u}:
            e_ab = estack.pop()
            e_old = e_virt
            e_virt = self._new_virtual(v, u, 0)
            self._emit([e_ab, e_old, e_virt], keep=e_virt)
        if u != self.PARENT[v]:
            self.status[e_virt] = FROND
            heapq.heappush(self.HIGH[u], (-v, e_virt))
            estack.append(e_virt)
        else:
            e_tree = self.tree_edge_to[v]
            e_new = self._new_virtual(u, v, 0)
            self._emit([e_virt, e_tree, e_new], keep=e_new)
            self._make_tree_edge(e_new, u, v)

    # -- driver ---------------------------------------------------------------

    def run(self):
        self._dfs1()
        self._sort_adjacency()
        self._pathfinder()
        self._relabel()
        self.extra = [[] for _ in range(self.n + 1)]
        self.estack = []
        self.tstack = []
        self.components = []
        self._path_search(1)
        if self.estack:
            self._emit(list(self.estack), keep=-1)
        ends_orig = [(self.orig_of_nn[a], self.orig_of_nn[b])
                     for (a, b) in self.E]
        return self.components, ends_orig
