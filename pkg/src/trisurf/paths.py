"""Deterministic path and cycle certificates in graphs.

The central primitive decides, exactly, whether k internally
vertex-disjoint paths of length at least 2 run from x to y with all
internal vertices inside a prescribed set U.  The decision is a
unit-capacity maximum flow after splitting each internal vertex, with
the direct edge xy removed so no path can degenerate to length 1.

Everything here is pure and reentrant; identical inputs give identical
outputs because all adjacency is visited in ascending vertex order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InputError
from .hypergraph import Graph, canon_pair


@dataclass(frozen=True)
class PathSystem:
    """Internally vertex-disjoint x-y paths, each of length >= 2."""

    paths: tuple[tuple[int, ...], ...]


class _FlowNet:
    """Tiny unit-capacity max-flow network (BFS augmentation).

    Node ids are small ints assigned by the caller; arcs are stored in a
    residual map.  Deterministic: BFS scans successors ascending.
    """

    def __init__(self, node_count: int):
        self.n = node_count
        self.cap: dict[tuple[int, int], int] = {}
        self.orig: dict[tuple[int, int], int] = {}
        self.succ: list[set[int]] = [set() for _ in range(node_count)]

    def add_arc(self, a: int, b: int, capacity: int = 1) -> None:
        self.cap[(a, b)] = self.cap.get((a, b), 0) + capacity
        self.orig[(a, b)] = self.orig.get((a, b), 0) + capacity
        self.cap.setdefault((b, a), 0)
        self.succ[a].add(b)
        self.succ[b].add(a)

    def used(self) -> dict[tuple[int, int], int]:
        """Net flow actually pushed along each original arc."""
        out = {}
        for arc, c0 in self.orig.items():
            sent = c0 - self.cap[arc]
            if sent > 0:
                out[arc] = sent
        return out

    def _augment(self, s: int, t: int) -> bool:
        parent = {s: s}
        queue = deque([s])
        while queue:
            cur = queue.popleft()
            if cur == t:
                break
            for nxt in sorted(self.succ[cur]):
                if nxt not in parent and self.cap.get((cur, nxt), 0) > 0:
                    parent[nxt] = cur
                    queue.append(nxt)
        if t not in parent:
            return False
        cur = t
        while cur != s:
            prev = parent[cur]
            self.cap[(prev, cur)] -= 1
            self.cap[(cur, prev)] += 1
            cur = prev
        return True

    def max_flow(self, s: int, t: int, limit: int) -> int:
        sent = 0
        while sent < limit and self._augment(s, t):
            sent += 1
        return sent


def _build_disjoint_net(g: Graph, x: int, y: int, allowed: list[int]):
    """Split-vertex network for internally disjoint x-y paths through allowed."""
    index = {v: 2 + 2 * i for i, v in enumerate(allowed)}  # v_in; v_out = v_in + 1
    net = _FlowNet(2 + 2 * len(allowed))
    allowed_set = set(allowed)
    for v in allowed:
        net.add_arc(index[v], index[v] + 1)
    for a, b in sorted(g.edges):
        if {a, b} == {x, y}:
            continue  # direct edge never yields a length->=2 path
        if a in allowed_set and b in allowed_set:
            net.add_arc(index[a] + 1, index[b])
            net.add_arc(index[b] + 1, index[a])
        elif a == x and b in allowed_set:
            net.add_arc(0, index[b])
        elif b == x and a in allowed_set:
            net.add_arc(0, index[a])
        elif a == y and b in allowed_set:
            net.add_arc(index[b] + 1, 1)
        elif b == y and a in allowed_set:
            net.add_arc(index[a] + 1, 1)
    return net, index


def _decompose(net: _FlowNet, index: dict[int, int], x: int, y: int, flow: int):
    """Read paths off the residual network, smallest next vertex first."""
    back = {node: v for v, node in index.items()}
    used = net.used()
    paths = []
    for _ in range(flow):
        path = [x]
        cur = 0
        while cur != 1:
            nxt = min(b for (a, b), c in used.items() if a == cur and c > 0)
            used[(cur, nxt)] -= 1
            if nxt == 1:
                path.append(y)
                cur = 1
            else:  # an in-node: record the vertex, continue from its out-node
                path.append(back[nxt])
                used[(nxt, nxt + 1)] -= 1
                cur = nxt + 1
        paths.append(tuple(path))
    paths.sort(key=lambda p: p[1])
    return paths


def disjoint_paths(g: Graph, x: int, y: int, u: set | frozenset, k: int):
    """k internally vertex-disjoint paths from x to y through U, or None.

    Exact decision: None is returned only when no such system exists.
    """
    if x == y:
        raise InputError("endpoints must differ")
    if x in u or y in u:
        raise InputError("endpoints may not lie in U")
    if x not in g.vertices or y not in g.vertices:
        raise InputError("endpoints must be vertices of the graph")
    if k < 1:
        raise InputError("k must be positive")
    allowed = sorted((set(u) & g.vertices) - {x, y})
    net, index = _build_disjoint_net(g, x, y, allowed)
    flow = net.max_flow(0, 1, k)
    if flow < k:
        return None
    return PathSystem(tuple(_decompose(net, index, x, y, flow)))


def max_disjoint_paths(g: Graph, x: int, y: int, u, limit: int) -> int:
    """Flow value only (no path extraction); used by the admissibility kernel."""
    allowed = sorted((set(u) & g.vertices) - {x, y})
    net, _ = _build_disjoint_net(g, x, y, allowed)
    return net.max_flow(0, 1, limit)


def _restricted_bfs(g: Graph, s: int, t: int, internal: set, forbid_direct: bool):
    """Shortest s-t path whose internal vertices all lie in ``internal``.

    Deterministic: neighbors expand in ascending order, first parent wins.
    """
    adj = g.adjacency()
    parent = {s: s}
    queue = deque([s])
    while queue:
        cur = queue.popleft()
        for nxt in adj.get(cur, ()):
            if cur == s and nxt == t and forbid_direct:
                continue
            if nxt == t:
                path = [t, cur]
                back = cur
                while back != s:
                    back = parent[back]
                    path.append(back)
                path.reverse()
                return tuple(path)
            if nxt in internal and nxt not in parent:
                parent[nxt] = cur
                queue.append(nxt)
    return None


def path_through(g: Graph, x: int, y: int, u, avoid=frozenset()):
    """A path of length >= 2 from x to y with internal vertices in U \\ avoid."""
    if x in u or y in u:
        raise InputError("endpoints may not lie in U")
    if x == y:
        raise InputError("endpoints must differ")
    internal = (set(u) & g.vertices) - set(avoid) - {x, y}
    return _restricted_bfs(g, x, y, internal, forbid_direct=True)


def cycle_with_forced_second_vertex(g: Graph, v0: int, v1: int, v2: int, u, avoid=frozenset()):
    """A cycle through the subpath v1-v0-v2 with V(C)\\{v0,v1} in U \\ avoid.

    Realized as a path v0 v2 ... v1 (so v2 is forced second) closed by
    the edge v1 v0.  Returns the cycle as a vertex tuple starting at v0,
    or None when no qualifying path from v2 to v1 exists.
    """
    if v1 == v2:
        raise InputError("forced second vertex equals the cycle anchor")
    if not g.has_edge(v0, v1) or not g.has_edge(v0, v2):
        raise InputError("v0v1 and v0v2 must be edges")
    pool = set(u) - set(avoid)
    if v2 not in pool:
        return None
    internal = (pool & g.vertices) - {v0, v1, v2}
    tail = _restricted_bfs(g, v2, v1, internal, forbid_direct=False)
    if tail is None:
        return None
    return (v0,) + tail


def cycle_with_edge(g: Graph, v0: int, v3: int, u, avoid=frozenset()):
    """A cycle containing the edge v0v3 with the other vertices in U \\ avoid."""
    if not g.has_edge(v0, v3):
        raise InputError("v0v3 must be an edge")
    tail = path_through(g, v0, v3, set(u) - set(avoid) - {v0, v3})
    if tail is None:
        return None
    return tail  # (v0, ..., v3); closing edge v3-v0 is the forced one


def cycle_edges(cycle: tuple[int, ...]):
    """The edge set of a vertex cycle given as a tuple."""
    k = len(cycle)
    return [canon_pair(cycle[i], cycle[(i + 1) % k]) for i in range(k)]


def is_valid_cycle(g: Graph, cycle: tuple[int, ...]) -> bool:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        return False
    return all(e in g.edges for e in cycle_edges(cycle))
