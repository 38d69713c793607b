"""Immutable simple-graph core: construction, distance metrics, and cut structure.

Vertices are dense indices ``0..n-1``. Edges are unordered pairs stored
canonically as ``(u, v)`` with ``u < v``, sorted lexicographically. All
derived structures are immutable and safe to share between threads.
"""

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DisconnectedGraphError


def edge_key(u: int, v: int) -> tuple[int, int]:
    """Canonical form of an undirected edge."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Construct through :meth:`from_edges`, which validates and canonicalizes.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        if n < 1:
            raise ValueError(f"vertex count must be positive, got {n}")
        seen: set[tuple[int, int]] = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            k = edge_key(u, v)
            if k in seen:
                raise ValueError(f"duplicate edge ({k[0]}, {k[1]})")
            seen.add(k)
        canon = tuple(sorted(seen))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in canon:
            adj[u].append(v)
            adj[v].append(u)
        return cls(n=n, edges=canon, adjacency=tuple(tuple(sorted(a)) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        a = self.adjacency[u]
        if len(a) > len(self.adjacency[v]):
            u, v, a = v, u, self.adjacency[v]
        return v in a

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class Metrics:
    """All-pairs hop distances plus the derived eccentricity summary."""

    dist: tuple[tuple[int, ...], ...]
    ecc: tuple[int, ...]
    diameter: int
    radius: int


@dataclass(frozen=True)
class TreeComponent:
    """One connected component of the subgraph induced by the cut edges."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class CutStructure:
    """Bridges, cut vertices, blocks, and the cut-edge forest of a graph."""

    bridges: frozenset[tuple[int, int]]
    cut_vertices: frozenset[int]
    blocks: tuple[tuple[int, ...], ...]
    forest_components: tuple[TreeComponent, ...]


@dataclass(frozen=True)
class Connectivity:
    is_connected: bool
    is_complete: bool
    is_two_connected: bool
    is_two_edge_connected: bool


def _bfs_dist(g: Graph, src: int) -> list[int]:
    dist = [-1] * g.n
    dist[src] = 0
    q = deque([src])
    while q:
        u = q.popleft()
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    return all(d >= 0 for d in _bfs_dist(g, 0))


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def metrics(g: Graph) -> Metrics:
    """BFS-exact distance matrix, eccentricities, diameter, and radius.

    Raises :class:`DisconnectedGraphError` for disconnected input.
    """
    rows = []
    ecc = []
    for src in range(g.n):
        d = _bfs_dist(g, src)
        if any(x < 0 for x in d):
            raise DisconnectedGraphError("graph is not connected")
        rows.append(tuple(d))
        ecc.append(max(d))
    return Metrics(
        dist=tuple(rows),
        ecc=tuple(ecc),
        diameter=max(ecc),
        radius=min(ecc),
    )


def cut_structure(g: Graph) -> CutStructure:
    """Bridges, cut vertices, and blocks in one iterative lowlink DFS.

    Blocks are the maximal subgraphs without a cut vertex, reported as
    vertex sets; single edges count as (trivial) blocks. The cut-edge
    forest groups the bridges into their connected components, each of
    which is a tree.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("graph is not connected")
    n = g.n
    disc = [-1] * n
    low = [0] * n
    bridges: list[tuple[int, int]] = []
    cuts: set[int] = set()
    blocks: list[tuple[int, ...]] = []
    edge_stack: list[tuple[int, int]] = []
    timer = 0

    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        # frames: (vertex, parent, neighbor iterator)
        stack = [(root, -1, iter(g.adjacency[root]))]
        while stack:
            v, parent, it = stack[-1]
            pushed = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] < 0:
                    if v == root:
                        root_children += 1
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(g.adjacency[w])))
                    pushed = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if pushed:
                continue
            stack.pop()
            if not stack:
                continue
            u = stack[-1][0]
            if low[v] < low[u]:
                low[u] = low[v]
            if low[v] > disc[u]:
                bridges.append(edge_key(u, v))
            if low[v] >= disc[u]:
                if u != root or root_children >= 2:
                    cuts.add(u)
                block_vertices: set[int] = set()
                while edge_stack:
                    a, b = edge_stack.pop()
                    block_vertices.update((a, b))
                    if (a, b) == (u, v):
                        break
                blocks.append(tuple(sorted(block_vertices)))

    bridge_set = frozenset(bridges)
    comps = _forest_components(g, bridge_set)
    return CutStructure(
        bridges=bridge_set,
        cut_vertices=frozenset(cuts),
        blocks=tuple(sorted(blocks)),
        forest_components=comps,
    )


def _forest_components(g: Graph, bridges: frozenset[tuple[int, int]]) -> tuple[TreeComponent, ...]:
    adj: dict[int, list[int]] = {}
    for u, v in bridges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen: set[int] = set()
    comps = []
    for start in sorted(adj):
        if start in seen:
            continue
        verts = []
        q = deque([start])
        seen.add(start)
        while q:
            u = q.popleft()
            verts.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    q.append(w)
        vset = set(verts)
        comp_edges = tuple(sorted(e for e in bridges if e[0] in vset))
        comps.append(TreeComponent(vertices=tuple(sorted(verts)), edges=comp_edges))
    return tuple(comps)


def connectivity_predicates(g: Graph) -> Connectivity:
    """Connectivity, completeness, 2-connectivity, and 2-edge-connectivity."""
    connected = is_connected(g)
    complete = g.m == g.n * (g.n - 1) // 2
    if not connected:
        return Connectivity(False, complete, False, False)
    cs = cut_structure(g)
    return Connectivity(
        is_connected=True,
        is_complete=complete,
        is_two_connected=g.n >= 3 and not cs.cut_vertices,
        is_two_edge_connected=not cs.bridges,
    )


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on ``vertices``, relabeled densely.

    Returns the relabeled graph together with the sorted tuple of original
    vertex ids; new index ``i`` corresponds to original id ``kept[i]``.
    """
    kept = tuple(sorted(set(vertices)))
    index = {v: i for i, v in enumerate(kept)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges
        if u in index and v in index
    ]
    return Graph.from_edges(len(kept), edges), kept


def end_block_reduction(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Delete every internal (non-cut) vertex of every end block.

    An end block is a block containing exactly one cut vertex. Returns the
    reduced graph plus the original ids of the surviving vertices; a graph
    without end blocks (in particular any 2-connected graph) is returned
    unchanged.
    """
    cs = cut_structure(g)
    removed: set[int] = set()
    for block in cs.blocks:
        block_cuts = [v for v in block if v in cs.cut_vertices]
        if len(block_cuts) == 1:
            removed.update(v for v in block if v not in cs.cut_vertices)
    if not removed:
        return g, tuple(range(g.n))
    return induced_subgraph(g, (v for v in range(g.n) if v not in removed))
