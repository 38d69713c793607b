"""Predicates deciding conflict-free (vertex-)connectivity of colored graphs.

A path is conflict-free when some color occurs on exactly one of its edges
(vertex variant: on exactly one of its vertices, endpoints included). The
pair test enumerates simple paths depth-first with early acceptance; it is
exact but exponential, guarded by an explicit step budget.
"""

from typing import Sequence

from .errors import BudgetExceededError, ColoringError
from .formats import validate_edge_coloring, validate_vertex_coloring
from .graph import Graph, edge_key

DEFAULT_STEP_BUDGET = 10_000_000


class _Budget:
    __slots__ = ("steps", "limit")

    def __init__(self, limit: int | None):
        self.steps = 0
        self.limit = limit

    def spend(self) -> None:
        self.steps += 1
        if self.limit is not None and self.steps > self.limit:
            raise BudgetExceededError(
                f"conflict-free path search exceeded {self.limit} extensions"
            )


def _check_path(g: Graph, path: Sequence[int]) -> None:
    if len(path) < 2:
        raise ValueError("path must contain at least two vertices")
    if len(set(path)) != len(path):
        raise ValueError("path must be simple")
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise ValueError(f"vertices {a} and {b} are not adjacent")


def _has_unique_color(colors: Sequence[int]) -> bool:
    seen: dict[int, int] = {}
    for c in colors:
        seen[c] = seen.get(c, 0) + 1
    return any(count == 1 for count in seen.values())


def is_conflict_free_path_edges(
    g: Graph, coloring: dict[tuple[int, int], int], path: Sequence[int]
) -> bool:
    """True when some color occurs on exactly one edge of the path."""
    _check_path(g, path)
    try:
        colors = [coloring[edge_key(a, b)] for a, b in zip(path, path[1:])]
    except KeyError as exc:
        raise ColoringError(f"edge {exc.args[0]} has no color") from None
    return _has_unique_color(colors)


def is_conflict_free_path_vertices(
    g: Graph, coloring: dict[int, int], path: Sequence[int]
) -> bool:
    """True when some color occurs on exactly one vertex of the path."""
    _check_path(g, path)
    try:
        colors = [coloring[v] for v in path]
    except KeyError as exc:
        raise ColoringError(f"vertex {exc.args[0]} has no color") from None
    return _has_unique_color(colors)


def _exists_cf_path_edges(g, coloring, u, v, budget) -> bool:
    # Depth-first over simple paths, neighbors in ascending order, with an
    # incremental count of colors currently used exactly once. Backtracking
    # is complete: conflict-freeness is not prefix-monotone, so no
    # memoization is sound here.
    counts: dict[int, int] = {}
    uniques = 0
    visited = [False] * g.n
    visited[u] = True
    # frame: (vertex, neighbor iterator, color of the edge that entered vertex)
    stack: list[list] = [[u, iter(g.adjacency[u]), None]]
    while stack:
        frame = stack[-1]
        vtx, it = frame[0], frame[1]
        advanced = False
        for w in it:
            if visited[w]:
                continue
            budget.spend()
            c = coloring[edge_key(vtx, w)]
            if w == v:
                extra = counts.get(c, 0)
                adjusted = uniques + (1 if extra == 0 else (-1 if extra == 1 else 0))
                if adjusted > 0:
                    return True
                continue
            prev = counts.get(c, 0)
            counts[c] = prev + 1
            if prev == 0:
                uniques += 1
            elif prev == 1:
                uniques -= 1
            visited[w] = True
            stack.append([w, iter(g.adjacency[w]), c])
            advanced = True
            break
        if advanced:
            continue
        stack.pop()
        visited[vtx] = False
        c_in = frame[2]
        if c_in is not None:
            prev = counts[c_in]
            counts[c_in] = prev - 1
            if prev == 1:
                uniques -= 1
            elif prev == 2:
                uniques += 1
    return False


def _exists_cf_path_vertices(g, coloring, u, v, budget) -> bool:
    counts: dict[int, int] = {coloring[u]: 1}
    uniques = 1
    visited = [False] * g.n
    visited[u] = True
    stack: list[list] = [[u, iter(g.adjacency[u]), None]]
    while stack:
        frame = stack[-1]
        vtx, it = frame[0], frame[1]
        advanced = False
        for w in it:
            if visited[w]:
                continue
            budget.spend()
            c = coloring[w]
            if w == v:
                extra = counts.get(c, 0)
                adjusted = uniques + (1 if extra == 0 else (-1 if extra == 1 else 0))
                if adjusted > 0:
                    return True
                continue
            prev = counts.get(c, 0)
            counts[c] = prev + 1
            if prev == 0:
                uniques += 1
            elif prev == 1:
                uniques -= 1
            visited[w] = True
            stack.append([w, iter(g.adjacency[w]), c])
            advanced = True
            break
        if advanced:
            continue
        stack.pop()
        visited[vtx] = False
        c_in = frame[2]
        if c_in is not None:
            prev = counts[c_in]
            counts[c_in] = prev - 1
            if prev == 1:
                uniques -= 1
            elif prev == 2:
                uniques += 1
    return False


def exists_cf_path(
    g: Graph,
    coloring: dict[tuple[int, int], int],
    u: int,
    v: int,
    *,
    step_budget: int | None = DEFAULT_STEP_BUDGET,
) -> bool:
    """True when some simple u-v path is conflict-free under the edge coloring."""
    if u == v:
        raise ValueError("endpoints must be distinct")
    validate_edge_coloring(g, coloring)
    return _exists_cf_path_edges(g, coloring, u, v, _Budget(step_budget))


def exists_cf_path_vertices(
    g: Graph,
    coloring: dict[int, int],
    u: int,
    v: int,
    *,
    step_budget: int | None = DEFAULT_STEP_BUDGET,
) -> bool:
    """Vertex-colored variant of :func:`exists_cf_path`."""
    if u == v:
        raise ValueError("endpoints must be distinct")
    validate_vertex_coloring(g, coloring)
    return _exists_cf_path_vertices(g, coloring, u, v, _Budget(step_budget))


def failing_pair_edges(
    g: Graph,
    coloring: dict[tuple[int, int], int],
    *,
    step_budget: int | None = DEFAULT_STEP_BUDGET,
) -> tuple[int, int] | None:
    """First vertex pair with no conflict-free path, or ``None``.

    Adjacent pairs are skipped: their connecting edge is a one-edge path
    whose color trivially occurs exactly once.
    """
    validate_edge_coloring(g, coloring)
    budget = _Budget(step_budget)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            if not _exists_cf_path_edges(g, coloring, u, v, budget):
                return (u, v)
    return None


def failing_pair_vertices(
    g: Graph,
    coloring: dict[int, int],
    *,
    step_budget: int | None = DEFAULT_STEP_BUDGET,
) -> tuple[int, int] | None:
    """Vertex-colored variant of :func:`failing_pair_edges`.

    An adjacent pair is conflict-free exactly when its two endpoint colors
    differ; equal-colored adjacent pairs still need a longer path.
    """
    validate_vertex_coloring(g, coloring)
    budget = _Budget(step_budget)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v) and coloring[u] != coloring[v]:
                continue
            if not _exists_cf_path_vertices(g, coloring, u, v, budget):
                return (u, v)
    return None


def is_cfc_coloring(
    g: Graph,
    coloring: dict[tuple[int, int], int],
    *,
    step_budget: int | None = DEFAULT_STEP_BUDGET,
) -> bool:
    """True when every vertex pair is joined by a conflict-free path."""
    return failing_pair_edges(g, coloring, step_budget=step_budget) is None


def is_vcfc_coloring(
    g: Graph,
    coloring: dict[int, int],
    *,
    step_budget: int | None = DEFAULT_STEP_BUDGET,
) -> bool:
    """Vertex-colored variant of :func:`is_cfc_coloring`."""
    return failing_pair_vertices(g, coloring, step_budget=step_budget) is None


def color_count(coloring: dict) -> int:
    """Number of distinct colors used by a coloring."""
    return len(set(coloring.values()))
