"""Exhaustive computation of conflict-free (vertex-)connection numbers.

The search tries color counts ``k = lo, lo+1, ...`` in turn. For each
level it enumerates colorings in lexicographic order with colors
introduced in ascending order (restricted-growth strings), so the first
item always gets color 1 and the 2-color level visits ``2**(m-1)``
candidates at most. Two sound prunes are applied:

* incident cut edges must receive different colors (the lone simple path
  between their far endpoints is their two-edge path, so equal colors can
  never be completed to a valid coloring);
* once every simple path between some vertex pair is fully colored and
  none of them is conflict-free, the partial coloring is rejected. Paths
  are precomputed per pair, so each is inspected exactly once at the tree
  depth where its last item receives a color.

Partial-coloring failures on incomplete pairs are never used to reject:
conflict-freeness is not monotone under extension, and an unsound prune
would corrupt the oracle.
"""

import time
from dataclasses import dataclass

from .errors import BudgetExceededError, DisconnectedGraphError, RangeExhaustedError
from .graph import Graph, cut_structure, edge_key, is_connected
from . import checker

DEFAULT_STEP_BUDGET = 50_000_000
TWO_COLOR_ITEM_LIMIT = 24
MULTI_COLOR_ITEM_LIMIT = 16
PATH_TABLE_LIMIT = 500_000


@dataclass(frozen=True)
class SolveReport:
    """Result of an exhaustive search, with the found certificate."""

    value: int
    certificate: dict
    states_examined: int
    elapsed: float


def _level_item_limit(k: int) -> int:
    return TWO_COLOR_ITEM_LIMIT if k == 2 else MULTI_COLOR_ITEM_LIMIT


def _all_simple_paths(g: Graph, u: int, v: int) -> list[tuple[int, ...]]:
    """Every simple u-v path as a vertex tuple, endpoints included."""
    paths: list[tuple[int, ...]] = []
    visited = [False] * g.n
    visited[u] = True
    path = [u]
    stack: list = [iter(g.adjacency[u])]
    while stack:
        it = stack[-1]
        advanced = False
        for w in it:
            if visited[w]:
                continue
            if w == v:
                paths.append(tuple(path) + (v,))
                continue
            visited[w] = True
            path.append(w)
            stack.append(iter(g.adjacency[w]))
            advanced = True
            break
        if not advanced:
            stack.pop()
            visited[path.pop()] = False
    return paths


def _edge_path_table(g: Graph):
    """Per non-adjacent pair, all simple paths as edge-index tuples.

    Returns ``(npairs, pending_init, paths_at)`` where ``paths_at[d]``
    lists ``(pair_id, path)`` for every path whose highest edge index is
    ``d``. Adjacent pairs are excluded: their single shared edge is always
    a conflict-free path.
    """
    edge_index = {e: i for i, e in enumerate(g.edges)}
    pending_init: list[int] = []
    paths_at: list[list[tuple[int, tuple[int, ...]]]] = [[] for _ in range(g.m)]
    total = 0
    pair_id = 0
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            vertex_paths = _all_simple_paths(g, u, v)
            count = 0
            for p in vertex_paths:
                epath = tuple(edge_index[edge_key(a, b)] for a, b in zip(p, p[1:]))
                paths_at[max(epath)].append((pair_id, epath))
                count += 1
                total += 1
                if total > PATH_TABLE_LIMIT:
                    raise BudgetExceededError(
                        f"simple-path table exceeds {PATH_TABLE_LIMIT} entries"
                    )
            pending_init.append(count)
            pair_id += 1
    return pair_id, pending_init, paths_at


def _vertex_path_table(g: Graph):
    """Per pair, all simple paths as vertex tuples, grouped by last-colored vertex."""
    pending_init: list[int] = []
    paths_at: list[list[tuple[int, tuple[int, ...]]]] = [[] for _ in range(g.n)]
    total = 0
    pair_id = 0
    for u in range(g.n):
        for v in range(u + 1, g.n):
            vertex_paths = _all_simple_paths(g, u, v)
            for p in vertex_paths:
                paths_at[max(p)].append((pair_id, p))
                total += 1
                if total > PATH_TABLE_LIMIT:
                    raise BudgetExceededError(
                        f"simple-path table exceeds {PATH_TABLE_LIMIT} entries"
                    )
            pending_init.append(len(vertex_paths))
            pair_id += 1
    return pair_id, pending_init, paths_at


def _bridge_conflicts(g: Graph) -> list[list[int]]:
    """For each edge index, the earlier incident cut-edge indices to avoid."""
    bridges = cut_structure(g).bridges
    conflicts: list[list[int]] = [[] for _ in range(g.m)]
    for i, e in enumerate(g.edges):
        if e not in bridges:
            continue
        for j in range(i):
            f = g.edges[j]
            if f in bridges and (e[0] in f or e[1] in f):
                conflicts[i].append(j)
    return conflicts


class _Search:
    """Shared restricted-growth search over a fixed item order."""

    def __init__(self, nitems, k, npairs, pending_init, paths_at, conflicts, budget, spent):
        self.nitems = nitems
        self.k = k
        self.colors = [0] * nitems
        self.pending = list(pending_init)
        self.satisfied = [False] * npairs
        self.paths_at = paths_at
        self.conflicts = conflicts
        self.budget = budget
        self.spent = spent  # single-element list shared across levels

    def _path_conflict_free(self, path) -> bool:
        colors = self.colors
        seen: dict[int, int] = {}
        for idx in path:
            c = colors[idx]
            seen[c] = seen.get(c, 0) + 1
        for count in seen.values():
            if count == 1:
                return True
        return False

    def run(self) -> list[int] | None:
        return self._place(0, 0)

    def _place(self, depth: int, maxc: int) -> list[int] | None:
        if depth == self.nitems:
            return list(self.colors)
        remaining = self.nitems - depth - 1
        colors = self.colors
        top = min(maxc + 1, self.k)
        for c in range(1, top + 1):
            if self.k - max(maxc, c) > remaining:
                continue
            skip = False
            for j in self.conflicts[depth]:
                if colors[j] == c:
                    skip = True
                    break
            if skip:
                continue
            self.spent[0] += 1
            if self.budget is not None and self.spent[0] > self.budget:
                raise BudgetExceededError(
                    f"search exceeded {self.budget} states", lo=None, hi=None
                )
            colors[depth] = c
            undo: list[tuple[int, bool]] = []
            viable = True
            for pair, path in self.paths_at[depth]:
                if self.satisfied[pair]:
                    continue
                if self._path_conflict_free(path):
                    self.satisfied[pair] = True
                    undo.append((pair, True))
                else:
                    self.pending[pair] -= 1
                    undo.append((pair, False))
                    if self.pending[pair] == 0:
                        viable = False
                        break
            if viable:
                result = self._place(depth + 1, max(maxc, c))
                if result is not None:
                    return result
            for pair, was_satisfied in undo:
                if was_satisfied:
                    self.satisfied[pair] = False
                else:
                    self.pending[pair] += 1
            colors[depth] = 0
        return None


def exact_cfc(
    g: Graph,
    lo: int = 1,
    hi: int | None = None,
    *,
    step_budget: int | None = DEFAULT_STEP_BUDGET,
) -> SolveReport:
    """Minimum edge colors in ``[lo, hi]`` making the graph conflict-free connected.

    Levels are tried in ascending order and each level enumerates colorings
    using exactly that many colors, so the first hit is minimal. Raises
    :class:`RangeExhaustedError` when no level succeeds and
    :class:`BudgetExceededError` when a level is too large for the
    configured exhaustion limits (2 colors: up to 24 edges, 3 or more: up
    to 16 edges) or the step budget runs out.
    """
    start = time.perf_counter()
    if not is_connected(g):
        raise DisconnectedGraphError("graph is not connected")
    if lo < 1:
        raise ValueError("lo must be at least 1")
    if g.n == 1:
        return SolveReport(0, {}, 0, time.perf_counter() - start)
    if hi is None:
        hi = max(lo, g.n - 1)
    spent = [0]
    k = lo
    if k == 1:
        mono = {e: 1 for e in g.edges}
        spent[0] += 1
        if g.m == g.n * (g.n - 1) // 2:
            # adjacent pairs only; one color suffices exactly for complete graphs
            return SolveReport(1, mono, spent[0], time.perf_counter() - start)
        k = 2
    if k > hi:
        raise RangeExhaustedError(lo, hi)
    npairs, pending_init, paths_at = _edge_path_table(g)
    conflicts = _bridge_conflicts(g)
    for level in range(k, hi + 1):
        if g.m > _level_item_limit(level):
            raise BudgetExceededError(
                f"{level}-color exhaustion limited to {_level_item_limit(level)} edges, "
                f"graph has {g.m}",
                lo=level,
                hi=hi,
            )
        try:
            found = _Search(
                g.m, level, npairs, pending_init, paths_at, conflicts, step_budget, spent
            ).run()
        except BudgetExceededError as exc:
            raise BudgetExceededError(str(exc), lo=level, hi=hi) from None
        if found is not None:
            certificate = {e: found[i] for i, e in enumerate(g.edges)}
            assert checker.is_cfc_coloring(g, certificate, step_budget=None)
            return SolveReport(level, certificate, spent[0], time.perf_counter() - start)
    raise RangeExhaustedError(lo, hi)


def exact_vcfc(
    g: Graph,
    lo: int = 2,
    hi: int | None = None,
    *,
    step_budget: int | None = DEFAULT_STEP_BUDGET,
) -> SolveReport:
    """Minimum vertex colors in ``[lo, hi]`` for conflict-free vertex-connectivity.

    The default upper bound is ``ceil(log2(n + 1))``; color-permutation
    symmetry is broken by fixing vertex 0 to color 1. Limits and errors
    match :func:`exact_cfc`, with the item limits applied to the vertex
    count.
    """
    start = time.perf_counter()
    if not is_connected(g):
        raise DisconnectedGraphError("graph is not connected")
    if g.n == 1:
        return SolveReport(1, {0: 1}, 0, time.perf_counter() - start)
    if lo < 1:
        raise ValueError("lo must be at least 1")
    lo = max(lo, 2)  # one color never yields a uniquely colored path vertex
    if hi is None:
        bound = 2
        while (1 << bound) < g.n + 1:
            bound += 1
        hi = max(lo, bound)
    spent = [0]
    npairs, pending_init, paths_at = _vertex_path_table(g)
    conflicts: list[list[int]] = [[] for _ in range(g.n)]
    for level in range(lo, hi + 1):
        if g.n > _level_item_limit(level):
            raise BudgetExceededError(
                f"{level}-color exhaustion limited to {_level_item_limit(level)} vertices, "
                f"graph has {g.n}",
                lo=level,
                hi=hi,
            )
        try:
            found = _Search(
                g.n, level, npairs, pending_init, paths_at, conflicts, step_budget, spent
            ).run()
        except BudgetExceededError as exc:
            raise BudgetExceededError(str(exc), lo=level, hi=hi) from None
        if found is not None:
            certificate = {v: found[v] for v in range(g.n)}
            assert checker.is_vcfc_coloring(g, certificate, step_budget=None)
            return SolveReport(level, certificate, spent[0], time.perf_counter() - start)
    raise RangeExhaustedError(lo, hi)
