"""Closed-form conflict-free connection numbers for trees of diameter at most 4.

A tree of diameter 4 has a unique central vertex ``u`` with eccentricity 2.
Its neighbors split into pendant vertices and branch vertices whose other
neighbors are all leaves. The minimum number of colors is
``max(k + b, deg(u))`` where ``k`` counts the branch vertices and ``b`` is
derived from their degrees; the optimal coloring reuses branch-spoke colors
on leaf edges according to a realizable out-degree sequence.
"""

from dataclasses import dataclass
from typing import Sequence

from .errors import UnsupportedShapeError
from .graph import Graph, edge_key, is_tree, metrics


def _ceil_div(num: int, den: int) -> int:
    """Exact ceiling of num/den for positive den, correct for negatives."""
    return -((-num) // den)


def s_membership(scores: Sequence[int]) -> bool:
    """Decide whether a score tuple is realizable as out-degrees.

    A tuple ``(s_1, ..., s_r)`` is realizable when there is a set of
    distinct ordered pairs over labels ``1..r``, never containing both a
    pair and its reverse, in which label ``i`` occurs ``s_i`` times as the
    first component. Equivalently, the tuple is the out-degree sequence of
    an orientation of some subgraph of the complete graph on ``r`` labels.

    The test checks, on the non-increasing rearrangement, that every prefix
    sum satisfies ``sum(s_1..s_j) <= (2r - 1 - j) * j / 2``.
    """
    s = _validated(scores)
    r = len(s)
    ordered = sorted(s, reverse=True)
    prefix = 0
    for j, value in enumerate(ordered, start=1):
        prefix += value
        if 2 * prefix > (2 * r - 1 - j) * j:
            return False
    return True


def s_witness(scores: Sequence[int]) -> list[tuple[int, int]] | None:
    """Construct a pair sequence realizing the score tuple, or ``None``.

    Returns pairs over 1-based labels matching the *original* order of
    ``scores``: label ``i`` appears exactly ``scores[i-1]`` times as a
    first component, all pairs are distinct, and no pair occurs together
    with its reverse. Returns ``None`` exactly when the tuple is not
    realizable.
    """
    s = _validated(scores)
    if not s_membership(s):
        return None
    r = len(s)
    order = sorted(range(r), key=lambda i: -s[i])
    pairs = _witness_sorted(tuple(s[i] for i in order))
    relabel = {pos + 1: orig + 1 for pos, orig in enumerate(order)}
    return [(relabel[a], relabel[b]) for a, b in pairs]


def _validated(scores: Sequence[int]) -> list[int]:
    s = [int(x) for x in scores]
    if not s:
        raise ValueError("score tuple must be nonempty")
    if any(x < 0 for x in s):
        raise ValueError("score entries must be non-negative")
    return s


def _witness_sorted(s: tuple[int, ...]) -> list[tuple[int, int]]:
    """Witness for a realizable non-increasing tuple, by induction on length.

    The largest entry ``s[0] = p - q`` (with ``p = r - 1``) is peeled off:
    ``q`` of the remaining entries are decremented, the shorter tuple is
    solved recursively, and the peeled label is wired to the rest. The
    decremented positions are the earliest ones that keep the remainder
    sorted; when the entry just past position ``q`` ties with it, the
    decrements shift to the tail of that run of equal values.
    """
    r = len(s)
    if all(v == 0 for v in s):
        return []
    p = r - 1
    q = p - s[0]
    if s[q] > s[q + 1]:
        dec = list(range(1, q + 1))
    else:
        val = s[q]
        start = s.index(val)
        end = max(i for i in range(r) if s[i] == val)
        needed = q - (start - 1) if start >= 1 else q
        dec = list(range(1, start)) + list(range(end - needed + 1, end + 1))
    dec_set = set(dec)
    reduced = tuple(s[i] - 1 if i in dec_set else s[i] for i in range(1, r))
    assert all(reduced[i] >= reduced[i + 1] for i in range(len(reduced) - 1))
    sub = _witness_sorted(reduced)
    pairs = [(a + 1, b + 1) for a, b in sub]
    pairs.extend((i + 1, 1) for i in dec)
    pairs.extend((1, j + 1) for j in range(1, r) if j not in dec_set)
    return pairs


@dataclass(frozen=True)
class Diam4TreeShape:
    """Parameterization of a diameter-4 tree around its central vertex.

    ``branches`` lists the non-pendant neighbors of the center sorted by
    non-increasing degree; ``degrees[i]`` is the degree of ``branches[i]``;
    ``children`` maps each branch vertex to its leaf children.
    """

    center: int
    pendants: tuple[int, ...]
    branches: tuple[int, ...]
    degrees: tuple[int, ...]
    children: dict[int, tuple[int, ...]]

    @property
    def k(self) -> int:
        return len(self.branches)

    @property
    def pendant_count(self) -> int:
        return len(self.pendants)

    @property
    def center_degree(self) -> int:
        return self.k + self.pendant_count


def diam4_params(g: Graph) -> Diam4TreeShape:
    """Identify the central vertex of a diameter-4 tree and split its neighbors."""
    if not is_tree(g):
        raise UnsupportedShapeError("input is not a tree")
    met = metrics(g)
    if met.diameter != 4:
        raise UnsupportedShapeError(f"tree has diameter {met.diameter}, expected 4")
    centers = [v for v in range(g.n) if met.ecc[v] == 2]
    if len(centers) != 1:
        raise UnsupportedShapeError("no unique eccentricity-2 vertex")
    u = centers[0]
    pendants = []
    branch_list = []
    for w in g.adjacency[u]:
        if g.degree(w) == 1:
            pendants.append(w)
        else:
            branch_list.append(w)
    branch_list.sort(key=lambda v: (-g.degree(v), v))
    children: dict[int, tuple[int, ...]] = {}
    for v in branch_list:
        kids = tuple(w for w in g.adjacency[v] if w != u)
        if any(g.degree(w) != 1 for w in kids):
            raise UnsupportedShapeError("branch neighbors must be leaves")
        children[v] = kids
    if len(branch_list) < 2:
        raise UnsupportedShapeError("diameter-4 tree must have at least two branches")
    return Diam4TreeShape(
        center=u,
        pendants=tuple(pendants),
        branches=tuple(branch_list),
        degrees=tuple(g.degree(v) for v in branch_list),
        children=children,
    )


def _diam4_b(degrees: Sequence[int]) -> tuple[int, list[int]]:
    """The new-color count b and the adjusted degree offsets, exactly.

    Uses pure integer arithmetic; the ceiling of a prefix average must not
    be corrupted by floating point at equality boundaries.
    """
    k = len(degrees)
    offsets = [degrees[i] - k + i for i in range(k)]  # c_{i+1} = p_{i+1} - k + i
    best = 0
    prefix = 0
    for j in range(1, k + 1):
        prefix += offsets[j - 1]
        best = max(best, _ceil_div(prefix, j))
    return best, offsets


def cfc_tree(g: Graph) -> int:
    """Minimum colors making the tree conflict-free connected, in closed form.

    Only trees of diameter at most 4 are supported; anything else raises
    :class:`UnsupportedShapeError` so callers can fall back to exact search.
    """
    if not is_tree(g):
        raise UnsupportedShapeError("input is not a tree")
    if g.n == 1:
        return 0
    if g.n == 2:
        return 1
    met = metrics(g)
    if met.diameter in (2, 3):
        return max(g.degree(v) for v in range(g.n))
    if met.diameter == 4:
        shape = diam4_params(g)
        b, _ = _diam4_b(shape.degrees)
        return max(shape.k + b, shape.center_degree)
    raise UnsupportedShapeError(f"no closed form for tree diameter {met.diameter}")


def construct_tree_coloring(g: Graph) -> dict[tuple[int, int], int]:
    """An optimal conflict-free connection coloring for a tree of diameter <= 4.

    Uses exactly :func:`cfc_tree` colors. For diameter 4 the recipe colors
    the spoke to branch ``i`` with color ``i`` and each pendant spoke with a
    fresh color, then distributes spoke colors onto leaf edges following a
    witness for the realizable reuse counts ``max(p_i - 1 - b, 0)``; leaf
    edges left over take the remaining non-spoke colors, reused across
    branches.
    """
    if not is_tree(g):
        raise UnsupportedShapeError("input is not a tree")
    if g.n == 1:
        return {}
    if g.n == 2:
        return {g.edges[0]: 1}
    met = metrics(g)
    if met.diameter == 2:
        return {e: i + 1 for i, e in enumerate(g.edges)}
    if met.diameter == 3:
        return _double_star_coloring(g)
    if met.diameter != 4:
        raise UnsupportedShapeError(f"no coloring recipe for tree diameter {met.diameter}")

    shape = diam4_params(g)
    k = shape.k
    b, _ = _diam4_b(shape.degrees)
    total = max(k + b, shape.center_degree)
    reuse = [max(shape.degrees[i] - 1 - b, 0) for i in range(k)]
    witness = s_witness(reuse)
    if witness is None:  # pragma: no cover - realizability is guaranteed
        raise AssertionError("reuse counts must be realizable")
    old_per_branch: dict[int, list[int]] = {i: [] for i in range(1, k + 1)}
    for i, j in witness:
        old_per_branch[i].append(j)

    coloring: dict[tuple[int, int], int] = {}
    for i, v in enumerate(shape.branches, start=1):
        coloring[edge_key(shape.center, v)] = i
    for j, w in enumerate(shape.pendants, start=1):
        coloring[edge_key(shape.center, w)] = k + j
    for i, v in enumerate(shape.branches, start=1):
        olds = sorted(old_per_branch[i])
        fresh = iter(range(k + 1, total + 1))
        for idx, child in enumerate(shape.children[v]):
            if idx < len(olds):
                coloring[edge_key(v, child)] = olds[idx]
            else:
                coloring[edge_key(v, child)] = next(fresh)
    return coloring


def _double_star_coloring(g: Graph) -> dict[tuple[int, int], int]:
    centers = [v for v in range(g.n) if g.degree(v) >= 2]
    assert len(centers) == 2 and g.has_edge(*centers)
    x, y = sorted(centers, key=lambda v: -g.degree(v))
    coloring: dict[tuple[int, int], int] = {}
    nx_legs = [w for w in g.adjacency[x] if w != y]
    ny_legs = [w for w in g.adjacency[y] if w != x]
    for i, w in enumerate(nx_legs, start=1):
        coloring[edge_key(x, w)] = i
    coloring[edge_key(x, y)] = len(nx_legs) + 1
    for i, w in enumerate(ny_legs, start=1):
        coloring[edge_key(y, w)] = i
    return coloring
