"""Exhaustive corpora of non-isomorphic graphs for oracle-style tests.

networkx supplies the graph atlas (all graphs up to 7 vertices) and the
free-tree enumerator; the 8-vertex connected corpus is generated by vertex
augmentation from the 7-vertex one with Weisfeiler-Lehman bucketing and
exact isomorphism confirmation.
"""

from functools import lru_cache
from itertools import combinations

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

from cfcgraph.graph import Graph

# Known counts of connected graphs / trees on n unlabeled vertices, used to
# guard the enumerators against silent corpus corruption.
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}


def from_nx(G: nx.Graph) -> Graph:
    nodes = sorted(G.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(index[u], index[v]) for u, v in G.edges()])


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """All non-isomorphic connected graphs on exactly n vertices, n <= 8."""
    if n <= 7:
        out = []
        for G in graph_atlas_g():
            if G.number_of_nodes() == n and (n == 1 or nx.is_connected(G)):
                out.append(from_nx(G))
        result = tuple(out)
    else:
        if n != 8:
            raise ValueError("corpus enumeration supports n <= 8")
        result = tuple(_augment(connected_graphs(7)))
    assert len(result) == CONNECTED_COUNTS[n], (n, len(result))
    return result


def _augment(smaller: tuple[Graph, ...]):
    """Connected (n)-graphs from connected (n-1)-graphs plus one new vertex.

    Every connected graph has a non-cut vertex, so attaching the new vertex
    to every nonempty neighborhood subset reaches every isomorphism class.
    """
    buckets: dict[str, list[nx.Graph]] = {}
    reps = []
    for g in smaller:
        base = to_nx(g)
        k = g.n
        for size in range(1, k + 1):
            for subset in combinations(range(k), size):
                cand = base.copy()
                cand.add_node(k)
                cand.add_edges_from((k, v) for v in subset)
                key = nx.weisfeiler_lehman_graph_hash(cand, iterations=3)
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(cand, seen) for seen in bucket):
                    continue
                bucket.append(cand)
                reps.append(from_nx(cand))
    return reps


@lru_cache(maxsize=None)
def trees(n: int) -> tuple[Graph, ...]:
    """All non-isomorphic trees on n vertices, 2 <= n <= 10."""
    if n == 2:
        result = (Graph.from_edges(2, [(0, 1)]),)
    else:
        result = tuple(from_nx(T) for T in nx.nonisomorphic_trees(n))
    assert len(result) == TREE_COUNTS[n], (n, len(result))
    return result
