"""
Isomorphism of small unweighted graphs by degree refinement and backtracking.

Weights are ignored: two weighted graphs are isomorphic when their
underlying graphs are.
"""
import collections
import logging

from app.constants import settings
from app.exceptions import ResourceLimit
from app.models.tree import WeightedGraph

logger = logging.getLogger(__name__)


def _signatures(adj: list[set[int]]) -> list[tuple[int, tuple[int, ...]]]:
    deg = [len(a) for a in adj]
    return [(deg[u], tuple(sorted(deg[v] for v in adj[u]))) for u in range(len(adj))]


def find_isomorphism(g1: WeightedGraph, g2: WeightedGraph, max_order: int | None = None) -> list[int] | None:
    """
    Map vertex indices of g1 onto g2 preserving adjacency.

    Args:
        g1: first graph
        g2: second graph
        max_order: refuse graphs larger than this, defaults to
            settings.isomorphism_max_order

    Returns:
        mapping[i] = image of vertex i, or None when not isomorphic

    Raises:
        ResourceLimit: if either graph is larger than max_order
    """
    limit = settings.isomorphism_max_order if max_order is None else max_order
    n = g1.n
    if max(n, g2.n) > limit:
        raise ResourceLimit(f"isomorphism search is capped at {limit} vertices")
    if n != g2.n or g1.edge_count != g2.edge_count:
        return None
    if n == 0:
        return []

    adj1 = [set(a) for a in g1.adjacency]
    adj2 = [set(a) for a in g2.adjacency]
    sig1, sig2 = _signatures(adj1), _signatures(adj2)
    if sorted(sig1) != sorted(sig2):
        return None

    candidates = collections.defaultdict(list)
    for v in range(n):
        candidates[sig2[v]].append(v)

    order = sorted(range(n), key=lambda u: (len(candidates[sig1[u]]), u))
    mapping = [-1] * n
    taken = [False] * n

    def consistent(u: int, v: int) -> bool:
        for w in adj1[u]:
            if mapping[w] != -1 and mapping[w] not in adj2[v]:
                return False
        return True

    def backtrack(pos: int) -> bool:
        if pos == n:
            return True
        u = order[pos]
        for v in candidates[sig1[u]]:
            if taken[v] or not consistent(u, v):
                continue
            mapping[u], taken[v] = v, True
            if backtrack(pos + 1):
                return True
            taken[v] = False
        mapping[u] = -1
        return False

    if not backtrack(0):
        return None
    return mapping


def are_isomorphic(g1: WeightedGraph, g2: WeightedGraph, max_order: int | None = None) -> bool:
    return find_isomorphism(g1, g2, max_order) is not None
