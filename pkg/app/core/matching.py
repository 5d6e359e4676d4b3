"""
Maximum matchings and alternating paths of weighted trees.

Matchings are enumerated once per (tree, cap) and cached; every quantity of
the inverse formula (alpha, alpha-bar, mu, m) is read off that table.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from math import prod

from app.constants import settings
from app.core.tree import matching_number
from app.exceptions import InvariantViolation, NotApplicable, ResourceLimit
from app.models.matching import AlternatingPath, MatchablePairRecord, Matching, MatchingSummary
from app.models.tree import WeightedTree

logger = logging.getLogger(__name__)

IndexEdge = tuple[int, int]
IndexMatching = frozenset[IndexEdge]


def _key(i: int, j: int) -> IndexEdge:
    return (i, j) if i < j else (j, i)


# sentinel for an exhausted choice iterator
_DONE = object()


def _subtree_optima(t: WeightedTree) -> tuple[list[int], list[list[int]], list[int], list[int]]:
    """
    Top-down vertex order and children, plus for every vertex v the size of
    the largest matching of its subtree with v left free (free[v]) and
    without restriction (best[v]).
    """
    parent, depth = t.rooted
    order = sorted(range(t.n), key=lambda v: depth[v])
    children: list[list[int]] = [[] for _ in range(t.n)]
    for v in order[1:]:
        children[parent[v]].append(v)
    free = [0] * t.n
    best = [0] * t.n
    for v in reversed(order):
        free[v] = sum(best[c] for c in children[v])
        best[v] = max([free[v]] + [1 + free[c] + free[v] - best[c] for c in children[v]])
    return order, children, free, best


def _choices(v: int, taken: bool, children, free, best) -> list[int | None]:
    """Children v may be matched to (None: v stays free) without losing optimality."""
    if taken:
        return [None]
    out: list[int | None] = [None] if free[v] == best[v] else []
    out.extend(c for c in children[v] if 1 + free[c] + free[v] - best[c] == best[v])
    return out


@lru_cache(maxsize=512)
def _enumerate(t: WeightedTree, cap: int) -> tuple[IndexMatching, ...]:
    """
    All maximum matchings, sorted by their sorted edge lists.

    Vertices are decided top-down, each left free or matched to a child, and
    a choice is offered only if the subtree optima still reach the matching
    number. Every branch ends in a distinct maximum matching, so the work is
    at most n steps per matching and the cap bounds it.
    """
    order, children, free, best = _subtree_optima(t)
    if settings.strict_checks and best[order[0]] != matching_number(t):
        raise InvariantViolation(f"subtree optimum {best[order[0]]} != matching number {matching_number(t)}")

    taken = [False] * t.n
    chosen: list[IndexEdge] = []
    found: list[IndexMatching] = []
    made: list[int | None] = []
    stack = [iter(_choices(order[0], False, children, free, best))]
    while stack:
        level = len(stack) - 1
        if len(made) > level:
            c = made.pop()
            if c is not None:
                taken[c] = False
                chosen.pop()
        c = next(stack[-1], _DONE)
        if c is _DONE:
            stack.pop()
            continue
        v = order[level]
        made.append(c)
        if c is not None:
            taken[c] = True
            chosen.append(_key(v, c))
        if level + 1 < t.n:
            w = order[level + 1]
            stack.append(iter(_choices(w, taken[w], children, free, best)))
            continue
        found.append(frozenset(chosen))
        if len(found) > cap:
            raise ResourceLimit(f"more than {cap} maximum matchings")

    found.sort(key=sorted)
    logger.debug("tree on %d vertices: matching number %d, %d maximum matchings", t.n, best[order[0]], len(found))
    return tuple(found)


def _weight_product(t: WeightedTree, edges) -> Fraction:
    return prod((t.adjacency[i][j] for i, j in edges), start=Fraction(1))


def _alternating(path_edges: list[IndexEdge], candidates) -> list[IndexMatching]:
    """Matchings among candidates holding exactly the odd-numbered edges of the path."""
    if len(path_edges) % 2 == 0:
        return []
    return [
        m for m in candidates
        if all((e in m) == (k % 2 == 0) for k, e in enumerate(path_edges))
    ]


def _path_edges(t: WeightedTree, i: int, j: int) -> list[IndexEdge]:
    path = t.path_indices(i, j)
    return [_key(path[k], path[k + 1]) for k in range(len(path) - 1)]


def _path_witnesses(t: WeightedTree, table: tuple[IndexMatching, ...], i: int, j: int):
    """Path edges and the maximum matchings that make the i–j path alternating."""
    path_edges = _path_edges(t, i, j)
    return path_edges, _alternating(path_edges, table)


@lru_cache(maxsize=512)
def _alternating_table(t: WeightedTree, cap: int) -> dict[IndexEdge, tuple[list[IndexEdge], list[IndexMatching]]]:
    table = _enumerate(t, cap)
    holders: dict[IndexEdge, list[IndexMatching]] = {}
    for m in table:
        for e in m:
            holders.setdefault(e, []).append(m)
    depth = t.depth
    out = {}
    for i in range(t.n):
        for j in range(i + 1, t.n):
            # even distance: never alternating
            if (depth[i] + depth[j]) % 2 == 0:
                continue
            path_edges = _path_edges(t, i, j)
            witnesses = _alternating(path_edges, holders.get(path_edges[0], ()))
            if witnesses:
                out[(i, j)] = (path_edges, witnesses)
    return out



def _cap(cap: int | None) -> int:
    return settings.matching_cap if cap is None else cap


def _to_matching(t: WeightedTree, m: IndexMatching) -> Matching:
    edges = sorted(m)
    return Matching(
        edges=tuple((t.label(i), t.label(j)) for i, j in edges),
        weight_product=_weight_product(t, edges),
    )


def index_matchings(t: WeightedTree, cap: int | None = None) -> tuple[IndexMatching, ...]:
    """Maximum matchings as sets of (i, j) index pairs, i < j."""
    return _enumerate(t, _cap(cap))


def alternating_index_pairs(t: WeightedTree, cap: int | None = None):
    """{(i, j): (path edges, witness matchings)} over maximally matchable pairs."""
    return _alternating_table(t, _cap(cap))


def m_value(t: WeightedTree, cap: int | None = None) -> Fraction:
    """m(T): sum over maximum matchings of the squared weight product."""
    return sum((_weight_product(t, m) ** 2 for m in index_matchings(t, cap)), start=Fraction(0))


def maximum_matchings(t: WeightedTree, cap: int | None = None) -> MatchingSummary:
    """
    Enumerate every maximum matching of the tree.

    Args:
        t: the tree
        cap: enumeration limit, defaults to settings.matching_cap

    Returns:
        MatchingSummary with m(T) and the per-vertex alternating path census

    Raises:
        ResourceLimit: if there are more than cap maximum matchings
    """
    table = index_matchings(t, cap)
    census = {label: 0 for label in t.vertices}
    for i, j in alternating_index_pairs(t, cap):
        census[t.label(i)] += 1
        census[t.label(j)] += 1
    return MatchingSummary(
        matching_number=matching_number(t),
        all_max_matchings=tuple(_to_matching(t, m) for m in table),
        m_value=m_value(t, cap),
        alternating_census=census,
    )


def pendant_edge_in_some_matching(t: WeightedTree, e: tuple[str, str], cap: int | None = None) -> Matching:
    """
    A maximum matching containing the pendant edge e.

    Takes any maximum matching; if e is missing, its non-leaf end is covered
    by some matching edge, and swapping that edge for e keeps the size.
    """
    i, j = t.index_of(e[0]), t.index_of(e[1])
    if j not in t.adjacency[i]:
        raise NotApplicable(f"{e[0]}-{e[1]} is not an edge")
    edge = _key(i, j)
    table = index_matchings(t, cap)

    if len(t.adjacency[i]) != 1 and len(t.adjacency[j]) != 1:
        for m in table:
            if edge in m:
                return _to_matching(t, m)
        raise NotApplicable(f"non-pendant edge {e[0]}-{e[1]} lies in no maximum matching")

    m = table[0]
    if edge not in m:
        hub = j if len(t.adjacency[i]) == 1 else i
        covering = [f for f in m if hub in f]
        if not covering:
            raise InvariantViolation(f"{e[0]}-{e[1]} could extend a maximum matching")
        m = (m - {covering[0]}) | {edge}
        if m not in table:
            raise InvariantViolation("swapped matching is not maximum")
    return _to_matching(t, m)


def matchable_pair(t: WeightedTree, u: str, v: str, cap: int | None = None) -> MatchablePairRecord:
    """
    Witnesses, alpha, alpha-bar and mu for the pair {u, v}.

    alpha is the product of the path weights, negated when the distance is
    3 mod 4; alpha-bar(M) is the product of the weights of M off the path;
    mu = alpha * sum(alpha-bar^2). Pairs that are not maximally matchable
    get alpha = mu = 0.
    """
    i, j = t.index_of(u), t.index_of(v)
    if i == j:
        raise NotApplicable("a vertex is never matchable with itself")
    path_edges, witnesses = _path_witnesses(t, index_matchings(t, cap), i, j)
    distance = len(path_edges)
    if not witnesses:
        return MatchablePairRecord(
            pair=(u, v), distance=distance, witnesses=(), alpha_path=0, alpha_bars=(), mu=0,
        )

    alpha, bars, mu = mu_terms(t, path_edges, witnesses)
    return MatchablePairRecord(
        pair=(u, v),
        distance=distance,
        witnesses=tuple(_to_matching(t, m) for m in witnesses),
        alpha_path=alpha,
        alpha_bars=bars,
        mu=mu,
    )


def mu_terms(t: WeightedTree, path_edges: list[IndexEdge], witnesses) -> tuple[Fraction, tuple[Fraction, ...], Fraction]:
    """(alpha, alpha-bars, mu) for an alternating path and its witness matchings."""
    sign = 1 if len(path_edges) % 4 == 1 else -1
    alpha = sign * _weight_product(t, path_edges)
    on_path = set(path_edges)
    bars = tuple(_weight_product(t, m - on_path) for m in witnesses)
    return alpha, bars, alpha * sum((b * b for b in bars), start=Fraction(0))


def alternating_paths(t: WeightedTree, cap: int | None = None) -> list[AlternatingPath]:
    """Every maximally matchable pair, with its path length, in index order."""
    return [
        AlternatingPath(u=t.label(i), v=t.label(j), length=len(path_edges), witness_count=len(witnesses))
        for (i, j), (path_edges, witnesses) in sorted(alternating_index_pairs(t, cap).items())
    ]
