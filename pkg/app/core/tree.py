"""
Tree core: parsing, adjacency matrices, classification and bipartition.
"""
import logging

from app.constants import settings
from app.core import linalg
from app.exceptions import InvariantViolation
from app.models.matrix import ExactMatrix
from app.models.report import ClassTProfile
from app.models.tree import WeightedGraph, WeightedTree

logger = logging.getLogger(__name__)


def parse_tree(text: str) -> WeightedTree:
    """
    Parse an edge-list document into a validated tree.

    Args:
        text: edge-list document

    Returns:
        WeightedTree; vertex order is first appearance unless a vertices
        header declares it

    Raises:
        ParseError, NotATree, ZeroWeight
    """
    return WeightedTree.parse(text)


def parse_graph(text: str) -> WeightedGraph:
    """Same format as parse_tree, without the tree checks."""
    return WeightedGraph.parse(text)


def adjacency_matrix(t: WeightedGraph) -> ExactMatrix:
    return t.adjacency_matrix()


def matching_number(t: WeightedTree) -> int:
    """Size of a maximum matching, by matching leaves to parents bottom-up."""
    parent, depth = t.rooted
    matched = [False] * t.n
    size = 0
    for v in sorted(range(t.n), key=lambda i: -depth[i]):
        p = parent[v]
        if p >= 0 and not matched[v] and not matched[p]:
            matched[v] = matched[p] = True
            size += 1
    return size


def exact_rank(m: ExactMatrix) -> int:
    return linalg.rank(m.array)


def is_singular(t: WeightedTree) -> bool:
    """
    True iff the adjacency matrix has rank < n.

    With strict checks on, also confirms rank = 2 · matching number.
    """
    r = exact_rank(t.adjacency_matrix())
    logger.debug("adjacency rank %d on %d vertices", r, t.n)
    if settings.strict_checks:
        nu = matching_number(t)
        if r != 2 * nu:
            raise InvariantViolation(f"rank {r} != 2 * matching number {nu}")
    return r < t.n


def is_star(t: WeightedGraph) -> bool:
    """K_{1,m} for some m >= 1: one vertex adjacent to every other."""
    if t.n < 2 or t.edge_count != t.n - 1:
        return False
    return any(d == t.n - 1 for d in t.degrees())


def pendant_vertices(t: WeightedTree) -> tuple[str, ...]:
    """Labels of the degree-one vertices, in vertex order."""
    return tuple(t.label(i) for i in t.pendant_indices())


def pendant_edges(t: WeightedTree) -> list[tuple[int, int]]:
    pendant = set(t.pendant_indices())
    return [(i, j) for i, j in t.index_edges() if i in pendant or j in pendant]


def non_pendant_edges(t: WeightedTree) -> list[tuple[int, int]]:
    pendant = set(t.pendant_indices())
    return [(i, j) for i, j in t.index_edges() if i not in pendant and j not in pendant]


def adjacent_pendant_edges(t: WeightedTree) -> list[tuple[str, str, str]]:
    """(centre, leaf, leaf) for every pair of pendant edges sharing a vertex."""
    pendant = set(t.pendant_indices())
    out = []
    for c in range(t.n):
        leaves = sorted(j for j in t.adjacency[c] if j in pendant)
        for a in range(len(leaves)):
            for b in range(a + 1, len(leaves)):
                out.append((t.label(c), t.label(leaves[a]), t.label(leaves[b])))
    return out


def _spine(t: WeightedTree, non_pendant: list[int]) -> tuple[str, ...] | None:
    inner = set(non_pendant)
    if not inner:
        return ()
    inner_adj = {i: sorted(j for j in t.adjacency[i] if j in inner) for i in non_pendant}
    if any(len(nbrs) > 2 for nbrs in inner_adj.values()):
        return None
    ends = [i for i, nbrs in inner_adj.items() if len(nbrs) <= 1]
    walk, prev, cur = [], -1, min(ends)
    while cur != -1:
        walk.append(cur)
        nxt = [j for j in inner_adj[cur] if j != prev]
        prev, cur = cur, (nxt[0] if nxt else -1)
    return tuple(t.label(i) for i in walk)


def classify(t: WeightedTree) -> ClassTProfile:
    """
    Class T membership and shape predicates.

    A tree is in class T when it has a non-pendant vertex and every
    non-pendant vertex has at least one pendant neighbour.
    """
    pendant = set(t.pendant_indices())
    non_pendant = t.non_pendant_indices()
    counts = tuple(sum(1 for j in t.adjacency[i] if j in pendant) for i in non_pendant)

    is_member = bool(non_pendant) and all(c >= 1 for c in counts)
    spine = _spine(t, non_pendant)
    return ClassTProfile(
        non_pendant_vertices=tuple(t.label(i) for i in non_pendant),
        pendant_counts=counts,
        is_member=is_member,
        is_corona=is_member and all(c == 1 for c in counts),
        is_caterpillar=spine is not None,
        is_star=is_star(t) and t.n >= 3,
        spine=spine,
    )


def bipartition(t: WeightedTree) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """Colour classes by parity of distance from v_1; v_1's class comes first."""
    depth = t.depth
    part_a = tuple(t.label(i) for i in range(t.n) if depth[i] % 2 == 0)
    part_b = tuple(t.label(i) for i in range(t.n) if depth[i] % 2 == 1)
    return part_a, part_b
