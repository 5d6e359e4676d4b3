"""
Structural checks on the sharp graph T# of a tree.
"""
import logging

from app.constants import settings
from app.core.groupinv import sharp_combinatorial
from app.core.isomorphism import are_isomorphic
from app.core.matching import alternating_index_pairs, index_matchings
from app.core.tree import adjacent_pendant_edges, classify, is_singular, is_star
from app.exceptions import InvariantViolation, NotApplicable, NotInClassT, NotOddPath
from app.models.report import DegreeCheckRow, FourConditions, OddPathReport, StructureReport
from app.models.sharp import GroupInverseWitness
from app.models.tree import WeightedTree

logger = logging.getLogger(__name__)


def _sharp(t: WeightedTree, cap: int | None, witness: GroupInverseWitness | None) -> GroupInverseWitness:
    return witness if witness is not None else sharp_combinatorial(t, cap)


def _is_tree(g) -> bool:
    return g.is_connected() and g.edge_count == g.n - 1


def _lemma_four_cycle(t: WeightedTree, cap: int | None) -> tuple[int, int, int, int] | None:
    # a length-3 alternating path whose middle edge lies in some maximum matching
    matched_edges = set().union(*index_matchings(t, cap))
    for (i, j), (path_edges, _) in sorted(alternating_index_pairs(t, cap).items()):
        if len(path_edges) == 3 and path_edges[1] in matched_edges:
            path = t.path_indices(i, j)
            return path[0], path[1], path[2], path[3]
    return None


def _search_four_cycle(pattern: set[tuple[int, int]], n: int) -> tuple[int, int, int, int] | None:
    adj = [set() for _ in range(n)]
    for i, j in pattern:
        adj[i].add(j)
        adj[j].add(i)
    for a in range(n):
        for c in range(a + 1, n):
            common = sorted(adj[a] & adj[c])
            if len(common) >= 2:
                return a, common[0], c, common[1]
    return None


def four_cycle_witness(t: WeightedTree, cap: int | None = None,
                       witness: GroupInverseWitness | None = None) -> tuple[str, str, str, str] | None:
    """
    A 4-cycle of T#, or None when T# has none.

    Tries the alternating-path construction first: if a-b-c-d is alternating
    and b-c lies in another maximum matching, then a, b, c, d is a 4-cycle of
    T#. Otherwise searches T# for two vertices with two common neighbours.
    """
    sharp = _sharp(t, cap, witness)
    pattern = set(sharp.sharp_matrix.nonzero_pattern())
    cycle = _lemma_four_cycle(t, cap)
    if cycle is not None:
        a, b, c, d = cycle
        closing = [(a, b), (b, c), (c, d), (d, a)]
        if not all((min(x, y), max(x, y)) in pattern for x, y in closing):
            raise InvariantViolation("alternating-path 4-cycle is missing from T#")
    else:
        cycle = _search_four_cycle(pattern, t.n)
    if cycle is None:
        return None
    return tuple(t.label(i) for i in cycle)


def analyze_structure(t: WeightedTree, cap: int | None = None,
                      witness: GroupInverseWitness | None = None) -> StructureReport:
    """
    Connectivity, bipartiteness and tree-ness of T#, plus the four
    conditions that are equivalent for singular trees.

    Args:
        t: tree on at least 2 vertices
        cap: maximum-matching enumeration limit
        witness: a precomputed combinatorial sharp for t

    Returns:
        StructureReport; four_conditions is None when t is nonsingular

    Raises:
        NotApplicable: for the one-vertex tree
        ResourceLimit: from the enumeration, or from the isomorphism test
            when t is singular and larger than settings.isomorphism_max_order
    """
    if t.n < 2:
        raise NotApplicable("structure analysis needs at least 2 vertices")
    sharp = _sharp(t, cap, witness)
    g = sharp.sharp_graph
    depth = t.depth
    bipartite = all(
        depth[g.index_of(e.u)] % 2 != depth[g.index_of(e.v)] % 2 for e in g.edges
    )
    sharp_tree = _is_tree(g)

    singular = is_singular(t)
    conditions = None
    if singular:
        conditions = FourConditions(
            alt_path_count_is_n_minus_1=len(alternating_index_pairs(t, cap)) == t.n - 1,
            sharp_is_tree=sharp_tree,
            is_star=is_star(t),
            sharp_isomorphic_underlying=are_isomorphic(g, t),
        )
        if settings.strict_checks and not conditions.agree:
            raise InvariantViolation(f"four conditions disagree: {conditions}")

    cycle = four_cycle_witness(t, cap, sharp)
    report = StructureReport(
        singular=singular,
        sharp_connected=g.is_connected(),
        sharp_bipartite=bipartite,
        sharp_is_tree=sharp_tree,
        sharp_edge_count=g.edge_count,
        four_conditions=conditions,
        has_four_cycle=cycle is not None,
        four_cycle=cycle,
        adjacent_pendant_edges=bool(adjacent_pendant_edges(t)),
        degree_table={label: g.degree(label) for label in g.vertices},
    )
    logger.debug("structure: %s", report)
    return report


def _path_order(t: WeightedTree) -> list[int]:
    ends = [i for i, d in enumerate(t.degrees()) if d == 1]
    order, prev, cur = [], -1, min(ends)
    while cur != -1:
        order.append(cur)
        nxt = [j for j in t.adjacency[cur] if j != prev]
        prev, cur = cur, (nxt[0] if nxt else -1)
    return order


def odd_path_report(t: WeightedTree, cap: int | None = None,
                    witness: GroupInverseWitness | None = None) -> OddPathReport:
    """
    Checks on the sharp graph of an odd path v_1 ... v_{2k+1}, numbered from
    the lower-index end.

    Args:
        t: a path on an odd number (at least 3) of vertices

    Returns:
        OddPathReport: the path is a spanning subtree of T#; v_i v_j is a
        sharp edge iff i + j is odd; for k >= 2, T# has no pendant vertex

    Raises:
        NotOddPath: if t is not such a path
    """
    if t.n < 3 or t.n % 2 == 0 or max(t.degrees()) > 2:
        raise NotOddPath("odd_path_report needs a path on an odd number (>= 3) of vertices")
    sharp = _sharp(t, cap, witness)
    x = sharp.sharp_matrix
    order = _path_order(t)
    position = {v: k + 1 for k, v in enumerate(order)}

    spanning = all(x[order[k], order[k + 1]] != 0 for k in range(t.n - 1))
    pattern = x.nonzero_pattern()
    edge_implies_odd = all((position[i] + position[j]) % 2 == 1 for i, j in pattern)

    matchable = alternating_index_pairs(t, cap)
    odd_implies_edge = True
    vanishing = []
    for i in range(t.n):
        for j in range(i + 1, t.n):
            if (position[i] + position[j]) % 2 == 0:
                continue
            if x[i, j] == 0:
                odd_implies_edge = False
                if (i, j) in matchable:
                    vanishing.append((t.label(i), t.label(j)))

    degrees = sharp.sharp_graph.degrees()
    min_degree = min(degrees)
    return OddPathReport(
        order=tuple(t.label(i) for i in order),
        spanning_subtree=spanning,
        sharp_edge_implies_odd_sum=edge_implies_odd,
        odd_sum_implies_sharp_edge=odd_implies_edge,
        no_pendant_vertices=None if t.n == 3 else min_degree >= 2,
        min_sharp_degree=min_degree,
        vanishing_pairs=tuple(vanishing),
    )


def caterpillar_edge_count(t: WeightedTree, cap: int | None = None) -> int:
    """
    Edge count of T# for a caterpillar in class T other than a star:
    the number of pendant vertices plus t_1 t_2 + ... + t_{k-1} t_k, with
    t_i the pendant counts along the spine.

    Raises:
        NotApplicable: outside class T, for stars and for non-caterpillars
    """
    profile = classify(t)
    if not profile.is_member:
        raise NotApplicable("tree is not in class T")
    if is_star(t):
        raise NotApplicable("stars are excluded")
    if not profile.is_caterpillar:
        raise NotApplicable("tree is not a caterpillar")

    counts = dict(zip(profile.non_pendant_vertices, profile.pendant_counts))
    spine = [counts[v] for v in profile.spine]
    value = len(t.pendant_indices()) + sum(a * b for a, b in zip(spine, spine[1:]))
    if settings.strict_checks:
        actual = sharp_combinatorial(t, cap).sharp_graph.edge_count
        if actual != value:
            raise InvariantViolation(f"caterpillar formula gives {value}, T# has {actual} edges")
    return value


def degree_check_class_T(t: WeightedTree, cap: int | None = None,
                         witness: GroupInverseWitness | None = None) -> list[DegreeCheckRow]:
    """
    Sharp degree of every non-pendant vertex next to its pendant count.

    Raises:
        NotInClassT: if t is not in class T
    """
    profile = classify(t)
    if not profile.is_member:
        raise NotInClassT("degree check needs a tree in class T")
    g = _sharp(t, cap, witness).sharp_graph
    return [
        DegreeCheckRow(vertex=v, pendant_neighbours=c, sharp_degree=g.degree(v))
        for v, c in zip(profile.non_pendant_vertices, profile.pendant_counts)
    ]
