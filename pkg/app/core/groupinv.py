"""
Group inverse of a weighted tree, four ways.

The combinatorial formula is the primary method; full-rank factorization
and the bipartite block formula are independent exact oracles, and stars
have a closed form.
"""
import logging
from fractions import Fraction
from typing import Sequence

from app.constants import settings
from app.core import linalg
from app.core.matching import alternating_index_pairs, m_value, mu_terms
from app.core.tree import bipartition, is_star
from app.exceptions import InvariantViolation, NotAStar
from app.models.matrix import ExactMatrix
from app.models.sharp import GroupInverseWitness, SharpMethod
from app.models.tree import WeightedGraph, WeightedTree

logger = logging.getLogger(__name__)


def sharp_graph_from_matrix(labels: Sequence[str], x: ExactMatrix) -> WeightedGraph:
    """The weighted graph whose edges are the nonzero off-diagonal entries of x."""
    edges = [(labels[i], labels[j], x[i, j]) for i, j in sorted(x.nonzero_pattern())]
    return WeightedGraph.from_edges(edges, vertices=labels)


def verify_axioms(a: ExactMatrix, x: ExactMatrix) -> bool:
    """True iff AXA = A, XAX = X and AX = XA hold exactly."""
    if a.order != x.order:
        return False
    ax = a @ x
    xa = x @ a
    return ax == xa and ax @ a == a and x @ ax == x


def _witness(t: WeightedTree, x: ExactMatrix, method: SharpMethod, m: Fraction | None = None) -> GroupInverseWitness:
    if settings.strict_checks and not verify_axioms(t.adjacency_matrix(), x):
        raise InvariantViolation(f"{method.value} result fails the group inverse axioms")
    return GroupInverseWitness(
        source_tree=t,
        sharp_matrix=x,
        sharp_graph=sharp_graph_from_matrix(t.vertices, x),
        m_value=m,
        method=method,
    )


def sharp_combinatorial(t: WeightedTree, cap: int | None = None) -> GroupInverseWitness:
    """
    A# from maximum matchings: entry (i, j) is mu(v_i, v_j) / m(T) for every
    maximally matchable pair and 0 elsewhere.

    Args:
        t: the tree
        cap: maximum-matching enumeration limit

    Returns:
        GroupInverseWitness with method COMBINATORIAL

    Raises:
        ResourceLimit: if the enumeration exceeds cap
    """
    m = m_value(t, cap)
    rows = [[Fraction(0)] * t.n for _ in range(t.n)]
    for (i, j), (path_edges, witnesses) in alternating_index_pairs(t, cap).items():
        _, _, mu = mu_terms(t, path_edges, witnesses)
        rows[i][j] = rows[j][i] = mu / m
    logger.debug("combinatorial sharp on %d vertices, m(T) = %s", t.n, m)
    return _witness(t, ExactMatrix(rows), SharpMethod.COMBINATORIAL, m)


def sharp_factorization(a: ExactMatrix) -> ExactMatrix:
    """
    Group inverse of a symmetric matrix by full-rank factorization.

    With A = F·G, F of full column rank and G of full row rank, the group
    inverse is F·(G·F)^-2·G.

    Raises:
        SingularCore: if G·F is not invertible
    """
    if a.is_zero():
        return ExactMatrix.zeros(a.order)
    f, g = linalg.full_rank_factorization(a.array)
    core = linalg.inverse(linalg.matmul(g, f))
    core2 = linalg.matmul(core, core)
    return ExactMatrix(linalg.matmul(linalg.matmul(f, core2), g))


def sharp_bipartite_block(t: WeightedTree) -> ExactMatrix:
    """
    A# assembled from the bipartite blocks of A.

    With the smaller colour class as rows, A = [[0, C], [C^T, 0]] and
    A# = [[0, (CC^T)#C], [C^T(CC^T)#, 0]].
    """
    part_a, part_b = bipartition(t)
    rows, cols = (part_a, part_b) if len(part_a) <= len(part_b) else (part_b, part_a)
    if not rows:
        return ExactMatrix.zeros(t.n)

    c = linalg.fraction_array([[t.weight(u, v) for v in cols] for u in rows])
    cct = ExactMatrix(linalg.matmul(c, c.T))
    block = linalg.matmul(sharp_factorization(cct).array, c)

    out = [[Fraction(0)] * t.n for _ in range(t.n)]
    for a, u in enumerate(rows):
        i = t.index_of(u)
        for b, v in enumerate(cols):
            j = t.index_of(v)
            out[i][j] = out[j][i] = block[a, b]
    return ExactMatrix(out)


def sharp_star(t: WeightedTree) -> GroupInverseWitness:
    """
    Closed form for stars: A# = A / p with p the sum of squared weights.

    Raises:
        NotAStar: if t is not K_{1,m}
    """
    if not is_star(t):
        raise NotAStar("sharp_star needs a star")
    p = sum((e.weight ** 2 for e in t.edges), start=Fraction(0))
    return _witness(t, t.adjacency_matrix() * (1 / p), SharpMethod.STAR_CLOSED_FORM, p)


def group_inverse(t: WeightedTree, method: SharpMethod = SharpMethod.COMBINATORIAL,
                  cap: int | None = None) -> GroupInverseWitness:
    """Dispatch to one of the four methods."""
    method = SharpMethod(method)
    if method is SharpMethod.COMBINATORIAL:
        return sharp_combinatorial(t, cap)
    if method is SharpMethod.STAR_CLOSED_FORM:
        return sharp_star(t)
    if method is SharpMethod.FACTORIZATION:
        return _witness(t, sharp_factorization(t.adjacency_matrix()), method)
    return _witness(t, sharp_bipartite_block(t), method)
