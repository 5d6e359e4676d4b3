from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from app.core.groupinv import (
    group_inverse, sharp_bipartite_block, sharp_combinatorial, sharp_factorization, sharp_graph_from_matrix,
    sharp_star, verify_axioms,
)
from app.core.tree import is_singular, is_star
from app.exceptions import NotAStar
from app.models.matrix import ExactMatrix
from app.models.sharp import SharpMethod
from tests.strategies import path_tree, star_tree, stars, tree, trees, unlabelled_trees

P5_SHARP = ExactMatrix([
    [0, F(2, 3), 0, F(-1, 3), 0],
    [F(2, 3), 0, F(1, 3), 0, F(-1, 3)],
    [0, F(1, 3), 0, F(1, 3), 0],
    [F(-1, 3), 0, F(1, 3), 0, F(2, 3)],
    [0, F(-1, 3), 0, F(2, 3), 0],
])

T6_SHARP = ExactMatrix([
    [0, F(3, 5), 0, F(-1, 5), 0, 0],
    [F(3, 5), 0, F(2, 5), 0, F(-1, 5), F(-1, 5)],
    [0, F(2, 5), 0, F(1, 5), 0, 0],
    [F(-1, 5), 0, F(1, 5), 0, F(2, 5), F(2, 5)],
    [0, F(-1, 5), 0, F(2, 5), 0, 0],
    [0, F(-1, 5), 0, F(2, 5), 0, 0],
])


def test_p5_golden(p5):
    witness = sharp_combinatorial(p5)
    assert witness.sharp_matrix == P5_SHARP
    assert witness.m_value == 3
    assert witness.sharp_edges() == [
        ("1", "2", F(2, 3)), ("1", "4", F(-1, 3)), ("2", "3", F(1, 3)),
        ("2", "5", F(-1, 3)), ("3", "4", F(1, 3)), ("4", "5", F(2, 3)),
    ]


def test_t6_golden(t6):
    assert sharp_combinatorial(t6).sharp_matrix == T6_SHARP
    assert sharp_factorization(t6.adjacency_matrix()) == T6_SHARP
    assert sharp_bipartite_block(t6) == T6_SHARP


def test_t1_sharp_edges(t1):
    witness = sharp_combinatorial(t1)
    assert {(u, v): w for u, v, w in witness.sharp_edges()} == {
        ("1", "4"): F(1, 5), ("1", "5"): F(2, 5), ("2", "6"): 1, ("3", "7"): 1,
        ("4", "6"): F(-1, 5), ("5", "6"): F(-2, 5), ("6", "7"): -2,
    }
    assert sharp_factorization(t1.adjacency_matrix()) == witness.sharp_matrix


def test_factorization_examples():
    assert sharp_factorization(ExactMatrix.zeros(3)) == ExactMatrix.zeros(3)
    k2 = ExactMatrix([[0, 5], [5, 0]])
    assert sharp_factorization(k2) == ExactMatrix([[0, F(1, 5)], [F(1, 5), 0]])


def test_bipartite_block_examples(p5, star):
    assert sharp_bipartite_block(p5) == P5_SHARP
    assert sharp_bipartite_block(star) == star.adjacency_matrix() * F(1, 5)
    assert sharp_bipartite_block(path_tree(1)) == ExactMatrix.zeros(1)


def test_star_closed_form(star):
    witness = sharp_star(star)
    assert witness.method is SharpMethod.STAR_CLOSED_FORM
    assert witness.m_value == 5
    assert {(u, v): w for u, v, w in witness.sharp_edges()} == {("1", "3"): F(1, 5), ("2", "3"): F(2, 5)}


def test_star_closed_form_small_cases():
    k13 = star_tree([1, 1, 1])
    assert sharp_star(k13).sharp_matrix == sharp_factorization(k13.adjacency_matrix())
    assert sharp_star(k13).sharp_matrix == k13.adjacency_matrix() * F(1, 3)
    k2 = tree((1, 2, F(3, 2)))
    assert sharp_star(k2).sharp_matrix == ExactMatrix([[0, F(2, 3)], [F(2, 3), 0]])


def test_sharp_star_rejects_non_stars(p5):
    with pytest.raises(NotAStar):
        sharp_star(p5)


def test_verify_axioms_examples(p5):
    a = p5.adjacency_matrix()
    assert verify_axioms(a, P5_SHARP)
    assert not verify_axioms(a, a)
    assert verify_axioms(ExactMatrix.zeros(2), ExactMatrix.zeros(2))
    assert not verify_axioms(a, ExactMatrix.zeros(2))


def test_single_vertex_sharp_is_zero():
    witness = sharp_combinatorial(path_tree(1))
    assert witness.sharp_matrix == ExactMatrix.zeros(1)
    assert witness.sharp_graph.n == 1 and witness.sharp_graph.edge_count == 0


def test_group_inverse_dispatch(t1):
    results = {m: group_inverse(t1, m) for m in (SharpMethod.COMBINATORIAL, SharpMethod.FACTORIZATION,
                                                  SharpMethod.BIPARTITE_BLOCK)}
    matrices = {w.sharp_matrix for w in results.values()}
    assert len(matrices) == 1
    assert results[SharpMethod.FACTORIZATION].m_value is None
    with pytest.raises(NotAStar):
        group_inverse(t1, "star_closed_form")


def test_sharp_graph_from_matrix_keeps_every_vertex():
    g = sharp_graph_from_matrix(("a", "b", "c"), ExactMatrix([[0, 1, 0], [1, 0, 0], [0, 0, 0]]))
    assert g.vertices == ("a", "b", "c")
    assert g.edge_count == 1 and g.degree("c") == 0


@settings(max_examples=500)
@given(trees())
def test_three_methods_agree(t):
    a = t.adjacency_matrix()
    combinatorial = sharp_combinatorial(t).sharp_matrix
    assert combinatorial == sharp_factorization(a)
    assert combinatorial == sharp_bipartite_block(t)
    assert verify_axioms(a, combinatorial)
    assert combinatorial.is_symmetric()
    assert all(combinatorial[i, i] == 0 for i in range(t.n))


@settings(max_examples=100)
@given(trees())
def test_sharp_is_an_involution(t):
    a = t.adjacency_matrix()
    assert sharp_factorization(sharp_factorization(a)) == a


@settings(max_examples=100)
@given(stars())
def test_star_law(t):
    p = sum(e.weight ** 2 for e in t.edges)
    expected = t.adjacency_matrix() * (1 / p)
    assert sharp_combinatorial(t).sharp_matrix == expected
    assert sharp_star(t).sharp_matrix == expected


@settings(max_examples=100)
@given(trees(min_n=2))
def test_nonsingular_trees_get_the_ordinary_inverse(t):
    if is_singular(t):
        return
    a = t.adjacency_matrix()
    assert a @ sharp_combinatorial(t).sharp_matrix == ExactMatrix.identity(t.n)


def test_same_pattern_exactly_for_stars():
    for t in unlabelled_trees(9):
        a = t.adjacency_matrix()
        same = sharp_combinatorial(t).sharp_matrix.nonzero_pattern() == a.nonzero_pattern()
        assert same == is_star(t), t.edges
