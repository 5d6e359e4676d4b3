from fractions import Fraction

import pytest
from hypothesis import given, settings

from app.core.tree import (
    adjacency_matrix, bipartition, classify, exact_rank, is_singular, is_star, matching_number, parse_graph,
    parse_tree, pendant_edges, pendant_vertices,
)
from app.exceptions import InvalidGraph, NotATree, ParseError, UnknownVertex, ZeroWeight
from app.models.matrix import ExactMatrix
from app.models.tree import WeightedGraph, WeightedTree
from tests.strategies import caterpillar, class_t_trees, path_tree, star_tree, tree, trees


def test_parse_path_in_first_appearance_order(p5):
    assert p5.vertices == ("1", "2", "3", "4", "5")
    assert p5.edge_count == 4
    assert p5.weight("3", "4") == 1


def test_parse_header_fixes_vertex_order(star):
    assert star.vertices == ("1", "2", "3")


def test_parse_rationals_and_decimals():
    t = parse_tree("a b 0.5\nb c -2/6\n# comment\n\nc d 3\n")
    assert t.weight("a", "b") == Fraction(1, 2)
    assert t.weight("b", "c") == Fraction(-1, 3)
    assert t.weight("d", "c") == 3
    assert t.weight("a", "d") == 0


def test_parse_single_vertex_tree():
    t = parse_tree("# vertices: x\n")
    assert t.n == 1 and t.edge_count == 0


def test_parse_rejects_cycle():
    with pytest.raises(NotATree):
        parse_tree("1 2 1\n2 3 1\n1 3 1")


def test_parse_rejects_forest():
    with pytest.raises(NotATree):
        parse_tree("# vertices: 1 2 3 4\n1 2 1\n3 4 1\n")


@pytest.mark.parametrize("text, error", [
    ("1 2\n", ParseError),
    ("1 2 x\n", ParseError),
    ("1 2 1/0\n", ParseError),
    ("", ParseError),
    ("1 2 0\n", ZeroWeight),
    ("1 1 2\n", InvalidGraph),
    ("1 2 1\n2 1 3\n", InvalidGraph),
    ("# vertices: 1 2\n1 3 1\n", UnknownVertex),
])
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse_tree(text)


def test_parse_graph_allows_cycles():
    g = parse_graph("1 2 1\n2 3 1\n1 3 -1/2")
    assert isinstance(g, WeightedGraph) and not isinstance(g, WeightedTree)
    assert g.edge_count == 3


def test_adjacency_matrix_of_t6(t6):
    expected = ExactMatrix([
        [0, 1, 0, 0, 0, 0],
        [1, 0, 1, 0, 0, 0],
        [0, 1, 0, 1, 0, 0],
        [0, 0, 1, 0, 1, 1],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 1, 0, 0],
    ])
    assert adjacency_matrix(t6) == expected


def test_adjacency_matrix_of_star(star):
    assert adjacency_matrix(star) == ExactMatrix([[0, 0, 1], [0, 0, 2], [1, 2, 0]])


def test_adjacency_matrix_is_symmetric_with_zero_diagonal(t1):
    a = adjacency_matrix(t1)
    assert a.is_symmetric()
    assert all(a[i, i] == 0 for i in range(t1.n))


def test_classify_t1(t1):
    profile = classify(t1)
    assert profile.is_member
    assert profile.non_pendant_vertices == ("1", "2", "3")
    assert profile.pendant_counts == (2, 1, 1)
    assert profile.is_caterpillar
    assert profile.spine == ("1", "2", "3")
    assert not profile.is_corona and not profile.is_star


def test_classify_t2_is_not_in_class_t(t2):
    profile = classify(t2)
    assert not profile.is_member
    assert dict(zip(profile.non_pendant_vertices, profile.pendant_counts))["2"] == 0


def test_classify_star(star):
    profile = classify(star)
    assert profile.is_star and profile.is_member
    assert profile.k == 1 and profile.pendant_counts == (2,)


def test_classify_single_vertex():
    profile = classify(WeightedTree(vertices=("1",)))
    assert profile.k == 0 and not profile.is_member


def test_classify_corona_and_non_caterpillar():
    corona = tree((1, 2, 1), (1, 3, 1), (2, 4, 1))
    assert classify(corona).is_corona
    spider = tree(("c", "a", 1), ("c", "b", 1), ("c", "d", 1), ("a", "a1", 1), ("b", "b1", 1), ("d", "d1", 1))
    assert not classify(spider).is_caterpillar


def test_is_singular(p5, t1):
    assert is_singular(p5)
    assert is_singular(t1)
    assert not is_singular(tree((1, 2, 5)))


def test_is_star_counts_k2():
    assert is_star(tree((1, 2, 5)))
    assert is_star(star_tree([1, 2, 3]))
    assert not is_star(path_tree(4))
    assert not is_star(WeightedTree(vertices=("1",)))


def test_bipartition_examples(p5, t6, star):
    assert bipartition(p5) == (("1", "3", "5"), ("2", "4"))
    assert bipartition(t6) == (("1", "3", "5", "6"), ("2", "4"))
    assert bipartition(star) == (("1", "2"), ("3",))


def test_paths_and_distances(t1):
    assert t1.path("4", "7") == ["4", "1", "2", "3", "7"]
    assert t1.distance("6", "7") == 3
    assert t1.distance("5", "5") == 0


@settings(max_examples=200)
@given(trees())
def test_rank_is_twice_matching_number(t):
    assert exact_rank(t.adjacency_matrix()) == 2 * matching_number(t)


@settings(max_examples=100)
@given(trees(min_n=2))
def test_bipartition_splits_every_edge(t):
    part_a, part_b = bipartition(t)
    assert set(part_a) | set(part_b) == set(t.vertices)
    side = {v: 0 for v in part_a} | {v: 1 for v in part_b}
    assert all(side[e.u] != side[e.v] for e in t.edges)


@settings(max_examples=100)
@given(class_t_trees())
def test_class_t_generator_and_predicates(t):
    profile = classify(t)
    assert profile.is_member
    if profile.is_star:
        assert profile.is_member
    if not profile.is_corona:
        assert any(c >= 2 for c in profile.pendant_counts)


def test_non_corona_class_t_members_are_singular():
    assert is_singular(caterpillar([2, 1]))
    assert not is_singular(caterpillar([1, 1, 1]))


def test_pendant_vertices_and_edges(t1):
    assert pendant_vertices(t1) == ("4", "5", "6", "7")
    assert len(pendant_edges(t1)) == 4
    assert pendant_vertices(star_tree([1, 2, 3])) == ("1", "2", "3")
    assert pendant_vertices(path_tree(2)) == ("1", "2")
