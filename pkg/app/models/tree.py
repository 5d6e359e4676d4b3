"""
Weighted graph and weighted tree models.

Vertices are string labels externally and dense indices 0..n-1 internally,
in the order of ``vertices``.
"""
from collections import deque
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from pydantic import BaseModel, ConfigDict, model_validator

from app.exceptions import InvalidGraph, NotATree, UnknownVertex, ZeroWeight
from app.models.matrix import ExactMatrix
from app.utils.edge_list import parse_edge_list
from app.utils.rationals import Rational


class WeightedEdge(BaseModel):
    """Undirected edge u–v with a nonzero exact weight."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    u: str
    v: str
    weight: Rational

    @model_validator(mode="after")
    def check_edge(self) -> "WeightedEdge":
        if self.weight == 0:
            raise ZeroWeight(f"edge {self.u}-{self.v} has weight 0")
        if self.u == self.v:
            raise InvalidGraph(f"self-loop at {self.u}")
        return self


class WeightedGraph(BaseModel):
    """Undirected weighted graph with zero diagonal."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    vertices: tuple[str, ...]
    edges: tuple[WeightedEdge, ...] = ()

    @model_validator(mode="after")
    def check_graph(self) -> "WeightedGraph":
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidGraph("repeated vertex label")
        known = set(self.vertices)
        seen: set[frozenset[str]] = set()
        for edge in self.edges:
            for label in (edge.u, edge.v):
                if label not in known:
                    raise UnknownVertex(f"edge endpoint {label!r} is not a vertex")
            key = frozenset((edge.u, edge.v))
            if key in seen:
                raise InvalidGraph(f"duplicate edge {edge.u}-{edge.v}")
            seen.add(key)
        return self

    @classmethod
    def from_edges(cls, edges: Iterable[tuple], vertices: Iterable | None = None):
        """
        Build a graph from (u, v, w) triples.

        Args:
            edges: iterable of (u, v, w); labels are converted with str()
            vertices: explicit vertex order; defaults to first appearance

        Returns:
            A validated instance of the calling class
        """
        edge_list = [WeightedEdge(u=str(u), v=str(v), weight=w) for u, v, w in edges]
        if vertices is None:
            order: dict[str, None] = {}
            for edge in edge_list:
                order.setdefault(edge.u)
                order.setdefault(edge.v)
            labels = tuple(order)
        else:
            labels = tuple(str(x) for x in vertices)
        return cls(vertices=labels, edges=tuple(edge_list))

    @classmethod
    def parse(cls, text: str):
        """Build an instance from an edge-list document."""
        declared, edges = parse_edge_list(text)
        return cls.from_edges(edges, vertices=declared)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def label_index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.vertices)}

    @cached_property
    def adjacency(self) -> tuple[dict[int, Fraction], ...]:
        """adjacency[i][j] = weight of edge v_i v_j."""
        adj: list[dict[int, Fraction]] = [{} for _ in self.vertices]
        for edge in self.edges:
            i, j = self.label_index[edge.u], self.label_index[edge.v]
            adj[i][j] = edge.weight
            adj[j][i] = edge.weight
        return tuple(adj)

    def index_of(self, label) -> int:
        try:
            return self.label_index[str(label)]
        except KeyError:
            raise UnknownVertex(f"no vertex labelled {label!r}") from None

    def label(self, i: int) -> str:
        return self.vertices[i]

    def neighbors(self, label) -> list[str]:
        return [self.vertices[j] for j in sorted(self.adjacency[self.index_of(label)])]

    def degree(self, label) -> int:
        return len(self.adjacency[self.index_of(label)])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def weight(self, u, v) -> Fraction:
        """Weight of u–v, or 0 when they are not adjacent."""
        return self.adjacency[self.index_of(u)].get(self.index_of(v), Fraction(0))

    def index_edges(self) -> list[tuple[int, int]]:
        """Edges as (i, j) index pairs with i < j, sorted."""
        return sorted((min(i, j), max(i, j)) for i, j in
                      ((self.label_index[e.u], self.label_index[e.v]) for e in self.edges))

    def adjacency_matrix(self) -> ExactMatrix:
        n = self.n
        rows = [[Fraction(0)] * n for _ in range(n)]
        for i, row in enumerate(self.adjacency):
            for j, w in row.items():
                rows[i][j] = w
        return ExactMatrix(rows)

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            comp, queue = [], deque([start])
            while queue:
                i = queue.popleft()
                comp.append(i)
                for j in self.adjacency[i]:
                    if not seen[j]:
                        seen[j] = True
                        queue.append(j)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


class WeightedTree(WeightedGraph):
    """
    Vertex-labelled tree with nonzero rational edge weights.

    Rooted internally at v_1 (index 0); paths between vertices are read off
    the parent pointers.
    """

    @model_validator(mode="after")
    def check_tree(self) -> "WeightedTree":
        if not self.vertices:
            raise NotATree("a tree needs at least one vertex")
        if len(self.edges) != self.n - 1:
            raise NotATree(f"{self.n} vertices need {self.n - 1} edges, got {len(self.edges)}")
        if not self.is_connected():
            raise NotATree("edge set is disconnected (and therefore has a cycle)")
        return self

    @cached_property
    def rooted(self) -> tuple[list[int], list[int]]:
        parent = [-1] * self.n
        depth = [0] * self.n
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        while queue:
            i = queue.popleft()
            for j in sorted(self.adjacency[i]):
                if not seen[j]:
                    seen[j] = True
                    parent[j] = i
                    depth[j] = depth[i] + 1
                    queue.append(j)
        return parent, depth

    @property
    def parent(self) -> list[int]:
        return self.rooted[0]

    @property
    def depth(self) -> list[int]:
        return self.rooted[1]

    def path_indices(self, i: int, j: int) -> list[int]:
        """Vertex indices of the unique i–j path, i first."""
        parent, depth = self.rooted
        head, tail = [i], [j]
        a, b = i, j
        while depth[a] > depth[b]:
            a = parent[a]
            head.append(a)
        while depth[b] > depth[a]:
            b = parent[b]
            tail.append(b)
        while a != b:
            a, b = parent[a], parent[b]
            head.append(a)
            tail.append(b)
        # a == b is the meeting vertex; it ends head and tail alike
        tail.pop()
        return head + tail[::-1]

    def distance_indices(self, i: int, j: int) -> int:
        return len(self.path_indices(i, j)) - 1

    def path(self, u, v) -> list[str]:
        return [self.vertices[k] for k in self.path_indices(self.index_of(u), self.index_of(v))]

    def distance(self, u, v) -> int:
        return self.distance_indices(self.index_of(u), self.index_of(v))

    def pendant_indices(self) -> list[int]:
        return [i for i, a in enumerate(self.adjacency) if len(a) == 1]

    def non_pendant_indices(self) -> list[int]:
        return [i for i, a in enumerate(self.adjacency) if len(a) >= 2]
