"""
Group inverse models.
"""
from enum import Enum

from pydantic import BaseModel, ConfigDict

from app.models.matrix import ExactMatrix
from app.models.tree import WeightedGraph, WeightedTree
from app.utils.rationals import Rational


class SharpMethod(str, Enum):
    """How a group inverse was computed."""
    COMBINATORIAL = "combinatorial"
    FACTORIZATION = "factorization"
    BIPARTITE_BLOCK = "bipartite_block"
    STAR_CLOSED_FORM = "star_closed_form"


class GroupInverseWitness(BaseModel):
    """A tree together with its group inverse, as a matrix and as a graph."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    source_tree: WeightedTree
    sharp_matrix: ExactMatrix
    sharp_graph: WeightedGraph
    # None when the method never computes m(T)
    m_value: Rational | None = None
    method: SharpMethod

    def sharp_edges(self) -> list[tuple[str, str, Rational]]:
        """Sharp edges as (u, v, w), sorted by (u, v) with u < v."""
        out = []
        for e in self.sharp_graph.edges:
            u, v = sorted((e.u, e.v))
            out.append((u, v, e.weight))
        return sorted(out, key=lambda x: (x[0], x[1]))
