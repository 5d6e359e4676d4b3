"""
Tree summary report section.
"""
from typing import Any, Dict

from app.core.tree import bipartition, classify, exact_rank, is_star, matching_number
from app.report_sections.base_section import BaseReportSection
from app.schemas.response import TreeSummary
from app.utils.export import graph_edges


class TreeSection(BaseReportSection):
    """Section describing the input tree itself."""

    name = "tree"

    def generate(self, context: Dict[str, Any]) -> Dict[str, Any]:
        t = context["tree"]
        rank = exact_rank(t.adjacency_matrix())
        summary = TreeSummary(
            n=t.n,
            vertices=t.vertices,
            edges=graph_edges(t),
            rank=rank,
            singular=rank < t.n,
            matching_number=matching_number(t),
            is_star=is_star(t),
            class_t=classify(t),
            bipartition=bipartition(t),
        )
        return {"tree_summary": summary}
