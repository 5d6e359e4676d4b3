"""
Maximum matching report section.
"""
from typing import Any, Dict

from app.core.matching import alternating_paths, maximum_matchings
from app.report_sections.base_section import BaseReportSection
from app.schemas.response import MatchingReport


class MatchingSection(BaseReportSection):
    """Section listing maximum matchings, m(T) and the alternating paths."""

    name = "matchings"

    def generate(self, context: Dict[str, Any]) -> Dict[str, Any]:
        t = context["tree"]
        cap = context["request"].matching_cap
        summary = maximum_matchings(t, cap)
        return {
            "matching_summary": MatchingReport(
                matching_number=summary.matching_number,
                count=summary.count,
                m_value=summary.m_value,
                matchings=summary.all_max_matchings,
                alternating_paths=alternating_paths(t, cap),
                alternating_census=summary.alternating_census,
            )
        }
