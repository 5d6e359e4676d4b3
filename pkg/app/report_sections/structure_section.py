"""
Structure report section.
"""
from typing import Any, Dict

from app.core.structure import analyze_structure, caterpillar_edge_count, degree_check_class_T, odd_path_report
from app.core.tree import classify, is_star
from app.report_sections.base_section import BaseReportSection
from app.schemas.response import ClassTChecks


class StructureSection(BaseReportSection):
    """
    Section with the structural statements about T#. The odd-path and
    class T parts appear only for inputs they apply to.
    """

    name = "structure"

    def generate(self, context: Dict[str, Any]) -> Dict[str, Any]:
        t = context["tree"]
        cap = context["request"].matching_cap
        witness = self.sharp(context)
        out: Dict[str, Any] = {"structure_report": analyze_structure(t, cap, witness)}

        if t.n >= 3 and t.n % 2 == 1 and max(t.degrees()) <= 2:
            out["odd_path_report"] = odd_path_report(t, cap, witness)

        profile = classify(t)
        if profile.is_member:
            count = None
            if profile.is_caterpillar and not is_star(t):
                count = caterpillar_edge_count(t, cap)
            out["class_t_report"] = ClassTChecks(
                degree_table=degree_check_class_T(t, cap, witness),
                caterpillar_edge_count=count,
            )
        return out
