"""
Group inverse report sections: the sharp graph and the cross-method check.
"""
from typing import Any, Dict

from app.core.groupinv import group_inverse, sharp_bipartite_block, sharp_factorization, verify_axioms
from app.core.tree import is_star
from app.models.sharp import SharpMethod
from app.report_sections.base_section import BaseReportSection
from app.schemas.response import VerifyReport


class SharpSection(BaseReportSection):
    """Section with the edges of T#, computed by the requested method."""

    name = "sharp"

    def generate(self, context: Dict[str, Any]) -> Dict[str, Any]:
        request = context["request"]
        if request.method is SharpMethod.COMBINATORIAL:
            witness = self.sharp(context)
        else:
            witness = group_inverse(context["tree"], request.method, request.matching_cap)
        context["sharp_witness"] = witness
        return {"sharp_method": witness.method.value, "sharp_edges": witness.sharp_edges()}


class VerifySection(BaseReportSection):
    """
    Section comparing the combinatorial sharp with the factorization and
    bipartite block oracles (and the closed form for stars).
    """

    name = "verify"

    def generate(self, context: Dict[str, Any]) -> Dict[str, Any]:
        t = context["tree"]
        a = t.adjacency_matrix()
        results = {
            SharpMethod.COMBINATORIAL.value: self.sharp(context).sharp_matrix,
            SharpMethod.FACTORIZATION.value: sharp_factorization(a),
            SharpMethod.BIPARTITE_BLOCK.value: sharp_bipartite_block(t),
        }
        if is_star(t):
            results[SharpMethod.STAR_CLOSED_FORM.value] = group_inverse(t, SharpMethod.STAR_CLOSED_FORM).sharp_matrix

        reference = results[SharpMethod.FACTORIZATION.value]
        mismatches = []
        for method, x in results.items():
            if x == reference:
                continue
            for i in range(t.n):
                for j in range(i, t.n):
                    if x[i, j] != reference[i, j]:
                        mismatches.append(
                            f"{method} ({t.label(i)}, {t.label(j)}): {x[i, j]} != {reference[i, j]}"
                        )
        axioms = {method: verify_axioms(a, x) for method, x in results.items()}
        report = VerifyReport(agree=not mismatches and all(axioms.values()), axioms=axioms, mismatches=mismatches)
        return {"verify_report": report}
