"""
Signature report section.
"""
from typing import Any, Dict

from app.core.signature import apply_signature, build_signature_class_T, is_nonnegative, signature_search
from app.exceptions import NonPositiveWeights, NotInClassT
from app.report_sections.base_section import BaseReportSection
from app.schemas.response import SignatureReport


class SignatureSection(BaseReportSection):
    """
    Section with a signature S making S·A#·S non-negative: the class T
    construction when it applies, otherwise the exhaustive search if the
    request asks for it.
    """

    name = "signature"

    def generate(self, context: Dict[str, Any]) -> Dict[str, Any]:
        t = context["tree"]
        request = context["request"]
        sharp = self.sharp(context).sharp_matrix

        try:
            signature = build_signature_class_T(t, request.matching_cap)
            method, scanned, reason = "class_t", None, None
        except (NotInClassT, NonPositiveWeights) as exc:
            reason = str(exc)
            if not request.search:
                return {"signature_report": SignatureReport(signature_exists=None, not_applicable=reason)}
            result = signature_search(sharp, t.vertices)
            signature, method, scanned = result.signature, "search", result.scanned

        if signature is None:
            report = SignatureReport(
                signature_exists=False, method=method, not_applicable=reason, scanned=scanned,
            )
        else:
            signed = apply_signature(sharp, signature)
            report = SignatureReport(
                signature_exists=True,
                method=method,
                not_applicable=reason,
                root=signature.root,
                signs=dict(zip(signature.vertices, signature.signs)),
                n_values=dict(zip(signature.vertices, signature.n_values)) if signature.n_values is not None else None,
                scanned=scanned,
                nonnegative=is_nonnegative(signed),
                signed_matrix=signed.rows(),
            )
        return {"signature_report": report}
