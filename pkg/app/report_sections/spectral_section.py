"""
Spectral report section.
"""
from typing import Any, Dict

from app.core.spectral import spectral_report
from app.report_sections.base_section import BaseReportSection


class SpectralSection(BaseReportSection):
    """Section with the floating spectra of A and A#."""

    name = "spectral"

    def generate(self, context: Dict[str, Any]) -> Dict[str, Any]:
        request = context["request"]
        report = spectral_report(context["tree"], request.tol, request.matching_cap, self.sharp(context))
        return {"spectral_report": report}
