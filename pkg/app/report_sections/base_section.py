"""
Base class for all report sections.
"""
from abc import ABC, abstractmethod
from typing import Any, Dict

from app.core.groupinv import sharp_combinatorial
from app.models.sharp import GroupInverseWitness


class BaseReportSection(ABC):
    """Base interface for all report sections."""

    name: str = "section"

    @abstractmethod
    def generate(self, context: Dict[str, Any]) -> Dict[str, Any]:
        """
        Generate the content for this report section.

        Args:
            context: the parsed tree under "tree", the AnalysisRequest under
                "request", and results shared between sections

        Returns:
            AnalysisDocument fields produced by this section
        """
        pass

    @staticmethod
    def sharp(context: Dict[str, Any]) -> GroupInverseWitness:
        """The combinatorial sharp of the context tree, computed once per context."""
        if "witness" not in context:
            context["witness"] = sharp_combinatorial(context["tree"], context["request"].matching_cap)
        return context["witness"]
