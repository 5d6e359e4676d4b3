"""
Request models for the sharptree command line.
"""
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

from app.models.sharp import SharpMethod


class Command(str, Enum):
    SHARP = "sharp"
    VERIFY = "verify"
    ANALYZE = "analyze"
    MATCHINGS = "matchings"
    SIGNATURE = "signature"
    SPECTRAL = "spectral"


class OutputFormat(str, Enum):
    JSON = "json"
    DOT = "dot"
    EDGES = "edges"


class AnalysisRequest(BaseModel):
    """Everything one worker needs to process one input file."""
    model_config = ConfigDict(frozen=True)

    command: Command
    path: str
    output_format: OutputFormat = OutputFormat.EDGES
    method: SharpMethod = SharpMethod.COMBINATORIAL
    include_all: bool = False
    search: bool = False
    # None means settings.matching_cap / settings.spectral_tol
    matching_cap: int | None = Field(default=None, gt=0)
    tol: float | None = Field(default=None, gt=0)
