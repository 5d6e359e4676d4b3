"""
Job model for tracking per-file analysis status.
"""
from enum import Enum

from pydantic import BaseModel


class JobStatus(str, Enum):
    """Status of an analysis job."""
    PENDING = "pending"
    PROCESSING = "processing"
    COMPLETED = "completed"
    FAILED = "failed"


class AnalysisJob(BaseModel):
    """One input file moving through the report generator."""
    id: str
    status: JobStatus
    path: str
    input_digest: str | None = None
    # rendered command output, set when the job completes
    output: str | None = None
    error: str | None = None
    exit_code: int = 0
