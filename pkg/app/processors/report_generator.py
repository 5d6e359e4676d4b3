"""
Main report generator that orchestrates parsing, the report sections and
rendering for one input file, and the batch runner behind --jobs.
"""
import hashlib
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List

from app.core.tree import parse_tree
from app.exceptions import InvariantViolation, ParseError, ResourceLimit, SharpTreeError
from app.logger import setup_logger
from app.models.job import AnalysisJob, JobStatus
from app.report_sections.base_section import BaseReportSection
from app.report_sections.matching_section import MatchingSection
from app.report_sections.sharp_section import SharpSection, VerifySection
from app.report_sections.signature_section import SignatureSection
from app.report_sections.spectral_section import SpectralSection
from app.report_sections.structure_section import StructureSection
from app.report_sections.tree_section import TreeSection
from app.schemas.request import AnalysisRequest, Command, OutputFormat
from app.schemas.response import AnalysisDocument
from app.utils.export import to_dot, to_edge_list

# exit code for a verify run whose methods disagree
PROPERTY_VIOLATION = 2


def sections_for(request: AnalysisRequest) -> List[BaseReportSection]:
    """The report sections a command runs, in document order."""
    if request.command is Command.ANALYZE and request.include_all:
        return [TreeSection(), MatchingSection(), SharpSection(), StructureSection(),
                SignatureSection(), SpectralSection()]
    return {
        Command.SHARP: [SharpSection()],
        Command.VERIFY: [VerifySection()],
        Command.ANALYZE: [TreeSection(), StructureSection()],
        Command.MATCHINGS: [MatchingSection()],
        Command.SIGNATURE: [SignatureSection()],
        Command.SPECTRAL: [SpectralSection()],
    }[request.command]


class ReportGenerator:
    """Main class for generating the report of one input file."""

    def __init__(self, job_id: str, logger=None):
        self.job_id = job_id
        self.logger = logger or setup_logger(job_id)

    def generate_report(self, request: AnalysisRequest) -> AnalysisJob:
        """
        Run the request's sections on its input file.

        Args:
            request: command, input path and options

        Returns:
            The finished job: COMPLETED with the rendered output, or FAILED
            with the error and its exit code
        """
        job = AnalysisJob(id=self.job_id, status=JobStatus.PENDING, path=request.path)
        try:
            job.status = JobStatus.PROCESSING
            with open(request.path, "rb") as fh:
                raw = fh.read()
            job.input_digest = hashlib.sha256(raw).hexdigest()
            try:
                text = raw.decode("utf-8")
            except UnicodeDecodeError as e:
                raise ParseError(f"input is not UTF-8: {e}") from e

            self.logger.info(f"Running {request.command.value} on {request.path}, job_id: {self.job_id}")
            tree = parse_tree(text)
            context: Dict[str, Any] = {"tree": tree, "request": request}
            fields: Dict[str, Any] = {}
            for section in sections_for(request):
                fields.update(section.generate(context))
                self.logger.info(f"Section {section.name} completed for job {self.job_id}")

            document = AnalysisDocument(input_digest=job.input_digest, **fields)
            job.output = self._render(request, document, context)
            if document.verify_report is not None and not document.verify_report.agree:
                job.exit_code = PROPERTY_VIOLATION
                job.error = "group inverse methods disagree"
                self.logger.error(f"Verification failed for job {self.job_id}: {document.verify_report.mismatches}")
            job.status = JobStatus.COMPLETED

        except SharpTreeError as e:
            self.logger.error(f"Error analysing {request.path} for job {self.job_id}: {str(e)}")
            job.status = JobStatus.FAILED
            job.error = f"{type(e).__name__}: {e}"
            job.exit_code = e.exit_code
        except OSError as e:
            self.logger.error(f"Cannot read {request.path} for job {self.job_id}: {str(e)}")
            job.status = JobStatus.FAILED
            job.error = str(e)
            job.exit_code = ParseError.exit_code
        except (RecursionError, MemoryError) as e:
            self.logger.error(f"Out of resources on {request.path} for job {self.job_id}: {type(e).__name__}")
            job.status = JobStatus.FAILED
            job.error = f"ResourceLimit: {type(e).__name__}"
            job.exit_code = ResourceLimit.exit_code
        except Exception as e:
            self.logger.exception(f"Unexpected error on {request.path} for job {self.job_id}: {str(e)}")
            job.status = JobStatus.FAILED
            job.error = f"InvariantViolation: unexpected {type(e).__name__}: {e}"
            job.exit_code = InvariantViolation.exit_code

        return job

    @staticmethod
    def _render(request: AnalysisRequest, document: AnalysisDocument, context: Dict[str, Any]) -> str:
        if request.command is Command.SHARP and request.output_format is not OutputFormat.JSON:
            graph = context["sharp_witness"].sharp_graph
            if request.output_format is OutputFormat.DOT:
                return to_dot(graph)
            return to_edge_list(graph)
        return document.render()


def process_request(request: AnalysisRequest) -> AnalysisJob:
    """Worker entry point; one job per input file."""
    job_id = hashlib.sha256(f"{request.command.value}:{request.path}".encode()).hexdigest()[:12]
    return ReportGenerator(job_id=job_id).generate_report(request)


def run_batch(requests: List[AnalysisRequest], jobs: int = 1) -> List[AnalysisJob]:
    """
    Process several input files, in a process pool when jobs > 1.

    Returns:
        One AnalysisJob per request, in request order
    """
    if jobs <= 1 or len(requests) <= 1:
        return [process_request(r) for r in requests]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(process_request, requests))
