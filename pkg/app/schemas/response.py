"""
Response documents emitted by the sharptree command line.

Exact quantities are ``Rational`` and serialize to "p/q" strings; only the
spectral fragment carries floats.
"""
from pydantic import BaseModel, ConfigDict, Field

from app.constants import SCHEMA_VERSION
from app.models.matching import AlternatingPath, Matching
from app.models.report import ClassTProfile, DegreeCheckRow, OddPathReport, SpectralReport, StructureReport
from app.utils.rationals import Rational


class TreeSummary(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    n: int
    vertices: tuple[str, ...]
    edges: list[tuple[str, str, Rational]]
    rank: int
    singular: bool
    matching_number: int
    is_star: bool
    class_t: ClassTProfile
    bipartition: tuple[tuple[str, ...], tuple[str, ...]]


class MatchingReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    matching_number: int
    count: int
    m_value: Rational
    matchings: tuple[Matching, ...]
    alternating_paths: list[AlternatingPath]
    alternating_census: dict[str, int]


class SignatureReport(BaseModel):
    """Outcome of the signature command. A failed precondition is data, not an error."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    # None when the class T construction does not apply and no search was asked for
    signature_exists: bool | None
    method: str | None = None
    not_applicable: str | None = None
    root: str | None = None
    signs: dict[str, int] | None = None
    n_values: dict[str, int] | None = None
    scanned: int | None = None
    nonnegative: bool | None = None
    signed_matrix: list[list[Rational]] | None = None


class VerifyReport(BaseModel):
    agree: bool
    axioms: dict[str, bool]
    mismatches: list[str] = []


class ClassTChecks(BaseModel):
    """Class T statements evaluated on the sharp graph; present only for members."""
    degree_table: list[DegreeCheckRow]
    caterpillar_edge_count: int | None = None


class AnalysisDocument(BaseModel):
    """
    Machine-readable report for one input file. Fragments that the command
    did not compute are null.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, populate_by_name=True)

    schema_version: str = Field(default=SCHEMA_VERSION, alias="schema")
    input_digest: str
    tree_summary: TreeSummary | None = None
    matching_summary: MatchingReport | None = None
    sharp_method: str | None = None
    sharp_edges: list[tuple[str, str, Rational]] | None = None
    verify_report: VerifyReport | None = None
    structure_report: StructureReport | None = None
    odd_path_report: OddPathReport | None = None
    class_t_report: ClassTChecks | None = None
    signature_report: SignatureReport | None = None
    spectral_report: SpectralReport | None = None

    def render(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2) + "\n"

