"""
Matching models.
"""
from pydantic import BaseModel, ConfigDict

from app.utils.rationals import Rational


class Matching(BaseModel):
    """A maximum matching, edges as label pairs in canonical order."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    edges: tuple[tuple[str, str], ...]
    weight_product: Rational

    def contains(self, u: str, v: str) -> bool:
        return (u, v) in self.edges or (v, u) in self.edges


class MatchablePairRecord(BaseModel):
    """Everything the inverse formula needs for one unordered pair."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    pair: tuple[str, str]
    distance: int
    witnesses: tuple[Matching, ...]
    alpha_path: Rational
    alpha_bars: tuple[Rational, ...]
    mu: Rational

    @property
    def matchable(self) -> bool:
        return bool(self.witnesses)


class AlternatingPath(BaseModel):
    model_config = ConfigDict(frozen=True)

    u: str
    v: str
    length: int
    witness_count: int


class MatchingSummary(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    matching_number: int
    all_max_matchings: tuple[Matching, ...]
    m_value: Rational
    # number of alternating paths starting at each vertex
    alternating_census: dict[str, int]

    @property
    def count(self) -> int:
        return len(self.all_max_matchings)
