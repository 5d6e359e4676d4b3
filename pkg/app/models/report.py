"""
Report models produced by the analysis modules.
"""
from pydantic import BaseModel, ConfigDict


class ClassTProfile(BaseModel):
    """Membership of a tree in class T and the related shape predicates."""
    model_config = ConfigDict(frozen=True)

    non_pendant_vertices: tuple[str, ...]
    pendant_counts: tuple[int, ...]
    is_member: bool
    is_corona: bool
    is_caterpillar: bool
    is_star: bool
    # non-pendant vertices in path order, when the tree is a caterpillar
    spine: tuple[str, ...] | None = None

    @property
    def k(self) -> int:
        return len(self.non_pendant_vertices)


class FourConditions(BaseModel):
    """The four statements that are equivalent for singular trees."""
    model_config = ConfigDict(frozen=True)

    alt_path_count_is_n_minus_1: bool
    sharp_is_tree: bool
    is_star: bool
    sharp_isomorphic_underlying: bool

    @property
    def agree(self) -> bool:
        return len({self.alt_path_count_is_n_minus_1, self.sharp_is_tree,
                    self.is_star, self.sharp_isomorphic_underlying}) == 1


class StructureReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    singular: bool
    sharp_connected: bool
    sharp_bipartite: bool
    sharp_is_tree: bool
    sharp_edge_count: int
    # None when the tree is nonsingular
    four_conditions: FourConditions | None = None
    has_four_cycle: bool
    four_cycle: tuple[str, str, str, str] | None = None
    adjacent_pendant_edges: bool
    degree_table: dict[str, int]


class OddPathReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    order: tuple[str, ...]
    spanning_subtree: bool
    sharp_edge_implies_odd_sum: bool
    odd_sum_implies_sharp_edge: bool
    # None for P3, where the statement does not apply
    no_pendant_vertices: bool | None = None
    min_sharp_degree: int
    vanishing_pairs: tuple[tuple[str, str], ...] = ()

    @property
    def parity(self) -> bool:
        return self.sharp_edge_implies_odd_sum and self.odd_sum_implies_sharp_edge


class DegreeCheckRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    vertex: str
    pendant_neighbours: int
    sharp_degree: int

    @property
    def ok(self) -> bool:
        return self.pendant_neighbours == self.sharp_degree


class SignatureVector(BaseModel):
    """Diagonal ±1 data s_i, with the counts n_i it was built from when known."""
    model_config = ConfigDict(frozen=True)

    vertices: tuple[str, ...]
    signs: tuple[int, ...]
    root: str | None = None
    n_values: tuple[int, ...] | None = None

    def sign_of(self, label: str) -> int:
        return self.signs[self.vertices.index(label)]


class SignatureSearch(BaseModel):
    model_config = ConfigDict(frozen=True)

    signature: SignatureVector | None
    scanned: int

    @property
    def exists(self) -> bool:
        return self.signature is not None


class SpectralReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    eigenvalues_A: tuple[float, ...]
    eigenvalues_sharp: tuple[float, ...]
    tau: float | None
    rho_sharp: float
    tau_simple: bool | None
    tau_gap: float | None
    eigenvector_tau: tuple[float, ...] | None
    min_abs_entry: float | None
    reciprocity_residual: float
    tau_rho_product: float | None
    tolerance: float


class PerronCheck(BaseModel):
    model_config = ConfigDict(frozen=True)

    rho: float
    perron_vector: tuple[float, ...]
    perron_positive: bool
    eigenvector: tuple[float, ...]
    eigen_residual: float
    tolerance: float

    @property
    def ok(self) -> bool:
        return self.perron_positive and self.eigen_residual <= self.tolerance
