"""
Floating-point spectra of A and A#.

The exact A# is rounded entrywise to the nearest float once; everything else
here is LAPACK via scipy.linalg.eigh.
"""
import logging

import networkx as nx
import numpy as np
from scipy import linalg

from app.constants import settings
from app.core.groupinv import sharp_combinatorial
from app.core.signature import apply_signature, build_signature_class_T
from app.exceptions import NoPositiveEigenvalue, NotApplicable, ToleranceTooTight
from app.models.matrix import ExactMatrix
from app.models.report import PerronCheck, SpectralReport
from app.models.sharp import GroupInverseWitness
from app.models.tree import WeightedTree
from app.utils.export import pattern_graph

logger = logging.getLogger(__name__)


def _tol(tol: float | None) -> float:
    tol = settings.spectral_tol if tol is None else tol
    if not tol > 0:
        raise NotApplicable(f"tolerance must be positive, got {tol}")
    return tol


def _cutoff(m: np.ndarray) -> float:
    norm = float(np.max(np.abs(m))) if m.size else 0.0
    return settings.zero_cutoff * norm


def _nonzero(values: np.ndarray, cutoff: float) -> np.ndarray:
    return values[np.abs(values) > cutoff]


def _reciprocity_residual(ev_a: np.ndarray, ev_sharp: np.ndarray, cut_a: float, cut_sharp: float) -> float:
    reciprocals = np.sort(1.0 / _nonzero(ev_a, cut_a))
    sharp = np.sort(_nonzero(ev_sharp, cut_sharp))
    if reciprocals.size != sharp.size:
        return float("inf")
    if not reciprocals.size:
        return 0.0
    return float(np.max(np.abs(reciprocals - sharp)))


def _eigensystems(t: WeightedTree, cap: int | None, witness: GroupInverseWitness | None):
    sharp = witness if witness is not None else sharp_combinatorial(t, cap)
    a = t.adjacency_matrix().to_float()
    s = sharp.sharp_matrix.to_float()
    ev_a, vec_a = linalg.eigh(a)
    ev_s = linalg.eigh(s, eigvals_only=True)
    return a, s, ev_a, vec_a, ev_s


def reciprocity_check(t: WeightedTree, tol: float | None = None, cap: int | None = None,
                      witness: GroupInverseWitness | None = None) -> float:
    """
    Largest gap between the sorted reciprocals of the nonzero eigenvalues of
    A and the sorted nonzero eigenvalues of A#; inf if their counts differ.
    """
    tol = _tol(tol)
    a, s, ev_a, _, ev_s = _eigensystems(t, cap, witness)
    residual = _reciprocity_residual(ev_a, ev_s, _cutoff(a), _cutoff(s))
    if residual > tol:
        logger.warning("reciprocity residual %.3e exceeds tolerance %.1e", residual, tol)
    return residual


def spectral_report(t: WeightedTree, tol: float | None = None, cap: int | None = None,
                    witness: GroupInverseWitness | None = None) -> SpectralReport:
    """
    Spectra of A and A#, the smallest positive eigenvalue tau of A, and
    whether tau is simple.

    Args:
        t: the tree
        tol: gap and residual tolerance, defaults to settings.spectral_tol
        cap: maximum-matching enumeration limit
        witness: a precomputed sharp for t

    Returns:
        SpectralReport; tau fields are None for the one-vertex tree

    Raises:
        ToleranceTooTight: if the reciprocity residual exceeds tol
        NoPositiveEigenvalue: if A is nonzero but has no positive eigenvalue
    """
    tol = _tol(tol)
    a, s, ev_a, vec_a, ev_s = _eigensystems(t, cap, witness)
    cut_a, cut_s = _cutoff(a), _cutoff(s)
    residual = _reciprocity_residual(ev_a, ev_s, cut_a, cut_s)
    if residual > tol:
        raise ToleranceTooTight(f"reciprocity residual {residual:.3e} exceeds tolerance {tol:.1e}")

    rho = float(np.max(np.abs(ev_s))) if ev_s.size else 0.0
    tau = gap = vector = min_entry = product = simple = None
    if t.edge_count:
        positive = np.flatnonzero(ev_a > cut_a)
        if not positive.size:
            raise NoPositiveEigenvalue("nonzero symmetric matrix without a positive eigenvalue")
        k = int(positive[np.argmin(ev_a[positive])])
        tau = float(ev_a[k])
        others = np.delete(ev_a, k)
        gap = float(np.min(np.abs(others - tau))) if others.size else float("inf")
        simple = gap > tol
        v = vec_a[:, k]
        # fix the sign so the first entry of largest magnitude is positive
        if v[np.argmax(np.abs(v))] < 0:
            v = -v
        vector = tuple(float(x) for x in v)
        min_entry = float(np.min(np.abs(v)))
        product = tau * rho

    return SpectralReport(
        eigenvalues_A=tuple(float(x) for x in ev_a),
        eigenvalues_sharp=tuple(float(x) for x in ev_s),
        tau=tau,
        rho_sharp=rho,
        tau_simple=simple,
        tau_gap=gap,
        eigenvector_tau=vector,
        min_abs_entry=min_entry,
        reciprocity_residual=residual,
        tau_rho_product=product,
        tolerance=tol,
    )


def irreducibility_check(m: ExactMatrix) -> bool:
    """True iff the graph of the nonzero pattern of m is connected."""
    if m.order == 0:
        return True
    return nx.is_connected(pattern_graph(m))


def perron_check(t: WeightedTree, tol: float | None = None, cap: int | None = None,
                 witness: GroupInverseWitness | None = None) -> PerronCheck:
    """
    For a positively weighted tree in class T: the Perron vector x of
    S·A#·S is positive, and S·x is an eigenvector of A for tau = 1/rho.

    Raises:
        NotInClassT, NonPositiveWeights: from the signature construction
    """
    tol = _tol(tol)
    sharp = witness if witness is not None else sharp_combinatorial(t, cap)
    signature = build_signature_class_T(t, cap)
    b = apply_signature(sharp.sharp_matrix, signature).to_float()
    ev, vec = linalg.eigh(b)
    rho = float(ev[-1])
    x = vec[:, -1]
    if x.sum() < 0:
        x = -x
    y = np.array(signature.signs, dtype=float) * x
    a = t.adjacency_matrix().to_float()
    residual = float(np.max(np.abs(a @ y - y / rho)))
    return PerronCheck(
        rho=rho,
        perron_vector=tuple(float(v) for v in x),
        perron_positive=bool(np.all(x > tol)),
        eigenvector=tuple(float(v) for v in y),
        eigen_residual=residual,
        tolerance=tol,
    )
