"""
Signature similarity: diagonal ±1 matrices S with S·M·S entrywise
non-negative.
"""
import logging
from typing import Sequence

import networkx as nx

from app.constants import settings
from app.core.matching import index_matchings
from app.core.tree import classify
from app.exceptions import DimensionMismatch, NonPositiveWeights, NotApplicable, NotInClassT, ResourceLimit
from app.models.matrix import ExactMatrix
from app.models.report import SignatureSearch, SignatureVector
from app.models.tree import WeightedTree
from app.utils.export import pattern_graph

logger = logging.getLogger(__name__)


def _default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i + 1) for i in range(n))


def build_signature_class_T(t: WeightedTree, cap: int | None = None) -> SignatureVector:
    """
    Signature of a positively weighted tree in class T.

    The root is the lowest-index pendant vertex. n_i counts the edges on the
    root–v_i path that lie in no maximum matching, and s_i = (-1)^n_i.

    Args:
        t: tree in class T with positive weights
        cap: maximum-matching enumeration limit

    Returns:
        SignatureVector with root and n_values filled in

    Raises:
        NotInClassT, NonPositiveWeights
    """
    if not classify(t).is_member:
        raise NotInClassT("signature construction needs a tree in class T")
    if any(e.weight <= 0 for e in t.edges):
        raise NonPositiveWeights("signature construction needs positive weights")

    covered = set().union(*index_matchings(t, cap))
    unmatched = set(t.index_edges()) - covered
    root = t.pendant_indices()[0]

    n_values = []
    for i in range(t.n):
        path = t.path_indices(root, i)
        steps = (tuple(sorted(path[k:k + 2])) for k in range(len(path) - 1))
        n_values.append(sum(1 for e in steps if e in unmatched))

    return SignatureVector(
        vertices=t.vertices,
        signs=tuple(-1 if k % 2 else 1 for k in n_values),
        root=t.label(root),
        n_values=tuple(n_values),
    )


def _signs(s: SignatureVector | Sequence[int]) -> tuple[int, ...]:
    signs = tuple(s.signs) if isinstance(s, SignatureVector) else tuple(s)
    if any(x not in (1, -1) for x in signs):
        raise NotApplicable(f"signature entries must be +1 or -1, got {signs}")
    return signs


def apply_signature(m: ExactMatrix, s: SignatureVector | Sequence[int]) -> ExactMatrix:
    """
    S·M·S: entry (i, j) becomes s_i s_j M(i, j).

    Raises:
        DimensionMismatch: if the signature length differs from the order of m
    """
    signs = _signs(s)
    if len(signs) != m.order:
        raise DimensionMismatch(f"signature of length {len(signs)} for a matrix of order {m.order}")
    return ExactMatrix([
        [signs[i] * signs[j] * m[i, j] for j in range(m.order)] for i in range(m.order)
    ])


def is_nonnegative(m: ExactMatrix) -> bool:
    return all(x >= 0 for x in m.array.flat)


def _canonical(signs: list[int], m: ExactMatrix) -> list[int]:
    # one free global sign per pattern component; fix it by the component's first vertex
    for component in nx.connected_components(pattern_graph(m)):
        first = min(component)
        if signs[first] < 0:
            for i in component:
                signs[i] = -signs[i]
    return signs


def signature_search(m: ExactMatrix, labels: Sequence[str] | None = None,
                     max_order: int | None = None) -> SignatureSearch:
    """
    Look for a signature making S·M·S entrywise non-negative.

    Walks the 2^(n-1) sign vectors with s_1 = +1 in reflected Gray-code
    order, so consecutive vectors differ in one sign and the count of
    negative entries is updated along a single row.

    Args:
        m: symmetric matrix
        labels: vertex names for the result, defaults to "1".."n"
        max_order: search size limit, defaults to
            settings.signature_search_max_order

    Returns:
        SignatureSearch holding the signature, in which the first vertex of
        every component of the pattern of m is +1, and the number of sign
        vectors scanned

    Raises:
        ResourceLimit: if m is larger than max_order
    """
    n = m.order
    limit = settings.signature_search_max_order if max_order is None else max_order
    if n > limit:
        raise ResourceLimit(f"signature search is capped at order {limit}")
    names = tuple(labels) if labels is not None else _default_labels(n)
    if any(m[i, i] < 0 for i in range(n)):
        return SignatureSearch(signature=None, scanned=0)

    entry_sign = [[(m[i, j] > 0) - (m[i, j] < 0) if i != j else 0 for j in range(n)] for i in range(n)]
    signs = [1] * n
    negative = sum(1 for i in range(n) for j in range(i + 1, n) if entry_sign[i][j] < 0)
    scanned = 1
    total = 1 << max(n - 1, 0)

    while negative and scanned < total:
        k = (scanned & -scanned).bit_length()
        for j in range(n):
            e = entry_sign[k][j]
            if e:
                negative += 1 if signs[k] * signs[j] * e > 0 else -1
        signs[k] = -signs[k]
        scanned += 1

    logger.debug("signature search on order %d scanned %d of %d vectors", n, scanned, total)
    if negative:
        return SignatureSearch(signature=None, scanned=scanned)
    return SignatureSearch(
        signature=SignatureVector(vertices=names, signs=tuple(_canonical(signs, m))),
        scanned=scanned,
    )


def exhaustive_signature_search(m: ExactMatrix, labels: Sequence[str] | None = None) -> SignatureVector | None:
    """The signature found by signature_search, or None when none exists."""
    return signature_search(m, labels).signature
