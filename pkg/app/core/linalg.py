"""
Exact Gaussian elimination over the rationals.

All routines take and return numpy object arrays of Fractions; nothing here
ever touches a float.
"""
from fractions import Fraction

import numpy as np

from app.exceptions import DimensionMismatch, SingularCore


def fraction_array(rows, shape: tuple[int, int] | None = None) -> np.ndarray:
    """Build an object array of Fractions, optionally of an explicit (possibly empty) shape."""
    if shape is not None and 0 in shape:
        return np.empty(shape, dtype=object)
    data = np.array(rows, dtype=object)
    if data.ndim != 2:
        raise DimensionMismatch(f"expected a 2-d array, got shape {data.shape}")
    out = np.empty(data.shape, dtype=object)
    for index, x in np.ndenumerate(data):
        out[index] = Fraction(x)
    return out


def identity_array(n: int) -> np.ndarray:
    """Construct an identity matrix I."""
    return fraction_array([[int(i == j) for j in range(n)] for i in range(n)], shape=(n, n))


def matmul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Exact product that also copes with empty inner dimensions."""
    if x.shape[1] != y.shape[0]:
        raise DimensionMismatch(f"cannot multiply {x.shape} by {y.shape}")
    n_rows, n_cols = x.shape[0], y.shape[1]
    if n_rows == 0 or n_cols == 0:
        return fraction_array([], shape=(n_rows, n_cols))
    if x.shape[1] == 0:
        return fraction_array([[0] * n_cols for _ in range(n_rows)])
    return x.dot(y)


def reduced_row_echelon(x: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """
    Reduced row echelon form of a rectangular Fraction matrix.

    Args:
        x: object array of Fractions (left untouched)

    Returns:
        (R, pivot_columns) where the first len(pivot_columns) rows of R are
        the nonzero rows and R[r, pivot_columns[r]] == 1
    """
    r = x.copy()
    n_rows, n_cols = r.shape
    pivots: list[int] = []
    piv_r = 0
    for piv_c in range(n_cols):
        if piv_r == n_rows:
            break
        for i_row in range(piv_r, n_rows):
            if r[i_row, piv_c] != 0:
                break
        else:
            continue
        if i_row != piv_r:
            r[[piv_r, i_row]] = r[[i_row, piv_r]]

        r[piv_r, :] = r[piv_r, :] / r[piv_r, piv_c]
        for i in range(n_rows):
            if i != piv_r and r[i, piv_c] != 0:
                r[i, :] = r[i, :] - r[i, piv_c] * r[piv_r, :]
        pivots.append(piv_c)
        piv_r += 1
    return r, pivots


def rank(x: np.ndarray) -> int:
    """Exact rank."""
    if 0 in x.shape:
        return 0
    return len(reduced_row_echelon(x)[1])


def inverse(x: np.ndarray) -> np.ndarray:
    """
    Inverse of a square Fraction matrix by Gauss-Jordan elimination on [X I].

    Raises:
        SingularCore: if X has no inverse
    """
    n = x.shape[0]
    if x.shape != (n, n):
        raise DimensionMismatch(f"matrix is not square (shape = {x.shape})")
    if n == 0:
        return fraction_array([], shape=(0, 0))

    xi = np.hstack((x, identity_array(n)))
    reduced, pivots = reduced_row_echelon(xi)
    if pivots[:n] != list(range(n)):
        raise SingularCore("matrix is singular")
    return reduced[:, n:]


def full_rank_factorization(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    Factor X (n×n, rank r) as F·G with F n×r and G r×n, both of rank r.

    G is the nonzero part of the reduced row echelon form and F the pivot
    columns of X.
    """
    reduced, pivots = reduced_row_echelon(x)
    r = len(pivots)
    g = reduced[:r, :]
    f = x[:, pivots] if r else fraction_array([], shape=(x.shape[0], 0))
    return f, g
