"""
Dense exact rational matrix.
"""
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np


def _as_fraction_array(rows: Iterable[Iterable]) -> np.ndarray:
    data = [[Fraction(x) for x in row] for row in rows]
    n = len(data)
    array = np.empty((n, len(data[0]) if n else 0), dtype=object)
    for i, row in enumerate(data):
        for j, x in enumerate(row):
            array[i, j] = x
    return array


class ExactMatrix:
    """
    Square matrix of Fractions backed by a read-only numpy object array.

    Products go through ``ndarray.dot`` on object dtype, which only ever adds
    and multiplies Fractions, so every result is exact. Two matrices compare
    equal iff every entry is equal.
    """

    __slots__ = ("_data",)

    def __init__(self, rows: Sequence[Sequence] | np.ndarray):
        if isinstance(rows, np.ndarray):
            data = np.empty(rows.shape, dtype=object)
            for index, x in np.ndenumerate(rows):
                data[index] = Fraction(x)
        else:
            data = _as_fraction_array(rows)
        if data.ndim != 2 or data.shape[0] != data.shape[1]:
            raise ValueError(f"matrix is not square (shape = {data.shape})")
        data.flags.writeable = False
        self._data = data

    @classmethod
    def zeros(cls, n: int) -> "ExactMatrix":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def order(self) -> int:
        return self._data.shape[0]

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the entries."""
        return self._data

    def __getitem__(self, index):
        return self._data[index]

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix(self._data.dot(other._data))

    def __mul__(self, scalar) -> "ExactMatrix":
        scalar = Fraction(scalar)
        return ExactMatrix(self._data * scalar)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._data.shape == other._data.shape and bool(np.all(self._data == other._data))

    def __hash__(self):
        return hash(tuple(self._data.flat))

    def __repr__(self) -> str:
        rows = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self._data)
        return f"ExactMatrix([{rows}])"

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self._data.T)

    def is_symmetric(self) -> bool:
        return bool(np.all(self._data == self._data.T))

    def is_zero(self) -> bool:
        return not any(x != 0 for x in self._data.flat)

    def nonzero_pattern(self) -> frozenset[tuple[int, int]]:
        """Index pairs (i, j), i < j, of nonzero off-diagonal entries."""
        n = self.order
        return frozenset(
            (i, j) for i in range(n) for j in range(i + 1, n) if self._data[i, j] != 0
        )

    def to_float(self) -> np.ndarray:
        """Nearest-float rounding of every entry."""
        return np.array([[float(x) for x in row] for row in self._data], dtype=float)

    def rows(self) -> list[list[Fraction]]:
        return [list(row) for row in self._data]
