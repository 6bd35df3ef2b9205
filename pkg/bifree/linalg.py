# -*- coding: utf-8 -*-

import numpy as np

from .errors import DimensionMismatchError


class SparseBitMatrix(object):
    """Defines a column-major sparse matrix over Z2. Each column is
    stored as a strictly increasing tuple of row indices.

    Parameters
    ----------
    n_rows : int
        Number of rows.
    columns : list
        List of row index sequences, one per column.
    check : bool, optional (default: True)
        Whether or not to verify that row indices are in range and
        strictly increasing.

    Attributes
    ----------
    shape : tuple
        (n_rows, n_cols)
    nnz : int
        Number of non-zero entries.

    """

    __slots__ = ("n_rows", "columns")

    def __init__(self, n_rows, columns=(), check=True):
        self.n_rows = int(n_rows)
        self.columns = [tuple(col) for col in columns]
        if check:
            self._check()

    def _check(self):
        for j, col in enumerate(self.columns):
            for a, b in zip(col, col[1:]):
                if a >= b:
                    raise ValueError(f"column {j} is not strictly increasing")
            if col and (col[0] < 0 or col[-1] >= self.n_rows):
                raise ValueError(f"column {j} has a row index out of range")

    def __repr__(self):
        return f"<{self.__class__.__name__} shape={self.shape} nnz={self.nnz}>"

    def __eq__(self, other):
        if not isinstance(other, SparseBitMatrix):
            return NotImplemented
        return self.n_rows == other.n_rows and self.columns == other.columns

    def __len__(self):
        return len(self.columns)

    def __getitem__(self, j):
        return self.columns[j]

    @property
    def n_cols(self):
        return len(self.columns)

    @property
    def shape(self):
        return (self.n_rows, self.n_cols)

    @property
    def nnz(self):
        return sum(len(col) for col in self.columns)

    def is_zero(self):
        return not any(self.columns)

    def max_column_nnz(self):
        return max((len(col) for col in self.columns), default=0)

    @classmethod
    def zeros(cls, n_rows, n_cols):
        return cls(n_rows, [()] * n_cols, check=False)

    @classmethod
    def identity(cls, n):
        return cls(n, [(j,) for j in range(n)], check=False)

    @classmethod
    def from_sets(cls, n_rows, column_sets):
        """Builds a matrix from unordered collections of row indices."""
        return cls(n_rows, [sorted(s) for s in column_sets])

    @classmethod
    def from_dense(cls, array):
        array = np.asarray(array) % 2
        n_rows, n_cols = array.shape
        columns = [np.flatnonzero(array[:, j]).tolist() for j in range(n_cols)]
        return cls(n_rows, columns, check=False)

    def to_dense(self):
        """Returns the matrix as a numpy.ndarray of dtype uint8."""
        dense = np.zeros(self.shape, dtype=np.uint8)
        for j, col in enumerate(self.columns):
            dense[list(col), j] = 1
        return dense

    def submatrix(self, rows, cols):
        """Restricts the matrix to the given rows and columns.

        Parameters
        ----------
        rows : list
            Increasing list of kept row indices.
        cols : list
            Increasing list of kept column indices.

        Returns
        -------
        M : bifree.linalg.SparseBitMatrix
            Rows and columns are renumbered in the given order.

        """
        new_index = {r: i for i, r in enumerate(rows)}
        columns = []
        for j in cols:
            columns.append([new_index[r] for r in self.columns[j] if r in new_index])
        return SparseBitMatrix(len(rows), columns, check=False)


def mat_mul(A, B):
    """Computes A·B over Z2 column by column with an accumulator array.

    The accumulator is reset through the list of touched rows, so a
    product column costs O(l·q) where q bounds the columns of B and l
    the columns of A, plus O(n_rows) once for the allocation.

    Parameters
    ----------
    A : bifree.linalg.SparseBitMatrix
    B : bifree.linalg.SparseBitMatrix

    Returns
    -------
    C : bifree.linalg.SparseBitMatrix

    """
    if A.n_cols != B.n_rows:
        raise DimensionMismatchError(
            f"cannot multiply {A.shape} by {B.shape} matrices"
        )
    acc = bytearray(A.n_rows)
    seen = bytearray(A.n_rows)
    a_columns = A.columns
    columns = []
    for col in B.columns:
        touched = []
        for k in col:
            for r in a_columns[k]:
                if not seen[r]:
                    seen[r] = 1
                    touched.append(r)
                acc[r] ^= 1
        out = []
        for r in touched:
            if acc[r]:
                out.append(r)
            acc[r] = 0
            seen[r] = 0
        out.sort()
        columns.append(out)
    return SparseBitMatrix(A.n_rows, columns, check=False)


def mat_add(A, B):
    """Computes A + B over Z2 (column-wise symmetric difference)."""
    if A.shape != B.shape:
        raise DimensionMismatchError(f"cannot add {A.shape} and {B.shape} matrices")
    columns = [sorted(set(a).symmetric_difference(b)) for a, b in zip(A.columns, B.columns)]
    return SparseBitMatrix(A.n_rows, columns, check=False)


def rank(A):
    """Returns the Z2 rank of A by column reduction.

    Columns are packed into Python integers and reduced against the
    pivot (highest set bit) of previously reduced columns.
    """
    pivots = {}
    r = 0
    for col in A.columns:
        v = 0
        for i in col:
            v |= 1 << i
        while v:
            p = v.bit_length() - 1
            if p in pivots:
                v ^= pivots[p]
            else:
                pivots[p] = v
                r += 1
                break
    return r


def bmat(blocks, row_sizes, col_sizes):
    """Assembles a block matrix.

    Parameters
    ----------
    blocks : list
        Two-dimensional list of SparseBitMatrix or None (zero block).
    row_sizes : list
        Number of rows of each block row.
    col_sizes : list
        Number of columns of each block column.

    Returns
    -------
    M : bifree.linalg.SparseBitMatrix

    """
    row_offsets = np.concatenate(([0], np.cumsum(row_sizes))).astype(int).tolist()
    columns = []
    for bj, n_cols in enumerate(col_sizes):
        for i, block_row in enumerate(blocks):
            block = block_row[bj]
            if block is not None and block.shape != (row_sizes[i], n_cols):
                raise DimensionMismatchError(
                    f"block ({i}, {bj}) has shape {block.shape},"
                    f" expected {(row_sizes[i], n_cols)}"
                )
        for j in range(n_cols):
            col = []
            for i, block_row in enumerate(blocks):
                block = block_row[bj]
                if block is None:
                    continue
                offset = row_offsets[i]
                col.extend(offset + r for r in block.columns[j])
            columns.append(col)
    return SparseBitMatrix(row_offsets[-1], columns, check=False)
