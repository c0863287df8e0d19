"""Fallback mod-p RREF kernel: numpy row operations, no compiled code.

Same contract as the Cython kernel in _rref_c.pyx: reduce `mat` in place to
reduced row echelon form over F_p and return the pivot column list. Rows are
int64 canonical residues; every intermediate product of two residues fits in
int64 because p < 2**31.
"""

from __future__ import annotations

import numpy as np


def rref_mod_p(mat: np.ndarray, p: int) -> list:
    """Gauss-Jordan elimination of `mat` (modified in place) over F_p.

    Returns the strictly increasing list of pivot columns; the first
    len(pivots) rows of `mat` end up as the canonical RREF basis and all
    remaining rows are zero.
    """
    n_rows, n_cols = mat.shape
    pivots: list = []
    row = 0
    for col in range(n_cols):
        if row >= n_rows:
            break
        nz = np.nonzero(mat[row:, col])[0]
        if nz.size == 0:
            continue
        pivot_row = row + int(nz[0])
        if pivot_row != row:
            mat[[row, pivot_row]] = mat[[pivot_row, row]]
        pivot = int(mat[row, col])
        if pivot != 1:
            mat[row] = (mat[row] * pow(pivot, -1, p)) % p
        others = np.nonzero(mat[:, col])[0]
        others = others[others != row]
        if others.size:
            factors = mat[others, col]
            mat[others] = (mat[others] - factors[:, None] * mat[row]) % p
        pivots.append(col)
        row += 1
    return pivots
