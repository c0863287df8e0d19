# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled mod-p RREF kernel.

Same contract as _rref_py.rref_mod_p: in-place Gauss-Jordan over F_p on an
int64 C-contiguous matrix, returning the pivot column list. p < 2**31 keeps
every product of two residues inside int64.
"""

import numpy as np

cimport numpy as cnp

ctypedef cnp.int64_t i64


cdef inline i64 _inv_mod(i64 a, i64 p) noexcept:
    # a**(p-2) by square and multiply; a is a nonzero canonical residue.
    cdef i64 result = 1
    cdef i64 base = a
    cdef i64 exp = p - 2
    while exp:
        if exp & 1:
            result = (result * base) % p
        base = (base * base) % p
        exp >>= 1
    return result


def rref_mod_p(i64[:, ::1] mat, long long p):
    """Reduce `mat` in place to RREF over F_p; return pivot columns."""
    cdef Py_ssize_t n_rows = mat.shape[0]
    cdef Py_ssize_t n_cols = mat.shape[1]
    cdef Py_ssize_t row = 0, col, r, j, pivot_row
    cdef i64 pivot, inv, factor, v
    pivots = []
    for col in range(n_cols):
        if row >= n_rows:
            break
        pivot_row = -1
        for r in range(row, n_rows):
            if mat[r, col] != 0:
                pivot_row = r
                break
        if pivot_row < 0:
            continue
        if pivot_row != row:
            for j in range(n_cols):
                v = mat[row, j]
                mat[row, j] = mat[pivot_row, j]
                mat[pivot_row, j] = v
        pivot = mat[row, col]
        if pivot != 1:
            inv = _inv_mod(pivot, p)
            for j in range(n_cols):
                mat[row, j] = (mat[row, j] * inv) % p
        for r in range(n_rows):
            if r == row:
                continue
            factor = mat[r, col]
            if factor == 0:
                continue
            for j in range(n_cols):
                v = (mat[r, j] - factor * mat[row, j]) % p
                if v < 0:
                    v += p
                mat[r, j] = v
        pivots.append(col)
        row += 1
    return pivots
