"""Dense exact linear algebra over F_p: row reduction, rank, basis extraction,
and random combinations (the genericity device).

The elimination kernel has two interchangeable implementations: a compiled
Cython extension (apolarity_lab._rref_c) and a numpy fallback
(apolarity_lab._rref_py). The compiled one is picked at import when available;
set APOLAB_PURE=1 to force the fallback. Matrices are row-major int64 arrays
of canonical residues; pivoting is first-nonzero since exact arithmetic has no
magnitude concerns, and the output is the canonical RREF (unique for a given
row space), which makes basis matrices snapshot-testable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import GenericityFailure, InvalidParameter, RaggedInput, TypeTooLarge
from .field import PrimeField, SeededRng
from . import _rref_py

try:
    from . import _rref_c
except ImportError:  # extension not built; fallback covers everything
    _rref_c = None

_FORCE_PURE = os.environ.get("APOLAB_PURE", "") not in ("", "0")

KERNELS = {"python": _rref_py.rref_mod_p}
if _rref_c is not None:
    KERNELS["compiled"] = _rref_c.rref_mod_p

ACTIVE_KERNEL = "compiled" if ("compiled" in KERNELS and not _FORCE_PURE) else "python"


def active_kernel() -> str:
    """Name of the elimination kernel in use: 'compiled' or 'python'."""
    return ACTIVE_KERNEL


@dataclass
class ReducedBasis:
    """Canonical RREF basis of a row space over F_p.

    matrix holds exactly `rank` rows (possibly zero rows removed); each pivot
    entry is 1 and is the only nonzero entry in its column.
    """

    rank: int
    matrix: np.ndarray
    pivot_cols: tuple

    @property
    def cols(self) -> int:
        return self.matrix.shape[1]


def _as_matrix(mat, p: int) -> np.ndarray:
    a = np.array(mat, dtype=np.int64, copy=True, order="C")
    if a.ndim == 1:
        a = a.reshape(1, -1)
    if a.ndim != 2:
        raise InvalidParameter(f"expected a 2-D matrix, got ndim={a.ndim}")
    np.mod(a, p, out=a)
    return a


def rref(mat, p: int, kernel: str | None = None) -> ReducedBasis:
    """Reduced row echelon form over F_p.

    Args:
        mat: anything numpy coerces to a 2-D integer array; not mutated.
        p: prime modulus.
        kernel: 'compiled' or 'python' to force one implementation;
            None uses the active kernel.

    Returns:
        ReducedBasis with the zero rows dropped. Zero-row and zero-matrix
        inputs are allowed and give rank 0.
    """
    a = _as_matrix(mat, p)
    name = kernel or ACTIVE_KERNEL
    impl = KERNELS.get(name)
    if impl is None:
        raise InvalidParameter(
            f"unknown or unavailable kernel {name!r}; "
            f"built: {[k for k, v in KERNELS.items() if v is not None]}"
        )
    if a.shape[0] == 0 or a.shape[1] == 0:
        return ReducedBasis(0, a.reshape(0, a.shape[1] if a.ndim == 2 else 0), ())
    pivots = impl(a, p)
    r = len(pivots)
    return ReducedBasis(r, a[:r].copy(), tuple(pivots))


def rank_of_span(rows: Sequence, p: int) -> int:
    """Dimension of the span of the given coefficient rows; 0 for no rows."""
    rows = list(rows)
    if not rows:
        return 0
    lengths = {len(row) for row in rows}
    if len(lengths) != 1:
        raise RaggedInput(f"rows have mixed lengths {sorted(lengths)}")
    return rref(rows, p).rank


def random_combinations(
    basis: ReducedBasis, c: int, fp: PrimeField, rng: SeededRng
) -> np.ndarray:
    """c independent random F_p-combinations of the basis rows.

    Coefficient vectors are fully random with every entry drawn uniformly from
    [1, p); row independence holds with probability >= 1 - c/p per draw and is
    re-checked, with at most 3 attempts before GenericityFailure (at the
    default prime a failure signals a bug, not bad luck).
    """
    if c < 1:
        raise InvalidParameter("need at least one combination")
    if c > basis.rank:
        raise TypeTooLarge(f"requested {c} combinations of a rank-{basis.rank} space")
    for _ in range(3):
        coeffs = np.array(
            [[fp.random_nonzero(rng) for _ in range(basis.rank)] for _ in range(c)],
            dtype=np.int64,
        )
        out = np.zeros((c, basis.cols), dtype=np.int64)
        for k in range(basis.rank):  # stepwise reduction keeps sums inside int64
            out = (out + coeffs[:, k : k + 1] * basis.matrix[k]) % fp.p
        if rref(out, fp.p).rank == c:
            return out
    raise GenericityFailure(
        f"could not draw {c} independent combinations in 3 attempts (p={fp.p})"
    )
