"""Gaussian elimination mod p on numpy int64 matrices."""

from __future__ import annotations

import numpy as np


def row_echelon(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p; returns (R, pivot columns)."""
    R = A.astype(np.int64).copy() % p
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        R[r] = R[r] * pow(int(R[r, c]), -1, p) % p
        mask = np.nonzero(R[:, c])[0]
        mask = mask[mask != r]
        if len(mask):
            R[mask] = (R[mask] - np.outer(R[mask, c], R[r])) % p
        pivots.append(c)
        r += 1
    return R, pivots


def rank(A: np.ndarray, p: int) -> int:
    return len(row_echelon(A, p)[1])


def kernel_dim(A: np.ndarray, p: int) -> int:
    return A.shape[1] - rank(A, p)


def solve(A: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """One solution of A x = b mod p with free variables set to 0,
    or None when the system is inconsistent."""
    rows, cols = A.shape
    aug = np.concatenate([A % p, (b % p).reshape(rows, 1)], axis=1)
    R, pivots = row_echelon(aug, p)
    if cols in pivots:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for r, c in enumerate(pivots):
        x[c] = R[r, cols]
    return x
