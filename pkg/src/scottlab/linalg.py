"""Exact dense linear algebra over GF(p^m) on integer code matrices."""

from __future__ import annotations

import numpy as np

from .gf import FieldCtx
from . import polys


def mat_eye(n):
    return np.eye(n, dtype=np.int64)


def mat_mul(F: FieldCtx, A, B):
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if F.m == 1:
        return (A @ B) % F.p
    if A.shape[1] == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    prod = F.mul(A[:, :, None], B[None, :, :])
    return F.sum(prod, axis=1)


def mat_pow(F, A, e):
    n = A.shape[0]
    out = mat_eye(n)
    base = A
    while e:
        if e & 1:
            out = mat_mul(F, out, base)
        base = mat_mul(F, base, base)
        e >>= 1
    return out


def rref(F: FieldCtx, A):
    """Reduced row echelon form; returns (R, pivot_columns)."""
    R = np.array(A, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    nrows, ncols = R.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        R[r] = F.mul(R[r], int(F.inv(int(R[r, c]))))
        others = np.nonzero(R[:, c])[0]
        others = others[others != r]
        if len(others):
            R[others] = F.sub(R[others], F.mul(R[others, c][:, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, pivots


def rank(F, A):
    return len(rref(F, A)[1])


def row_space(F, A):
    """Canonical (rref) basis of the row space, nonzero rows only."""
    R, piv = rref(F, A)
    return R[: len(piv)]


def null_space(F, A):
    """Canonical basis (rows) of the right kernel of A."""
    A = np.asarray(A, dtype=np.int64)
    nrows, ncols = A.shape if A.ndim == 2 else (0, 0)
    R, piv = rref(F, A)
    free = [c for c in range(ncols) if c not in piv]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for k, c in enumerate(free):
        basis[k, c] = 1
        for i, pc in enumerate(piv):
            basis[k, pc] = F.neg(int(R[i, c]))
    return row_space(F, basis) if len(free) else basis


def solve(F, A, b):
    """One solution x of A x = b, or None if inconsistent."""
    A = np.asarray(A, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64).reshape(-1)
    aug = np.concatenate([A, b[:, None]], axis=1)
    R, piv = rref(F, aug)
    ncols = A.shape[1]
    if ncols in piv:
        return None
    x = np.zeros(ncols, dtype=np.int64)
    for i, c in enumerate(piv):
        x[c] = R[i, ncols]
    return x


def solve_matrix(F, A, B):
    """X with A X = B (one solution), or None. B given column-wise."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    aug = np.concatenate([A, B], axis=1)
    R, piv = rref(F, aug)
    ncols = A.shape[1]
    if any(c >= ncols for c in piv):
        return None
    X = np.zeros((ncols, B.shape[1]), dtype=np.int64)
    for i, c in enumerate(piv):
        X[c] = R[i, ncols:]
    return X


def mat_inv(F, A):
    """Inverse of A, or None if singular."""
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[0]
    R, piv = rref(F, np.concatenate([A, mat_eye(n)], axis=1))
    if len(piv) < n or piv[:n] != list(range(n)):
        return None
    return R[:, n:]


def coords_in_rowspace(F, basis, V):
    """X with X @ basis = V, for independent `basis` rows; None if outside."""
    basis = np.asarray(basis, dtype=np.int64)
    V = np.atleast_2d(np.asarray(V, dtype=np.int64))
    X = solve_matrix(F, basis.T, V.T)
    if X is None:
        return None
    return X.T


def poly_eval_mat(F, f, A):
    """f(A) by Horner."""
    n = A.shape[0]
    acc = np.zeros((n, n), dtype=np.int64)
    for c in polys.poly_trim(f)[::-1]:
        acc = mat_mul(F, acc, A)
        if c:
            acc[np.diag_indices(n)] = F.add(acc[np.diag_indices(n)], int(c))
    return acc


def char_poly(F: FieldCtx, A):
    """Monic characteristic polynomial det(xI - A), via Hessenberg reduction."""
    A = np.array(A, dtype=np.int64, copy=True)
    n = A.shape[0]
    if n == 0:
        return polys.poly(np.array([1]))
    H = A
    for c in range(n - 2):
        nz = np.nonzero(H[c + 1 :, c])[0]
        if len(nz) == 0:
            continue
        piv = c + 1 + int(nz[0])
        if piv != c + 1:
            H[[c + 1, piv]] = H[[piv, c + 1]]
            H[:, [c + 1, piv]] = H[:, [piv, c + 1]]
        inv = int(F.inv(int(H[c + 1, c])))
        for r in range(c + 2, n):
            f = int(F.mul(int(H[r, c]), inv))
            if f:
                H[r] = F.sub(H[r], F.mul(f, H[c + 1]))
                H[:, c + 1] = F.add(H[:, c + 1], F.mul(f, H[:, r]))
    # charpoly recurrence for upper Hessenberg matrices
    ps = [polys.poly(np.array([1]))]
    for k in range(n):
        term = polys.poly_mul(F, polys.poly(np.array([int(F.neg(int(H[k, k]))), 1])), ps[k])
        prod = 1
        for i in range(k - 1, -1, -1):
            prod = int(F.mul(prod, int(H[i + 1, i])))
            if prod == 0:
                break
            coeff = int(F.mul(int(H[i, k]), prod))
            if coeff:
                term = polys.poly_sub(F, term, polys.poly_scale(F, ps[i], coeff))
        ps.append(term)
    return ps[n]


def min_poly(F: FieldCtx, A):
    """Monic minimal polynomial of the square matrix A."""
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[0]
    if n == 0:
        return polys.poly(np.array([1]))
    one = polys.poly(np.array([1]))
    mp = one
    covered = np.zeros((0, n), dtype=np.int64)
    for seed in range(n):
        e = np.zeros(n, dtype=np.int64)
        e[seed] = 1
        if len(covered) and coords_in_rowspace(F, covered, e) is not None:
            continue
        kry = [e]
        v = e
        while True:
            v = mat_mul(F, v[None, :], A.T)[0]  # v <- A v (row convention: v A^T)
            coeffs = coords_in_rowspace(F, np.array(kry), v)
            if coeffs is not None:
                k = len(kry)
                local = np.zeros(k + 1, dtype=np.int64)
                local[k] = 1
                local[:k] = F.neg(coeffs[0])
                break
            kry.append(v)
        local = polys.poly_trim(local)
        g = polys.poly_gcd(F, mp, local)
        mp = polys.poly_monic(F, polys.poly_mul(F, mp, polys.poly_divmod(F, local, g)[0]))
        covered = row_space(F, np.concatenate([covered, np.array(kry)], axis=0))
        if len(covered) == n:
            break
    assert not poly_nonzero_at_matrix(F, mp, A), "min_poly failed to annihilate"
    return mp


def poly_nonzero_at_matrix(F, f, A):
    return bool(poly_eval_mat(F, f, A).any())


def solve_linear(F: FieldCtx, A, mode: str, b=None):
    """Spec-surface dispatcher over the elimination kernels.

    mode 'rref' -> reduced row echelon form; 'kernel' -> right null space
    basis (rows); 'image' -> row-space basis of A^T columnspace, i.e. a
    basis of {Ax}; 'solve' -> one solution of A x = b or None.
    """
    A = np.asarray(A, dtype=np.int64)
    if mode == "rref":
        return rref(F, A)[0]
    if mode == "kernel":
        return null_space(F, A)
    if mode == "image":
        return row_space(F, A.T)
    if mode == "solve":
        if b is None:
            raise ValueError("solve mode needs b")
        return solve(F, A, b)
    raise ValueError(f"unknown mode {mode!r}")
