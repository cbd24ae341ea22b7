"""Exact linear algebra over the integers.

Small dense matrices only. Matrices are numpy arrays with ``dtype=object``
holding Python ints, so arithmetic is arbitrary precision and never touches
floating point. Ranks, kernels, cokernels and torsion are read off an
integer Smith decomposition; :func:`rational_rank` is an independent
Fraction-based elimination used to cross-check ranks in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np


def to_matrix(data) -> np.ndarray:
    """Copy ``data`` into a rectangular object array of Python ints."""
    arr = np.array(data, dtype=object)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2d matrix, got ndim={arr.ndim}")
    out = np.empty(arr.shape, dtype=object)
    for i in range(arr.shape[0]):
        for j in range(arr.shape[1]):
            x = arr[i, j]
            if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
                raise ValueError(f"non-integer entry {x!r} at ({i}, {j})")
            out[i, j] = int(x)
    return out


def zeros(m: int, n: int) -> np.ndarray:
    out = np.empty((m, n), dtype=object)
    out[:, :] = 0
    return out


def identity(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = 1
    return out


def to_vector(data) -> tuple[int, ...]:
    vec = tuple(int(x) for x in data)
    return vec


def gcd_vector(v) -> int:
    return math.gcd(*(int(x) for x in v)) if len(v) else 0


def is_primitive(v) -> bool:
    """A primitive vector is nonzero with coprime entries."""
    return gcd_vector(v) == 1


def det(a) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    m = to_matrix(a)
    n, n2 = m.shape
    if n != n2:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for t in range(n - 1):
        if m[t, t] == 0:
            pivot_row = next((r for r in range(t + 1, n) if m[r, t] != 0), None)
            if pivot_row is None:
                return 0
            m[[t, pivot_row], :] = m[[pivot_row, t], :]
            sign = -sign
        for i in range(t + 1, n):
            for j in range(t + 1, n):
                m[i, j] = (m[i, j] * m[t, t] - m[i, t] * m[t, j]) // prev
            m[i, t] = 0
        prev = m[t, t]
    return sign * int(m[n - 1, n - 1])


def rational_rank(a) -> int:
    """Rank by Gaussian elimination over the rationals.

    Kept deliberately independent of :func:`smith_form` so the two can be
    played against each other as exact oracles.
    """
    m = to_matrix(a)
    rows = [[Fraction(int(x)) for x in row] for row in m]
    nrows = len(rows)
    ncols = m.shape[1]
    rank_ = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank_, nrows) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank_], rows[pivot] = rows[pivot], rows[rank_]
        inv = 1 / rows[rank_][col]
        rows[rank_] = [x * inv for x in rows[rank_]]
        for r in range(nrows):
            if r != rank_ and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank_])]
        rank_ += 1
    return rank_


@dataclass(frozen=True, eq=False)
class SmithForm:
    """Decomposition A = S @ D @ T with S, T unimodular and D diagonal.

    The diagonal is nonnegative and satisfies d1 | d2 | ... ; `s_inv` and
    `t_inv` are the exact integer inverses of the transforms.
    """

    d: np.ndarray
    s: np.ndarray
    t: np.ndarray
    s_inv: np.ndarray
    t_inv: np.ndarray

    @property
    def diagonal(self) -> tuple[int, ...]:
        k = min(self.d.shape)
        return tuple(int(self.d[i, i]) for i in range(k))

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x != 0)


def smith_form(a) -> SmithForm:
    """Smith decomposition of an integer matrix.

    Classical pivoting algorithm: move a nonzero entry to the pivot
    position, shrink it to the gcd of its row and column by Euclidean
    steps, then absorb any entry of the remaining block it fails to
    divide. Row operations are mirrored on S / s_inv, column operations
    on T / t_inv, so ``a == S @ D @ T`` holds throughout.
    """
    d = to_matrix(a)
    m, n = d.shape
    s, s_inv = identity(m), identity(m)
    t, t_inv = identity(n), identity(n)

    def row_op(i, j, q):
        # row_i -= q * row_j
        d[i, :] -= q * d[j, :]
        s[:, j] += q * s[:, i]
        s_inv[i, :] -= q * s_inv[j, :]

    def col_op(i, j, q):
        # col_i -= q * col_j
        d[:, i] -= q * d[:, j]
        t[j, :] += q * t[i, :]
        t_inv[:, i] -= q * t_inv[:, j]

    def swap_rows(i, j):
        d[[i, j], :] = d[[j, i], :]
        s[:, [i, j]] = s[:, [j, i]]
        s_inv[[i, j], :] = s_inv[[j, i], :]

    def swap_cols(i, j):
        d[:, [i, j]] = d[:, [j, i]]
        t[[i, j], :] = t[[j, i], :]
        t_inv[:, [i, j]] = t_inv[:, [j, i]]

    def negate_row(i):
        d[i, :] = -d[i, :]
        s[:, i] = -s[:, i]
        s_inv[i, :] = -s_inv[i, :]

    for pivot in range(min(m, n)):
        found = next(
            ((i, j) for i in range(pivot, m) for j in range(pivot, n) if d[i, j] != 0),
            None,
        )
        if found is None:
            break
        swap_rows(pivot, found[0])
        swap_cols(pivot, found[1])
        while True:
            if d[pivot, pivot] < 0:
                negate_row(pivot)
            p = d[pivot, pivot]
            r = next((i for i in range(pivot + 1, m) if d[i, pivot] != 0), None)
            if r is not None:
                q = d[r, pivot] // p
                if q:
                    row_op(r, pivot, q)
                if d[r, pivot] != 0:
                    swap_rows(pivot, r)
                continue
            c = next((j for j in range(pivot + 1, n) if d[pivot, j] != 0), None)
            if c is not None:
                q = d[pivot, c] // p
                if q:
                    col_op(c, pivot, q)
                if d[pivot, c] != 0:
                    swap_cols(pivot, c)
                continue
            stray = next(
                ((i, j) for i in range(pivot + 1, m) for j in range(pivot + 1, n)
                 if d[i, j] % p != 0),
                None,
            )
            if stray is None:
                break
            row_op(pivot, stray[0], -1)
    return SmithForm(d=d, s=s, t=t, s_inv=s_inv, t_inv=t_inv)


def rank(a) -> int:
    return smith_form(a).rank


def elementary_divisors(a) -> tuple[int, ...]:
    """Nontrivial invariant factors (entries different from 0 and 1)."""
    return tuple(x for x in smith_form(a).diagonal if x not in (0, 1))


def kernel_basis(a) -> np.ndarray:
    """Rows form a basis of the lattice of integer solutions of A x = 0.

    The lattice is saturated (it is the intersection of a rational
    subspace with the integer lattice), so every row is primitive.
    """
    mat = to_matrix(a)
    m, n = mat.shape
    sf = smith_form(mat)
    diag = sf.diagonal
    free = [j for j in range(n) if j >= len(diag) or diag[j] == 0]
    basis = zeros(len(free), n)
    for row, j in enumerate(free):
        basis[row, :] = sf.t_inv[:, j]
    return basis


def cokernel_free_basis(a) -> np.ndarray:
    """Rows represent a basis of the free part of Z^m / (image of A)."""
    mat = to_matrix(a)
    m, n = mat.shape
    sf = smith_form(mat)
    diag = sf.diagonal
    free = [i for i in range(m) if i >= len(diag) or diag[i] == 0]
    basis = zeros(len(free), m)
    for row, i in enumerate(free):
        basis[row, :] = sf.s[:, i]
    return basis


def cokernel_free_coordinates(sf: SmithForm, vectors) -> np.ndarray:
    """Coordinates of row vectors in the free part of the cokernel of A.

    ``sf`` must be the Smith decomposition of A (an m x n matrix); the
    vectors live in Z^m. Column i of the result is the image of vector i.
    """
    vecs = to_matrix(vectors)
    m = sf.s.shape[0]
    if vecs.shape[1] != m:
        raise ValueError(f"vectors of length {vecs.shape[1]} do not live in Z^{m}")
    diag = sf.diagonal
    free = [i for i in range(m) if i >= len(diag) or diag[i] == 0]
    coords = sf.s_inv @ vecs.T
    return coords[free, :]


def is_unimodular(a) -> bool:
    mat = to_matrix(a)
    return mat.shape[0] == mat.shape[1] and det(mat) in (1, -1)


def unimodular_inverse(a) -> np.ndarray:
    """Exact integer inverse of a matrix with determinant +-1."""
    mat = to_matrix(a)
    sf = smith_form(mat)
    if any(x != 1 for x in sf.diagonal) or mat.shape[0] != mat.shape[1]:
        raise ValueError("matrix is not unimodular")
    # a = s @ t, so the inverse is t_inv @ s_inv.
    return sf.t_inv @ sf.s_inv
