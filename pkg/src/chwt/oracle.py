"""Brute-force dense matrices built by literal expansion of the recursions.

Everything here is deliberately naive: matrices are assembled with explicit
Kronecker products and stacking, and applied with a plain dense product.  The
fast transforms are tested against these, so nothing in this module shares
code with :mod:`chwt.transforms`.

Matrices are C-ordered (row-major) 2-D numpy arrays.  ``Scaling.UNNORMALIZED``
drops every 1/sqrt(2) factor and yields exact ``int64`` entries;
``Scaling.ORTHONORMAL`` keeps them and yields ``float64``.
"""
from __future__ import annotations

import enum

import numpy as np

from .errors import CapacityError, StructureError

MAX_DENSE_LEVEL = 12


class Scaling(str, enum.Enum):
    ORTHONORMAL = "orthonormal"
    UNNORMALIZED = "unnormalized"


def _check_level(m: int) -> None:
    if m < 0:
        raise ValueError(f"level must be non-negative, got {m}")
    if m > MAX_DENSE_LEVEL:
        raise CapacityError(
            f"dense matrices are limited to m <= {MAX_DENSE_LEVEL} (got m={m})"
        )


def _factor(mode: Scaling):
    mode = Scaling(mode)
    if mode is Scaling.ORTHONORMAL:
        return 1.0 / np.sqrt(2.0), np.float64
    return 1, np.int64


def identity_dense(m: int, mode: Scaling = Scaling.UNNORMALIZED) -> np.ndarray:
    _, dtype = _factor(mode)
    return np.eye(2**m, dtype=dtype)


def hadamard_dyadic_dense(m: int, mode: Scaling = Scaling.UNNORMALIZED) -> np.ndarray:
    """Dyadic (Paley) ordered Hadamard matrix H_m.

    H_{k+1} = c * [H_k kron (1 1); H_k kron (1 -1)], with c = 1/sqrt(2) in
    orthonormal mode and 1 otherwise.
    """
    _check_level(m)
    c, dtype = _factor(mode)
    plus = np.array([[1, 1]], dtype=dtype)
    minus = np.array([[1, -1]], dtype=dtype)
    h = np.ones((1, 1), dtype=dtype)
    for _ in range(m):
        h = c * np.vstack([np.kron(h, plus), np.kron(h, minus)])
    return np.ascontiguousarray(h)


def haar_dense(m: int, mode: Scaling = Scaling.UNNORMALIZED) -> np.ndarray:
    """Haar matrix Psi_m.

    Psi_{k+1} = c * [Psi_k kron (1 1); I_k kron (1 -1)].
    """
    _check_level(m)
    c, dtype = _factor(mode)
    plus = np.array([[1, 1]], dtype=dtype)
    minus = np.array([[1, -1]], dtype=dtype)
    psi = np.ones((1, 1), dtype=dtype)
    for k in range(m):
        eye = np.eye(2**k, dtype=dtype)
        psi = c * np.vstack([np.kron(psi, plus), np.kron(eye, minus)])
    return np.ascontiguousarray(psi)


def hadamard_natural_dense(m: int, mode: Scaling = Scaling.UNNORMALIZED) -> np.ndarray:
    """Sylvester (natural) ordered Hadamard matrix: m-fold Kronecker power of H_1."""
    _check_level(m)
    c, dtype = _factor(mode)
    block = c * np.array([[1, 1], [1, -1]], dtype=dtype)
    h = np.ones((1, 1), dtype=dtype)
    for _ in range(m):
        h = np.kron(block, h)
    return np.ascontiguousarray(h)


def block_diag(*blocks: np.ndarray) -> np.ndarray:
    n = sum(b.shape[0] for b in blocks)
    dtype = np.result_type(*blocks)
    out = np.zeros((n, n), dtype=dtype)
    at = 0
    for b in blocks:
        k = b.shape[0]
        out[at : at + k, at : at + k] = b
        at += k
    return out


def cascade_factor_dense(m: int, r: int, mode: Scaling = Scaling.UNNORMALIZED) -> np.ndarray:
    """Stage-r cascade factor I_{r-1} kron blockdiag(I_{m-r}, Psi_{m-r})."""
    _check_level(m)
    if not 1 <= r <= m - 1:
        raise ValueError(f"stage r must satisfy 1 <= r <= m-1 (m={m}, r={r})")
    inner = block_diag(identity_dense(m - r, mode), haar_dense(m - r, mode))
    return np.ascontiguousarray(np.kron(identity_dense(r - 1, mode), inner))


def cascade_product_dense(m: int, mode: Scaling = Scaling.UNNORMALIZED) -> np.ndarray:
    """F_{m-1} ... F_1 Psi_m, multiplied out factor by factor."""
    out = haar_dense(m, mode)
    for r in range(1, m):
        out = cascade_factor_dense(m, r, mode) @ out
    return out


def haar_walsh_dense(m: int, mode: Scaling = Scaling.UNNORMALIZED) -> np.ndarray:
    """The Haar-to-Walsh map H_m Psi_m^{-1}.

    Psi_m has orthogonal rows, so Psi_m^{-1} = Psi_m^T D^{-1} with
    D = diag(Psi_m Psi_m^T).  In orthonormal mode D = I and this is
    H_m Psi_m^T; in unnormalized mode the column division is exact.
    """
    h = hadamard_dyadic_dense(m, mode)
    psi = haar_dense(m, mode)
    gram = psi @ psi.T
    norms = np.diag(gram)
    off = gram - np.diag(norms)
    if np.any(off != 0) and Scaling(mode) is Scaling.UNNORMALIZED:
        raise StructureError("Haar rows are not orthogonal")
    prod = h @ psi.T
    if Scaling(mode) is Scaling.ORTHONORMAL:
        return prod
    if np.any(prod % norms[None, :] != 0):
        raise StructureError("Haar-Walsh product is not integral")
    return prod // norms[None, :]


def haar_walsh_blocks_dense(m: int, mode: Scaling = Scaling.UNNORMALIZED) -> np.ndarray:
    """Explicit blockdiag(1, H_0, H_1, ..., H_{m-1})."""
    _check_level(m)
    blocks = [hadamard_dyadic_dense(0, mode)]
    blocks += [hadamard_dyadic_dense(j, mode) for j in range(m)]
    return block_diag(*blocks)


def mat_vec(matrix: np.ndarray, x) -> np.ndarray:
    """Dense matrix-vector product, the reference semantics for every fast path."""
    matrix = np.asarray(matrix)
    x = np.asarray(x)
    if matrix.ndim != 2 or x.ndim != 1 or matrix.shape[1] != x.shape[0]:
        raise ValueError(
            f"dimension mismatch: matrix {matrix.shape} vs vector {x.shape}"
        )
    out = np.zeros(matrix.shape[0], dtype=np.result_type(matrix, x))
    for i in range(matrix.shape[0]):
        out[i] = np.dot(matrix[i], x)
    return out


def row_permutation_between(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Return p with a[i] == b[p[i]] for every row i.

    Raises StructureError if b has duplicate rows or a row of a has no match.
    """
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape or a.ndim != 2:
        raise StructureError(f"shape mismatch: {a.shape} vs {b.shape}")
    index: dict[bytes, int] = {}
    for j, row in enumerate(b):
        key = np.ascontiguousarray(row).tobytes()
        if key in index:
            raise StructureError(f"rows {index[key]} and {j} of B are identical")
        index[key] = j
    perm = np.empty(a.shape[0], dtype=np.int64)
    for i, row in enumerate(a):
        key = np.ascontiguousarray(row, dtype=b.dtype).tobytes()
        if key not in index:
            raise StructureError(f"row {i} of A has no match in B")
        perm[i] = index[key]
    if len(set(perm.tolist())) != len(perm):
        raise StructureError("row matching is not a bijection")
    return perm
