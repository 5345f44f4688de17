"""Fast transforms: Haar, the cascading-Haar WHT, classical FWHT, Haar-Walsh.

Every transform has an in-place form (``*_inplace``) working on a
caller-provided contiguous buffer and an out-of-place wrapper that copies its
input first.  In unnormalized mode integer input stays ``int64`` and the
results are exact; orthonormal mode works in ``float64``.

Scaling for the WHT-type transforms is deferred: the butterflies are computed
unscaled and :func:`normalize` applies the single 2**(-m/2) factor at the
end.  The Haar transform cannot be scaled uniformly (its rows have different
norms), so orthonormal Haar scales every butterfly by 1/sqrt(2).
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from ._backend import kernels
from .instrumentation import OpTally, record
from .oracle import Scaling
from .orderings import apply_permutation, natural_to_dyadic

INV_SQRT2 = 1.0 / np.sqrt(2.0)


class BlockSlice(NamedTuple):
    offset: int
    size: int


def level_of(n: int) -> int:
    if n <= 0 or n & (n - 1):
        raise ValueError(f"signal length must be a power of two, got {n}")
    return n.bit_length() - 1


def as_signal(x, mode: Scaling = Scaling.UNNORMALIZED) -> np.ndarray:
    """Return a fresh contiguous 1-D copy of ``x`` in the working dtype for ``mode``."""
    arr = np.asarray(x)
    if arr.ndim != 1:
        raise ValueError(f"signal must be one-dimensional, got shape {arr.shape}")
    level_of(arr.shape[0])
    integral = arr.dtype.kind in "biu"
    if Scaling(mode) is Scaling.UNNORMALIZED and integral:
        return np.array(arr, dtype=np.int64, order="C", copy=True)
    return np.array(arr, dtype=np.float64, order="C", copy=True)


def _check_buffer(buf: np.ndarray) -> int:
    if not isinstance(buf, np.ndarray) or buf.ndim != 1:
        raise ValueError("in-place transforms need a 1-D numpy array")
    if not buf.flags.c_contiguous or not buf.flags.writeable:
        raise ValueError("in-place transforms need a contiguous writeable buffer")
    return level_of(buf.shape[0])


def normalize(x, m: int | None = None, tally: OpTally | None = None) -> np.ndarray:
    """Scale an unnormalized WHT result by 2**(-m/2).  Costs 2**m multiplications."""
    arr = np.asarray(x)
    if m is None:
        m = level_of(arr.shape[0])
    out = arr.astype(np.float64) * 2.0 ** (-m / 2)
    record(tally, multiplications=arr.shape[0])
    return out


# -- Haar -------------------------------------------------------------------


def haar_forward_inplace(buf: np.ndarray, mode: Scaling = Scaling.UNNORMALIZED,
                         tally: OpTally | None = None) -> np.ndarray:
    _check_buffer(buf)
    if Scaling(mode) is Scaling.ORTHONORMAL:
        if buf.dtype.kind != "f":
            raise ValueError("orthonormal transforms need a floating-point buffer")
        adds = kernels.haar_forward_scaled(buf, INV_SQRT2)
        record(tally, adds, adds)
    else:
        record(tally, kernels.haar_forward(buf))
    return buf


def haar_forward(x, mode: Scaling = Scaling.UNNORMALIZED,
                 tally: OpTally | None = None) -> np.ndarray:
    """Haar wavelet transform Psi_m x.

    Output layout: [overall sum, coarsest detail, 2 next details, ...,
    2**(m-1) finest details], each detail band in positional order.
    Costs 2(2**m - 1) additions.
    """
    return haar_forward_inplace(as_signal(x, mode), mode, tally)


def haar_inverse(y, mode: Scaling = Scaling.UNNORMALIZED) -> np.ndarray:
    """Invert :func:`haar_forward`.

    Unnormalized inversion halves each reconstructed pair.  For integer input
    that came from :func:`haar_forward` this is exact; integer input outside
    the transform's image is reconstructed in float64 instead.
    """
    mode = Scaling(mode)
    arr = as_signal(y, mode)
    n = arr.shape[0]
    exact = arr.dtype.kind == "i"
    if exact and n > 1 and not _integer_invertible(arr):
        arr = arr.astype(np.float64)
        exact = False
    length = 2
    while length <= n:
        half = length // 2
        s = arr[:half].copy()
        d = arr[half:length].copy()
        if mode is Scaling.ORTHONORMAL:
            arr[0:length:2] = (s + d) * INV_SQRT2
            arr[1:length:2] = (s - d) * INV_SQRT2
        elif exact:
            arr[0:length:2] = (s + d) // 2
            arr[1:length:2] = (s - d) // 2
        else:
            arr[0:length:2] = (s + d) * 0.5
            arr[1:length:2] = (s - d) * 0.5
        length *= 2
    return arr


def _integer_invertible(arr: np.ndarray) -> bool:
    trial = arr.copy()
    length = 2
    while length <= trial.shape[0]:
        half = length // 2
        s = trial[:half].copy()
        d = trial[half:length].copy()
        if np.any((s + d) & 1):
            return False
        trial[0:length:2] = (s + d) // 2
        trial[1:length:2] = (s - d) // 2
        length *= 2
    return True


# -- cascade ----------------------------------------------------------------


def stage_blocks(m: int, r: int) -> list[BlockSlice]:
    """Slices on which stage r applies a Haar transform of size 2**(m-r).

    The complementary identity blocks of the stage factor are skipped.
    """
    if not 1 <= r <= m - 1:
        raise ValueError(f"stage r must satisfy 1 <= r <= m-1 (m={m}, r={r})")
    size = 2 ** (m - r)
    return [BlockSlice(q * 2 * size + size, size) for q in range(2 ** (r - 1))]


def chw_forward_inplace(buf: np.ndarray, mode: Scaling = Scaling.UNNORMALIZED,
                        tally: OpTally | None = None) -> np.ndarray:
    m = _check_buffer(buf)
    if Scaling(mode) is Scaling.ORTHONORMAL and buf.dtype.kind != "f":
        raise ValueError("orthonormal transforms need a floating-point buffer")
    record(tally, kernels.chw_forward(buf))
    if Scaling(mode) is Scaling.ORTHONORMAL and m > 0:
        buf *= 2.0 ** (-m / 2)
        record(tally, multiplications=buf.shape[0])
    return buf


def chw_forward(x, mode: Scaling = Scaling.UNNORMALIZED,
                tally: OpTally | None = None) -> np.ndarray:
    """Dyadic-ordered WHT by cascading Haar transforms.

    One full Haar transform, then for r = 1, ..., m-1 a Haar transform of size
    2**(m-r) on every slice of :func:`stage_blocks`.  Exactly m * 2**m
    additions and no multiplications in unnormalized mode.
    """
    return chw_forward_inplace(as_signal(x, mode), mode, tally)


def chw_forward_reference(x, mode: Scaling = Scaling.UNNORMALIZED,
                          tally: OpTally | None = None) -> np.ndarray:
    """Slice-by-slice form of :func:`chw_forward` driven by :func:`stage_blocks`."""
    buf = as_signal(x, mode)
    m = level_of(buf.shape[0])
    haar_forward_inplace(buf, Scaling.UNNORMALIZED, tally)
    for r in range(1, m):
        for blk in stage_blocks(m, r):
            haar_forward_inplace(buf[blk.offset:blk.offset + blk.size],
                                 Scaling.UNNORMALIZED, tally)
    if Scaling(mode) is Scaling.ORTHONORMAL and m > 0:
        buf = normalize(buf, m, tally)
    return buf


# -- classical FWHT ---------------------------------------------------------


def fwht_natural_inplace(buf: np.ndarray, mode: Scaling = Scaling.UNNORMALIZED,
                         tally: OpTally | None = None) -> np.ndarray:
    m = _check_buffer(buf)
    if Scaling(mode) is Scaling.ORTHONORMAL and buf.dtype.kind != "f":
        raise ValueError("orthonormal transforms need a floating-point buffer")
    record(tally, kernels.fwht_natural(buf))
    if Scaling(mode) is Scaling.ORTHONORMAL and m > 0:
        buf *= 2.0 ** (-m / 2)
        record(tally, multiplications=buf.shape[0])
    return buf


def fwht_natural(x, mode: Scaling = Scaling.UNNORMALIZED,
                 tally: OpTally | None = None) -> np.ndarray:
    """Natural (Sylvester) ordered WHT with in-place butterflies; m * 2**m additions."""
    return fwht_natural_inplace(as_signal(x, mode), mode, tally)


def fwht_dyadic(x, mode: Scaling = Scaling.UNNORMALIZED,
                tally: OpTally | None = None) -> np.ndarray:
    buf = fwht_natural(x, mode, tally)
    return apply_permutation(natural_to_dyadic(level_of(buf.shape[0])), buf)


# -- Haar-Walsh -------------------------------------------------------------


def haar_walsh_forward(h, mode: Scaling = Scaling.UNNORMALIZED,
                       tally: OpTally | None = None) -> np.ndarray:
    """Map Haar coefficients to dyadic WHT coefficients.

    Applies blockdiag(1, H_0, H_1, ..., H_{m-1}): coefficient 0 is kept and
    the detail band at offset 2**j (length 2**j) gets a dyadic WHT of size 2**j.
    """
    buf = as_signal(h, mode)
    m = level_of(buf.shape[0])
    for j in range(m):
        lo, hi = 2**j, 2 ** (j + 1)
        buf[lo:hi] = fwht_dyadic(buf[lo:hi], mode, tally)
    return buf
