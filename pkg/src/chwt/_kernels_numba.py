"""Numba kernels.  Same contract as :mod:`chwt._kernels_numpy`."""
import functools

import numba as nb
import numpy as np

NAME = "numba"

njit = functools.partial(nb.njit, cache=True, nogil=True)


@njit
def _haar_span(x, lo, size, tmp):
    length = size
    adds = 0
    while length > 1:
        half = length >> 1
        for i in range(half):
            a = x[lo + 2 * i]
            b = x[lo + 2 * i + 1]
            # x[lo + i] is never read again at this level once i has passed
            x[lo + i] = a + b
            tmp[i] = a - b
        for i in range(half):
            x[lo + half + i] = tmp[i]
        adds += length
        length = half
    return adds


@njit
def haar_forward(x):
    n = x.shape[0]
    tmp = np.empty(max(n >> 1, 1), dtype=x.dtype)
    return _haar_span(x, 0, n, tmp)


@njit
def haar_forward_scaled(x, c):
    n = x.shape[0]
    tmp = np.empty(max(n >> 1, 1), dtype=x.dtype)
    length = n
    while length > 1:
        half = length >> 1
        for i in range(half):
            a = x[2 * i]
            b = x[2 * i + 1]
            x[i] = (a + b) * c
            tmp[i] = (a - b) * c
        for i in range(half):
            x[half + i] = tmp[i]
        length = half
    return 2 * (n - 1)


@njit
def chw_forward(x):
    n = x.shape[0]
    tmp = np.empty(max(n >> 1, 1), dtype=x.dtype)
    adds = _haar_span(x, 0, n, tmp)
    size = n >> 1
    blocks = 1
    while size > 1:
        for q in range(blocks):
            adds += _haar_span(x, q * 2 * size + size, size, tmp)
        size >>= 1
        blocks <<= 1
    return adds


@njit
def fwht_natural(x):
    n = x.shape[0]
    h = 1
    adds = 0
    while h < n:
        for start in range(0, n, 2 * h):
            for j in range(start, start + h):
                a = x[j]
                b = x[j + h]
                x[j] = a + b
                x[j + h] = a - b
        adds += n
        h <<= 1
    return adds
