"""Pure-numpy kernels.

Same contract as the numba kernels: operate in place on a contiguous 1-D
buffer whose length is a power of two, return the number of additions
performed.  Stages of equal size are batched through 2-D reshaped views.
"""
import numpy as np

NAME = "numpy"


def _haar_rows(a):
    rows, length = a.shape
    size = length
    while length > 1:
        v = a[:, :length]
        even = v[:, 0::2]
        odd = v[:, 1::2]
        s = even + odd
        d = even - odd
        half = length // 2
        a[:, :half] = s
        a[:, half:length] = d
        length = half
    return rows * 2 * (size - 1)


def haar_forward(x):
    return _haar_rows(x.reshape(1, -1))


def haar_forward_scaled(x, c):
    length = x.shape[0]
    while length > 1:
        v = x[:length]
        s = (v[0::2] + v[1::2]) * c
        d = (v[0::2] - v[1::2]) * c
        half = length // 2
        x[:half] = s
        x[half:length] = d
        length = half
    return 2 * (x.shape[0] - 1)


def chw_forward(x):
    n = x.shape[0]
    adds = _haar_rows(x.reshape(1, -1))
    size = n // 2
    blocks = 1
    while size > 1:
        # stage blocks: second half of every chunk of length 2 * size
        adds += _haar_rows(x.reshape(blocks, 2 * size)[:, size:])
        size //= 2
        blocks *= 2
    return adds


def fwht_natural(x):
    n = x.shape[0]
    h = 1
    adds = 0
    while h < n:
        y = x.reshape(-1, 2, h)
        a = y[:, 0, :].copy()
        b = y[:, 1, :]
        y[:, 0, :] += b
        y[:, 1, :] = a - b
        adds += n
        h *= 2
    return adds
