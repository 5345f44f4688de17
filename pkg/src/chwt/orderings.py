"""Permutations between natural, dyadic and sequency coefficient orders.

A permutation ``p`` is an int64 array; applying it gives ``out[i] = x[p[i]]``.
The closed forms below were checked against oracle row matching (see
tests/test_orderings.py): dyadic rows are natural rows in bit-reversed index
order, and sequency rows are dyadic rows in Gray-code index order.
"""
from __future__ import annotations

import numpy as np


def _level(m: int) -> int:
    if m < 0:
        raise ValueError(f"level must be non-negative, got {m}")
    return m


def bit_reverse_indices(m: int) -> np.ndarray:
    _level(m)
    idx = np.arange(2**m, dtype=np.int64)
    out = np.zeros_like(idx)
    for _ in range(m):
        out = (out << 1) | (idx & 1)
        idx >>= 1
    return out


def natural_to_dyadic(m: int) -> np.ndarray:
    """Dyadic row i is natural row p[i]; p is m-bit reversal."""
    return bit_reverse_indices(m)


def dyadic_to_sequency(m: int) -> np.ndarray:
    """Sequency row k is dyadic row p[k]; p is the binary-reflected Gray code."""
    k = np.arange(2 ** _level(m), dtype=np.int64)
    return k ^ (k >> 1)


def compose(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Permutation equivalent to applying ``q`` first, then ``p``."""
    p = np.asarray(p)
    q = np.asarray(q)
    if p.shape != q.shape:
        raise ValueError("permutation lengths differ")
    return q[p]


def natural_to_sequency(m: int) -> np.ndarray:
    return compose(dyadic_to_sequency(m), natural_to_dyadic(m))


def inverse(p: np.ndarray) -> np.ndarray:
    p = np.asarray(p, dtype=np.int64)
    inv = np.empty_like(p)
    inv[p] = np.arange(p.shape[0], dtype=np.int64)
    return inv


def is_permutation(p) -> bool:
    p = np.asarray(p)
    n = p.shape[0]
    return p.ndim == 1 and bool(np.array_equal(np.sort(p), np.arange(n)))


def apply_permutation(p, x) -> np.ndarray:
    p = np.asarray(p)
    x = np.asarray(x)
    if p.shape[0] != x.shape[0]:
        raise ValueError(f"permutation of length {p.shape[0]} applied to signal of length {x.shape[0]}")
    return x[p]


def sign_changes(row) -> int:
    """Number of sign changes along a row, ignoring zeros."""
    s = np.sign(np.asarray(row))
    s = s[s != 0]
    return int(np.count_nonzero(s[1:] != s[:-1]))


def reorder(coeffs, m: int, source: str, target: str) -> np.ndarray:
    """Convert WHT coefficients between 'natural', 'dyadic' and 'sequency' order."""
    to_natural = {
        "natural": np.arange(2**m, dtype=np.int64),
        "dyadic": natural_to_dyadic(m),
        "sequency": natural_to_sequency(m),
    }
    if source not in to_natural or target not in to_natural:
        raise ValueError(f"unknown ordering: {source!r} -> {target!r}")
    # coeffs_target[i] = natural[to_natural[target][i]]
    p = compose(to_natural[target], inverse(to_natural[source]))
    return apply_permutation(p, coeffs)
