"""Signal files.

Text: one decimal value per line; blank lines and lines starting with ``#``
are skipped.  A file whose values all parse as integers loads as ``int64``,
anything else as ``float64``.

Binary: raw little-endian float64 values, no header.
"""
from __future__ import annotations

import enum
import os

import numpy as np

from .errors import SignalFormatError


class SignalFormat(str, enum.Enum):
    TEXT = "text"
    BINARY = "binary"


def _check_count(count: int, path) -> None:
    if count == 0 or count & (count - 1):
        raise SignalFormatError(
            f"{path}: {count} values is not a power of two"
        )


def parse_text(text: str, source="<text>") -> np.ndarray:
    values: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            float(line)
        except ValueError:
            raise SignalFormatError(
                f"{source}:{lineno}: cannot parse {line!r} as a number"
            ) from None
        values.append(line)
    _check_count(len(values), source)
    try:
        return np.array([int(v) for v in values], dtype=np.int64)
    except (ValueError, OverflowError):
        return np.array([float(v) for v in values], dtype=np.float64)


def format_text(x) -> str:
    arr = np.asarray(x)
    if arr.dtype.kind in "biu":
        return "".join(f"{int(v)}\n" for v in arr)
    # repr of a Python float is the shortest string that round-trips
    return "".join(f"{float(v)!r}\n" for v in arr)


def read_signal(path, fmt: SignalFormat | str = SignalFormat.TEXT) -> np.ndarray:
    fmt = SignalFormat(fmt)
    if fmt is SignalFormat.TEXT:
        with open(path, encoding="utf-8") as fh:
            return parse_text(fh.read(), source=os.fspath(path))
    with open(path, "rb") as fh:
        data = fh.read()
    if len(data) % 8:
        raise SignalFormatError(
            f"{path}: binary size {len(data)} bytes is not a multiple of 8"
        )
    _check_count(len(data) // 8, path)
    return np.frombuffer(data, dtype="<f8").astype(np.float64)


def write_signal(x, path, fmt: SignalFormat | str = SignalFormat.TEXT) -> None:
    fmt = SignalFormat(fmt)
    arr = np.asarray(x)
    try:
        if fmt is SignalFormat.TEXT:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(format_text(arr))
        else:
            with open(path, "wb") as fh:
                fh.write(np.ascontiguousarray(arr, dtype="<f8").tobytes())
    except OSError as exc:
        raise OSError(exc.errno, f"cannot write signal to {path}: {exc.strerror}") from exc
