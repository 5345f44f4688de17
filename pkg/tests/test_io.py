import numpy as np
import pytest

from chwt.errors import SignalFormatError
from chwt.io import read_signal, write_signal


def test_text_read(tmp_path):
    p = tmp_path / "x.txt"
    p.write_text("1\n0\n0\n0\n")
    x = read_signal(p)
    assert x.tolist() == [1, 0, 0, 0] and x.dtype == np.int64


def test_text_comments_and_blanks(tmp_path):
    p = tmp_path / "x.txt"
    p.write_text("# header\n1\n\n2.5\n# mid\n-3\n  4  \n")
    assert read_signal(p).tolist() == [1.0, 2.5, -3.0, 4.0]


def test_text_errors(tmp_path):
    p = tmp_path / "x.txt"
    p.write_text("1\n2\nthree\n4\n")
    with pytest.raises(SignalFormatError, match=":3:"):
        read_signal(p)
    p.write_text("1\n2\n3\n")
    with pytest.raises(SignalFormatError, match="3 values"):
        read_signal(p)
    p.write_text("# nothing\n")
    with pytest.raises(SignalFormatError):
        read_signal(p)


def test_binary_errors(tmp_path):
    p = tmp_path / "x.bin"
    p.write_bytes(np.zeros(3).tobytes())
    with pytest.raises(SignalFormatError, match="3 values"):
        read_signal(p, "binary")
    p.write_bytes(b"\0" * 13)
    with pytest.raises(SignalFormatError, match="multiple of 8"):
        read_signal(p, "binary")


def test_binary_is_little_endian_f64(tmp_path):
    p = tmp_path / "x.bin"
    write_signal([1.5, -2.0], p, "binary")
    assert p.read_bytes() == np.array([1.5, -2.0], dtype="<f8").tobytes()


@pytest.mark.parametrize("fmt", ["text", "binary"])
def test_round_trip_small(tmp_path, fmt):
    p = tmp_path / "x"
    write_signal([1, 1, -1, -1], p, fmt)
    assert read_signal(p, fmt).tolist() == [1, 1, -1, -1]


@pytest.mark.parametrize("m", [0, 5, 16])
@pytest.mark.parametrize("fmt", ["text", "binary"])
def test_round_trip_random(tmp_path, rng, m, fmt):
    p = tmp_path / "x"
    ints = rng.integers(-(2**40), 2**40, 2**m)
    write_signal(ints, p, fmt)
    np.testing.assert_array_equal(read_signal(p, fmt), ints)
    floats = rng.standard_normal(2**m) / np.sqrt(3)
    write_signal(floats, p, fmt)
    assert read_signal(p, fmt).tobytes() == floats.tobytes()


def test_unwritable(tmp_path):
    with pytest.raises(OSError, match="cannot write"):
        write_signal([1.0], tmp_path / "missing" / "x.txt")
