import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from chwt import orderings as od
from chwt.oracle import hadamard_dyadic_dense, hadamard_natural_dense, row_permutation_between
from chwt.transforms import chw_forward, fwht_natural


def test_small_cases():
    assert od.natural_to_dyadic(0).tolist() == [0]
    assert od.natural_to_dyadic(1).tolist() == [0, 1]
    assert od.natural_to_dyadic(2).tolist() == [0, 2, 1, 3]
    assert od.dyadic_to_sequency(0).tolist() == [0]
    assert od.dyadic_to_sequency(1).tolist() == [0, 1]


@pytest.mark.parametrize("m", range(0, 9))
def test_natural_to_dyadic_matches_row_matching(m):
    found = row_permutation_between(hadamard_dyadic_dense(m), hadamard_natural_dense(m))
    np.testing.assert_array_equal(od.natural_to_dyadic(m), found)


@pytest.mark.parametrize("m", range(0, 9))
def test_sequency_by_row_matching(m):
    dyadic = hadamard_dyadic_dense(m)
    counts = [od.sign_changes(r) for r in dyadic]
    # sequencies of Hadamard rows are all distinct
    assert sorted(counts) == list(range(2**m))
    by_sequency = dyadic[np.argsort(counts, kind="stable")]
    found = row_permutation_between(by_sequency, dyadic)
    np.testing.assert_array_equal(od.dyadic_to_sequency(m), found)
    reordered = od.apply_permutation(od.dyadic_to_sequency(m), dyadic)
    assert [od.sign_changes(r) for r in reordered] == list(range(2**m))


def test_apply_examples():
    x = np.array([5, 6, 7, 8])
    np.testing.assert_array_equal(od.apply_permutation(np.arange(4), x), x)
    nat = fwht_natural([0, 1, 0, 0])
    assert od.apply_permutation(od.natural_to_dyadic(2), nat).tolist() == \
        chw_forward([0, 1, 0, 0]).tolist() == [1, 1, -1, -1]
    with pytest.raises(ValueError):
        od.apply_permutation(np.arange(4), np.arange(8))


@given(st.integers(0, 10), st.integers(0, 2**32 - 1))
def test_group_sanity(m, seed):
    rng = np.random.default_rng(seed)
    p = rng.permutation(2**m)
    x = rng.integers(-100, 100, 2**m)
    assert od.is_permutation(p)
    np.testing.assert_array_equal(od.inverse(od.inverse(p)), p)
    np.testing.assert_array_equal(od.apply_permutation(od.inverse(p), od.apply_permutation(p, x)), x)
    np.testing.assert_array_equal(od.compose(p, od.inverse(p)), np.arange(2**m))


@pytest.mark.parametrize("m", range(0, 8))
def test_reorder_round_trips(m, rng):
    x = rng.integers(-100, 100, 2**m)
    for a in ("natural", "dyadic", "sequency"):
        for b in ("natural", "dyadic", "sequency"):
            np.testing.assert_array_equal(od.reorder(od.reorder(x, m, a, b), m, b, a), x)
    with pytest.raises(ValueError):
        od.reorder(x, m, "dyadic", "walsh")


@pytest.mark.parametrize("m", range(0, 8))
def test_reorder_of_natural_gives_sequency_rows(m, rng):
    x = rng.integers(-100, 100, 2**m)
    natural = hadamard_natural_dense(m)
    by_seq = natural[np.argsort([od.sign_changes(r) for r in natural])]
    np.testing.assert_array_equal(od.reorder(fwht_natural(x), m, "natural", "sequency"), by_seq @ x)
