import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from regtourn import galeryser
from regtourn.galeryser import InfeasibleError, feasible, realize01


def exhaustive(p, q, lam=1):
    """Search every m x n matrix with entries in 0..lam."""
    m, n = len(p), len(q)
    for cells in itertools.product(range(lam + 1), repeat=m * n):
        a = np.array(cells).reshape(m, n)
        if a.sum(axis=1).tolist() == list(p) and a.sum(axis=0).tolist() == list(q):
            return a
    return None


def test_feasible_examples():
    assert exhaustive((2, 1), (2, 1)) is not None
    assert feasible((2, 1), (2, 1))
    assert exhaustive((2, 0), (2, 0)) is None
    assert not feasible((2, 0), (2, 0))
    assert feasible((0, 0, 0), (0, 0))


def test_feasible_validation():
    with pytest.raises(ValueError):
        feasible((1, 1), (0, 2))
    with pytest.raises(ValueError):
        feasible((-1, 1), (0, 0))
    with pytest.raises(ValueError):
        feasible((1,), (1,), lam=0)
    assert not feasible((1, 1), (1,))


def test_realize01_examples():
    assert realize01((2, 1), (2, 1)).tolist() == [[1, 1], [1, 0]]
    assert realize01((1,), (1,)).tolist() == [[1]]
    assert (realize01((4,) * 4, (4,) * 4) == 1).all()
    assert realize01((0, 0), (0,)).tolist() == [[0], [0]]
    with pytest.raises(InfeasibleError):
        realize01((2, 0), (2, 0))


def test_general_lambda_against_exhaustive():
    for m, n in [(1, 2), (2, 2), (2, 3)]:
        for p in itertools.product(range(5), repeat=m):
            for q in itertools.combinations_with_replacement(range(4, -1, -1), n):
                assert feasible(p, q, 2) == (exhaustive(p, q, 2) is not None)


def test_oracle_equivalence_small():
    # a cut-down copy of the acceptance sweep, with an independent oracle
    for m in range(1, 3):
        for n in range(1, 4):
            for p in itertools.product(range(4), repeat=m):
                for q in itertools.combinations_with_replacement(range(3, -1, -1), n):
                    truth = exhaustive(p, q) is not None
                    assert feasible(p, q) == truth
                    if truth:
                        c = realize01(p, q)
                        assert galeryser.row_col_sums(c) == (tuple(p), tuple(q))


@given(st.lists(st.lists(st.integers(0, 1), min_size=5, max_size=5), min_size=1, max_size=6))
def test_any_matrix_sums_are_feasible(cells):
    a = np.array(cells)
    p = a.sum(axis=1).tolist()
    q = sorted(a.sum(axis=0).tolist(), reverse=True)
    assert feasible(p, q)
    c = realize01(p, q)
    assert galeryser.row_col_sums(c) == (tuple(p), tuple(q))


def test_matrix_text_round_trip():
    c = realize01((2, 1, 1), (2, 1, 1))
    assert (galeryser.parse_matrix(galeryser.format_matrix(c)) == c).all()
    with pytest.raises(ValueError):
        galeryser.parse_matrix("01\n012")
