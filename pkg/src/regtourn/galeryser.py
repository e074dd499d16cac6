"""Matrices with prescribed row and column sums (Gale-Ryser)."""

from __future__ import annotations

from typing import Sequence

import numpy as np


class InfeasibleError(ValueError):
    """No 0-1 matrix has the requested row and column sums."""


def _check(p: Sequence[int], q: Sequence[int], lam: int) -> None:
    if lam < 1:
        raise ValueError(f"entry bound must be positive, got {lam}")
    if any(x < 0 for x in p) or any(x < 0 for x in q):
        raise ValueError("sum vectors must be nonnegative")
    if any(a < b for a, b in zip(q, q[1:])):
        raise ValueError(f"column sums {tuple(q)} must be nonincreasing")


def feasible(p: Sequence[int], q: Sequence[int], lam: int = 1) -> bool:
    """Is there an m x n matrix with entries in 0..lam, row sums p, column sums q?

    ``q`` must be nonincreasing.
    """
    _check(p, q, lam)
    if sum(p) != sum(q):
        return False
    lhs = 0
    for k in range(1, len(q) + 1):
        lhs += q[k - 1]
        if lhs > sum(min(x, lam * k) for x in p):
            return False
    return True


def realize01(p: Sequence[int], q: Sequence[int]) -> np.ndarray:
    """Build a 0-1 matrix with row sums ``p`` and column sums ``q``.

    Columns are filled in order; column ``j`` takes its ones from the rows
    with the largest remaining demand, lowest row index first on ties.
    """
    p = [int(x) for x in p]
    q = [int(x) for x in q]
    if not feasible(p, q, 1):
        raise InfeasibleError(f"no 0-1 matrix with row sums {tuple(p)} and column sums {tuple(q)}")
    m, n = len(p), len(q)
    c = np.zeros((m, n), dtype=np.uint8)
    demand = list(p)
    for j in range(n):
        rows = sorted(range(m), key=lambda i: (-demand[i], i))[: q[j]]
        for i in rows:
            if demand[i] == 0:
                raise AssertionError("greedy fill ran out of row demand on a feasible input")
            c[i, j] = 1
            demand[i] -= 1
    if c.sum(axis=1).tolist() != p or c.sum(axis=0).tolist() != q:
        raise AssertionError(f"realization failed the sum check for {tuple(p)}, {tuple(q)}")
    return c


def row_col_sums(c: np.ndarray) -> tuple[tuple[int, ...], tuple[int, ...]]:
    c = np.asarray(c)
    return tuple(int(x) for x in c.sum(axis=1)), tuple(int(x) for x in c.sum(axis=0))


def format_matrix(c: np.ndarray) -> str:
    return "\n".join("".join(str(int(x)) for x in row) for row in np.asarray(c))


def parse_matrix(text: str) -> np.ndarray:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        return np.zeros((0, 0), dtype=np.uint8)
    width = len(lines[0])
    if any(len(ln) != width or set(ln) - {"0", "1"} for ln in lines):
        raise ValueError("matrix text must be equal-length lines of '0' and '1'")
    return np.array([[int(ch) for ch in ln] for ln in lines], dtype=np.uint8)
