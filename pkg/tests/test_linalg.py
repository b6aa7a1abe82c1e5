import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from arrinv.linalg import (PRIMES13, in_row_span, integer_rank, integer_rref,
                           kernel_dim, nullspace_exact, rank_mod_blocked,
                           reduce_row, row_content)

import numpy as np


def _sparse_to_dense(rows, ncols):
    out = [[0] * ncols for _ in rows]
    for r, row in enumerate(rows):
        for c, v in row:
            out[r][c] = v
    return out


def _fraction_rank(dense):
    mat = [[Fraction(v) for v in row] for row in dense]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col] / mat[rank][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def test_blocked_rank_fuzz_against_fractions():
    rng = random.Random(11)
    for trial in range(25):
        nrows = rng.randrange(1, 12)
        ncols = rng.randrange(1, 12)
        dense = [[rng.randrange(-9, 10) if rng.random() < 0.6 else 0
                  for _ in range(ncols)] for _ in range(nrows)]
        expected = _fraction_rank(dense)
        mat = np.array(dense, dtype=np.int64)
        got = max(rank_mod_blocked(mat % p, p) for p in PRIMES13)
        assert got == expected, (trial, dense)


def test_kernel_dim_paths_agree():
    rng = random.Random(5)
    for trial in range(15):
        nrows, ncols = rng.randrange(1, 9), rng.randrange(1, 9)
        rows = []
        for _ in range(nrows):
            row = [(c, rng.randrange(-20, 21)) for c in range(ncols)
                   if rng.random() < 0.5]
            rows.append([(c, v) for c, v in row if v])
        fast = kernel_dim(rows, ncols, exact=False)
        slow = kernel_dim(rows, ncols, exact=True)
        assert fast == slow, (trial, rows)


def test_nullspace_exact_is_certified():
    rows = [[(0, 1), (1, 2), (2, 3)], [(0, 2), (1, 4), (2, 6)]]
    dim, basis = nullspace_exact(rows, 3)
    assert dim == 2 and len(basis) == 2
    for vec in basis:
        for row in rows:
            assert sum(c * vec[j] for j, c in row) == 0


def test_integer_rref_canonical():
    rows, rank = integer_rref([(2, 4, 6), (1, 2, 3), (0, 0, 5)])
    assert rank == 2
    assert rows == ((1, 2, 0), (0, 0, 1))
    # canonical: independent of input order and scaling
    again, _ = integer_rref([(0, 0, -5), (-3, -6, -9)])
    assert again == rows


def test_integer_rank_and_span():
    assert integer_rank([(1, 0), (0, 1), (1, 1)]) == 2
    rref, _ = integer_rref([(1, 0, 1), (0, 1, 1)])
    assert in_row_span(rref, (2, 3, 5))
    assert not in_row_span(rref, (0, 0, 1))


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=6))
@settings(max_examples=50)
def test_row_content_and_reduce(row):
    if any(row):
        reduced = reduce_row(row)
        assert row_content(reduced) == 1
        first = next(v for v in reduced if v)
        assert first > 0
        # proportional to the input: all 2x2 minors with the input vanish
        assert all(row[i] * reduced[j] == row[j] * reduced[i]
                   for i in range(len(row)) for j in range(len(row)))
