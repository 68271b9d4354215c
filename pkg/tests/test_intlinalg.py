import random
from fractions import Fraction

import numpy as np
import pytest

from origami_lab import intlinalg as la


def random_int_matrix(rng, n, m, lo=-5, hi=5):
    return [[rng.randint(lo, hi) for _ in range(m)] for _ in range(n)]


def test_charpoly_matches_numpy():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(1, 5)
        a = random_int_matrix(rng, n, n)
        ours = la.charpoly(a)
        theirs = np.poly(np.array(a, dtype=float))
        assert len(ours) == n + 1
        assert np.allclose(np.array(ours, dtype=float), theirs, atol=1e-6)


def test_det_and_rank():
    assert la.det([[2, 0], [0, 3]]) == 6
    assert la.rank([[1, 2], [2, 4]]) == 1
    assert la.rank(la.identity_matrix(4)) == 4


def test_smith_normal_form_diagonalizes():
    rng = random.Random(5)
    for _ in range(20):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        a = random_int_matrix(rng, n, m)
        d, u, v = la.smith_normal_form(a)
        assert la.mat_eq(la.mat_mul(u, la.mat_mul(a, v)), d)
        assert abs(la.det(u)) == 1 and abs(la.det(v)) == 1
        divisors = [d[i][i] for i in range(min(n, m)) if d[i][i] != 0]
        for x, y in zip(divisors, divisors[1:]):
            assert y % x == 0
        # off-diagonal zero
        for i in range(n):
            for j in range(m):
                if i != j:
                    assert d[i][j] == 0


def test_kernel_basis():
    a = [[1, 2, 3], [2, 4, 6]]
    cols = la.kernel_basis(a)
    assert len(cols) == 2
    for col in cols:
        assert all(
            sum(a[i][j] * col[j] for j in range(3)) == 0 for i in range(2)
        )


def test_solve_right_and_invert():
    a = [[2, 1], [1, 1]]
    inv = la.invert(a)
    assert la.mat_eq(la.mat_mul(a, inv), la.identity_matrix(2))
    b = [[1], [0]]
    x = la.solve_right(a, b)
    assert la.mat_eq(la.mat_mul(a, x), [[Fraction(1)], [Fraction(0)]])


def test_solve_right_inconsistent():
    assert la.solve_right([[1, 2], [2, 4]], [[1], [0]]) is None


def test_rational_span():
    span = la.RationalSpan()
    assert span.add([1, 0, 0])
    assert span.add([0, 1, 0])
    assert not span.add([2, 3, 0])
    assert span.dim == 2
    assert span.contains([5, -7, 0])
    assert not span.contains([0, 0, 1])


def test_is_reciprocal():
    assert la.is_reciprocal([1, -2, -30, -2, 1])
    assert not la.is_reciprocal([1, -2, -30, -2, 2])


def test_bracket_antisymmetry():
    rng = random.Random(3)
    a = random_int_matrix(rng, 3, 3)
    b = random_int_matrix(rng, 3, 3)
    ab = la.bracket(a, b)
    ba = la.bracket(b, a)
    assert la.mat_eq(ab, la.mat_scale(-1, ba))
