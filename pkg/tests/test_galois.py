import random

import pytest
import sympy

from origami_lab.galois import (
    ReciprocalQuartic,
    count_real_roots,
    has_real_simple_roots,
    is_galois_pinching,
    is_galois_pinching_sl2,
    is_galois_pinching_sp4,
    is_irreducible,
    is_perfect_square,
    quartic_from_charpoly,
)


def test_perfect_square():
    assert is_perfect_square(0) and is_perfect_square(1) and is_perfect_square(144)
    assert not is_perfect_square(2)
    assert not is_perfect_square(-4)


def test_quartic_from_charpoly_round_trip():
    q = quartic_from_charpoly([1, -2, -30, -2, 1])
    assert (q.a, q.b) == (-2, -30)
    assert q.coefficients == [1, -2, -30, -2, 1]
    with pytest.raises(ValueError):
        quartic_from_charpoly([1, -2, -30, -3, 1])  # not reciprocal


def test_dema_word_deltas():
    q = ReciprocalQuartic(a=-2, b=-30)
    assert q.delta1 == 132
    assert q.delta2 == 768
    assert q.delta3 == 101376
    for value in (q.delta1, q.delta2, q.delta3):
        assert not is_perfect_square(value)


def test_sp4_pinching_on_dema_word():
    # companion-style matrix with the target charpoly
    m = [[0, 0, 0, -1], [1, 0, 0, 2], [0, 1, 0, 30], [0, 0, 1, 2]]
    report = is_galois_pinching_sp4(m)
    assert report.pinching
    assert report.quartic.delta1 == 132


def test_sp4_rejects_non_unimodular():
    with pytest.raises(ValueError):
        is_galois_pinching_sp4([[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])


def test_sl2_pinching():
    assert is_galois_pinching_sl2([[2, 1], [1, 1]])  # trace 3, 5 not square
    assert not is_galois_pinching_sl2([[1, 1], [0, 1]])  # parabolic
    assert not is_galois_pinching_sl2([[0, -1], [1, 0]])  # elliptic, trace 0
    with pytest.raises(ValueError):
        is_galois_pinching_sl2([[2, 0], [0, 1]])


def test_dispatcher_rejects_other_sizes():
    with pytest.raises(ValueError):
        is_galois_pinching([[1, 0, 0], [0, 1, 0], [0, 0, 1]])


def _sympy_irreducible(q):
    x = sympy.symbols("x")
    poly = sympy.Poly(
        x**4 + q.a * x**3 + q.b * x**2 + q.a * x + 1, x, domain="QQ"
    )
    factors = poly.factor_list()[1]
    return len(factors) == 1 and factors[0][1] == 1 and factors[0][0].degree() == 4


def _sympy_real_simple(q):
    x = sympy.symbols("x")
    expr = x**4 + q.a * x**3 + q.b * x**2 + q.a * x + 1
    roots = sympy.Poly(expr, x).all_roots()
    if len(set(roots)) != 4:
        return False
    return all(root.is_real for root in roots)


def test_irreducibility_against_brute_force():
    rng = random.Random(77)
    for _ in range(1000):
        q = ReciprocalQuartic(a=rng.randint(-12, 12), b=rng.randint(-40, 40))
        assert is_irreducible(q) == _sympy_irreducible(q), (q.a, q.b)


def test_real_simple_roots_against_sympy():
    rng = random.Random(78)
    for _ in range(120):
        q = ReciprocalQuartic(a=rng.randint(-10, 10), b=rng.randint(-30, 30))
        assert has_real_simple_roots(q) == _sympy_real_simple(q), (q.a, q.b)


def test_count_real_roots():
    # x^2 - 2: two real roots
    assert count_real_roots([1, 0, -2]) == 2
    # x^2 + 1: none
    assert count_real_roots([1, 0, 1]) == 0
