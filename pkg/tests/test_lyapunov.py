from fractions import Fraction

import pytest

from origami_lab.lyapunov import (
    combinatorial_term,
    ekz_sum,
    mc_exponents,
    w_exponent_from_sum,
)
from origami_lab.origami import Origami, Stratum, stratum
from origami_lab.perm import Permutation

from conftest import fixture_origami


def test_torus_sum_is_one():
    torus = Origami(Permutation([1]), Permutation([1]))
    report = ekz_sum(torus)
    assert report.combinatorial == 0
    assert report.cylinder == 1
    assert report.total == 1
    assert report.orbit_size == 1


def test_l3_sum(l3):
    report = ekz_sum(l3)
    assert report.total == Fraction(4, 3)


def test_ltilde_sum_and_lambda(ltilde):
    report = ekz_sum(ltilde)
    assert report.combinatorial == Fraction(35, 18)
    assert report.cylinder == Fraction(19, 18)
    assert report.total == 3
    assert report.orbit_size == 12
    assert w_exponent_from_sum(report) == Fraction(1, 6)


def test_combinatorial_term_h4():
    assert combinatorial_term(Stratum((4,), 3)) == Fraction(1, 12) * Fraction(24, 5)


def test_sum_is_basepoint_independent(dema):
    from origami_lab.orbit import sl2z_orbit

    values = {ekz_sum(node).total for node in sl2z_orbit(dema).nodes}
    assert len(values) == 1


def test_ekz_rejects_non_reduced():
    o = Origami(Permutation([2, 1]), Permutation([1, 2]).inverse())
    # 2-square torus cover, not reduced
    with pytest.raises(ValueError):
        ekz_sum(o)


def test_report_json_fractions(l3):
    payload = ekz_sum(l3).to_json()
    assert payload["total"] == {"num": 4, "den": 3}
    assert payload["orbit"] == 3


def test_mc_requires_seed(l3):
    with pytest.raises(ValueError):
        mc_exponents(l3, steps=100, trials=2, seed=None)


def test_mc_rejects_bad_subspace(l3):
    with pytest.raises(ValueError):
        mc_exponents(l3, subspace="nope", steps=100, trials=2, seed=1)


def test_mc_reproducible(l3):
    a = mc_exponents(l3, subspace="full", steps=500, trials=3, seed=42)
    b = mc_exponents(l3, subspace="full", steps=500, trials=3, seed=42)
    assert a.estimates == b.estimates
    assert a.std_errors == b.std_errors
    c = mc_exponents(l3, subspace="full", steps=500, trials=3, seed=43)
    assert c.estimates != a.estimates


def test_mc_spectrum_symmetric(l3, dema):
    for o in (l3, dema):
        est = mc_exponents(o, subspace="full", steps=4000, trials=6, seed=5)
        values = est.estimates
        sigma = [max(e, 1e-9) for e in est.std_errors]
        for lo, hi, s in zip(values, reversed(values), sigma):
            assert abs(lo + hi) <= 3 * s + 1e-3


def test_mc_ew_zero_block(ew):
    est = mc_exponents(ew, subspace="H1_zero", steps=5000, trials=5, seed=9)
    assert all(abs(x) < 0.02 for x in est.estimates)
    assert est.ambiguity_note  # EW has nontrivial deck transformations


def test_mc_w_subspace_runs(ew):
    est = mc_exponents(ew, subspace="W", steps=500, trials=2, seed=3)
    assert len(est.estimates) >= 2
