"""Smoke tests for the _covering_lab extension module."""

from fractions import Fraction

import pytest

cl = pytest.importorskip("_covering_lab")

CLASSIC5 = [("0", "2"), ("0", "3"), ("1", "4"), ("5", "6"), ("7", "12")]


def frac(s):
    return Fraction(s)


def test_verify_classic_system():
    r = cl.verify(CLASSIC5)
    assert r["covering"] is True
    assert r["distinct"] is True
    assert r["exact"] is False
    assert frac(r["reciprocal_sum"]) == Fraction(4, 3)
    assert r["min_modulus"] == "2"


def test_density_and_delta():
    assert frac(cl.covered_density([("0", "2"), ("0", "3")])) == Fraction(2, 3)
    assert frac(cl.delta([("0", "2"), ("0", "3"), ("2", "5")])) == Fraction(1, 3)
    assert frac(cl.smooth_reciprocal_mass(3, "5")) == Fraction(11, 12)


def test_multiplicative_pieces():
    assert cl.chi("12") == "975"
    assert frac(cl.euler_factor(2, "0")) == 150
    assert frac(cl.euler_factor(3, "0")) == 30
    assert frac(cl.m1_exact(3)) == Fraction(3, 4)
    assert frac(cl.m1_exact(4)) == Fraction(5, 8)


def test_distortion_run():
    out = cl.distort([("0", "2")], "2,3", "1/4")
    assert out["levels"][0]["mass"] == "1"
    assert frac(out["levels"][0]["bad_measure"]) == Fraction(1, 3)
    assert out["chain"]["verdict"] == "pass"


def test_constants():
    k = cl.delta_prime_constants()
    assert frac(k["eta_prime"]) == Fraction(
        519920413784751336255, 32495025861546958528
    )
    assert frac(k["eta_prime"]) < 16


def test_sieve_and_bounds():
    primes = cl.sieve_primes(30)
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    tau1, tau2 = cl.nth_prime_bounds("20")
    assert float(tau1[1]) < 71 < float(tau2[0])


def test_lemma_reports():
    rep = cl.difference_bound("1/100")
    assert rep["verdict"] == "pass"
    rep = cl.smooth_tail_bound("1/12")
    assert rep["verdict"] == "pass"
    rep = cl.loglog_lemma_check(2000, 100)
    assert rep["verdict"] == "pass"


def test_constructions():
    classes = cl.build_small_min_modulus_covering(3, "1/4")
    mods = [int(m) for _, m in classes]
    assert min(mods) == 3
    assert len(set(mods)) == len(mods)
    assert sum(Fraction(1, m) for m in mods) < Fraction(5, 4)
    r = cl.verify(classes)
    assert r["covering"] is True

    greedy = cl.greedy_power2_covering(2, 10)
    assert len(greedy) == 10
    assert sum(Fraction(1, int(m)) for _, m in greedy) < Fraction(1, 4)


def test_inclusion_exclusion():
    assert frac(cl.inclusion_exclusion_sum(["2", "3"])) == Fraction(2, 3)


def test_smooth_count():
    assert cl.smooth_count_exact("100", 3) == "20"


def test_errors_are_exceptions():
    with pytest.raises(Exception):
        cl.difference_bound("1/2")
    with pytest.raises(Exception):
        cl.verify([("0", "0")])
