from fractions import Fraction

import pytest

import polybern


def test_numbers_and_routes():
    assert polybern.poly_bernoulli(1, 2) == Fraction(1, 4)
    assert polybern.poly_bernoulli(2, 2) == Fraction(-1, 36)
    for n in range(8):
        s = polybern.poly_bernoulli(n, 3)
        assert s == polybern.poly_bernoulli(n, 3, method="umbral")
        assert s == polybern.poly_bernoulli(n, 3, method="stirling")


def test_polynomials():
    assert polybern.poly_bernoulli_polynomial(2, 1) == [Fraction(1, 6), 1, 1]
    assert polybern.barnes_transform_cube(5, 3) == polybern.poly_bernoulli_polynomial(5, 3)
    assert polybern.simplex_transform(5, 3) == polybern.poly_bernoulli_polynomial(5, 3)
    c = polybern.poly_bernoulli_polynomial(4, 2, variant="C")
    assert polybern.poly_bernoulli(4, 2, variant="C", z=Fraction(1, 3)) == sum(
        a * Fraction(1, 3) ** i for i, a in enumerate(c))


def test_zeta_routes():
    mel = polybern.ak_zeta_mellin(2, 1)
    mom = polybern.negative_moment(2, 1)
    assert abs(mel["value"] + mom["value"]) < 1e-6
    assert abs(mel["value"] - 1.20206) < 5e-6
    assert mom["imag_residue"] < 1e-9
    value, tail = polybern.mz_truncated([3, 1], starred=True, N=3000)
    assert value <= 1.3529040421389227 <= value + tail


def test_errors():
    with pytest.raises(ValueError):
        polybern.poly_bernoulli(1, 0)
    with pytest.raises(ValueError):
        polybern.negative_moment(1, 1, 0.5)
    with pytest.raises(polybern.ConvergenceError):
        polybern.negative_moment(2, 1, 0.0, polybern.QuadratureSpec(levels=2, tolerance=1e-30))


def test_verify_report():
    report = polybern.verify(["recurrence"], max_n=3)
    assert report["totals"]["fail"] == 0
    names = [c["name"] for c in report["checks"]]
    assert names == sorted(names)
