from fractions import Fraction

import pytest

import gwp1


def test_one_point():
    assert gwp1.invariant([0])["value"] == {"-2": "1", "0": "-1/24"}
    tau2 = gwp1.invariant([2], by_genus=True)
    assert gwp1.as_fractions(tau2["value"]) == {-2: Fraction(1, 4), 0: Fraction(1, 24), 2: Fraction(7, 5760)}
    assert tau2["by_genus"] == {"0,2": "1/4", "1,1": "1/24", "2,0": "7/5760"}


def test_multi_point():
    assert gwp1.invariant([0, 0])["value"] == {"-2": "1"}
    assert gwp1.invariant([0, 0, 0])["value"] == {"-2": "1"}
    assert gwp1.invariant([0, 1])["value"] == {}


def test_wave():
    f = gwp1.wave("f", 2)
    assert f["0"] == {"0": "1"}
    assert f["-1"] == {"-2": "1", "0": "-1/24"}
    with pytest.raises(ValueError):
        gwp1.wave("h")


def test_matrix_model_matches_free_energy():
    assert gwp1.zmodel_log(4, 3) == gwp1.free_energy(3)
    assert gwp1.stabilization(2)


def test_numerics():
    row = gwp1.charlier_orthogonality(2, 2, a="1/2")
    assert row["ok"]
    lim = gwp1.charlier_scaling_limit()
    assert lim["decreasing"]
    asym = gwp1.asymptotics()
    assert float(asym["rel_error"]) < 1e-4
    assert float(gwp1.charpoly_expectation(1, "1", ["3"])) == pytest.approx(1.5)


def test_errors():
    with pytest.raises(gwp1.TruncationError):
        gwp1.invariant([2], order=3)
    with pytest.raises(gwp1.ComputationError):
        gwp1.charlier_orthogonality(1, 1, tol="1e-60", prec=64)
    with pytest.raises(ValueError):
        gwp1.invariant([])


def test_selftest_subset():
    res = gwp1.selftest(["wave-coefficients", "one-point"])
    assert [r["name"] for r in res] == ["wave-coefficients", "one-point"]
    assert all(r["pass"] for r in res)
