import pytest

import fockdual


def test_reference_decomposition():
    rep = fockdual.verify(4, 1, "sp-sp")
    assert rep["allPass"]
    assert rep["dimensionSum"] == 16
    dims = sorted((p["dimD"], p["dimK"]) for p in rep["pairs"])
    assert dims == [(1, 3), (4, 2), (5, 1)]


def test_enumerate_matches_oracle_count():
    pairs = fockdual.enumerate_pairs(3, 2, "o-o")["pairs"]
    mult = fockdual.oracle_multiplicities(3, 2, "orthogonal")
    assert len(mult) == sum(len(p["expected"]) for p in pairs)
    assert all(n == 1 for _, _, n in mult)


@pytest.mark.parametrize("d,k", [(2, 1), (3, 2), (4, 2)])
def test_pin_identities(d, k):
    assert fockdual.pin_check(d, k)["allPass"]


def test_weyl_dimension():
    assert fockdual.weyl_dimension("o_even", ["0/1", "1/1", "1/1"]) == 15
    assert fockdual.weyl_dimension("o_odd", ["1/2", "1/2"]) == 4


def test_ph_check_reports_named_identities():
    rep = fockdual.ph_check(1)
    assert "C3_equals_C2" in rep["checks"]
    assert rep["checks"]["C2_commutes_L"]


def test_resource_limit():
    with pytest.raises(fockdual.ResourceLimit):
        fockdual.verify(6, 4, "o-o", mode_limit=12)
