import pytest

import rdbound
from rdbound import Family


def test_rd_upper_ladder():
    assert rdbound.rd_upper(5) == 1
    assert rdbound.rd_upper(32) == 26
    assert rdbound.rd_upper(6) == 2
    assert rdbound.rd_upper(6, paper_compat=True) == 1


def test_mu_and_errors():
    assert rdbound.mu(Family.PSU3, 5) == 50
    assert rdbound.mu(Family.PSU2, 9) == 6
    with pytest.raises(rdbound.RdboundError):
        rdbound.mu(Family.PSU2, 3)
    with pytest.raises(rdbound.RdboundError):
        rdbound.bound(Family.PSU3, 6)


def test_bound_psu3():
    c = rdbound.bound(Family.PSU3, 11)
    assert c["bound"] == 106
    assert c["degrees"] == [4, 4, 4]
    assert c["mu"] == 1332


def test_bound_psu2():
    c = rdbound.bound(rdbound.parse_family("psl2"), 13)
    assert c["dim_V"] == 6
    assert c["degrees"] == [4]
    assert c["bound"] == 4


def test_molien_prefixes():
    assert rdbound.molien(Family.PSU2, 7, 8) == ["1", "0", "0", "0", "1", "0", "1", "0", "1"]
    assert rdbound.molien(Family.PSU3, 5, 4) == ["1", "0", "0", "0", "2"]
    assert rdbound.closed_form_m4(8) == 3


def test_table_rows():
    rows = rdbound.table(Family.PSU3, [3, 17])
    assert [(r["dim_V"], r["bound"], r["degrees"]) for r in rows] == [(6, 4, [6]), (272, 267, [4, 4, 4, 4])]
    flagged = rdbound.table(Family.PSU2, [13])[0]
    assert flagged["flagged"] and flagged["mu"] == 14
    assert rdbound.table(Family.PSU2, [13], paper_compat=True)[0]["mu"] == 12


def test_asymptotic_and_free_algebra():
    a = rdbound.asymptotic_bound(37)
    assert (a["r"], a["bound"]) == (5, 1326)
    assert a["bound"] <= a["formula"]
    assert rdbound.free_algebra_dim([4, 4], 8) == 3


def test_class_data_and_power_table():
    s = rdbound.class_spectrum(3)
    assert s["C4"]["count"] == 3
    assert s["C1"]["centralizer_order"] == "6048"
    t = rdbound.power_table(7, 2)
    assert t[("C4", "C1")] == 1 and t[("C4", "C4")] == 6
    assert rdbound.projective_degree(8) == 7


def test_verify_suite():
    results = rdbound.verify("power-tables", 9)
    assert results and all(r["pass"] for r in results)
