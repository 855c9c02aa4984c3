import json

import pytest

import schubreg


def test_golden_pair_both_methods():
    r = schubreg.regularity("1423576", "7314562", method="both")
    assert r["reg"] == 2
    assert r["formula_reg"] == 2
    assert r["groebner_reg"] == 2
    assert r["discrepant"] is False


def test_identity_pair_by_formula():
    assert schubreg.regularity_formula("1234567", "7314562") == 3


def test_kappa_and_rrw():
    assert schubreg.kappa("1423576", "7314562") == "3472561"
    assert schubreg.rrw_filling("1423576", "7314562") == [[0, 0, 1, 1], [0, 0, 1], [0, 0], [0]]


def test_h_polynomial_small():
    assert schubreg.h_polynomial("1234", "3412") == [1, 1]
    assert schubreg.kl_polynomial("1234", "3412") == [1, 1]


def test_grothendieck():
    assert schubreg.grothendieck("213") == "x1"
    assert schubreg.groth_degree("5416327") == schubreg.vexillary_degree_formula("5416327") == 12


def test_permutation_helpers():
    assert schubreg.length("7314562") == 11
    assert schubreg.is_covexillary("7314562")
    assert not schubreg.is_covexillary("3412")
    assert schubreg.bruhat_leq("1423576", "7314562")
    assert len(schubreg.kl_generators("1423576", "7314562")) > 0


def test_scan_n4():
    res = schubreg.max_reg_scan(4)
    assert res["max_reg"] == 1
    assert res["pairs"] == 213
    assert not res["partial"]


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        schubreg.regularity_formula("1234", "3412")
    with pytest.raises(ValueError):
        schubreg.regularity("3412", "1234")
    with pytest.raises(ValueError):
        schubreg.kappa("12a", "321")
    with pytest.raises(schubreg.NotBruhatComparable):
        schubreg.kl_polynomial("2143", "1342")


def test_cli_in_process():
    code, out, _ = schubreg.run_cli(["analyze", "--v", "1423576", "--w", "7314562", "--json"])
    assert code == 0
    assert json.loads(out)["reg"] == 2
    code, _, err = schubreg.run_cli(["analyze", "--v", "12"])
    assert code == 1
