import pytest

import numsgp


def test_pseudo_frobenius_and_class():
    h = numsgp.NumericalSemigroup([22, 28, 47, 53])
    pf = h.pseudo_frobenius()
    assert pf["pf"] == [25, 258, 283]
    assert pf["classification"] == "almost-symmetric"
    assert 47 in h and 25 not in h


def test_alphas():
    assert numsgp.alphas(numsgp.NumericalSemigroup([22, 28, 47, 53]))["alpha"] == [14, 11, 2, 2]


def test_rf_matrix_of_15():
    h = numsgp.NumericalSemigroup([7, 12, 13, 22])
    rows = [m["rows"] for m in numsgp.rf_matrices(h, 15)]
    assert [[-1, 0, 0, 1], [2, -1, 1, 0], [4, 0, -1, 0], [0, 2, 1, -1]] in rows


def test_minimal_generators_count():
    gens = numsgp.minimal_generators(numsgp.NumericalSemigroup([18, 21, 23, 26]))
    assert len(gens) == 7


def test_family_and_komeda():
    assert numsgp.construct_family(3, 4, 1).generators == [10, 11, 13, 14]
    assert numsgp.verify_family(3, 4, 1, steps=1)["verdict"] == "PASS"
    form = numsgp.komeda_form(numsgp.NumericalSemigroup([5, 6, 7, 9]))
    assert len(form["matrix"]["rows"]) == 4


def test_errors_are_raised():
    with pytest.raises(numsgp.Error, match="NotPseudoSymmetric"):
        numsgp.komeda_form(numsgp.NumericalSemigroup([5, 6, 8, 9]))
    with pytest.raises(numsgp.Error, match="GcdNotOne"):
        numsgp.NumericalSemigroup([4, 6])


def test_verify_all_passes():
    reports = numsgp.verify_all(numsgp.NumericalSemigroup([5, 6, 8, 9]))
    assert all(r["verdict"] != "FAIL" for r in reports)
