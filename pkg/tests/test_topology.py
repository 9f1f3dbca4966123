import numpy as np
import pytest

from homwalk.spin_chain import ChainSpec, generalized_ssh_couplings, ssh_couplings
from homwalk.topology import (
    TEN_FOLD_WAY,
    check_chiral,
    check_particle_hole,
    check_time_reversal,
    classify,
    sublattice_operator,
)


def test_table_has_ten_classes():
    assert len(set(TEN_FOLD_WAY.values())) == 10


@pytest.mark.parametrize("S", [1, 2, 10, 51])
def test_generalized_chain_is_bdi(S):
    rep = classify(generalized_ssh_couplings(S).matrix())
    assert rep.az_class == "BDI"
    assert rep.triple == (1, 1, 1)
    assert rep.has_T and rep.has_C and rep.has_Gamma


def test_ssh_chain_is_bdi():
    assert classify(ssh_couplings(20, delta=0.3).matrix()).az_class == "BDI"


def test_onsite_disorder_breaks_chiral():
    rng = np.random.default_rng(0)
    H = generalized_ssh_couplings(12).matrix() + np.diag(rng.normal(0, 0.1, 13))
    rep = classify(H)
    assert rep.az_class == "AI"
    assert not rep.has_Gamma and not rep.has_C


def test_imaginary_hopping_is_aiii():
    J = generalized_ssh_couplings(8).couplings
    H = np.diag(1j * J, 1) + np.diag(-1j * J, -1)
    rep = classify(H)
    assert rep.az_class == "AIII"
    assert rep.has_Gamma and not rep.has_T


def test_complex_random_hermitian_is_a():
    rng = np.random.default_rng(3)
    M = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
    assert classify(M + M.conj().T).az_class == "A"


def test_single_site():
    rep = classify(ChainSpec([]).matrix())
    assert rep.az_class == "BDI"


def test_tolerance_is_relative():
    H = 1e6 * generalized_ssh_couplings(6).matrix()
    H[0, 0] = 1e-8
    assert check_chiral(H)[0]
    H[0, 0] = 1e-3
    assert not check_chiral(H)[0]


def test_individual_checks():
    H = ssh_couplings(4).matrix()
    assert check_time_reversal(H) == (True, 1)
    assert check_particle_hole(H) == (True, 1)
    assert check_chiral(H) == (True, 1)
    np.testing.assert_array_equal(np.diag(sublattice_operator(3)), [1, -1, 1])


def test_report_dict():
    d = classify(generalized_ssh_couplings(3).matrix()).to_dict()
    assert d["az_class"] == "BDI" and d["T_squared"] == 1


def test_rejects_non_square():
    with pytest.raises(ValueError):
        classify(np.zeros((2, 3)))
