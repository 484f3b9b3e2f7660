import cmath
import math

import pytest

import weilrep


def test_symbols():
    assert weilrep.legendre(2, 7) == 1
    assert weilrep.jacobi(2, 15) == 1
    assert weilrep.sl2_order(5) == 120


def test_gauss_sign():
    for p in (3, 5, 7, 11, 13):
        g = weilrep.gauss_sum(p)["value"]
        expected = math.sqrt(p) if p % 4 == 1 else 1j * math.sqrt(p)
        assert abs(g - expected) < 1e-9


def test_constant_and_det():
    c = weilrep.proportionality_constant(3)
    assert abs(c["value"] - 1j * math.sqrt(3)) < 1e-9
    assert abs(weilrep.dft_det(3)["value"] - (-3j * math.sqrt(3))) < 1e-9


def test_dft_matrix_entries():
    f = weilrep.dft_matrix(5)
    assert len(f) == 5
    assert abs(f[1][2] - cmath.exp(2j * cmath.pi * 2 / 5)) < 1e-12


def test_rho_is_unitary():
    r = weilrep.rho((2, 1, 1, 1), 7)
    for i in range(7):
        for j in range(7):
            s = sum(r[i][k] * r[j][k].conjugate() for k in range(7))
            assert abs(s - (1 if i == j else 0)) < 1e-9


def test_character():
    computed, predicted = weilrep.character((0, 1, 6, 0), 7)
    assert abs(computed["value"] - predicted) < 1e-12


def test_qr():
    v = weilrep.qr_verify(5, 7)
    assert v["pass"] and v["parity"] == 1


def test_conjugator_instance():
    g = weilrep.find_conjugator((0, 1, 14, 0), (8, 0, 0, 1), 15)
    assert len(g) == 4


def test_run_suite():
    r = weilrep.run_suite("dft", n=5, timing=False)
    assert r["status"] == "pass" and r["elapsed_ms"] is None
    assert r["params"]["n"] == 5


def test_errors():
    with pytest.raises(weilrep.UnknownSuite):
        weilrep.run_suite("nope")
    with pytest.raises(weilrep.InvalidParams):
        weilrep.run_suite("weil", n=4)
    assert issubclass(weilrep.InvalidParams, weilrep.Error)


def test_table():
    assert weilrep.emit_table("reciprocity", 5).splitlines()[1] == "3,5,-1,-1,+1,+1,true"
