from fractions import Fraction

import pytest

from wcurves.euler import (
    chi_P,
    chi_Q,
    chi_Q_via_rm_prototypes,
    chi_S,
    chi_W,
    chi_W_components,
    chi_X,
    consistency_chain,
    euler_report,
    h2,
    h_table,
    lyapunov_lambda2,
    num_components,
    one_cylinder_cusps,
    psi,
    rm_prototypes,
    zeta_minus_one,
)


def test_h2_low_values():
    got = [h2(D) for D in (1, 4, 5, 8, 9, 12, 13, 16)]
    assert got == [
        Fraction(-1, 12),
        Fraction(-7, 12),
        Fraction(-2, 5),
        Fraction(-1),
        Fraction(-25, 12),
        Fraction(-2),
        Fraction(-2),
        Fraction(-55, 12),
    ]


def test_h2_more_values():
    assert h2(0) == Fraction(-1, 120)
    assert h2(17) == -4
    assert h2(45) == Fraction(-62, 5)


def test_h2_rejects_non_discriminants():
    with pytest.raises(ValueError):
        h2(7)
    with pytest.raises(ValueError):
        h2(-4)


def test_zeta_minus_one():
    assert zeta_minus_one(5) == Fraction(1, 30)
    assert zeta_minus_one(8) == Fraction(1, 12)
    assert zeta_minus_one(12) == Fraction(1, 6)
    assert zeta_minus_one(17) == Fraction(1, 3)
    with pytest.raises(ValueError):
        zeta_minus_one(45)  # not fundamental
    with pytest.raises(ValueError):
        zeta_minus_one(4)


def test_chi_x():
    assert chi_X(1) == Fraction(1, 36)
    assert chi_X(4) == Fraction(1, 6)
    assert chi_X(5) == Fraction(1, 15)
    assert chi_X(8) == Fraction(1, 6)
    assert chi_X(12) == Fraction(1, 3)
    assert chi_X(17) == Fraction(2, 3)
    assert chi_X(25) == Fraction(5, 3)
    assert chi_X(45) == 2


def test_chi_w():
    assert chi_W(5) == Fraction(-3, 10)
    assert chi_W(8) == Fraction(-3, 4)
    assert chi_W(9) == Fraction(-1, 2)
    assert chi_W(12) == Fraction(-3, 2)
    assert chi_W(17) == -3
    assert chi_W(25) == Fraction(-9, 2)
    assert chi_W(45) == -9


def test_chi_w_components():
    assert chi_W_components(17) == (Fraction(-3, 2), Fraction(-3, 2))
    assert chi_W_components(25) == (-3, Fraction(-3, 2))
    assert chi_W_components(49) == (-9, -6)
    for D in (17, 25, 41, 49):
        assert sum(chi_W_components(D)) == chi_W(D)
    with pytest.raises(ValueError):
        chi_W_components(9)
    with pytest.raises(ValueError):
        chi_W_components(12)


def test_chi_p_and_q():
    assert chi_P(4) == Fraction(-1, 6)
    assert chi_P(17) == Fraction(-5, 3)
    assert chi_P(25) == Fraction(-19, 6)
    assert chi_Q(4) == Fraction(-1, 6)
    assert chi_Q(17) == Fraction(-10, 3)
    for D in (5, 8, 12, 17, 25, 36, 45):
        assert chi_Q(D) == 2 * chi_P(D)


def test_chi_s():
    assert chi_S(4) == Fraction(-1, 2)
    assert chi_S(9) == Fraction(-2, 3)
    assert chi_S(25) == -2
    with pytest.raises(ValueError):
        chi_S(5)  # square discriminants only


def test_psi():
    assert psi(1) == Fraction(-1, 6)
    assert psi(2) == Fraction(-1, 2)
    assert psi(3) == Fraction(-2, 3)
    assert psi(4) == -1
    assert psi(6) == Fraction(-2)


def test_rm_prototypes():
    assert rm_prototypes(12) == [(-2, 1, 2), (0, 1, 3), (2, 1, 2)]
    for e, l, m in rm_prototypes(300):
        assert e * e + 4 * l * l * m == 300
    assert chi_Q_via_rm_prototypes(12) == Fraction(-5, 3)


def test_rm_route_agrees():
    for D in [D for D in range(5, 200) if D % 4 in (0, 1)]:
        assert chi_Q(D) == chi_Q_via_rm_prototypes(D), D


def test_num_components():
    assert num_components(9) == 1
    assert num_components(12) == 1
    assert num_components(17) == 2
    assert num_components(25) == 2
    assert num_components(33) == 2


def test_one_cylinder_cusps():
    assert one_cylinder_cusps(4) == (1, None, None)
    assert one_cylinder_cusps(5) == (2, 1, 1)
    assert one_cylinder_cusps(7) == (5, 2, 3)
    with pytest.raises(ValueError):
        one_cylinder_cusps(3)
    with pytest.raises(ValueError):
        one_cylinder_cusps(2)


def test_one_cylinder_spin_split_is_consistent():
    for d in range(4, 31):
        total, s0, s1 = one_cylinder_cusps(d)
        assert total >= 0
        if d % 2 == 1:
            assert s0 >= 0 and s1 >= 0
            assert s0 + s1 == total
        else:
            assert s0 is None and s1 is None


def test_lyapunov_lambda2():
    assert lyapunov_lambda2("double_zero") == Fraction(1, 3)
    assert lyapunov_lambda2("two_simple_zeros") == Fraction(1, 2)
    with pytest.raises(ValueError):
        lyapunov_lambda2("minimal")


def test_consistency_chain_passes():
    for D in (5, 8, 9, 12, 16, 17, 25, 45, 49, 100):
        for check in consistency_chain(D):
            assert check.ok, (D, check.name, check.lhs, check.rhs)


def test_consistency_chain_names():
    names = {c.name for c in consistency_chain(17)}
    assert "euler_ratio" in names
    assert "component_sum" in names
    assert "cusp_counts" in names


def test_euler_report_nonsquare():
    r = euler_report(45)
    assert r.chi_x == 2
    assert r.chi_w == -9
    assert r.chi_w_components is None
    assert r.cusps_one_cylinder == 0
    assert r.components == 1
    j = r.to_json()
    assert j["chi_W0"] is None
    assert j["h2"] == "-62/5"
    assert j["cusps_two_cyl"] == 8


def test_euler_report_split_square():
    r = euler_report(25)
    assert r.components == 2
    assert r.cusps_one_cylinder == 2
    assert r.cusps_one_cylinder_spin == (1, 1)
    assert r.chi_w_components == (-3, Fraction(-3, 2))


def test_euler_report_d9_one_cylinder_is_undefined():
    r = euler_report(9)
    assert r.cusps_one_cylinder is None
    assert r.to_json()["cusps_one_cyl"] is None


def test_euler_report_tiny():
    assert euler_report(4).cusps_one_cylinder == 0
    assert euler_report(1).chi_x == Fraction(1, 36)


def test_h_table():
    rows = h_table(0, 16)
    assert rows[0] == (0, Fraction(-1, 120))
    assert (5, Fraction(-2, 5)) in rows
    assert [D for D, _ in rows] == [0, 1, 4, 5, 8, 9, 12, 13, 16]
