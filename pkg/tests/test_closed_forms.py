import pytest

from parkingfn import closed_forms as cf
from parkingfn.exactalg import Polynomial, q, x, y
from parkingfn.oracle import PF, PPF, RK, count_by, gf_over, gf_over_prob

UR = [("x", "unl"), ("y", "rep")]


def test_frozen_values():
    assert cf.lucky_gf(3).to_text() == "6*q^3 + 8*q^2 + 2*q"
    assert cf.master_gf(3).to_text() == "x^3*y^3*z^2 + x^2*y^2*z^2 + 3*x^2*y^2*z + 2*x^2*y*z + 2*x*y^2*z + x*y*z + 6*x*y"
    assert cf.contrast_gf(3).to_text() == "x^3*y^3*z^2 + x^2*y^2*z^2 + 2*x^2*y^2*z + 3*x^2*y*z + 3*x*y^2*z + 6*x*y"
    assert cf.ppf_lel_one_gf(3).to_text() == "x^3*y^3 + 2*x^2*y^2 + x*y^2"
    assert cf.ppf_unl_rep_gf(3).to_text() == "x^2*y^2 + x^2*y + x*y + x"


@pytest.mark.parametrize("m,r,k", [(1, 1, 1), (2, 1, 1), (2, 2, 3), (3, 1, 2), (3, 2, 1), (4, 1, 1)])
def test_rk_formulas_weighted_by_probability(m, r, k):
    assert gf_over_prob(RK(m, r, k), UR) == cf.rk_unl_rep_gf(m, r, k)
    assert gf_over_prob(RK(m, r, k), [("x", "unl"), ("y", "lel")]) == cf.rk_unl_lel_gf(m, r, k)
    for s in range(1, m + 1):
        assert gf_over_prob(RK(m, r, k), [("y", f"eq{s}")]) == cf.rk_same_as_gf(m, r, k)


def test_rk_base_cases():
    assert cf.rk_unl_lel_gf(1, 3, 2) == 2 * y
    assert cf.rk_unl_lel_gf(2, 1, 1) == y * (x * y + 2)


def test_third_car_breaks_the_pattern():
    got = gf_over_prob(RK(3, 1, 1), [("x", "unl"), ("y", "eq3")])
    assert got.to_text() == "x^2*y^3 + x^2*y + 6*x*y^2 + 2*x*y + 6*y"
    assert got != cf.rk_unl_lel_gf(3, 1, 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_specialisations(n):
    assert cf.rep_gf(n) == cf.rk_unl_rep_gf(n, 1, 1).subst({"x": 1, "y": q})
    assert cf.lucky_gf(n) == gf_over(PF(n), [("q", "lucky")])
    assert cf.unl_gf(n) == gf_over(PF(n), [("x", "unl")])
    assert cf.ones_gf(n) == gf_over(PF(n), [("y", "one")])
    for m in range(1, n + 1):
        assert cf.gessel_seo_unl(m, n) == cf.rk_unl_rep_gf(m, 1, n - m + 1).subst({"y": 1})


@pytest.mark.parametrize("n", range(2, 6))
def test_three_statistic_formulas(n):
    assert cf.master_gf(n) == gf_over(PF(n), [("x", "lel"), ("y", "one"), ("z", "unl")])
    assert cf.correspondence_gf(n) == gf_over(PF(n), [("x", "nlel"), ("y", "one"), ("z", "unl")])
    assert cf.contrast_gf(n) == gf_over(PF(n), [("x", "lel"), ("y", "nlel"), ("z", "unl")])


def test_three_statistic_formulas_need_two_cars():
    with pytest.raises(ValueError):
        cf.master_gf(1)
    with pytest.raises(ValueError):
        cf.contrast_gf(1)


@pytest.mark.parametrize("n", range(2, 6))
def test_count_tables(n):
    lo = count_by(PF(n), ("lel", "one"))
    ln = count_by(PF(n), ("lel", "nlel"))
    for s in range(n):
        for t in range(n):
            assert lo.get((s + 1, t + 1), 0) == cf.master_counts(n, s, t)
            assert ln.get((s + 1, t + 1), 0) == cf.contrast_counts(n, s, t)


def test_count_table_n4_by_hand():
    # off the diagonal only the multinomial term survives
    assert cf.master_counts(4, 1, 0) == 2 * 3 ** 2
    assert cf.master_counts(4, -1, 0) == 0


@pytest.mark.parametrize("n", range(2, 6))
def test_prime_formulas(n):
    assert cf.ppf_unl_rep_gf(n) == gf_over(PPF(n), UR)
    assert cf.ppf_unl_lel_gf(n) == gf_over(PPF(n), [("x", "unl"), ("y", "lel")])
    assert cf.ppf_same_as_gf(n) == gf_over(PPF(n), [("y", f"eq{n}")])
    assert cf.ppf_lel_one_gf(n) == gf_over(PPF(n), [("x", "lel"), ("y", "one")])
    assert cf.ppf_one_gf(n) == gf_over(PPF(n), [("y", "one")])


def test_unit_interval_closed_form():
    assert cf.upf_closed(3) == y ** 2 + 6 * y + 6
    assert [cf.upf_closed(n).subst({"y": 1}) for n in range(1, 6)] == [
        Polynomial.const(v) for v in (1, 3, 13, 75, 541)
    ]
    assert cf.stirling2(5, 2) == 15


@pytest.mark.parametrize("order", [0, 1, 3, 6])
def test_unit_interval_egf(order):
    assert cf.verify_upf_egf(order)


@pytest.mark.parametrize("order", range(0, 7))
def test_displacement_log_egf(order):
    assert cf.verify_dis_log_egf(order)


def test_log_egf_with_unshifted_index_fails_at_second_order():
    # indexing the displacement enumerator by n instead of n-1 breaks at t^2
    assert cf.verify_dis_log_egf(1, shift=0)
    assert not cf.verify_dis_log_egf(2, shift=0)
    lhs, rhs = cf.dis_log_egf_sides(2, shift=0)
    assert lhs.egf_coefficients()[2] == q ** 2 + q - 2
    assert rhs.egf_coefficients()[2] == q - 1
