import pytest
from hypothesis import given, strategies as st

from parkingfn.exactalg import Polynomial
from parkingfn.oracle import PF, PFU, PFmn, UPF, gf_over, gf_over_prob, tree_gf
from parkingfn.recurrences import (
    P_mn_rec,
    P_rec,
    Pp_mn_rec,
    Pp_rec,
    Pp_xy_rec,
    Q_rec,
    binom,
    compositions,
    kreweras_dis,
    multinomial,
    pair_rec_lel,
    pair_rec_one,
    u_rec_A,
    u_rec_B,
    u_rec_C,
    upf_rec,
)

PQRS = [("x", "unl"), ("y", "dis"), ("z", "des"), ("w", "rlm")]


def test_helpers():
    assert binom(3, 5) == 0 and binom(-1, 0) == 0 and binom(4, 2) == 6
    assert sorted(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert list(compositions(1, 0)) == []
    assert multinomial((1, 2, 1)) == 12


def test_frozen_values():
    assert P_rec(2).to_text() == "x*y*w + z*w^2 + w"
    assert kreweras_dis(3).to_text() == "q^3 + 3*q^2 + 6*q + 6"
    assert upf_rec(4).to_text() == "y^3 + 14*y^2 + 36*y + 24"
    assert u_rec_A((2, 3)).to_text() == "2*x + 6"
    assert u_rec_B((2, 3)).to_text() == "y^2 + 4*y + 3"
    assert u_rec_C((2, 3)).to_text() == "2*z^2 + 6*z"


@pytest.mark.parametrize("n", range(0, 5))
def test_four_statistics_against_oracle_and_trees(n):
    assert P_rec(n) == Q_rec(n) == gf_over(PF(n), PQRS)
    assert P_rec(n) == tree_gf(n, [("x", "nld"), ("y", "inv"), ("z", "lev1"), ("w", "deg0")])


@pytest.mark.parametrize("n", range(0, 4))
def test_probabilistic_recurrence(n):
    assert Pp_rec(n) == gf_over_prob(PF(n), PQRS)
    assert Pp_rec(n).subst({"z": 1, "w": 1}) == Pp_xy_rec(n)


@pytest.mark.parametrize("m,n", [(0, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5)])
def test_segment_decomposition(m, n):
    assert P_mn_rec(m, n) == gf_over(PFmn(m, n), PQRS)
    if n <= 4:
        assert Pp_mn_rec(m, n) == gf_over_prob(PFmn(m, n), PQRS)


def test_segment_bounds():
    with pytest.raises(ValueError):
        P_mn_rec(3, 2)


@pytest.mark.parametrize("n", range(0, 6))
def test_displacement_and_pairs(n):
    assert kreweras_dis(n) == gf_over(PF(n), [("q", "dis")])
    assert pair_rec_lel(n) == gf_over(PF(n), [("x", "unl"), ("y", "lel")])
    assert pair_rec_one(n) == gf_over(PF(n), [("x", "unl"), ("y", "one")])


@pytest.mark.parametrize("n", range(1, 6))
def test_unit_interval(n):
    assert upf_rec(n) == gf_over(UPF(n), [("y", "unl")])


u_vectors = st.lists(st.integers(1, 7), min_size=1, max_size=4, unique=True).map(lambda v: tuple(sorted(v)))


@given(u_vectors)
def test_u_parking_recurrences(u):
    dom = PFU(u)
    assert u_rec_A(u) == gf_over(dom, [("x", "unl")])
    assert u_rec_B(u) == gf_over(dom, [("y", "one")])
    assert u_rec_C(u) == gf_over(dom, [("z", "lel")])


@given(u_vectors)
def test_u_parking_totals_agree(u):
    total = u_rec_A(u).subst({"x": 1})
    assert total == u_rec_B(u).subst({"y": 1}) == u_rec_C(u).subst({"z": 1})


def test_u_must_increase():
    with pytest.raises(ValueError):
        u_rec_A((2, 2))
    with pytest.raises(ValueError):
        u_rec_B((0, 1))
    assert u_rec_C(()) == Polynomial.const(1)
