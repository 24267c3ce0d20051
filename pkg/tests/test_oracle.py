import itertools
from collections import Counter

import pytest

from parkingfn import oracle
from parkingfn.exactalg import Polynomial, from_counts, p
from parkingfn.oracle import (
    PF,
    PFU,
    PFmn,
    PPF,
    RK,
    UPF,
    DomainTooLarge,
    count_by,
    count_by_prob,
    gf_over,
    gf_over_prob,
    size,
    tree_gf,
    weighted_gf,
)
from parkingfn.parking import stats_from
from parkingfn.probabilistic import branch_weight, iter_branches

PQRS = [("x", "unl"), ("y", "dis"), ("z", "des"), ("w", "rlm")]


def test_frozen_small_enumerators():
    assert gf_over(PF(2), PQRS).to_text() == "x*y*w + z*w^2 + w"
    assert gf_over(PF(3), PQRS).to_text() == (
        "x^2*y^3*w + x^2*y^2*w + x*y^2*z*w + 3*x*y*z*w^2 + z^2*w^3 + x*y^2*w"
        " + x*y*z*w + 2*x*y*w + 3*z*w^2 + z*w + w"
    )
    assert gf_over_prob(PF(2), PQRS).to_text() == "-x*y*z*w^2*p + x*y*z*w^2 + x*y*w*p + z*w^2 + w"


def test_empty_family():
    assert gf_over(PF(0), PQRS) == Polynomial.const(1)
    assert size(PFmn(0, 3)) == 1


@pytest.mark.parametrize("n,want", [(1, 1), (2, 3), (3, 16), (4, 125), (5, 1296)])
def test_pf_sizes(n, want):
    assert size(PF(n)) == want


def test_other_family_sizes():
    assert [size(PPF(n)) for n in range(2, 6)] == [1, 4, 27, 256]
    assert [size(UPF(n)) for n in range(1, 6)] == [1, 3, 13, 75, 541]
    assert size(PFmn(2, 4)) == 3 * 5
    assert size(RK(3, 2, 1)) == 1 * 7 ** 2
    assert size(PFU((1, 3, 5))) == size(RK(3, 2, 1))


def _branch_oracle(domain, weights):
    """Per-vector branch expansion, independent of the shared-prefix walk."""
    spec = oracle._weight_spec(weights)
    acc = Counter()
    for prefs in itertools.product(range(1, domain.base + 1), repeat=domain.length):
        for flips, occ, _ in iter_branches(prefs, domain.spots):
            if occ is None or not domain.accepts_outcome(occ):
                continue
            h = sum(1 for _, f in flips if f == "H")
            acc[(oracle._exps(spec, prefs, stats_from(prefs, occ, domain.spots)), h, len(flips) - h)] += 1
    out = Polynomial.const(0)
    for (e, h, t), c in acc.items():
        out = out + branch_weight(h, t) * from_counts({e: c})
    return out


@pytest.mark.parametrize("domain", [PF(3), PF(4), PFmn(2, 4), RK(3, 1, 2), PFU((2, 3, 5))])
def test_walk_matches_per_vector_expansion(domain):
    weights = PQRS + [("q", "rep")]
    assert gf_over_prob(domain, weights) == _branch_oracle(domain, weights)


def test_deterministic_is_probabilistic_at_p_one():
    for dom in (PF(4), PFmn(3, 5), RK(3, 2, 2)):
        assert gf_over_prob(dom, PQRS).subst({"p": 1}) == gf_over(dom, PQRS)


def test_per_car_statistics():
    table = count_by(PF(3), ("disp3",))
    assert table == {(0,): 8, (1,): 5, (2,): 3}
    table = count_by(PF(3), ("unl2", "a1"))
    assert sum(table.values()) == 16
    assert table[(1, 1)] == 3  # a1 = 1 and car 2 unlucky: (1,1,x)


def test_count_by_prob_masses():
    # (1,1) parks on heads, (2,2) on tails: the unlucky mass is p + (1 - p)
    table = count_by_prob(PF(2), ("unl",))
    assert table[(0,)] == Polynomial.const(2)
    assert table[(1,)] == Polynomial.const(1)
    by_car = count_by_prob(PF(2), ("a1", "unl"))
    assert by_car[(1, 1)] == p


def test_weighted_gf_event():
    everything = weighted_gf(PF(3), [("x", "unl")])
    only_first_at_one = weighted_gf(PF(3), [("x", "unl")], event=lambda prefs, occ: occ[0] == 1)
    assert everything == gf_over_prob(PF(3), [("x", "unl")])
    assert only_first_at_one != everything


def test_guard():
    with pytest.raises(DomainTooLarge):
        count_by(PF(9), (), guard=1000)


def test_unknown_variable():
    with pytest.raises(ValueError):
        gf_over(PF(2), [("v", "unl")])


def test_tree_sum():
    assert tree_gf(2, [("x", "nld"), ("y", "deg0")]).to_text() == "x*y + y^2 + y"


def test_parallel_merge_is_deterministic(monkeypatch):
    serial = count_by(PF(4), ("unl", "dis"), workers=1)
    monkeypatch.setattr(oracle, "PARALLEL_THRESHOLD", 0)
    parallel = count_by(PF(4), ("unl", "dis"), workers=2)
    assert parallel == serial
    assert list(parallel) == list(serial)
    assert gf_over_prob(PF(3), PQRS, workers=2) == gf_over_prob(PF(3), PQRS, workers=1)
