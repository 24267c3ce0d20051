import itertools

import pytest
from hypothesis import given, strategies as st

from parkingfn.parking import (
    Failure,
    Outcome,
    PrefVector,
    descents,
    is_parking_function,
    is_prime,
    is_rk_parking,
    is_u_parking,
    is_unit_interval,
    outcome_des_rlm,
    park_deterministic,
    right_to_left_maxima,
    rk_vector,
    rotation_parking_count,
    rotations_fixing,
    stats,
    stats_from,
)


def vectors(max_n=6):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.integers(1, n), min_size=n, max_size=n).map(tuple)
    )


def test_park_small_examples():
    assert park_deterministic(PrefVector.of((1, 1))) == Outcome((1, 2), 2)
    assert park_deterministic(PrefVector.of((2, 2))) == Failure(2)
    assert park_deterministic(PrefVector.of((3, 1, 1))) == Outcome((3, 1, 2), 3)


def test_preferences_must_fit_street():
    with pytest.raises(ValueError):
        PrefVector.of((0, 1))
    with pytest.raises(ValueError):
        PrefVector((3,), 2)


@given(vectors())
def test_membership_agrees_with_protocol(prefs):
    parked = isinstance(park_deterministic(PrefVector.of(prefs)), Outcome)
    assert parked == is_parking_function(prefs)


@given(vectors())
def test_displacement_is_sum_over_cars(prefs):
    out = park_deterministic(PrefVector.of(prefs))
    if isinstance(out, Outcome):
        rec = stats(PrefVector.of(prefs), out)
        assert rec.dis == sum(rec.per_car_displacement)
        assert rec.unl + rec.lucky == len(prefs)
        assert rec.unl == sum(1 for d in rec.per_car_displacement if d)


def test_record_on_a_known_vector():
    # cars 1,2,3 prefer 1,1,2 and end in spots 1,2,3
    rec = stats_from((1, 1, 2), (1, 2, 3), 3)
    assert (rec.unl, rec.lucky, rec.dis) == (2, 1, 2)
    assert (rec.rep, rec.lel, rec.one, rec.nlel) == (1, 2, 2, 2)
    assert (rec.des, rec.rlm) == (0, 1)


def test_word_statistics():
    assert descents((3, 1, 2)) == 1
    assert right_to_left_maxima((3, 1, 2)) == 2
    assert right_to_left_maxima(()) == 0


def test_des_rlm_split_over_runs():
    # spot 2 empty: runs {1} and {3}; each run is a single car
    assert outcome_des_rlm((3, 1), 3) == (0, 2)
    # full street: inverse word of (2, 1) is (2, 1)
    assert outcome_des_rlm((2, 1), 2) == (1, 2)


def test_family_sizes():
    def count(n, pred):
        return sum(1 for v in itertools.product(range(1, n + 1), repeat=n) if pred(v))

    assert [count(n, is_parking_function) for n in range(1, 5)] == [1, 3, 16, 125]
    assert [count(n, is_prime) for n in range(2, 6)] == [1, 4, 27, 256]
    assert [count(n, is_unit_interval) for n in range(1, 6)] == [1, 3, 13, 75, 541]


def test_u_parking():
    assert rk_vector(3, 2, 1) == (1, 3, 5)
    assert is_rk_parking((5, 1, 2), 2, 1)
    assert not is_rk_parking((2, 2, 2), 2, 1)
    assert not is_u_parking((2, 2), (1, 3))
    with pytest.raises(ValueError):
        is_u_parking((1, 1), (2, 2))
    with pytest.raises(ValueError):
        is_u_parking((1,), (1, 2))


@given(vectors(5))
def test_pf_is_u_parking_with_identity_vector(prefs):
    assert is_parking_function(prefs) == is_u_parking(prefs, tuple(range(1, len(prefs) + 1)))


def test_rotations_cycle_the_free_entries():
    # entries other than 1 cycle through (2, 3, 4)
    rots = list(rotations_fixing((1, 2, 4), 1))
    assert rots == [(1, 2, 4), (1, 3, 2), (1, 4, 3)]


@given(vectors(5))
def test_rotation_count(prefs):
    if not is_parking_function(prefs):
        return
    n = len(prefs)
    for k in range(1, n + 1):
        if not set(range(1, k + 1)) <= set(prefs):
            break
        s = sum(1 for a in prefs if a <= k)
        if s < n:
            assert rotation_parking_count(prefs, k) == s - k + 1
