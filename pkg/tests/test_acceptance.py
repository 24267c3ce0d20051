"""One test per acceptance criterion, each reporting a single PASS/FAIL line."""

import time

from parkingfn import closed_forms as cf
from parkingfn import verify


def _failures(results):
    return [f"{r.name}: {c.label}" for r in results for c in r.checks if not c.ok]


def _detail(results, extra=""):
    bad = _failures(results)
    total = sum(len(r.checks) for r in results)
    text = f"{total - len(bad)}/{total} checks"
    if bad:
        text += "; first failure " + bad[0]
    return text + (f"; {extra}" if extra else "")


def test_criterion_01_counting(criterion):
    start = time.perf_counter()
    res = [verify.suite_counts(7)]
    pf7 = next(c for c in res[0].checks if c.label == "|PF(7)|")
    took = time.perf_counter() - start
    ok = res[0].passed and pf7.detail == str(8 ** 6)
    assert criterion(1, "family sizes, first-car and equal-prefix counts", ok, _detail(res, f"{took:.1f}s"))


def test_criterion_02_four_statistics_and_trees(criterion):
    res = [verify.suite_tree_correspondence(5)]
    assert criterion(2, "P_rec = Q_rec = PF oracle = tree sum, n <= 5", res[0].passed, _detail(res))


def test_criterion_03_probabilistic_recurrence(criterion):
    res = [verify.suite_prob_recurrence(4), verify.suite_p_cancellation(6)]
    ok = all(r.passed for r in res)
    assert criterion(3, "probabilistic recurrence, p cancellation, worked examples", ok, _detail(res))


def test_criterion_04_rk_product_formulas(criterion):
    res = [
        verify.suite_rk_unl_rep(),
        verify.suite_rk_unl_lel(),
        verify.suite_rk_second_car(),
        verify.suite_rk_same_as(),
    ]
    counter = verify.suite_counterexamples()
    third = [c for c in counter.checks if "car s >= 3" in c.label]
    grid = verify.rk_grid()
    ok = all(r.passed for r in res) and all(c.ok for c in third)
    assert criterion(4, "(r,k)-parking product formulas on the full grid, s >= 3 fails at m = 3", ok,
                     _detail(res, f"{len(grid)} (m,r,k) triples; {third[0].detail}"))


def test_criterion_05_leading_ones_contrast(criterion):
    res = [
        verify.suite_master(6),
        verify.suite_correspondence(6),
        verify.suite_contrast(6),
        verify.suite_master_counts(6),
        verify.suite_contrast_counts(6),
        verify.suite_ones(6),
        verify.suite_pairs(6),
        verify.suite_rotation(5),
    ]
    counter = verify.suite_counterexamples()
    trees = [c for c in counter.checks if "trees" in c.label]
    ok = all(r.passed for r in res) and len(trees) == 2 and all(c.ok for c in trees)
    assert criterion(5, "master, correspondence, contrast, count tables, tree counterexamples", ok,
                     _detail(res + [counter]))


def test_criterion_06_prime_unit_interval_u(criterion):
    res = [
        verify.suite_ppf(6),
        verify.suite_ppf_leading_one(6),
        verify.suite_upf(6),
        verify.suite_upf_egf(6),
        verify.suite_u_parking(),
    ]
    assert criterion(6, "prime, unit-interval and u-parking formulas", all(r.passed for r in res), _detail(res))


def test_criterion_07_displacement_law(criterion):
    res = [verify.suite_displacement(6)]
    assert criterion(7, "per-car displacement law and unlucky probability", res[0].passed, _detail(res))


def test_criterion_08_limit_laws(criterion):
    res = [verify.suite_limits(200)]
    worst = "; ".join(f"{c.label}={c.detail}" for c in res[0].checks if c.detail)
    assert criterion(8, "Poisson and normal distances shrink and meet thresholds at m = 200", res[0].passed,
                     _detail(res, worst))


def test_criterion_09_table(criterion):
    res = [verify.suite_table1()]
    assert criterion(9, "16-row tree/parking-function table", res[0].passed, _detail(res))


def test_criterion_10_series(criterion):
    log_ok = cf.verify_dis_log_egf(5)
    fub_ok = cf.verify_fubini_egf(6)
    assert criterion(10, "displacement log-EGF to order 5, Fubini EGF to order 6", log_ok and fub_ok,
                     f"log-EGF {log_ok}, Fubini {fub_ok}")
